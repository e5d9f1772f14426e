"""
Orbits by brute force
=====================

The formula can be checked by building every map explicitly, applying
every renaming, and counting the orbits that appear.
"""
from itertools import permutations

from endocount import act, apply_endomorphism, check_cycle_criterion, count_classes, orbit_count_oracle, orbits
from endocount.oracle import word, word_str

###############################################################################
# Substitutions on words
# ----------------------

f = (word("ab"), word("a"))
print("ababa ->", word_str(apply_endomorphism(f, word("ababa"))))

swap = (1, 0)
g_f = act(swap, f)
print("renamed by a<->b:", {word_str((d,)): word_str(w) for d, w in enumerate(g_f)})

###############################################################################
# The three classes for two letters and m = 1
# -------------------------------------------

for orbit in orbits(2, 1, "semigroup"):
    print(["a->%s b->%s" % (word_str(x), word_str(y)) for x, y in orbit])

###############################################################################
# Orbit counts against the formula
# --------------------------------

for variant in ("semigroup", "uniform", "monoid"):
    for n, m in [(3, 2), (4, 2)]:
        print(variant, n, m, orbit_count_oracle(n, m, variant), count_classes(n, m, variant))

###############################################################################
# Which maps does a renaming fix?
# -------------------------------
# A map is fixed iff the images of one letter per cycle are compatible
# with going around the cycle.

g = (1, 0, 2)
h = (word("ab"), word("ba"), word("c"))
print("fixed, cond1, cond2 =", check_cycle_criterion(h, g))
print("fixed by some renaming:", [p for p in permutations(range(3)) if check_cycle_criterion(h, p)[0]])
