"""
Counting endomorphism classes
=============================

How many ways are there to send each letter of an n-letter alphabet to a
word of length at most m, if two such substitutions count as the same
whenever one turns into the other after renaming the letters?
"""
from endocount import (
    build_closed_form,
    class_size,
    count_classes,
    enumerate_partitions,
    fixed_map_count,
    render_closed_form,
)

###############################################################################
# Cycle types and their weights
# -----------------------------
# Renamings are permutations of the alphabet.  Only their cycle type
# matters, so the sum runs over integer partitions of n.

n, m = 4, 2
for part in enumerate_partitions(n):
    print(f"{list(part.parts)!s:14} class size {class_size(part):2}  "
          f"fixed maps {fixed_map_count(part, m, 'semigroup')}")

print("classes:", count_classes(n, m))

###############################################################################
# Three regimes
# -------------
# Image lengths 1..m (semigroup), exactly m (uniform) or 0..m (monoid).

for variant in ("uniform", "semigroup", "monoid"):
    row = [count_classes(n, mm, variant) for mm in range(1, 7)]
    print(f"{variant:9} n={n}:", row)

###############################################################################
# Closed forms in m
# -----------------
# One term per cycle type; every term is a product of geometric sums.

for variant in ("semigroup", "uniform", "monoid"):
    print(variant, "n=3:", render_closed_form(build_closed_form(3, variant)))

###############################################################################
# Exact arithmetic throughout
# ---------------------------

print("n=6, m=6:", count_classes(6, 6))
