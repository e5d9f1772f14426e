"""Explicit words, maps and the relabelling action, for brute-force checks.

A word is a tuple of letters ``0..n-1``; a map ``f`` (an element of Omega)
is a tuple of ``n`` words with ``f[d]`` the image of letter ``d``; a
permutation ``g`` is the tuple ``(g(0), ..., g(n-1))``.

Nothing in this module uses the counting formulas: orbits and fixed points
are found by applying the action to explicit maps.
"""
from __future__ import annotations

import os
from itertools import permutations, product
from math import factorial, lcm
from typing import Iterator, List, Tuple

import numpy as np

from .burnside import Variant, as_variant, total_maps
from .errors import BudgetExceeded, DomainError

Word = Tuple[int, ...]
MapTable = Tuple[Word, ...]
Permutation = Tuple[int, ...]

DEFAULT_BUDGET = 20_000_000
_CHUNK = 1 << 18


def default_budget() -> int:
    raw = os.environ.get("ENDOCOUNT_ORACLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"ENDOCOUNT_ORACLE_BUDGET must be an integer, got {raw!r}") from None
    if value < 0:
        raise DomainError("ENDOCOUNT_ORACLE_BUDGET must be nonnegative")
    return value


def _budget(budget):
    return default_budget() if budget is None else budget


# -- words and permutations ---------------------------------------------------

def word(text: str, alphabet: str = "abcdefghijklmnopqrstuvwxyz") -> Word:
    """``word("aba") == (0, 1, 0)``."""
    return tuple(alphabet.index(ch) for ch in text)


def word_str(w: Word, alphabet: str = "abcdefghijklmnopqrstuvwxyz") -> str:
    return "".join(alphabet[d] for d in w) or "ε"


def apply_endomorphism(f: MapTable, w: Word) -> Word:
    """Extend ``f`` letterwise: phi_f(d1...dk) = f(d1)...f(dk)."""
    out: List[int] = []
    for d in w:
        if not 0 <= d < len(f):
            raise DomainError(f"letter {d} outside alphabet of size {len(f)}")
        out.extend(f[d])
    return tuple(out)


def is_permutation(g) -> bool:
    return sorted(g) == list(range(len(g)))


def _check_perm(g, n=None):
    if not is_permutation(g):
        raise DomainError(f"not a permutation of 0..{len(g) - 1}: {g}")
    if n is not None and len(g) != n:
        raise DomainError(f"permutation on {len(g)} letters used with alphabet of size {n}")


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(g: Permutation, h: Permutation) -> Permutation:
    """``(g o h)(d) = g(h(d))``."""
    return tuple(g[d] for d in h)


def inverse(g: Permutation) -> Permutation:
    inv = [0] * len(g)
    for d, gd in enumerate(g):
        inv[gd] = d
    return tuple(inv)


def cycles(g: Permutation) -> List[Tuple[int, ...]]:
    """Disjoint cycles of ``g``, each starting at its smallest letter."""
    seen = set()
    out = []
    for start in range(len(g)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        d = g[start]
        while d != start:
            cyc.append(d)
            seen.add(d)
            d = g[d]
        out.append(tuple(cyc))
    return out


def cycle_type(g: Permutation) -> Tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(g)))


def order(g: Permutation) -> int:
    return lcm(*(len(c) for c in cycles(g)))


def relabel(g: Permutation, w: Word) -> Word:
    """phi_g applied to a word: every letter is renamed by ``g``."""
    return tuple(g[d] for d in w)


def act(g: Permutation, f: MapTable) -> MapTable:
    """The relabelling action g.f = phi_g o f o g^-1."""
    _check_perm(g, len(f))
    out: List[Word] = [()] * len(f)
    for d, image in enumerate(f):
        out[g[d]] = relabel(g, image)
    return tuple(out)


def is_fixed(g: Permutation, f: MapTable) -> bool:
    """True iff f o g = phi_g o f on every generator."""
    return all(f[g[d]] == relabel(g, f[d]) for d in range(len(f)))


# -- enumeration ----------------------------------------------------------------

def words(n: int, m: int, variant) -> List[Word]:
    """Admissible images, ordered by length then lexicographically."""
    variant = as_variant(variant)
    return [w for k in variant.lengths(m) for w in product(range(n), repeat=k)]


def is_admissible(f: MapTable, m: int, variant) -> bool:
    lengths = as_variant(variant).lengths(m)
    return all(len(w) in lengths and all(0 <= d < len(f) for d in w) for w in f)


def enumerate_maps(n: int, m: int, variant, budget=None) -> Iterator[MapTable]:
    """Every map D -> R exactly once, in lexicographic order of images."""
    size = total_maps(n, m, variant)
    budget = _budget(budget)
    if size > budget:
        raise BudgetExceeded(f"enumerating all {size} maps for (n={n}, m={m}, {variant})",
                             size, budget)
    return product(words(n, m, variant), repeat=n)


def _map_sort_key(f: MapTable):
    return tuple((len(w), w) for w in f)


def canonical_form(f: MapTable) -> MapTable:
    """Smallest image of ``f`` under all relabellings."""
    return min((act(g, f) for g in permutations(range(len(f)))), key=_map_sort_key)


def orbits(n: int, m: int, variant, budget=None) -> List[List[MapTable]]:
    """Orbits of the relabelling action, listed explicitly (small cases only).

    Orbits are sorted by their canonical representative, which comes first.
    """
    size = total_maps(n, m, variant) * factorial(n)
    budget = _budget(budget)
    if size > budget:
        raise BudgetExceeded(f"listing orbits for (n={n}, m={m}, {variant})", size, budget)
    groups = {}
    for f in enumerate_maps(n, m, variant, budget):
        groups.setdefault(canonical_form(f), []).append(f)
    ordered = sorted(groups.items(), key=lambda kv: _map_sort_key(kv[0]))
    return [sorted(members, key=_map_sort_key) for _, members in ordered]


def orbit_count_oracle(n: int, m: int, variant="semigroup", budget=None) -> int:
    """Count orbits by canonical forms over an explicit enumeration of Omega.

    Maps are encoded as mixed-radix integers whose digit order agrees with
    the map order, so a map is a canonical representative iff no relabelling
    produces a smaller code.  Work is bounded by ``|Omega| * n!``.
    """
    variant = as_variant(variant)
    size = total_maps(n, m, variant)
    work = size * factorial(n)
    budget = _budget(budget)
    if work > budget:
        raise BudgetExceeded(f"orbit enumeration for (n={n}, m={m}, {variant}), "
                             f"|Omega|={size} times {n}! relabellings", work, budget)
    alphabet = words(n, m, variant)
    r = len(alphabet)
    if r**n >= 2**62:
        raise BudgetExceeded("map codes exceed 62 bits", r**n, 2**62)
    index = {w: i for i, w in enumerate(alphabet)}
    group = list(permutations(range(n)))
    tables = [np.array([index[relabel(g, w)] for w in alphabet], dtype=np.int64)
              for g in group]
    weights = np.array([r ** (n - 1 - d) for d in range(n)], dtype=np.int64)

    canonical = 0
    for start in range(0, size, _CHUNK):
        codes = np.arange(start, min(size, start + _CHUNK), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % r
        is_min = np.ones(len(codes), dtype=bool)
        moved = np.empty_like(digits)
        for g, table in zip(group, tables):
            moved[:, list(g)] = table[digits]
            is_min &= codes <= moved @ weights
        canonical += int(is_min.sum())
    return canonical


def fixed_points_exhaustive(g: Permutation, m: int, variant, budget=None) -> int:
    """Scan all of Omega and count the maps fixed by ``g``."""
    _check_perm(g)
    return sum(1 for f in enumerate_maps(len(g), m, variant, budget) if is_fixed(g, f))


def fixed_points_oracle(g: Permutation, m: int, variant="semigroup", budget=None) -> int:
    """Count maps fixed by ``g`` by checking f o g = phi_g o f letter by letter.

    The constraints only link ``f(d)`` with ``f(g(d))``, so they split along
    the cycles of ``g``.  On each cycle every admissible image of the first
    letter is tried, the forced images of the remaining letters are
    propagated, and the closing constraint is checked explicitly.  The
    count is the product over cycles; work is ``|R| * n`` relabellings.
    """
    _check_perm(g)
    n = len(g)
    alphabet = words(n, m, variant)
    work = len(alphabet) * n
    budget = _budget(budget)
    if work > budget:
        raise BudgetExceeded(f"fixed-point search for {g}", work, budget)
    lengths = as_variant(variant).lengths(m)
    count = 1
    for cyc in cycles(g):
        solutions = 0
        for w in alphabet:
            f = {cyc[0]: w}
            for prev, d in zip(cyc, cyc[1:]):
                f[d] = relabel(g, f[prev])
            if all(len(f[d]) in lengths for d in cyc) and f[cyc[0]] == relabel(g, f[cyc[-1]]):
                solutions += 1
        count *= solutions
    return count


def check_cycle_criterion(f: MapTable, g: Permutation) -> Tuple[bool, bool, bool]:
    """Evaluate (fixed, cond1, cond2) for the cycle-representative criterion.

    cond1: f(g^j(d_i)) = phi_g^j(f(d_i)) for j = 1..order(g), where d_i is the
    smallest letter of each cycle.  Since g^order(g) is the identity the
    condition is periodic in j, so this range covers every natural j.
    cond2: each letter of f(d_i) lies in a cycle whose length divides that
    of d_i's cycle.
    """
    _check_perm(g, len(f))
    fixed = is_fixed(g, f)
    cycle_len = {}
    for cyc in cycles(g):
        for d in cyc:
            cycle_len[d] = len(cyc)
    reps = [c[0] for c in cycles(g)]
    ord_g = order(g)

    cond1 = True
    for d in reps:
        point, image = d, f[d]
        for _ in range(ord_g):
            point, image = g[point], relabel(g, image)
            if f[point] != image:
                cond1 = False
    cond2 = all(cycle_len[d] % cycle_len[x] == 0 for d in reps for x in f[d])
    return fixed, cond1, cond2
