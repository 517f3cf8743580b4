"""Second, independent route to multigraded Betti numbers.

The free resolution built on all generator subsets (one basis element per
subset, graded by the subset lcm) computes the same Betti numbers as the
lattice route, but through a completely different complex: fixing a
multidegree, the surviving basis elements are the subsets whose lcm is
exactly that multidegree, and the boundary drops one generator at a time,
keeping only the drops that do not change the lcm.  Homology is taken over
the two-element field with a local elimination; nothing here touches the
lcm-lattice machinery, so agreement of the two routes is a real cross-check.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

from .errors import TooLargeError
from .monomials import Monomial, MonomialIdeal

MAX_TAYLOR_ATOMS = 10


def _rank_mod2(rows: list[frozenset[int]]) -> int:
    reduced: dict[int, set[int]] = {}
    rank = 0
    for row in rows:
        cur = set(row)
        while cur:
            pivot = min(cur)
            if pivot in reduced:
                cur ^= reduced[pivot]
            else:
                reduced[pivot] = cur
                rank += 1
                break
    return rank


def taylor_betti(I: MonomialIdeal) -> dict[tuple[int, Monomial], int]:
    """Nonzero multigraded Betti numbers of the quotient, subset-resolution route."""
    gens = I.generators
    m = len(gens)
    if m > MAX_TAYLOR_ATOMS:
        raise TooLargeError(
            f"{m} generators exceed the subset-resolution cap of {MAX_TAYLOR_ATOMS}"
        )
    exps = [g.exponents for g in gens]
    zero = (0,) * I.ambient

    def subset_lcm(subset: tuple[int, ...]) -> tuple[int, ...]:
        out = zero
        for i in subset:
            out = tuple(map(max, out, exps[i]))
        return out

    by_degree: dict[tuple[int, ...], dict[int, list[tuple[int, ...]]]] = defaultdict(
        lambda: defaultdict(list)
    )
    lcm_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for size in range(m + 1):
        for subset in itertools.combinations(range(m), size):
            deg = subset_lcm(subset)
            lcm_of[subset] = deg
            by_degree[deg][size].append(subset)

    betti: dict[tuple[int, Monomial], int] = {}
    for deg, strata in by_degree.items():
        index = {
            subset: col
            for subsets in strata.values()
            for col, subset in enumerate(subsets)
        }
        ranks: dict[int, int] = {}
        for size, subsets in strata.items():
            rows = []
            for subset in subsets:
                row = set()
                for drop in range(size):
                    smaller = subset[:drop] + subset[drop + 1 :]
                    if lcm_of[smaller] == deg:
                        row.add(index[smaller])
                rows.append(frozenset(row))
            ranks[size] = _rank_mod2(rows)
        for size, subsets in strata.items():
            h = len(subsets) - ranks[size] - ranks.get(size + 1, 0)
            if h:
                betti[(size, Monomial(deg, I.ambient))] = h
    return betti
