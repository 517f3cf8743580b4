"""Exact desk-scale oracles for depth and Stanley depth, plus the law harness.

Depth is read off multigraded Betti numbers: at every lcm-lattice element m
above the bottom, b_{i,m} of the quotient equals the reduced homology (over
the two-element field) of the order complex of the open interval (1, m), in
dimension i-2.  The projective dimension is the largest i carrying a nonzero
entry and depth is the ambient count minus it.

Stanley depth is computed on the characteristic poset: all exponent vectors
c <= g (g the lcm of the generators), split by membership of x^c in the
ideal.  A partition of one side into boxes [a, b] is scored by the smallest
number of coordinates of any upper corner b that are saturated (b_j = g_j);
Stanley depth is the best score over all partitions, found by a
branch-and-bound search from the largest conceivable score downwards.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import BadParameterError, TooLargeError
from .lattices import LcmLattice, build_lcm_lattice, is_isomorphic
from .monomials import Monomial, MonomialIdeal, spread_ideal
from .smooth import SmoothCertificate, check_smooth_ideal

MAX_DEPTH_ATOMS = 8
MAX_POSET_POINTS = 4096


def _gf2_rank(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead in pivots:
                row ^= pivots[lead]
            else:
                pivots[lead] = row
                rank += 1
                break
    return rank


def order_complex_betti(L: LcmLattice, m: Monomial) -> dict[int, int]:
    """Reduced Betti numbers (over GF(2)) of the open interval (bottom, m).

    The order complex has the elements strictly between the bottom and m as
    vertices and all chains as faces.  Returns {dimension: rank} with zero
    ranks omitted; the empty interval yields {-1: 1}.
    """
    if m == L.bottom:
        raise BadParameterError("open interval below the bottom is undefined")
    L.index(m)
    vertices = sorted(
        (e for e in L.elements if e != L.bottom and e != m and e.divides(m)),
        key=lambda e: (e.degree, e.exponents),
    )
    nv = len(vertices)
    succ = [
        [w for w in range(v + 1, nv) if vertices[v].divides(vertices[w])]
        for v in range(nv)
    ]

    faces: list[list[tuple[int, ...]]] = [[(v,) for v in range(nv)]]
    while faces[-1]:
        nxt = [chain + (w,) for chain in faces[-1] for w in succ[chain[-1]]]
        faces.append(nxt)
    faces.pop()

    betti: dict[int, int] = {}
    if nv == 0:
        betti[-1] = 1
        return betti
    ranks = [1]  # boundary C_0 -> C_{-1}: every vertex hits the empty face
    for k in range(1, len(faces)):
        index = {f: c for c, f in enumerate(faces[k - 1])}
        rows = []
        for f in faces[k]:
            mask = 0
            for drop in range(len(f)):
                mask |= 1 << index[f[:drop] + f[drop + 1 :]]
            rows.append(mask)
        ranks.append(_gf2_rank(rows))
    ranks.append(0)
    for k in range(len(faces)):
        bk = len(faces[k]) - ranks[k] - ranks[k + 1]
        if bk:
            betti[k] = bk
    return betti


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of a quotient, keyed (i, multidegree)."""

    ambient: int
    entries: Mapping[tuple[int, Monomial], int]

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)


@dataclass(frozen=True)
class DepthReport:
    ambient: int
    value: int
    betti: BettiTable


@dataclass(frozen=True)
class SdepthReport:
    ambient: int
    value: int
    bound: tuple[int, ...]
    intervals: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def depth_quotient(I: MonomialIdeal) -> DepthReport:
    """Depth of the quotient ring, via lcm-lattice Betti numbers."""
    if len(I.generators) > MAX_DEPTH_ATOMS:
        raise TooLargeError(
            f"{len(I.generators)} generators exceed the depth cap of {MAX_DEPTH_ATOMS}"
        )
    L = build_lcm_lattice(I)
    entries: dict[tuple[int, Monomial], int] = {(0, L.bottom): 1}
    for e in L.elements:
        if e == L.bottom:
            continue
        for k, v in order_complex_betti(L, e).items():
            entries[(k + 2, e)] = v
    table = BettiTable(ambient=I.ambient, entries=entries)
    return DepthReport(
        ambient=I.ambient,
        value=I.ambient - table.projective_dimension,
        betti=table,
    )


@dataclass(frozen=True)
class CharacteristicPoset:
    """All exponent vectors below the generator lcm, flagged by membership."""

    ambient: int
    bound: tuple[int, ...]
    points: tuple[tuple[int, ...], ...]
    in_ideal: tuple[bool, ...]

    def side(self, ideal_side: bool) -> list[tuple[int, ...]]:
        return [p for p, f in zip(self.points, self.in_ideal) if f == ideal_side]


def build_characteristic_poset(I: MonomialIdeal) -> CharacteristicPoset:
    g = I.lcm_of_generators.exponents
    size = 1
    for gj in g:
        size *= gj + 1
        if size > MAX_POSET_POINTS:
            raise TooLargeError(
                f"characteristic poset exceeds {MAX_POSET_POINTS} points"
            )
    points = tuple(itertools.product(*(range(gj + 1) for gj in g)))
    gens = [u.exponents for u in I.generators]
    flags = tuple(
        any(all(a <= c for a, c in zip(u, p)) for u in gens) for p in points
    )
    return CharacteristicPoset(
        ambient=I.ambient, bound=g, points=points, in_ideal=flags
    )


def _box_partition_value(
    points: list[tuple[int, ...]], g: tuple[int, ...]
) -> tuple[int, tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]]:
    """Best achievable min-score over box partitions of the given point set.

    Branch and bound on a target score k, high to low: repeatedly take the
    lexicographically least uncovered point and try to close it off with a
    box whose upper corner saturates at least k coordinates of g.  Failed
    cover states are memoized as bitmasks.
    """
    n = len(g)
    if not points:
        return n, ()
    npts = len(points)
    index = {p: i for i, p in enumerate(points)}
    rho = [sum(1 for bj, gj in zip(p, g) if bj == gj) for p in points]
    above = [
        [c for c in range(npts) if all(x >= y for x, y in zip(points[c], points[a]))]
        for a in range(npts)
    ]
    start = min(min(n, max(rho[c] for c in above[a])) for a in range(npts))
    full = (1 << npts) - 1

    def box_mask(a: int, c: int) -> int | None:
        lo, hi = points[a], points[c]
        mask = 0
        for q in itertools.product(*(range(x, y + 1) for x, y in zip(lo, hi))):
            i = index.get(q)
            if i is None:
                return None  # box escapes the point set
            mask |= 1 << i
        return mask

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 2 * npts + 200))
    try:
        return _box_search(points, rho, above, start, full, box_mask)
    finally:
        sys.setrecursionlimit(limit)


def _box_search(points, rho, above, start, full, box_mask):
    npts = len(points)
    for k in range(start, -1, -1):
        cand = [[c for c in above[a] if rho[c] >= k] for a in range(npts)]
        if any(not c for c in cand):
            continue
        failed: set[int] = set()

        def search(covered: int) -> list[tuple[int, int]] | None:
            if covered == full:
                return []
            if covered in failed:
                return None
            uncovered = ~covered & full
            a = (uncovered & -uncovered).bit_length() - 1
            for c in reversed(cand[a]):
                mask = box_mask(a, c)
                if mask is None or mask & covered:
                    continue
                rest = search(covered | mask)
                if rest is not None:
                    return [(a, c)] + rest
            failed.add(covered)
            return None

        result = search(0)
        if result is not None:
            boxes = tuple((points[a], points[c]) for a, c in sorted(result))
            return k, boxes
    raise AssertionError("score 0 partition into singletons always exists")


def sdepth_quotient(I: MonomialIdeal) -> SdepthReport:
    """Stanley depth of the quotient ring, by exact partition search."""
    poset = build_characteristic_poset(I)
    value, boxes = _box_partition_value(poset.side(False), poset.bound)
    return SdepthReport(
        ambient=I.ambient, value=value, bound=poset.bound, intervals=boxes
    )


def sdepth_ideal(I: MonomialIdeal) -> SdepthReport:
    """Stanley depth of the ideal itself, by exact partition search."""
    poset = build_characteristic_poset(I)
    value, boxes = _box_partition_value(poset.side(True), poset.bound)
    return SdepthReport(
        ambient=I.ambient, value=value, bound=poset.bound, intervals=boxes
    )


@dataclass(frozen=True)
class LawCheck:
    name: str
    lhs: int
    relation: str
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs if self.relation == "<=" else self.lhs == self.rhs


@dataclass(frozen=True)
class SpreadingLawsReport:
    """All computed invariants of I and its spreads, with per-law verdicts."""

    ambient: int
    deg: int
    t_values: tuple[int, ...]
    source: tuple[int, int, int]  # depth, sdepth of quotient, sdepth of ideal
    spread: Mapping[int, tuple[int, int, int]]
    smooth: bool
    lattice_isomorphic: bool
    checks: tuple[LawCheck, ...] = field(default=())

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def _stats(I: MonomialIdeal, what: str) -> tuple[int, int, int]:
    try:
        return (
            depth_quotient(I).value,
            sdepth_quotient(I).value,
            sdepth_ideal(I).value,
        )
    except TooLargeError as e:
        raise TooLargeError(f"{what}: {e}") from None


def verify_spreading_laws(
    I: MonomialIdeal, t_range: Iterable[int]
) -> SpreadingLawsReport:
    """Compute depth/sdepth across spreads and check every displayed law.

    Checked: the three inequalities comparing the n-spread against the
    source (with equality whenever the two lcm-lattices are isomorphic, in
    particular for smoothly spreadable ideals); the transfer equalities
    linking consecutive spreading steps t >= n; and, for smoothly spreadable
    ideals, the closed-form equalities pinning every spread to the source.
    """
    n, d = I.ambient, I.deg
    ts = sorted(set(t_range) | {n})
    if any(t < n for t in ts):
        raise BadParameterError(f"law harness needs t >= n = {n}, got {ts}")

    source = _stats(I, f"source ideal in T_{n}")
    spread_stats: dict[int, tuple[int, int, int]] = {}
    spreads: dict[int, MonomialIdeal] = {}
    for t in ts:
        spreads[t] = spread_ideal(I, t, pad=True)
        spread_stats[t] = _stats(spreads[t], f"{t}-spread in T_{t * d}")

    smooth = isinstance(check_smooth_ideal(I), SmoothCertificate)
    iso = (
        is_isomorphic(build_lcm_lattice(I), build_lcm_lattice(spreads[n]))
        is not None
    )

    names = ("depth of quotient", "sdepth of quotient", "sdepth of ideal")
    checks: list[LawCheck] = []
    shift = n * (d - 1)
    for pos, name in enumerate(names):
        checks.append(
            LawCheck(
                name=f"{name}: n-spread bound (t={n})",
                lhs=spread_stats[n][pos],
                relation="<=",
                rhs=source[pos] + shift,
            )
        )
    for t1, t2 in zip(ts, ts[1:]):
        for pos, name in enumerate(names):
            checks.append(
                LawCheck(
                    name=f"{name}: transfer t={t1} -> t={t2}",
                    lhs=spread_stats[t2][pos],
                    relation="==",
                    rhs=spread_stats[t1][pos] + (t2 - t1) * d,
                )
            )
    if iso:
        for pos, name in enumerate(names):
            checks.append(
                LawCheck(
                    name=f"{name}: equality from lattice isomorphism (t={n})",
                    lhs=spread_stats[n][pos],
                    relation="==",
                    rhs=source[pos] + shift,
                )
            )
    if smooth:
        for t in ts:
            for pos, name in enumerate(names):
                checks.append(
                    LawCheck(
                        name=f"{name}: smooth closed form (t={t})",
                        lhs=spread_stats[t][pos],
                        relation="==",
                        rhs=source[pos] + t * d - n,
                    )
                )
    return SpreadingLawsReport(
        ambient=n,
        deg=d,
        t_values=tuple(ts),
        source=source,
        spread=spread_stats,
        smooth=smooth,
        lattice_isomorphic=iso,
        checks=tuple(checks),
    )
