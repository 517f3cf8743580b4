"""lcm-lattices: construction, isomorphism testing, and the collapse map.

The lcm-lattice of a monomial ideal consists of all least common multiples
of subsets of the minimal generators (the empty subset contributing 1),
ordered by divisibility.  It is atomistic with the generators as atoms; the
join of two elements is their lcm, the meet is the greatest common lower
bound *within the lattice* (which may properly divide the gcd).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    BadParameterError,
    InvariantViolation,
    TooLargeError,
    WellDefinednessViolation,
)
from .monomials import Monomial, MonomialIdeal, spread_ideal, sigma_t

MAX_ATOMS = 20


class LcmLattice:
    """The lcm-lattice of a monomial ideal, elements stored as monomials."""

    __slots__ = ("ambient", "atoms", "elements", "_index", "_atom_support", "_covers")

    def __init__(self, ambient: int, atoms: tuple[Monomial, ...],
                 elements: tuple[Monomial, ...]):
        self.ambient = ambient
        self.atoms = atoms
        self.elements = elements
        self._index = {e: k for k, e in enumerate(elements)}
        self._atom_support = tuple(
            frozenset(a for a, atom in enumerate(atoms) if atom.divides(e))
            for e in elements
        )
        self._covers = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: Monomial) -> bool:
        return u in self._index

    def index(self, u: Monomial) -> int:
        try:
            return self._index[u]
        except KeyError:
            raise BadParameterError(f"{u} is not a lattice element") from None

    @property
    def bottom(self) -> Monomial:
        return self.elements[0]

    @property
    def top(self) -> Monomial:
        return self.elements[-1]

    def atom_support(self, u: Monomial) -> frozenset[int]:
        """Indices of the atoms lying below u (the maximal atom subset)."""
        return self._atom_support[self.index(u)]

    def leq(self, u: Monomial, v: Monomial) -> bool:
        self.index(u), self.index(v)
        return u.divides(v)

    def join(self, u: Monomial, v: Monomial) -> Monomial:
        self.index(u), self.index(v)
        w = u.lcm(v)
        if w not in self._index:
            raise InvariantViolation(f"lattice not join-closed at {u}, {v}")
        return w

    def meet(self, u: Monomial, v: Monomial) -> Monomial:
        """Greatest common lower bound inside the lattice (not the gcd)."""
        self.index(u), self.index(v)
        out = self.elements[0]
        for e in self.elements:
            if e.divides(u) and e.divides(v):
                out = out.lcm(e)
        if not (out.divides(u) and out.divides(v)) or out not in self._index:
            raise InvariantViolation(f"meet of {u}, {v} escaped the lattice")
        return out

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges as (lower, upper) element index pairs."""
        if self._covers is None:
            elems = self.elements
            below = [
                [i for i, e in enumerate(elems) if e != f and e.divides(f)]
                for f in elems
            ]
            edges = []
            for j, lower in enumerate(below):
                lower_set = set(lower)
                for i in lower:
                    if not any(i in below[k] for k in lower_set if k != i):
                        edges.append((i, j))
            self._covers = tuple(sorted(edges))
        return self._covers


def build_lcm_lattice(I: MonomialIdeal) -> LcmLattice:
    """All subset lcms of the minimal generators, deduplicated and sorted."""
    atoms = I.generators
    if len(atoms) > MAX_ATOMS:
        raise TooLargeError(
            f"{len(atoms)} generators exceed the lattice cap of {MAX_ATOMS}"
        )
    elems = {Monomial.unit(I.ambient)}
    for atom in atoms:
        elems |= {e.lcm(atom) for e in elems}
    return LcmLattice(I.ambient, atoms, tuple(sorted(elems)))


@dataclass(frozen=True)
class LatticeMap:
    """A total map between two lcm-lattices, stored value-wise."""

    source: LcmLattice
    target: LcmLattice
    mapping: Mapping[Monomial, Monomial]

    def __call__(self, u: Monomial) -> Monomial:
        return self.mapping[u]


def _order_matrix(L: LcmLattice) -> list[list[bool]]:
    return [[a.divides(b) for b in L.elements] for a in L.elements]


def _signatures(leq: list[list[bool]]) -> list[int]:
    """Iteratively refined order-invariant labels (a Weisfeiler-Leman pass)."""
    n = len(leq)
    down = [tuple(i for i in range(n) if leq[i][j]) for j in range(n)]
    up = [tuple(j for j in range(n) if leq[i][j]) for i in range(n)]
    sigs = [(len(down[i]), len(up[i])) for i in range(n)]
    ranked = {s: r for r, s in enumerate(sorted(set(sigs)))}
    labels = [ranked[s] for s in sigs]
    for _ in range(3):
        sigs = [
            (
                labels[i],
                tuple(sorted(labels[j] for j in down[i])),
                tuple(sorted(labels[j] for j in up[i])),
            )
            for i in range(n)
        ]
        ranked = {s: r for r, s in enumerate(sorted(set(sigs)))}
        labels = [ranked[s] for s in sigs]
    return labels


def is_isomorphic(L1: LcmLattice, L2: LcmLattice) -> dict[Monomial, Monomial] | None:
    """Search for a join- and meet-preserving bijection between two lattices.

    Quick invariants (sizes, refined up/down-set signatures) run first; the
    remaining work is a backtracking search over atom assignments, each
    extended to the whole lattice by join-closure because lcm-lattices are
    atomistic.  Returns the witnessing element bijection, or None.
    """
    if len(L1) != len(L2) or len(L1.atoms) != len(L2.atoms):
        return None
    leq1, leq2 = _order_matrix(L1), _order_matrix(L2)
    sig1, sig2 = _signatures(leq1), _signatures(leq2)
    if sorted(sig1) != sorted(sig2):
        return None

    atoms1 = [L1.index(a) for a in L1.atoms]
    atoms2 = [L2.index(a) for a in L2.atoms]

    def extend(assignment: dict[int, int]) -> dict[Monomial, Monomial] | None:
        mapping: dict[Monomial, Monomial] = {}
        used = set()
        for k, e in enumerate(L1.elements):
            sup = L1._atom_support[k]
            img = L2.bottom
            for a in sup:
                img = img.lcm(L2.elements[assignment[atoms1[a]]])
            if img not in L2 or L2.index(img) in used:
                return None
            used.add(L2.index(img))
            mapping[e] = img
        # order isomorphism in both directions
        idx2 = [L2.index(mapping[e]) for e in L1.elements]
        for i in range(len(L1)):
            for j in range(len(L1)):
                if leq1[i][j] != leq2[idx2[i]][idx2[j]]:
                    return None
        # joins and meets, verified explicitly
        for u, v in itertools.combinations_with_replacement(L1.elements, 2):
            if mapping[L1.join(u, v)] != L2.join(mapping[u], mapping[v]):
                return None
            if mapping[L1.meet(u, v)] != L2.meet(mapping[u], mapping[v]):
                return None
        return mapping

    def backtrack(pos: int, assignment: dict[int, int], used: set[int]):
        if pos == len(atoms1):
            return extend(assignment)
        i = atoms1[pos]
        for j in atoms2:
            if j in used or sig1[i] != sig2[j]:
                continue
            assignment[i] = j
            used.add(j)
            found = backtrack(pos + 1, assignment, used)
            if found is not None:
                return found
            del assignment[i]
            used.remove(j)
        return None

    return backtrack(0, {}, set())


def build_delta(I: MonomialIdeal) -> LatticeMap:
    """The collapse map from the lattice of the n-spread back onto L_I.

    Every subset of generators contributes the pair (lcm of spreads, lcm of
    originals); grouping the pairs by their spread-side value must give a
    single source-side value per group, which is verified during
    construction.  The grouping is NOT single-valued for every ideal: the
    spread-side lcm only remembers, per variable, the union of offset
    intervals, and distinct source lcms can produce identical unions (e.g.
    (x2^3*x3, x1^2*x3, x1*x2*x3^2) in three variables, where the spread
    lattice has fewer elements than the source lattice).  In that case no
    collapse map exists and WellDefinednessViolation is raised.
    """
    n = I.ambient
    src = build_lcm_lattice(I)
    spread = spread_ideal(I, n)
    spr = build_lcm_lattice(spread)
    atom_pairs = [(sigma_t(g, n).in_ambient(spread.ambient), g) for g in I.generators]

    mapping: dict[Monomial, Monomial] = {}
    frontier = {(spr.bottom, src.bottom)}
    seen = set()
    while frontier:
        pair = frontier.pop()
        if pair in seen:
            continue
        seen.add(pair)
        s_val, t_val = pair
        if s_val in mapping and mapping[s_val] != t_val:
            raise WellDefinednessViolation(
                f"spreading collapsed the lcm-lattice: {s_val} is the lcm of "
                f"spread generator subsets with different source lcms "
                f"{mapping[s_val]} and {t_val}; no collapse map exists"
            )
        mapping[s_val] = t_val
        for sa, ta in atom_pairs:
            frontier.add((s_val.lcm(sa), t_val.lcm(ta)))
    if set(mapping) != set(spr.elements):
        raise InvariantViolation("collapse map is not total on the spread lattice")
    return LatticeMap(source=spr, target=src, mapping=mapping)


def verify_delta(delta: LatticeMap) -> bool:
    """True iff the map is join-preserving, onto, and fixes the bottom."""
    src, tgt, f = delta.source, delta.target, delta.mapping
    if set(f) != set(src.elements):
        return False
    if f[src.bottom] != tgt.bottom:
        return False
    if set(f.values()) != set(tgt.elements):
        return False
    for u, v in itertools.combinations_with_replacement(src.elements, 2):
        if f[src.join(u, v)] != tgt.join(f[u], f[v]):
            return False
    return True


def hasse_dot(L: LcmLattice) -> str:
    """DOT digraph of the Hasse diagram, edges from smaller to larger cover.

    Node statements come first (one per line, in the lattice's canonical
    element order, labeled by the monomials), then the cover edges sorted the
    same way, so the output is deterministic.
    """
    lines = ["digraph lcm_lattice {"]
    for e in L.elements:
        lines.append(f'  "{e}";')
    for i, j in L.covers():
        lines.append(f'  "{L.elements[i]}" -> "{L.elements[j]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
