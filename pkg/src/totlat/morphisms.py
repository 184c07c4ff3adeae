"""Join-morphisms between finite lattices.

A join-morphism preserves all joins including the empty one (bottom goes
to bottom).  For finite lattices, checking the empty join plus all binary
joins suffices, by induction on finite joins; `make_join_map` checks
exactly that, and tests cross-validate against full subset checking on
tiny lattices.

Also provided: the canonical chain-indexed maps used by both idempotent
constructions (the retraction onto a chain, the surjection onto an index
total order, the sections picked from interval families) and exhaustive
enumeration of the join-endomorphism monoid via join-irreducibles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    ChainNotInB,
    ChainNotInZ,
    NotJoinMorphism,
    SourceTargetMismatch,
)
from .lattices import Lattice, chain_lattice
from .posets import Chain


@dataclass(frozen=True)
class JoinMap:
    """A join-morphism stored as a total value table (source index -> target index)."""

    source: Lattice = field(repr=False)
    target: Lattice = field(repr=False)
    values: tuple[int, ...]

    def __hash__(self):
        return hash(self.values)

    def __call__(self, x):
        return self.values[x]

    def is_identity(self):
        return self.source == self.target and self.values == tuple(range(self.source.n))

    def is_surjective(self):
        return len(set(self.values)) == self.target.n

    def table_labels(self):
        return {
            self.source.names[x]: self.target.names[v]
            for x, v in enumerate(self.values)
        }

    def __repr__(self):
        pairs = ",".join(f"{s}:{t}" for s, t in self.table_labels().items())
        return f"JoinMap({pairs})"


def make_join_map(source: Lattice, target: Lattice, table) -> JoinMap:
    """Validate a value table as a join-morphism.

    `table` is a sequence of target indices, one per source element.
    Raises NotJoinMorphism with the first violating pair (bottom violations
    are reported as the pair (bottom, bottom)).
    """
    values = tuple(table)
    if len(values) != source.n:
        raise ValueError("table is not total on the source lattice")
    if values[source.bottom] != target.bottom:
        raise NotJoinMorphism(source.names[source.bottom], source.names[source.bottom])
    for x in range(source.n):
        for y in range(x, source.n):
            if values[source.join(x, y)] != target.join(values[x], values[y]):
                raise NotJoinMorphism(source.names[x], source.names[y])
    return JoinMap(source, target, values)


def is_join_map(source: Lattice, target: Lattice, table) -> bool:
    try:
        make_join_map(source, target, table)
        return True
    except NotJoinMorphism:
        return False


def identity_map(L: Lattice) -> JoinMap:
    return JoinMap(L, L, tuple(range(L.n)))


def constant_bottom(source: Lattice, target: Lattice | None = None) -> JoinMap:
    target = target or source
    return JoinMap(source, target, (target.bottom,) * source.n)


def compose(g: JoinMap, f: JoinMap) -> JoinMap:
    """g after f.  Composites of join-morphisms need no re-validation."""
    if f.target != g.source:
        raise SourceTargetMismatch("f.target differs from g.source")
    return JoinMap(f.source, g.target, tuple(g.values[v] for v in f.values))


def opposite_morphism(phi: JoinMap) -> JoinMap:
    """The adjoint companion: t' -> join of all t with phi(t) <= t'.

    A join-morphism from the opposite of the target to the opposite of the
    source; applying it twice returns the original map.
    """
    S, T = phi.source, phi.target
    values = tuple(
        S.join_all(t for t in range(S.n) if T.leq(phi.values[t], tp))
        for tp in range(T.n)
    )
    return JoinMap(T.opposite(), S.opposite(), values)


def image_chain(phi: JoinMap):
    """The image as a Chain of the target if totally ordered, else None."""
    T = phi.target
    image = sorted(set(phi.values))
    for a, b in itertools.combinations(image, 2):
        if not T.comparable(a, b):
            return None
    ordered = tuple(sorted(image, key=lambda x: sum(T.leq(y, x) for y in image)))
    return Chain(ordered, T.poset)


def alpha_of_chain(L: Lattice, B) -> JoinMap:
    """Retraction onto a bottom-to-top chain B: t -> min{b in B : b >= t}.

    Idempotent, pointwise >= identity, image exactly B.
    """
    members = tuple(B)
    if not members or members[0] != L.bottom or members[-1] != L.top:
        raise ChainNotInZ("chain must contain both bottom and top")
    values = []
    for t in range(L.n):
        above = [b for b in members if L.leq(t, b)]
        values.append(min(above, key=members.index))
    return JoinMap(L, L, tuple(values))


def pi_of_chain(L: Lattice, B) -> JoinMap:
    """Surjection onto the index total order determined by a top-ended chain B.

    With B = {b_0 < ... < b_n = top}, sends t to the least p with t <= b_p.
    """
    members = tuple(B)
    if not members or members[-1] != L.top:
        raise ChainNotInB("chain must contain the top element")
    n = len(members) - 1
    P = chain_lattice(n)
    values = tuple(
        min(p for p in range(n + 1) if L.leq(t, members[p])) for t in range(L.n)
    )
    return JoinMap(L, P, values)


@dataclass(frozen=True)
class FamilyOverChain:
    """A pick a_p from each interval [b_{p-1}, b_p] of a top-ended chain.

    `picks[p-1]` is the element chosen for position p = 1..n; position 0 of
    the index order is always sent to the bottom of the ambient lattice.
    """

    chain: tuple[int, ...]
    picks: tuple[int, ...]

    def __post_init__(self):
        if len(self.picks) != len(self.chain) - 1:
            raise ValueError("need one pick per non-bottom position")


def families_over_chain(L: Lattice, B):
    """All interval-pick families over B, in deterministic product order."""
    members = tuple(B)
    if not members or members[-1] != L.top:
        raise ChainNotInB("chain must contain the top element")
    intervals = []
    for lo, hi in zip(members, members[1:]):
        intervals.append(
            [a for a in range(L.n) if L.leq(lo, a) and L.leq(a, hi)]
        )
    return [
        FamilyOverChain(members, picks) for picks in itertools.product(*intervals)
    ]


def j_of_family(L: Lattice, family: FamilyOverChain) -> JoinMap:
    """Section of the index order: 0 -> bottom, p -> a_p.

    Order preservation holds because a_p <= b_p <= b_{q-1} <= a_q for p < q.
    """
    n = len(family.chain) - 1
    P = chain_lattice(n)
    values = (L.bottom,) + family.picks
    jm = JoinMap(P, L, values)
    assert is_join_map(P, L, values), "family picks violate the interval constraints"
    return jm


def enumerate_join_endomorphisms(L: Lattice, tot_only=False):
    """All join-endomorphisms, each exactly once, by join-irreducible assignment.

    A join-endomorphism is determined by its values on join-irreducibles;
    each assignment extends by t -> join of the assigned values below t.
    Assignments whose extension disagrees with them on some irreducible are
    skipped (they reappear as their own extension), and extensions failing
    the join-morphism check are discarded.  Iteration order is lexicographic
    over assignments.
    """
    irr = L.join_irreducibles()
    for assignment in itertools.product(range(L.n), repeat=len(irr)):
        ext = _extend_assignment(L, irr, assignment)
        if any(ext[j] != v for j, v in zip(irr, assignment)):
            continue
        if not is_join_map(L, L, ext):
            continue
        phi = JoinMap(L, L, tuple(ext))
        if tot_only and image_chain(phi) is None:
            continue
        yield phi


def _extend_assignment(L, irr, assignment):
    value_at = dict(zip(irr, assignment))
    return [
        L.join_all(value_at[j] for j in irr if L.leq(j, t)) for t in range(L.n)
    ]


def sample_join_endomorphisms(L: Lattice, count, rng):
    """Draw `count` valid join-endomorphisms by uniform irreducible assignment.

    Rejection sampling; deterministic for a fixed rng state.
    """
    irr = L.join_irreducibles()
    out = []
    while len(out) < count:
        assignment = [rng.randrange(L.n) for _ in irr]
        ext = _extend_assignment(L, irr, assignment)
        if any(ext[j] != v for j, v in zip(irr, assignment)):
            continue
        if not is_join_map(L, L, ext):
            continue
        out.append(JoinMap(L, L, tuple(ext)))
    return out
