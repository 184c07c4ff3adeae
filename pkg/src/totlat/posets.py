"""Finite posets: construction from covers, chains, and Moebius functions.

Elements are dense integer indices 0..n-1; labels are display-only.
Two independent Moebius computations are provided: the defining recursion
(`mobius`) and Philip Hall's alternating chain count (`mobius_hall`), which
serves as the oracle for everything downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CycleDetected, NotComparable, UnknownLabel


@dataclass(frozen=True)
class Chain:
    """A totally ordered subset, stored strictly increasing in the ambient order.

    A chain with k members has "length" k-1 in the usual indexing of
    chain families.
    """

    members: tuple[int, ...]
    ambient: "Poset" = field(compare=False, repr=False)

    def __post_init__(self):
        for a, b in zip(self.members, self.members[1:]):
            if not (a != b and self.ambient.leq(a, b)):
                raise ValueError(f"members not strictly increasing at ({a}, {b})")

    def __hash__(self):
        return hash(self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.members

    def labels(self):
        return tuple(self.ambient.names[m] for m in self.members)

    def __repr__(self):
        return "Chain(" + ",".join(self.labels()) + ")"


class Poset:
    """Immutable finite poset with a precomputed order relation.

    `leq_table[i][j]` is True iff i <= j.  The Moebius memo table is filled
    lazily; call `precompute_mobius()` before sharing across threads.
    """

    def __init__(self, names, leq_table):
        self.names = tuple(str(x) for x in names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate labels")
        self.n = len(self.names)
        self._leq = tuple(tuple(bool(v) for v in row) for row in leq_table)
        if len(self._leq) != self.n or any(len(r) != self.n for r in self._leq):
            raise ValueError("leq table has wrong shape")
        self._check_order_axioms()
        self._index = {name: i for i, name in enumerate(self.names)}
        self._covers = None
        self._mobius_memo = {}

    def _check_order_axioms(self):
        leq = self._leq
        for i in range(self.n):
            if not leq[i][i]:
                raise ValueError("leq not reflexive")
            for j in range(self.n):
                if i != j and leq[i][j] and leq[j][i]:
                    raise CycleDetected(f"{self.names[i]} and {self.names[j]} are mutually <=")
                for k in range(self.n):
                    if leq[i][j] and leq[j][k] and not leq[i][k]:
                        raise ValueError("leq not transitive")

    # -- basic queries ----------------------------------------------------

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.names == other.names
            and self._leq == other._leq
        )

    def __hash__(self):
        return hash((self.names, self._leq))

    def elements(self):
        return range(self.n)

    def index_of(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownLabel(f"no element labeled {label!r}") from None

    def leq(self, x, y):
        return self._leq[x][y]

    def lt(self, x, y):
        return x != y and self._leq[x][y]

    def comparable(self, x, y):
        return self._leq[x][y] or self._leq[y][x]

    @property
    def covers(self):
        """Cover pairs (x, y) with x covered by y: the transitive reduction."""
        if self._covers is None:
            out = []
            for x in range(self.n):
                for y in range(self.n):
                    if self.lt(x, y) and not any(
                        self.lt(x, z) and self.lt(z, y) for z in range(self.n)
                    ):
                        out.append((x, y))
            self._covers = tuple(out)
        return self._covers

    def cover_labels(self):
        return [(self.names[x], self.names[y]) for x, y in self.covers]

    # -- Moebius functions ------------------------------------------------

    def mobius(self, x, y):
        """Moebius value mu(x, y) by the defining recursion, memoized."""
        if not self.leq(x, y):
            raise NotComparable(f"{self.names[x]} is not <= {self.names[y]}")
        memo = self._mobius_memo
        if (x, y) not in memo:
            if x == y:
                memo[(x, y)] = 1
            else:
                memo[(x, y)] = -sum(
                    self.mobius(x, z)
                    for z in range(self.n)
                    if self.leq(x, z) and self.lt(z, y)
                )
        return memo[(x, y)]

    def precompute_mobius(self):
        for x in range((self.n)):
            for y in range(self.n):
                if self.leq(x, y):
                    self.mobius(x, y)
        return self

    def mobius_hall(self, x, y):
        """mu(x, y) as the alternating count of chains x = z_0 < ... < z_i = y.

        Independent of `mobius`: counts chains of each cardinality by dynamic
        programming over the strict order, then takes sum_i (-1)^i c_i.
        """
        if not self.leq(x, y):
            raise NotComparable(f"{self.names[x]} is not <= {self.names[y]}")
        # counts[v] maps step-count k to the number of strict chains v < ... = y
        counts: dict[int, dict[int, int]] = {y: {0: 1}}

        def chains_from(v):
            if v not in counts:
                acc: dict[int, int] = {}
                for w in range(self.n):
                    if self.lt(v, w) and self.leq(w, y):
                        for k, c in chains_from(w).items():
                            acc[k + 1] = acc.get(k + 1, 0) + c
                counts[v] = acc
            return counts[v]

        return sum((-1) ** k * c for k, c in chains_from(x).items())

    # -- chains -----------------------------------------------------------

    def chains(self, size=None, must_contain=None):
        """All chains, as Chain objects, in deterministic lexicographic order.

        `size` filters on member count; the empty chain is included when
        size is None or 0.  `must_contain` restricts to chains containing
        every listed element.
        """
        required = frozenset(must_contain or ())
        results = []

        def extend(current):
            results.append(tuple(current))
            last = current[-1] if current else None
            for x in range(self.n):
                if x in current:
                    continue
                if not all(self.comparable(x, m) for m in current):
                    continue
                # canonical representative only: keep members sorted by order
                if last is not None and not self.lt(last, x):
                    continue
                current.append(x)
                extend(current)
                current.pop()

        extend([])
        out = []
        for members in sorted(set(results)):
            if size is not None and len(members) != size:
                continue
            if not required.issubset(members):
                continue
            if members:
                out.append(Chain(members, self))
            elif size in (None, 0) and not required:
                out.append(members)  # empty chain, as a bare tuple
        # keep only Chain objects unless the empty chain is explicitly possible
        return [c if isinstance(c, Chain) else EMPTY_CHAIN for c in out]

    def interval(self, x, y, open_=False):
        """Induced subposet on [x, y], or on ]x, y[ when `open_` is set."""
        if not self.leq(x, y):
            raise NotComparable(f"{self.names[x]} is not <= {self.names[y]}")
        carrier = [z for z in range(self.n) if self.leq(x, z) and self.leq(z, y)]
        if open_:
            carrier = [z for z in carrier if z != x and z != y]
        names = [self.names[z] for z in carrier]
        leq = [[self._leq[a][b] for b in carrier] for a in carrier]
        return Poset(names, leq)

    def dual(self):
        """The order-reversed poset over the same elements."""
        leq = [[self._leq[j][i] for j in range(self.n)] for i in range(self.n)]
        return Poset(self.names, leq)

    def __repr__(self):
        return f"Poset({self.n} elements, covers={self.cover_labels()})"


class _EmptyChain:
    """Degenerate empty chain: an enumeration result, never a family member."""

    members = ()

    def __len__(self):
        return 0

    def __iter__(self):
        return iter(())

    def __repr__(self):
        return "Chain()"


EMPTY_CHAIN = _EmptyChain()


def poset_from_covers(names, covers):
    """Build a poset from labels and cover pairs.

    The order is the reflexive-transitive closure of the pairs; redundant
    (non-cover) input pairs are tolerated, the stored covers are re-derived
    as the transitive reduction.
    """
    names = [str(x) for x in names]
    if len(set(names)) != len(names):
        raise ValueError("duplicate labels")
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        a, b = str(a), str(b)
        if a not in index:
            raise UnknownLabel(f"no element labeled {a!r}")
        if b not in index:
            raise UnknownLabel(f"no element labeled {b!r}")
        leq[index[a]][index[b]] = True
    # Warshall closure
    for k, i, j in itertools.product(range(n), repeat=3):
        if leq[i][k] and leq[k][j]:
            leq[i][j] = True
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise CycleDetected(f"cycle through {names[i]} and {names[j]}")
    return Poset(names, leq)
