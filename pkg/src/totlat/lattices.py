"""Finite lattices: join/meet tables, chain families, generators.

A Lattice wraps a Poset with fully materialized join and meet tables
(fine for the <= ~20-element test corpus).  Chain families:

  kind "A": chains whose least member is the bottom element,
  kind "B": chains whose greatest member is the top element,
  kind "Z": chains containing both ends.

`chain_family(kind, n)` filters to chains of size n+1 ("length n").
"""

from __future__ import annotations

import functools
import itertools

from .errors import NotALattice, NotComparable, UnsupportedSpec
from .posets import Poset, poset_from_covers

PARTITION_DEFAULT_CAP = 4
PARTITION_HARD_CAP = 6


class Lattice:
    """A poset in which every pair has a unique join and meet."""

    def __init__(self, poset: Poset):
        self.poset = poset
        n = poset.n
        self._join = [[None] * n for _ in range(n)]
        self._meet = [[None] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                self._join[x][y] = self._join[y][x] = self._bound(x, y, upper=True)
                self._meet[x][y] = self._meet[y][x] = self._bound(x, y, upper=False)
        bottoms = [x for x in range(n) if all(poset.leq(x, y) for y in range(n))]
        tops = [x for x in range(n) if all(poset.leq(y, x) for y in range(n))]
        # nonempty lattices always have both once pairwise bounds exist
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.max_chain_length = max(len(c) for c in poset.chains() ) - 1

    def _bound(self, x, y, upper):
        p = self.poset
        if upper:
            cands = [z for z in range(p.n) if p.leq(x, z) and p.leq(y, z)]
            best = [z for z in cands if all(p.leq(z, w) for w in cands)]
        else:
            cands = [z for z in range(p.n) if p.leq(z, x) and p.leq(z, y)]
            best = [z for z in cands if all(p.leq(w, z) for w in cands)]
        if len(best) != 1:
            raise NotALattice(self.poset.names[x], self.poset.names[y],
                              "join" if upper else "meet")
        return best[0]

    # -- basic structure --------------------------------------------------

    @property
    def n(self):
        return self.poset.n

    @property
    def names(self):
        return self.poset.names

    def __len__(self):
        return self.poset.n

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    def leq(self, x, y):
        return self.poset.leq(x, y)

    def lt(self, x, y):
        return self.poset.lt(x, y)

    def comparable(self, x, y):
        return self.poset.comparable(x, y)

    def join(self, x, y):
        return self._join[x][y]

    def meet(self, x, y):
        return self._meet[x][y]

    def join_all(self, subset):
        """Join of an arbitrary subset; the empty join is the bottom element."""
        acc = self.bottom
        for x in subset:
            acc = self._join[acc][x]
        return acc

    def meet_all(self, subset):
        acc = self.top
        for x in subset:
            acc = self._meet[acc][x]
        return acc

    def opposite(self):
        """The order-reversed lattice; join and meet swap, so do the ends."""
        return Lattice(self.poset.dual())

    def join_irreducibles(self):
        """Elements that are not the join of their strict lower set."""
        return [
            x
            for x in range(self.n)
            if self.join_all(y for y in range(self.n) if self.poset.lt(y, x)) != x
        ]

    # -- chains -----------------------------------------------------------

    def chain_family(self, kind, n=None):
        """Nonempty chains filtered by which ends they must contain."""
        if kind not in ("A", "B", "Z"):
            raise ValueError(f"unknown chain family kind {kind!r}")
        size = None if n is None else n + 1
        out = []
        for c in self.poset.chains(size=size):
            if len(c) == 0:
                continue
            if kind in ("A", "Z") and c.members[0] != self.bottom:
                continue
            if kind in ("B", "Z") and c.members[-1] != self.top:
                continue
            out.append(c)
        return out

    def is_complemented_interval(self, x, y):
        """True iff every z in [x, y] has a complement w: z v w = y, z ^ w = x."""
        if not self.leq(x, y):
            raise NotComparable(f"{self.names[x]} is not <= {self.names[y]}")
        carrier = [z for z in range(self.n) if self.leq(x, z) and self.leq(z, y)]
        return all(
            any(self.join(z, w) == y and self.meet(z, w) == x for w in carrier)
            for z in carrier
        )

    def fingerprint(self):
        """Stable hash of the canonical cover list, for serialized documents."""
        import hashlib

        text = ";".join(self.names) + "|" + ";".join(
            f"{a}<{b}" for a, b in sorted(self.poset.cover_labels())
        )
        return hashlib.sha256(text.encode()).hexdigest()[:16]

    def __repr__(self):
        return f"Lattice({self.n} elements, bottom={self.names[self.bottom]}, top={self.names[self.top]})"


def lattice_from_poset(poset: Poset) -> Lattice:
    return Lattice(poset)


# -- generators -----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def chain_lattice(n):
    """Total order with n+1 elements labeled 0..n.  Cached: these serve as
    the index orders for every chain-indexed construction."""
    names = [str(i) for i in range(n + 1)]
    return Lattice(poset_from_covers(names, list(zip(names, names[1:]))))


def boolean_lattice(n):
    """Subsets of an n-set ordered by inclusion; labels concatenate atoms."""
    atoms = "abcdefghij"[:n]
    subsets = []
    for k in range(n + 1):
        subsets.extend(itertools.combinations(atoms, k))
    label = lambda s: "".join(s) if s else "0"
    covers = [
        (label(s), label(t))
        for s in subsets
        for t in subsets
        if len(t) == len(s) + 1 and set(s) <= set(t)
    ]
    return Lattice(poset_from_covers([label(s) for s in subsets], covers))


def divisor_lattice(m):
    """Divisors of m ordered by divisibility."""
    if m < 1:
        raise UnsupportedSpec("divisor lattice needs m >= 1")
    divs = [d for d in range(1, m + 1) if m % d == 0]
    covers = [
        (str(a), str(b))
        for a in divs
        for b in divs
        if a < b and b % a == 0 and not any(a < c < b and c % a == 0 and b % c == 0 for c in divs)
    ]
    return Lattice(poset_from_covers([str(d) for d in divs], covers))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def partition_lattice(n, allow_large=False):
    """Set partitions of {1..n} by refinement; bottom is the discrete partition."""
    cap = PARTITION_HARD_CAP if allow_large else PARTITION_DEFAULT_CAP
    if not (1 <= n <= cap):
        raise UnsupportedSpec(f"partition({n}) exceeds the size cap {cap}")
    parts = [
        tuple(sorted(tuple(sorted(b)) for b in p))
        for p in _set_partitions(list(range(1, n + 1)))
    ]
    parts = sorted(set(parts), key=lambda p: (len(p), p), reverse=True)

    def refines(p, q):  # every block of p inside a block of q
        return all(any(set(bp) <= set(bq) for bq in q) for bp in p)

    label = lambda p: "|".join("".join(map(str, b)) for b in p)
    names = [label(p) for p in parts]
    leq = [[refines(p, q) for q in parts] for p in parts]
    return Lattice(Poset(names, leq))


def diamond_lattice(k):
    """M_k: bottom, k pairwise incomparable middles, top."""
    if k < 1:
        raise UnsupportedSpec("diamond needs k >= 1")
    mids = [f"m{i}" for i in range(1, k + 1)]
    covers = [("0", m) for m in mids] + [(m, "1") for m in mids]
    return Lattice(poset_from_covers(["0"] + mids + ["1"], covers))


def pentagon_lattice():
    """N_5: a 3-chain side and a single element side between the same ends."""
    covers = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
    return Lattice(poset_from_covers(["0", "a", "b", "c", "1"], covers))


def product_lattice(left: Lattice, right: Lattice):
    """Component-wise order on pairs; labels are 'x×y'."""
    pairs = list(itertools.product(range(left.n), range(right.n)))
    names = [f"{left.names[a]}×{right.names[b]}" for a, b in pairs]
    leq = [
        [left.leq(a, c) and right.leq(b, d) for (c, d) in pairs]
        for (a, b) in pairs
    ]
    return Lattice(Poset(names, leq))


def generate(spec, allow_large=False):
    """Build a lattice from a generator descriptor string.

    Descriptors: chain:N, boolean:N, divisor:M, partition:N, diamond:K,
    pentagon, product:SPEC,SPEC (two comma-separated sub-descriptors).
    """
    spec = spec.strip()
    if spec == "pentagon":
        return pentagon_lattice()
    head, sep, rest = spec.partition(":")
    if not sep:
        raise UnsupportedSpec(f"unknown generator {spec!r}")
    try:
        if head == "chain":
            return chain_lattice(int(rest))
        if head == "boolean":
            return boolean_lattice(int(rest))
        if head == "divisor":
            return divisor_lattice(int(rest))
        if head == "partition":
            return partition_lattice(int(rest), allow_large=allow_large)
        if head == "diamond":
            return diamond_lattice(int(rest))
        if head == "product":
            parts = rest.split(",")
            if len(parts) != 2:
                raise UnsupportedSpec(
                    f"product takes exactly two comma-separated factors: {spec!r}"
                )
            return product_lattice(
                generate(parts[0], allow_large), generate(parts[1], allow_large)
            )
    except ValueError as exc:
        raise UnsupportedSpec(f"bad generator argument in {spec!r}: {exc}") from None
    raise UnsupportedSpec(f"unknown generator {spec!r}")
