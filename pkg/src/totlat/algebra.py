"""Formal linear combinations of join-morphisms and the two idempotent
constructions.

Coefficients live in an exact commutative ring (integers, integers mod m,
or rationals); no floating point anywhere.  Integer coefficients are the
canonical path: every coefficient that occurs is a Moebius value.

The headline objects:

  idempotent_direct    -- minus the sum, over bottom-to-top chains B, of
                          mu(B, infinity) times the retraction onto B;
  idempotent_original  -- the sum over all top-ended chains B of the
                          idempotents f_B built from interval-pick families.

Both produce the same element; the equivalence is the main cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ChainNotInA,
    FeasibilityLimit,
    SignatureMismatch,
    SourceTargetMismatch,
    UnsupportedRing,
)
from .lattices import Lattice
from .morphisms import (
    FamilyOverChain,
    JoinMap,
    alpha_of_chain,
    compose,
    families_over_chain,
    identity_map,
    j_of_family,
    pi_of_chain,
)
from .posets import Poset

CHAIN_POSET_LIMIT = 10**5


@dataclass(frozen=True)
class Ring:
    """Exact coefficient ring: integers, integers mod m, or rationals."""

    kind: str  # "int" | "mod" | "rat"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("int", "mod", "rat"):
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")
        if self.kind == "mod" and (self.modulus is None or self.modulus < 2):
            raise UnsupportedRing("modulus must be >= 2")
        if self.kind != "mod" and self.modulus is not None:
            raise UnsupportedRing("modulus only makes sense for kind 'mod'")

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text == "int":
            return cls("int")
        if text == "rat":
            return cls("rat")
        if text.startswith("mod:"):
            try:
                return cls("mod", int(text[4:]))
            except ValueError:
                raise UnsupportedRing(f"bad modulus in {text!r}") from None
        raise UnsupportedRing(f"unknown ring {text!r}")

    def coerce(self, c):
        if self.kind == "int":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise UnsupportedRing(f"{c} is not an integer")
                return c.numerator
            return int(c)
        if self.kind == "mod":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise UnsupportedRing(f"{c} is not an integer")
                c = c.numerator
            return int(c) % self.modulus
        return Fraction(c)

    def add(self, a, b):
        return self.coerce(a + b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def is_zero(self, a):
        return self.coerce(a) == self.coerce(0)

    def __str__(self):
        return f"mod:{self.modulus}" if self.kind == "mod" else self.kind


ZZ = Ring("int")


class FormalSum:
    """Finite linear combination of join-morphisms with a shared signature.

    Normalized: zero coefficients are dropped on construction, so equality
    is plain term-by-term comparison.  Terms are keyed by the full value
    table, which also gives the canonical serialization order.
    """

    __slots__ = ("ring", "source", "target", "terms")

    def __init__(self, ring: Ring, source: Lattice, target: Lattice, terms=()):
        self.ring = ring
        self.source = source
        self.target = target
        collected: dict[JoinMap, object] = {}
        for jm, coeff in dict(terms).items() if isinstance(terms, dict) else terms:
            if jm.source != source or jm.target != target:
                raise SignatureMismatch("term does not match the declared signature")
            coeff = ring.coerce(coeff)
            if jm in collected:
                coeff = ring.add(collected[jm], coeff)
            collected[jm] = coeff
        self.terms = {
            jm: c for jm, c in collected.items() if not ring.is_zero(c)
        }

    @classmethod
    def from_map(cls, ring, jm: JoinMap, coeff=1):
        return cls(ring, jm.source, jm.target, [(jm, coeff)])

    @classmethod
    def zero(cls, ring, source, target):
        return cls(ring, source, target)

    def _require_same_signature(self, other):
        if (
            self.ring != other.ring
            or self.source != other.source
            or self.target != other.target
        ):
            raise SignatureMismatch("formal sums have different signatures")

    def __add__(self, other):
        self._require_same_signature(other)
        merged = dict(self.terms)
        for jm, c in other.terms.items():
            merged[jm] = self.ring.add(merged.get(jm, 0), c)
        return FormalSum(self.ring, self.source, self.target, merged)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.ring.coerce(c)
        return FormalSum(
            self.ring,
            self.source,
            self.target,
            {jm: self.ring.mul(c, v) for jm, v in self.terms.items()},
        )

    def __mul__(self, other):
        """Composition product: (self * other) means self after other."""
        if not isinstance(other, FormalSum):
            return NotImplemented
        if self.ring != other.ring:
            raise SignatureMismatch("formal sums over different rings")
        if other.target != self.source:
            raise SourceTargetMismatch("inner target differs from outer source")
        out: dict[JoinMap, object] = {}
        for g, cg in self.terms.items():
            for f, cf in other.terms.items():
                gf = compose(g, f)
                out[gf] = self.ring.add(out.get(gf, 0), self.ring.mul(cg, cf))
        return FormalSum(self.ring, other.source, self.target, out)

    def __eq__(self, other):
        return (
            isinstance(other, FormalSum)
            and self.ring == other.ring
            and self.source == other.source
            and self.target == other.target
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset((jm.values, c) for jm, c in self.terms.items()))

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in canonical order: ascending on the value table."""
        return sorted(self.terms.items(), key=lambda item: item[0].values)

    def map_ring(self, ring: Ring):
        """Reinterpret the coefficients in another ring (e.g. reduce mod m)."""
        return FormalSum(
            ring, self.source, self.target, list(self.terms.items())
        )

    def __repr__(self):
        bits = " + ".join(f"{c}*{jm!r}" for jm, c in self.sorted_terms())
        return f"FormalSum({bits or '0'})"


def identity_sum(L: Lattice, ring: Ring = ZZ) -> FormalSum:
    return FormalSum.from_map(ring, identity_map(L))


def embed(jm: JoinMap, ring: Ring = ZZ) -> FormalSum:
    return FormalSum.from_map(ring, jm)


# -- Moebius values of chains ---------------------------------------------


def mu_chain_infinity(L: Lattice, A) -> int:
    """mu(A, infinity) in the poset of bottom-rooted chains with a top adjoined.

    Vanishes outright when A misses the top element; otherwise equals
    (-1)^(n+1) times the product of the interval Moebius values along A.
    """
    members = tuple(A)
    if not members or members[0] != L.bottom:
        raise ChainNotInA("chain must contain the bottom element")
    if members[-1] != L.top:
        return 0
    n = len(members) - 1
    product = 1
    for lo, hi in zip(members, members[1:]):
        product *= L.poset.mobius(lo, hi)
    return (-1) ** (n + 1) * product


def mu_chain_infinity_oracle(L: Lattice, A, limit=CHAIN_POSET_LIMIT) -> int:
    """Same value by brute force: build the poset of chains strictly
    containing A, adjoin a top, and count chains Hall-style.

    Never takes the product shortcut, so it is independent of
    `mu_chain_infinity`.
    """
    members = tuple(A)
    if not members or members[0] != L.bottom:
        raise ChainNotInA("chain must contain the bottom element")
    base = set(members)
    supersets = [
        tuple(c.members)
        for c in L.chain_family("A")
        if base < set(c.members)
    ]
    if len(supersets) > limit:
        raise FeasibilityLimit(
            f"chain poset has {len(supersets)} elements, above the limit {limit}"
        )
    carrier = [members] + sorted(supersets) + [None]  # None is the adjoined top
    names = [str(i) for i in range(len(carrier))]

    def below(a, b):
        if b is None:
            return True
        if a is None:
            return False
        return set(a) <= set(b)

    leq = [[below(a, b) for b in carrier] for a in carrier]
    poset = Poset(names, leq)
    return poset.mobius_hall(0, len(carrier) - 1)


# -- the direct construction ----------------------------------------------


def idempotent_direct(L: Lattice, ring: Ring = ZZ, crapo_filter=False) -> FormalSum:
    """Minus the sum over bottom-to-top chains B of mu(B, infinity) * alpha_B.

    With `crapo_filter`, chains with a non-complemented step interval are
    skipped; their Moebius value is zero, so the result is unchanged.
    """
    terms = []
    for B in L.chain_family("Z"):
        if crapo_filter and any(
            not L.is_complemented_interval(lo, hi)
            for lo, hi in zip(B.members, B.members[1:])
        ):
            continue
        mu = mu_chain_infinity(L, B)
        if mu:
            terms.append((alpha_of_chain(L, B), -mu))
    return FormalSum(ring, L, L, terms)


# -- the family construction ----------------------------------------------


def mu_family(L: Lattice, family: FamilyOverChain) -> int:
    """Product over positions of mu(b_{p-1}, a_p) in the lattice."""
    product = 1
    for lo, pick in zip(family.chain, family.picks):
        product *= L.poset.mobius(lo, pick)
    return product


def j_upper(L: Lattice, B, ring: Ring = ZZ) -> FormalSum:
    """(-1)^n times the mu-weighted sum of the sections over B's families."""
    members = tuple(B)
    n = len(members) - 1
    sign = (-1) ** n
    terms = []
    for family in families_over_chain(L, members):
        mu = mu_family(L, family)
        if mu:
            terms.append((j_of_family(L, family), sign * mu))
    from .lattices import chain_lattice

    return FormalSum(ring, chain_lattice(n), L, terms)


def f_of_chain(L: Lattice, B, ring: Ring = ZZ) -> FormalSum:
    """The idempotent attached to a top-ended chain: section sum after the
    index surjection."""
    return j_upper(L, B, ring) * embed(pi_of_chain(L, B), ring)


def idempotent_original(L: Lattice, ring: Ring = ZZ) -> FormalSum:
    """Sum of f_B over all top-ended chains B of every length."""
    acc = FormalSum.zero(ring, L, L)
    for n in range(L.max_chain_length + 1):
        for B in L.chain_family("B", n):
            acc = acc + f_of_chain(L, B, ring)
    return acc
