from fractions import Fraction

import pytest

from totlat.algebra import (
    FormalSum,
    Ring,
    ZZ,
    embed,
    f_of_chain,
    idempotent_direct,
    idempotent_original,
    identity_sum,
    j_upper,
    mu_chain_infinity,
    mu_chain_infinity_oracle,
    mu_family,
)
from totlat.errors import (
    ChainNotInA,
    SignatureMismatch,
    SourceTargetMismatch,
    UnsupportedRing,
)
from totlat.lattices import boolean_lattice, chain_lattice, generate
from totlat.morphisms import (
    alpha_of_chain,
    constant_bottom,
    families_over_chain,
    identity_map,
)

SMALL_CORPUS = ["chain:0", "chain:3", "boolean:2", "diamond:3", "pentagon",
                "divisor:12", "partition:3"]


def z_chain(L, *labels):
    return tuple(L.poset.index_of(s) for s in labels)


# -- rings ----------------------------------------------------------------


def test_ring_parse():
    assert Ring.parse("int") == ZZ
    assert Ring.parse("mod:5") == Ring("mod", 5)
    assert Ring.parse("rat") == Ring("rat")
    with pytest.raises(UnsupportedRing):
        Ring.parse("float")
    with pytest.raises(UnsupportedRing):
        Ring.parse("mod:1")
    with pytest.raises(UnsupportedRing):
        Ring.parse("mod:x")


def test_ring_coerce():
    assert Ring("mod", 3).coerce(-1) == 2
    assert Ring("rat").coerce(2) == Fraction(2)
    assert ZZ.coerce(Fraction(4, 2)) == 2
    with pytest.raises(UnsupportedRing):
        ZZ.coerce(Fraction(1, 2))


# -- formal sums ----------------------------------------------------------


def test_sum_add_zero():
    L = boolean_lattice(2)
    a = embed(identity_map(L))
    assert a + FormalSum.zero(ZZ, L, L) == a


def test_sum_cancel():
    L = boolean_lattice(2)
    a = embed(identity_map(L))
    assert (a + a.scale(-1)).is_zero()


def test_sum_characteristic_two():
    L = boolean_lattice(2)
    ring = Ring("mod", 2)
    alpha = embed(alpha_of_chain(L, z_chain(L, "0", "ab")), ring)
    assert alpha.scale(2).is_zero()


def test_sum_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        embed(identity_map(chain_lattice(1))) + embed(identity_map(chain_lattice(2)))
    with pytest.raises(SignatureMismatch):
        embed(identity_map(chain_lattice(1))) + embed(
            identity_map(chain_lattice(1)), Ring("mod", 2)
        )


def test_mul_identity_neutral():
    L = boolean_lattice(2)
    one = identity_sum(L)
    e = idempotent_direct(L)
    assert one * e == e
    assert e * one == e


def test_mul_collapsing_alphas():
    L = boolean_lattice(2)
    a1 = embed(alpha_of_chain(L, z_chain(L, "0", "a", "ab")))
    a2 = embed(alpha_of_chain(L, z_chain(L, "0", "b", "ab")))
    short = embed(alpha_of_chain(L, z_chain(L, "0", "ab")))
    assert (a1 + a2) * short == short.scale(2)


def test_mul_bilinear():
    L = boolean_lattice(2)
    a = embed(alpha_of_chain(L, z_chain(L, "0", "a", "ab")))
    b = embed(constant_bottom(L)).scale(3)
    f = idempotent_direct(L)
    assert (a + b) * f == a * f + b * f
    assert f * (a + b) == f * a + f * b


def test_mul_source_target_mismatch():
    with pytest.raises(SourceTargetMismatch):
        embed(identity_map(chain_lattice(1))) * embed(identity_map(chain_lattice(2)))


def test_sorted_terms_deterministic():
    L = boolean_lattice(2)
    e = idempotent_direct(L)
    assert [jm.values for jm, _ in e.sorted_terms()] == sorted(
        jm.values for jm in e.terms
    )


# -- chain Moebius values -------------------------------------------------


def test_mu_maximal_chain():
    for spec in SMALL_CORPUS:
        L = generate(spec)
        n = L.max_chain_length
        for A in L.chain_family("Z", n):
            if all(
                (lo, hi) in L.poset.covers for lo, hi in zip(A.members, A.members[1:])
            ):
                assert mu_chain_infinity(L, A) == -1


def test_mu_diamond_two_point():
    L = boolean_lattice(2)
    A = z_chain(L, "0", "ab")
    assert mu_chain_infinity(L, A) == 1
    assert mu_chain_infinity_oracle(L, A) == 1


def test_mu_vanishes_below_top():
    L = boolean_lattice(2)
    A = z_chain(L, "0", "a")
    assert mu_chain_infinity(L, A) == 0
    assert mu_chain_infinity_oracle(L, A) == 0


def test_mu_requires_bottom():
    L = boolean_lattice(2)
    with pytest.raises(ChainNotInA):
        mu_chain_infinity(L, z_chain(L, "a", "ab"))
    with pytest.raises(ChainNotInA):
        mu_chain_infinity_oracle(L, z_chain(L, "a", "ab"))


def test_mu_oracle_agreement_everywhere():
    for spec in SMALL_CORPUS + ["boolean:3"]:
        L = generate(spec)
        for A in L.chain_family("A"):
            assert mu_chain_infinity(L, A) == mu_chain_infinity_oracle(L, A), (
                spec,
                A.labels(),
            )


# -- the direct construction ----------------------------------------------


def test_direct_one_element():
    L = chain_lattice(0)
    assert idempotent_direct(L) == identity_sum(L)


def test_direct_total_orders_collapse_to_identity():
    for n in range(7):
        L = chain_lattice(n)
        assert idempotent_direct(L) == identity_sum(L)


def test_direct_diamond_terms():
    L = boolean_lattice(2)
    e = idempotent_direct(L)
    expected = {
        alpha_of_chain(L, z_chain(L, "0", "ab")): -1,
        alpha_of_chain(L, z_chain(L, "0", "a", "ab")): 1,
        alpha_of_chain(L, z_chain(L, "0", "b", "ab")): 1,
    }
    assert e.terms == expected


def test_direct_coefficients_are_chain_mobius_values():
    for spec in SMALL_CORPUS:
        L = generate(spec)
        e = idempotent_direct(L)
        seen = {}
        for B in L.chain_family("Z"):
            alpha = alpha_of_chain(L, B)
            assert alpha not in seen, "retraction maps must be pairwise distinct"
            seen[alpha] = -mu_chain_infinity(L, B)
        expected = {a: c for a, c in seen.items() if c != 0}
        assert e.terms == expected


def test_direct_idempotent_and_fixes_alphas():
    for spec in SMALL_CORPUS:
        L = generate(spec)
        e = idempotent_direct(L)
        assert e * e == e
        for B in L.chain_family("Z"):
            a = embed(alpha_of_chain(L, B))
            assert e * a == a


def test_crapo_filter_no_op():
    for spec in SMALL_CORPUS:
        L = generate(spec)
        assert idempotent_direct(L, crapo_filter=True) == idempotent_direct(L)


# -- the family construction ----------------------------------------------


def test_mu_family_lower_picks():
    L = boolean_lattice(2)
    B = z_chain(L, "0", "a", "ab")
    fam = [f for f in families_over_chain(L, B) if f.picks == B[:-1]][0]
    assert mu_family(L, fam) == 1  # picks equal the interval bottoms


def test_mu_family_cover_picks():
    L = boolean_lattice(2)
    B = z_chain(L, "0", "a", "ab")
    fam = [f for f in families_over_chain(L, B) if f.picks == B[1:]][0]
    assert mu_family(L, fam) == 1  # (-1)^2 over two cover steps


def test_mu_family_two_point():
    L = chain_lattice(1)
    fams = families_over_chain(L, (0, 1))
    assert [mu_family(L, f) for f in fams] == [1, -1]


def test_j_upper_point():
    L = boolean_lattice(2)
    j = j_upper(L, (L.top,))
    (jm, coeff), = j.terms.items()
    assert coeff == 1 and jm.values == (L.bottom,)


def test_j_upper_two_point():
    L = chain_lattice(1)
    j = j_upper(L, (0, 1))
    assert j.terms == {
        identity_map(L): 1,
        constant_bottom(L): -1,
    }


def test_j_upper_term_bound():
    L = generate("divisor:12")
    for n in range(L.max_chain_length + 1):
        for B in L.chain_family("B", n):
            assert len(j_upper(L, B).terms) <= len(families_over_chain(L, B))


def test_f_of_chain_two_point_lattice():
    L = chain_lattice(1)
    f_top = f_of_chain(L, (1,))
    f_both = f_of_chain(L, (0, 1))
    assert f_top == embed(constant_bottom(L))
    assert f_both == identity_sum(L) - embed(constant_bottom(L))
    assert (f_top * f_both).is_zero() and (f_both * f_top).is_zero()
    assert f_top + f_both == identity_sum(L)


def test_f_of_chain_idempotent():
    for spec in ("boolean:2", "pentagon", "divisor:12"):
        L = generate(spec)
        for n in range(L.max_chain_length + 1):
            for B in L.chain_family("B", n):
                f = f_of_chain(L, B)
                assert f * f == f


def test_original_equals_direct():
    for spec in SMALL_CORPUS + ["boolean:3", "product:boolean:2,chain:1"]:
        L = generate(spec)
        assert idempotent_original(L) == idempotent_direct(L), spec


def test_original_one_element():
    L = chain_lattice(0)
    assert idempotent_original(L) == identity_sum(L)


# -- rings beyond the integers --------------------------------------------


def test_ring_functoriality():
    for spec in SMALL_CORPUS:
        L = generate(spec)
        over_z = idempotent_direct(L)
        for m in (2, 3, 5):
            ring = Ring("mod", m)
            assert over_z.map_ring(ring) == idempotent_direct(L, ring)
        assert over_z.map_ring(Ring("rat")) == idempotent_direct(L, Ring("rat"))


def test_idempotent_over_small_characteristic():
    L = generate("divisor:12")
    for m in (2, 3, 5):
        ring = Ring("mod", m)
        e = idempotent_direct(L, ring)
        assert e * e == e
