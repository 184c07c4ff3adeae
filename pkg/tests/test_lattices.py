import itertools

import pytest

from totlat.errors import NotALattice, UnsupportedSpec
from totlat.lattices import (
    boolean_lattice,
    chain_lattice,
    diamond_lattice,
    divisor_lattice,
    generate,
    lattice_from_poset,
    partition_lattice,
    pentagon_lattice,
)
from totlat.posets import poset_from_covers

CORPUS = [
    "chain:0", "chain:3", "boolean:2", "boolean:3", "diamond:3",
    "pentagon", "divisor:12", "partition:3", "product:boolean:2,chain:1",
]


@pytest.fixture(params=CORPUS)
def lattice(request):
    return generate(request.param)


def test_diamond_structure():
    L = boolean_lattice(2)
    a, b = L.poset.index_of("a"), L.poset.index_of("b")
    assert L.join(a, b) == L.top
    assert L.meet(a, b) == L.bottom
    assert L.names[L.bottom] == "0"


def test_antichain_is_not_a_lattice():
    p = poset_from_covers(["a", "b"], [])
    with pytest.raises(NotALattice):
        lattice_from_poset(p)


def test_total_order_join_is_max():
    L = chain_lattice(3)
    for x, y in itertools.product(range(4), repeat=2):
        assert L.join(x, y) == max(x, y)
        assert L.meet(x, y) == min(x, y)


def test_join_all_empty_is_bottom(lattice):
    assert lattice.join_all([]) == lattice.bottom


def test_join_all_singleton(lattice):
    for x in range(lattice.n):
        assert lattice.join_all([x]) == x


def test_join_all_diamond_atoms():
    L = boolean_lattice(2)
    assert L.join_all([L.poset.index_of("a"), L.poset.index_of("b")]) == L.top


def test_opposite_involution(lattice):
    assert lattice.opposite().opposite() == lattice


def test_opposite_swaps_ends():
    L = chain_lattice(2)
    op = L.opposite()
    assert op.bottom == L.top and op.top == L.bottom
    for x, y in itertools.product(range(3), repeat=2):
        assert op.join(x, y) == L.meet(x, y)


def test_opposite_pentagon():
    op = pentagon_lattice().opposite()
    # still a pentagon: 5 elements, one 2-step side and one 1-step side
    assert op.n == 5 and op.max_chain_length == 3


def test_chain_family_diamond_z():
    L = boolean_lattice(2)
    got = [c.labels() for c in L.chain_family("Z")]
    # lexicographic on member indices: 0<a<b<ab is the element order
    assert got == [("0", "a", "ab"), ("0", "b", "ab"), ("0", "ab")]


def test_chain_family_diamond_b1():
    L = boolean_lattice(2)
    got = {c.labels() for c in L.chain_family("B", 1)}
    assert got == {("0", "ab"), ("a", "ab"), ("b", "ab")}


def test_chain_family_one_element():
    L = chain_lattice(0)
    z = L.chain_family("Z")
    assert len(z) == 1 and len(z[0]) == 1


def test_chain_family_intersection(lattice):
    for n in range(lattice.max_chain_length + 1):
        a = {c.members for c in lattice.chain_family("A", n)}
        b = {c.members for c in lattice.chain_family("B", n)}
        z = {c.members for c in lattice.chain_family("Z", n)}
        assert z == a & b


def test_chain_family_counts_match(lattice):
    for n in range(lattice.max_chain_length + 1):
        assert len(lattice.chain_family("A", n)) == len(lattice.chain_family("B", n))


def test_two_element_interval_complemented(lattice):
    for x, y in lattice.poset.covers:
        assert lattice.is_complemented_interval(x, y)


def test_pentagon_is_complemented():
    L = pentagon_lattice()
    assert L.is_complemented_interval(L.bottom, L.top)


def test_three_chain_not_complemented():
    L = chain_lattice(2)
    assert not L.is_complemented_interval(L.bottom, L.top)


def test_generate_chain():
    assert generate("chain:2").n == 3


def test_generate_boolean_2_is_diamond():
    L = generate("boolean:2")
    assert L.n == 4 and L.max_chain_length == 2


def test_generate_divisor_12():
    L = generate("divisor:12")
    assert sorted(int(x) for x in L.names) == [1, 2, 3, 4, 6, 12]
    assert L.leq(L.poset.index_of("2"), L.poset.index_of("6"))
    assert not L.leq(L.poset.index_of("4"), L.poset.index_of("6"))


def test_generate_partition_sizes():
    assert partition_lattice(3).n == 5
    assert partition_lattice(4).n == 15


def test_partition_bottom_is_discrete():
    L = partition_lattice(3)
    assert L.names[L.bottom] == "1|2|3"
    assert L.names[L.top] == "123"


def test_partition_cap():
    with pytest.raises(UnsupportedSpec):
        partition_lattice(5)
    assert partition_lattice(5, allow_large=True).n == 52
    with pytest.raises(UnsupportedSpec):
        partition_lattice(7, allow_large=True)


def test_generate_unknown():
    with pytest.raises(UnsupportedSpec):
        generate("octahedron:3")
    with pytest.raises(UnsupportedSpec):
        generate("chain")
    with pytest.raises(UnsupportedSpec):
        generate("chain:x")


def test_generate_product():
    L = generate("product:boolean:2,chain:1")
    assert L.n == 8
    assert "0×0" in L.names


def test_diamond_mk():
    L = diamond_lattice(3)
    assert L.n == 5
    mids = [x for x in range(L.n) if x not in (L.bottom, L.top)]
    for x, y in itertools.combinations(mids, 2):
        assert not L.comparable(x, y)


def test_absorption(lattice):
    for x, y in itertools.product(range(lattice.n), repeat=2):
        assert lattice.join(x, lattice.meet(x, y)) == x
        assert lattice.meet(x, lattice.join(x, y)) == x


def test_meet_determined_by_join(lattice):
    # meet is the join of the common lower bounds
    for x, y in itertools.product(range(lattice.n), repeat=2):
        lower = [a for a in range(lattice.n)
                 if lattice.leq(a, x) and lattice.leq(a, y)]
        assert lattice.meet(x, y) == lattice.join_all(lower)


def test_join_irreducibles():
    assert len(boolean_lattice(3).join_irreducibles()) == 3
    assert len(chain_lattice(3).join_irreducibles()) == 3
    assert len(divisor_lattice(12).join_irreducibles()) == 3  # 2, 3, 4


def test_max_chain_length():
    assert chain_lattice(4).max_chain_length == 4
    assert boolean_lattice(3).max_chain_length == 3
    assert chain_lattice(0).max_chain_length == 0
