import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import divgraph as dv
from divgraph.errors import (
    DegreeMismatch,
    NoIdentity,
    NotAssociative,
    NotClosed,
    OrderCapExceeded,
    UnknownDescriptor,
)
from divgraph.groups import closure_from_generators
from divgraph.perms import Permutation


# -- validate_cayley_table ---------------------------------------------------


def test_trivial_table():
    g = dv.validate_cayley_table([[0]])
    assert g.order == 1 and g.inverse == (0,)


def test_q8_table_roundtrip(q8):
    rebuilt = dv.validate_cayley_table(q8.table, names=q8.names)
    assert rebuilt.table == q8.table
    assert rebuilt.order == 8


def test_latin_square_violation():
    with pytest.raises(NotClosed, match="repeats"):
        dv.validate_cayley_table([[0, 1], [1, 1]])


def test_no_identity():
    # subtraction mod 3 is Latin but only has a right identity
    table = [[(i - j) % 3 for j in range(3)] for i in range(3)]
    with pytest.raises(NoIdentity):
        dv.validate_cayley_table(table)


def test_not_associative():
    # a Latin square with identity row/col that fails associativity
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative, match=r"\d+\*\d+"):
        dv.validate_cayley_table(table)


def test_identity_relocation():
    # cyclic group of order 3 written with identity at index 2
    # elements: a=0 (=g), b=1 (=g^2), e=2
    table = [
        [1, 2, 0],
        [2, 0, 1],
        [0, 1, 2],
    ]
    g = dv.validate_cayley_table(table, names=["a", "b", "e"])
    assert g.names[0] == "e"
    assert g.table[0] == [0, 1, 2]
    assert dv.are_isomorphic(g, dv.cyclic(3))


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        dv.validate_cayley_table([[0, 1], [1, 0]], order_cap=1)


# -- from_permutation_generators ----------------------------------------------


def test_two_commuting_three_cycles_give_order_nine():
    gens = [
        Permutation.from_cycles([(1, 2, 3)], 6),
        Permutation.from_cycles([(4, 5, 6)], 6),
    ]
    g = dv.from_permutation_generators(gens, 6)
    assert g.order == 9
    assert g.is_abelian()


def test_empty_generators_trivial():
    g = dv.from_permutation_generators([], 5)
    assert g.order == 1


def test_transposition_and_four_cycle_generate_s4():
    gens = [
        Permutation.from_cycles([(1, 2)], 4),
        Permutation.from_cycles([(1, 2, 3, 4)], 4),
    ]
    g = dv.from_permutation_generators(gens, 4)
    # oracle: independent full-product closure over permutation tuples
    seen = {p.images for p in gens} | {Permutation.identity(4).images}
    while True:
        new = {
            (Permutation(a) * Permutation(b)).images
            for a in seen for b in seen
        } | seen
        if new == seen:
            break
        seen = new
    assert g.order == len(seen) == math.factorial(4) == 24


def test_degree_mismatch_in_generators():
    with pytest.raises(DegreeMismatch):
        dv.from_permutation_generators([Permutation.identity(3)], 4)


def test_generator_closure_cap():
    gens = [Permutation.from_cycles([(1, 2, 3, 4, 5)], 5)]
    with pytest.raises(OrderCapExceeded):
        dv.from_permutation_generators(gens, 5, order_cap=3)


def test_perm_group_roundtrips_through_validate():
    gens = [
        Permutation.from_cycles([(1, 2)], 4),
        Permutation.from_cycles([(1, 2, 3, 4)], 4),
    ]
    g = dv.from_permutation_generators(gens, 4)
    rebuilt = dv.validate_cayley_table(g.table, names=g.names)
    assert rebuilt.table == g.table


# -- catalog -------------------------------------------------------------------


def test_catalog_quaternion8(q8):
    assert q8.order == 8
    assert q8.names == ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    i, j, k = 2, 4, 6
    minus1 = 1
    assert q8.mul(i, i) == minus1
    assert q8.mul(j, j) == minus1
    assert q8.mul(k, k) == minus1
    assert q8.mul(i, j) == k
    assert q8.mul(j, k) == i
    assert q8.mul(k, i) == j
    # ij = -ji
    assert q8.mul(i, j) == q8.inv(q8.mul(j, i)) == k


def test_catalog_heisenberg27(h27):
    assert h27.order == 27
    assert all(h27.element_order(g) == 3 for g in range(1, 27))
    x, y, z = 9, 3, 1  # index encoding 9a + 3b + c
    assert h27.mul(x, y) == h27.mul(y, x)
    assert h27.mul(x, z) == h27.mul(z, x)
    # yz = xzy
    assert h27.mul(y, z) == h27.mul(x, h27.mul(z, y))
    assert h27.mul(y, z) != h27.mul(z, y)


def test_catalog_direct_product_klein():
    g = dv.catalog("product:cyclic:2:cyclic:2")
    assert g.order == 4
    assert g.table == dv.klein4().table


def test_catalog_descriptor_errors():
    with pytest.raises(UnknownDescriptor):
        dv.catalog("frobnicate:3")
    with pytest.raises(UnknownDescriptor):
        dv.catalog("cyclic")
    with pytest.raises(UnknownDescriptor):
        dv.catalog("cyclic:x")
    with pytest.raises(UnknownDescriptor):
        dv.catalog("cyclic:3:4")
    with pytest.raises(UnknownDescriptor):
        dv.catalog("elementary_abelian:4:2")


def test_catalog_symmetric_and_alternating_sizes():
    assert dv.symmetric(4).order == 24
    assert dv.alternating(4).order == 12
    assert dv.alternating(2).order == 1
    assert dv.catalog("alternating:5").order == 60


def test_standard_groups_have_bounded_order():
    groups = dv.standard_groups(24)
    assert all(g.order <= 24 for g in groups)
    names = {g.name for g in groups}
    assert "quaternion8" in names and "symmetric:4" in names


# -- element arithmetic ----------------------------------------------------------


def test_element_orders_q8(q8):
    assert q8.element_order(0) == 1
    assert q8.element_order(2) == 4  # i
    assert q8.element_order(1) == 2  # -1


def test_element_order_via_cycle_type():
    s5 = dv.symmetric(5)
    p = Permutation.from_cycles([(1, 2, 3), (4, 5)], 5)
    idx = s5.perm_images.index(p)
    assert s5.element_order(idx) == 6


def test_conjugate_by_identity(q8):
    for g in q8.elements():
        assert q8.conjugate(g, 0) == g


def test_power_nine_cycle_in_a10():
    a10_perm = Permutation.from_cycles([tuple(range(1, 10))], 10)
    assert a10_perm ** 2 == Permutation.from_cycles([(1, 3, 5, 7, 9, 2, 4, 6, 8)], 10)


def test_power_negative_and_zero(q8):
    i = 2
    assert q8.power(i, 0) == 0
    assert q8.power(i, -1) == q8.inv(i)
    assert q8.power(i, 4) == 0


# -- algebraic invariants -----------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_random_triples_associative_and_ab_ba_same_order(data):
    groups = [dv.quaternion8(), dv.symmetric(3), dv.dihedral(6), dv.cyclic(12)]
    G = data.draw(st.sampled_from(groups))
    a = data.draw(st.integers(0, G.order - 1))
    b = data.draw(st.integers(0, G.order - 1))
    c = data.draw(st.integers(0, G.order - 1))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.element_order(G.mul(a, b)) == G.element_order(G.mul(b, a))


def test_element_order_divides_group_order():
    for G in [dv.quaternion8(), dv.symmetric(4), dv.heisenberg27(), dv.dihedral(5)]:
        for g in G.elements():
            assert G.order % G.element_order(g) == 0


# -- quotients, subgroup extraction, isomorphism --------------------------------------


def test_subgroup_as_group(q8):
    sub, members = dv.subgroup_as_group(q8, [0, 1, 2, 3])  # <i>
    assert sub.order == 4
    assert members == [0, 1, 2, 3]
    assert dv.are_isomorphic(sub, dv.cyclic(4))


def test_quotient_group_q8_by_center(q8):
    quotient, coset_of = dv.quotient_group(q8, [0, 1])
    assert quotient.order == 4
    assert dv.are_isomorphic(quotient, dv.klein4())
    assert coset_of[0] == coset_of[1] == 0


def test_quotient_requires_normal():
    s3 = dv.symmetric(3)
    # <(1 2)> is not normal in S3
    transposition = next(
        g for g in s3.elements()
        if s3.element_order(g) == 2
    )
    with pytest.raises(ValueError, match="not normal"):
        dv.quotient_group(s3, [0, transposition])


def test_are_isomorphic_distinguishes_order8():
    assert dv.are_isomorphic(dv.cyclic(4), dv.cyclic(4))
    assert not dv.are_isomorphic(dv.cyclic(4), dv.klein4())
    assert not dv.are_isomorphic(dv.quaternion8(), dv.dihedral(4))
    assert dv.are_isomorphic(dv.dihedral(3), dv.symmetric(3))
    assert dv.are_isomorphic(
        dv.catalog("product:cyclic:3:cyclic:5"), dv.cyclic(15)
    )


def test_relabeled_copy_is_isomorphic(s4):
    rng = random.Random(3)
    perm = list(range(24))
    rng.shuffle(perm)
    g2 = dv.relabeled_copy(s4, perm)
    assert dv.are_isomorphic(s4, g2)


# -- JSON interchange ------------------------------------------------------------------


def test_group_json_table_roundtrip(q8):
    data = dv.group_to_json(q8)
    rebuilt = dv.group_from_json(data)
    assert rebuilt.table == q8.table


def test_group_json_generators():
    data = {
        "name": "z3xz3",
        "degree": 6,
        "generators": [[2, 3, 1, 4, 5, 6], [1, 2, 3, 5, 6, 4]],
    }
    g = dv.group_from_json(data)
    assert g.order == 9


def test_group_json_rejects_garbage():
    with pytest.raises(NotClosed):
        dv.group_from_json({"name": "x"})
    with pytest.raises(NotClosed):
        dv.group_from_json({"name": "x", "order": 3, "table": [[0]]})


def test_generating_set_generates():
    for G in [dv.symmetric(4), dv.heisenberg27(), dv.cyclic(12), dv.quaternion8()]:
        gens = G.generating_set()
        assert len(closure_from_generators(G, gens)) == G.order


def test_perm_group_table_consistent_with_composition(s3):
    index = {p.images: i for i, p in enumerate(s3.perm_images)}
    for i, p in enumerate(s3.perm_images):
        for j, q in enumerate(s3.perm_images):
            assert s3.table[i][j] == index[(p * q).images]
