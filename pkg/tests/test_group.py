import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from jndgroups import (
    CapExceeded,
    FiniteGroup,
    Homomorphism,
    InvalidAction,
    NotNormal,
    Permutation,
    center,
    closure,
    conjugacy_classes,
    direct_product,
    element_order,
    hom_image,
    hom_kernel,
    is_subgroup_normal,
    normal_closure,
    quotient,
    semidirect_product,
)
from jndgroups.catalog import abelian, alternating, cyclic, dihedral, elementary_abelian, quaternion, symmetric
from jndgroups.products import trivial_action
from jndgroups.structure import fingerprint

perm6 = hst.permutations(list(range(6))).map(Permutation)
gens6 = hst.lists(perm6, min_size=1, max_size=3)


def class_sizes(g):
    return sorted(len(c) for c in conjugacy_classes(g))


# -- closure --------------------------------------------------------------------


def test_closure_examples():
    assert closure(3, ["(0 1 2)"]).order == 3
    assert closure(5, ["(0 1 2 3 4)", "(0 1)"]).order == 120
    assert closure(2, [Permutation.identity(2)]).order == 1


def test_closure_identity_first_and_deterministic():
    a = closure(5, ["(0 1 2 3 4)", "(0 1)"])
    b = closure(5, ["(0 1 2 3 4)", "(0 1)"])
    assert a.element(0).is_identity()
    assert np.array_equal(a.perms, b.perms)


def test_closure_cap():
    with pytest.raises(CapExceeded):
        closure(6, ["(0 1 2 3 4 5)", "(0 1)"], cap=100)


def test_generators_must_share_degree():
    with pytest.raises(ValueError):
        FiniteGroup(4, [Permutation.identity(3)])


def test_index_and_membership(s5):
    p = Permutation.parse("(0 2 4)", 5)
    assert s5.element(s5.index(p)) == p
    a5 = alternating(5)
    assert p in a5 and Permutation.parse("(0 1)", 5) not in a5


def test_words_evaluate_to_elements(s5):
    for i in range(0, s5.order, 7):
        acc = Permutation.identity(5)
        for k in s5.word(i):
            acc = acc * s5.generators[k]
        assert acc == s5.element(i)
    assert s5.word_str(0) == "e"


# -- element orders, classes, center ---------------------------------------------


def test_element_order_examples(s5):
    q8 = quaternion()
    assert element_order(s5, 0) == 1
    assert element_order(s5, Permutation.parse("(0 1 2 3 4)", 5)) == 5
    # the quaternion i is the first generator of dicyclic(2)
    assert element_order(q8, int(q8.gen_indices[0])) == 4


def test_conjugacy_class_examples(ex72):
    assert class_sizes(symmetric(3)) == [1, 2, 3]
    assert class_sizes(quaternion()) == [1, 1, 2, 2, 2]
    assert class_sizes(abelian([2, 6])) == [1] * 12
    assert class_sizes(symmetric(5)) == [1, 10, 15, 20, 20, 24, 30]


def test_classes_sorted_lexicographically(s5):
    classes = conjugacy_classes(s5)
    assert [c.tolist() for c in classes] == sorted(c.tolist() for c in classes)
    assert classes[0].tolist() == [0]


def test_center_examples(ex72):
    assert center(abelian([4, 2])).order == 8
    assert center(quaternion()).order == 2
    assert center(ex72).order == 1


# -- normality and normal closure -------------------------------------------------


def test_normal_closure_examples():
    s3 = symmetric(3)
    assert normal_closure(s3, [0]).order == 1
    assert normal_closure(s3, [s3.index(Permutation.parse("(0 1)", 3))]).order == 6
    assert normal_closure(s3, [s3.index(Permutation.parse("(0 1 2)", 3))]).order == 3


def test_normality_examples():
    s3 = symmetric(3)
    refl = s3.subgroup([s3.index(Permutation.parse("(0 1)", 3))])
    assert not is_subgroup_normal(s3, refl)
    assert is_subgroup_normal(s3, s3.center())
    q8 = quaternion()
    for x in range(8):
        assert is_subgroup_normal(q8, q8.subgroup([x]))


def test_generator_normality_matches_brute_force(catalog):
    for e in catalog:
        g = e.group
        if g.order > 200:
            continue
        for x in range(0, g.order, max(1, g.order // 12)):
            h = g.subgroup([x])
            assert g.is_normal(h) == g.is_normal(h, brute_force=True), e.id


# -- products ----------------------------------------------------------------------


def test_direct_product_examples():
    v = direct_product(cyclic(2), cyclic(2))
    assert v.order == 4 and v.exponent == 2
    q = direct_product(quaternion(), cyclic(3))
    assert q.order == 24 and [f.order for f in q.factors] == [8, 3]
    s = direct_product(symmetric(4), cyclic(1))
    assert fingerprint(s) == fingerprint(symmetric(4))


def test_semidirect_examples(ex72):
    assert ex72.order == 72
    assert ex72.normal_part.order == 9 and ex72.complement.order == 8
    assert ex72.normal_part.intersection(ex72.complement).order == 1
    assert ex72.is_normal(ex72.normal_part)
    z3 = cyclic(3)
    s3 = semidirect_product(z3, cyclic(2), [z3.inv])
    assert s3.order == 6 and not s3.is_abelian()
    assert fingerprint(s3) == fingerprint(symmetric(3))


def test_trivial_action_is_direct_product():
    a, x = dihedral(4), cyclic(3)
    assert fingerprint(semidirect_product(a, x, trivial_action(a, x))) == fingerprint(direct_product(a, x))


def test_semidirect_rejects_non_automorphism():
    z4 = cyclic(4)
    with pytest.raises(InvalidAction):
        semidirect_product(z4, cyclic(2), [np.array([0, 2, 1, 3])])


def test_semidirect_rejects_action_breaking_relations():
    # inversion has order 2, so it cannot be the image of a generator of Z3
    z5 = cyclic(5)
    with pytest.raises(InvalidAction):
        semidirect_product(z5, cyclic(3), [z5.inv])


# -- homomorphisms and quotients ---------------------------------------------------


def test_homomorphism_kernel_image():
    s4 = symmetric(4)
    z2 = cyclic(2)
    # sign map: the 4-cycle is odd, the transposition is odd
    sign = Homomorphism(s4, z2, [1, 1])
    assert hom_kernel(sign).order == 12 and hom_image(sign).order == 2
    ident = Homomorphism.identity(s4)
    assert hom_kernel(ident).order == 1


def test_homomorphism_rejects_bad_images():
    with pytest.raises(ValueError):
        Homomorphism(cyclic(3), cyclic(2), [1])


def test_quotient_examples(s5, ex72):
    assert quotient(s5, s5.trivial).order == 120
    a5 = s5.subgroup([s5.index(Permutation.parse("(0 1 2)", 5)), s5.index(Permutation.parse("(0 1 2 3 4)", 5))])
    assert a5.order == 60 and quotient(s5, a5).order == 2
    q = quotient(ex72, ex72.normal_part).quotient
    assert q.order == 8 and not q.is_abelian()
    assert int(np.count_nonzero(q.element_orders == 2)) == 1


def test_quotient_rejects_non_normal():
    s3 = symmetric(3)
    with pytest.raises(NotNormal):
        quotient(s3, s3.subgroup([s3.index(Permutation.parse("(0 1)", 3))]))


def test_quotient_fibres_have_kernel_size(ex72):
    q = quotient(ex72, ex72.normal_part)
    counts = np.bincount(q.projection.phi)
    assert np.all(counts == 9)
    assert q.projection.kernel() == ex72.normal_part
    assert q.projection.is_surjective()


# -- properties over random permutation groups -------------------------------------


@settings(max_examples=40, deadline=None)
@given(gens6)
def test_random_group_invariants(gens):
    g = FiniteGroup(6, gens)
    assert math.factorial(6) % g.order == 0
    # closed under multiplication and inverses
    idx = np.arange(g.order)
    assert np.array_equal(np.sort(g.mul(idx, g.gen_indices[0])), idx)
    assert np.array_equal(g.mul(idx, g.inv), np.zeros(g.order, dtype=g.mul(idx, g.inv).dtype))
    classes = conjugacy_classes(g)
    assert sum(len(c) for c in classes) == g.order
    assert all(g.order % len(c) == 0 for c in classes)
    z = center(g)
    assert z.order == sum(len(c) == 1 for c in classes)
    assert g.order % z.order == 0


@settings(max_examples=30, deadline=None)
@given(gens6, perm6)
def test_random_normal_closure_and_quotient(gens, seed):
    g = FiniteGroup(6, gens)
    x = g.index(seed) if seed in g else int(g.gen_indices[0])
    n = normal_closure(g, [x])
    assert x in n
    assert g.is_normal(n) and g.is_normal(n, brute_force=True)
    q = quotient(g, n)
    assert q.order * n.order == g.order
    assert q.projection.kernel() == n
