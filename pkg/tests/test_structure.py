import numpy as np
import pytest

from jndgroups import structure as st
from jndgroups.catalog import abelian, alternating, cyclic, dihedral, quaternion, symmetric
from jndgroups.errors import CapExceeded
from jndgroups.products import direct_product


@pytest.fixture(scope="module")
def a5_wr_z2(a5_package):
    from jndgroups.semisimple import build_wreath, preimage_group

    w = build_wreath(a5_package, 2)
    return preimage_group(w, w.subgroup_from_words("t(0 1)"))


# -- commutators and series ---------------------------------------------------------


def test_commutator_examples():
    z = abelian([2, 4])
    assert st.derived_subgroup(z).is_trivial()
    assert st.derived_subgroup(symmetric(3)).order == 3
    q8 = quaternion()
    assert st.derived_subgroup(q8) == q8.center()


def test_commutator_matches_brute_force(catalog):
    for e in catalog:
        g = e.group
        if g.order > 64:
            continue
        whole = g.whole
        z = g.center()
        for x, y in ((whole, whole), (whole, z), (st.derived_subgroup(g), whole)):
            assert st.commutator_subgroup(g, x, y) == st.commutator_subgroup_brute(g, x, y), e.id


def test_series_examples(ex72):
    z6 = cyclic(6)
    ds = st.derived_series(z6)
    assert ds.orders() == [6, 1] and ds.length == 1
    assert st.derived_series(ex72).orders() == [72, 18, 9, 1]
    a5 = st.derived_series(alternating(5))
    assert a5.orders() == [60] and a5.stabilized_at == 0 and a5.length is None
    assert st.lower_central_series(symmetric(3)).orders() == [6, 3]
    assert st.lower_central_series(quaternion()).orders() == [8, 2, 1]


def test_predicates():
    assert st.is_solvable(quaternion()) and st.is_nilpotent(quaternion())
    assert not st.is_solvable(symmetric(5))
    assert st.is_perfect(alternating(5)) and not st.is_perfect(symmetric(5))


def test_series_terms_are_normal_and_descending(catalog):
    for e in catalog:
        g = e.group
        for series in (st.derived_series(g), st.lower_central_series(g)):
            terms = series.terms
            assert all(g.is_normal(t) for t in terms), e.id
            assert all(b < a for a, b in zip(terms, terms[1:])), e.id


# -- normal lattice, monolith, radical ------------------------------------------------


def test_lattice_examples():
    a5 = alternating(5)
    lat = st.all_normal_subgroups(a5)
    assert [n.order for n in lat.normals] == [1, 60]
    assert lat.monolith.order == 60
    d4 = dihedral(4)
    lat = st.all_normal_subgroups(d4)
    assert len(lat.normals) == 6
    assert lat.monolith == d4.center()


def test_lattice_invariants(catalog):
    for e in catalog:
        g = e.group
        lat = st.all_normal_subgroups(g)
        orders = [n.order for n in lat.normals]
        assert 1 in orders and g.order in orders
        for n in lat.normals:
            assert g.is_normal(n, brute_force=True)
            # a union of whole conjugacy classes
            ids = np.unique(g.class_ids[n.members])
            assert sum(len(g.classes[i]) for i in ids) == n.order
        mono = st.monolith(g)
        assert (mono is not None) == (len(lat.minimal) == 1), e.id
        if mono is not None:
            assert all(mono <= n for n in lat.normals if not n.is_trivial())


def test_monolith_examples(ex72, s5):
    assert st.monolith(abelian([2, 2])) is None
    assert st.monolith(ex72).order == 9
    assert st.monolith(s5).order == 60


def test_radical_examples(s5):
    assert st.solvable_radical(dihedral(5)).order == 10
    assert st.solvable_radical(s5).order == 1
    g = direct_product(alternating(5), cyclic(3))
    r = st.solvable_radical(g)
    assert r == g.factors[1]
    assert st.is_semisimple(alternating(5)) and not st.is_semisimple(quaternion())


def test_radical_matches_lattice_brute_force(catalog):
    for e in catalog:
        assert st.solvable_radical(e.group) == st.solvable_radical_brute(e.group), e.id


def test_large_wreath_uses_minimal_only_mode(a5_wr_z2):
    g = a5_wr_z2
    assert g.order == 7200
    lat = st.all_normal_subgroups(g)
    assert [m.order for m in lat.minimal] == [3600]
    assert st.monolith(g).order == 3600
    assert st.is_semisimple(g)


# -- subgroups and the T property -----------------------------------------------------


def test_all_subgroups_examples():
    assert len(st.all_subgroups(cyclic(7))) == 2
    assert len(st.all_subgroups(quaternion())) == 6
    assert len(st.all_subgroups(symmetric(3))) == 6
    assert len(st.all_subgroups(symmetric(4))) == 30
    with pytest.raises(CapExceeded):
        st.all_subgroups(alternating(5), max_order=50)


def test_subgroups_satisfy_lagrange(catalog):
    for e in catalog:
        if e.order > 32:
            continue
        for h in st.all_subgroups(e.group):
            assert e.order % h.order == 0


def test_t_group_examples():
    assert st.is_t_group(symmetric(3))
    assert not st.is_t_group(dihedral(4))
    assert st.is_t_group(quaternion())
    # reflection subgroup of D4 is subnormal but not normal
    d4 = dihedral(4)
    refl = d4.subgroup([int(d4.gen_indices[1])])
    assert st.is_subnormal(d4, refl) and not d4.is_normal(refl)


def test_t_methods_agree(catalog):
    for e in catalog:
        if e.order > 64:
            continue
        g = e.group
        a = st.is_t_group(g, "subgroups")
        assert a == st.is_t_group(g, "normals") == st.is_t_group(g, "auto"), e.id


def test_dedekind_groups_are_t(catalog):
    from jndgroups.classify import is_dedekind

    for e in catalog:
        if is_dedekind(e.group):
            assert st.is_t_group(e.group), e.id


# -- invariants --------------------------------------------------------------------------


def test_elementary_abelian():
    from jndgroups.catalog import elementary_abelian

    assert st.is_elementary_abelian(elementary_abelian(3, 2)) == (3, 2)
    assert st.is_elementary_abelian(cyclic(4)) is None
    assert st.is_elementary_abelian(cyclic(1)) is None


def test_abelian_invariants():
    # prime-power form: Z12 x Z2 = Z4 x Z3 x Z2
    assert st.abelian_invariants(abelian([12, 2])) == (2, 3, 4)
    assert st.abelian_invariants(abelian([2, 2, 8])) == (2, 2, 8)
    assert st.abelianization_invariants(symmetric(4)) == (2,)
    assert st.abelianization_invariants(quaternion()) == (2, 2)
