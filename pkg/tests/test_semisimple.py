import numpy as np
import pytest

from jndgroups.catalog import alternating, dicyclic, quaternion
from jndgroups.errors import CapExceeded, ConditionsFailed
from jndgroups.semisimple import (
    build_semisimple_jnd,
    build_wreath,
    check_theorem_conditions,
    compute_automorphisms,
    find_q8_witness,
    out_has_q8,
    preimage_group,
)
from jndgroups.structure import fingerprint

R4_WITNESS = "b1 b3 t(0 1)(2 3), b1 b4 t(0 2)(1 3)"


@pytest.fixture(scope="module")
def w1(a5_package):
    return build_wreath(a5_package, 1)


@pytest.fixture(scope="module")
def w2(a5_package):
    return build_wreath(a5_package, 2)


@pytest.fixture(scope="module")
def w4(a5_package):
    return build_wreath(a5_package, 4)


# -- automorphisms -----------------------------------------------------------------


def test_a5_automorphisms(a5_package):
    pkg = a5_package
    assert (pkg.aut.order, pkg.inn.order, pkg.out_group.order) == (120, 60, 2)
    assert pkg.rep.degree == 15 and pkg.rep.order == 120
    assert len(pkg.out_generators) == 1


def test_q8_automorphisms():
    pkg = compute_automorphisms(quaternion())
    assert (pkg.aut.order, pkg.inn.order, pkg.out_group.order) == (24, 4, 6)


@pytest.mark.parametrize("make", [lambda: alternating(5), quaternion, lambda: dicyclic(3)])
def test_automorphisms_preserve_multiplication(make):
    h = make()
    pkg = compute_automorphisms(h)
    t = h.table
    for a in pkg.aut.perms.astype(np.intp):
        assert np.array_equal(a[t], t[np.ix_(a, a)])
    # the faithful copy is an isomorphism onto rep
    assert len(set(pkg.to_rep.phi.tolist())) == pkg.aut.order


def test_out_a5_has_no_quaternion(a5_package):
    for m in range(1, 5):
        assert not out_has_q8(a5_package, m)
    # Out Q8 = S3 has no quaternion subgroup either
    assert not out_has_q8(compute_automorphisms(quaternion()), 1)


# -- wreath products and the maps nu~ and beta --------------------------------------


def test_wreath_orders(w1, w2, w4):
    assert w1.group.order == 120 and w1.out_wreath.order == 2
    assert w2.group.order == 28800 and w2.out_wreath.order == 8
    assert w4.group is None and w4.out_wreath.order == 384
    assert w4.aut_order == 120**4 * 24


def test_nu_kernel_is_inner_base(w1, w2):
    assert w1.nu_tilde.kernel().order == 60
    assert w2.nu_tilde.kernel().order == 3600
    for w in (w1, w2):
        assert w.nu_tilde.is_surjective()
        for g in w.inner_generators():
            assert w.nu(g) == w.out_wreath.element(0)


def test_beta_onto_symmetric(w2, w4):
    assert w2.beta.image().order == 2
    assert w4.beta.image().order == 24
    assert w2.beta.kernel().order == 4


def test_preimage_matches_nu_preimage(w2):
    d = w2.subgroup_from_words("t(0 1)")
    g = preimage_group(w2, d)
    full = w2.nu_tilde.preimage_of(d)
    assert g.order == full.order == 7200
    for p in g.generators:
        assert p in w2.group
        assert w2.out_wreath.index(w2.nu(p)) in d
    # beta of the preimage is beta(D)
    assert w2.beta.image_of(w2.nu_tilde.image_of(full)) == w2.beta.image_of(d)


def test_word_parser(w2, w4):
    assert w2.parse_word("") == 0
    b1 = w2.parse_word("b1")
    assert w2.out_wreath.element_orders[b1] == 2
    assert w2.parse_word("b1 b1") == 0
    swap = w2.parse_word("t(0 1)")
    assert w2.parse_word("t(0 1) b1 t(0 1)") == w2.parse_word("b2") != b1
    assert w2.beta.phi[swap] != 0
    for bad in ("b3", "b1_2", "x"):
        with pytest.raises(ValueError):
            w2.parse_word(bad)


# -- conditions ---------------------------------------------------------------------------


def test_conditions_r1(w1):
    c = check_theorem_conditions(w1, w1.out_wreath.whole)
    assert c.passed() and c.transitive and c.free and not c.nonabelian
    assert c.orbits == [[0]]


def test_conditions_r2(w2):
    c = check_theorem_conditions(w2, w2.subgroup_from_words("t(0 1)"))
    assert c.passed() and c.beta_order == 2
    c = check_theorem_conditions(w2, w2.subgroup_from_words("b1"))
    assert c.failed() == ["transitive"] and c.orbits == [[0], [1]]
    # the whole Out wreath is D8: transitive but not Dedekind
    c = check_theorem_conditions(w2, w2.out_wreath.whole)
    assert "dedekind" in c.failed()


def test_r4_witness_conditions(w4):
    d = w4.subgroup_from_words(R4_WITNESS)
    assert d.order == 8
    assert fingerprint(d.as_group()) == fingerprint(dicyclic(2))
    c = check_theorem_conditions(w4, d)
    assert c.passed() and c.nonabelian and c.r_even and c.predicts_not_jna
    # beta(D) is the Klein four-group acting regularly on the 4 blocks
    assert c.beta_order == 4 and c.free
    assert c.orbits == [[0, 1, 2, 3]]


def test_found_q8_witness(w4):
    d, (a, b) = find_q8_witness(w4)
    assert d.order == 8 and fingerprint(d.as_group()) == fingerprint(quaternion())
    assert check_theorem_conditions(w4, d).passed()
    assert find_q8_witness(build_wreath(w4.base_package, 2)) is None


# -- builds -------------------------------------------------------------------------------


def test_build_r1(a5_package, w1):
    b = build_semisimple_jnd(a5_package, 1, w1.out_wreath.whole, w=w1)
    assert b.group.order == 120
    assert b.report.jnd and b.report.semisimple and b.report.monolith_order == 60


def test_build_r2(a5_package, w2):
    b = build_semisimple_jnd(a5_package, 2, w2.subgroup_from_words("t(0 1)"), w=w2)
    r = b.report
    assert b.group.order == 7200
    assert r.jnd and r.jna and r.semisimple and r.monolith_order == 3600


def test_build_refuses_failed_conditions(a5_package, w2):
    with pytest.raises(ConditionsFailed) as info:
        build_semisimple_jnd(a5_package, 2, w2.subgroup_from_words("b1"), w=w2)
    assert info.value.failed == ["transitive"]
    assert info.value.report.orbits == [[0], [1]]


def test_build_r4_exceeds_cap_with_report(a5_package, w4):
    d = w4.subgroup_from_words(R4_WITNESS)
    with pytest.raises(CapExceeded) as info:
        build_semisimple_jnd(a5_package, 4, d, w=w4)
    assert info.value.report.passed()
    assert info.value.size == 60**4 * 8


def test_other_kinds(a5_package, w2):
    swap = w2.subgroup_from_words("t(0 1)")
    for kind in ("jns", "jnn"):
        b = build_semisimple_jnd(a5_package, 2, swap, w=w2, kind=kind, classify=False)
        assert b.group.order == 7200 and b.report is None
    with pytest.raises(ConditionsFailed):
        build_semisimple_jnd(a5_package, 2, w2.subgroup_from_words("b1"), w=w2, kind="jns")
