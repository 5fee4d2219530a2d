import importlib

import pytest

from jndgroups.catalog import abelian, alternating, cyclic, dihedral, elementary_abelian, quaternion, symmetric
from jndgroups.catalog.build import matrix_group
from jndgroups.catalog.constructors import linear_action
from jndgroups.errors import NotDedekind, PreconditionViolated
from jndgroups.products import conjugation_action, direct_product, semidirect_product
from jndgroups.structure import fingerprint

# the package re-exports the classify() function under the module's name
cl = importlib.import_module("jndgroups.classify")


def linear_semidirect(p, matrices):
    """``GF(p)^2 x| X`` where X is generated by the given 2x2 matrices."""
    a = elementary_abelian(p, 2)
    x = matrix_group(matrices, p)
    return semidirect_product(a, x, [linear_action(a, p, m) for m in matrices])


# Q8 inside SL(2,5) and Q8 x Z3 inside GL(2,7) (the Z3 as scalars 2I)
Q8_IN_SL25 = (((0, -1), (1, 0)), ((2, 0), (0, 3)))
Q8Z3_IN_GL27 = (((0, -1), (1, 0)), ((2, 3), (3, -2)), ((2, 0), (0, 2)))


# -- Dedekind ---------------------------------------------------------------------


def test_dedekind_examples():
    assert cl.is_dedekind(abelian([4, 6]))
    assert cl.is_dedekind(quaternion())
    assert not cl.is_dedekind(symmetric(3))


def test_decomposition_examples():
    q8 = quaternion()
    d = cl.dedekind_decomposition(q8)
    assert d.q8_part.order == 8 and d.elementary_two_part.order == 1 and d.odd_abelian_part.order == 1
    g = direct_product(direct_product(quaternion(), cyclic(2)), cyclic(3))
    d = cl.dedekind_decomposition(g)
    assert [d.q8_part.order, d.elementary_two_part.order, d.odd_abelian_part.order] == [8, 2, 3]
    assert cl.check_decomposition(g, d)
    z4 = cl.dedekind_decomposition(cyclic(4))
    assert z4.q8_part is None and z4.degenerate and cl.check_decomposition(cyclic(4), z4)
    with pytest.raises(NotDedekind):
        cl.dedekind_decomposition(symmetric(3))


def test_decompositions_valid_over_catalog(catalog):
    for e in catalog:
        if cl.is_dedekind(e.group):
            d = cl.dedekind_decomposition(e.group)
            assert cl.check_decomposition(e.group, d), e.id
            assert (d.q8_part is not None) == (not e.group.is_abelian())


def test_nonabelian_dedekind_scan_matches_decomposition(catalog):
    from jndgroups.catalog import scan

    small = [e for e in catalog if e.order <= 24]
    hits = scan(lambda r: r.dedekind and not r.abelian, entries=small)
    assert hits == ["order8/q8", "order16/q8xz2", "order24/z3xq8"]


# -- just-non predicates ------------------------------------------------------------


def test_jnd_examples(ex72):
    assert cl.is_jnd(symmetric(3))
    assert not cl.is_jnd(quaternion())
    assert cl.is_jnd(ex72)


def test_jna_examples(ex72):
    assert cl.is_jna(symmetric(3))
    assert cl.is_jna(quaternion())
    assert not cl.is_jna(ex72)


def test_jns_jnn_jnt_examples():
    a5 = alternating(5)
    assert cl.is_jns(a5) and cl.is_jnn(a5)
    s3 = symmetric(3)
    assert cl.is_jnn(s3) and not cl.is_jns(s3)
    assert cl.is_jnt(dihedral(4))
    assert not cl.is_jnt(s3)


def test_fast_paths_match_brute_force(catalog):
    for e in catalog:
        if e.order > 64:
            continue
        g = e.group
        for f in (cl.is_dedekind, cl.is_jnd, cl.is_jna, cl.is_jns, cl.is_jnn, cl.is_jnt):
            assert f(g) == f(g, brute_force=True), (e.id, f.__name__)


# -- solvable structure -----------------------------------------------------------------


def test_structure_of_example72(ex72):
    s = cl.solvable_jnd_structure(ex72)
    assert (s.p, s.n, s.a.order, s.x.order) == (3, 2, 9, 8)
    assert fingerprint(s.x.as_group()) == fingerprint(quaternion())
    assert s.a.intersection(s.x).order == 1
    c1 = cl.verify_c1(s)
    assert c1.passed and c1.modulus == 8 and c1.order_x == 8


def test_structure_precondition():
    with pytest.raises(PreconditionViolated):
        cl.solvable_jnd_structure(symmetric(3))


def test_reconstruction_has_same_fingerprint(ex72):
    s = cl.solvable_jnd_structure(ex72)
    ag, xg = s.a.as_group(), s.x.as_group()
    rebuilt = semidirect_product(ag, xg, conjugation_action(ex72, s.a, ag, s.x, xg))
    assert fingerprint(rebuilt) == fingerprint(ex72)


@pytest.mark.parametrize("p, matrices, order, x_order", [(5, Q8_IN_SL25, 200, 8), (7, Q8Z3_IN_GL27, 1176, 24)])
def test_faithful_irreducible_extensions_are_jnd_not_jna(p, matrices, order, x_order):
    g = linear_semidirect(p, matrices)
    assert g.order == order
    r = cl.classify(g)
    assert r.jnd and not r.jna and r.solvable and r.center_order == 1
    assert r.monolith_order == p * p
    assert r.solvable_structure.x.order == x_order
    assert r.c1.passed and (p * p - 1) % x_order == 0


def test_c1_negative_control():
    # Z3 x Q8: X = Q8 centralizes A = Z3, so every stabilizer is all of X
    g = direct_product(cyclic(3), quaternion())
    fake = cl.SolvableJndStructure(g, g.factors[0], g.factors[1], 3, 1)
    rep = cl.verify_c1(fake)
    assert "stabilizers" in rep.failed and "divides" in rep.failed
    assert not rep.passed


# -- full reports ---------------------------------------------------------------------------


def test_classify_examples(ex72, s5):
    q8 = cl.classify(quaternion())
    assert q8.dedekind and q8.jna and not q8.jnd
    r = cl.classify(ex72)
    assert r.jnd and not r.jna and r.solvable and r.monolith_order == 9 and r.solvable_structure is not None
    r = cl.classify(s5)
    assert r.jnd and not r.solvable and r.semisimple and r.monolith_order == 60


def test_trivial_group_conventions():
    r = cl.classify(cyclic(1))
    assert r.solvable and r.nilpotent and r.perfect and r.semisimple and not r.monolithic
    assert r.dedekind and not r.jnd


def test_oracle_mode_agrees(small_catalog):
    for e in small_catalog[::3]:
        assert cl.classify(e.group).flags() == cl.classify(e.group, oracle=True).flags(), e.id


def test_report_flags_never_omitted(ex72):
    flags = cl.classify(ex72).flags()
    assert set(flags) == {
        "abelian", "dedekind", "jna", "jnd", "jnn", "jns", "jnt", "monolithic",
        "nilpotent", "perfect", "semisimple", "solvable", "t_group",
    }
    assert all(isinstance(v, bool) for v in flags.values())
