"""Dedekind groups and the just-non-P predicates.

Each ``is_jn*`` predicate uses the minimal-normal reduction: G lacks P and
G/N has P for every minimal normal subgroup N.  Every property involved is
inherited by quotients, so this is equivalent to testing all proper
quotients; ``brute_force=True`` does exactly that instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import structure as st
from .errors import CapExceeded, NoComplement, NotDedekind, PreconditionViolated
from .group import FiniteGroup, Subgroup
from .morphisms import QuotientGroup


def is_dedekind(g: FiniteGroup, brute_force: bool = False) -> bool:
    """Every subgroup normal.  The fast path only checks cyclic subgroups."""
    if brute_force:
        return all(g.is_normal(h) for h in st.all_subgroups(g))
    return st.cyclic_subgroups_normal(g)


@dataclass
class DedekindDecomposition:
    q8_part: Subgroup | None
    elementary_two_part: Subgroup
    odd_abelian_part: Subgroup
    # abelian group whose 2-part has exponent > 2: reported as a single odd_abelian_part = G
    degenerate: bool = False

    def parts(self) -> list[Subgroup]:
        out = [self.q8_part] if self.q8_part is not None else []
        return out + [self.elementary_two_part, self.odd_abelian_part]


def _pi_part(g: FiniteGroup, two: bool) -> Subgroup:
    orders = g.element_orders
    is_two = (orders & (orders - 1)) == 0
    return Subgroup(g, np.flatnonzero(is_two if two else orders % 2 == 1))


def dedekind_decomposition(g: FiniteGroup) -> DedekindDecomposition:
    """Internal decomposition ``Q8 x E x O`` of a Dedekind group."""
    if not is_dedekind(g):
        raise NotDedekind("group has a non-normal subgroup")
    two = _pi_part(g, True)
    odd = _pi_part(g, False)
    if g.is_abelian():
        if np.all(g.element_orders[two.members] <= 2):
            return DedekindDecomposition(None, two, odd)
        return DedekindDecomposition(None, g.trivial, g.whole, degenerate=True)
    orders = g.element_orders
    fours = two.members[orders[two.members] == 4]
    q8 = None
    for a, b in itertools.combinations(fours.tolist(), 2):
        if g.mul(a, b) == g.mul(b, a):
            continue
        cand = g.subgroup([a, b])
        if cand.order == 8:
            q8, sq = cand, int(g.mul(a, a))
            break
    if q8 is None:
        raise AssertionError("nonabelian Dedekind group without a Q8 subgroup")
    involutions = two.members[orders[two.members] <= 2]
    span = g.subgroup([sq])
    e = g.trivial
    for v in involutions.tolist():
        if not span.mask[v]:
            e = g.generate([v], start=e)
            span = g.generate([v], start=span)
    return DedekindDecomposition(q8, e, odd)


def check_decomposition(g: FiniteGroup, dec: DedekindDecomposition) -> bool:
    """Parts commute elementwise, meet trivially and multiply to the order of g."""
    parts = dec.parts()
    if np.prod([p.order for p in parts]) != g.order:
        return False
    for x, y in itertools.combinations(parts, 2):
        if x.intersection(y).order != 1:
            return False
        if not np.array_equal(g.mul(x.members[:, None], y.members[None, :]), g.mul(y.members[None, :], x.members[:, None])):
            return False
    if dec.q8_part is not None:
        q = dec.q8_part
        if q.order != 8 or q.is_abelian() or np.count_nonzero(g.element_orders[q.members] == 2) != 1:
            return False
    if not dec.degenerate:
        if np.any(g.element_orders[dec.elementary_two_part.members] > 2):
            return False
        if np.any(g.element_orders[dec.odd_abelian_part.members] % 2 == 0):
            return False
    return dec.odd_abelian_part.is_abelian()


# -- just-non-P predicates ----------------------------------------------------


def _nontrivial_normals(g: FiniteGroup, brute_force: bool) -> list[Subgroup]:
    if brute_force:
        return [n for n in st.all_normal_subgroups(g, minimal_only=False).normals if not n.is_trivial()]
    return st.minimal_normal_subgroups(g)


def _quotients(g: FiniteGroup, brute_force: bool):
    for n in _nontrivial_normals(g, brute_force):
        yield QuotientGroup(g, n).quotient


def is_jnd(g: FiniteGroup, brute_force: bool = False) -> bool:
    if is_dedekind(g, brute_force):
        return False
    return all(is_dedekind(q, brute_force) for q in _quotients(g, brute_force))


def is_jna(g: FiniteGroup, brute_force: bool = False) -> bool:
    if g.is_abelian():
        return False
    if brute_force:
        return all(q.is_abelian() for q in _quotients(g, True))
    d = st.derived_subgroup(g)
    return all(d <= n for n in st.minimal_normal_subgroups(g))


def is_jns(g: FiniteGroup, brute_force: bool = False) -> bool:
    ds = st.derived_series(g)
    if ds.reaches_trivial():
        return False
    if brute_force:
        return all(st.is_solvable(q) for q in _quotients(g, True))
    # G/N is solvable iff the perfect residual lies in N
    return all(ds.last <= n for n in st.minimal_normal_subgroups(g))


def is_jnn(g: FiniteGroup, brute_force: bool = False) -> bool:
    lc = st.lower_central_series(g)
    if lc.reaches_trivial():
        return False
    if brute_force:
        return all(st.is_nilpotent(q) for q in _quotients(g, True))
    return all(lc.last <= n for n in st.minimal_normal_subgroups(g))


def is_jnt(g: FiniteGroup, brute_force: bool = False) -> bool:
    method = "subgroups" if brute_force else "auto"
    if st.is_t_group(g, method):
        return False
    return all(st.is_t_group(q, method) for q in _quotients(g, brute_force))


# -- solvable JND groups that are not JNA ---------------------------------------


@dataclass
class SolvableJndStructure:
    group: FiniteGroup
    a: Subgroup
    x: Subgroup
    p: int
    n: int


def _is_irreducible(g: FiniteGroup, a: Subgroup, x: Subgroup) -> bool:
    # irreducible iff the X-invariant subgroup generated by any a != 1 is all of A
    for v in a.members[1:]:
        if st.normal_closure_in(g, x, [v]) != a:
            return False
    return True


def _is_faithful(g: FiniteGroup, a: Subgroup, x: Subgroup) -> bool:
    conj = g.conj(x.members[:, None], a.members[None, :])
    fixes_all = np.all(conj == a.members[None, :], axis=1)
    return int(np.count_nonzero(fixes_all)) == 1


def solvable_jnd_structure(g: FiniteGroup) -> SolvableJndStructure:
    """The monolith ``A`` and a nonabelian Dedekind complement ``X``.

    Raises ``PreconditionViolated`` unless g is solvable, JND and not JNA, and
    ``NoComplement`` if the expected structure is missing.
    """
    if not st.is_solvable(g) or not is_jnd(g) or is_jna(g):
        raise PreconditionViolated("group must be solvable, JND and not JNA")
    a = st.monolith(g)
    if a is None:
        raise NoComplement("JND group without a monolith")
    pn = st.is_elementary_abelian(a)
    if pn is None:
        raise NoComplement("monolith is not elementary abelian")
    qg = QuotientGroup(g, a)
    q = qg.quotient
    phi = qg.projection.phi
    qgens = q.whole.generators() if q.order > 1 else ()
    # any element of G mapping onto each chosen quotient generator
    lifts = [int(np.flatnonzero(phi == k)[0]) for k in qgens]
    target = g.order // a.order
    for shifts in itertools.product(a.members.tolist(), repeat=len(lifts)):
        cand = g.subgroup(g.mul(np.array(lifts, dtype=np.intp), np.array(shifts, dtype=np.intp)))
        if cand.order != target or cand.intersection(a).order != 1:
            continue
        x = cand
        xg = x.as_group()
        if xg.is_abelian() or not is_dedekind(xg):
            raise NoComplement("complement is not a nonabelian Dedekind group")
        if not _is_faithful(g, a, x) or not _is_irreducible(g, a, x):
            raise NoComplement("action on the monolith is not faithful and irreducible")
        return SolvableJndStructure(g, a, x, pn[0], pn[1])
    raise NoComplement("monolith has no complement")


@dataclass
class C1Report:
    stabilizers_trivial: bool
    order_divides: bool
    q8_times_cyclic_odd: bool
    order_x: int
    modulus: int  # p^n - 1
    failed: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failed


def verify_c1(s: SolvableJndStructure) -> C1Report:
    """Stabilizers, the divisibility ``|X| | p^n - 1`` and ``X = Q8 x cyclic odd``."""
    g, a, x = s.group, s.a, s.x
    conj = g.conj(x.members[:, None], a.members[None, :])
    fixed = conj == a.members[None, :]
    # row 0 of x.members is the identity, column 0 of a.members is the identity
    stab_ok = not fixed[1:, 1:].any()
    modulus = s.p**s.n - 1
    divides = modulus % x.order == 0
    xg = x.as_group()
    struct_ok = False
    if is_dedekind(xg) and not xg.is_abelian():
        dec = dedekind_decomposition(xg)
        odd = dec.odd_abelian_part
        struct_ok = (
            dec.elementary_two_part.order == 1
            and int(xg.element_orders[odd.members].max()) == odd.order
            and check_decomposition(xg, dec)
        )
    failed = [name for name, ok in (("stabilizers", stab_ok), ("divides", divides), ("q8_times_cyclic", struct_ok)) if not ok]
    return C1Report(stab_ok, divides, struct_ok, x.order, modulus, failed)


# -- full report --------------------------------------------------------------


@dataclass
class ClassificationReport:
    order: int
    center_order: int
    derived_length: int | None  # None: not solvable
    nilpotent: bool
    solvable: bool
    abelian: bool
    perfect: bool
    dedekind: bool
    jna: bool
    jnd: bool
    t_group: bool | None  # None: beyond the T-test caps
    jnt: bool | None
    jns: bool
    jnn: bool
    monolithic: bool
    monolith_order: int | None
    semisimple: bool
    solvable_structure: SolvableJndStructure | None = None
    c1: C1Report | None = None
    decomposition: DedekindDecomposition | None = None

    def flags(self) -> dict:
        return {
            "abelian": self.abelian,
            "dedekind": self.dedekind,
            "jna": self.jna,
            "jnd": self.jnd,
            "jnn": self.jnn,
            "jns": self.jns,
            "jnt": self.jnt,
            "monolithic": self.monolithic,
            "nilpotent": self.nilpotent,
            "perfect": self.perfect,
            "semisimple": self.semisimple,
            "solvable": self.solvable,
            "t_group": self.t_group,
        }


def classify(g: FiniteGroup, oracle: bool = False) -> ClassificationReport:
    ds = st.derived_series(g)
    lc = st.lower_central_series(g)
    mono = st.monolith(g)
    dedekind = is_dedekind(g, oracle)
    jnd = is_jnd(g, oracle)
    jna = is_jna(g, oracle)
    try:
        t = st.is_t_group(g, "subgroups" if oracle else "auto")
        jnt = (not t) and all(st.is_t_group(q, "subgroups" if oracle else "auto") for q in _quotients(g, oracle))
    except CapExceeded:
        t = jnt = None
    report = ClassificationReport(
        order=g.order,
        center_order=g.center().order,
        derived_length=ds.length,
        nilpotent=lc.reaches_trivial(),
        solvable=ds.reaches_trivial(),
        abelian=g.is_abelian(),
        perfect=ds.stabilized_at == 0,
        dedekind=dedekind,
        jna=jna,
        jnd=jnd,
        t_group=t,
        jnt=jnt,
        jns=is_jns(g, oracle),
        jnn=is_jnn(g, oracle),
        monolithic=mono is not None,
        monolith_order=mono.order if mono is not None else None,
        semisimple=st.is_semisimple(g),
    )
    if dedekind:
        report.decomposition = dedekind_decomposition(g)
    if jnd and not jna and report.solvable:
        report.solvable_structure = solvable_jnd_structure(g)
        report.c1 = verify_c1(report.solvable_structure)
    return report
