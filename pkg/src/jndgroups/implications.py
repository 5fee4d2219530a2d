"""Structural consequences of the JND property, checked on concrete groups."""

from __future__ import annotations

from dataclasses import dataclass

from . import structure as st
from .classify import ClassificationReport, classify, is_dedekind
from .group import FiniteGroup
from .morphisms import QuotientGroup

IMPLICATIONS = (
    "jnd_monolithic",
    "jnd_second_derived_is_monolith",
    "jnd_nontrivial_center_gives_jna_solvable",
    "jnd_centerless_solvable_gives_jnt",
    "jnd_nonsolvable_gives_semisimple",
    "solvable_jnd_not_jna_has_structure",
    "structure_satisfies_c1",
    "dedekind_quotients_dedekind",
    "dedekind_is_t_group",
)


@dataclass(frozen=True)
class ImplicationCheck:
    name: str
    applicable: bool
    holds: bool

    @property
    def violated(self) -> bool:
        return self.applicable and not self.holds


def second_derived(g: FiniteGroup):
    """``G''``; the series stops repeating once it stabilizes."""
    terms = st.derived_series(g).terms
    return terms[min(2, len(terms) - 1)]


def _dedekind_quotients(g: FiniteGroup) -> bool:
    lattice = st.all_normal_subgroups(g)
    return all(is_dedekind(QuotientGroup(g, n).quotient) for n in lattice.normals if not n.is_trivial())


def check_implications(g: FiniteGroup, report: ClassificationReport | None = None) -> list[ImplicationCheck]:
    r = report or classify(g)
    mono = st.monolith(g) if r.jnd else None
    checks = []

    def add(name, applicable, holds):
        checks.append(ImplicationCheck(name, bool(applicable), bool(holds) if applicable else True))

    add("jnd_monolithic", r.jnd, r.monolithic)
    second = second_derived(g)
    add("jnd_second_derived_is_monolith", r.jnd and not second.is_trivial(), second == mono)
    add("jnd_nontrivial_center_gives_jna_solvable", r.jnd and r.center_order > 1, r.jna and r.solvable)
    # needs G/monolith nonabelian, i.e. not JNA: S3 is a centerless solvable JND T-group
    add(
        "jnd_centerless_solvable_gives_jnt",
        r.jnd and not r.jna and r.center_order == 1 and r.solvable and r.t_group is not None,
        r.t_group is False and r.jnt is True,
    )
    add("jnd_nonsolvable_gives_semisimple", r.jnd and not r.solvable, r.semisimple)
    add("solvable_jnd_not_jna_has_structure", r.jnd and r.solvable and not r.jna, r.solvable_structure is not None)
    add("structure_satisfies_c1", r.c1 is not None, r.c1 is not None and r.c1.passed)
    add("dedekind_quotients_dedekind", r.dedekind and g.order <= st.LATTICE_CAP, r.dedekind and _dedekind_quotients(g))
    add("dedekind_is_t_group", r.dedekind and r.t_group is not None, r.t_group)
    return checks


def violations(g: FiniteGroup, report: ClassificationReport | None = None) -> list[str]:
    return [c.name for c in check_implications(g, report) if c.violated]
