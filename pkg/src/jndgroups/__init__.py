"""Finite permutation groups and the just-non-Dedekind classification."""

__version__ = "0.1.0"

from .classify import (
    ClassificationReport,
    classify,
    dedekind_decomposition,
    is_dedekind,
    is_jna,
    is_jnd,
    is_jnn,
    is_jns,
    is_jnt,
    solvable_jnd_structure,
    verify_c1,
)
from .errors import (
    CapExceeded,
    ConditionsFailed,
    GroupError,
    GrpParseError,
    InvalidAction,
    MalformedEntry,
    NoComplement,
    NotDedekind,
    NotNormal,
    PreconditionViolated,
)
from .group import FiniteGroup, Subgroup, center, closure, conjugacy_classes, element_order, is_subgroup_normal, normal_closure
from .morphisms import Homomorphism, QuotientGroup, hom_image, hom_kernel, quotient
from .perm import Permutation
from .products import direct_product, semidirect_product

__all__ = [
    "CapExceeded",
    "ClassificationReport",
    "ConditionsFailed",
    "FiniteGroup",
    "GroupError",
    "GrpParseError",
    "Homomorphism",
    "InvalidAction",
    "MalformedEntry",
    "NoComplement",
    "NotDedekind",
    "NotNormal",
    "Permutation",
    "PreconditionViolated",
    "QuotientGroup",
    "Subgroup",
    "center",
    "classify",
    "closure",
    "conjugacy_classes",
    "dedekind_decomposition",
    "direct_product",
    "element_order",
    "hom_image",
    "hom_kernel",
    "is_dedekind",
    "is_jna",
    "is_jnd",
    "is_jnn",
    "is_jns",
    "is_jnt",
    "is_subgroup_normal",
    "normal_closure",
    "quotient",
    "semidirect_product",
    "solvable_jnd_structure",
    "verify_c1",
]
