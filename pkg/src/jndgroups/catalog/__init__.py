from .constructors import (
    abelian,
    alternating,
    cyclic,
    cyclic_extension,
    dicyclic,
    dihedral,
    elementary_abelian,
    example_72,
    quaternion,
    symmetric,
)
from .store import PREDICATES, CatalogEntry, load_catalog, scan

__all__ = [
    "CatalogEntry",
    "PREDICATES",
    "abelian",
    "alternating",
    "cyclic",
    "cyclic_extension",
    "dicyclic",
    "dihedral",
    "elementary_abelian",
    "example_72",
    "load_catalog",
    "quaternion",
    "scan",
    "symmetric",
]
