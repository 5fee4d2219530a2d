"""Loading and scanning the bundled ``.grp`` catalog."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Callable

from ..classify import ClassificationReport, classify
from ..errors import GrpParseError, MalformedEntry
from ..group import FiniteGroup
from ..grpfile import GrpFile, load
from .build import DATA_DIR

PREDICATES = ("dedekind", "jna", "jnd", "jnt", "jns", "jnn", "semisimple", "monolithic")


@dataclass
class CatalogEntry:
    id: str
    order: int
    grp: GrpFile
    path: Path
    tags: dict = field(default_factory=dict)

    @cached_property
    def group(self) -> FiniteGroup:
        g = self.grp.group(name=self.id)
        return g


def _declared(grp: GrpFile, key: str) -> tuple[int, str] | None:
    # comment lines start at file line 2
    for offset, c in enumerate(grp.comments):
        if c.startswith(key + " "):
            return offset + 2, c[len(key) + 1 :]
    return None


def load_entry(path: Path, root: Path) -> CatalogEntry:
    try:
        grp = load(path)
    except GrpParseError as exc:
        raise MalformedEntry(exc.line, exc.message, str(path)) from None
    entry_id = path.relative_to(root).with_suffix("").as_posix()
    declared_id = _declared(grp, "id")
    if declared_id is None or declared_id[1] != entry_id:
        raise MalformedEntry(declared_id[0] if declared_id else 1, f"id comment does not match {entry_id!r}", str(path))
    declared = _declared(grp, "order")
    if declared is None or not declared[1].isdigit():
        raise MalformedEntry(declared[0] if declared else 1, "missing '# order <n>' comment", str(path))
    entry = CatalogEntry(entry_id, int(declared[1]), grp, path)
    if entry.group.order != entry.order:
        raise MalformedEntry(declared[0], f"generators close to order {entry.group.order}, declared {entry.order}", str(path))
    if path.parent.name != f"order{entry.order}":
        raise MalformedEntry(declared[0], f"entry of order {entry.order} stored under {path.parent.name}", str(path))
    return entry


def load_catalog(max_order: int | None = None, root: Path | str = DATA_DIR) -> list[CatalogEntry]:
    """Entries sorted by (order, id), optionally only up to ``max_order``."""
    root = Path(root)
    found = []
    for path in root.glob("order*/*.grp"):
        try:
            order = int(path.parent.name.removeprefix("order"))
        except ValueError:
            raise MalformedEntry(1, "directory name is not order<N>", str(path)) from None
        if max_order is None or order <= max_order:
            found.append((order, path))
    found.sort(key=lambda t: (t[0], t[1].name))
    return [load_entry(path, root) for _, path in found]


def _as_test(predicate) -> Callable[[ClassificationReport], bool]:
    if callable(predicate):
        return predicate
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}; choose from {', '.join(PREDICATES)}")
    return lambda r: bool(r.flags()[predicate])


def scan(predicate, max_order: int | None = None, oracle: bool = False, entries=None) -> list[str]:
    """Ids of catalog entries whose classification satisfies ``predicate``.

    ``predicate`` is one of PREDICATES or a callable on a ClassificationReport.
    Each scanned entry's ``tags`` is filled with its report flags.
    """
    test = _as_test(predicate)
    entries = load_catalog(max_order) if entries is None else entries
    hits = []
    for e in entries:
        report = classify(e.group, oracle=oracle)
        e.tags = report.flags()
        if test(report):
            hits.append(e.id)
    return hits
