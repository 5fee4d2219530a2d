"""Reading and writing the line-oriented ``.grp`` group format.

::

    degree 5
    # comments may appear on any later line
    gen (0 1 2 3 4)
    gen (0 1)

Points are 0-based; ``gen ()`` is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GrpParseError
from .group import DEFAULT_CAP, FiniteGroup
from .perm import Permutation

_DEGREE_RE = re.compile(r"degree (\d+)")
_GEN_RE = re.compile(r"gen (\(.*\))")
_CYCLES_RE = re.compile(r"^(\((\d+( \d+)*)?\))+$")


@dataclass
class GrpFile:
    degree: int
    generators: list[Permutation]
    comments: list[str] = field(default_factory=list)

    def group(self, cap: int = DEFAULT_CAP, name: str | None = None) -> FiniteGroup:
        gens = self.generators or [Permutation.identity(self.degree)]
        return FiniteGroup(self.degree, gens, cap=cap, name=name)

    def dumps(self) -> str:
        lines = [f"degree {self.degree}"]
        lines += [f"# {c}" if c else "#" for c in self.comments]
        lines += [f"gen {g.cycle_str()}" for g in self.generators]
        return "\n".join(lines) + "\n"


def loads(text: str, path: str | None = None) -> GrpFile:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise GrpParseError(1, "empty file", path)
    m = _DEGREE_RE.fullmatch(lines[0])
    if not m:
        raise GrpParseError(1, f"expected 'degree <d>', got {lines[0]!r}", path)
    degree = int(m.group(1))
    if degree < 1:
        raise GrpParseError(1, "degree must be positive", path)
    gens = []
    comments = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line.startswith("#"):
            comments.append(line[1:].removeprefix(" "))
            continue
        m = _GEN_RE.fullmatch(line)
        if not m or not _CYCLES_RE.match(m.group(1)):
            raise GrpParseError(lineno, f"expected 'gen <cycles>', got {line!r}", path)
        try:
            gens.append(Permutation.parse(m.group(1), degree))
        except ValueError as exc:
            raise GrpParseError(lineno, str(exc), path) from None
    return GrpFile(degree, gens, comments)


def load(path) -> GrpFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise GrpParseError(1, "file is not UTF-8", str(path)) from None
    return loads(text, str(path))


def dumps_group(g: FiniteGroup, comments=()) -> str:
    return GrpFile(g.degree, list(g.generators), list(comments)).dumps()
