"""Definitions of the bundled catalog and the script that writes its data files.

Run ``python -m jndgroups.catalog.build`` to regenerate ``data/``.  Orders up
to 24 are complete (one entry per isomorphism type); orders 25 to 64 hold a
selection chosen to exercise the predicates.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from ..group import FiniteGroup
from ..grpfile import dumps_group
from ..morphisms import QuotientGroup
from ..products import direct_product, semidirect_product, shift_permutation
from .constructors import (
    abelian,
    alternating,
    cyclic,
    cyclic_extension,
    dicyclic,
    dihedral,
    elementary_abelian,
    linear_action,
    quaternion,
    regular_group,
    symmetric,
)

DATA_DIR = Path(__file__).parent / "data"


def matrix_group(gens, p: int) -> FiniteGroup:
    """Regular representation of the group generated by matrices over GF(p)."""
    mats = [tuple(tuple(x % p for x in row) for row in m) for m in gens]
    n = len(mats[0])

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)) for i in range(n))

    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for m in mats:
                y = mul(x, m)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return regular_group(sorted(seen), mul, mats)


def central_product(a: FiniteGroup, b: FiniteGroup, za: int, zb: int) -> FiniteGroup:
    """``(A x B) / <(za, zb)>`` for central elements of equal order."""
    g = direct_product(a, b)
    pair = g.index(shift_permutation(a.element(za), 0, g.degree) * shift_permutation(b.element(zb), a.degree, g.degree))
    return QuotientGroup(g, g.subgroup([pair])).quotient


def _times(*groups: FiniteGroup) -> FiniteGroup:
    out = groups[0]
    for h in groups[1:]:
        out = direct_product(out, h)
    return out


def _generalized_dihedral(a: FiniteGroup) -> FiniteGroup:
    return semidirect_product(a, cyclic(2), [a.inv])


def _z3_by_d4() -> FiniteGroup:
    # the rotation of D4 inverts Z3, the reflection centralizes it
    z3 = cyclic(3)
    return semidirect_product(z3, dihedral(4), [z3.inv, np.arange(3)])


def _z2sq_by_z4() -> FiniteGroup:
    v = elementary_abelian(2, 2)
    return semidirect_product(v, cyclic(4), [linear_action(v, 2, ((0, 1), (1, 0)))])


def _pauli() -> FiniteGroup:
    return central_product(cyclic(4), dihedral(4), 2, _center_gen(dihedral(4)))


def _center_gen(g: FiniteGroup) -> int:
    return int(g.center().members[1])


def _extraspecial(minus: bool) -> FiniteGroup:
    d4 = dihedral(4)
    left = quaternion() if minus else d4
    return central_product(left, d4, _center_gen(left), _center_gen(d4))


SL23 = (((1, 1), (0, 1)), ((1, 0), (1, 1)))
GL23 = SL23 + (((-1, 0), (0, 1)),)
HEISENBERG3 = (((1, 1, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 1), (0, 0, 1)))


def _linear_extension(p: int, k: int, matrix, m: int) -> FiniteGroup:
    a = elementary_abelian(p, k)
    return semidirect_product(a, cyclic(m), [linear_action(a, p, matrix)])


# (name, constructor); the id is "order<N>/<name>"
ENTRIES = [
    ("z1", lambda: cyclic(1)),
    ("z2", lambda: cyclic(2)),
    ("z3", lambda: cyclic(3)),
    ("z4", lambda: cyclic(4)),
    ("v4", lambda: abelian([2, 2])),
    ("z5", lambda: cyclic(5)),
    ("z6", lambda: cyclic(6)),
    ("s3", lambda: symmetric(3)),
    ("z7", lambda: cyclic(7)),
    ("z8", lambda: cyclic(8)),
    ("z4xz2", lambda: abelian([4, 2])),
    ("z2x2x2", lambda: elementary_abelian(2, 3)),
    ("d4", lambda: dihedral(4)),
    ("q8", quaternion),
    ("z9", lambda: cyclic(9)),
    ("z3x3", lambda: elementary_abelian(3, 2)),
    ("z10", lambda: cyclic(10)),
    ("d5", lambda: dihedral(5)),
    ("z11", lambda: cyclic(11)),
    ("z12", lambda: cyclic(12)),
    ("z6xz2", lambda: abelian([6, 2])),
    ("d6", lambda: dihedral(6)),
    ("a4", lambda: alternating(4)),
    ("dic3", lambda: dicyclic(3)),
    ("z13", lambda: cyclic(13)),
    ("z14", lambda: cyclic(14)),
    ("d7", lambda: dihedral(7)),
    ("z15", lambda: cyclic(15)),
    ("z16", lambda: cyclic(16)),
    ("z4xz4", lambda: abelian([4, 4])),
    ("z8xz2", lambda: abelian([8, 2])),
    ("z4xz2x2", lambda: abelian([4, 2, 2])),
    ("z2x2x2x2", lambda: elementary_abelian(2, 4)),
    ("d8", lambda: dihedral(8)),
    ("qd16", lambda: cyclic_extension(8, 2, 3)),
    ("q16", lambda: dicyclic(4)),
    ("m16", lambda: cyclic_extension(8, 2, 5)),
    ("z4_z4", lambda: cyclic_extension(4, 4, 3)),
    ("z2x2_z4", _z2sq_by_z4),
    ("d4xz2", lambda: _times(dihedral(4), cyclic(2))),
    ("q8xz2", lambda: _times(quaternion(), cyclic(2))),
    ("pauli", _pauli),
    ("z17", lambda: cyclic(17)),
    ("z18", lambda: cyclic(18)),
    ("z6xz3", lambda: abelian([6, 3])),
    ("d9", lambda: dihedral(9)),
    ("s3xz3", lambda: _times(symmetric(3), cyclic(3))),
    ("z3x3_z2", lambda: _generalized_dihedral(elementary_abelian(3, 2))),
    ("z19", lambda: cyclic(19)),
    ("z20", lambda: cyclic(20)),
    ("z10xz2", lambda: abelian([10, 2])),
    ("d10", lambda: dihedral(10)),
    ("dic5", lambda: dicyclic(5)),
    ("f20", lambda: cyclic_extension(5, 4, 2)),
    ("z21", lambda: cyclic(21)),
    ("z7_z3", lambda: cyclic_extension(7, 3, 2)),
    ("z22", lambda: cyclic(22)),
    ("d11", lambda: dihedral(11)),
    ("z23", lambda: cyclic(23)),
    ("z3_z8", lambda: cyclic_extension(3, 8, 2)),
    ("z24", lambda: cyclic(24)),
    ("sl23", lambda: matrix_group(SL23, 3)),
    ("dic6", lambda: dicyclic(6)),
    ("z4xs3", lambda: _times(cyclic(4), symmetric(3))),
    ("d12", lambda: dihedral(12)),
    ("z2xdic3", lambda: _times(cyclic(2), dicyclic(3))),
    ("z3_d4", _z3_by_d4),
    ("z12xz2", lambda: abelian([12, 2])),
    ("z3xd4", lambda: _times(cyclic(3), dihedral(4))),
    ("z3xq8", lambda: _times(cyclic(3), quaternion())),
    ("s4", lambda: symmetric(4)),
    ("z2xa4", lambda: _times(cyclic(2), alternating(4))),
    ("z2x2xs3", lambda: _times(abelian([2, 2]), symmetric(3))),
    ("z6xz2x2", lambda: abelian([6, 2, 2])),
    # selection above 24
    ("z25", lambda: cyclic(25)),
    ("z5x5", lambda: elementary_abelian(5, 2)),
    ("d13", lambda: dihedral(13)),
    ("z3x3x3", lambda: elementary_abelian(3, 3)),
    ("heisenberg27", lambda: matrix_group(HEISENBERG3, 3)),
    ("z9_z3", lambda: cyclic_extension(9, 3, 4)),
    ("d14", lambda: dihedral(14)),
    ("dic7", lambda: dicyclic(7)),
    ("z30", lambda: cyclic(30)),
    ("d15", lambda: dihedral(15)),
    ("d16", lambda: dihedral(16)),
    ("q32", lambda: dicyclic(8)),
    ("q8xz4", lambda: _times(quaternion(), cyclic(4))),
    ("q8xz2x2", lambda: _times(quaternion(), abelian([2, 2]))),
    ("d4xz4", lambda: _times(dihedral(4), cyclic(4))),
    ("extraspecial32plus", lambda: _extraspecial(False)),
    ("extraspecial32minus", lambda: _extraspecial(True)),
    ("s3xs3", lambda: _times(symmetric(3), symmetric(3))),
    ("z3x3_z4", lambda: _linear_extension(3, 2, ((0, 1), (-1, 0)), 4)),
    ("a4xz3", lambda: _times(alternating(4), cyclic(3))),
    ("d18", lambda: dihedral(18)),
    ("z13_z3", lambda: cyclic_extension(13, 3, 3)),
    ("q8xz5", lambda: _times(quaternion(), cyclic(5))),
    ("d20", lambda: dihedral(20)),
    ("f42", lambda: cyclic_extension(7, 6, 3)),
    ("gl23", lambda: matrix_group(GL23, 3)),
    ("q8xz6", lambda: _times(quaternion(), cyclic(6))),
    ("z2xsl23", lambda: _times(cyclic(2), matrix_group(SL23, 3))),
    ("z11_z5", lambda: cyclic_extension(11, 5, 3)),
    ("z2x2x2_z7", lambda: _linear_extension(2, 3, ((0, 0, 1), (1, 0, 1), (0, 1, 0)), 7)),
    ("a5", lambda: alternating(5)),
    ("q8xz2x2x2", lambda: _times(quaternion(), elementary_abelian(2, 3))),
    ("q8xz8", lambda: _times(quaternion(), cyclic(8))),
]


def build_entries():
    """Yield ``(id, group)`` for every catalog entry in file order."""
    for name, make in ENTRIES:
        g = make()
        g.name = name
        yield f"order{g.order}/{name}", g


def entry_text(entry_id: str, g: FiniteGroup) -> str:
    return dumps_group(g, [f"id {entry_id}", f"order {g.order}"])


def write_catalog(root: Path = DATA_DIR) -> list[str]:
    ids = []
    for entry_id, g in build_entries():
        path = root / f"{entry_id}.grp"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(entry_text(entry_id, g), encoding="utf-8")
        ids.append(entry_id)
    return ids


if __name__ == "__main__":
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else DATA_DIR
    print(f"wrote {len(write_catalog(root))} entries to {root}")
