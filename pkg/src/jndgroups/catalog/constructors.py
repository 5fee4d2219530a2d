"""Named groups as permutation groups."""

from __future__ import annotations

from functools import reduce
from typing import Callable, Hashable, Sequence

import numpy as np

from ..group import DEFAULT_CAP, FiniteGroup
from ..perm import Permutation
from ..products import direct_product, semidirect_product


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return FiniteGroup(1, [Permutation.identity(1)], name="Z1")
    return FiniteGroup(n, [Permutation(list(range(1, n)) + [0])], name=f"Z{n}")


def abelian(type_vector: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups of the given orders."""
    parts = [cyclic(n) for n in type_vector if n > 1] or [cyclic(1)]
    g = reduce(direct_product, parts)
    g.name = "x".join(f"Z{n}" for n in type_vector)
    return g


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    g = abelian([p] * k)
    g.name = f"Z{p}^{k}"
    return g


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        g = cyclic(2)
    elif n == 2:
        g = FiniteGroup(4, ["(0 1)(2 3)", "(0 2)(1 3)"])
    else:
        rot = Permutation(list(range(1, n)) + [0])
        ref = Permutation([(-i) % n for i in range(n)])
        g = FiniteGroup(n, [rot, ref])
    g.name = f"D{n}"
    return g


def regular_group(labels: Sequence[Hashable], mul: Callable, gens: Sequence[Hashable], cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Left regular representation of a group given by a multiplication rule."""
    pos = {lab: i for i, lab in enumerate(labels)}
    perms = [Permutation([pos[mul(g, h)] for h in labels]) for g in gens]
    return FiniteGroup(len(labels), perms, cap=cap)


def dicyclic(n: int) -> FiniteGroup:
    """``<a, x | a^(2n), x^2 = a^n, x a x^-1 = a^-1>``, order 4n.

    Generalized quaternion when n is a power of 2; ``dicyclic(2)`` is Q8.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = 2 * n
    labels = [(k, e) for e in (0, 1) for k in range(m)]

    def mul(u, v):
        (k, e), (l, f) = u, v
        k = (k + (l if e == 0 else -l)) % m
        if e + f == 2:
            return ((k + n) % m, 0)
        return (k, e + f)

    g = regular_group(labels, mul, [(1, 0), (0, 1)])
    g.name = "Q8" if n == 2 else f"Dic{n}"
    return g


def quaternion() -> FiniteGroup:
    return dicyclic(2)


def symmetric(n: int) -> FiniteGroup:
    if n <= 1:
        g = FiniteGroup(1, [Permutation.identity(1)])
    elif n == 2:
        g = FiniteGroup(2, ["(0 1)"])
    else:
        g = FiniteGroup(n, [Permutation(list(range(1, n)) + [0]), Permutation.from_cycles([(0, 1)], n)])
    g.name = f"S{n}"
    return g


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        g = FiniteGroup(max(n, 1), [Permutation.identity(max(n, 1))])
    else:
        g = FiniteGroup(n, [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)])
    g.name = f"A{n}"
    return g


def cyclic_extension(n: int, m: int, k: int) -> FiniteGroup:
    """``Z_n x| Z_m`` with the generator of Z_m acting as ``x -> x^k``."""
    if pow(k, m, n) != 1 % n:
        raise ValueError("k^m must be 1 mod n")
    a = cyclic(n)
    x = cyclic(m)
    g = semidirect_product(a, x, [a.power(np.arange(a.order), k)])
    g.name = f"Z{n}:Z{m}[{k}]"
    return g


def vector_coordinates(a: FiniteGroup, p: int) -> np.ndarray:
    """Coordinates over GF(p) of each element of an abelian group built by ``abelian``.

    Coordinate j counts occurrences of generator j in the element's word.
    """
    coords = np.zeros((a.order, len(a.generators)), dtype=np.intp)
    for i in range(a.order):
        for k in a.word(i):
            coords[i, k] += 1
    return coords % p


def linear_action(a: FiniteGroup, p: int, matrix) -> np.ndarray:
    """Automorphism of an elementary abelian group given by a matrix on column vectors."""
    coords = vector_coordinates(a, p)
    lookup = {tuple(c): i for i, c in enumerate(coords.tolist())}
    m = np.asarray(matrix, dtype=np.intp) % p
    images = (coords @ m.T) % p
    return np.array([lookup[tuple(r)] for r in images.tolist()], dtype=np.intp)


# Q8 acting on (Z3)^2: i -> [[0, 1], [-1, 0]], j -> [[1, 1], [1, -1]]
EXAMPLE_72_MATRICES = (((0, 1), (-1, 0)), ((1, 1), (1, -1)))


def example_72() -> FiniteGroup:
    """The order-72 semidirect product ``(Z3)^2 x| Q8``.

    ``dicyclic(2)`` has generators ``a`` (the quaternion i) and ``x`` (j).
    The result is solvable and JND without being JNA; ``normal_part`` is the
    monolith and ``complement`` the copy of Q8.
    """
    a = elementary_abelian(3, 2)
    q = quaternion()
    autos = [linear_action(a, 3, m) for m in EXAMPLE_72_MATRICES]
    # the action must be faithful: only the identity of Q8 acts trivially
    img = FiniteGroup(a.order, [Permutation(au.tolist()) for au in autos])
    if img.order != q.order:
        raise AssertionError("Q8 -> GL(2,3) is not injective")
    g = semidirect_product(a, q, autos)
    g.name = "example72"
    return g
