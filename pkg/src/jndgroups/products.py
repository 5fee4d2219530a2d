"""Direct and semidirect products as permutation groups on disjoint blocks."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InvalidAction
from .group import DEFAULT_CAP, FiniteGroup, Subgroup
from .morphisms import Homomorphism
from .perm import Permutation


def shift_permutation(p: Permutation, offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for i, j in enumerate(p.images):
        images[offset + i] = offset + j
    return Permutation(images)


def direct_product(a: FiniteGroup, b: FiniteGroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """``a x b`` on ``degree(a) + degree(b)`` points.

    The result carries ``factors``, the two embedded copies as subgroups.
    """
    degree = a.degree + b.degree
    gens = [shift_permutation(g, 0, degree) for g in a.generators]
    gens += [shift_permutation(g, a.degree, degree) for g in b.generators]
    g = FiniteGroup(degree, gens, cap=cap)
    k = len(a.generators)
    g.factors = (g.subgroup(g.gen_indices[:k]), g.subgroup(g.gen_indices[k:]))
    return g


def is_automorphism(a: FiniteGroup, images) -> bool:
    """Whether a map on element indices of ``a`` is an automorphism."""
    images = np.asarray(images, dtype=np.intp)
    if images.shape != (a.order,) or not np.array_equal(np.sort(images), np.arange(a.order)):
        return False
    everything = np.arange(a.order)
    for g in a.gen_indices:
        if not np.array_equal(images[a.mul(everything, g)], a.mul(images, images[g])):
            return False
    return True


def semidirect_product(a: FiniteGroup, x: FiniteGroup, action, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """``a`` extended by ``x`` acting through ``action``.

    ``action`` gives, for each generator of ``x``, an automorphism of ``a`` as
    a permutation of a's element indices.  It may also be a ``Homomorphism``
    from ``x`` into a group of such permutations.

    The result acts on a's element set (``a`` by left translation, ``x`` by
    the automorphisms) plus a copy of x's points, which makes it faithful
    whatever the kernel of the action.  Attributes ``normal_part`` and
    ``complement`` hold the two subgroups.
    """
    if isinstance(action, Homomorphism):
        if action.source is not x:
            raise InvalidAction("action must be defined on x")
        autos = [action.target.perms[i] for i in action.image_of_generator]
    else:
        autos = list(action)
    if len(autos) != len(x.generators):
        raise InvalidAction("one automorphism per generator of x is required")
    autos = [np.asarray(au, dtype=np.intp) for au in autos]
    for au in autos:
        if not is_automorphism(a, au):
            raise InvalidAction("action image is not an automorphism")
    n = a.order
    degree = n + x.degree
    gens = []
    for t in a.gen_indices:
        images = list(range(degree))
        images[:n] = a.mul(t, np.arange(n)).tolist()
        gens.append(Permutation(images))
    for au, xg in zip(autos, x.generators):
        images = au.tolist() + [n + j for j in xg.images]
        gens.append(Permutation(images))
    g = FiniteGroup(degree, gens, cap=cap)
    if g.order != a.order * x.order:
        raise InvalidAction("automorphism assignment does not respect the relations of x")
    k = len(a.gen_indices)
    g.normal_part = g.subgroup(g.gen_indices[:k])
    g.complement = g.subgroup(g.gen_indices[k:])
    return g


def conjugation_action(g: FiniteGroup, normal: Subgroup, normal_group: FiniteGroup, acting: Subgroup, acting_group: FiniteGroup) -> list[np.ndarray]:
    """Automorphisms of ``normal_group`` induced by the generators of ``acting_group``.

    ``normal_group``/``acting_group`` are standalone copies (``Subgroup.as_group``)
    of the subgroups ``normal``/``acting`` of ``g``.
    """
    emb_n = normal.embedding(normal_group)
    back = np.full(g.order, -1, dtype=np.intp)
    back[emb_n] = np.arange(normal_group.order)
    emb_x = acting.embedding(acting_group)
    autos = []
    for gi in acting_group.gen_indices:
        conj = g.conj(emb_x[gi], emb_n)
        autos.append(back[conj])
    return autos


def trivial_action(a: FiniteGroup, x: FiniteGroup) -> Sequence[np.ndarray]:
    return [np.arange(a.order) for _ in x.generators]
