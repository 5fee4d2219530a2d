"""Homomorphisms given by generator images, and quotient groups."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import CapExceeded, NotNormal
from .group import FiniteGroup, Subgroup
from .perm import Permutation

# quotients are realised as regular permutation groups; keep them desk sized
QUOTIENT_INDEX_CAP = 5000


def _depth_layers(g: FiniteGroup):
    depth = np.zeros(g.order, dtype=np.intp)
    parent = g._word_parent
    for i in range(1, g.order):
        depth[i] = depth[parent[i]] + 1
    sorter = np.argsort(depth, kind="stable")
    bounds = np.flatnonzero(np.diff(depth[sorter])) + 1
    return np.split(sorter, bounds)[1:] if g.order > 1 else []


class Homomorphism:
    """The homomorphism ``source -> target`` sending generator k to ``images[k]``.

    The map is evaluated on every source element at construction and checked
    against every edge of the source's Cayley graph, so a list of images that
    does not respect the source relations is rejected.
    """

    def __init__(self, source: FiniteGroup, target: FiniteGroup, images):
        self.source = source
        self.target = target
        imgs = []
        for im in images:
            if isinstance(im, (Permutation, str, tuple, list)):
                imgs.append(target.index(im))
            else:
                imgs.append(int(im))
        if len(imgs) != len(source.generators):
            raise ValueError("one image per source generator is required")
        self.image_of_generator = np.array(imgs, dtype=np.intp)
        self.phi = self._evaluate()

    def _evaluate(self):
        src, tgt = self.source, self.target
        imgs = self.image_of_generator
        phi = np.zeros(src.order, dtype=np.intp)
        for layer in _depth_layers(src):
            phi[layer] = tgt.mul(phi[src._word_parent[layer]], imgs[src._word_gen[layer]])
        everything = np.arange(src.order)
        for k, g in enumerate(src.gen_indices):
            lhs = phi[src.mul(everything, g)]
            rhs = tgt.mul(phi, imgs[k])
            if not np.array_equal(lhs, rhs):
                raise ValueError("generator images do not define a homomorphism")
        phi.flags.writeable = False
        return phi

    def __call__(self, x):
        return self.phi[x]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(self.phi == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.target, np.unique(self.phi), gens=self.image_of_generator)

    def is_injective(self) -> bool:
        return self.kernel().order == 1

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def image_of(self, h: Subgroup) -> Subgroup:
        return Subgroup(self.target, np.unique(self.phi[h.members]))

    def preimage_of(self, h: Subgroup) -> Subgroup:
        return Subgroup(self.source, np.flatnonzero(h.mask[self.phi]))

    @classmethod
    def identity(cls, g: FiniteGroup) -> "Homomorphism":
        return cls(g, g, g.gen_indices)


def hom_kernel(h: Homomorphism) -> Subgroup:
    return h.kernel()


def hom_image(h: Homomorphism) -> Subgroup:
    return h.image()


class QuotientGroup:
    """``base / kernel`` realised as the regular action on left cosets."""

    def __init__(self, base: FiniteGroup, kernel: Subgroup):
        if kernel.parent is not base:
            raise ValueError("kernel must be a subgroup of base")
        if not base.is_normal(kernel):
            raise NotNormal("subgroup is not normal")
        self.base = base
        self.kernel = kernel
        index = base.order // kernel.order
        if kernel.order == 1:
            # G / 1 is G itself; reuse the faithful representation
            self.labels = np.arange(base.order)
            self.quotient = base
            self.projection = Homomorphism.identity(base)
            return
        if index > QUOTIENT_INDEX_CAP:
            raise CapExceeded("quotient index", QUOTIENT_INDEX_CAP, index)
        labels = np.full(base.order, -1, dtype=np.intp)
        reps = []
        for i in range(base.order):
            if labels[i] < 0:
                labels[base.mul(i, kernel.members)] = len(reps)
                reps.append(i)
        reps = np.array(reps, dtype=np.intp)
        self.labels = labels
        gens = [Permutation(labels[base.mul(g, reps)].tolist()) for g in base.gen_indices]
        q = FiniteGroup(index, gens)
        # the element carrying the trivial coset to coset c represents c
        of_coset = np.empty(index, dtype=np.intp)
        of_coset[q.perms[:, 0]] = np.arange(index)
        self.quotient = q
        self.projection = Homomorphism(base, q, of_coset[labels[base.gen_indices]])

    @cached_property
    def cosets(self) -> list[np.ndarray]:
        sorter = np.argsort(self.labels, kind="stable")
        bounds = np.flatnonzero(np.diff(self.labels[sorter])) + 1
        return [np.sort(c) for c in np.split(sorter, bounds)]

    @property
    def order(self) -> int:
        return self.quotient.order


def quotient(g: FiniteGroup, n: Subgroup) -> QuotientGroup:
    return QuotientGroup(g, n)
