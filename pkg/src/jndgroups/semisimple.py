"""Automorphism groups, the wreath products over Aut H and Out H, and the
construction of nonsolvable JND groups as preimages ``nu~^-1(D)``."""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import structure as st
from .catalog.constructors import symmetric
from .classify import ClassificationReport, is_dedekind
from .classify import classify as classify_group
from .errors import CapExceeded, ConditionsFailed
from .group import DEFAULT_CAP, FiniteGroup, Subgroup
from .morphisms import Homomorphism, QuotientGroup
from .perm import Permutation

AUT_ORDER_CAP = 120


# -- automorphisms ----------------------------------------------------------


def _small_generating_set(h: FiniteGroup) -> list[int]:
    """A generating set, preferring two generators from small order classes."""
    if h.order == 1:
        return []
    counts = np.bincount(h.element_orders)
    cost = counts[h.element_orders]
    best = None
    reps = [int(c[0]) for c in h.classes[1:]]
    for x in reps:
        for y in range(1, h.order):
            if best is not None and cost[x] * cost[y] >= best[0]:
                continue
            if h.subgroup([x, y]).order == h.order:
                best = (cost[x] * cost[y], [x, y] if x != y else [x])
    if best is not None:
        return best[1]
    return list(h.generate(h.gen_indices).generators())


def extend_to_map(h: FiniteGroup, gens, images, target: FiniteGroup | None = None) -> np.ndarray | None:
    """Extend ``gens[k] -> images[k]`` to a homomorphism on all of ``h``.

    Returns the map as an index array, or None if the assignment is not
    consistent or ``gens`` does not generate ``h``.
    """
    target = target or h
    gens = np.asarray(gens, dtype=np.intp)
    images = np.asarray(images, dtype=np.intp)
    phi = np.full(h.order, -1, dtype=np.intp)
    phi[0] = 0
    frontier = np.array([0])
    while frontier.size:
        src = h.mul(frontier[:, None], gens[None, :]).ravel()
        img = target.mul(phi[frontier][:, None], images[None, :]).ravel()
        known = phi[src] >= 0
        if np.any(phi[src[known]] != img[known]):
            return None
        new_src, first = np.unique(src[~known], return_index=True)
        new_img = img[~known][first]
        # the same new element reached twice must agree
        check = img[~known]
        if np.any(new_img[np.searchsorted(new_src, src[~known])] != check):
            return None
        phi[new_src] = new_img
        frontier = new_src
    if np.any(phi < 0):
        return None
    return phi


def automorphism_list(h: FiniteGroup, max_order: int = AUT_ORDER_CAP) -> list[np.ndarray]:
    """Every automorphism of ``h`` as an index permutation, by backtracking.

    Generator images are restricted to elements of the same order, and each
    partial assignment must preserve the orders of pairwise products.
    """
    if h.order > max_order:
        raise CapExceeded("compute_automorphisms", max_order, h.order)
    gens = _small_generating_set(h)
    if not gens:
        return [np.zeros(1, dtype=np.intp)]
    orders = h.element_orders
    cands = [np.flatnonzero(orders == orders[g]) for g in gens]
    pair_orders = {(i, j): orders[int(h.mul(gens[i], gens[j]))] for i in range(len(gens)) for j in range(i)}
    out = []

    def search(chosen):
        k = len(chosen)
        if k == len(gens):
            phi = extend_to_map(h, gens, chosen)
            if phi is not None and np.unique(phi).size == h.order:
                out.append(phi)
            return
        for c in cands[k].tolist():
            if all(orders[int(h.mul(chosen[j], c))] == pair_orders[(k, j)] for j in range(k)):
                search(chosen + [c])

    search([])
    return out


def _greedy_generators(degree: int, perms: list[np.ndarray]) -> list[Permutation]:
    chosen: list[Permutation] = []
    group = None
    for p in perms:
        perm = Permutation(p.tolist())
        if group is not None and perm in group:
            continue
        chosen.append(perm)
        group = FiniteGroup(degree, chosen)
    if not chosen:
        chosen = [Permutation.identity(degree)]
    return chosen


@dataclass
class AutPackage:
    """Aut H acting on the element indices of H, with Inn H and Out H.

    ``rep`` is a smaller faithful copy of ``aut`` (acting on a union of
    Aut-orbits of H that generates H) and ``to_rep`` the isomorphism.
    """

    h: FiniteGroup
    aut: FiniteGroup
    inn: Subgroup
    out: QuotientGroup
    conjugation: Homomorphism
    rep: FiniteGroup
    to_rep: Homomorphism

    @cached_property
    def from_rep(self) -> np.ndarray:
        back = np.empty(self.rep.order, dtype=np.intp)
        back[self.to_rep.phi] = np.arange(self.aut.order)
        return back

    @property
    def out_group(self) -> FiniteGroup:
        return self.out.quotient

    @cached_property
    def out_generators(self) -> list[Permutation]:
        """A reduced, identity-free generating list of Out H."""
        q = self.out_group
        return [q.element(int(i)) for i in q.generate(q.gen_indices).generators()]

    def out_lift(self, o: int) -> int:
        """An element of Aut H mapping to ``o`` in Out H."""
        return int(np.flatnonzero(self.out.projection.phi == o)[0])


def _faithful_orbits(h: FiniteGroup, aut: FiniteGroup) -> np.ndarray:
    """Smallest union of Aut-orbits on H that generates H."""
    labels = np.full(h.order, -1, dtype=np.intp)
    orbits = []
    gens = aut.perms[aut.gen_indices]
    for x in range(1, h.order):
        if labels[x] >= 0:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = set(gens[:, frontier].ravel().tolist()) - orbit
            orbit |= nxt
            frontier = list(nxt)
        for y in orbit:
            labels[y] = len(orbits)
        orbits.append(np.array(sorted(orbit), dtype=np.intp))
    orbits.sort(key=lambda o: (len(o), o.tolist()))
    for size in range(1, len(orbits) + 1):
        best = None
        for combo in itertools.combinations(orbits, size):
            pts = np.sort(np.concatenate(combo))
            if h.generate(pts).order == h.order and (best is None or len(pts) < len(best)):
                best = pts
        if best is not None:
            return best
    return np.arange(1, h.order)


def compute_automorphisms(h: FiniteGroup, max_order: int = AUT_ORDER_CAP) -> AutPackage:
    autos = automorphism_list(h, max_order)
    gens = _greedy_generators(h.order, autos)
    aut = FiniteGroup(h.order, gens, name=f"Aut({h.name})" if h.name else None)
    if aut.order != len(autos):
        raise AssertionError("automorphisms do not form a group")
    everything = np.arange(h.order)
    conj_imgs = [Permutation(h.conj(np.full(h.order, g), everything).tolist()) for g in h.gen_indices]
    conjugation = Homomorphism(h, aut, conj_imgs)
    inn = conjugation.image()
    out = QuotientGroup(aut, inn)
    if h.order > 1:
        pts = _faithful_orbits(h, aut)
    else:
        pts = np.array([0])
    relabel = {int(p): i for i, p in enumerate(pts)}
    rep_gens = [Permutation([relabel[int(g.images[p])] for p in pts]) for g in aut.generators]
    rep = FiniteGroup(len(pts), rep_gens)
    if rep.order != aut.order:
        raise AssertionError("orbit representation of Aut H is not faithful")
    to_rep = Homomorphism(aut, rep, rep.gen_indices)
    return AutPackage(h, aut, inn, out, conjugation, rep, to_rep)


def _find_q8(g: FiniteGroup) -> tuple[int, int] | None:
    """Two elements generating a quaternion subgroup of order 8, if any."""
    fours = np.flatnonzero(g.element_orders == 4)
    if fours.size < 2:
        return None
    sq = g.mul(fours, fours)
    for i, a in enumerate(fours.tolist()):
        for j in range(fours.size):
            b = int(fours[j])
            if sq[j] != sq[i] or b in (a, int(g.inv[a])):
                continue
            if int(g.conj(b, a)) != int(g.inv[a]):
                continue
            if g.subgroup([a, b]).order == 8:
                return a, b
    return None


def direct_power(g: FiniteGroup, m: int) -> FiniteGroup:
    from .products import direct_product

    out = g
    for _ in range(m - 1):
        out = direct_product(out, g)
    return out


def out_has_q8(pkg: AutPackage, m: int = 1) -> bool:
    """Whether ``(Out H)^m`` contains a copy of Q8."""
    return _find_q8(direct_power(pkg.out_group, m)) is not None


# -- wreath products ----------------------------------------------------------


def _block_perm(blocks: list[Permutation | None], sigma: Permutation, d: int) -> Permutation:
    """Point ``(i, j)`` goes to ``(sigma(i), y_i(j))``; ``None`` means identity."""
    r = len(blocks)
    images = [0] * (r * d)
    for i, y in enumerate(blocks):
        s = sigma.images[i]
        for j in range(d):
            images[i * d + j] = s * d + (y.images[j] if y is not None else j)
    return Permutation(images)


def _top_generators(r: int) -> list[Permutation]:
    if r == 1:
        return []
    gens = [Permutation.from_cycles([(0, 1)], r)]
    if r > 2:
        gens.append(Permutation(list(range(1, r)) + [0]))
    return gens


class WreathGroup:
    """``(Aut H)^r x| S_r`` and ``(Out H)^r x| S_r`` with the maps nu~ and beta.

    Both are realised imprimitively: coordinate i acts on block i of the
    points, and the top permutation moves whole blocks.  ``group`` (the Aut
    side) is only enumerated when its order is within ``cap``; the Out side,
    ``beta`` and elementwise ``nu`` are always available.
    """

    def __init__(self, pkg: AutPackage, r: int, cap: int = DEFAULT_CAP):
        if r < 1:
            raise ValueError("r must be at least 1")
        self.base_package = pkg
        self.r = r
        self.d = pkg.rep.degree
        self.m = pkg.out_group.degree
        self.aut_order = pkg.aut.order ** r * math.factorial(r)
        self.out_order = pkg.out_group.order ** r * math.factorial(r)
        tops = _top_generators(r)
        ident = [None] * r
        out_gens = []
        for i in range(r):
            for og in pkg.out_generators:
                blocks = list(ident)
                blocks[i] = og
                out_gens.append(_block_perm(blocks, Permutation.identity(r), self.m))
        out_gens += [_block_perm(ident, s, self.m) for s in tops]
        self.out_wreath = FiniteGroup(r * self.m, out_gens, name=f"Out^{r}:S{r}")
        self.symmetric = symmetric(r)
        self.beta = Homomorphism(
            self.out_wreath, self.symmetric, [self.block_permutation(p) for p in self.out_wreath.generators]
        )
        self.group = None
        self.nu_tilde = None
        if self.aut_order <= cap:
            gens = []
            for i in range(r):
                for rg in pkg.rep.generators:
                    blocks = list(ident)
                    blocks[i] = rg
                    gens.append(_block_perm(blocks, Permutation.identity(r), self.d))
            gens += [_block_perm(ident, s, self.d) for s in tops]
            self.group = FiniteGroup(r * self.d, gens, cap=cap, name=f"Aut^{r}:S{r}")
            if self.group.order != self.aut_order:
                raise AssertionError("wreath product has the wrong order")
            self.nu_tilde = Homomorphism(self.group, self.out_wreath, [self.nu(p) for p in self.group.generators])

    # -- coordinates

    def block_permutation(self, perm: Permutation, block: int | None = None) -> Permutation:
        block = block or (self.d if perm.degree == self.r * self.d else self.m)
        return Permutation([perm.images[i * block] // block for i in range(self.r)])

    def coordinates(self, perm: Permutation) -> tuple[list[int], Permutation]:
        """Decode an Aut-side element into (Aut H indices per block, sigma)."""
        sigma = self.block_permutation(perm, self.d)
        rep = self.base_package.rep
        coords = []
        for i in range(self.r):
            s = sigma.images[i]
            y = [perm.images[i * self.d + j] - s * self.d for j in range(self.d)]
            coords.append(int(self.base_package.from_rep[rep.index(Permutation(y))]))
        return coords, sigma

    def out_coordinates(self, perm: Permutation) -> tuple[list[int], Permutation]:
        sigma = self.block_permutation(perm, self.m)
        q = self.base_package.out_group
        coords = []
        for i in range(self.r):
            s = sigma.images[i]
            y = [perm.images[i * self.m + j] - s * self.m for j in range(self.m)]
            coords.append(q.index(Permutation(y)))
        return coords, sigma

    def aut_element(self, coords, sigma: Permutation) -> Permutation:
        rep = self.base_package.rep
        to_rep = self.base_package.to_rep.phi
        return _block_perm([rep.element(int(to_rep[c])) for c in coords], sigma, self.d)

    def out_element(self, coords, sigma: Permutation) -> Permutation:
        q = self.base_package.out_group
        return _block_perm([q.element(int(c)) for c in coords], sigma, self.m)

    def nu(self, perm: Permutation) -> Permutation:
        """nu~ on a single Aut-side element."""
        coords, sigma = self.coordinates(perm)
        proj = self.base_package.out.projection.phi
        return self.out_element([int(proj[c]) for c in coords], sigma)

    def inner_generators(self) -> list[Permutation]:
        pkg = self.base_package
        ident = [None] * self.r
        out = []
        for i in range(self.r):
            for a in pkg.inn.generators():
                blocks = list(ident)
                blocks[i] = pkg.rep.element(int(pkg.to_rep.phi[a]))
                out.append(_block_perm(blocks, Permutation.identity(self.r), self.d))
        return out

    def lift(self, out_index: int) -> Permutation:
        """An Aut-side element mapping to the given Out-side element."""
        coords, sigma = self.out_coordinates(self.out_wreath.element(out_index))
        return self.aut_element([self.base_package.out_lift(c) for c in coords], sigma)

    # -- named Out-side generators for words

    def parse_word(self, text: str) -> int:
        """Element of the Out side from a word such as ``b1 b3 t(0 1)(2 3)``.

        ``b<i>`` is the first generator of Out H in coordinate i (1-based),
        ``b<i>_<k>`` the k-th; ``t<cycles>`` is a top permutation of the
        blocks 0..r-1.  Factors multiply left to right.
        """
        q = self.base_package
        tokens = re.findall(r"b\d+(?:_\d+)?|t(?:\([\d ]*\))+|\S", text)
        result = Permutation.identity(self.r * self.m)
        for tok in tokens:
            if tok.startswith("b"):
                body = tok[1:].split("_")
                i = int(body[0]) - 1
                k = int(body[1]) - 1 if len(body) > 1 else 0
                if not 0 <= i < self.r or not 0 <= k < len(q.out_generators):
                    raise ValueError(f"no out-wreath generator {tok!r}")
                blocks = [None] * self.r
                blocks[i] = q.out_generators[k]
                factor = _block_perm(blocks, Permutation.identity(self.r), self.m)
            elif tok.startswith("t"):
                factor = _block_perm([None] * self.r, Permutation.parse(tok[1:], self.r), self.m)
            elif tok == "*":
                continue
            else:
                raise ValueError(f"unexpected token {tok!r} in {text!r}")
            result = result * factor
        return self.out_wreath.index(result)

    def subgroup_from_words(self, text: str) -> Subgroup:
        """Subgroup of the Out side generated by comma-separated words."""
        words = [w for w in text.split(",") if w.strip()]
        return self.out_wreath.subgroup([self.parse_word(w) for w in words])


def build_wreath(pkg: AutPackage, r: int, cap: int = DEFAULT_CAP) -> WreathGroup:
    return WreathGroup(pkg, r, cap)


def preimage_group(w: WreathGroup, d: Subgroup, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """``nu~^-1(D)``: the inner base together with one lift per generator of D."""
    size = w.base_package.inn.order ** w.r * d.order
    if size > cap:
        raise CapExceeded("preimage_group", cap, size)
    gens = w.inner_generators() + [w.lift(x) for x in d.generators()]
    if not gens:
        gens = [Permutation.identity(w.r * w.d)]
    g = FiniteGroup(w.r * w.d, gens, cap=cap)
    if g.order != size:
        raise AssertionError(f"preimage has order {g.order}, expected {size}")
    return g


# -- theorem conditions ---------------------------------------------------------


@dataclass
class TheoremConditions:
    r: int
    d_order: int
    beta_order: int
    dedekind: bool
    nonabelian: bool
    solvable: bool
    nilpotent: bool
    transitive: bool
    free: bool
    r_even: bool
    orbits: list[list[int]] = field(default_factory=list)

    def failed(self, kind: str = "jnd") -> list[str]:
        need = {"jnd": ("dedekind", "transitive", "free"), "jns": ("solvable", "transitive"), "jnn": ("nilpotent", "transitive")}[kind]
        return [name for name in need if not getattr(self, name)]

    def passed(self, kind: str = "jnd") -> bool:
        return not self.failed(kind)

    @property
    def predicts_not_jna(self) -> bool:
        return self.passed() and self.nonabelian and self.r_even


def check_theorem_conditions(w: WreathGroup, d: Subgroup) -> TheoremConditions:
    """Dedekind-ness of D and whether beta(D) acts freely and transitively on the blocks."""
    dg = d.as_group()
    image = w.beta.image_of(d)
    sym = w.symmetric
    r = w.r
    # orbits of beta(D) on the points 0..r-1
    perms = sym.perms[image.members]
    label = list(range(r))
    for row in perms.tolist():
        for i, j in enumerate(row):
            a, b = label[i], label[j]
            if a != b:
                label = [a if x == b else x for x in label]
    orbits = {}
    for i, lab in enumerate(label):
        orbits.setdefault(lab, []).append(i)
    moving = perms[1:] if image.order > 1 else perms[:0]
    free = bool(np.all(moving != np.arange(r)))
    return TheoremConditions(
        r=r,
        d_order=d.order,
        beta_order=image.order,
        dedekind=is_dedekind(dg),
        nonabelian=not dg.is_abelian(),
        solvable=st.is_solvable(dg),
        nilpotent=st.is_nilpotent(dg),
        transitive=len(orbits) == 1,
        free=free,
        r_even=r % 2 == 0,
        orbits=sorted(orbits.values()),
    )


@dataclass
class SemisimpleBuild:
    group: FiniteGroup
    conditions: TheoremConditions
    report: ClassificationReport | None


def build_semisimple_jnd(
    pkg: AutPackage, r: int, d: Subgroup, w: WreathGroup | None = None, cap: int = DEFAULT_CAP, kind: str = "jnd", classify: bool = True
) -> SemisimpleBuild:
    """``nu~^-1(D)`` after checking the conditions for ``kind`` (jnd, jns or jnn)."""
    w = w or build_wreath(pkg, r, cap)
    cond = check_theorem_conditions(w, d)
    if not cond.passed(kind):
        raise ConditionsFailed(cond.failed(kind), cond)
    try:
        g = preimage_group(w, d, cap)
    except CapExceeded as exc:
        exc.report = cond
        raise
    report = classify_group(g) if classify else None
    return SemisimpleBuild(g, cond, report)


def find_q8_witness(w: WreathGroup) -> tuple[Subgroup, tuple[int, int]] | None:
    """First quaternion subgroup D of the Out side with beta(D) regular on the blocks."""
    ow = w.out_wreath
    fours = np.flatnonzero(ow.element_orders == 4)
    sq = ow.mul(fours, fours)
    for i, a in enumerate(fours.tolist()):
        for j, b in enumerate(fours.tolist()):
            if sq[i] != sq[j] or b in (a, int(ow.inv[a])) or int(ow.conj(b, a)) != int(ow.inv[a]):
                continue
            d = ow.subgroup([a, b])
            if d.order != 8:
                continue
            cond = check_theorem_conditions(w, d)
            if cond.passed() and cond.nonabelian:
                return d, (a, b)
    return None
