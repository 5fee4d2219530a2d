"""Series, normal subgroups, radicals and the T-group test.

Functions taking a group accept either a ``FiniteGroup`` or a ``Subgroup``;
for a subgroup the computation happens inside its parent and every returned
subgroup lives in that parent.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Union

import numpy as np
from sympy import factorint

from .errors import CapExceeded
from .group import FiniteGroup, Subgroup

GroupLike = Union[FiniteGroup, Subgroup]

LATTICE_CAP = 20_000
SUBGROUP_CAP = 400


def _split(g: GroupLike) -> tuple[FiniteGroup, Subgroup]:
    if isinstance(g, Subgroup):
        return g.parent, g
    return g, g.whole


def normal_closure_in(parent: FiniteGroup, within: Subgroup, seeds) -> Subgroup:
    """Smallest subgroup normal in ``within`` containing ``seeds``."""
    s = parent.generate(np.asarray(seeds, dtype=np.intp))
    j = np.array(within.generators(), dtype=np.intp)
    if not j.size:
        return s
    while True:
        gens = np.array(s.generators(), dtype=np.intp)
        if not gens.size:
            return s
        conj = parent.conj(j[:, None], gens[None, :]).ravel()
        outside = conj[~s.mask[conj]]
        if not outside.size:
            return s
        s = parent.generate(np.unique(outside), start=s)


def commutator_subgroup(g: FiniteGroup, x: Subgroup, y: Subgroup) -> Subgroup:
    """``[X, Y]``: the normal closure in ``<X, Y>`` of commutators of generators."""
    xs = np.array(x.generators(), dtype=np.intp)
    ys = np.array(y.generators(), dtype=np.intp)
    if not xs.size or not ys.size:
        return g.trivial
    seeds = np.unique(g.commutator(xs[:, None], ys[None, :]).ravel())
    return normal_closure_in(g, g.join(x, y), seeds)


def commutator_subgroup_brute(g: FiniteGroup, x: Subgroup, y: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators ``[a, b]``; for cross-checks."""
    seeds = np.unique(g.commutator(x.members[:, None], y.members[None, :]).ravel())
    return g.generate(seeds)


@dataclass
class SeriesReport:
    kind: str
    terms: list[Subgroup]
    stabilized_at: int

    @property
    def last(self) -> Subgroup:
        return self.terms[-1]

    def reaches_trivial(self) -> bool:
        return self.terms[-1].is_trivial()

    @property
    def length(self) -> int | None:
        """Derived length / nilpotency class, or None if the series stalls."""
        return len(self.terms) - 1 if self.reaches_trivial() else None

    def orders(self) -> list[int]:
        return [t.order for t in self.terms]


def _series(g: GroupLike, kind: str) -> SeriesReport:
    parent, top = _split(g)
    terms = [top]
    while True:
        cur = terms[-1]
        other = cur if kind == "derived" else top
        nxt = commutator_subgroup(parent, cur, other)
        if nxt == cur:
            break
        terms.append(nxt)
    return SeriesReport(kind, terms, len(terms) - 1)


def derived_series(g: GroupLike) -> SeriesReport:
    return _series(g, "derived")


def lower_central_series(g: GroupLike) -> SeriesReport:
    return _series(g, "lower_central")


def is_solvable(g: GroupLike) -> bool:
    return derived_series(g).reaches_trivial()


def is_nilpotent(g: GroupLike) -> bool:
    return lower_central_series(g).reaches_trivial()


def is_perfect(g: GroupLike) -> bool:
    parent, top = _split(g)
    return commutator_subgroup(parent, top, top) == top


def is_abelian(g: GroupLike) -> bool:
    parent, top = _split(g)
    return top.is_abelian()


def derived_subgroup(g: GroupLike) -> Subgroup:
    parent, top = _split(g)
    return commutator_subgroup(parent, top, top)


# -- normal subgroups ------------------------------------------------------


@dataclass
class NormalLattice:
    normals: list[Subgroup]
    minimal: list[Subgroup]
    monolith: Subgroup | None
    complete: bool = True


def _sorted(subgroups) -> list[Subgroup]:
    return sorted(subgroups, key=lambda s: s.members.tolist())


def class_closures(g: FiniteGroup) -> list[Subgroup]:
    """Distinct normal closures of the nontrivial conjugacy classes."""
    seen = {}
    for c in g.classes[1:]:
        n = g.generate(c)
        seen.setdefault(n.key, n)
    return list(seen.values())


def minimal_normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    atoms = class_closures(g)
    return _sorted(a for a in atoms if not any(b < a for b in atoms))


def all_normal_subgroups(g: FiniteGroup, minimal_only: bool | None = None) -> NormalLattice:
    """All normal subgroups as joins of conjugacy-class closures.

    Above ``LATTICE_CAP`` elements (or with ``minimal_only``) only the trivial
    group, the minimal normal subgroups and the whole group are listed.
    """
    if minimal_only is None:
        minimal_only = g.order > LATTICE_CAP
    atoms = class_closures(g)
    minimal = _sorted(a for a in atoms if not any(b < a for b in atoms))
    monolith = minimal[0] if len(minimal) == 1 else None
    if minimal_only:
        normals = {g.trivial.key: g.trivial, g.whole.key: g.whole}
        for m in minimal:
            normals[m.key] = m
        return NormalLattice(_sorted(normals.values()), minimal, monolith, complete=False)
    found = {g.trivial.key: g.trivial}
    queue = [g.trivial]
    while queue:
        m = queue.pop()
        for a in atoms:
            if a <= m:
                continue
            j = g.join(m, a)
            if j.key not in found:
                found[j.key] = j
                queue.append(j)
    return NormalLattice(_sorted(found.values()), minimal, monolith)


def monolith(g: FiniteGroup) -> Subgroup | None:
    if g.order == 1:
        return None
    minimal = minimal_normal_subgroups(g)
    return minimal[0] if len(minimal) == 1 else None


def solvable_radical(g: FiniteGroup) -> Subgroup:
    """Largest solvable normal subgroup.

    Grows ``R`` by the normal closure of one class at a time whenever the
    result is abelian modulo ``R``; when no class does that, ``R`` is the
    radical (otherwise the radical would contain a minimal normal subgroup of
    ``G/R``, and such a subgroup is abelian).
    """
    r = g.trivial
    grew = True
    while grew:
        grew = False
        for c in g.classes[1:]:
            if r.mask[c[0]]:
                continue
            m = g.generate(c, start=r)
            if commutator_subgroup(g, m, m) <= r:
                r = m
                grew = True
                break
    return r


def solvable_radical_brute(g: FiniteGroup) -> Subgroup:
    """Join of the solvable members of the full normal lattice."""
    best = g.trivial
    for n in all_normal_subgroups(g, minimal_only=False).normals:
        if is_solvable(n):
            best = g.join(best, n)
    return best


def is_semisimple(g: FiniteGroup) -> bool:
    return solvable_radical(g).is_trivial()


# -- subgroups and the T property -----------------------------------------


def cyclic_subgroups(g: FiniteGroup) -> list[Subgroup]:
    seen = {}
    for x in range(g.order):
        c = Subgroup(g, g.powers(x), gens=(x,) if x else ())
        seen.setdefault(c.key, c)
    return _sorted(seen.values())


def all_subgroups(g: FiniteGroup, max_order: int = SUBGROUP_CAP) -> list[Subgroup]:
    """Every subgroup, as joins of cyclic subgroups."""
    if g.order > max_order:
        raise CapExceeded("all_subgroups", max_order, g.order)
    cyclic = cyclic_subgroups(g)
    found = {c.key: c for c in cyclic}
    queue = list(cyclic)
    while queue:
        h = queue.pop()
        for c in cyclic:
            if c <= h:
                continue
            j = g.generate(c.generators(), start=h)
            if j.key not in found:
                found[j.key] = j
                queue.append(j)
    return _sorted(found.values())


def cyclic_subgroups_normal(g: FiniteGroup) -> bool:
    """Every ``<x>`` is normal: conjugating x by each generator stays in ``<x>``."""
    n = g.order
    everything = np.arange(n)
    conj = g.conj_tables  # (k, n)
    pending = np.ones((conj.shape[0], n), dtype=bool)
    pending[conj == everything] = False
    cur = everything.copy()
    # walk x^j for all x at once, ticking off conjugates met along the way
    for _ in range(int(g.exponent)):
        pending &= conj != cur
        cur = g.mul(cur, everything)
        if not pending.any():
            return True
    return not pending.any()


def is_subnormal(g: FiniteGroup, h: Subgroup) -> bool:
    """Normal-closure descent: ``K <- h^K`` from ``K = G`` until it stops."""
    k = g.whole
    while True:
        nxt = normal_closure_in(g, k, h.generators())
        if nxt == h:
            return True
        if nxt == k:
            return False
        k = nxt


def _n_classes(g: FiniteGroup, n: Subgroup) -> list[np.ndarray]:
    gens = np.array(n.generators(), dtype=np.intp)
    label = np.full(g.order, -1, dtype=np.intp)
    out = []
    for x in n.members[1:]:
        if label[x] >= 0:
            continue
        orbit = np.array([x])
        label[x] = len(out)
        frontier = orbit
        while frontier.size:
            img = np.unique(g.conj(gens[:, None], frontier[None, :]).ravel())
            img = img[label[img] < 0]
            label[img] = len(out)
            orbit = np.concatenate([orbit, img])
            frontier = img
        out.append(np.sort(orbit))
    return out


def _t_by_subgroups(g: FiniteGroup, max_order: int) -> bool:
    for h in all_subgroups(g, max_order):
        if not g.is_normal(h) and is_subnormal(g, h):
            return False
    return True


def _t_by_normals(g: FiniteGroup) -> bool:
    # normality is transitive iff every N-normal subgroup of every G-normal N
    # is G-normal; those are joins of N-class closures, so check the closures.
    for n in all_normal_subgroups(g, minimal_only=False).normals:
        if n.is_trivial() or n.is_whole():
            continue
        for c in _n_classes(g, n):
            if not g.is_normal(normal_closure_in(g, n, c)):
                return False
    return True


def is_t_group(g: FiniteGroup, method: str = "auto") -> bool:
    """Whether normality is transitive in ``g``.

    ``method``: ``"subgroups"`` tests every subgroup by normal-closure descent
    (needs ``|g| <= 400``); ``"normals"`` checks normal subgroups of normal
    subgroups; ``"auto"`` answers Dedekind groups directly, then uses the
    subgroup test when it is in cap and the normal-lattice test otherwise.
    """
    if method == "subgroups":
        return _t_by_subgroups(g, SUBGROUP_CAP)
    if method == "normals":
        if g.order > LATTICE_CAP:
            raise CapExceeded("is_t_group", LATTICE_CAP, g.order)
        return _t_by_normals(g)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if cyclic_subgroups_normal(g):
        return True
    if g.order <= SUBGROUP_CAP:
        return _t_by_subgroups(g, SUBGROUP_CAP)
    return is_t_group(g, "normals")


def is_elementary_abelian(h: GroupLike) -> tuple[int, int] | None:
    parent, top = _split(h)
    if top.order == 1 or not top.is_abelian():
        return None
    f = factorint(top.order)
    if len(f) != 1:
        return None
    (p, n), = f.items()
    orders = parent.element_orders[top.members[1:]]
    if np.all(orders == p):
        return int(p), int(n)
    return None


# -- invariants -------------------------------------------------------------


def order_profile(g: GroupLike) -> tuple[tuple[int, int], ...]:
    parent, top = _split(g)
    return tuple(sorted(Counter(parent.element_orders[top.members].tolist()).items()))


def abelian_invariants(g: FiniteGroup) -> tuple[int, ...]:
    """Prime-power invariants of an abelian group, from element orders."""
    orders = g.element_orders
    out = []
    for p, a in sorted(factorint(g.order).items()):
        # counts[k]: elements whose order divides p^k
        counts = [1]
        while counts[-1] < p**a:
            counts.append(int(np.count_nonzero((p ** len(counts)) % orders == 0)))
        ranks = [round(np.log(counts[k] / counts[k - 1]) / np.log(p)) for k in range(1, len(counts))]
        ranks.append(0)
        for k in range(len(ranks) - 1):
            out += [p ** (k + 1)] * (ranks[k] - ranks[k + 1])
    return tuple(sorted(out))


def abelianization_invariants(g: FiniteGroup) -> tuple[int, ...]:
    from .morphisms import QuotientGroup

    d = derived_subgroup(g)
    return abelian_invariants(QuotientGroup(g, d).quotient)


def fingerprint(g: FiniteGroup) -> tuple:
    """Isomorphism invariants used to tell small groups apart."""
    ds = derived_series(g)
    return (
        g.order,
        g.exponent,
        order_profile(g),
        g.center().order,
        ds.length if ds.length is not None else -1,
        abelianization_invariants(g),
        tuple(sorted(len(c) for c in g.classes)),
    )
