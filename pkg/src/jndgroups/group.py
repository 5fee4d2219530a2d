"""Fully enumerated permutation groups and their subgroups.

Every group is stored as an ``(order, degree)`` array of permutation images,
enumerated breadth-first from the identity.  Element ``i`` is referred to by
its index; all arithmetic below works on index arrays so that whole cosets,
conjugacy classes and subgroup closures are computed with numpy.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import CapExceeded
from .perm import Permutation

DEFAULT_CAP = 200_000
# groups up to this order get a full multiplication table
TABLE_LIMIT = 2048


def _as_perm(g, degree):
    if isinstance(g, Permutation):
        p = g
    elif isinstance(g, str):
        p = Permutation.parse(g, degree)
    else:
        p = Permutation(g)
    if p.degree != degree:
        raise ValueError(f"generator of degree {p.degree}, expected {degree}")
    return p


class FiniteGroup:
    """The permutation group generated by ``generators`` on ``degree`` points.

    Elements are enumerated by breadth-first closure from the identity (index
    0), multiplying each element on the right by each generator in order, so
    the same generator list always yields the same indexing.
    """

    def __init__(self, degree: int, generators: Sequence, cap: int = DEFAULT_CAP, name: str | None = None):
        if degree < 1:
            raise ValueError("degree must be positive")
        if cap < 1:
            raise ValueError("cap must be at least 1")
        gens = [_as_perm(g, degree) for g in generators]
        if not gens:
            raise ValueError("at least one generator is required")
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self._closure(cap)
        self._build_lookup()

    # -- construction -----------------------------------------------------

    def _closure(self, cap):
        d = self.degree
        dt = np.int16 if d < 2**15 else np.int32
        gens = np.array([g.images for g in self.generators], dtype=dt)
        ident = np.arange(d, dtype=dt)
        rows = [ident]
        seen = {ident.tobytes(): 0}
        parent = [-1]
        via = [-1]
        frontier = [0]
        ngens = len(gens)
        while frontier:
            block = np.stack([rows[i] for i in frontier])
            prods = block[:, gens]  # (f, k, d): x * g  ==  x[g[.]]
            nxt = []
            for a, src in enumerate(frontier):
                for k in range(ngens):
                    row = prods[a, k]
                    key = row.tobytes()
                    if key not in seen:
                        seen[key] = len(rows)
                        nxt.append(len(rows))
                        rows.append(row)
                        parent.append(src)
                        via.append(k)
                        if len(rows) > cap:
                            raise CapExceeded("closure", cap)
            frontier = nxt
        self.perms = np.ascontiguousarray(np.stack(rows))
        self.perms.flags.writeable = False
        self._word_parent = np.array(parent, dtype=np.intp)
        self._word_gen = np.array(via, dtype=np.intp)
        self.order = len(rows)
        self.gen_indices = np.array([seen[g.tobytes()] for g in gens], dtype=np.intp)

    def _build_lookup(self):
        # A set of points whose images separate all elements.
        P = self.perms
        n, d = P.shape
        base = []
        if n > 1:
            rank = np.zeros(n, dtype=np.int64)
            distinct = 1
            for p in range(d):
                _, trial = np.unique(rank * d + P[:, p], return_inverse=True)
                count = int(trial.max()) + 1
                if count > distinct:
                    base.append(p)
                    rank = trial.astype(np.int64).ravel()
                    distinct = count
                    if distinct == n:
                        break
        self.base = np.array(base, dtype=np.intp)
        self._radix = d ** len(base) < 2**62
        keys = self._encode(P[:, self.base])
        self._sorter = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sorter]

    def _encode(self, rows):
        rows = np.asarray(rows)
        if self._radix:
            weights = self.degree ** np.arange(rows.shape[-1], dtype=np.int64)
            return (rows.astype(np.int64) * weights).sum(axis=-1)
        rows = np.ascontiguousarray(rows.astype(np.int32))
        flat = rows.reshape(-1, rows.shape[-1])
        out = flat.view(np.dtype((np.void, 4 * flat.shape[1]))).ravel()
        return out.reshape(rows.shape[:-1])

    def _lookup_base(self, base_rows):
        """Indices of elements with the given base images (assumed members)."""
        keys = self._encode(base_rows)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        if not np.all(self._sorted_keys[pos] == keys):
            raise KeyError("element not in group")
        return self._sorter[pos]

    # -- element access ---------------------------------------------------

    def __len__(self):
        return self.order

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"<FiniteGroup {label}order {self.order}, degree {self.degree}>"

    def element(self, i: int) -> Permutation:
        return Permutation(self.perms[i].tolist())

    def elements(self) -> list[Permutation]:
        return [Permutation(r) for r in self.perms.tolist()]

    def index(self, perm) -> int:
        """Index of a permutation; raises KeyError if it is not an element."""
        perm = _as_perm(perm, self.degree)
        row = np.array(perm.images)
        i = int(self._lookup_base(row[self.base][None, :])[0])
        if not np.array_equal(self.perms[i], row):
            raise KeyError("element not in group")
        return i

    def __contains__(self, perm) -> bool:
        try:
            self.index(perm)
        except (KeyError, ValueError):
            return False
        return True

    def word(self, i: int) -> list[int]:
        """Generator indices whose left-to-right product is element ``i``."""
        out = []
        while i:
            out.append(int(self._word_gen[i]))
            i = int(self._word_parent[i])
        return out[::-1]

    def word_str(self, i: int) -> str:
        w = self.word(i)
        return "*".join(f"g{k + 1}" for k in w) if w else "e"

    # -- arithmetic on indices --------------------------------------------

    @cached_property
    def table(self) -> np.ndarray | None:
        n = self.order
        if n > TABLE_LIMIT:
            return None
        out = np.empty((n, n), dtype=np.int32)
        right = self.perms[:, self.base]
        chunk = max(1, 2**20 // n)
        for lo in range(0, n, chunk):
            a = np.arange(lo, min(n, lo + chunk))
            rows = self.perms[a[:, None, None], right[None, :, :]]
            out[lo : lo + len(a)] = self._lookup_base(rows)
        out.flags.writeable = False
        return out

    def mul(self, a, b):
        """Vectorised product ``a * b`` of element indices (broadcasting)."""
        a = np.asarray(a, dtype=np.intp)
        b = np.asarray(b, dtype=np.intp)
        t = self.table
        if t is not None:
            return t[a, b].astype(np.intp)
        a, b = np.broadcast_arrays(a, b)
        shape = a.shape
        a = a.ravel()
        b = b.ravel()
        rows = self.perms[a[:, None], self.perms[b][:, self.base]]
        return self._lookup_base(rows).reshape(shape)

    @cached_property
    def inv(self) -> np.ndarray:
        inv_rows = np.argsort(self.perms, axis=1)
        out = self._lookup_base(inv_rows[:, self.base])
        out.flags.writeable = False
        return out

    def conj(self, g, x):
        """``g x g^-1`` on index arrays."""
        g = np.asarray(g, dtype=np.intp)
        return self.mul(self.mul(g, x), self.inv[g])

    def commutator(self, x, y):
        """``[x, y] = x y x^-1 y^-1``."""
        return self.mul(self.mul(x, y), self.mul(self.inv[x], self.inv[y]))

    def power(self, x, n: int):
        x = np.asarray(x, dtype=np.intp)
        if n < 0:
            x, n = self.inv[x], -n
        result = np.zeros_like(x)
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.intp)
        orders[0] = 1
        everything = np.arange(n)
        cur = everything.copy()
        k = 1
        todo = everything[1:]
        cur = cur[1:]
        while todo.size:
            k += 1
            cur = self.mul(cur, todo)
            done = cur == 0
            orders[todo[done]] = k
            todo = todo[~done]
            cur = cur[~done]
        orders.flags.writeable = False
        return orders

    def element_order(self, x: int) -> int:
        return int(self.element_orders[x])

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    def powers(self, x: int) -> np.ndarray:
        """The cyclic subgroup generated by ``x`` as sorted indices."""
        out = [0]
        y = x
        while y != 0:
            out.append(y)
            y = int(self.mul(y, x))
        return np.unique(np.array(out, dtype=np.intp))

    # -- conjugation ------------------------------------------------------

    @cached_property
    def conj_tables(self) -> np.ndarray:
        """Row k maps every element to its conjugate by generator k."""
        idx = np.arange(self.order)
        rows = [self.conj(np.full(self.order, g), idx) for g in self.gen_indices]
        out = np.array(rows, dtype=np.intp)
        out.flags.writeable = False
        return out

    @cached_property
    def class_ids(self) -> np.ndarray:
        n = self.order
        src = np.tile(np.arange(n), len(self.gen_indices))
        dst = self.conj_tables.ravel()
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
        _, labels = connected_components(graph, directed=True, connection="strong")
        # relabel by first occurrence so class 0 holds the identity
        _, first = np.unique(labels, return_index=True)
        order = np.argsort(np.argsort(first))
        out = order[labels]
        out.flags.writeable = False
        return out

    @cached_property
    def classes(self) -> list[np.ndarray]:
        ids = self.class_ids
        sorter = np.argsort(ids, kind="stable")
        bounds = np.flatnonzero(np.diff(ids[sorter])) + 1
        return [np.sort(c) for c in np.split(sorter, bounds)]

    def is_abelian(self) -> bool:
        return bool(np.all(self.conj_tables == np.arange(self.order)))

    # -- subgroups --------------------------------------------------------

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, np.arange(self.order), gens=self.gen_indices)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, np.array([0]), gens=())

    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        """Subgroup generated by the given element indices."""
        return self.generate(np.asarray(list(gens), dtype=np.intp))

    def generate(self, seeds, start: "Subgroup | None" = None) -> "Subgroup":
        """Closure of ``start`` (default trivial) together with ``seeds``.

        Seeds already inside the growing subgroup are skipped, so the
        recorded generating set stays small even for large seed sets.
        """
        n = self.order
        mask = np.zeros(n, dtype=bool)
        if start is None:
            mask[0] = True
            gens: list[int] = []
        else:
            mask[start.members] = True
            gens = list(start.generators())
        for s in np.asarray(seeds, dtype=np.intp).ravel():
            s = int(s)
            if mask[s]:
                continue
            gens.append(s)
            g_arr = np.array(gens, dtype=np.intp)
            frontier = np.flatnonzero(mask)
            step = self.mul(frontier, s)
            while True:
                step = np.unique(step)
                new = step[~mask[step]]
                if not new.size:
                    break
                mask[new] = True
                step = self.mul(new[:, None], g_arr[None, :]).ravel()
        return Subgroup(self, np.flatnonzero(mask), gens=gens)

    def join(self, h: "Subgroup", k: "Subgroup") -> "Subgroup":
        if len(h) < len(k):
            h, k = k, h
        return self.generate(k.generators(), start=h)

    def normal_closure(self, seed: Iterable[int]) -> "Subgroup":
        seed = np.asarray(list(seed) if not isinstance(seed, np.ndarray) else seed, dtype=np.intp)
        if not seed.size:
            return self.trivial
        ids = np.unique(self.class_ids[seed])
        pool = np.concatenate([self.classes[c] for c in ids])
        return self.generate(pool)

    def center(self) -> "Subgroup":
        fixed = np.all(self.conj_tables == np.arange(self.order), axis=0)
        return Subgroup(self, np.flatnonzero(fixed))

    def is_normal(self, h: "Subgroup", brute_force: bool = False) -> bool:
        """Whether ``h`` is normal; ``brute_force`` conjugates by every element."""
        mask = h.mask
        if brute_force:
            for g in range(self.order):
                if not mask[self.conj(g, h.members)].all():
                    return False
            return True
        return bool(mask[self.conj_tables[:, h.members]].all())

    def conjugacy_classes(self) -> list[np.ndarray]:
        return sorted(self.classes, key=lambda c: c.tolist())


class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    def __init__(self, parent: FiniteGroup, members, gens=None):
        self.parent = parent
        members = np.unique(np.asarray(members, dtype=np.intp))
        members.flags.writeable = False
        self.members = members
        self._gens = None if gens is None else tuple(int(g) for g in gens)

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i) -> bool:
        return bool(self.mask[int(i)])

    def __iter__(self):
        return iter(self.members.tolist())

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.members] = True
        m.flags.writeable = False
        return m

    @cached_property
    def key(self) -> bytes:
        return self.members.tobytes()

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.members].all())

    def __lt__(self, other: "Subgroup") -> bool:
        return self.order < other.order and self <= other

    def __repr__(self):
        return f"<Subgroup of order {self.order} in {self.parent!r}>"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def generators(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = self.parent.generate(self.members).generators()
        return self._gens

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.members[other.mask[self.members]])

    def is_abelian(self) -> bool:
        g = np.array(self.generators(), dtype=np.intp)
        if not g.size:
            return True
        prod = self.parent.mul(g[:, None], g[None, :])
        return bool(np.array_equal(prod, prod.T))

    def as_group(self, name: str | None = None) -> FiniteGroup:
        """A standalone copy on the parent's points."""
        gens = self.generators() or (0,)
        return FiniteGroup(self.parent.degree, [self.parent.element(i) for i in gens], name=name)

    def embedding(self, standalone: FiniteGroup) -> np.ndarray:
        """Parent indices of the elements of ``standalone`` (from ``as_group``)."""
        rows = standalone.perms[:, self.parent.base]
        return self.parent._lookup_base(rows)


def closure(degree: int, generators: Sequence, cap: int = DEFAULT_CAP) -> FiniteGroup:
    return FiniteGroup(degree, generators, cap=cap)


def element_order(g: FiniteGroup, x) -> int:
    if isinstance(x, Permutation):
        x = g.index(x)
    return g.element_order(int(x))


def center(g: FiniteGroup) -> Subgroup:
    return g.center()


def conjugacy_classes(g: FiniteGroup) -> list[np.ndarray]:
    return g.conjugacy_classes()


def normal_closure(g: FiniteGroup, seed) -> Subgroup:
    return g.normal_closure(seed)


def is_subgroup_normal(g: FiniteGroup, h: Subgroup, brute_force: bool = False) -> bool:
    return g.is_normal(h, brute_force=brute_force)
