"""Finite semigroups of chain maps: closure, Green's relations, idempotents.

Elements are indexed in lexicographic image order and products are looked
up by index.  An identity is adjoined virtually when absent; it is never
materialised as an element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .chain_maps import ChainMap, compose, identity
from .errors import CapacityError
from .family_enumeration import (
    FILTER_CEILING,
    FamilySpec,
    enumerate_ODCT_direct,
    enumerate_filtered,
)

VIRTUAL_IDENTITY = -1

_TABLE_CEILING = 512          # dense product tables above this are not built
_RELATIONS_CEILING = 1024     # principal-ideal fingerprints are quadratic


@dataclass(frozen=True)
class EquivPartition:
    """A partition of {0, ..., size-1}.  Class id = smallest member index."""

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_classes(size: int, classes: Iterable[Iterable[int]]) -> "EquivPartition":
        canon = sorted(tuple(sorted(c)) for c in classes)
        class_of = [-1] * size
        for c in canon:
            for i in c:
                if not 0 <= i < size or class_of[i] != -1:
                    raise ValueError("classes must partition the index range")
                class_of[i] = c[0]
        if any(v == -1 for v in class_of):
            raise ValueError("classes must cover the index range")
        return EquivPartition(tuple(class_of), tuple(canon))

    @staticmethod
    def from_key(size: int, key: Callable[[int], object]) -> "EquivPartition":
        groups: dict[object, list[int]] = {}
        for i in range(size):
            groups.setdefault(key(i), []).append(i)
        return EquivPartition.from_classes(size, groups.values())

    @staticmethod
    def discrete(size: int) -> "EquivPartition":
        return EquivPartition.from_classes(size, [[i] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.classes)

    def class_members(self, i: int) -> tuple[int, ...]:
        rep = self.class_of[i]
        for c in self.classes:
            if c[0] == rep:
                return c
        raise ValueError(f"index {i} out of range")

    def related(self, i: int, j: int) -> bool:
        return self.class_of[i] == self.class_of[j]

    def refines(self, other: "EquivPartition") -> bool:
        return all(
            other.class_of[c[0]] == other.class_of[x] for c in self.classes for x in c
        )

    def meet(self, other: "EquivPartition") -> "EquivPartition":
        return EquivPartition.from_key(
            self.size, lambda i: (self.class_of[i], other.class_of[i])
        )

    def join(self, other: "EquivPartition") -> "EquivPartition":
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int) -> None:
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[ry] = rx

        for part in (self, other):
            for c in part.classes:
                for x in c[1:]:
                    union(c[0], x)
        return EquivPartition.from_key(self.size, find)


class FiniteSemigroup:
    """An explicitly listed, composition-closed set of chain maps."""

    def __init__(self, elements: Iterable[ChainMap], *, verify_closed: bool = True):
        elems = sorted(set(elements), key=lambda m: m.images)
        if not elems:
            raise ValueError("a semigroup needs at least one element")
        n = elems[0].n
        for m in elems:
            if m.n != n:
                raise ValueError(f"mixed chain sizes {n} and {m.n}")
        self.n = n
        self.elements: tuple[ChainMap, ...] = tuple(elems)
        self._index = {m.images: i for i, m in enumerate(self.elements)}
        self.has_identity_adjoined = identity(n).images not in self._index
        self._table: list[tuple[int, ...]] | None = None
        if verify_closed:
            self._verify_closed()

    def _verify_closed(self) -> None:
        for a in self.elements:
            for b in self.elements:
                c = compose(a, b)
                if c.images not in self._index:
                    raise ValueError(f"not closed under composition: {a} * {b} = {c}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ChainMap]:
        return iter(self.elements)

    def __contains__(self, m: ChainMap) -> bool:
        return m.images in self._index

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteSemigroup)
            and self.n == other.n
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.n, self.elements))

    def __repr__(self) -> str:
        return f"FiniteSemigroup(n={self.n}, size={len(self.elements)})"

    def index(self, m: ChainMap) -> int:
        try:
            return self._index[m.images]
        except KeyError:
            raise ValueError(f"{m} is not an element") from None

    def element(self, i: int) -> ChainMap:
        return self.elements[i]

    def ensure_table(self) -> None:
        if self._table is None and len(self.elements) <= _TABLE_CEILING:
            seqs = [m.images for m in self.elements]
            idx = self._index
            self._table = [
                tuple(idx[tuple(bs[v - 1] for v in as_)] for bs in seqs)
                for as_ in seqs
            ]

    def product(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]."""
        if self._table is not None:
            return self._table[i][j]
        a = self.elements[i].images
        b = self.elements[j].images
        return self._index[tuple(b[v - 1] for v in a)]

    def s1_indices(self) -> tuple[int, ...]:
        """Indices enumerating S^1; the virtual identity comes first if needed."""
        base = tuple(range(len(self.elements)))
        if self.has_identity_adjoined:
            return (VIRTUAL_IDENTITY,) + base
        return base

    def act(self, i: int, j: int) -> int:
        """Product allowing either index to be the virtual identity."""
        if i == VIRTUAL_IDENTITY:
            return j
        if j == VIRTUAL_IDENTITY:
            return i
        return self.product(i, j)


def closure(generators: Iterable[ChainMap]) -> FiniteSemigroup:
    """Smallest composition-closed set containing the generators."""
    gens = sorted(set(generators), key=lambda m: m.images)
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = gens[0].n
    for g in gens:
        if g.n != n:
            raise ValueError(f"mixed chain sizes {n} and {g.n}")
    known: dict[tuple[int, ...], ChainMap] = {g.images: g for g in gens}
    work = list(known.values())
    while work:
        a = work.pop()
        for b in list(known.values()):
            for c in (compose(a, b), compose(b, a)):
                if c.images not in known:
                    known[c.images] = c
                    work.append(c)
    return FiniteSemigroup(known.values(), verify_closed=False)


def _check_relations_size(S: FiniteSemigroup) -> None:
    if len(S) > _RELATIONS_CEILING:
        raise CapacityError(
            f"relation computations are capped at {_RELATIONS_CEILING} elements; "
            f"got {len(S)}"
        )


def _mutual_reachability(size: int, out_edges: list[set[int]]) -> EquivPartition:
    """Strongly connected components, Kosaraju style, iterative."""
    rev: list[list[int]] = [[] for _ in range(size)]
    for i, outs in enumerate(out_edges):
        for j in outs:
            rev[j].append(i)
    seen = [False] * size
    order: list[int] = []
    for start in range(size):
        if seen[start]:
            continue
        stack: list[tuple[int, Iterator[int]]] = [(start, iter(out_edges[start]))]
        seen[start] = True
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, iter(out_edges[nxt])))
                    advanced = True
                    break
            if not advanced:
                order.append(node)
                stack.pop()
    comp = [-1] * size
    for root in reversed(order):
        if comp[root] != -1:
            continue
        todo = [root]
        comp[root] = root
        while todo:
            node = todo.pop()
            for nxt in rev[node]:
                if comp[nxt] == -1:
                    comp[nxt] = root
                    todo.append(nxt)
    return EquivPartition.from_key(size, comp.__getitem__)


def _j_partition(S: FiniteSemigroup) -> EquivPartition:
    m = len(S)
    S.ensure_table()
    edges: list[set[int]] = []
    for i in range(m):
        outs = {S.product(x, i) for x in range(m)}
        outs.update(S.product(i, x) for x in range(m))
        edges.append(outs)
    return _mutual_reachability(m, edges)


def greens_partitions(S: FiniteSemigroup) -> dict[str, EquivPartition]:
    """The five Green's partitions, keyed 'L', 'R', 'H', 'D', 'J'.

    L and R come from principal one-sided ideal fingerprints, H is their
    meet, D their join, and J the mutual-containment classes of principal
    two-sided ideals.  On finite semigroups D = J; the test suite asserts
    this rather than assuming it.
    """
    _check_relations_size(S)
    m = len(S)
    S.ensure_table()
    rng = range(m)
    L = EquivPartition.from_key(
        m, lambda i: frozenset({i} | {S.product(x, i) for x in rng})
    )
    R = EquivPartition.from_key(
        m, lambda i: frozenset({i} | {S.product(i, x) for x in rng})
    )
    return {
        "L": L,
        "R": R,
        "H": L.meet(R),
        "D": L.join(R),
        "J": _j_partition(S),
    }


def is_J_trivial(S: FiniteSemigroup) -> bool:
    _check_relations_size(S)
    return _j_partition(S).is_discrete()


def idempotents(S: FiniteSemigroup) -> tuple[ChainMap, ...]:
    S.ensure_table()
    return tuple(
        m for i, m in enumerate(S.elements) if S.product(i, i) == i
    )


def regular_elements(S: FiniteSemigroup) -> tuple[ChainMap, ...]:
    """Elements a with a g a = a for some g in S."""
    S.ensure_table()
    m = len(S)
    out = []
    for i in range(m):
        if any(S.product(S.product(i, g), i) == i for g in range(m)):
            out.append(S.elements[i])
    return tuple(out)


def is_semilattice(maps: Iterable[ChainMap]) -> bool:
    """Closed, commutative, and idempotent under composition."""
    ms = sorted(set(maps), key=lambda m: m.images)
    have = {m.images for m in ms}
    for a in ms:
        if compose(a, a) != a:
            return False
        for b in ms:
            ab = compose(a, b)
            if ab.images not in have or ab != compose(b, a):
                return False
    return True


@lru_cache(maxsize=None)
def family_semigroup(family: str, n: int, max_filter_n: int = FILTER_CEILING) -> FiniteSemigroup:
    """The full family over [n] as a FiniteSemigroup (cached).

    ODCT uses the direct interval construction (cap n <= 20); other
    families go through the n^n filter (cap configurable, default 7).
    """
    if family == "ODCT":
        elems = enumerate_ODCT_direct(n)
    else:
        elems = enumerate_filtered(FamilySpec(family, n), max_n=max_filter_n)
    return FiniteSemigroup(elems, verify_closed=False)
