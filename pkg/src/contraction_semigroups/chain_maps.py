"""Full transformations of the chain {1, ..., n} and contraction predicates.

A map is stored by its image sequence: ``images[i]`` is the image of the
point ``i + 1``.  All public semantics are 1-based.  Composition is read
left to right, so ``x (a * b) = (x a) b``.

Family tags used throughout the package:

    T     all full transformations of [n]
    CT    contractions: |xa - ya| <= |x - y| for all x, y
    ORCT  contractions that preserve or reverse the order
    OCT   order-preserving contractions
    ODCT  order-decreasing order-preserving contractions (xa <= x)

They nest as ODCT <= OCT <= ORCT <= CT <= T.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

FAMILY_TAGS = ("T", "CT", "ORCT", "OCT", "ODCT")


@dataclass(frozen=True)
class ChainMap:
    """A full transformation of {1, ..., n} stored as its image sequence."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.n < 1:
            raise ValueError(f"chain size must be at least 1, got {self.n}")
        if len(self.images) != self.n:
            raise ValueError(
                f"expected {self.n} images, got {len(self.images)}"
            )
        for v in self.images:
            if not 1 <= v <= self.n:
                raise ValueError(f"image point {v} outside [1, {self.n}]")

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} outside [1, {self.n}]")
        return self.images[x - 1]

    def __mul__(self, other: "ChainMap") -> "ChainMap":
        return compose(self, other)

    def __str__(self) -> str:
        return format_chain_map(self)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    @property
    def rank(self) -> int:
        return len(set(self.images))

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.n + 1) if self.images[x - 1] == x)

    def is_idempotent(self) -> bool:
        return compose(self, self) == self


def chain_map(images) -> ChainMap:
    """Build a ChainMap from an image sequence, inferring n from its length."""
    imgs = tuple(images)
    return ChainMap(len(imgs), imgs)


def identity(n: int) -> ChainMap:
    return ChainMap(n, tuple(range(1, n + 1)))


def constant(n: int, value: int) -> ChainMap:
    return ChainMap(n, (value,) * n)


def compose(a: ChainMap, b: ChainMap) -> ChainMap:
    """Left-to-right composition: x (a b) = (x a) b."""
    if a.n != b.n:
        raise ValueError(f"cannot compose maps on chains of size {a.n} and {b.n}")
    bi = b.images
    return ChainMap(a.n, tuple(bi[v - 1] for v in a.images))


# Predicate cores work on raw image sequences so enumeration can use them
# without building ChainMap objects.  Each quantifies the defining
# inequality over all pairs, with early exit.

def _order_preserving(images) -> bool:
    for i in range(len(images)):
        ai = images[i]
        for j in range(i + 1, len(images)):
            if ai > images[j]:
                return False
    return True


def _order_reversing(images) -> bool:
    for i in range(len(images)):
        ai = images[i]
        for j in range(i + 1, len(images)):
            if ai < images[j]:
                return False
    return True


def _order_decreasing(images) -> bool:
    for i, v in enumerate(images):
        if v > i + 1:
            return False
    return True


def _contraction(images) -> bool:
    for i in range(len(images)):
        ai = images[i]
        for j in range(i + 1, len(images)):
            d = ai - images[j]
            if d < 0:
                d = -d
            if d > j - i:
                return False
    return True


def _isometry(images) -> bool:
    for i in range(len(images)):
        ai = images[i]
        for j in range(i + 1, len(images)):
            d = ai - images[j]
            if d < 0:
                d = -d
            if d != j - i:
                return False
    return True


def is_order_preserving(a: ChainMap) -> bool:
    return _order_preserving(a.images)


def is_order_reversing(a: ChainMap) -> bool:
    return _order_reversing(a.images)


def is_order_decreasing(a: ChainMap) -> bool:
    return _order_decreasing(a.images)


def is_contraction(a: ChainMap) -> bool:
    return _contraction(a.images)


def is_isometry(a: ChainMap) -> bool:
    return _isometry(a.images)


def membership(a: ChainMap) -> frozenset[str]:
    """Family tags satisfied by a map.  Always includes T; tags nest."""
    tags = {"T"}
    if _contraction(a.images):
        tags.add("CT")
        pres = _order_preserving(a.images)
        if pres or _order_reversing(a.images):
            tags.add("ORCT")
        if pres:
            tags.add("OCT")
            if _order_decreasing(a.images):
                tags.add("ODCT")
    return frozenset(tags)


@dataclass(frozen=True)
class BlockForm:
    """Kernel partition of a chain map, blocks listed with values ascending.

    Block i is the full preimage of values[i].  Values are pairwise
    distinct; the canonical listing sorts blocks by their value, so the
    block/value pairing is preserved under normalisation.
    """

    blocks: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        values = tuple(self.values)
        if not blocks or len(blocks) != len(values):
            raise ValueError("blocks and values must be nonempty and equal in number")
        order = sorted(range(len(values)), key=lambda i: values[i])
        blocks = tuple(blocks[i] for i in order)
        values = tuple(values[i] for i in order)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "values", values)
        for i in range(len(values) - 1):
            if values[i] >= values[i + 1]:
                raise ValueError("block values must be pairwise distinct")
        seen: set[int] = set()
        total = 0
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            for x in b:
                if x in seen:
                    raise ValueError(f"point {x} appears in two blocks")
                seen.add(x)
            total += len(b)
        if seen != set(range(1, total + 1)):
            raise ValueError("blocks must partition {1, ..., n} with no gaps")
        for v in values:
            if not 1 <= v <= total:
                raise ValueError(f"value {v} outside [1, {total}]")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_block_form(self)


def to_block_form(a: ChainMap) -> BlockForm:
    groups: dict[int, list[int]] = {}
    for x in range(1, a.n + 1):
        groups.setdefault(a.images[x - 1], []).append(x)
    values = tuple(sorted(groups))
    return BlockForm(tuple(tuple(groups[v]) for v in values), values)


def from_block_form(bf: BlockForm) -> ChainMap:
    imgs = [0] * bf.n
    for block, v in zip(bf.blocks, bf.values):
        for x in block:
            imgs[x - 1] = v
    return ChainMap(bf.n, tuple(imgs))


@dataclass(frozen=True)
class Transversal:
    """A candidate set of block representatives, stored sorted."""

    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(sorted(set(self.points)))
        object.__setattr__(self, "points", pts)
        for p in pts:
            if p < 1:
                raise ValueError(f"transversal point {p} must be positive")


@dataclass(frozen=True)
class TransversalChecks:
    is_transversal: bool
    is_convex: bool
    is_admissible: bool


def transversal_checks(bf: BlockForm, t: Transversal) -> TransversalChecks:
    """Classify a point set against a block form.

    is_transversal: exactly one point in every block and nothing else.
    is_convex: the points form an interval (no betweenness gaps).
    is_admissible: the induced map sending each block to its representative
    is a contraction.  Undefined selections are reported inadmissible.
    """
    pts = set(t.points)
    is_trans = len(pts) == bf.block_count and all(
        len(pts.intersection(b)) == 1 for b in bf.blocks
    )
    if len(pts) <= 1:
        is_conv = True
    else:
        is_conv = max(pts) - min(pts) + 1 == len(pts)
    if is_trans:
        imgs = [0] * bf.n
        for b in bf.blocks:
            rep = next(iter(pts.intersection(b)))
            for x in b:
                imgs[x - 1] = rep
        is_adm = _contraction(imgs)
    else:
        is_adm = False
    return TransversalChecks(is_trans, is_conv, is_adm)


_CHAIN_TEXT = re.compile(r"n=(\d+);\[(\d+(?:,\d+)*)\]")
_BLOCK_TEXT = re.compile(r"\{(\d+(?:[,|]\d+)*)\}->\[(\d+(?:,\d+)*)\]")


def format_chain_map(a: ChainMap) -> str:
    return f"n={a.n};[{','.join(map(str, a.images))}]"


def parse_chain_map(text: str) -> ChainMap:
    m = _CHAIN_TEXT.fullmatch(text)
    if m is None:
        raise ValueError(f"bad chain map text: {text!r}")
    n = int(m.group(1))
    imgs = tuple(int(t) for t in m.group(2).split(","))
    if len(imgs) != n:
        raise ValueError(f"declared n={n} but {len(imgs)} images in {text!r}")
    return ChainMap(n, imgs)


def format_block_form(bf: BlockForm) -> str:
    inner = "|".join(",".join(map(str, b)) for b in bf.blocks)
    vals = ",".join(map(str, bf.values))
    return "{" + inner + "}->[" + vals + "]"


def parse_block_form(text: str) -> BlockForm:
    m = _BLOCK_TEXT.fullmatch(text)
    if m is None:
        raise ValueError(f"bad block form text: {text!r}")
    blocks = tuple(
        tuple(int(t) for t in part.split(",")) for part in m.group(1).split("|")
    )
    values = tuple(int(t) for t in m.group(2).split(","))
    bf = BlockForm(blocks, values)
    if format_block_form(bf) != text:
        raise ValueError(f"non-canonical block form text: {text!r}")
    return bf
