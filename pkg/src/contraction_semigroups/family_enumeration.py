"""Enumeration of the contraction families over [n].

Two independent routes exist for ODCT: the generic filter over all n^n
maps, and a direct construction that emits one map per way of splitting
the chain into consecutive intervals (block i is sent to i).  The two are
cross-checked in the test suite; the direct route also yields the count
2^(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .chain_maps import (
    FAMILY_TAGS,
    ChainMap,
    _contraction,
    _order_decreasing,
    _order_preserving,
    _order_reversing,
)
from .errors import CapacityError

FILTER_CEILING = 7
DIRECT_CEILING = 20


@dataclass(frozen=True)
class FamilySpec:
    """A family tag together with a chain size."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_TAGS:
            raise ValueError(
                f"unknown family {self.family!r}, expected one of {FAMILY_TAGS}"
            )
        if self.n < 1:
            raise ValueError(f"chain size must be at least 1, got {self.n}")


def _passes(family: str, images) -> bool:
    if family == "T":
        return True
    if family == "CT":
        return _contraction(images)
    if family == "OCT":
        return _order_preserving(images) and _contraction(images)
    if family == "ORCT":
        return (_order_preserving(images) or _order_reversing(images)) and _contraction(
            images
        )
    # ODCT; cheapest test first
    return (
        _order_decreasing(images)
        and _order_preserving(images)
        and _contraction(images)
    )


def iter_filtered(spec: FamilySpec, max_n: int = FILTER_CEILING) -> Iterator[ChainMap]:
    """Yield the family members in lexicographic image order (streaming)."""
    if spec.n > max_n:
        raise CapacityError(
            f"filtered enumeration is capped at n <= {max_n}; got n={spec.n}"
        )
    n = spec.n
    for imgs in product(range(1, n + 1), repeat=n):
        if _passes(spec.family, imgs):
            yield ChainMap(n, imgs)


def enumerate_filtered(spec: FamilySpec, max_n: int = FILTER_CEILING) -> tuple[ChainMap, ...]:
    """All maps of [n] passing the family predicates, in lexicographic order."""
    if spec.n > max_n:
        raise CapacityError(
            f"filtered enumeration is capped at n <= {max_n}; got n={spec.n}"
        )
    return _filtered(spec.family, spec.n)


@lru_cache(maxsize=None)
def _filtered(family: str, n: int) -> tuple[ChainMap, ...]:
    return tuple(iter_filtered(FamilySpec(family, n), max_n=n))


def enumerate_ODCT_direct(n: int, max_n: int = DIRECT_CEILING) -> tuple[ChainMap, ...]:
    """ODCT members built directly from interval splittings of the chain.

    Splitting [n] into p consecutive intervals and sending interval i to i
    always yields a member, and every member arises this way exactly once,
    so the result has 2^(n-1) maps.
    """
    if n < 1:
        raise ValueError(f"chain size must be at least 1, got {n}")
    if n > max_n:
        raise CapacityError(
            f"direct enumeration is capped at n <= {max_n}; got n={n}"
        )
    return _direct(n)


@lru_cache(maxsize=None)
def _direct(n: int) -> tuple[ChainMap, ...]:
    out = []
    for cuts in product((False, True), repeat=n - 1):
        imgs = [1]
        block = 1
        for pos in range(n - 1):
            if cuts[pos]:
                block += 1
            imgs.append(block)
        out.append(ChainMap(n, tuple(imgs)))
    out.sort(key=lambda m: m.images)
    return tuple(out)


def idempotent_ODCT(n: int, p: int) -> ChainMap:
    """The rank-p idempotent of ODCT_n: fixes 1..p, sends p..n to p."""
    if not 1 <= p <= n:
        raise ValueError(f"rank must satisfy 1 <= p <= {n}, got {p}")
    return ChainMap(n, tuple(min(x, p) for x in range(1, n + 1)))


def is_ORCT_idempotent_form(a: ChainMap) -> bool:
    """Whether a map matches the two-plateau idempotent shape of ORCT_n.

    The shape collapses an initial segment onto its last point, fixes a
    middle run, and collapses a final segment onto its first point.  On
    ORCT members this agrees with direct idempotency (a * a == a).
    """
    im = sorted(set(a.images))
    lo, hi = im[0], im[-1]
    if im != list(range(lo, hi + 1)):
        return False
    expected = tuple(
        lo if x <= lo else (x if x < hi else hi) for x in range(1, a.n + 1)
    )
    return a.images == expected
