"""Starred analogues of the Green's relations, abundance and adequacy.

Two elements are left-star related when they induce the same coincidence
pattern of right multipliers: for all mu, lam in S^1, a mu = a lam iff
b mu = b lam.  The right-star relation is dual (left multipliers).  The
definitional tests factor through that pattern, computed once per element
over S^1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain_maps import ChainMap, membership
from .errors import CapacityError, ScopeError
from .semigroup_engine import (
    EquivPartition,
    FiniteSemigroup,
    idempotents,
    is_semilattice,
)

STARRED_CEILING = 512
JSTAR_CEILING = 128


def _check_starred_size(S: FiniteSemigroup) -> None:
    if len(S) > STARRED_CEILING:
        raise CapacityError(
            f"starred relations are capped at {STARRED_CEILING} elements; got {len(S)}"
        )


def _require_odct(a: ChainMap) -> None:
    if "ODCT" not in membership(a):
        raise ScopeError(f"theorem scope is ODCT; {a} is outside it")


def _right_pattern(S: FiniteSemigroup, i: int) -> frozenset[frozenset[int]]:
    """Partition of S^1 positions by the value of i * mu."""
    groups: dict[int, list[int]] = {}
    for pos, mu in enumerate(S.s1_indices()):
        groups.setdefault(S.act(i, mu), []).append(pos)
    return frozenset(frozenset(g) for g in groups.values())


def _left_pattern(S: FiniteSemigroup, i: int) -> frozenset[frozenset[int]]:
    groups: dict[int, list[int]] = {}
    for pos, mu in enumerate(S.s1_indices()):
        groups.setdefault(S.act(mu, i), []).append(pos)
    return frozenset(frozenset(g) for g in groups.values())


def lstar_definitional(a: ChainMap, b: ChainMap, S: FiniteSemigroup) -> bool:
    _check_starred_size(S)
    S.ensure_table()
    return _right_pattern(S, S.index(a)) == _right_pattern(S, S.index(b))


def rstar_definitional(a: ChainMap, b: ChainMap, S: FiniteSemigroup) -> bool:
    _check_starred_size(S)
    S.ensure_table()
    return _left_pattern(S, S.index(a)) == _left_pattern(S, S.index(b))


def lstar_partition(S: FiniteSemigroup) -> EquivPartition:
    _check_starred_size(S)
    S.ensure_table()
    return EquivPartition.from_key(len(S), lambda i: _right_pattern(S, i))


def rstar_partition(S: FiniteSemigroup) -> EquivPartition:
    _check_starred_size(S)
    S.ensure_table()
    return EquivPartition.from_key(len(S), lambda i: _left_pattern(S, i))


def hstar_partition(S: FiniteSemigroup) -> EquivPartition:
    return lstar_partition(S).meet(rstar_partition(S))


def dstar_partition(S: FiniteSemigroup) -> EquivPartition:
    return lstar_partition(S).join(rstar_partition(S))


def lstar_theorem(a: ChainMap, b: ChainMap) -> bool:
    """Closed form on ODCT: left-star related iff equal images."""
    _require_odct(a)
    _require_odct(b)
    return set(a.images) == set(b.images)


def rstar_theorem(a: ChainMap, b: ChainMap) -> bool:
    """Closed form on ODCT: right-star related iff equal."""
    _require_odct(a)
    _require_odct(b)
    return a == b


def _class_reach(S: FiniteSemigroup) -> tuple[EquivPartition, dict[int, frozenset[int]]]:
    """D*-classes and, per class id, the class ids reachable by sandwiching.

    One reachability step takes any element x of a reached class to the
    D*-class of lam * x * mu for lam, mu in S^1.
    """
    if len(S) > JSTAR_CEILING:
        raise CapacityError(
            f"the two-sided starred fixed point is capped at {JSTAR_CEILING} "
            f"elements; got {len(S)}"
        )
    S.ensure_table()
    dstar = dstar_partition(S)
    s1 = S.s1_indices()
    sandwich: list[set[int]] = []
    for x in range(len(S)):
        cls: set[int] = set()
        for lam in s1:
            lx = S.act(lam, x)
            for mu in s1:
                cls.add(dstar.class_of[S.act(lx, mu)])
        sandwich.append(cls)
    adj: dict[int, set[int]] = {}
    for c in dstar.classes:
        nbrs: set[int] = set()
        for x in c:
            nbrs |= sandwich[x]
        adj[c[0]] = nbrs
    reach: dict[int, frozenset[int]] = {}
    for cid in adj:
        seen = {cid}
        todo = [cid]
        while todo:
            cur = todo.pop()
            for nxt in adj[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        reach[cid] = frozenset(seen)
    return dstar, reach


def jstar_ideals(S: FiniteSemigroup) -> tuple[frozenset[int], ...]:
    """For each element index, the index set reachable by the J* fixed point."""
    dstar, reach = _class_reach(S)
    members: dict[int, list[int]] = {c[0]: list(c) for c in dstar.classes}
    out = []
    for i in range(len(S)):
        cids = reach[dstar.class_of[i]]
        out.append(frozenset(x for cid in cids for x in members[cid]))
    return tuple(out)


def jstar_partition(S: FiniteSemigroup) -> EquivPartition:
    """Mutual membership classes of the J* fixed point."""
    dstar, reach = _class_reach(S)
    cids = sorted(reach)
    merged: list[list[int]] = []
    used: set[int] = set()
    for c in cids:
        if c in used:
            continue
        group = [d for d in cids if c in reach[d] and d in reach[c]]
        used.update(group)
        merged.append(group)
    members: dict[int, tuple[int, ...]] = {c[0]: c for c in dstar.classes}
    classes = [
        [x for cid in group for x in members[cid]] for group in merged
    ]
    return EquivPartition.from_classes(len(S), classes)


@dataclass(frozen=True)
class StarReport:
    """All five starred partitions plus abundance and adequacy verdicts."""

    semigroup: FiniteSemigroup
    lstar: EquivPartition
    rstar: EquivPartition
    hstar: EquivPartition
    dstar: EquivPartition
    jstar: EquivPartition
    left_abundant: bool
    right_abundant: bool
    left_adequate: bool
    witness_gaps: tuple[tuple[tuple[ChainMap, ...], str], ...]


def abundance_report(S: FiniteSemigroup) -> StarReport:
    """Abundance verdicts with explicit idempotent-free witness classes.

    Left abundant: every L*-class holds an idempotent.  Right abundant:
    every R*-class does.  Left adequate adds that the idempotents form a
    semilattice.  witness_gaps lists each idempotent-free class with the
    relation it belongs to.
    """
    lstar = lstar_partition(S)
    rstar = rstar_partition(S)
    idem = {S.index(e) for e in idempotents(S)}
    gaps: list[tuple[tuple[ChainMap, ...], str]] = []
    left_ok = True
    for c in lstar.classes:
        if not idem.intersection(c):
            left_ok = False
            gaps.append((tuple(S.elements[i] for i in c), "L*"))
    right_ok = True
    for c in rstar.classes:
        if not idem.intersection(c):
            right_ok = False
            gaps.append((tuple(S.elements[i] for i in c), "R*"))
    return StarReport(
        semigroup=S,
        lstar=lstar,
        rstar=rstar,
        hstar=lstar.meet(rstar),
        dstar=lstar.join(rstar),
        jstar=jstar_partition(S),
        left_abundant=left_ok,
        right_abundant=right_ok,
        left_adequate=left_ok and is_semilattice(idempotents(S)),
        witness_gaps=tuple(gaps),
    )
