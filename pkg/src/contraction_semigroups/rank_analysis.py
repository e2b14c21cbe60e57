"""Rank ladder, explicit generating sets, and exact rank certificates.

G_p denotes the rank-p slice of a semigroup of chain maps and K_p the
ideal of all elements of rank at most p.  For ODCT_n the rank-(n-1) slice
consists of the n-1 adjacent-pair collapses, and products inside it only
keep rank n-1 when the right factor is the collapse fixing 1..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chain_maps import (
    BlockForm,
    ChainMap,
    from_block_form,
    membership,
    to_block_form,
)
from .errors import CapacityError, ScopeError
from .semigroup_engine import FiniteSemigroup, is_J_trivial

SUBSET_SIZE_CEILING = 64
SUBSET_RANK_CEILING = 8
_SUBSET_BUDGET = 200_000
_AUTO_CROSS_VALIDATE = 16


@dataclass
class RankLadder:
    """Rank slices and the cumulative ideals of a semigroup of chain maps."""

    by_rank: dict[int, tuple[ChainMap, ...]]
    ideals: dict[int, tuple[ChainMap, ...]]

    def slice(self, p: int) -> tuple[ChainMap, ...]:
        return self.by_rank.get(p, ())

    def ideal(self, p: int) -> tuple[ChainMap, ...]:
        return self.ideals.get(p, ())


def rank_ladder(S: FiniteSemigroup) -> RankLadder:
    by_rank: dict[int, list[ChainMap]] = {}
    for m in S.elements:
        by_rank.setdefault(m.rank, []).append(m)
    ranks = sorted(by_rank)
    ideals: dict[int, tuple[ChainMap, ...]] = {}
    acc: list[ChainMap] = []
    for p in range(1, max(ranks) + 1):
        acc.extend(by_rank.get(p, ()))
        ideals[p] = tuple(acc)
    return RankLadder(
        by_rank={p: tuple(v) for p, v in by_rank.items()},
        ideals=ideals,
    )


def tau(n: int, i: int) -> ChainMap:
    """Collapse {i, i+1} to i and shift everything above down by one."""
    if n < 2:
        raise ValueError(f"need a chain of size at least 2, got {n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"collapse position must satisfy 1 <= i <= {n - 1}, got {i}")
    return ChainMap(n, tuple(x if x <= i else x - 1 for x in range(1, n + 1)))


def lift_decomposition(a: ChainMap) -> tuple[ChainMap, ChainMap]:
    """Factor a rank-p ODCT map as delta * rho with both factors of rank p+1.

    delta splits one kernel block of a in two; rho re-collapses the split.
    The split block is the last one with at least two points (the last
    block itself can be a singleton), and the split peels off its maximum.
    Requires p <= n - 2.
    """
    if "ODCT" not in membership(a):
        raise ScopeError(f"lift requires a map in ODCT; {a} is outside it")
    n, p = a.n, a.rank
    if p > n - 2:
        raise ValueError(
            f"rank {p} cannot be lifted on a chain of size {n} (needs rank <= {n - 2})"
        )
    blocks = to_block_form(a).blocks
    j = max(k for k, blk in enumerate(blocks) if len(blk) >= 2)
    blk = blocks[j]
    delta_blocks = blocks[:j] + (blk[:-1], (blk[-1],)) + blocks[j + 1:]
    delta = from_block_form(BlockForm(delta_blocks, tuple(range(1, p + 2))))
    jj = j + 1  # 1-based index of the split block
    rho = ChainMap(
        n,
        tuple(
            x if x <= jj else (x - 1 if x <= p + 1 else p + 1)
            for x in range(1, n + 1)
        ),
    )
    return delta, rho


def generated_index_set(S: FiniteSemigroup, seed) -> frozenset[int]:
    """Indices of the subsemigroup of S generated by the seed indices."""
    known = set(seed)
    if not known:
        return frozenset()
    S.ensure_table()
    work = sorted(known)
    while work:
        i = work.pop()
        for j in list(known):
            for k in (S.product(i, j), S.product(j, i)):
                if k not in known:
                    known.add(k)
                    work.append(k)
    return frozenset(known)


def irreducible_indices(S: FiniteSemigroup) -> frozenset[int]:
    """Elements not generated by the rest of the semigroup."""
    everything = set(range(len(S)))
    return frozenset(
        i for i in everything if i not in generated_index_set(S, everything - {i})
    )


@dataclass
class GenSetCertificate:
    """A generating set together with verified minimality claims.

    is_unique_minimum is None when uniqueness was not established; it is
    only claimed for J-trivial targets, where every minimal generating
    set is the unique minimum one.
    """

    generators: tuple[ChainMap, ...]
    target: FiniteSemigroup
    is_generating: bool
    is_minimal: bool
    is_unique_minimum: bool | None

    @property
    def rank(self) -> int:
        return len(self.generators)


def exhaustive_minimum_search(
    S: FiniteSemigroup,
    size_ceiling: int = SUBSET_RANK_CEILING,
    budget: int = _SUBSET_BUDGET,
) -> tuple[int, tuple[tuple[ChainMap, ...], ...]]:
    """Smallest generating size and every generating subset of that size."""
    if len(S) > SUBSET_SIZE_CEILING:
        raise CapacityError(
            f"exhaustive subset search is capped at {SUBSET_SIZE_CEILING} "
            f"elements; got {len(S)}"
        )
    S.ensure_table()
    m = len(S)
    full = frozenset(range(m))
    tried = 0
    for k in range(1, min(m, size_ceiling) + 1):
        found: list[tuple[ChainMap, ...]] = []
        for combo in combinations(range(m), k):
            tried += 1
            if tried > budget:
                raise CapacityError(
                    f"exhaustive subset search exceeded its budget of {budget} subsets"
                )
            if generated_index_set(S, combo) == full:
                found.append(tuple(S.elements[i] for i in combo))
        if found:
            return k, tuple(found)
    raise CapacityError(
        f"no generating subset of size <= {size_ceiling} found"
    )


def rank_exact(S: FiniteSemigroup) -> GenSetCertificate:
    """Exact rank with a verified certificate.

    J-trivial targets: the irreducible elements form the unique minimum
    generating set; generation and one-removal minimality are verified,
    and for very small targets an exhaustive subset search cross-checks
    the result.  Other targets fall back to exhaustive search (capped)
    and make no uniqueness claim.
    """
    S.ensure_table()
    m = len(S)
    full = frozenset(range(m))
    if is_J_trivial(S):
        gen_idx = sorted(irreducible_indices(S))
        generating = generated_index_set(S, gen_idx) == full
        minimal = generating and all(
            generated_index_set(S, set(gen_idx) - {g}) != full for g in gen_idx
        )
        if m <= _AUTO_CROSS_VALIDATE:
            size, sets = exhaustive_minimum_search(S)
            expected = tuple(S.elements[i] for i in gen_idx)
            if size != len(gen_idx) or sets != (expected,):
                raise RuntimeError(
                    "irreducible-set certificate disagrees with exhaustive search"
                )
        return GenSetCertificate(
            generators=tuple(S.elements[i] for i in gen_idx),
            target=S,
            is_generating=generating,
            is_minimal=minimal,
            is_unique_minimum=True if (generating and minimal) else None,
        )
    if m > SUBSET_SIZE_CEILING:
        raise CapacityError(
            f"exact rank above {SUBSET_SIZE_CEILING} elements requires a "
            f"J-trivial semigroup; got {m} elements"
        )
    size, sets = exhaustive_minimum_search(S)
    return GenSetCertificate(
        generators=sets[0],
        target=S,
        is_generating=True,
        is_minimal=True,
        is_unique_minimum=None,
    )
