"""Natural partial order on semigroups of chain maps.

a <= b holds when a = lb and a = bm with a = am, for multipliers l, m
drawn from the ambient semigroup with an identity adjoined.  Alongside
the definitional witness search this module provides the closed-form
criteria for order-preserving contractions (dispatch on the rank of the
lower element), explicit multiplier constructions, and full order
tables with poset-axiom checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .chain_maps import ChainMap, compose, identity, membership, to_block_form
from .errors import CapacityError, ScopeError
from .semigroup_engine import FiniteSemigroup

ORDER_TABLE_CEILING = 512


@dataclass(frozen=True)
class OrderWitness:
    """Multipliers certifying a <= b: a = left*b and a = b*right = a*right.

    The identity flags record when a multiplier is the identity map, the
    adjoined element of S^1.
    """

    left_multiplier: ChainMap
    right_multiplier: ChainMap
    left_is_identity: bool
    right_is_identity: bool

    def validates(self, a: ChainMap, b: ChainMap) -> bool:
        return (
            compose(self.left_multiplier, b) == a
            and compose(b, self.right_multiplier) == a
            and compose(a, self.right_multiplier) == a
        )


def _witness(left: ChainMap, right: ChainMap) -> OrderWitness:
    ident = identity(left.n)
    return OrderWitness(left, right, left == ident, right == ident)


@dataclass(frozen=True)
class RelationSet:
    """A set of pairs from [n] x [n]."""

    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def __le__(self, other: "RelationSet") -> bool:
        return self.pairs <= other.pairs


def relation_sets(a: ChainMap, b: ChainMap) -> tuple[RelationSet, RelationSet]:
    """The pair sets {(x,y) : xb = ya} and {(x,y) : xa = ya}."""
    if a.n != b.n:
        raise ValueError(f"chain sizes differ: {a.n} vs {b.n}")
    pts = range(1, a.n + 1)
    ab_inv = frozenset((x, y) for x, y in iter_product(pts, pts) if b(x) == a(y))
    aa_inv = frozenset((x, y) for x, y in iter_product(pts, pts) if a(x) == a(y))
    return RelationSet(ab_inv), RelationSet(aa_inv)


def leq_Pn_criterion(a: ChainMap, b: ChainMap) -> bool:
    """Order test at the level of all full maps on the chain.

    True iff im a is contained in im b, ab-inverse is contained in
    aa-inverse, and bb-inverse is contained in aa-inverse.  This is
    necessary for a <= b in any subsemigroup; it is generally coarser
    than the order of the contraction families.
    """
    if a.n != b.n:
        raise ValueError(f"chain sizes differ: {a.n} vs {b.n}")
    if not set(a.image) <= set(b.image):
        return False
    ab_inv, aa_inv = relation_sets(a, b)
    if not ab_inv <= aa_inv:
        return False
    bb_inv = relation_sets(b, b)[1]
    return bb_inv <= aa_inv


def _s1_candidates(S: FiniteSemigroup) -> list[ChainMap]:
    """Identity first, then the elements in image order."""
    return [identity(S.n)] + list(S.elements)


def leq_definitional(a: ChainMap, b: ChainMap, S: FiniteSemigroup) -> OrderWitness | None:
    """Witness search for a <= b with multipliers from S with identity adjoined.

    The left and right multipliers are searched independently; the right
    one must satisfy both a = b*m and a = a*m.  Returns the first
    witness in the identity-first, then image-lexicographic order, or
    None when the elements are unrelated.
    """
    for m in (a, b):
        if m not in S:
            raise ValueError(f"{m} is not an element of the given semigroup")
    # a = left*b forces im a <= im b; a = b*right forces ker b <= ker a.
    if not set(a.image) <= set(b.image):
        return None
    if any(a.images[x] != a.images[y]
           for x in range(a.n) for y in range(x + 1, a.n)
           if b.images[x] == b.images[y]):
        return None
    left = None
    for cand in _s1_candidates(S):
        if compose(cand, b) == a:
            left = cand
            break
    if left is None:
        return None
    for cand in _s1_candidates(S):
        if compose(b, cand) == a and compose(a, cand) == a:
            return _witness(left, cand)
    return None


@dataclass(frozen=True)
class OctOrderConditions:
    """Clause-by-clause evaluation of the closed-form order criterion.

    Clauses that a given rank does not use are recorded as True.
    """

    rank_of_lower: int
    image_containment: bool
    middle_preimages: bool
    endpoint_values: bool

    @property
    def holds(self) -> bool:
        return self.image_containment and self.middle_preimages and self.endpoint_values

    def failing_clauses(self) -> tuple[str, ...]:
        out = []
        if not self.image_containment:
            out.append("image_containment")
        if not self.middle_preimages:
            out.append("middle_preimages")
        if not self.endpoint_values:
            out.append("endpoint_values")
        return tuple(out)


def _require_family(a: ChainMap, tag: str) -> None:
    if tag not in membership(a):
        raise ScopeError(f"criterion scope is {tag}; {a} is outside it")


def _preimage(b: ChainMap, v: int) -> tuple[int, ...]:
    return tuple(x for x in range(1, b.n + 1) if b(x) == v)


def oct_order_conditions(a: ChainMap, b: ChainMap) -> OctOrderConditions:
    """Closed-form criterion for a <= b among order-preserving contractions.

    Rank-1 lower element: its image point must lie in im b.  Rank 2:
    image containment plus both block-boundary value conditions.  Rank
    p >= 3: image containment, (x+i) pulled back through b must equal
    the block A_i for every middle index i, and the two boundary value
    conditions, where im a = {x+1, ..., x+p}.
    """
    _require_family(a, "OCT")
    _require_family(b, "OCT")
    if a.n != b.n:
        raise ValueError(f"chain sizes differ: {a.n} vs {b.n}")
    bf = to_block_form(a)
    p = a.rank
    x = bf.values[0] - 1
    if p == 1:
        return OctOrderConditions(
            rank_of_lower=1,
            image_containment=bf.values[0] in b.image,
            middle_preimages=True,
            endpoint_values=True,
        )
    blocks = bf.blocks
    contained = set(a.image) <= set(b.image)
    endpoints = b(max(blocks[0])) == x + 1 and b(min(blocks[-1])) == x + p
    if p == 2:
        return OctOrderConditions(2, contained, True, endpoints)
    middle = all(
        _preimage(b, x + i) == blocks[i - 1] for i in range(2, p)
    )
    return OctOrderConditions(p, contained, middle, endpoints)


def leq_OCT_theorem(a: ChainMap, b: ChainMap) -> bool:
    return oct_order_conditions(a, b).holds


def leq_ODCT_theorem(a: ChainMap, b: ChainMap, middle_reading: str = "forall") -> bool:
    """Closed-form criterion for a <= b among decreasing order-preserving contractions.

    Rank-1 lower element: always related.  Rank 2: b(max A_1) = 1 and
    b(min A_2) = 2.  Rank p >= 3: those boundary conditions at values 1
    and p plus the middle block condition (i) pulled back through b
    equals A_i, quantified per middle_reading: "forall" requires every
    middle index (this matches the definitional order), "forsome" the
    literal one-index reading, kept evaluable because the two diverge.
    """
    if middle_reading not in ("forall", "forsome"):
        raise ValueError(f"middle_reading must be 'forall' or 'forsome', got {middle_reading!r}")
    _require_family(a, "ODCT")
    _require_family(b, "ODCT")
    if a.n != b.n:
        raise ValueError(f"chain sizes differ: {a.n} vs {b.n}")
    p = a.rank
    if p == 1:
        return True
    blocks = to_block_form(a).blocks
    if not (b(max(blocks[0])) == 1 and b(min(blocks[-1])) == p):
        return False
    if p == 2:
        return True
    quant = all if middle_reading == "forall" else any
    return quant(_preimage(b, i) == blocks[i - 1] for i in range(2, p))


def construct_witnesses(a: ChainMap, b: ChainMap) -> OrderWitness:
    """Explicit multipliers for a <= b among order-preserving contractions.

    Requires rank(a) >= 2 and the closed-form criterion to hold.  The
    left multiplier sends A_1 to max A_1, fixes the middle blocks
    pointwise, and sends A_p to min A_p; the right multiplier collapses
    {1..x+1} to x+1, fixes x+2..x+p-1, and collapses {x+p..n} to x+p.
    Both are verified to be order-preserving contractions and the
    witness is verified against the defining equations.
    """
    if a.rank < 2:
        raise ValueError(f"witness construction needs rank >= 2, got rank {a.rank}")
    conds = oct_order_conditions(a, b)
    if not conds.holds:
        raise ValueError(
            f"criterion fails for {a} <= {b}: {', '.join(conds.failing_clauses())}"
        )
    n = a.n
    bf = to_block_form(a)
    blocks = bf.blocks
    p = a.rank
    x = bf.values[0] - 1
    first, last = set(blocks[0]), set(blocks[-1])
    hi1, lop = max(blocks[0]), min(blocks[-1])
    left = ChainMap(
        n,
        tuple(hi1 if y in first else (lop if y in last else y) for y in range(1, n + 1)),
    )
    right = ChainMap(
        n,
        tuple(
            x + 1 if y <= x + 1 else (y if y < x + p else x + p)
            for y in range(1, n + 1)
        ),
    )
    wit = _witness(left, right)
    if "OCT" not in membership(left) or "OCT" not in membership(right):
        raise RuntimeError("constructed multiplier left the family")
    if not wit.validates(a, b):
        raise RuntimeError(f"constructed witness fails the defining equations for {a} <= {b}")
    return wit


def order_table(S: FiniteSemigroup, max_size: int = ORDER_TABLE_CEILING) -> frozenset[tuple[ChainMap, ChainMap]]:
    """All related pairs (a, b) with a <= b by definitional search.

    Verifies that the outcome is a partial order before returning it.
    """
    if len(S) > max_size:
        raise CapacityError(f"order table is capped at {max_size} elements; got {len(S)}")
    pairs = frozenset(
        (a, b)
        for a in S.elements
        for b in S.elements
        if leq_definitional(a, b, S) is not None
    )
    for a in S.elements:
        if (a, a) not in pairs:
            raise RuntimeError(f"order table is not reflexive at {a}")
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            raise RuntimeError(f"order table is not antisymmetric at {a}, {b}")
    related = {}
    for a, b in pairs:
        related.setdefault(a, set()).add(b)
    for a, above in related.items():
        for b in above:
            if not related[b] <= above:
                c = sorted(related[b] - above, key=lambda m: m.images)[0]
                raise RuntimeError(f"order table is not transitive at {a}, {b}, {c}")
    return pairs
