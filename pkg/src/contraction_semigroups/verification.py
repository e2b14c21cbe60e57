"""Named whole-theory checks, each runnable on its own or via the CLI.

Every check re-derives a structural claim about the contraction
families from scratch and compares against the closed-form description.
Checks are pure and deterministic; each returns a CheckResult whose
details string is stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain_maps import ChainMap, compose, identity, membership
from .family_enumeration import (
    FamilySpec,
    enumerate_ODCT_direct,
    enumerate_filtered,
    idempotent_ODCT,
)
from .natural_order import (
    OrderWitness,
    construct_witnesses,
    leq_ODCT_theorem,
    leq_OCT_theorem,
    leq_Pn_criterion,
    oct_order_conditions,
    order_table,
)
from .rank_analysis import (
    generated_index_set,
    lift_decomposition,
    rank_exact,
    rank_ladder,
    tau,
)
from .semigroup_engine import (
    EquivPartition,
    FiniteSemigroup,
    family_semigroup,
    greens_partitions,
    idempotents,
    is_semilattice,
)
from .starred_relations import (
    abundance_report,
    dstar_partition,
    hstar_partition,
    jstar_partition,
    lstar_partition,
    rstar_partition,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


def _ns(n_max: int, lo: int, hi: int) -> range:
    return range(lo, min(n_max, hi) + 1)


def check_enumeration_consistency(n_max: int = 5) -> CheckResult:
    """Direct interval-block generation agrees with the brute filter."""
    name = "enumeration_consistency"
    sizes = []
    for n in _ns(n_max, 1, 7):
        direct = enumerate_ODCT_direct(n)
        filtered = enumerate_filtered(FamilySpec("ODCT", n))
        if direct != filtered:
            extra = sorted(set(direct) ^ set(filtered), key=lambda m: m.images)
            return CheckResult(
                name, False,
                f"n={n}: direct and filtered enumerations differ, e.g. {extra[0]}",
            )
        if len(direct) != 2 ** (n - 1):
            return CheckResult(
                name, False,
                f"n={n}: expected 2^{n - 1} = {2 ** (n - 1)} maps, got {len(direct)}",
            )
        sizes.append(len(direct))
    hi = min(n_max, 7)
    return CheckResult(
        name, True,
        f"n=1..{hi}: direct == filtered, sizes {','.join(map(str, sizes))}",
    )


def check_green_relations_trivial(n_max: int = 5) -> CheckResult:
    """All five Green's partitions are discrete on the decreasing family."""
    name = "green_relations_trivial"
    for n in _ns(n_max, 1, 6):
        S = family_semigroup("ODCT", n)
        parts = greens_partitions(S)
        for rel in ("L", "R", "H", "D", "J"):
            if not parts[rel].is_discrete():
                i, j = next(
                    (i, j)
                    for i in range(len(S))
                    for j in range(i + 1, len(S))
                    if parts[rel].related(i, j)
                )
                return CheckResult(
                    name, False,
                    f"n={n}: {rel} relates {S.element(i)} and {S.element(j)}",
                )
        if parts["D"] != parts["J"]:
            return CheckResult(name, False, f"n={n}: D and J partitions differ")
    hi = min(n_max, 6)
    return CheckResult(name, True, f"n=1..{hi}: L, R, H, D, J all discrete")


def check_starred_characterizations(n_max: int = 5) -> CheckResult:
    """Starred relations collapse to image equality / plain equality."""
    name = "starred_characterizations"
    for n in _ns(n_max, 1, 5):
        S = family_semigroup("ODCT", n)
        lstar = lstar_partition(S)
        by_image = EquivPartition.from_key(
            len(S), lambda i: frozenset(S.element(i).image)
        )
        if lstar != by_image:
            return CheckResult(
                name, False, f"n={n}: L* differs from the equal-image partition"
            )
        rstar = rstar_partition(S)
        if not rstar.is_discrete():
            return CheckResult(name, False, f"n={n}: R* is not the equality relation")
        if hstar_partition(S) != rstar:
            return CheckResult(name, False, f"n={n}: H* differs from R*")
        dstar = dstar_partition(S)
        if dstar != lstar:
            return CheckResult(name, False, f"n={n}: D* differs from L*")
        if jstar_partition(S) != dstar:
            return CheckResult(name, False, f"n={n}: J* differs from D*")
    hi = min(n_max, 5)
    return CheckResult(
        name, True,
        f"n=1..{hi}: L* = equal-image, R* = equality, H* = R*, D* = L*, J* = D*",
    )


def check_abundance_and_adequacy(n_max: int = 5) -> CheckResult:
    """Left abundance always; right abundance only on tiny chains."""
    name = "abundance_and_adequacy"
    for n in _ns(n_max, 1, 6):
        rep = abundance_report(family_semigroup("ODCT", n))
        if not rep.left_abundant or not rep.left_adequate:
            return CheckResult(
                name, False, f"n={n}: expected left abundant and left adequate"
            )
        if rep.right_abundant != (n <= 2):
            return CheckResult(
                name, False,
                f"n={n}: right abundance is {rep.right_abundant}, expected {n <= 2}",
            )
        if n == 3:
            want = ((ChainMap(3, (1, 1, 2)),), "R*")
            if rep.witness_gaps != (want,):
                got = "; ".join(
                    f"{kind} class {{{', '.join(map(str, cls))}}}"
                    for cls, kind in rep.witness_gaps
                )
                return CheckResult(
                    name, False,
                    f"n=3: idempotent-free classes should be exactly the R* class "
                    f"of n=3;[1,1,2], got {got}",
                )
    hi = min(n_max, 6)
    return CheckResult(
        name, True,
        f"n=1..{hi}: left abundant and adequate; right abundant iff n <= 2; "
        f"n=3 gap is the R* class of n=3;[1,1,2]",
    )


def check_idempotent_semilattice(n_max: int = 5) -> CheckResult:
    """E(ODCT_n) is the chain of clamp maps and forms a semilattice."""
    name = "idempotent_semilattice"
    for n in _ns(n_max, 1, 7):
        S = family_semigroup("ODCT", n)
        idems = idempotents(S)
        expected = tuple(
            sorted((idempotent_ODCT(n, p) for p in range(1, n + 1)),
                   key=lambda m: m.images)
        )
        if idems != expected:
            return CheckResult(
                name, False,
                f"n={n}: idempotents are {[str(m) for m in idems]}, "
                f"expected the {n} clamp maps",
            )
        if not is_semilattice(idems):
            return CheckResult(name, False, f"n={n}: idempotents do not form a semilattice")
        for k in range(1, n + 1):
            for p in range(1, n + 1):
                ek, ep = idempotent_ODCT(n, k), idempotent_ODCT(n, p)
                if compose(ek, ep) != idempotent_ODCT(n, min(k, p)):
                    return CheckResult(
                        name, False,
                        f"n={n}: clamp product law fails at k={k}, p={p}",
                    )
    hi = min(n_max, 7)
    return CheckResult(
        name, True,
        f"n=1..{hi}: idempotents are the clamp maps, a semilattice with "
        f"eps_k eps_p = eps_min(k,p)",
    )


def check_generator_ladder(n_max: int = 5) -> CheckResult:
    """Rank slices: adjacent collapses fill the top proper slice and generate it."""
    name = "generator_ladder"
    for n in _ns(n_max, 2, 8):
        S = family_semigroup("ODCT", n)
        ladder = rank_ladder(S)
        top = ladder.slice(n - 1)
        taus = tuple(sorted((tau(n, i) for i in range(1, n)), key=lambda m: m.images))
        if len(top) != n - 1 or top != taus:
            return CheckResult(
                name, False,
                f"n={n}: rank-(n-1) slice has {len(top)} maps, expected the "
                f"{n - 1} adjacent collapses",
            )
        if ladder.slice(n) != (identity(n),):
            return CheckResult(name, False, f"n={n}: rank-n slice is not just the identity")
    for n in _ns(n_max, 2, 6):
        S = family_semigroup("ODCT", n)
        for a in S.elements:
            if a.rank > n - 2:
                continue
            d, r = lift_decomposition(a)
            ok = (
                compose(d, r) == a
                and d.rank == a.rank + 1
                and r.rank == a.rank + 1
                and "ODCT" in membership(d)
                and "ODCT" in membership(r)
            )
            if not ok:
                return CheckResult(name, False, f"n={n}: lift fails on {a}")
        top_idx = [S.index(tau(n, i)) for i in range(1, n)]
        gen = generated_index_set(S, top_idx)
        want = frozenset(range(len(S))) - {S.index(identity(n))}
        if gen != want:
            return CheckResult(
                name, False,
                f"n={n}: adjacent collapses generate {len(gen)} maps, "
                f"expected everything except the identity",
            )
    hi_c, hi_g = min(n_max, 8), min(n_max, 6)
    return CheckResult(
        name, True,
        f"counts n=2..{hi_c}: top proper slice = {{tau_i}}, size n-1; "
        f"n=2..{hi_g}: every lift recomposes and <G_(n-1)> = all maps but the identity",
    )


def check_rank_certificates(n_max: int = 5) -> CheckResult:
    """Exact ranks with irreducible-set certificates on S and its top ideal."""
    name = "rank_certificates"
    for n in _ns(n_max, 3, 6):
        S = family_semigroup("ODCT", n)
        cert = rank_exact(S)
        taus = {tau(n, i) for i in range(1, n)}
        want_gens = tuple(sorted(taus | {identity(n)}, key=lambda m: m.images))
        if not (cert.is_generating and cert.is_minimal and cert.rank == n):
            return CheckResult(name, False, f"n={n}: whole-family rank is not {n}")
        if cert.generators != want_gens:
            return CheckResult(
                name, False,
                f"n={n}: generators {[str(m) for m in cert.generators]} are not "
                f"the adjacent collapses plus the identity",
            )
        if cert.is_unique_minimum is not True:
            return CheckResult(name, False, f"n={n}: uniqueness not certified")
        K = FiniteSemigroup(rank_ladder(S).ideal(n - 1))
        kcert = rank_exact(K)
        if not (kcert.is_generating and kcert.is_minimal and kcert.rank == n - 1):
            return CheckResult(name, False, f"n={n}: top-ideal rank is not {n - 1}")
        if set(kcert.generators) != taus:
            return CheckResult(
                name, False,
                f"n={n}: top-ideal generators are not exactly the adjacent collapses",
            )
    hi = min(n_max, 6)
    return CheckResult(
        name, True,
        f"n=3..{hi}: rank n with unique minimum generating set; top ideal has "
        f"rank n-1 generated by the adjacent collapses",
    )


def check_natural_order_equivalence(
    n_max: int = 5, middle_reading: str = "forall"
) -> CheckResult:
    """Closed-form order criteria match the definitional witness search."""
    name = "natural_order_equivalence"
    for n in _ns(n_max, 1, 5):
        S = family_semigroup("OCT", n)
        pairs = order_table(S)
        for a in S.elements:
            for b in S.elements:
                if leq_OCT_theorem(a, b) != ((a, b) in pairs):
                    return CheckResult(
                        name, False,
                        f"OCT n={n}: criterion and search disagree on {a} <= {b}",
                    )
                if (a, b) in pairs and a.rank >= 2:
                    wit = construct_witnesses(a, b)
                    if not wit.validates(a, b):
                        return CheckResult(
                            name, False,
                            f"OCT n={n}: constructed witness fails for {a} <= {b}",
                        )
    disagrees = []
    for n in _ns(n_max, 1, 7):
        S = family_semigroup("ODCT", n)
        pairs = order_table(S)
        for a in S.elements:
            for b in S.elements:
                related = (a, b) in pairs
                if leq_ODCT_theorem(a, b, middle_reading) != related:
                    disagrees.append((n, a, b, related))
    if disagrees:
        n, a, b, related = disagrees[0]
        verdict = "relates" if related else "does not relate"
        return CheckResult(
            name, False,
            f"ODCT n={n}: '{middle_reading}' reading disagrees with the search "
            f"on {len(disagrees)} pairs; first: search {verdict} {a} and {b}",
        )
    hi_oct, hi_odct = min(n_max, 5), min(n_max, 7)
    return CheckResult(
        name, True,
        f"OCT n=1..{hi_oct} and ODCT n=1..{hi_odct} (reading: {middle_reading}): "
        f"criteria match the definitional search on all pairs; witnesses validate; "
        f"order tables are posets",
    )


def check_worked_example_chain10(n_max: int = 5) -> CheckResult:
    """The size-10 worked pair: one comparison holds, the other fails one clause."""
    name = "worked_example_chain10"
    alpha = ChainMap(10, (4, 4, 4, 5, 5, 6, 7, 7, 8, 8))
    beta1 = ChainMap(10, (3, 3, 4, 5, 5, 6, 7, 7, 8, 9))
    beta2 = ChainMap(10, (3, 3, 4, 5, 6, 7, 7, 7, 8, 9))
    lam = ChainMap(10, (3, 3, 3, 4, 5, 6, 7, 8, 9, 9))
    mu = ChainMap(10, (4, 4, 4, 4, 5, 6, 7, 8, 8, 8))
    for m in (alpha, beta1, beta2, lam, mu):
        if "OCT" not in membership(m):
            return CheckResult(name, False, f"{m} is not an order-preserving contraction")
    wit = OrderWitness(lam, mu, False, False)
    if not wit.validates(alpha, beta1):
        return CheckResult(name, False, "displayed multipliers fail the defining equations")
    if not leq_OCT_theorem(alpha, beta1):
        return CheckResult(name, False, "criterion rejects the related pair")
    if not leq_Pn_criterion(alpha, beta1):
        return CheckResult(name, False, "full-map necessary condition fails on the related pair")
    built = construct_witnesses(alpha, beta1)
    if (built.left_multiplier, built.right_multiplier) != (lam, mu):
        return CheckResult(
            name, False,
            f"construction gives {built.left_multiplier}, {built.right_multiplier} "
            f"instead of the displayed multipliers",
        )
    conds = oct_order_conditions(alpha, beta2)
    if conds.holds or conds.failing_clauses() != ("middle_preimages",):
        return CheckResult(
            name, False,
            f"unrelated pair should fail exactly middle_preimages, "
            f"failing clauses: {conds.failing_clauses()}",
        )
    return CheckResult(
        name, True,
        "size-10 pair: multipliers validate and are reproduced by the construction; "
        "the unrelated pair fails exactly the middle_preimages clause",
    )


_CHECKS = (
    check_abundance_and_adequacy,
    check_enumeration_consistency,
    check_generator_ladder,
    check_green_relations_trivial,
    check_idempotent_semilattice,
    check_natural_order_equivalence,
    check_rank_certificates,
    check_starred_characterizations,
    check_worked_example_chain10,
)


def run_all_checks(
    n_max: int = 5, middle_reading: str = "forall"
) -> tuple[CheckResult, ...]:
    """Run every named check, capped at n_max, ordered by check name."""
    results = []
    for fn in _CHECKS:
        if fn is check_natural_order_equivalence:
            results.append(fn(n_max, middle_reading))
        else:
            results.append(fn(n_max))
    return tuple(sorted(results, key=lambda r: r.name))
