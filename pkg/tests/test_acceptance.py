"""Acceptance suite: ten end-to-end criteria, one pass/fail line each.

Run with -s (or read the captured output) to see the per-criterion lines.
Every expected value here is either trivially forced by a definition or
was frozen from an independent reference computation.
"""

import functools
import json
import subprocess
import sys
import time

from contraction_semigroups import (
    ChainMap,
    EquivPartition,
    FiniteSemigroup,
    compose,
    construct_witnesses,
    enumerate_ODCT_direct,
    enumerate_filtered,
    exhaustive_minimum_search,
    family_semigroup,
    FamilySpec,
    greens_partitions,
    idempotent_ODCT,
    idempotents,
    identity,
    irreducible_indices,
    leq_definitional,
    leq_OCT_theorem,
    leq_ODCT_theorem,
    lift_decomposition,
    lstar_partition,
    oct_order_conditions,
    order_table,
    rank_exact,
    rank_ladder,
    rstar_partition,
    tau,
)
from contraction_semigroups.starred_relations import (
    abundance_report,
    dstar_partition,
    hstar_partition,
    jstar_partition,
)


def criterion(num, description):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[criterion {num:02d}] FAIL {description}")
                raise
            print(f"[criterion {num:02d}] PASS {description}")

        return wrapper

    return deco


def odct(n):
    return family_semigroup("ODCT", n)


@criterion(1, "every Green's relation is trivial on the decreasing family, n=1..6")
def test_01_green_relations_all_discrete():
    for n in range(1, 7):
        t0 = time.perf_counter()
        rel = greens_partitions(odct(n))
        for name in ("L", "R", "H", "D", "J"):
            assert rel[name].is_discrete(), (n, name)
        assert time.perf_counter() - t0 < 1.0, f"n={n} took too long"


@criterion(2, "starred partitions: L*=image equality, R*=equality, H*=R*, D*=L*=J*, n=1..5")
def test_02_starred_characterizations():
    for n in range(1, 6):
        S = odct(n)
        lp = lstar_partition(S)
        rp = rstar_partition(S)
        by_image = EquivPartition.from_key(
            len(S), lambda i: frozenset(S.element(i).images)
        )
        assert lp.classes == by_image.classes, n
        assert rp.is_discrete(), n
        assert hstar_partition(S).classes == rp.classes, n
        assert dstar_partition(S).classes == lp.classes, n
        assert jstar_partition(S).classes == dstar_partition(S).classes, n


@criterion(3, "left abundant and adequate for n=1..6; right abundance stops at n=3, "
             "where the gap is the class of [1,1,2]")
def test_03_abundance_and_adequacy():
    for n in range(1, 7):
        rep = abundance_report(odct(n))
        assert rep.left_abundant, n
        assert rep.left_adequate, n
        assert rep.right_abundant == (n <= 2), n
    rep3 = abundance_report(odct(3))
    assert rep3.witness_gaps == (((ChainMap(3, (1, 1, 2)),), "R*"),)


@criterion(4, "the idempotents are exactly the rank-p cutoffs and form a chain "
             "semilattice under min, n=1..7")
def test_04_idempotent_semilattice():
    for n in range(1, 8):
        S = FiniteSemigroup(enumerate_ODCT_direct(n), verify_closed=False)
        eps = {p: idempotent_ODCT(n, p) for p in range(1, n + 1)}
        assert set(idempotents(S)) == set(eps.values()), n
        for k in range(1, n + 1):
            for p in range(1, n + 1):
                assert compose(eps[k], eps[p]) == eps[min(k, p)], (n, k, p)
                assert compose(eps[k], eps[p]) == compose(eps[p], eps[k]), (n, k, p)


@criterion(5, "the rank-(n-1) slice has n-1 collapses (n=2..8), every low-rank map "
             "lifts one level (n<=6), and the slice generates everything below the "
             "identity (n<=6)")
def test_05_generator_ladder():
    for n in range(2, 9):
        slice_maps = [m for m in enumerate_ODCT_direct(n) if m.rank == n - 1]
        assert len(slice_maps) == n - 1, n
        assert set(slice_maps) == {tau(n, i) for i in range(1, n)}, n
    for n in range(2, 7):
        for a in enumerate_ODCT_direct(n):
            if a.rank <= n - 2:
                d, r = lift_decomposition(a)
                assert compose(d, r) == a
                assert d.rank == r.rank == a.rank + 1
        S = odct(n)
        ladder = rank_ladder(S)
        from contraction_semigroups import generated_index_set

        seed = [S.index(m) for m in ladder.slice(n - 1)]
        generated = generated_index_set(S, seed)
        assert generated == frozenset(range(len(S))) - {S.index(identity(n))}, n


@criterion(6, "rank n for the full family and n-1 for its top ideal (n=3..6), with "
             "the irreducibles as the unique minimum generating set, exhaustively "
             "confirmed for n=3..4")
def test_06_rank_certificates():
    for n in range(3, 7):
        S = odct(n)
        cert = rank_exact(S)
        assert cert.rank == n
        assert cert.is_generating and cert.is_minimal
        assert cert.is_unique_minimum is True
        want = {S.index(tau(n, i)) for i in range(1, n)} | {S.index(identity(n))}
        assert irreducible_indices(S) == frozenset(want)
        assert set(cert.generators) == {S.element(i) for i in want}

        K = FiniteSemigroup(rank_ladder(S).ideal(n - 1))
        kcert = rank_exact(K)
        assert kcert.rank == n - 1
        assert set(kcert.generators) == {tau(n, i) for i in range(1, n)}
    for n in (3, 4):
        S = odct(n)
        size, sets = exhaustive_minimum_search(S)
        assert size == n
        assert sets == (rank_exact(S).generators,)


@criterion(7, "closed-form order criteria match the witness search on every pair "
             "(order-preserving n=1..5, decreasing n=1..7) and the result is a poset")
def test_07_natural_order_equivalence():
    for n in range(1, 6):
        S = family_semigroup("OCT", n)
        pairs = order_table(S)  # raises unless reflexive, antisymmetric, transitive
        for a in S.elements:
            for b in S.elements:
                assert leq_OCT_theorem(a, b) == ((a, b) in pairs), (n, str(a), str(b))
    for n in range(1, 8):
        S = odct(n)
        pairs = order_table(S)
        for a in S.elements:
            for b in S.elements:
                want = (a, b) in pairs
                assert leq_ODCT_theorem(a, b) == want, (n, str(a), str(b))


@criterion(8, "the chain-of-ten worked pair: explicit multipliers validate one "
             "comparison and the middle-block clause is the sole failure of the other")
def test_08_worked_example():
    alpha = ChainMap(10, (4, 4, 4, 5, 5, 6, 7, 7, 8, 8))
    beta1 = ChainMap(10, (3, 3, 4, 5, 5, 6, 7, 7, 8, 9))
    beta2 = ChainMap(10, (3, 3, 4, 5, 6, 7, 7, 7, 8, 9))
    lam = ChainMap(10, (3, 3, 3, 4, 5, 6, 7, 8, 9, 9))
    mu = ChainMap(10, (4, 4, 4, 4, 5, 6, 7, 8, 8, 8))

    assert compose(lam, beta1) == alpha
    assert compose(beta1, mu) == alpha
    assert compose(alpha, mu) == alpha
    assert leq_OCT_theorem(alpha, beta1)

    wit = construct_witnesses(alpha, beta1)
    assert wit.left_multiplier == lam
    assert wit.right_multiplier == mu
    assert wit.validates(alpha, beta1)

    conds = oct_order_conditions(alpha, beta2)
    assert not conds.holds
    assert conds.failing_clauses() == ("middle_preimages",)


@criterion(9, "direct generation of the decreasing family equals brute-force "
             "filtering for n<=7, with 2^(n-1) elements")
def test_09_enumeration_consistency():
    for n in range(1, 8):
        direct = enumerate_ODCT_direct(n)
        assert len(direct) == 2 ** (n - 1), n
        assert direct == enumerate_filtered(FamilySpec("ODCT", n)), n


@criterion(10, "the full self-check battery passes from the command line in "
              "under sixty seconds")
def test_10_cli_verify_all_under_a_minute():
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "contraction_semigroups", "verify-all",
         "--family", "ODCT", "--n-max", "5"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stderr
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    payload = json.loads(proc.stdout)
    assert payload["all_passed"] is True
    assert len(payload["checks"]) == 9
    assert all(c["passed"] for c in payload["checks"])
