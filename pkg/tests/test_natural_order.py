"""Natural partial order: witness search, closed-form criteria, order tables."""

import pytest

from contraction_semigroups import (
    CapacityError,
    ChainMap,
    OrderWitness,
    ScopeError,
    compose,
    construct_witnesses,
    enumerate_ODCT_direct,
    family_semigroup,
    identity,
    leq_definitional,
    leq_OCT_theorem,
    leq_ODCT_theorem,
    leq_Pn_criterion,
    oct_order_conditions,
    order_table,
    relation_sets,
)

# a hand-checked chain-of-ten configuration used throughout this module
ALPHA = ChainMap(10, (4, 4, 4, 5, 5, 6, 7, 7, 8, 8))
BETA1 = ChainMap(10, (3, 3, 4, 5, 5, 6, 7, 7, 8, 9))   # above ALPHA
BETA2 = ChainMap(10, (3, 3, 4, 5, 6, 7, 7, 7, 8, 9))   # not above ALPHA
LAM = ChainMap(10, (3, 3, 3, 4, 5, 6, 7, 8, 9, 9))
MU = ChainMap(10, (4, 4, 4, 4, 5, 6, 7, 8, 8, 8))


def odct(n):
    return family_semigroup("ODCT", n)


class TestOrderWitness:
    def test_hand_checked_multipliers(self):
        wit = OrderWitness(LAM, MU, False, False)
        assert compose(LAM, BETA1) == ALPHA
        assert compose(BETA1, MU) == ALPHA
        assert compose(ALPHA, MU) == ALPHA
        assert wit.validates(ALPHA, BETA1)
        assert not wit.validates(ALPHA, BETA2)

    def test_reflexive_witness_uses_identities(self):
        S = odct(3)
        a = ChainMap(3, (1, 1, 2))
        wit = leq_definitional(a, a, S)
        assert wit is not None
        assert wit.left_is_identity and wit.right_is_identity
        assert wit.validates(a, a)


class TestRelationSets:
    def test_small_example(self):
        a = ChainMap(3, (1, 1, 2))
        b = ChainMap(3, (1, 2, 2))
        ab_inv, aa_inv = relation_sets(a, b)
        assert ab_inv.pairs == {(1, 1), (1, 2), (2, 3), (3, 3)}
        assert aa_inv.pairs == {(1, 1), (1, 2), (2, 1), (2, 2), (3, 3)}
        assert (1, 1) in ab_inv
        assert not ab_inv <= aa_inv  # (2, 3) is missing on the right

    def test_matches_pointwise_definition(self):
        maps = enumerate_ODCT_direct(4)
        for a in maps:
            for b in maps:
                ab_inv, aa_inv = relation_sets(a, b)
                for x in range(1, 5):
                    for y in range(1, 5):
                        assert ((x, y) in ab_inv) == (b(x) == a(y))
                        assert ((x, y) in aa_inv) == (a(x) == a(y))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            relation_sets(ChainMap(2, (1, 1)), ChainMap(3, (1, 1, 1)))


class TestFullMapCriterion:
    def test_chain_of_ten(self):
        assert leq_Pn_criterion(ALPHA, BETA1)
        assert not leq_Pn_criterion(ALPHA, BETA2)
        assert leq_Pn_criterion(ALPHA, ALPHA)

    def test_constant_below_identity(self):
        assert leq_Pn_criterion(ChainMap(3, (1, 1, 1)), identity(3))

    def test_definitional_implies_it(self):
        S = family_semigroup("OCT", 4)
        for a in S.elements:
            for b in S.elements:
                if leq_definitional(a, b, S) is not None:
                    assert leq_Pn_criterion(a, b), (str(a), str(b))


class TestDefinitionalSearch:
    def test_bottom_element(self):
        S = odct(3)
        bottom = ChainMap(3, (1, 1, 1))
        for b in S.elements:
            assert leq_definitional(bottom, b, S) is not None

    def test_nothing_strictly_above_identity(self):
        S = odct(4)
        for b in S.elements:
            wit = leq_definitional(identity(4), b, S)
            assert (wit is not None) == (b == identity(4))

    def test_non_member_rejected(self):
        S = odct(3)
        with pytest.raises(ValueError, match="not an element"):
            leq_definitional(ChainMap(3, (2, 2, 2)), ChainMap(3, (1, 1, 1)), S)

    def test_deterministic_witness(self):
        S = odct(4)
        a = ChainMap(4, (1, 1, 2, 2))
        b = ChainMap(4, (1, 1, 2, 3))
        first = leq_definitional(a, b, S)
        second = leq_definitional(a, b, S)
        assert first == second
        assert first is not None and first.validates(a, b)


class TestClosedFormOCT:
    def test_matches_definitional(self):
        for n in range(1, 5):
            S = family_semigroup("OCT", n)
            for a in S.elements:
                for b in S.elements:
                    want = leq_definitional(a, b, S) is not None
                    assert leq_OCT_theorem(a, b) == want, (str(a), str(b))

    def test_clause_report_on_chain_of_ten(self):
        good = oct_order_conditions(ALPHA, BETA1)
        assert good.holds
        assert good.rank_of_lower == 5
        assert good.failing_clauses() == ()
        bad = oct_order_conditions(ALPHA, BETA2)
        assert not bad.holds
        assert bad.failing_clauses() == ("middle_preimages",)

    def test_scope(self):
        with pytest.raises(ScopeError):
            leq_OCT_theorem(ChainMap(2, (2, 1)), identity(2))
        with pytest.raises(ScopeError):
            oct_order_conditions(identity(2), ChainMap(2, (2, 1)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            leq_OCT_theorem(ChainMap(2, (1, 1)), ChainMap(3, (1, 1, 1)))


class TestClosedFormODCT:
    def test_matches_definitional(self):
        for n in range(1, 6):
            S = odct(n)
            for a in S.elements:
                for b in S.elements:
                    want = leq_definitional(a, b, S) is not None
                    assert leq_ODCT_theorem(a, b) == want, (str(a), str(b))

    def test_one_index_reading_diverges_at_five(self):
        a = ChainMap(5, (1, 2, 2, 3, 4))
        b = ChainMap(5, (1, 1, 2, 3, 4))
        assert leq_ODCT_theorem(a, b, middle_reading="forsome")
        assert not leq_ODCT_theorem(a, b, middle_reading="forall")
        assert leq_definitional(a, b, odct(5)) is None

    def test_one_index_reading_disagreement_is_exactly_two_pairs(self):
        S = odct(5)
        diffs = {
            (str(a), str(b))
            for a in S.elements
            for b in S.elements
            if leq_ODCT_theorem(a, b, middle_reading="forsome")
            != (leq_definitional(a, b, S) is not None)
        }
        assert diffs == {
            ("n=5;[1,2,2,3,4]", "n=5;[1,1,2,3,4]"),
            ("n=5;[1,2,3,3,4]", "n=5;[1,2,3,4,4]"),
        }

    def test_readings_agree_up_to_four(self):
        for n in range(1, 5):
            S = odct(n)
            for a in S.elements:
                for b in S.elements:
                    assert leq_ODCT_theorem(a, b, "forall") == leq_ODCT_theorem(
                        a, b, "forsome"
                    )

    def test_rank_two_needs_both_low_values_in_the_upper_image(self):
        for n in (4, 5):
            S = odct(n)
            for a in S.elements:
                if a.rank != 2:
                    continue
                for b in S.elements:
                    if leq_ODCT_theorem(a, b):
                        assert {1, 2} <= set(b.image)

    def test_bad_reading(self):
        a = ChainMap(3, (1, 1, 1))
        with pytest.raises(ValueError, match="forall.*forsome|forsome.*forall"):
            leq_ODCT_theorem(a, a, middle_reading="some")

    def test_scope(self):
        with pytest.raises(ScopeError):
            leq_ODCT_theorem(ChainMap(3, (2, 2, 2)), ChainMap(3, (1, 1, 1)))


class TestAmbientIndependence:
    def test_odct_pairs_order_the_same_inside_the_bigger_family(self):
        for n in range(1, 6):
            small = odct(n)
            big = family_semigroup("OCT", n)
            for a in small.elements:
                for b in small.elements:
                    inner = leq_definitional(a, b, small) is not None
                    outer = leq_definitional(a, b, big) is not None
                    assert inner == outer, (n, str(a), str(b))


class TestConstructWitnesses:
    def test_reproduces_hand_checked_multipliers(self):
        wit = construct_witnesses(ALPHA, BETA1)
        assert wit.left_multiplier == LAM
        assert wit.right_multiplier == MU
        assert not wit.left_is_identity and not wit.right_is_identity

    def test_rank_two_example(self):
        wit = construct_witnesses(ChainMap(4, (1, 1, 2, 2)), ChainMap(4, (1, 1, 2, 3)))
        assert wit.left_multiplier == ChainMap(4, (2, 2, 3, 3))
        assert wit.right_multiplier == ChainMap(4, (1, 2, 2, 2))

    def test_validates_across_a_family(self):
        S = family_semigroup("OCT", 4)
        for a in S.elements:
            if a.rank < 2:
                continue
            for b in S.elements:
                if leq_OCT_theorem(a, b):
                    assert construct_witnesses(a, b).validates(a, b)

    def test_rank_one_rejected(self):
        with pytest.raises(ValueError, match="rank"):
            construct_witnesses(ChainMap(3, (1, 1, 1)), identity(3))

    def test_unrelated_pair_rejected_naming_clauses(self):
        with pytest.raises(ValueError, match="middle_preimages"):
            construct_witnesses(ALPHA, BETA2)


# pair counts of the full order tables, frozen from an independent
# witness-search implementation
ORDER_PAIR_COUNTS = {
    "ODCT": {1: 1, 2: 3, 3: 8, 4: 20, 5: 48},
    "OCT": {1: 1, 2: 5, 3: 21, 4: 77},
}


class TestOrderTable:
    def test_smallest_table_exactly(self):
        got = order_table(odct(2))
        c, i = ChainMap(2, (1, 1)), ChainMap(2, (1, 2))
        assert got == {(c, c), (i, i), (c, i)}

    def test_frozen_pair_counts(self):
        for family, counts in ORDER_PAIR_COUNTS.items():
            for n, want in counts.items():
                got = order_table(family_semigroup(family, n))
                assert len(got) == want, (family, n)

    def test_identity_is_maximal(self):
        pairs = order_table(odct(4))
        for a, b in pairs:
            if a == identity(4):
                assert b == identity(4)

    def test_poset_axioms_hold_on_the_result(self):
        S = family_semigroup("OCT", 3)
        pairs = order_table(S)
        for a in S.elements:
            assert (a, a) in pairs
        for a, b in pairs:
            if (b, a) in pairs:
                assert a == b

    def test_capacity(self):
        with pytest.raises(CapacityError):
            order_table(odct(4), max_size=4)
