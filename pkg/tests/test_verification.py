"""The named self-check battery behind the verify-all command."""

from contraction_semigroups import CheckResult, run_all_checks
from contraction_semigroups.verification import check_natural_order_equivalence

CHECK_NAMES = (
    "abundance_and_adequacy",
    "enumeration_consistency",
    "generator_ladder",
    "green_relations_trivial",
    "idempotent_semilattice",
    "natural_order_equivalence",
    "rank_certificates",
    "starred_characterizations",
    "worked_example_chain10",
)


class TestRunAllChecks:
    def test_all_pass_at_default_reading(self):
        results = run_all_checks(4)
        assert len(results) == len(CHECK_NAMES)
        assert tuple(r.name for r in results) == CHECK_NAMES
        for r in results:
            assert r.passed, f"{r.name}: {r.details}"
            assert r.details  # every verdict says what was covered

    def test_one_index_reading_passes_on_small_chains(self):
        # the two readings of the middle-block clause coincide until the
        # lower rank reaches 4, which needs a chain of size 5
        results = run_all_checks(4, middle_reading="forsome")
        assert all(r.passed for r in results)

    def test_one_index_reading_fails_at_five(self):
        results = run_all_checks(5, middle_reading="forsome")
        by_name = {r.name: r for r in results}
        bad = by_name["natural_order_equivalence"]
        assert not bad.passed
        assert "forsome" in bad.details
        assert "2 pairs" in bad.details
        others = [r for r in results if r.name != "natural_order_equivalence"]
        assert all(r.passed for r in others)

    def test_deterministic_output(self):
        a = run_all_checks(4)
        b = run_all_checks(4)
        assert a == b


class TestSingleCheck:
    def test_order_equivalence_details_name_the_coverage(self):
        r = check_natural_order_equivalence(3)
        assert r.passed
        assert r.name == "natural_order_equivalence"
        assert "n=1..3" in r.details

    def test_check_result_is_a_plain_record(self):
        r = CheckResult(name="x", passed=False, details="why")
        assert (r.name, r.passed, r.details) == ("x", False, "why")
