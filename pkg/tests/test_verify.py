"""Named verification checks: statuses, witnesses, reproducibility."""

import pytest

from binsum.errors import UsageError
from binsum.exactalg import ShiftOp, parse
from binsum.seqgen import a_sum, fibonacci_number
from binsum.verify import (
    CheckResult,
    gf_check,
    oeis_prefix,
    pathweight_formula_reports,
    pathweight_recurrence_check,
    run_suite,
    schur_fibonacci_check,
    suite_to_markdown,
    _weight_operator,
)


class TestSchur:
    def test_passes_to_60(self):
        assert schur_fibonacci_check(60).status == "pass"

    def test_value_at_n10(self):
        assert a_sum(10, 5, 0, 2).eval_at(-1) == 89 == fibonacci_number(11)

    def test_value_at_n1_offset2(self):
        assert a_sum(1, 5, 2, 2).eval_at(-1) == fibonacci_number(1) == 1

    def test_n0(self):
        assert a_sum(0, 5, 0, 2).eval_at(-1) == 1

    def test_operator_factorization(self):
        lhs = parse("E^5 - 5*E^3 + 5*E + 2", kind="shiftop")
        e = ShiftOp.shift()
        assert lhs == (e + 2) * (e * e - e - 1) ** 2


class TestGf:
    @pytest.mark.parametrize("m", (2, 3))
    @pytest.mark.parametrize("i", range(1, 7))
    def test_passes(self, m, i):
        assert gf_check(m, i, 30).status == "pass"

    def test_i5_coefficient_is_fibonacci(self):
        # Coefficient of x^5 at z = -1 for the order-5 sum: F_6 = 8.
        assert a_sum(5, 5, 0, 2).eval_at(-1) == 8

    def test_rejects_unrecorded_m(self):
        with pytest.raises(UsageError):
            gf_check(4, 1, 10)


class TestPathweight:
    def test_m2_operator_shape(self):
        op = _weight_operator(2)
        assert op == parse("E^2 - E - t", kind="shiftop")

    @pytest.mark.parametrize("m", (2, 3, 4))
    def test_passes(self, m):
        assert pathweight_recurrence_check(m, 14).status == "pass"

    def test_operator_order(self):
        for m in (2, 3, 4, 5):
            assert _weight_operator(m).order == 2 * m - 2

    def test_cap_reports_only(self):
        res = pathweight_recurrence_check(2, 40, cap=10)
        assert res.status == "report-only"
        assert "skipped" in res.witness

    def test_formula_reports(self):
        reports = pathweight_formula_reports(2, 8)
        assert all(r.status == "report-only" for r in reports)
        assert all(r.witness["comparison"] == "equal" for r in reports)


class TestOeis:
    def test_fibonacci_series(self):
        assert oeis_prefix("A000045", 7) == [1, 1, 2, 3, 5, 8, 13]

    def test_order7_series(self):
        assert oeis_prefix("A028495", 10) == [
            a_sum(n, 7, 0, 2).eval_at(-1) for n in range(10)]

    def test_order9_series(self):
        assert oeis_prefix("A061551", 10) == [
            a_sum(n, 9, 0, 2).eval_at(-1) for n in range(10)]

    def test_unknown_series(self):
        with pytest.raises(UsageError):
            oeis_prefix("A000001", 5)


class TestSuite:
    def test_all_pass_and_reproducible(self):
        first = run_suite(("schur", "gf", "pathweight"), n_max_gf=10,
                          n_max_paths=10)
        second = run_suite(("schur", "gf", "pathweight"), n_max_gf=10,
                           n_max_paths=10)
        assert first == second
        assert all(r.status == "pass" for r in first)

    def test_markdown_table(self):
        md = suite_to_markdown(run_suite(("schur",)))
        assert md.startswith("| check |")

    def test_pass_forbids_witness(self):
        with pytest.raises(UsageError):
            CheckResult("x", {}, "pass", {"oops": 1})
