"""Sequence generators against independent brute-force oracles."""

from itertools import combinations
from math import comb

import pytest

from binsum.errors import ResourceCapError, UsageError
from binsum.exactalg import IntPoly, LaurentPoly, parse
from binsum.seqgen import (
    BinomArray,
    a_closed_i1,
    a_sum,
    bc_poly,
    binom_floor,
    enumerate_path_set,
    enumerate_paths,
    fib_lucas,
    fibonacci_number,
    pathweight_formula,
    pathweight_report,
    rs_poly,
    v_poly,
    w_poly,
)


def a_ref(n: int, i: int, ell: int, m: int) -> LaurentPoly:
    """Oracle: direct summation over a deliberately wide k-window."""
    wide = m * (n + 2) + abs(ell) + i + 5
    terms = {}
    for k in range(-wide, wide + 1):
        j = (n + i * k + ell) // m
        if 0 <= j <= n:
            c = comb(n, j)
            if c:
                terms[k] = c
    return LaurentPoly("z", terms)


class TestBinomFloor:
    def test_plain_value(self):
        assert binom_floor(3, 4, 2) == 6

    def test_negative_floor_index(self):
        assert binom_floor(2, 3, -9) == 0

    def test_floor_rounding(self):
        assert binom_floor(2, 4, 1) == 6      # C(4, floor(5/2)) = C(4, 2)

    def test_array_accessor_and_support(self):
        row = BinomArray(3, 5)
        assert row[2] == binom_floor(3, 5, 2)
        sup = row.support()
        assert row[sup.start - 1] == 0 and row[sup.stop] == 0
        assert all(row[k] > 0 for k in (sup.start, sup.stop - 1))

    def test_recurrence_relation(self):
        # t(m,n,k) = t(m,n-1,k-m+1) + t(m,n-1,k+1) over wide ranges.
        for m in range(2, 7):
            for n in range(1, 41):
                for k in range(-2 * m * n, 2 * m * n + 1):
                    assert binom_floor(m, n, k) == (
                        binom_floor(m, n - 1, k - m + 1)
                        + binom_floor(m, n - 1, k + 1)), (m, n, k)


class TestASum:
    def test_n0(self):
        assert a_sum(0, 1, 0, 3) == parse("z^2 + z + 1", kind="laurent")

    def test_single_term(self):
        assert a_sum(3, 5, 0, 2) == LaurentPoly.const(3, "z")

    def test_two_sided_support(self):
        expected = parse("z^3 + z^2 + 2*z + 2 + z^-1 + z^-2", kind="laurent")
        assert a_sum(2, 1, 0, 2) == expected

    @pytest.mark.parametrize("m", range(2, 7))
    def test_matches_wide_window_oracle(self, m):
        for n in range(0, 12):
            for i in (1, 2, 5):
                for ell in (-2, 0, 3):
                    assert a_sum(n, i, ell, m) == a_ref(n, i, ell, m)

    @pytest.mark.parametrize("m", range(2, 7))
    def test_closed_form_i1(self, m):
        for n in range(0, 31):
            assert a_sum(n, 1, 0, m) == a_closed_i1(n, m)

    @pytest.mark.parametrize("m", range(2, 7))
    def test_closed_form_at_z1(self, m):
        for n in range(0, 31):
            assert a_closed_i1(n, m).eval_at(1) == m * 2**n

    def test_closed_examples(self):
        assert a_closed_i1(0, 4) == parse("z^3 + z^2 + z + 1", kind="laurent")
        assert a_closed_i1(1, 2) == parse("z^2 + z + 1 + z^-1", kind="laurent")


class TestFibLucas:
    def test_lucas_5(self):
        assert fib_lucas(5, "lucas") == parse("x^5 + 5*x^3*s + 5*x*s^2")

    def test_fibonacci_3(self):
        assert fib_lucas(3, "fibonacci") == parse("x^2 + s", kind="bipoly")

    def test_lucas_0(self):
        assert fib_lucas(0, "lucas") == parse("2", kind="bipoly")

    def test_explicit_agrees_with_recurrence(self):
        for n in range(0, 41):
            for kind in ("fibonacci", "lucas"):
                assert fib_lucas(n, kind) == fib_lucas(n, kind, method="explicit")

    def test_fibonacci_numbers(self):
        assert [fibonacci_number(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


class TestVW:
    def test_v_table_values(self):
        assert v_poly(3, 3).specialize_second(1) == parse("x^3 - 3")
        assert v_poly(0, 5) == parse("5", kind="bipoly")
        assert v_poly(7, 3).specialize_second(1) == parse("x^7 - 7*x^4 + 7*x")

    def test_w_table_values(self):
        assert w_poly(2, 3).specialize_second(1) == parse("2*x")
        assert w_poly(6, 3).specialize_second(1) == parse("2*x^3 + 3")
        assert w_poly(1, 4) == parse("0", kind="bipoly")

    @pytest.mark.parametrize("m", range(2, 7))
    def test_explicit_agrees_with_recurrence(self, m):
        for n in range(0, 41):
            assert v_poly(n, m) == v_poly(n, m, method="explicit"), (n, m, "v")
            assert w_poly(n, m) == w_poly(n, m, method="explicit"), (n, m, "w")


class TestRSBC:
    def test_r_values(self):
        assert rs_poly(6, "r") == parse("x^6 - 4*x^3 + 1")
        firsts = [rs_poly(n, "r") for n in range(6)]
        assert firsts == [parse(t) for t in
                          ("1", "1", "1", "1 - x^3", "1 - 2*x^3", "1 - 3*x^3")]

    def test_s_values(self):
        listed = ["1", "0", "x", "x^3", "x^2", "2*x^4", "x^3 + x^6",
                  "3*x^5", "x^4 + 3*x^7"]
        for n, text in enumerate(listed):
            assert rs_poly(n, "s") == parse(text, kind="intpoly", variables="x"), n

    def test_closed_forms_agree(self):
        for n in range(0, 25):
            assert rs_poly(n, "r") == rs_poly(n, "r", method="closed"), n
            assert rs_poly(n, "s") == rs_poly(n, "s", method="closed"), n

    def test_b_values(self):
        assert bc_poly(3, "b") == parse("x^2 + x + 1")
        assert bc_poly(4, "b") == parse("-x^3 + x^2 + x + 1")
        assert bc_poly(2, "c") == parse("1 - x")
        assert bc_poly(3, "c") == parse("x + 2*x^2")

    def test_convolution_agrees(self):
        for i in range(1, 20):
            assert bc_poly(i, "b") == bc_poly(i, "b", method="convolution"), i
            assert bc_poly(i, "c") == bc_poly(i, "c", method="convolution"), i


def paths_ref(n: int, m: int) -> dict[int, int]:
    """Oracle: enumerate all step placements with itertools, then filter."""
    ups = n // 2
    counts: dict[int, int] = {}
    for up_positions in combinations(range(n), ups):
        steps = [-1] * n
        for p in up_positions:
            steps[p] = 1
        y = 0
        heights = [0]
        ok = True
        for s in steps:
            y += s
            if not (-m - 1 < y < m):
                ok = False
                break
            heights.append(y)
        if not ok:
            continue
        extremal = 0
        for v in range(1, n):
            if steps[v - 1] == 1 and steps[v] == -1 and heights[v] >= 1:
                extremal += 1
            if steps[v - 1] == -1 and steps[v] == 1 and heights[v] <= -2:
                extremal += 1
        counts[extremal] = counts.get(extremal, 0) + 1
    return counts


class TestPaths:
    def test_two_step_weights(self):
        w = enumerate_paths(2, 2)
        assert w.poly == parse("t + 1", kind="intpoly", variables="t")
        assert w.path_count == 2

    def test_empty_path(self):
        w = enumerate_paths(0, 2)
        assert w.poly == IntPoly.const(1, "t")

    def test_against_itertools_oracle(self):
        for m in (2, 3, 4):
            for n in range(0, 13):
                expected = paths_ref(n, m)
                got = enumerate_paths(n, m)
                assert {e: c for e, c in got.poly.terms()} == expected, (n, m)

    def test_fibonacci_polynomials_at_x1(self):
        for n in range(0, 17):
            expected = fib_lucas(n + 1, "fibonacci").specialize_first(1)
            got = enumerate_paths(n, 2).poly
            assert list(got.coeffs) == list(expected.coeffs), n

    def test_t1_specialization_counts(self):
        for m in (2, 3, 4):
            for n in range(0, 17):
                count = enumerate_paths(n, m).poly.eval_at(1)
                assert count == a_sum(n, 2 * m + 1, 0, 2).eval_at(-1), (n, m)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            enumerate_paths(30, 2, cap=10)

    def test_path_set_listing(self):
        ps = enumerate_path_set(2, 2)
        assert sorted(ps.paths) == ["NE SE", "SE NE"]

    def test_formula_report_three_state(self):
        rep = pathweight_report(2, 2)
        assert rep["status"] == "equal"
        assert rep["formula"].poly == parse("t + 1", kind="intpoly", variables="t")
        skipped = pathweight_report(30, 2, cap=10)
        assert skipped["status"] == "skipped"

    def test_formula_t1_value(self):
        # sum_j (-1)^j C(6, floor((6+5j)/2)) = 13
        assert pathweight_formula(6, 2).poly.eval_at(1) == 13

    def test_formula_n0(self):
        for m in (2, 3, 5):
            assert pathweight_formula(0, m).poly == IntPoly.const(1, "t")


class TestPreconditions:
    def test_bad_m(self):
        with pytest.raises(UsageError):
            binom_floor(1, 3, 0)
        with pytest.raises(UsageError):
            a_sum(-1, 1, 0, 2)
        with pytest.raises(UsageError):
            fib_lucas(3, "nope")
