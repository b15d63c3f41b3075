"""The table recursion, family assembly, oracle, and identity checks."""

import pytest

from binsum.errors import UsageError
from binsum.exactalg import BiPoly, parse, substitute
from binsum.recurrence import (
    assemble_pk,
    b_coefs,
    check_laurent_identity_8,
    check_master_identity,
    check_shift_identity,
    d_coef,
    master_rhs,
    p2_m4,
    pk_closed,
    pk_family,
    pk_gf,
    pk_oracle,
    roots_of_unity_check,
)
from binsum.seqgen import v_poly, w_poly


class TestDCoef:
    def test_hand_value(self):
        # 2*4 mod 5 = 3, C(4,3) = 4, sign (-1)^(4-3), times n = 5.
        assert d_coef(5, 2, 4) == -20

    def test_vanishing(self):
        assert d_coef(5, 2, 1) == 0

    def test_j0_convention(self):
        for n in (1, 4, 9):
            for m in (2, 3, 5):
                assert d_coef(n, m, 0) == n

    def test_vanishing_window_strict(self):
        # d(n,m,j) = 0 for 1 <= j with m*j < n; at m*j = n the value is
        # (-1)^j * n (witness: d(4,2,2) = 4), so the window is strict.
        for m in range(2, 7):
            for n in range(1, 30):
                for j in range(1, n // m + 1):
                    if m * j < n:
                        assert d_coef(n, m, j) == 0, (n, m, j)
                    elif m * j == n:
                        assert d_coef(n, m, j) == (-1) ** j * n, (n, m, j)


class TestBCoefs:
    def test_hand_values_n5_m2(self):
        t = b_coefs(5, 2)
        assert t.b[1] == 5 and t.b[2] == -5
        assert t.b[3] == 0 and t.b[4] == 0 and t.b[5] == 1

    def test_n2_m2_matches_root_product(self):
        # Roots {-2, 0}: product x^2 + 2x.
        t = b_coefs(2, 2)
        assert t.b[1] == 2 and t.b[2] == 1

    def test_top_normalization(self):
        for n in (1, 3, 8):
            for m in (2, 4):
                assert b_coefs(n, m).b[n] == 1

    def test_vanishing_window_strict(self):
        # b(n,m,n-j) = 0 for m*j < n; at m*j = n generally nonzero
        # (witness: b(4,2,2) = -2, forced by x^4 - 4x^2 + 2).
        for m in range(2, 7):
            for n in range(1, 25):
                t = b_coefs(n, m)
                for j in range(1, n // m + 1):
                    if m * j < n:
                        assert t.b[n - j] == 0, (n, m, j)
        assert b_coefs(4, 2).b[2] == -2

    def test_closed_form_window(self):
        # For (m-2)n/m < j <= (m-1)n/m: b(n,m,j) = -d(n,m,n-j)/(n-j).
        for m in range(2, 7):
            for n in range(1, 25):
                t = b_coefs(n, m)
                for j in range((m - 2) * n // m + 1, (m - 1) * n // m + 1):
                    if j == n:
                        continue
                    expected = -d_coef(n, m, n - j)
                    assert t.b[j] * (n - j) == expected, (n, m, j)


LUCAS_LIST = ["x", "x^2 - 2", "x^3 - 3*x", "x^4 - 4*x^2 + 2",
              "x^5 - 5*x^3 + 5*x", "x^6 - 6*x^4 + 9*x^2 - 2"]


class TestAssemble:
    def test_m2_list(self):
        for n, text in enumerate(LUCAS_LIST, start=1):
            got = assemble_pk(n, 2).p(1).specialize_second(1)
            assert got == parse(text, kind="intpoly", variables="x"), n

    def test_n0_convention(self):
        fam = assemble_pk(0, 4)
        assert fam.p(1) == BiPoly.const(4)
        assert fam.p(2) == BiPoly.const(-6)
        assert fam.p(3) == BiPoly.const(4)

    def test_m3_p2_is_minus_w(self):
        for n in range(0, 31):
            assert assemble_pk(n, 3).p(2) == -w_poly(n, 3), n

    def test_m3_p1_is_v(self):
        for n in range(0, 31):
            assert assemble_pk(n, 3).p(1) == v_poly(n, 3), n


class TestOracle:
    def test_printed_values(self):
        assert pk_oracle(4, 2).p(1) == parse("x^4 - 4*x^2*s + 2*s^2")
        fam = pk_oracle(2, 3)
        assert fam.p(1) == parse("x^2 - 0*s", kind="bipoly")
        assert fam.p(2) == parse("-2*x*s")

    def test_m4_n6(self):
        assert pk_oracle(6, 4).p(2) == parse("-2*s^3 - 3*s^2*x^4")

    @pytest.mark.parametrize("m", range(2, 7))
    def test_oracle_equals_newton(self, m):
        for n in range(0, 15):
            assert pk_oracle(n, m).polys == assemble_pk(n, m).polys, (n, m)


class TestClosedForms:
    def test_k1(self):
        assert pk_closed(7, 3, 1) == parse("x^7 - 7*x^4*s + 7*x*s^2")
        assert pk_closed(2, 2, 1) == parse("x^2 - 2*s")

    def test_k_m_minus_1(self):
        assert pk_closed(3, 4, 3) == parse("3*x*s^2")

    def test_bad_k(self):
        with pytest.raises(UsageError):
            pk_closed(5, 4, 2)

    @pytest.mark.parametrize("m", range(2, 7))
    def test_matches_engine(self, m):
        for n in range(0, 25):
            fam = assemble_pk(n, m)
            assert pk_closed(n, m, 1) == fam.p(1), (n, m)
            assert pk_closed(n, m, m - 1) == fam.p(m - 1), (n, m)

    def test_m2_equals_lucas_with_negated_s(self):
        from binsum.seqgen import fib_lucas

        for n in range(1, 20):
            lucas = fib_lucas(n, "lucas")
            negated = BiPoly({k: c * (-1) ** k[1] for k, c in lucas.items()})
            assert assemble_pk(n, 2).p(1) == negated, n


class TestP2M4:
    def test_initial_values(self):
        assert p2_m4(0) == BiPoly.const(-6)
        assert p2_m4(1) == BiPoly.zero()
        assert p2_m4(5) == parse("-5*s^2*x^2")

    def test_one_step(self):
        assert p2_m4(6) == parse("-2*s^3 - 3*s^2*x^4")

    def test_matches_oracle_and_gf(self):
        for n in range(0, 25):
            assert p2_m4(n) == pk_oracle(n, 4).p(2), n
        for n in range(0, 25):
            assert p2_m4(n) == pk_gf(n, 4).p(2), n


class TestProvenanceAgreement:
    def test_gf_family_equals_newton(self):
        for m in (2, 3, 4):
            for n in range(0, 25):
                assert pk_gf(n, m).polys == assemble_pk(n, m).polys, (n, m)

    def test_closed_family_equals_newton(self):
        for m in (2, 3):
            for n in range(0, 25):
                assert pk_family(n, m, "closed-form").polys == \
                    assemble_pk(n, m).polys, (n, m)


class TestMasterIdentity:
    def test_examples(self):
        assert substitute(assemble_pk(4, 2).p(1)) == parse("x^4 + 1")
        assert check_master_identity(2, 3, assemble_pk(2, 3))
        assert check_master_identity(0, 5, assemble_pk(0, 5))

    def test_rhs_shape(self):
        assert master_rhs(2, 3) == parse("1 - x^2")
        assert master_rhs(4, 2) == parse("x^4 + 1")

    @pytest.mark.parametrize("m", range(2, 8))
    def test_all_provenances(self, m):
        sources = ["newton", "oracle"]
        if m in (2, 3):
            sources.append("closed-form")
        if m in (2, 3, 4):
            sources.append("gf")
        for n in range(0, 31):
            for source in sources:
                fam = pk_family(n, m, source)
                assert check_master_identity(n, m, fam), (n, m, source)


class TestShiftIdentity:
    def test_order5_m2(self):
        assert check_shift_identity(5, 0, 2, 20)

    def test_order1(self):
        assert check_shift_identity(1, 0, 2, 10)

    def test_m3_with_offset(self):
        assert check_shift_identity(3, 1, 3, 20)

    def test_grid(self):
        for m in (2, 3, 4):
            for i in (1, 2, 3):
                for ell in (-2, 0, 2):
                    assert check_shift_identity(i, ell, m, 8), (i, ell, m)


class TestLaurentIdentity8:
    def test_small_cases(self):
        assert check_laurent_identity_8(1, 2)
        assert check_laurent_identity_8(2, 2)
        assert check_laurent_identity_8(2, 3)

    def test_grid(self):
        for m in (2, 3, 4, 5):
            for i in range(1, 7):
                assert check_laurent_identity_8(i, m), (i, m)


class TestRootsOfUnity:
    def test_hand_cases(self):
        assert roots_of_unity_check(2, 2, 1e-9)
        assert roots_of_unity_check(1, 2, 1e-9)
        assert roots_of_unity_check(5, 2, 1e-6)

    def test_grid(self):
        for m in (2, 3, 4):
            for n in range(1, 13):
                assert roots_of_unity_check(n, m, 1e-6), (n, m)

    def test_budget_guard(self):
        with pytest.raises(UsageError):
            roots_of_unity_check(17, 2, 1e-6)
