"""Concrete sequence and polynomial families.

Floored binomial arrays, the Laurent-valued binomial sums a(n,i,l,m,z),
Fibonacci/Lucas polynomials, the v/w polynomial families and their
companions, and strip-confined lattice paths with an extremal-point weight
statistic.  Everything is exact and pure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from binsum.errors import ConsistencyError, ResourceCapError, UsageError
from binsum.exactalg import BiPoly, IntPoly, LaurentPoly, series_coeffs

DEFAULT_PATH_CAP = int(os.environ.get("BINSUM_PATH_CAP", 10**7))


def binom(n: int, k: int) -> int:
    """Binomial coefficient with zero outside 0 <= k <= n (and for n < 0)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def binom_floor(m: int, n: int, k: int) -> int:
    """C(n, floor((n+k)/m)); out-of-range floor indices give 0.

    Floors are taken toward minus infinity, also for negative numerators.
    """
    if m < 2:
        raise UsageError("strip modulus m must be at least 2")
    return binom(n, (n + k) // m)


@dataclass(frozen=True)
class BinomArray:
    """One row of the floored binomial array, indexable by any integer k."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 0:
            raise UsageError("need m >= 2, n >= 0")

    def __getitem__(self, k: int) -> int:
        return binom_floor(self.m, self.n, k)

    def support(self) -> range:
        """The k-range outside of which every entry is zero."""
        return range(-self.n, (self.m - 1) * self.n + self.m)


def fibonacci_number(n: int) -> int:
    """F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}."""
    if n < 0:
        raise UsageError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# ---------------------------------------------------------------------------
# binomial sums in z
# ---------------------------------------------------------------------------


def a_sum(n: int, i: int, ell: int, m: int) -> LaurentPoly:
    """The Laurent polynomial sum_k C(n, floor((n+i*k+ell)/m)) z^k.

    The k-support is computed from the exact inequalities
    0 <= (n+i*k+ell)/m < n+1, so the stored support is tight.
    """
    if n < 0 or i < 1 or m < 2:
        raise UsageError("need n >= 0, i >= 1, m >= 2")
    k_lo = -((n + ell) // i)                  # ceil((-n-ell)/i)
    k_hi = (m * n + m - 1 - n - ell) // i
    terms: dict[int, int] = {}
    for k in range(k_lo, k_hi + 1):
        c = binom(n, (n + i * k + ell) // m)
        if c:
            terms[k] = c
    return LaurentPoly("z", terms)


def a_closed_i1(n: int, m: int) -> LaurentPoly:
    """Closed form for i = 1, ell = 0:
    (1 - z^m)/(1 - z) * ((1 + z^m)/z)^n, expanded exactly."""
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    geo = LaurentPoly("z", {e: 1 for e in range(m)})
    core = LaurentPoly("z", {m * j: comb(n, j) for j in range(n + 1)})
    return (geo * core).shifted(-n)


# ---------------------------------------------------------------------------
# Fibonacci / Lucas polynomials
# ---------------------------------------------------------------------------


def fib_lucas(n: int, kind: str, method: str = "recurrence") -> BiPoly:
    """Fibonacci or Lucas polynomials in (x, s).

    Recurrence: P_n = x*P_{n-1} + s*P_{n-2} with F_0 = 0, F_1 = 1 and
    L_0 = 2, L_1 = x.  The explicit-sum construction is available via
    method="explicit" and agrees with the recurrence.
    """
    if n < 0:
        raise UsageError("negative index")
    if kind not in ("fibonacci", "lucas"):
        raise UsageError(f"unknown kind {kind!r}")
    if method == "explicit":
        return _fib_explicit(n) if kind == "fibonacci" else _lucas_explicit(n)
    if method != "recurrence":
        raise UsageError(f"unknown method {method!r}")
    x = BiPoly.var_first()
    s = BiPoly.var_second()
    if kind == "fibonacci":
        prev, cur = BiPoly.zero(), BiPoly.const(1)
    else:
        prev, cur = BiPoly.const(2), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur + s * prev
    return cur


def _fib_explicit(n: int) -> BiPoly:
    if n == 0:
        return BiPoly.zero()
    terms = {}
    for k in range(0, (n - 1) // 2 + 1):
        c = binom(n - 1 - k, k)
        if c:
            terms[(n - 1 - 2 * k, k)] = c
    return BiPoly(terms)


def _lucas_explicit(n: int) -> BiPoly:
    if n == 0:
        return BiPoly.const(2)
    terms = {}
    for j in range(0, n // 2 + 1):
        c = Fraction(comb(n - j, j) * n, n - j)
        if c.denominator != 1:
            raise ConsistencyError("Lucas coefficient is not integral")
        if c:
            terms[(n - 2 * j, j)] = int(c)
    return BiPoly(terms)


def fibonacci_eval(n: int, x_value, s_value):
    """Fibonacci polynomial evaluated at arbitrary ring elements."""
    return fib_lucas(n, "fibonacci", method="explicit").eval_at(x_value, s_value)


# ---------------------------------------------------------------------------
# the v / w families
# ---------------------------------------------------------------------------


def v_poly(n: int, m: int, method: str = "recurrence") -> BiPoly:
    """v_n: v_{n+m} = x*v_{n+m-1} - s*v_n with v_0 = m, v_i = x^i (i < m)."""
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    if method == "explicit":
        return _v_explicit(n, m)
    if method != "recurrence":
        raise UsageError(f"unknown method {method!r}")
    table: list[BiPoly] = [BiPoly.const(m)]
    table += [BiPoly.monomial(1, i, 0) for i in range(1, min(m, n + 1))]
    x = BiPoly.var_first()
    s = BiPoly.var_second()
    for idx in range(m, n + 1):
        table.append(x * table[idx - 1] - s * table[idx - m])
    return table[n]


def _v_explicit(n: int, m: int) -> BiPoly:
    if n == 0:
        return BiPoly.const(m)
    terms = {}
    for j in range(0, n // m + 1):     # C(n-(m-1)j, j) needs m*j <= n
        top = n - (m - 1) * j
        c = binom(top, j)
        if not c:
            continue
        val = Fraction(c * n, top)
        if val.denominator != 1:
            raise ConsistencyError("v coefficient is not integral")
        terms[(n - m * j, j)] = (-1) ** j * int(val)
    return BiPoly(terms)


def w_poly(n: int, m: int, method: str = "recurrence") -> BiPoly:
    """w_n: w_{n+m} = x*s^(m-2)*w_{n+1} + s^(m-1)*w_n with w_0 = m,
    w_i = 0 for 1 <= i <= m-2 and w_{m-1} = (m-1)*s^(m-2)*x."""
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    if method == "explicit":
        return _w_explicit(n, m)
    if method != "recurrence":
        raise UsageError(f"unknown method {method!r}")
    table: list[BiPoly] = [BiPoly.const(m)]
    table += [BiPoly.zero() for _ in range(1, min(m - 1, n + 1))]
    if n >= m - 1:
        table.append(BiPoly.monomial(m - 1, 1, m - 2))
    xs_factor = BiPoly.monomial(1, 1, m - 2)   # x*s^(m-2)
    s_factor = BiPoly.monomial(1, 0, m - 1)    # s^(m-1)
    for idx in range(m, n + 1):
        table.append(xs_factor * table[idx - m + 1] + s_factor * table[idx - m])
    return table[n]


def _w_explicit(n: int, m: int) -> BiPoly:
    if n == 0:
        return BiPoly.const(m)
    terms = {}
    for j in range(0, n):
        e = (m - 1) * n - m * j
        c = binom(n - j, e)
        if not c:
            continue
        val = Fraction(c * n, n - j)
        if val.denominator != 1:
            raise ConsistencyError("w coefficient is not integral")
        terms[(e, j)] = terms.get((e, j), 0) + int(val)
    return BiPoly(terms)


# ---------------------------------------------------------------------------
# the r/s/b/c companion polynomials (m = 3 generating function data)
# ---------------------------------------------------------------------------


def rs_poly(n: int, kind: str, method: str = "series") -> IntPoly:
    """r_n from 1/(1 - t + x^3 t^3); s_n from 1/(1 - x t^2 - x^3 t^3)."""
    if n < 0:
        raise UsageError("negative index")
    if kind not in ("r", "s"):
        raise UsageError(f"unknown kind {kind!r}")
    if method == "closed":
        return _rs_closed(n, kind)
    if method != "series":
        raise UsageError(f"unknown method {method!r}")
    x3 = IntPoly.monomial(1, 3, "x")
    if kind == "r":
        den = [1, -1, IntPoly.zero("x"), x3]
    else:
        den = [1, 0, -IntPoly.monomial(1, 1, "x"), -x3]
    val = series_coeffs([1], den, n + 1)[n]
    return val if isinstance(val, IntPoly) else IntPoly.const(val, "x")


def _rs_closed(n: int, kind: str) -> IntPoly:
    terms: dict[int, int] = {}
    if kind == "r":
        # The expansion of 1/(1 - t + x^3 t^3) alternates: (-1)^k C(n-2k, k).
        for k in range(0, n // 2 + 1):
            c = binom(n - 2 * k, k)
            if c:
                terms[3 * k] = (-1) ** k * c
    else:
        eps = ((n + 1) % 3) - 1            # n mod 3 mapped into {-1, 0, 1}
        top = (n + 1) // 3
        for j in range(0, top + 1):
            c = binom(top + j, 3 * j - eps)
            if c:
                e = n - 3 * j + eps
                if e >= 0:
                    terms[e] = terms.get(e, 0) + c
    out = [0] * (max(terms, default=-1) + 1)
    for e, c in terms.items():
        out[e] = c
    return IntPoly("x", out)


def bc_poly(i: int, kind: str, method: str = "recurrence") -> IntPoly:
    """The numerator families: b_i = b_{i-1} - x^3 b_{i-3} and
    c_i = x c_{i-2} + x^3 c_{i-3}, both also expressible as short
    convolutions against r and s respectively."""
    if i < 1:
        raise UsageError("index starts at 1")
    if kind not in ("b", "c"):
        raise UsageError(f"unknown kind {kind!r}")
    if method == "convolution":
        return _bc_convolution(i, kind)
    if method != "recurrence":
        raise UsageError(f"unknown method {method!r}")
    x = IntPoly.variable("x")
    x3 = IntPoly.monomial(1, 3, "x")
    if kind == "b":
        table = [IntPoly.const(1, "x"), 1 + x, 1 + x + x * x]
        for idx in range(3, i):
            table.append(table[idx - 1] - x3 * table[idx - 3])
    else:
        table = [IntPoly.const(1, "x"), 1 - x, x + 2 * x * x]
        for idx in range(3, i):
            table.append(x * table[idx - 2] + x3 * table[idx - 3])
    return table[i - 1]


def _bc_convolution(i: int, kind: str) -> IntPoly:
    # b_{i+1} = r_i + x r_{i-1} + x^2 r_{i-2}; c analogously against s.
    def part(fn_kind: str, idx: int) -> IntPoly:
        return rs_poly(idx, fn_kind) if idx >= 0 else IntPoly.zero("x")

    x = IntPoly.variable("x")
    j = i - 1
    if kind == "b":
        return part("r", j) + x * part("r", j - 1) + x * x * part("r", j - 2)
    return part("s", j) + (1 - x) * part("s", j - 1) + 2 * x * x * part("s", j - 2)


# ---------------------------------------------------------------------------
# lattice paths in a strip
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathSet:
    """All admissible paths of length n inside -m-1 < y < m, as NE/SE strings."""

    n: int
    m: int
    paths: tuple[str, ...]


@dataclass(frozen=True)
class WeightPoly:
    """Weight polynomial in t; for enumerations, poly(1) == path count."""

    poly: IntPoly
    path_count: int

    @classmethod
    def from_enumeration(cls, poly: IntPoly, count: int) -> "WeightPoly":
        if any(c < 0 for c in poly.coeffs):
            raise ConsistencyError("enumeration weights must be nonnegative")
        if poly.eval_at(1) != count:
            raise ConsistencyError("weight at t=1 must equal the path count")
        return cls(poly, count)


def _path_guard(n: int, m: int, cap: int) -> None:
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    total = comb(n, n // 2)
    if total > cap:
        raise ResourceCapError(
            f"path enumeration for n={n} needs {total} paths > cap {cap}")


def enumerate_paths(n: int, m: int, cap: int = DEFAULT_PATH_CAP) -> WeightPoly:
    """Depth-first enumeration with strip pruning.

    Paths take floor(n/2) northeast and floor((n+1)/2) southeast unit steps,
    never leave -m-1 < y < m, and are weighted t^(number of extremal points):
    peaks at height >= 1 and valleys at height <= -2.
    """
    _path_guard(n, m, cap)
    counts: dict[int, int] = {}
    total = 0
    y_min, y_max = -m, m - 1
    ups0, downs0 = n // 2, (n + 1) // 2

    def walk(y: int, ups: int, downs: int, prev: int, extremal: int) -> None:
        nonlocal total
        if ups == 0 and downs == 0:
            counts[extremal] = counts.get(extremal, 0) + 1
            total += 1
            return
        if ups:
            ny = y + 1
            if ny <= y_max:
                bump = 1 if (prev == -1 and y <= -2) else 0
                walk(ny, ups - 1, downs, 1, extremal + bump)
        if downs:
            ny = y - 1
            if ny >= y_min:
                bump = 1 if (prev == 1 and y >= 1) else 0
                walk(ny, ups, downs - 1, -1, extremal + bump)

    walk(0, ups0, downs0, 0, 0)
    coeffs = [0] * (max(counts, default=-1) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return WeightPoly.from_enumeration(IntPoly("t", coeffs), total)


def enumerate_path_set(n: int, m: int, cap: int = DEFAULT_PATH_CAP) -> PathSet:
    """The actual paths behind enumerate_paths, for inspection."""
    _path_guard(n, m, cap)
    out: list[str] = []
    y_min, y_max = -m, m - 1

    def walk(y: int, ups: int, downs: int, steps: list[str]) -> None:
        if ups == 0 and downs == 0:
            out.append(" ".join(steps))
            return
        if ups and y + 1 <= y_max:
            steps.append("NE")
            walk(y + 1, ups - 1, downs, steps)
            steps.pop()
        if downs and y - 1 >= y_min:
            steps.append("SE")
            walk(y - 1, ups, downs - 1, steps)
            steps.pop()

    walk(0, n // 2, (n + 1) // 2, [])
    return PathSet(n, m, tuple(out))


def pathweight_formula(n: int, m: int) -> WeightPoly:
    """The printed double-sum weight formula, evaluated literally.

    sum_j (-1)^j sum_{l >= |j|} C(floor((n+(2m-3)j)/2), l-j)
                               * C(floor((n+1-(2m-3)j)/2), l+j) * t^l
    with C(n, k) = 0 for n < 0.  Compared against enumerate_paths in
    report-only mode; see pathweight_report.
    """
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    step = 2 * m - 3
    coeffs: dict[int, int] = {}
    jbound = (n + 1) // step + 2
    for j in range(-jbound, jbound + 1):
        a_top = (n + step * j) // 2
        b_top = (n + 1 - step * j) // 2
        if a_top < 0 or b_top < 0:
            continue
        sign = -1 if j % 2 else 1
        for ell in range(abs(j), n + 2):
            c = binom(a_top, ell - j) * binom(b_top, ell + j)
            if c:
                coeffs[ell] = coeffs.get(ell, 0) + sign * c
    out = [0] * (max(coeffs, default=-1) + 1)
    for e, c in coeffs.items():
        out[e] = c
    poly = IntPoly("t", out)
    return WeightPoly(poly, poly.eval_at(1))


def pathweight_report(n: int, m: int, cap: int = DEFAULT_PATH_CAP) -> dict:
    """Three-state comparison of the double-sum formula vs enumeration.

    status is "equal", "unequal", or "skipped" (enumeration cap exceeded).
    Enumeration is the ground truth; the formula result is never asserted.
    """
    formula = pathweight_formula(n, m)
    try:
        enum = enumerate_paths(n, m, cap)
    except ResourceCapError:
        return {"n": n, "m": m, "status": "skipped",
                "formula": formula, "enumeration": None}
    status = "equal" if formula.poly == enum.poly else "unequal"
    return {"n": n, "m": m, "status": status,
            "formula": formula, "enumeration": enum}
