"""Minimal-recurrence discovery over the rational-function field.

Sequences of polynomials (or rational functions) in x are annihilated by a
monic polynomial in the shift operator with coefficients in Q(x).  The
minimal such annihilator is found by evaluating x at integer points, running
exact Berlekamp-Massey over the rationals per point, reconstructing each
monic coefficient by Cauchy (rational-function) interpolation, and finally
certifying the candidate by exact re-substitution into the symbolic data.
The certificate also proves minimality: the evaluated order at any point is
a lower bound for the order over Q(x).

On top of that sit the per-(m,k) characteristic polynomials of the
substituted polynomial families, the peeling of their conjectured common
factors, the degree/duality clauses, and the machine-readable scan report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from binsum.errors import (
    ConsistencyError,
    RecurrenceNotFound,
    ResourceCapError,
    UsageError,
)
from binsum.exactalg import CharPoly, IntPoly, RatFunc, primitive_gcd
from binsum.recurrence import pk_substituted

# ---------------------------------------------------------------------------
# Berlekamp-Massey over the rationals
# ---------------------------------------------------------------------------


def berlekamp_massey(values: Sequence[Fraction]) -> tuple[int, list[Fraction]]:
    """Shortest linear recurrence generating the whole value list.

    Returns (L, C) where C is the connection polynomial with C[0] = 1 and
    sum_{i=0..L} C[i] * f(n-i) = 0 for every fitting n.  For data of length
    >= 2L the recurrence of order L is unique and minimal.
    """
    C: list[Fraction] = [Fraction(1)]
    B: list[Fraction] = [Fraction(1)]
    L = 0
    shift = 1
    b = Fraction(1)
    for n, s in enumerate(values):
        d = Fraction(s)
        for i in range(1, L + 1):
            if i < len(C) and C[i]:
                d += C[i] * values[n - i]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        update_from = list(C)
        need = shift + len(B)
        if len(C) < need:
            C += [Fraction(0)] * (need - len(C))
        for i, bc in enumerate(B):
            C[shift + i] -= coef * bc
        if 2 * L <= n:
            L = n + 1 - L
            B = update_from
            b = d
            shift = 1
        else:
            shift += 1
    while C and C[-1] == 0:
        C.pop()
    return L, C


def _monic_from_connection(L: int, C: list[Fraction]) -> list[Fraction]:
    """Ascending lower coefficients q_0..q_{L-1} of z^L + sum q_j z^j."""
    padded = C + [Fraction(0)] * (L + 1 - len(C))
    return [padded[L - j] for j in range(L)]


# ---------------------------------------------------------------------------
# Fraction-coefficient polynomial helpers (internal to reconstruction)
# ---------------------------------------------------------------------------


def _qp_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qp_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                if bv:
                    out[i + j] += av * bv
    return _qp_trim(out)


def _qp_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    return _qp_trim(out)


def _qp_divmod(a: list[Fraction], b: list[Fraction]):
    rem = list(a)
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        q = rem[-1] / b[-1]
        quot[len(rem) - 1 - db] = q
        for i, bv in enumerate(b):
            rem[len(rem) - 1 - db + i] -= q * bv
        _qp_trim(rem)
    return quot, rem


def _qp_eval(p: list[Fraction], a: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * a + c
    return acc


def _newton_interpolate(xs: list[Fraction], ys: list[Fraction]) -> list[Fraction]:
    coeffs = list(ys)
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - level])
    poly: list[Fraction] = []
    for i in range(len(xs) - 1, -1, -1):
        poly = _qp_sub(_qp_mul(poly, [-xs[i], Fraction(1)]), [-coeffs[i]])
    return poly


def rational_interpolate(xs: list[Fraction], ys: list[Fraction]):
    """Cauchy interpolation: a reduced num/den pair through all the points.

    Uses the extended Euclidean scheme on (prod (X - x_i), interpolant) with
    the balanced degree split; returns (num, den) as Fraction lists or None
    when no candidate fits every point.
    """
    k = len(xs)
    modulus = [Fraction(1)]
    for a in xs:
        modulus = _qp_mul(modulus, [-a, Fraction(1)])
    interp = _newton_interpolate(xs, ys)
    r0, r1 = modulus, interp
    t0, t1 = [], [Fraction(1)]
    bound = (k - 1) // 2
    while r1 and len(r1) - 1 > bound:
        q, r2 = _qp_divmod(r0, r1)
        t2 = _qp_sub(t0, _qp_mul(q, t1))
        r0, r1, t0, t1 = r1, r2, t1, t2
    num, den = r1, t1
    if not den:
        return None
    g = _qp_gcd(num, den)
    if len(g) > 1:
        num = _qp_divmod(num, g)[0]
        den = _qp_divmod(den, g)[0]
    if not den:
        return None
    lead = den[-1]
    num = [c / lead for c in num]
    den = [c / lead for c in den]
    for a, y in zip(xs, ys):
        dv = _qp_eval(den, a)
        if dv == 0 or _qp_eval(num, a) != y * dv:
            return None
    return num, den


def _qp_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _qp_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _ratfunc_from_qlists(num: list[Fraction], den: list[Fraction],
                         var: str) -> RatFunc:
    scale = 1
    for c in num + den:
        scale = scale * c.denominator // _gcd(scale, c.denominator)
    np = IntPoly(var, [int(c * scale) for c in num])
    dp = IntPoly(var, [int(c * scale) for c in den])
    return RatFunc(np, dp)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# recurrence guessing
# ---------------------------------------------------------------------------


def _coerce_entry(v, var: str):
    if isinstance(v, (IntPoly, RatFunc)):
        return v
    if isinstance(v, int):
        return IntPoly.const(v, var)
    if isinstance(v, Fraction):
        return RatFunc.from_fraction(v, var)
    raise UsageError(f"unsupported sequence entry type {type(v).__name__}")


def _entry_value(entry, a: int) -> Fraction | None:
    if isinstance(entry, RatFunc):
        return entry.eval_frac(a)
    return Fraction(entry.eval_at(a))


def guess_recurrence(seq: Sequence, max_order: int) -> CharPoly | None:
    """Monic minimal annihilator of the sequence over Q(x), in primitive form.

    Requires len(seq) >= 2*max_order + 2.  Returns None when no recurrence
    of order <= max_order annihilates the data.  A returned polynomial is
    certified by exact re-substitution on every provided index, which also
    pins minimality (the per-point evaluated order is a lower bound).
    """
    if max_order < 0:
        raise UsageError("max_order must be nonnegative")
    if len(seq) < 2 * max_order + 2:
        raise UsageError(
            f"need at least {2 * max_order + 2} terms for max_order={max_order}")
    var = "x"
    for v in seq:
        if isinstance(v, IntPoly) and not v.is_constant:
            var = v.var
            break
        if isinstance(v, RatFunc) and not (v.num.is_constant and v.den.is_constant):
            var = v.var
            break
    entries = [_coerce_entry(v, var) for v in seq]

    pool: dict[int, tuple[int, list[Fraction]]] = {}
    next_a = 2

    def add_points(count: int) -> None:
        nonlocal next_a
        added = 0
        while added < count and next_a < 10**6:
            a = next_a
            next_a += 1
            vals = []
            ok = True
            for e in entries:
                val = _entry_value(e, a)
                if val is None:
                    ok = False
                    break
                vals.append(val)
            if not ok:
                continue
            L, C = berlekamp_massey(vals)
            pool[a] = (L, _monic_from_connection(L, C))
            added += 1

    add_points(6)
    if not pool:
        raise ConsistencyError("no usable evaluation points")
    order = max(L for L, _ in pool.values())
    if order > max_order:
        return None
    cap = 4 * max_order + 60
    while True:
        usable = {a: q for a, (L, q) in pool.items() if L == order}
        if len(usable) >= 5 or (len(usable) >= 1 and order == 0):
            cand = _reconstruct(usable, order, var)
            if cand is not None and cand.annihilates(entries):
                return cand
        if len(pool) >= cap:
            return None
        add_points(4)
        new_order = max(L for L, _ in pool.values())
        if new_order != order:
            order = new_order
            if order > max_order:
                return None


def _reconstruct(points: dict[int, list[Fraction]], order: int,
                 var: str) -> CharPoly | None:
    xs_all = sorted(points)
    if order == 0:
        return CharPoly.from_coeffs([IntPoly.const(1, var)], "z", var)
    use = xs_all[:-2] if len(xs_all) > 6 else xs_all
    hold = [a for a in xs_all if a not in use]
    xs = [Fraction(a) for a in use]
    monic: list[RatFunc] = []
    for j in range(order):
        ys = [points[a][j] for a in use]
        rec = rational_interpolate(xs, ys)
        if rec is None:
            return None
        num, den = rec
        for a in hold:
            dv = _qp_eval(den, Fraction(a))
            if dv == 0 or _qp_eval(num, Fraction(a)) != points[a][j] * dv:
                return None
        monic.append(_ratfunc_from_qlists(num, den, var))
    return CharPoly.from_monic(monic, "z", var)


# ---------------------------------------------------------------------------
# characteristic polynomials of the substituted families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CellData:
    """One discovered characteristic polynomial with its audit trail."""

    m: int
    k: int
    char: CharPoly
    order: int
    order_excluding_first: int
    terms_used: int
    seconds: float


def _family_terms(m: int, k: int, count: int) -> list[IntPoly]:
    return [pk_substituted(n, m, k) for n in range(count)]


def charpoly(m: int, k: int) -> CharPoly:
    """Characteristic polynomial of n |-> p_k(n, m, x+1, x), certified on
    held-out terms beyond the guessing window."""
    return charpoly_cell(m, k).char


def charpoly_cell(m: int, k: int) -> CellData:
    if m < 2 or not 1 <= k <= m - 1:
        raise UsageError("need m >= 2 and k in [1, m-1]")
    start = time.perf_counter()
    expected = comb(m, k)
    count = 3 * (expected + 2) + 11
    terms = _family_terms(m, k, count)
    window = terms[: 2 * expected + 7]
    cand = guess_recurrence(window, expected + 2)
    if cand is None:
        # One escalation: double the allowed order on a longer window.
        bigger = 2 * (expected + 2)
        count = 3 * bigger + 11
        terms = _family_terms(m, k, count)
        window = terms[: 2 * bigger + 2]
        cand = guess_recurrence(window, bigger)
    if cand is None:
        raise RecurrenceNotFound(
            f"no recurrence of order <= {2 * (expected + 2)} for (m={m}, k={k})")
    if not cand.annihilates(terms):
        raise RecurrenceNotFound(
            f"certification failed on held-out terms for (m={m}, k={k})")
    # Does dropping the first term lower the minimal order?  terms[1:] is
    # always long enough for the certified order.
    reduced = guess_recurrence(terms[1:], int(cand.degree))
    order_excl = int(reduced.degree) if reduced is not None else int(cand.degree)
    return CellData(m, k, cand, int(cand.degree), order_excl,
                    len(terms), time.perf_counter() - start)


# ---------------------------------------------------------------------------
# factor peeling and duality
# ---------------------------------------------------------------------------


def v_seed_low(xvar: str = "x") -> CharPoly:
    return CharPoly.from_coeffs([-1, 1], "z", xvar)          # z - 1


def v_seed_high(m: int, xvar: str = "x") -> CharPoly:
    sign = 1 if m % 2 else -1                                 # z + (-1)^(m-1) x
    return CharPoly.from_coeffs([IntPoly.monomial(sign, 1, xvar), 1], "z", xvar)


def extract_v_factors(m: int,
                      charpolys: dict[int, CharPoly] | None = None
                      ) -> dict[int, CharPoly | None]:
    """Peel the conjectured common factors out of the characteristic
    polynomials: ascending from z-1 below the middle, descending from
    z + (-1)^(m-1) x above it.  For even m the middle index stays None.

    Raises ConsistencyError when a peel is not an exact division.
    """
    if m < 2:
        raise UsageError("need m >= 2")
    cs = charpolys or {k: charpoly(m, k) for k in range(1, m)}
    v: dict[int, CharPoly | None] = {k: None for k in range(m + 1)}
    v[0] = v_seed_low()
    v[m] = v_seed_high(m)
    for k in range(1, (m + 1) // 2):                # k < m/2
        q = cs[k].exact_div(v[k - 1])
        if q is None:
            raise ConsistencyError(
                f"v[{m},{k - 1}] does not divide c[{m},{k}] exactly")
        v[k] = q
    for k in range(m - 1, m // 2, -1):              # k > m/2
        q = cs[k].exact_div(v[k + 1])
        if q is None:
            raise ConsistencyError(
                f"v[{m},{k + 1}] does not divide c[{m},{k}] exactly")
        v[k] = q
    return v


def duality_transform(c: CharPoly, m: int) -> CharPoly:
    """Substitute z -> (-1)^m x / z, clear by z^deg, renormalize."""
    if c.is_zero:
        raise UsageError("cannot transform the zero polynomial")
    r = int(c.degree)
    sign = 1 if m % 2 == 0 else -1
    out = []
    for j in range(r, -1, -1):                        # z^(r-j) coefficient
        out.append(c.coeff(j) * IntPoly.monomial(sign ** (j % 2), j, c.xvar))
    return CharPoly.from_coeffs(out, c.zvar, c.xvar)


# ---------------------------------------------------------------------------
# the conjecture scan
# ---------------------------------------------------------------------------


@dataclass
class CellReport:
    m: int
    k: int
    order: int | None
    order_expected: int
    order_excluding_first: int | None
    degree_ok: bool | None
    factor_indices: tuple[int, ...]
    factor_degrees: tuple[int, ...]
    factor_exact: bool | None
    gcd_with_next_ok: bool | None
    duality_ok: bool | None
    minimality_ok: bool | None
    seconds: float
    note: str = ""

    def clauses(self) -> dict[str, bool | None]:
        return {
            "degree": self.degree_ok,
            "factorization": self.factor_exact,
            "adjacent_gcd": self.gcd_with_next_ok,
            "duality": self.duality_ok,
            "minimality": self.minimality_ok,
        }


@dataclass
class ConjectureReport:
    m: int
    cells: list[CellReport]
    v_degrees: dict[int, int] = field(default_factory=dict)
    v_degree_ok: bool | None = None
    middle_equal_ok: bool | None = None
    v_last_ok: bool | None = None
    budget_exceeded: bool = False
    seconds: float = 0.0

    @property
    def all_passed(self) -> bool:
        clauses: list[bool | None] = [self.v_degree_ok, self.middle_equal_ok,
                                      self.v_last_ok]
        for cell in self.cells:
            clauses.extend(cell.clauses().values())
        return all(c is not False for c in clauses) and not self.budget_exceeded


def _expected_factor_indices(m: int, k: int) -> tuple[int, int]:
    if 2 * k < m:
        return (k - 1, k)
    if 2 * k == m:
        return (k - 1, k + 1)
    return (k, k + 1)


def _expected_shared_index(m: int, k: int) -> int | None:
    """Conjectured common v-index of the pair (c_{m,k}, c_{m,k+1})."""
    lo = set(_expected_factor_indices(m, k))
    hi = set(_expected_factor_indices(m, k + 1))
    shared = lo & hi
    if shared:
        return min(shared)
    if m % 2 and k == (m - 1) // 2:
        return k            # middle pair shares the (equal) middle factor
    return None


def conjecture_scan(m_lo: int, m_hi: int,
                    time_budget: float | None = None) -> list[ConjectureReport]:
    """Run every factorization/degree/duality clause for each m in range.

    Cells are pure and deterministic; failures and resource exceedances are
    recorded per cell and the scan continues.
    """
    if not 2 <= m_lo <= m_hi:
        raise UsageError("need 2 <= m_lo <= m_hi")
    t_start = time.perf_counter()
    reports = []
    for m in range(m_lo, m_hi + 1):
        reports.append(_scan_one(m, t_start, time_budget))
    return reports


def _scan_one(m: int, t_start: float, time_budget: float | None) -> ConjectureReport:
    m_start = time.perf_counter()
    cells: list[CellReport] = []
    data: dict[int, CellData] = {}
    skipped = False
    for k in range(1, m):
        if time_budget is not None and time.perf_counter() - t_start > time_budget:
            cells.append(CellReport(m, k, None, comb(m, k), None, None, (),
                                    (), None, None, None, None, 0.0,
                                    note="budget-exceeded"))
            skipped = True
            continue
        try:
            data[k] = charpoly_cell(m, k)
        except (RecurrenceNotFound, ResourceCapError) as exc:
            cells.append(CellReport(m, k, None, comb(m, k), None, False, (),
                                    (), False, None, None, None, 0.0,
                                    note=str(exc)))
    report = ConjectureReport(m, cells, budget_exceeded=skipped)
    complete = len(data) == m - 1
    cs = {k: d.char for k, d in data.items()}
    v: dict[int, CharPoly | None] = {k: None for k in range(m + 1)}
    v[0] = v_seed_low()
    v[m] = v_seed_high(m)
    factor_exact_all = False
    if complete:
        try:
            v = extract_v_factors(m, cs)
            factor_exact_all = True
        except ConsistencyError:
            pass

    report.v_degrees = {k: int(p.degree) for k, p in v.items() if p is not None}
    if factor_exact_all:
        report.v_degree_ok = all(
            int(p.degree) == comb(m - 1, min(k, m - k))
            for k, p in v.items() if p is not None)
        if m % 2:
            report.middle_equal_ok = v[m // 2] == v[m // 2 + 1]
        report.v_last_ok = v[m] == v_seed_high(m)
    elif complete:
        report.v_degree_ok = False

    for k, d in sorted(data.items()):
        idx = _expected_factor_indices(m, k)
        fa, fb = (v.get(idx[0]), v.get(idx[1]))
        factor_ok = None
        if complete:
            factor_ok = (factor_exact_all and fa is not None and fb is not None
                         and fa * fb == cs[k])
        degrees = tuple(int(f.degree) for f in (fa, fb) if f is not None)
        gcd_ok = None
        if k + 1 in cs:
            shared_idx = _expected_shared_index(m, k)
            if shared_idx is not None and v.get(shared_idx) is not None:
                gcd_ok = primitive_gcd(cs[k], cs[k + 1]) == v[shared_idx]
        dual_ok = None
        if m - k in cs:
            dual_ok = duality_transform(cs[k], m) == cs[m - k]
        minimal_ok = None
        if factor_ok:
            minimal_ok = True
            window = _family_terms(m, k, d.terms_used)
            for f in (fa, fb):
                cofactor = cs[k].exact_div(f)
                if cofactor is not None and cofactor.annihilates(window):
                    minimal_ok = False
        report.cells.append(CellReport(
            m, k, d.order, comb(m, k), d.order_excluding_first,
            d.order == comb(m, k), idx, degrees, factor_ok, gcd_ok, dual_ok,
            minimal_ok, d.seconds))
    report.cells.sort(key=lambda c: c.k)
    report.seconds = time.perf_counter() - m_start
    return report


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------


def report_to_dict(report: ConjectureReport) -> dict:
    return {
        "m": report.m,
        "all_passed": report.all_passed,
        "v_degrees": {str(k): d for k, d in sorted(report.v_degrees.items())},
        "v_degree_ok": report.v_degree_ok,
        "middle_equal_ok": report.middle_equal_ok,
        "v_last_ok": report.v_last_ok,
        "budget_exceeded": report.budget_exceeded,
        "seconds": round(report.seconds, 3),
        "cells": [
            {
                "m": c.m,
                "k": c.k,
                "order": c.order,
                "order_expected": c.order_expected,
                "order_excluding_first": c.order_excluding_first,
                "factor_indices": list(c.factor_indices),
                "factor_degrees": list(c.factor_degrees),
                "clauses": c.clauses(),
                "seconds": round(c.seconds, 3),
                "note": c.note,
            }
            for c in report.cells
        ],
    }


def report_to_markdown(reports: list[ConjectureReport]) -> str:
    lines = [
        "| m | k | order | expected | factors (deg) | degree | factor | gcd | duality | minimal | time (s) |",
        "|---|---|-------|----------|---------------|--------|--------|-----|---------|---------|----------|",
    ]

    def flag(v: bool | None) -> str:
        return "-" if v is None else ("yes" if v else "NO")

    for rep in reports:
        for c in rep.cells:
            factors = ",".join(
                f"v{i}({d})" for i, d in zip(c.factor_indices, c.factor_degrees))
            lines.append(
                f"| {c.m} | {c.k} | {c.order if c.order is not None else '-'} "
                f"| {c.order_expected} | {factors or '-'} | {flag(c.degree_ok)} "
                f"| {flag(c.factor_exact)} | {flag(c.gcd_with_next_ok)} "
                f"| {flag(c.duality_ok)} | {flag(c.minimality_ok)} "
                f"| {c.seconds:.2f} |")
    return "\n".join(lines)
