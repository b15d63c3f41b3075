"""The recurrence-polynomial engine.

Computes the integer tables d(n,m,j) and b(n,m,j) by a Newton-identity style
recursion, assembles the polynomial families p_1..p_{m-1} from them, solves
an independent linear system for the same polynomials from their defining
substitution identity, and verifies the operator identities tying everything
to the floored binomial sums.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, pi
from binsum.errors import ConsistencyError, UsageError
from binsum.exactalg import (
    BiPoly,
    IntPoly,
    LaurentPoly,
    ShiftOp,
    series_coeffs,
    substitute,
)
from binsum.seqgen import a_sum, binom_floor

PROVENANCES = ("newton", "oracle", "closed-form", "gf")


def _master_sign(n: int, m: int) -> int:
    """(-1)^(m*(n-1)), well defined also at n = 0."""
    return -1 if (m * (n - 1)) % 2 else 1


def master_rhs(n: int, m: int) -> IntPoly:
    """1 + (-1)^(m*(n-1)) x^n, the target of the substitution identity."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    coeffs[n] += _master_sign(n, m)
    return IntPoly("x", coeffs)


# ---------------------------------------------------------------------------
# the d / b tables
# ---------------------------------------------------------------------------


def d_coef(n: int, m: int, j: int) -> int:
    """d(n,m,j) = (-1)^(j - (m*j mod n)) * n * C(j, m*j mod n); d(n,m,0) = n.

    This is the power sum of the numbers zeta^(-m*k) (zeta^k - 1) over the
    n-th roots of unity zeta^k, except at j = n where the closed form keeps
    only one of the two surviving terms (see NewtonTable notes).
    """
    if n < 1 or m < 2 or j < 0:
        raise UsageError("need n >= 1, m >= 2, j >= 0")
    if j == 0:
        return n
    r = (m * j) % n
    c = comb(j, r) if r <= j else 0
    if not c:
        return 0
    return (-1) ** ((j - r) % 2) * n * c


@dataclass(frozen=True)
class NewtonTable:
    """The integer tables for one (n, m) cell, indices j in [0, n].

    b is produced by b(n,m,n-j) = -(1/j) sum_{i<j} d(n,m,j-i) b(n,m,n-i)
    with b(n,m,n) = 1, computed in exact rational arithmetic and asserted
    integral.  The j = 0 entry is a convention artifact: the recursion with
    the closed-form d yields b(n,m,0) = 1, while the underlying root product
    has constant coefficient 0 (one root is zero); no p_k ever uses it.
    """

    n: int
    m: int
    d: tuple[int, ...]
    b: tuple[int, ...]


@lru_cache(maxsize=None)
def b_coefs(n: int, m: int) -> NewtonTable:
    if n < 1 or m < 2:
        raise UsageError("need n >= 1, m >= 2")
    d = tuple(d_coef(n, m, j) for j in range(n + 1))
    b: list[Fraction] = [Fraction(0)] * (n + 1)
    b[n] = Fraction(1)
    for j in range(1, n + 1):
        acc = Fraction(0)
        for i in range(j):
            dv = d[j - i]
            if dv:
                acc += dv * b[n - i]
        b[n - j] = -acc / j
    out = []
    for j, val in enumerate(b):
        if val.denominator != 1:
            raise ConsistencyError(
                f"b({n},{m},{j}) = {val} is not an integer; convention bug")
        out.append(int(val))
    return NewtonTable(n, m, d, tuple(out))


# ---------------------------------------------------------------------------
# the polynomial families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PkFamily:
    """p_1..p_{m-1} for one (n, m), tagged with how they were produced."""

    n: int
    m: int
    polys: tuple[BiPoly, ...]
    provenance: str

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise UsageError(f"unknown provenance {self.provenance!r}")
        if len(self.polys) != self.m - 1:
            raise ConsistencyError("family must have m-1 polynomials")
        n, m = self.n, self.m
        for k, p in enumerate(self.polys, start=1):
            if n == 0:
                expected = (-1) ** (k - 1) * comb(m, k)
                if p != BiPoly.const(expected):
                    raise ConsistencyError(f"n=0 convention violated at k={k}")
                continue
            lo = (k - 1) * n // m
            hi = k * n // m
            for (ex, es), c in p.items():
                if ex != k * n - m * es:
                    raise ConsistencyError(
                        f"term x^{ex} s^{es} of p_{k}({n},{m}) off the degree line")
                if k == 1:
                    if not (0 <= es <= hi):
                        raise ConsistencyError(f"p_1 s-degree {es} outside [0,{hi}]")
                elif not (lo < es <= hi):
                    raise ConsistencyError(
                        f"p_{k} s-degree {es} outside ({lo},{hi}]")
            if k == 1 and p.terms.get((n, 0)) != 1:
                raise ConsistencyError("p_1 must be monic of x-degree n")

    def p(self, k: int) -> BiPoly:
        if not 1 <= k <= self.m - 1:
            raise UsageError(f"k must be in [1, {self.m - 1}]")
        return self.polys[k - 1]


def _n0_family(m: int, provenance: str) -> PkFamily:
    polys = tuple(BiPoly.const((-1) ** (k - 1) * comb(m, k)) for k in range(1, m))
    return PkFamily(0, m, polys, provenance)


@lru_cache(maxsize=None)
def assemble_pk(n: int, m: int) -> PkFamily:
    """Build the family from the b-table (provenance "newton")."""
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    if n == 0:
        return _n0_family(m, "newton")
    table = b_coefs(n, m)
    sigma = -_master_sign(n, m)          # c_k(n,m,j) = -(-1)^(m(n-1)) b(n,m,j)
    polys = []
    for k in range(1, m):
        terms: dict[tuple[int, int], int] = {}
        if k == 1:
            terms[(n, 0)] = 1
            window = range(1, n // m + 1)
        else:
            window = range((k - 1) * n // m + 1, k * n // m + 1)
        for j in window:
            c = sigma * table.b[j]
            if c:
                terms[(k * n - m * j, j)] = c
        polys.append(BiPoly(terms))
    return PkFamily(n, m, tuple(polys), "newton")


def pk_substituted(n: int, m: int, k: int) -> IntPoly:
    """p_k(n, m, x+1, x) from the newton engine."""
    return substitute(assemble_pk(n, m).p(k))


# ---------------------------------------------------------------------------
# the linear-system oracle
# ---------------------------------------------------------------------------


def pk_oracle(n: int, m: int) -> PkFamily:
    """Solve for the coefficient windows directly from the substitution
    identity: the expanded terms must telescope to 1 + (-1)^(m(n-1)) x^n.

    This is independent of the b-table and of the closed forms; a singular
    or inconsistent system signals an indexing bug.
    """
    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    if n == 0:
        return _n0_family(m, "oracle")
    unknowns: list[tuple[int, int]] = []
    for k in range(1, m):
        lo = 1 if k == 1 else (k - 1) * n // m + 1
        hi = k * n // m
        unknowns.extend((k, j) for j in range(lo, hi + 1))
    columns: list[list[int]] = []
    max_deg = n
    for (k, j) in unknowns:
        e = k * n - m * j
        col: dict[int, int] = {}
        for d2 in range(e + 1):
            col[j + d2] = comb(e, d2)
        max_deg = max(max_deg, e + j)
        columns.append(col)
    target = [0] * (max_deg + 1)
    target[0] += 1
    target[n] += _master_sign(n, m)
    for d2 in range(n + 1):
        target[d2] -= comb(n, d2)
    rows = max_deg + 1
    mat = [[Fraction(columns[u].get(r, 0)) for u in range(len(unknowns))]
           for r in range(rows)]
    rhs = [Fraction(target[r]) for r in range(rows)]
    sol = _solve_unique(mat, rhs)
    polys = []
    idx = 0
    for k in range(1, m):
        terms: dict[tuple[int, int], int] = {}
        if k == 1:
            terms[(n, 0)] = 1
        while idx < len(unknowns) and unknowns[idx][0] == k:
            _, j = unknowns[idx]
            val = sol[idx]
            if val.denominator != 1:
                raise ConsistencyError("oracle solution is not integral")
            if val:
                terms[(k * n - m * j, j)] = int(val)
            idx += 1
        polys.append(BiPoly(terms))
    return PkFamily(n, m, tuple(polys), "oracle")


def _solve_unique(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination requiring a unique, consistent solution.

    Pivots take the first nonzero entry in column order (deterministic).
    """
    rows = len(mat)
    cols = len(mat[0]) if mat else 0
    pivot_row_of_col: list[int] = []
    r = 0
    for c in range(cols):
        pivot = None
        for rr in range(r, rows):
            if mat[rr][c]:
                pivot = rr
                break
        if pivot is None:
            raise ConsistencyError("oracle system is singular (free column)")
        mat[r], mat[pivot] = mat[pivot], mat[r]
        rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        rhs[r] = rhs[r] * inv
        for rr in range(rows):
            if rr != r and mat[rr][c]:
                f = mat[rr][c]
                mat[rr] = [a - f * b for a, b in zip(mat[rr], mat[r])]
                rhs[rr] = rhs[rr] - f * rhs[r]
        pivot_row_of_col.append(r)
        r += 1
    for rr in range(r, rows):
        if rhs[rr]:
            raise ConsistencyError("oracle system is inconsistent")
    return [rhs[pivot_row_of_col[c]] for c in range(cols)]


# ---------------------------------------------------------------------------
# closed forms and generating functions
# ---------------------------------------------------------------------------


def pk_closed(n: int, m: int, k: int) -> BiPoly:
    """Closed forms for the edge polynomials of the family.

    k = 1 is the alternating-binomial form (equal to the v family); k = m-1
    is (-1)^m * w_n(m, x, (-1)^(m-1) s).  Other k have no printed closed form.
    """
    from binsum.seqgen import v_poly, w_poly

    if n < 0 or m < 2:
        raise UsageError("need n >= 0, m >= 2")
    if k == 1:
        # At n = 0 the base value m agrees with the convention constant
        # (-1)^0 C(m, 1); likewise below for k = m-1.
        return v_poly(n, m, method="explicit")
    if k == m - 1:
        w = w_poly(n, m, method="explicit")
        s_sign = (-1) ** (m - 1)                      # s -> (-1)^(m-1) s
        terms = {key: c * s_sign**key[1] for key, c in w.items()}
        out = BiPoly(terms)
        return out if m % 2 == 0 else -out            # overall (-1)^m factor
    raise UsageError("closed forms exist only for k = 1 and k = m-1")


_GF_DATA = {
    # m -> list of (k, numerator terms, denominator terms) with z-coefficient
    # maps {(ex, es): int} per z-power, ascending in z.
    2: [(1, [{(0, 0): 2}, {(1, 0): -1}],
         [{(0, 0): 1}, {(1, 0): -1}, {(0, 1): 1}])],
    3: [(1, [{(0, 0): 3}, {(1, 0): -2}],
         [{(0, 0): 1}, {(1, 0): -1}, {}, {(0, 1): 1}]),
        (2, [{(0, 0): -3}, {}, {(1, 1): 1}],
         [{(0, 0): 1}, {}, {(1, 1): -1}, {(0, 2): -1}])],
    4: [(1, [{(0, 0): 4}, {(1, 0): -3}],
         [{(0, 0): 1}, {(1, 0): -1}, {}, {}, {(0, 1): 1}]),
        (2, [{(0, 0): -6}, {}, {(0, 1): 4}, {(2, 1): 3}, {(0, 2): 2}],
         [{(0, 0): 1}, {}, {(0, 1): -1}, {(2, 1): -1}, {(0, 2): -1}, {},
          {(0, 3): 1}]),
        (3, [{(0, 0): 4}, {}, {}, {(1, 2): -1}],
         [{(0, 0): 1}, {}, {}, {(1, 2): -1}, {(0, 3): 1}])],
}


@lru_cache(maxsize=None)
def _gf_series(m: int, k: int, count: int) -> tuple[BiPoly, ...]:
    for kk, num, den in _GF_DATA[m]:
        if kk == k:
            num_l = [BiPoly(t) for t in num]
            den_l = [BiPoly(t) for t in den]
            return tuple(series_coeffs(num_l, den_l, count))
    raise UsageError(f"no printed generating function for k={k}, m={m}")


def pk_gf(n: int, m: int) -> PkFamily:
    """Family built from the printed rational generating functions
    (available for m in {2, 3, 4}); provenance "gf"."""
    if m not in _GF_DATA:
        raise UsageError(f"generating functions are only recorded for m in 2..4")
    if n < 0:
        raise UsageError("need n >= 0")
    if n == 0:
        return _n0_family(m, "gf")
    polys = [_gf_series(m, k, n + 1)[n] for k in range(1, m)]
    return PkFamily(n, m, tuple(polys), "gf")


def pk_family(n: int, m: int, source: str) -> PkFamily:
    """Dispatch to a family builder by provenance name."""
    if source == "newton":
        return assemble_pk(n, m)
    if source == "oracle":
        return pk_oracle(n, m)
    if source == "gf":
        return pk_gf(n, m)
    if source == "closed-form":
        if m not in (2, 3):
            raise UsageError("full closed-form families exist only for m in {2, 3}")
        if n == 0:
            return _n0_family(m, "closed-form")
        polys = tuple(pk_closed(n, m, k) for k in range(1, m))
        return PkFamily(n, m, polys, "closed-form")
    raise UsageError(f"unknown source {source!r}")


@lru_cache(maxsize=None)
def p2_m4(n: int) -> BiPoly:
    """The middle polynomial for m = 4 via its order-6 recursion:
    p(n) = s*p(n-2) + s*x^2*p(n-3) + s^2*p(n-4) - s^3*p(n-6)."""
    if n < 0:
        raise UsageError("need n >= 0")
    initial = [
        BiPoly.const(-6),
        BiPoly.zero(),
        BiPoly({(0, 1): -2}),
        BiPoly({(2, 1): -3}),
        BiPoly({(0, 2): -6}),
        BiPoly({(2, 2): -5}),
    ]
    if n < 6:
        return initial[n]
    s = BiPoly.var_second()
    x2 = BiPoly.monomial(1, 2, 0)
    table = list(initial)
    for idx in range(6, n + 1):
        table.append(s * table[idx - 2] + s * x2 * table[idx - 3]
                     + s * s * table[idx - 4] - s**3 * table[idx - 6])
    return table[n]


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def check_master_identity(n: int, m: int, source: PkFamily) -> bool:
    """Exact check of sum_k p_k(n,m,x+1,x) = 1 + (-1)^(m(n-1)) x^n."""
    if source.n != n or source.m != m:
        raise UsageError("family parameters do not match")
    lhs = IntPoly.zero("x")
    for k in range(1, m):
        lhs = lhs + substitute(source.p(k))
    return lhs == master_rhs(n, m)


def operator_from_family(i: int, m: int, k: int) -> ShiftOp:
    """p_k(i, m, E, 1) as a shift operator with integer coefficients."""
    p = assemble_pk(i, m).p(k).specialize_second(1)
    return ShiftOp.from_intpoly(p)


def check_shift_identity(i: int, ell: int, m: int, n_max: int) -> bool:
    """Exact Laurent check of the order-i operator identity

        sum_k z^(k-1) p_k(i,m,E,1) a(n,i,ell,m,z)
            = (1/z + (-1)^(m(i-1)) z^(m-1)) a(n,i,ell,m,z)

    for every n in [0, n_max], plus the underlying array identity on
    floored-binomial entries over a symmetric window of k.
    """
    if i < 1 or m < 2 or n_max < 0:
        raise UsageError("need i >= 1, m >= 2, n_max >= 0")
    ops = [operator_from_family(i, m, k) for k in range(1, m)]
    depth = max((op.order for op in ops if not op.is_zero), default=0)
    table = [a_sum(nn, i, ell, m) for nn in range(n_max + depth + 1)]
    sign = -1 if (m * (i - 1)) % 2 else 1
    rhs_factor = LaurentPoly("z", {-1: 1, m - 1: sign})
    for n in range(n_max + 1):
        lhs = LaurentPoly.zero("z")
        for k, op in enumerate(ops, start=1):
            applied = op.apply_at(table, n)
            if applied:
                lhs = lhs + LaurentPoly.monomial(1, k - 1, "z") * applied
        if lhs != rhs_factor * table[n]:
            return False
    # Array-level form: E shifts n, the spatial index walks a window wide
    # enough to cover every nonzero entry on both sides.
    for n in range(n_max + 1):
        k_lo = -(n + m + m * i)
        k_hi = (m - 1) * (n + depth) + m + m * i
        for kk in range(k_lo, k_hi + 1):
            lhs_val = 0
            for jj, op in enumerate(ops, start=1):
                for e, c in op.terms.items():
                    lhs_val += c * binom_floor(m, n + e, kk - (jj - 1) * i)
            rhs_val = binom_floor(m, n, kk + i) + sign * binom_floor(
                m, n, kk - (m - 1) * i)
            if lhs_val != rhs_val:
                return False
    return True


def check_laurent_identity_8(i: int, m: int) -> bool:
    """Exact Laurent-in-x check of

        sum_j x^((j-1)i) p_j(i, m, x^(m-1) + 1/x, 1)
            = x^(-i) + (-1)^(m(i-1)) x^((m-1)i).
    """
    if i < 1 or m < 2:
        raise UsageError("need i >= 1, m >= 2")
    w = LaurentPoly("x", {m - 1: 1, -1: 1})
    lhs = LaurentPoly.zero("x")
    for j in range(1, m):
        p = assemble_pk(i, m).p(j).specialize_second(1)
        value = p.eval_at(w)
        if isinstance(value, int):
            value = LaurentPoly.const(value, "x")
        lhs = lhs + LaurentPoly.monomial(1, (j - 1) * i, "x") * value
    sign = -1 if (m * (i - 1)) % 2 else 1
    rhs = LaurentPoly("x", {-i: 1, (m - 1) * i: sign})
    return lhs == rhs


def roots_of_unity_check(n: int, m: int, tol: float) -> bool:
    """Numeric check that the b-table matches the coefficients of
    prod_{k=1..n} (x - zeta^(-m k) (zeta^k - 1)) over a primitive n-th
    root of unity zeta, within a relative tolerance.

    The k = n factor is the zero root, so the product's constant
    coefficient is compared against 0 rather than the table's j = 0 entry.
    """
    if n < 1 or m < 2:
        raise UsageError("need n >= 1, m >= 2")
    if n > 16:
        raise UsageError("numeric-stability budget is n <= 16")
    table = b_coefs(n, m)
    roots = []
    for k in range(1, n + 1):
        zk = cmath.exp(2j * pi * k / n)
        roots.append(cmath.exp(-2j * pi * m * k / n) * (zk - 1))
    poly = [1.0 + 0j]
    for r in roots:
        nxt = [0j] * (len(poly) + 1)
        for e, c in enumerate(poly):
            nxt[e + 1] += c
            nxt[e] -= c * r
        poly = nxt
    for j in range(n + 1):
        expected = 0 if j == 0 else table.b[j]
        if abs(poly[j] - expected) > tol * max(1.0, abs(expected)):
            return False
    return True
