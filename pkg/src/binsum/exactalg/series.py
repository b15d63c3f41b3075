"""Power-series expansion of exact rational generating functions.

Given numerator and denominator polynomials in one main variable whose
coefficients live in an exact ring (integers, Fractions, IntPoly, BiPoly,
LaurentPoly), produce the first N series coefficients.  The denominator's
constant term must be invertible: +-1 in a polynomial ring, or any nonzero
rational.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from binsum.errors import UsageError
from binsum.exactalg.bipoly import BiPoly
from binsum.exactalg.intpoly import IntPoly
from binsum.exactalg.laurent import LaurentPoly


def _as_coeff_list(p) -> list:
    if isinstance(p, IntPoly):
        return list(p.coeffs)
    if isinstance(p, (list, tuple)):
        return list(p)
    raise UsageError(f"expected a coefficient list or IntPoly, got {type(p).__name__}")


def _is_unit_one(c) -> int:
    """Return +-1 when c is the constant one or minus one of its ring, else 0."""
    if isinstance(c, int):
        return c if c in (1, -1) else 0
    if isinstance(c, (IntPoly, BiPoly, LaurentPoly)):
        if c.is_constant:
            v = c.constant_value() if not isinstance(c, IntPoly) else (c.lc if c.coeffs else 0)
            return v if v in (1, -1) else 0
    return 0


def series_coeffs(numerator, denominator, count: int) -> list:
    """First ``count`` coefficients of numerator/denominator as a power series.

    Inputs are IntPoly values or plain coefficient lists (index = exponent)
    over a common exact ring.  Raises UsageError when the denominator's
    constant term is zero or not invertible in its ring.
    """
    if count < 0:
        raise UsageError("count must be nonnegative")
    num = _as_coeff_list(numerator)
    den = _as_coeff_list(denominator)
    while den and not den[-1]:
        den.pop()
    if not den or not den[0]:
        raise UsageError("denominator has zero constant term")
    q0 = den[0]
    sign = _is_unit_one(q0)
    use_fraction = False
    if not sign:
        if isinstance(q0, (int, Fraction)):
            use_fraction = True
        else:
            raise UsageError(
                "denominator constant term must be +-1 or a nonzero rational")
    zero = q0 * 0
    out: list = []
    for n in range(count):
        acc = num[n] if n < len(num) else zero
        for r in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[r] * out[n - r]
        if sign:
            out.append(acc if sign == 1 else -acc)
        else:
            out.append(Fraction(acc) / Fraction(q0) if use_fraction else acc)
    return out


def series_matches(numerator, denominator, values: Sequence, count: int | None = None) -> bool:
    """Convolution check: denominator * values == numerator through z^count."""
    num = _as_coeff_list(numerator)
    den = _as_coeff_list(denominator)
    n_check = len(values) if count is None else count
    for n in range(n_check):
        acc = None
        for r in range(0, min(n, len(den) - 1) + 1):
            term = den[r] * values[n - r]
            acc = term if acc is None else acc + term
        target = num[n] if n < len(num) else 0
        lhs = acc if acc is not None else 0
        if lhs != target:
            return False
    return True
