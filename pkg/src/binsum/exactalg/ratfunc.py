"""Reduced quotients of integer-coefficient univariate polynomials.

RatFunc is the coefficient field used when guessing minimal recurrences and
when dividing characteristic polynomials.  Invariants: the denominator is
nonzero with positive leading coefficient, and gcd(numerator, denominator)
is a unit.
"""

from __future__ import annotations

import math
from fractions import Fraction

from binsum.errors import UsageError
from binsum.exactalg.intpoly import IntPoly


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly | None = None) -> None:
        if den is None:
            den = IntPoly.const(1, num.var)
        if den.is_zero:
            raise UsageError("zero denominator")
        num, den = self._reduced(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduced(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
        if num.is_zero:
            return num, IntPoly.const(1, den.var)
        g = num.gcd(den)
        if g.degree > 0 or abs(g.lc) != 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.lc < 0:
            num, den = -num, -den
        return num, den

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_int(cls, c: int, var: str = "x") -> "RatFunc":
        return cls(IntPoly.const(c, var))

    @classmethod
    def from_fraction(cls, q: Fraction, var: str = "x") -> "RatFunc":
        return cls(IntPoly.const(q.numerator, var), IntPoly.const(q.denominator, var))

    @classmethod
    def zero(cls, var: str = "x") -> "RatFunc":
        return cls(IntPoly.zero(var))

    @classmethod
    def one(cls, var: str = "x") -> "RatFunc":
        return cls(IntPoly.const(1, var))

    # -- structure ---------------------------------------------------------------

    @property
    def var(self) -> str:
        return self.num.var if not self.num.is_constant else self.den.var

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_poly(self) -> bool:
        return self.den.is_constant and self.den.lc == 1

    def as_intpoly(self) -> IntPoly:
        if not self.is_poly:
            raise UsageError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    # -- arithmetic -----------------------------------------------------------------

    def _coerce(self, other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            return RatFunc.from_int(other, self.var)
        if isinstance(other, Fraction):
            return RatFunc.from_fraction(other, self.var)
        if isinstance(other, IntPoly):
            return RatFunc(other)
        return None

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise UsageError("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            if self.is_zero:
                raise UsageError("division by zero")
            return RatFunc(self.den**(-e), self.num**(-e))
        return RatFunc(self.num**e, self.den**e)

    # -- evaluation --------------------------------------------------------------

    def eval_frac(self, a) -> Fraction | None:
        """Evaluate at a rational point; None when the point is a pole."""
        d = self.den.eval_at(Fraction(a))
        if d == 0:
            return None
        return Fraction(self.num.eval_at(Fraction(a))) / d

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"


def common_denominator(values: list[RatFunc]) -> IntPoly:
    """Positive-leading lcm of the denominators (1 for an empty list)."""
    from binsum.exactalg.intpoly import poly_lcm

    var = values[0].var if values else "x"
    acc = IntPoly.const(1, var)
    for v in values:
        acc = poly_lcm(acc, v.den)
    # Fold in the integer lcm of leftover constant denominators.
    scale = 1
    for v in values:
        prod = v * acc
        if not prod.is_poly:
            c = prod.den
            if c.degree > 0:
                raise UsageError("common denominator computation failed")
            scale = scale * c.lc // math.gcd(scale, c.lc)
    return acc * scale
