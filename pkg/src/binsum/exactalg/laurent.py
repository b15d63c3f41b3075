"""Laurent polynomials: finite support over positive and negative exponents.

Coefficients may be plain integers, Fractions, or IntPoly values from a
declared exact ring; zero coefficients are never stored.  Used both for the
binomial-sum generating sequences in z and for identity checks in x.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from binsum.errors import UsageError
from binsum.exactalg.intpoly import IntPoly, _check_var


class LaurentPoly:
    __slots__ = ("var", "terms")

    def __init__(self, var: str, terms: Mapping[int, object] | None = None) -> None:
        self.var = _check_var(var)
        out: dict[int, object] = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, int):
                raise UsageError("Laurent exponents must be integers")
            if c:
                out[e] = c
        self.terms: dict[int, object] = out

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "z") -> "LaurentPoly":
        return cls(var, {})

    @classmethod
    def const(cls, c, var: str = "z") -> "LaurentPoly":
        return cls(var, {0: c})

    @classmethod
    def monomial(cls, c, e: int, var: str = "z") -> "LaurentPoly":
        return cls(var, {e: c})

    @classmethod
    def from_intpoly(cls, p: IntPoly, var: str | None = None) -> "LaurentPoly":
        return cls(var or p.var, {e: c for e, c in p.terms()})

    # -- structure -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_exp(self):
        return min(self.terms) if self.terms else 0

    @property
    def max_exp(self):
        return max(self.terms) if self.terms else 0

    def coeff(self, e: int):
        return self.terms.get(e, 0)

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_value(self):
        return self.terms.get(0, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            if self.is_constant and other.is_constant:
                return self.constant_value() == other.constant_value()
            return self.var == other.var and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_value())
        return hash((self.var, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if not (other.is_constant or self.is_constant or other.var == self.var):
                raise UsageError(f"variable mismatch: {self.var!r} vs {other.var!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.var) if other else LaurentPoly.zero(self.var)
        if isinstance(other, IntPoly):
            # Same-variable IntPoly lifts; a different variable is a coefficient.
            if not other.is_constant and other.var == self.var:
                return LaurentPoly.from_intpoly(other)
            return LaurentPoly.const(other, self.var) if other else LaurentPoly.zero(self.var)
        return None

    def __add__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.var if not self.is_constant else o.var, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.var, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPoly(self.var if not self.is_constant else o.var, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if not isinstance(e, int):
            raise UsageError("Laurent powers must be integers")
        if e < 0:
            if len(self.terms) != 1:
                raise UsageError("only monomials have negative Laurent powers")
            (exp, c), = self.terms.items()
            if c not in (1, -1):
                raise UsageError("only unit monomials can be inverted exactly")
            return LaurentPoly.monomial(c if (e & 1) else 1, exp * e, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by var**k (k may be negative)."""
        return LaurentPoly(self.var, {e + k: c for e, c in self.terms.items()})

    # -- evaluation -----------------------------------------------------------

    def eval_at(self, value):
        """Evaluate exactly; negative exponents require an invertible value."""
        if not self.terms:
            return 0
        if isinstance(value, int):
            if value in (1, -1):
                inv = value
            elif value == 0:
                raise UsageError("cannot evaluate negative exponents at 0")
            else:
                inv = Fraction(1, value)
        elif isinstance(value, Fraction):
            inv = Fraction(1) / value
        else:
            inv = 1 / value
        acc = None
        for e in sorted(self.terms):
            c = self.terms[e]
            term = c * (value**e if e >= 0 else inv**(-e))
            acc = term if acc is None else acc + term
        return acc

    def coefficient_sum(self):
        acc = None
        for e in sorted(self.terms):
            acc = self.terms[e] if acc is None else acc + self.terms[e]
        return 0 if acc is None else acc

    def to_intpoly(self) -> IntPoly:
        """Convert when the support is nonnegative and coefficients are ints."""
        if self.terms and self.min_exp < 0:
            raise UsageError("Laurent polynomial has negative exponents")
        coeffs = [0] * (self.max_exp + 1 if self.terms else 0)
        for e, c in self.terms.items():
            if not isinstance(c, int):
                raise UsageError("non-integer coefficients cannot convert to IntPoly")
            coeffs[e] = c
        return IntPoly(self.var, coeffs)

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.var!r}, {self.terms!r})"
