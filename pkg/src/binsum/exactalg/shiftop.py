"""Polynomials in the shift symbol E with exact coefficients.

An operator sum_k c_k E^k acts on a sequence table by
(op f)(n) = sum_k c_k f(n+k).  Coefficients are integers or IntPoly values
in a parameter variable (x or t) that the shift does not touch, so operator
multiplication is ordinary commutative polynomial multiplication.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from binsum.errors import UsageError
from binsum.exactalg.intpoly import IntPoly


class ShiftOp:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None) -> None:
        out: dict[int, object] = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, int) or e < 0:
                raise UsageError("shift exponents must be nonnegative integers")
            if not isinstance(c, (int, IntPoly)):
                raise UsageError(f"bad operator coefficient type {type(c).__name__}")
            if c:
                out[e] = c
        self.terms: dict[int, object] = out

    @classmethod
    def identity(cls) -> "ShiftOp":
        return cls({0: 1})

    @classmethod
    def shift(cls, k: int = 1) -> "ShiftOp":
        return cls({k: 1})

    @classmethod
    def from_intpoly(cls, p: IntPoly) -> "ShiftOp":
        """Reinterpret a univariate polynomial as an operator in E."""
        return cls({e: c for e, c in p.terms()})

    @property
    def order(self):
        return max(self.terms) if self.terms else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, ShiftOp):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _coerce(self, other) -> "ShiftOp | None":
        if isinstance(other, ShiftOp):
            return other
        if isinstance(other, (int, IntPoly)):
            return ShiftOp({0: other})
        return None

    def __add__(self, other) -> "ShiftOp":
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
        return ShiftOp(out)

    __radd__ = __add__

    def __neg__(self) -> "ShiftOp":
        return ShiftOp({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ShiftOp":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "ShiftOp":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "ShiftOp":
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
        return ShiftOp(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ShiftOp":
        if not isinstance(e, int) or e < 0:
            raise UsageError("operator powers must be nonnegative integers")
        result = ShiftOp.identity()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def apply_at(self, table: Sequence, n: int):
        """(op f)(n) = sum_k c_k f(n+k); the table must cover n + order."""
        acc = None
        for e in sorted(self.terms):
            term = self.terms[e] * table[n + e]
            acc = term if acc is None else acc + term
        if acc is None:
            return 0
        return acc

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"ShiftOp({self.terms!r})"
