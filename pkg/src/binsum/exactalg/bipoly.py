"""Sparse bivariate polynomials with integer coefficients.

Terms are stored as a map from exponent pairs to nonzero coefficients.  The
default variable pair is ``(x, s)``; the same machinery is reused with the
pair ``(E, t)`` when building shift operators with parameter-dependent
coefficients.  Equality is structural equality of the normalized maps.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from binsum.errors import UsageError
from binsum.exactalg.intpoly import IntPoly, _check_var

XS = ("x", "s")


class BiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None,
                 variables: tuple[str, str] = XS) -> None:
        va, vb = variables
        _check_var(va)
        _check_var(vb)
        if va == vb:
            raise UsageError("bivariate polynomial needs two distinct variables")
        self.vars = (va, vb)
        out: dict[tuple[int, int], int] = {}
        for (ea, eb), c in (terms or {}).items():
            if not isinstance(c, int):
                raise UsageError(f"integer coefficient expected, got {type(c).__name__}")
            if ea < 0 or eb < 0:
                raise UsageError("BiPoly exponents must be nonnegative")
            if c:
                out[(ea, eb)] = c
        self.terms: dict[tuple[int, int], int] = out

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, variables: tuple[str, str] = XS) -> "BiPoly":
        return cls({}, variables)

    @classmethod
    def const(cls, c: int, variables: tuple[str, str] = XS) -> "BiPoly":
        return cls({(0, 0): c}, variables)

    @classmethod
    def monomial(cls, c: int, ea: int, eb: int,
                 variables: tuple[str, str] = XS) -> "BiPoly":
        return cls({(ea, eb): c}, variables)

    @classmethod
    def var_first(cls, variables: tuple[str, str] = XS) -> "BiPoly":
        return cls({(1, 0): 1}, variables)

    @classmethod
    def var_second(cls, variables: tuple[str, str] = XS) -> "BiPoly":
        return cls({(0, 1): 1}, variables)

    @classmethod
    def from_intpoly(cls, p: IntPoly, slot: int = 0,
                     variables: tuple[str, str] = XS) -> "BiPoly":
        """Embed a univariate polynomial into the given variable slot."""
        terms = {}
        for e, c in p.terms():
            key = (e, 0) if slot == 0 else (0, e)
            terms[key] = c
        return cls(terms, variables)

    # -- structure -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> int:
        return self.terms.get((0, 0), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self.terms.items())

    def degree_first(self):
        return max((ea for ea, _ in self.terms), default=float("-inf"))

    def degrees_second(self) -> set[int]:
        return {eb for _, eb in self.terms}

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if isinstance(other, IntPoly):
            if other.is_constant or other.var == self.vars[0]:
                return self == BiPoly.from_intpoly(other, 0, self.vars)
            if other.var == self.vars[1]:
                return self == BiPoly.from_intpoly(other, 1, self.vars)
            return False
        if isinstance(other, BiPoly):
            if self.terms != other.terms:
                return False
            return self.is_constant or self.vars == other.vars
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.constant_value())
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            if not (other.is_constant or self.is_constant or other.vars == self.vars):
                raise UsageError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return BiPoly.const(other, self.vars)
        if isinstance(other, IntPoly):
            if other.is_constant:
                return BiPoly.const(other.lc if other.coeffs else 0, self.vars)
            if other.var == self.vars[0]:
                return BiPoly.from_intpoly(other, 0, self.vars)
            if other.var == self.vars[1]:
                return BiPoly.from_intpoly(other, 1, self.vars)
            raise UsageError(f"variable mismatch: {self.vars} vs {other.var!r}")
        return None

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly(out, self.vars if not self.is_constant else o.vars)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "BiPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return BiPoly(out, self.vars if not self.is_constant else o.vars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if not isinstance(e, int) or e < 0:
            raise UsageError("polynomial powers must be nonnegative integers")
        result = BiPoly.const(1, self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitution ---------------------------------------------------------

    def specialize_first(self, value: int) -> IntPoly:
        """Substitute an integer for the first variable; result in the second."""
        out: dict[int, int] = {}
        for (ea, eb), c in self.terms.items():
            out[eb] = out.get(eb, 0) + c * value**ea
        size = max(out, default=-1) + 1
        coeffs = [0] * size
        for e, c in out.items():
            coeffs[e] = c
        return IntPoly(self.vars[1], coeffs)

    def specialize_second(self, value: int) -> IntPoly:
        """Substitute an integer for the second variable; result in the first."""
        out: dict[int, int] = {}
        for (ea, eb), c in self.terms.items():
            out[ea] = out.get(ea, 0) + c * value**eb
        size = max(out, default=-1) + 1
        coeffs = [0] * size
        for e, c in out.items():
            coeffs[e] = c
        return IntPoly(self.vars[0], coeffs)

    def eval_at(self, first, second):
        """Evaluate with arbitrary ring elements substituted for both variables."""
        pow_a: dict[int, object] = {}
        pow_b: dict[int, object] = {}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = 1 if e == 0 else power(cache, base, e - 1) * base
            return cache[e]

        acc = None
        for (ea, eb), c in sorted(self.terms.items()):
            term = c * power(pow_a, first, ea) * power(pow_b, second, eb)
            acc = term if acc is None else acc + term
        if acc is None:
            return 0 * first
        return acc

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"BiPoly({self.terms!r}, {self.vars!r})"


def substitute(p: BiPoly) -> IntPoly:
    """Map (x, s) -> (x+1, x): expand each term c*x^a*s^b as c*(x+1)^a*x^b.

    Returns an exact univariate polynomial in the first variable's name.
    """
    from math import comb

    var = p.vars[0]
    out: dict[int, int] = {}
    for (a, b), c in p.terms.items():
        for d in range(a + 1):
            e = b + d
            out[e] = out.get(e, 0) + c * comb(a, d)
    size = max(out, default=-1) + 1
    coeffs = [0] * size
    for e, c in out.items():
        coeffs[e] = c
    return IntPoly(var, coeffs)
