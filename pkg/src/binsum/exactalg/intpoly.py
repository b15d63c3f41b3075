"""Dense univariate polynomials over the arbitrary-precision integers.

The coefficient list is indexed by exponent and never stores a leading zero;
the zero polynomial is the empty list with degree ``-inf``.  Instances are
immutable by convention (tuple storage, no mutating methods) and hashable, so
they can be shared freely across concurrent contexts and used as dict keys.

Constants compare equal across variable labels, and arithmetic silently
adopts the other operand's variable when one side is constant.  Mixing two
nonconstant polynomials in different variables raises :class:`UsageError`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator

from binsum.errors import ConsistencyError, UsageError

NEG_INF = float("-inf")


def _check_var(var: str) -> str:
    if not (isinstance(var, str) and len(var) == 1 and var.isalpha()):
        raise UsageError(f"bad variable label {var!r}: expected a single letter")
    return var


class IntPoly:
    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[int] = ()) -> None:
        self.var = _check_var(var)
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise UsageError(
                    f"integer coefficient expected, got {type(c).__name__}"
                )
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, var: str = "x") -> "IntPoly":
        return cls(var, ())

    @classmethod
    def const(cls, c: int, var: str = "x") -> "IntPoly":
        return cls(var, (c,))

    @classmethod
    def variable(cls, var: str = "x") -> "IntPoly":
        return cls(var, (0, 1))

    @classmethod
    def monomial(cls, c: int, e: int, var: str = "x") -> "IntPoly":
        if e < 0:
            raise UsageError("IntPoly exponents must be nonnegative")
        return cls(var, (0,) * e + (c,))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self):
        """Degree as an int, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, e: int) -> int:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs for the nonzero terms."""
        for e, c in enumerate(self.coeffs):
            if c:
                yield e, c

    def with_var(self, var: str) -> "IntPoly":
        return IntPoly(var, self.coeffs)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        if isinstance(other, IntPoly):
            if self.coeffs != other.coeffs:
                return False
            return self.is_constant or self.var == other.var
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.var, self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "IntPoly | None":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other, self.var)
        return None

    def _join_var(self, other: "IntPoly") -> str:
        if self.is_constant:
            return other.var if not other.is_constant else self.var
        if other.is_constant or other.var == self.var:
            return self.var
        raise UsageError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        var = self._join_var(o)
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(var, (self[i] + o[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        var = self._join_var(o)
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(var, (self[i] - o[i] for i in range(n)))

    def __rsub__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.var, (-c for c in self.coeffs))

    def __mul__(self, other) -> "IntPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        var = self._join_var(o)
        if self.is_zero or o.is_zero:
            return IntPoly.zero(var)
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return IntPoly(var, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if not isinstance(e, int) or e < 0:
            raise UsageError("polynomial powers must be nonnegative integers")
        result = IntPoly.const(1, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shifted(self, k: int) -> "IntPoly":
        """Multiply by var**k (k >= 0)."""
        if k < 0:
            raise UsageError("shift exponent must be nonnegative")
        return IntPoly(self.var, (0,) * k + tuple(self.coeffs))

    def shift_down_exact(self, k: int) -> "IntPoly":
        """Divide by var**k; the low-order coefficients must all be zero."""
        if any(self.coeffs[:k]):
            raise ConsistencyError(f"{self!r} is not divisible by {self.var}^{k}")
        return IntPoly(self.var, self.coeffs[k:])

    # -- evaluation / substitution ------------------------------------------

    def eval_at(self, value):
        """Horner evaluation at any value supporting + and * (int, Fraction,
        complex, IntPoly, LaurentPoly, ...)."""
        if not self.coeffs:
            return 0 * value
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def compose_monomial(self, c: int, k: int, var: str | None = None) -> "IntPoly":
        """Substitute var -> c * newvar**k (k >= 1), e.g. s -> -x**2."""
        if k < 1:
            raise UsageError("monomial substitution needs exponent >= 1")
        out = [0] * (k * max(len(self.coeffs) - 1, 0) + 1)
        for e, a in self.terms():
            out[k * e] += a * c**e
        return IntPoly(var or self.var, out)

    # -- integer content / gcd ----------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
            if g == 1:
                return 1
        return g

    def primitive_part(self) -> "IntPoly":
        """Divide out the content; the sign of the leading coefficient is kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return IntPoly(self.var, (c // g for c in self.coeffs))

    def exact_div_int(self, d: int) -> "IntPoly":
        if d == 0:
            raise UsageError("division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ConsistencyError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPoly(self.var, out)

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact polynomial division; raises ConsistencyError on a remainder."""
        o = self._coerce(other)
        if o is None or o.is_zero:
            raise UsageError("division by zero polynomial")
        q, r = self.divmod_frac(o)
        if any(r) or any(c.denominator != 1 for c in q):
            raise ConsistencyError("polynomial division is not exact")
        return IntPoly(self._join_var(o), (int(c) for c in q))

    def divmod_frac(self, other: "IntPoly") -> tuple[list[Fraction], list[Fraction]]:
        """Long division over the rationals; returns coefficient lists."""
        if other.is_zero:
            raise UsageError("division by zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        div = other.coeffs
        dd = len(div) - 1
        lead = Fraction(div[-1])
        if len(rem) - 1 < dd:
            return [], rem
        quot = [Fraction(0)] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q = c / lead
            quot[top - dd] = q
            for i, b in enumerate(div):
                rem[top - dd + i] -= q * b
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem

    @staticmethod
    def _prem(a: "IntPoly", b: "IntPoly") -> "IntPoly":
        # Pseudo-remainder: a scaled by powers of lc(b) so division stays integral.
        r = list(a.coeffs)
        db = b.degree
        lb = b.lc
        while len(r) - 1 >= db and r:
            lead = r[-1]
            r = [lb * c for c in r]
            shift = (len(r) - 1) - db
            for i, bc in enumerate(b.coeffs):
                r[shift + i] -= lead * bc
            while r and r[-1] == 0:
                r.pop()
        return IntPoly(a.var, r)

    def gcd(self, other: "IntPoly") -> "IntPoly":
        """Polynomial gcd over Z[var] via a primitive remainder sequence.

        The result is primitive up to its integer content gcd and is
        normalized to a positive leading coefficient.
        """
        o = self._coerce(other)
        if o is None:
            raise UsageError("cannot take gcd with a non-polynomial")
        var = self._join_var(o)
        if self.is_zero and o.is_zero:
            return IntPoly.zero(var)
        if self.is_zero or o.is_zero:
            g = o if self.is_zero else self
            g = IntPoly(var, g.coeffs)
            return g if g.lc > 0 else -g
        c = math.gcd(self.content(), o.content())
        a = self.primitive_part().with_var(var)
        b = o.primitive_part().with_var(var)
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero:
            r = IntPoly._prem(a, b).primitive_part()
            a, b = b, r
        g = a.primitive_part() * c
        return g if g.lc > 0 else -g

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"IntPoly({self.var!r}, {list(self.coeffs)!r})"


def poly_lcm(a: IntPoly, b: IntPoly) -> IntPoly:
    """Least common multiple, normalized like gcd (positive leading coefficient)."""
    if a.is_zero or b.is_zero:
        return IntPoly.zero(a.var)
    g = a.gcd(b)
    m = a.exact_div(g) * b
    return m if m.lc > 0 else -m
