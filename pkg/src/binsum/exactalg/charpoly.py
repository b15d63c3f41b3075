"""Polynomials in z whose coefficients are integer polynomials in x.

These carry the recurrence annihilators of the polynomial families: C(z)
with C(E) f(n) = 0, where E is the shift in n.  Stored in primitive form
(the polynomial gcd of the z-coefficients is a unit) with the sign fixed so
the leading z-coefficient has a positive leading x-coefficient; the
normalization record remembers how the stored form relates to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from binsum.errors import UsageError
from binsum.exactalg.intpoly import IntPoly
from binsum.exactalg.ratfunc import RatFunc, common_denominator


@dataclass(frozen=True)
class Normalization:
    """Scalar (in Q(x)) relating the stored primitive form to the input.

    input = scale * primitive; ``monic_lead`` is the leading z-coefficient of
    the primitive form, i.e. what to divide by for the monic view.
    """

    scale: RatFunc
    monic_lead: IntPoly


class CharPoly:
    __slots__ = ("zvar", "xvar", "coeffs", "norm")

    def __init__(self, coeffs: Sequence[IntPoly], zvar: str = "z", xvar: str = "x",
                 norm: Normalization | None = None) -> None:
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.zvar = zvar
        self.xvar = xvar
        self.coeffs: tuple[IntPoly, ...] = tuple(cs)
        self.norm = norm

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, zvar: str = "z", xvar: str = "x") -> "CharPoly":
        """Build from ascending z-coefficients (ints or IntPoly) and normalize."""
        lifted = []
        for c in coeffs:
            if isinstance(c, int):
                lifted.append(IntPoly.const(c, xvar))
            elif isinstance(c, IntPoly):
                lifted.append(c.with_var(xvar) if c.is_constant else c)
                if not c.is_constant and c.var != xvar:
                    raise UsageError(f"coefficient variable {c.var!r} != {xvar!r}")
            else:
                raise UsageError(f"bad coefficient type {type(c).__name__}")
        raw = cls(lifted, zvar, xvar)
        return raw._primitive()

    @classmethod
    def from_monic(cls, monic_lower: Sequence[RatFunc], zvar: str = "z",
                   xvar: str = "x") -> "CharPoly":
        """Build from the lower coefficients of a monic z^r + sum q_j z^j view."""
        vals = list(monic_lower)
        den = common_denominator(vals)
        coeffs: list[IntPoly] = []
        for q in vals:
            p = q * den
            coeffs.append(p.as_intpoly().with_var(xvar) if p.num else IntPoly.zero(xvar))
        coeffs.append(den.with_var(xvar))
        return cls.from_coeffs(coeffs, zvar, xvar)

    def _primitive(self) -> "CharPoly":
        if not self.coeffs:
            return CharPoly((), self.zvar, self.xvar,
                            Normalization(RatFunc.one(self.xvar), IntPoly.zero(self.xvar)))
        content = IntPoly.zero(self.xvar)
        for c in self.coeffs:
            content = content.gcd(c)
        out = [c.exact_div(content) for c in self.coeffs]
        negated = out[-1].lc < 0
        if negated:
            out = [-c for c in out]
        scale = RatFunc(-content if negated else content)
        return CharPoly(out, self.zvar, self.xvar, Normalization(scale, out[-1]))

    # -- structure ---------------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> IntPoly:
        return self.coeffs[-1] if self.coeffs else IntPoly.zero(self.xvar)

    def coeff(self, e: int) -> IntPoly:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return IntPoly.zero(self.xvar)

    def monic_coeffs(self) -> list[RatFunc]:
        """All coefficients of the monic-over-Q(x) view, ascending (top = 1)."""
        lead = RatFunc(self.lead)
        return [RatFunc(c) / lead for c in self.coeffs]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPoly):
            return NotImplemented
        return (self.zvar, self.xvar, self.coeffs) == (other.zvar, other.xvar, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.zvar, self.xvar, self.coeffs))

    # -- arithmetic -----------------------------------------------------------------

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        if not isinstance(other, CharPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return CharPoly((), self.zvar, self.xvar)
        out = [IntPoly.zero(self.xvar)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return CharPoly.from_coeffs(out, self.zvar, self.xvar)

    def exact_div(self, other: "CharPoly") -> "CharPoly | None":
        """Exact quotient in z over Q(x), renormalized; None if not divisible."""
        if other.is_zero:
            raise UsageError("division by the zero polynomial")
        if self.is_zero:
            return CharPoly((), self.zvar, self.xvar)
        if self.degree < other.degree:
            return None
        rem: list[RatFunc] = [RatFunc(c) for c in self.coeffs]
        div: list[RatFunc] = [RatFunc(c) for c in other.coeffs]
        dd = len(div) - 1
        quot: list[RatFunc] = [RatFunc.zero(self.xvar)] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c.is_zero:
                continue
            q = c / div[-1]
            quot[top - dd] = q
            for i, b in enumerate(div):
                rem[top - dd + i] = rem[top - dd + i] - q * b
        if any(r for r in rem):
            return None
        return CharPoly.from_monic([q / quot[-1] for q in quot[:-1]], self.zvar, self.xvar)

    # -- as a shift operator -----------------------------------------------------

    def apply_at(self, seq: Sequence, n: int):
        """Apply as a recurrence operator at index n: sum_j c_j * seq[n+j]."""
        acc = None
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            term = c * seq[n + j] if not isinstance(seq[n + j], RatFunc) else seq[n + j] * c
            acc = term if acc is None else acc + term
        return acc

    def annihilates(self, seq: Sequence) -> bool:
        """True when the operator maps every available window of seq to zero."""
        r = len(self.coeffs) - 1
        if r < 0:
            return False
        for n in range(len(seq) - r):
            val = self.apply_at(seq, n)
            if val is None or val:
                return False
        return True

    def __str__(self) -> str:
        from binsum.exactalg.textio import canonical_text

        return canonical_text(self)

    def __repr__(self) -> str:
        return f"CharPoly({[repr(c) for c in self.coeffs]}, {self.zvar!r}, {self.xvar!r})"


def primitive_gcd(a: CharPoly, b: CharPoly) -> CharPoly:
    """Gcd in z over the fraction field of integer polynomials in x.

    Computed by a primitive polynomial-remainder sequence; the result is
    primitive and sign-normalized like every stored CharPoly.
    """
    if a.is_zero and b.is_zero:
        raise UsageError("gcd of two zero polynomials")
    if a.is_zero:
        return b if b.norm else CharPoly.from_coeffs(b.coeffs, b.zvar, b.xvar)
    if b.is_zero:
        return a if a.norm else CharPoly.from_coeffs(a.coeffs, a.zvar, a.xvar)
    A = CharPoly.from_coeffs(a.coeffs, a.zvar, a.xvar)
    B = CharPoly.from_coeffs(b.coeffs, b.zvar, b.xvar)
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero:
        R = _pseudo_rem(A, B)
        A, B = B, CharPoly.from_coeffs(R.coeffs, R.zvar, R.xvar) if R.coeffs else R
    return CharPoly.from_coeffs(A.coeffs, A.zvar, A.xvar)


def _pseudo_rem(a: CharPoly, b: CharPoly) -> CharPoly:
    # Remainder of lc(b)^k * a mod b, all arithmetic inside Z[x][z].
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    while r and len(r) - 1 >= db:
        lead = r[-1]
        r = [lb * c for c in r]
        shift = (len(r) - 1) - db
        for i, bc in enumerate(b.coeffs):
            r[shift + i] = r[shift + i] - lead * bc
        while r and r[-1].is_zero:
            r.pop()
    return CharPoly(r, a.zvar, a.xvar)
