"""Exact arithmetic kernel: integers, polynomials, Laurent polynomials,
rational functions, z-polynomial operators, and rational series expansion.

Everything here is immutable after construction and every operation is a
pure function, so values can be shared freely across concurrent contexts.
"""

from binsum.exactalg.bipoly import BiPoly, substitute
from binsum.exactalg.charpoly import CharPoly, Normalization, primitive_gcd
from binsum.exactalg.intpoly import IntPoly, poly_lcm
from binsum.exactalg.laurent import LaurentPoly
from binsum.exactalg.ratfunc import RatFunc
from binsum.exactalg.series import series_coeffs, series_matches
from binsum.exactalg.shiftop import ShiftOp
from binsum.exactalg.textio import canonical_text, from_json_dict, parse, to_json_dict

from binsum.errors import UsageError


def poly_arith(a, b, op: str):
    """Named arithmetic entry point: op is one of add | sub | mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")


__all__ = [
    "BiPoly",
    "CharPoly",
    "IntPoly",
    "LaurentPoly",
    "Normalization",
    "RatFunc",
    "ShiftOp",
    "canonical_text",
    "from_json_dict",
    "parse",
    "poly_arith",
    "poly_lcm",
    "primitive_gcd",
    "series_coeffs",
    "series_matches",
    "substitute",
    "to_json_dict",
]
