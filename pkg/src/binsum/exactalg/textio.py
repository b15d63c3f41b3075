"""Canonical polynomial text format, parser, and JSON encoding.

Format rules: terms are ordered by descending main-variable exponent with
ties broken by descending secondary exponent; coefficients are exact decimal
integers; unit coefficients and zero exponents are elided ("x^5 - 5*x^3*s").
Composite coefficients of a z-polynomial are parenthesized with the sign
pulled out: "z^5 - (x^4 + x^3)*z - x^4".  parse() round-trips every form
this module prints and reports malformed input with a character position.
"""

from __future__ import annotations

from typing import Iterable

from binsum.errors import ParseError, UsageError
from binsum.exactalg.bipoly import BiPoly
from binsum.exactalg.charpoly import CharPoly
from binsum.exactalg.intpoly import IntPoly
from binsum.exactalg.laurent import LaurentPoly
from binsum.exactalg.ratfunc import RatFunc
from binsum.exactalg.shiftop import ShiftOp

# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------


def _join_terms(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for i, (sign, body) in enumerate(terms):
        if i == 0:
            parts.append(("-" if sign < 0 else "") + body)
        else:
            parts.append((" - " if sign < 0 else " + ") + body)
    return "".join(parts)


def _mono_body(coef_abs: int, factors: Iterable[tuple[str, int]]) -> str:
    parts = []
    var_parts = []
    for var, e in factors:
        if e == 0:
            continue
        var_parts.append(var if e == 1 else f"{var}^{e}")
    if coef_abs != 1 or not var_parts:
        parts.append(str(coef_abs))
    parts.extend(var_parts)
    return "*".join(parts)


def _format_intpoly(p: IntPoly) -> str:
    terms = []
    for e in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[e]
        if c:
            terms.append((1 if c > 0 else -1, _mono_body(abs(c), [(p.var, e)])))
    return _join_terms(terms)


def _format_bipoly(p: BiPoly) -> str:
    va, vb = p.vars
    terms = []
    for (ea, eb) in sorted(p.terms, reverse=True):
        c = p.terms[(ea, eb)]
        terms.append((1 if c > 0 else -1, _mono_body(abs(c), [(va, ea), (vb, eb)])))
    return _join_terms(terms)


def _format_laurent(p: LaurentPoly) -> str:
    terms = []
    for e in sorted(p.terms, reverse=True):
        c = p.terms[e]
        if isinstance(c, IntPoly):
            # Polynomial coefficients print like z-polynomial coefficients do.
            sign, body = _zcoef_body(c, p.var, e)
            terms.append((sign, body))
            continue
        terms.append((1 if c > 0 else -1, _mono_body(abs(c), [(p.var, e)])))
    return _join_terms(terms)


def _zcoef_body(coef: IntPoly, zvar: str, ze: int) -> tuple[int, str]:
    nonzero = [(e, c) for e, c in coef.terms()]
    zpart = "" if ze == 0 else (zvar if ze == 1 else f"{zvar}^{ze}")
    if len(nonzero) == 1:
        e, c = nonzero[0]
        sign = 1 if c > 0 else -1
        body = _mono_body(abs(c), [(coef.var, e), (zvar, ze)])
        return sign, body
    sign = 1 if coef.lc > 0 else -1
    inner = _format_intpoly(coef if sign > 0 else -coef)
    body = f"({inner})" + (f"*{zpart}" if zpart else "")
    return sign, body


def _format_zpoly(coeffs: list, zvar: str) -> str:
    terms = []
    for ze in range(len(coeffs) - 1, -1, -1):
        c = coeffs[ze]
        if isinstance(c, int):
            if not c:
                continue
            terms.append((1 if c > 0 else -1, _mono_body(abs(c), [(zvar, ze)])))
        else:
            if c.is_zero:
                continue
            terms.append(_zcoef_body(c, zvar, ze))
    return _join_terms(terms)


def canonical_text(p) -> str:
    """Render any exactalg value in the canonical, re-parseable text form."""
    if isinstance(p, int):
        return str(p)
    if isinstance(p, IntPoly):
        return _format_intpoly(p)
    if isinstance(p, BiPoly):
        return _format_bipoly(p)
    if isinstance(p, LaurentPoly):
        return _format_laurent(p)
    if isinstance(p, CharPoly):
        return _format_zpoly(list(p.coeffs), p.zvar)
    if isinstance(p, ShiftOp):
        top = max(p.terms, default=-1)
        coeffs = [p.terms.get(e, 0) for e in range(top + 1)]
        return _format_zpoly(coeffs, "E")
    if isinstance(p, RatFunc):
        if p.is_poly:
            return _format_intpoly(p.num)
        return f"({_format_intpoly(p.num)}) / ({_format_intpoly(p.den)})"
    raise UsageError(f"cannot format {type(p).__name__}")


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            if i + 1 < n and text[i + 1].isalpha():
                raise ParseError(f"unexpected multi-letter name {text[i:i+2]!r}...", i)
            tokens.append(("name", ch, i))
            i += 1
            continue
        if ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


# A parsed polynomial is a map from monomials to integer coefficients where a
# monomial is a sorted tuple of (variable, nonzero exponent) pairs.
_GenPoly = dict


def _gp_const(c: int) -> _GenPoly:
    return {(): c} if c else {}


def _gp_mono(var: str, e: int) -> _GenPoly:
    return {((var, e),): 1} if e else {(): 1}


def _gp_add(a: _GenPoly, b: _GenPoly) -> _GenPoly:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _gp_neg(a: _GenPoly) -> _GenPoly:
    return {k: -c for k, c in a.items()}


def _gp_mul(a: _GenPoly, b: _GenPoly) -> _GenPoly:
    out: _GenPoly = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            exps: dict[str, int] = {}
            for var, e in k1 + k2:
                exps[var] = exps.get(var, 0) + e
            key = tuple(sorted((v, e) for v, e in exps.items() if e))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _gp_pow(a: _GenPoly, e: int, pos: int) -> _GenPoly:
    if e < 0:
        if len(a) == 1:
            (key, c), = a.items()
            if c in (1, -1):
                exps = tuple((v, ex * e) for v, ex in key)
                return {exps: c if (e & 1) else 1}
        raise ParseError("negative exponent on a non-monomial", pos)
    out = _gp_const(1)
    base = a
    while e:
        if e & 1:
            out = _gp_mul(out, base)
        base = _gp_mul(base, base)
        e >>= 1
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self) -> _GenPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        acc = self.parse_term()
        if sign < 0:
            acc = _gp_neg(acc)
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            t = self.parse_term()
            acc = _gp_add(acc, _gp_neg(t) if op == "-" else t)
        return acc

    def parse_term(self) -> _GenPoly:
        acc = self.parse_factor()
        while self.peek()[0] == "*":
            self.next()
            acc = _gp_mul(acc, self.parse_factor())
        return acc

    def parse_factor(self) -> _GenPoly:
        atom = self.parse_atom()
        if self.peek()[0] == "^":
            pos = self.next()[2]
            neg = False
            if self.peek()[0] == "-":
                self.next()
                neg = True
            tok = self.expect("num")
            e = -tok[1] if neg else tok[1]
            return _gp_pow(atom, e, pos)
        return atom

    def parse_atom(self) -> _GenPoly:
        tok = self.next()
        if tok[0] == "num":
            return _gp_const(tok[1])
        if tok[0] == "name":
            return _gp_mono(tok[1], 1)
        if tok[0] == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def _parse_gen(text: str) -> _GenPoly:
    parser = _Parser(_tokenize(text))
    gp = parser.parse_expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return gp


def _gp_vars(gp: _GenPoly) -> set[str]:
    return {v for key in gp for v, _ in key}


def _gp_min_exp(gp: _GenPoly) -> int:
    return min((e for key in gp for _, e in key), default=0)


def _to_intpoly(gp: _GenPoly, var: str) -> IntPoly:
    coeffs: dict[int, int] = {}
    for key, c in gp.items():
        if len(key) > 1 or (key and key[0][0] != var):
            raise UsageError(f"not a polynomial in {var!r}")
        e = key[0][1] if key else 0
        if e < 0:
            raise UsageError("negative exponent in a plain polynomial")
        coeffs[e] = coeffs.get(e, 0) + c
    out = [0] * (max(coeffs, default=-1) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return IntPoly(var, out)


def _to_laurent(gp: _GenPoly, var: str) -> LaurentPoly:
    terms: dict[int, int] = {}
    for key, c in gp.items():
        if len(key) > 1 or (key and key[0][0] != var):
            raise UsageError(f"not a Laurent polynomial in {var!r}")
        e = key[0][1] if key else 0
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(var, terms)


def _to_bipoly(gp: _GenPoly, variables: tuple[str, str]) -> BiPoly:
    va, vb = variables
    terms: dict[tuple[int, int], int] = {}
    for key, c in gp.items():
        ea = eb = 0
        for v, e in key:
            if v == va:
                ea = e
            elif v == vb:
                eb = e
            else:
                raise UsageError(f"unexpected variable {v!r} for {variables}")
        terms[(ea, eb)] = terms.get((ea, eb), 0) + c
    return BiPoly(terms, variables)


def _to_charpoly(gp: _GenPoly, zvar: str, xvar: str) -> CharPoly:
    by_z: dict[int, dict[int, int]] = {}
    for key, c in gp.items():
        ez = ex = 0
        for v, e in key:
            if v == zvar:
                ez = e
            elif v == xvar:
                ex = e
            else:
                raise UsageError(f"unexpected variable {v!r} for ({zvar},{xvar})")
        by_z.setdefault(ez, {})[ex] = by_z.setdefault(ez, {}).get(ex, 0) + c
    coeffs = []
    for ez in range(max(by_z, default=-1) + 1):
        row = by_z.get(ez, {})
        cs = [0] * (max(row, default=-1) + 1)
        for ex, c in row.items():
            cs[ex] = c
        coeffs.append(IntPoly(xvar, cs))
    return CharPoly.from_coeffs(coeffs, zvar, xvar)


def _to_shiftop(gp: _GenPoly, coeff_var: str) -> ShiftOp:
    cp = _to_charpoly(gp, "E", coeff_var)
    terms: dict[int, object] = {}
    for e, c in enumerate(cp.coeffs):
        if not c.is_zero:
            terms[e] = c.lc if c.is_constant else c
    return ShiftOp(terms)


def parse(text: str, kind: str = "auto", variables=None):
    """Parse canonical polynomial text.

    kind: "auto" | "intpoly" | "bipoly" | "laurent" | "charpoly" | "shiftop"
    | "ratfunc".  In auto mode the shape is inferred from the variables that
    occur: {x,s} -> BiPoly, {z,x} -> CharPoly, E -> ShiftOp, negative
    exponents -> LaurentPoly, otherwise IntPoly.
    """
    if kind == "ratfunc":
        parts = _split_top_level_slash(text)
        num = _to_intpoly(_parse_gen(parts[0]), variables or "x")
        if len(parts) == 1:
            return RatFunc(num)
        den = _to_intpoly(_parse_gen(parts[1]), variables or "x")
        return RatFunc(num, den)
    gp = _parse_gen(text)
    if kind == "intpoly":
        var = variables or (next(iter(_gp_vars(gp)), "x"))
        return _to_intpoly(gp, var)
    if kind == "laurent":
        var = variables or (next(iter(_gp_vars(gp)), "z"))
        return _to_laurent(gp, var)
    if kind == "bipoly":
        return _to_bipoly(gp, tuple(variables) if variables else ("x", "s"))
    if kind == "charpoly":
        zx = tuple(variables) if variables else ("z", "x")
        return _to_charpoly(gp, zx[0], zx[1])
    if kind == "shiftop":
        others = _gp_vars(gp) - {"E"}
        coeff_var = variables or (next(iter(others)) if others else "x")
        return _to_shiftop(gp, coeff_var)
    if kind != "auto":
        raise UsageError(f"unknown parse kind {kind!r}")
    vs = _gp_vars(gp)
    if _gp_min_exp(gp) < 0:
        if len(vs) != 1:
            raise UsageError("negative exponents need a single variable")
        return _to_laurent(gp, next(iter(vs)))
    if "E" in vs:
        others = vs - {"E"}
        return _to_shiftop(gp, next(iter(others)) if others else "x")
    if "s" in vs and vs <= {"x", "s"}:
        return _to_bipoly(gp, ("x", "s"))
    if vs == {"z", "x"}:
        return _to_charpoly(gp, "z", "x")
    if len(vs) <= 1:
        return _to_intpoly(gp, next(iter(vs), "x"))
    raise UsageError(f"cannot infer a polynomial type for variables {sorted(vs)}")


def _split_top_level_slash(text: str) -> list[str]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            return [text[:i], text[i + 1:]]
    return [text]


# ---------------------------------------------------------------------------
# JSON encoding
# ---------------------------------------------------------------------------


def to_json_dict(p) -> dict:
    """Encode as {"kind":..., "var":..., "terms":[[ [exponents...], "coef" ]]}."""
    if isinstance(p, IntPoly):
        terms = [[[e], str(c)] for e, c in sorted(p.terms(), reverse=True)]
        return {"kind": "intpoly", "var": p.var, "terms": terms}
    if isinstance(p, LaurentPoly):
        terms = [[[e], str(p.terms[e])] for e in sorted(p.terms, reverse=True)]
        return {"kind": "laurent", "var": p.var, "terms": terms}
    if isinstance(p, BiPoly):
        terms = [[[ea, eb], str(p.terms[(ea, eb)])]
                 for ea, eb in sorted(p.terms, reverse=True)]
        return {"kind": "bipoly", "var": list(p.vars), "terms": terms}
    if isinstance(p, CharPoly):
        flat = []
        for ez in range(len(p.coeffs) - 1, -1, -1):
            for ex, c in sorted(p.coeffs[ez].terms(), reverse=True):
                flat.append([[ez, ex], str(c)])
        return {"kind": "charpoly", "var": [p.zvar, p.xvar], "terms": flat}
    raise UsageError(f"cannot JSON-encode {type(p).__name__}")


def from_json_dict(d: dict):
    kind = d.get("kind")
    if kind == "intpoly":
        coeffs: dict[int, int] = {}
        for (e,), c in ((tuple(k), v) for k, v in d["terms"]):
            coeffs[e] = int(c)
        out = [0] * (max(coeffs, default=-1) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return IntPoly(d["var"], out)
    if kind == "laurent":
        return LaurentPoly(d["var"], {k[0]: int(c) for k, c in d["terms"]})
    if kind == "bipoly":
        return BiPoly({(k[0], k[1]): int(c) for k, c in d["terms"]},
                      tuple(d["var"]))
    if kind == "charpoly":
        zvar, xvar = d["var"]
        by_z: dict[int, dict[int, int]] = {}
        for (ez, ex), c in ((tuple(k), v) for k, v in d["terms"]):
            by_z.setdefault(ez, {})[ex] = int(c)
        coeffs = []
        for ez in range(max(by_z, default=-1) + 1):
            row = by_z.get(ez, {})
            cs = [0] * (max(row, default=-1) + 1)
            for ex, c in row.items():
                cs[ex] = c
            coeffs.append(IntPoly(xvar, cs))
        return CharPoly.from_coeffs(coeffs, zvar, xvar)
    raise UsageError(f"unknown JSON kind {kind!r}")
