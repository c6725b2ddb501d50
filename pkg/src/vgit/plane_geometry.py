"""Exact plane curves, points and SL3 actions over the rationals."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .weightspace import Monomial, X, Y, Z, as_fraction, fmt_rational, parse_rational

Poly = dict  # {(a, b, c): Fraction}


def _padd(p: Poly, q: Poly, c=1) -> Poly:
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, 0) + c * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a1, b1, c1), v1 in p.items():
        for (a2, b2, c2), v2 in q.items():
            k = (a1 + a2, b1 + b2, c1 + c2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _pdiff(p: Poly, var: int) -> Poly:
    out: Poly = {}
    for k, v in p.items():
        if k[var]:
            e = list(k)
            e[var] -= 1
            out[tuple(e)] = out.get(tuple(e), 0) + v * k[var]
    return {k: v for k, v in out.items() if v}


def _linear(row: Sequence[Fraction]) -> Poly:
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    return {e: Fraction(c) for e, c in zip(basis, row) if c}


@dataclass(frozen=True)
class CurvePoly:
    """Homogeneous polynomial of degree d; coefficients stored as a sorted tuple."""

    d: int
    coeffs: tuple  # ((Monomial, Fraction), ...), zero coefficients dropped

    def __post_init__(self):
        items = {}
        for m, q in (self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs):
            if not isinstance(m, Monomial):
                m = Monomial.parse(m) if isinstance(m, str) else Monomial(*m)
            if m.degree != self.d:
                raise ValueError(f"monomial {m} has degree {m.degree}, expected {self.d}")
            q = as_fraction(q)
            if q:
                items[m] = items.get(m, 0) + q
        object.__setattr__(self, "coeffs", tuple(sorted(((m, q) for m, q in items.items() if q), reverse=True)))

    @classmethod
    def from_terms(cls, terms: Mapping, d: int = None) -> "CurvePoly":
        ms = {(Monomial.parse(k) if isinstance(k, str) else k): v for k, v in terms.items()}
        if d is None:
            d = next(iter(ms)).degree
        return cls(d, tuple(ms.items()))

    @classmethod
    def _from_poly(cls, d: int, p: Poly) -> "CurvePoly":
        return cls(d, tuple((Monomial(*k), v) for k, v in p.items()))

    def _poly(self) -> Poly:
        return {m.exponents: q for m, q in self.coeffs}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, m) -> Fraction:
        if isinstance(m, str):
            m = Monomial.parse(m)
        return dict(self.coeffs).get(m, Fraction(0))

    def evaluate(self, p) -> Fraction:
        x, y, z = p.xyz if isinstance(p, ProjPoint) else p
        return sum((q * x ** m.a * y ** m.b * z ** m.c for m, q in self.coeffs), Fraction(0))

    def same_curve(self, other: "CurvePoly") -> bool:
        """Equal up to a nonzero scalar."""
        if self.d != other.d or len(self.coeffs) != len(other.coeffs) or self.is_zero or other.is_zero:
            return self.d == other.d and self.is_zero and other.is_zero
        ratio = other.coeffs[0][1] / self.coeffs[0][1]
        return all(m1 == m2 and q1 * ratio == q2 for (m1, q1), (m2, q2) in zip(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for m, q in self.coeffs:
            mono = "" if m.degree == 0 else str(m)
            mag = abs(q)
            body = mono if (mag == 1 and mono) else (fmt_rational(mag) + ("*" + mono if mono else ""))
            parts.append(("-" if q < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return s + "".join(f" {sg} {b}" for sg, b in parts[1:])

    def to_json(self) -> dict:
        return {"d": self.d, "coeffs": [{"m": list(m.exponents), "q": fmt_rational(q)} for m, q in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CurvePoly":
        d = int(data["d"])
        terms = []
        for t in data["coeffs"]:
            m = Monomial(*(int(e) for e in t["m"]))
            terms.append((m, parse_rational(str(t["q"]))))
        return cls(d, tuple(terms))


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^2 with rational homogeneous coordinates, compared up to scaling."""

    xyz: tuple

    def __post_init__(self):
        xyz = tuple(as_fraction(v) for v in self.xyz)
        if len(xyz) != 3 or all(v == 0 for v in xyz):
            raise ValueError("a projective point needs three coordinates, not all zero")
        object.__setattr__(self, "xyz", xyz)

    def normalized(self) -> tuple:
        lead = next(v for v in self.xyz if v != 0)
        return tuple(v / lead for v in self.xyz)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        a, b = self.xyz, other.xyz
        return all(a[i] * b[j] == a[j] * b[i] for i in range(3) for j in range(i + 1, 3))

    def __hash__(self) -> int:
        return hash(self.normalized())

    def __str__(self) -> str:
        return "(" + ":".join(fmt_rational(v) for v in self.normalized()) + ")"

    def to_json(self) -> dict:
        return {"xyz": [fmt_rational(v) for v in self.xyz]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ProjPoint":
        return cls(tuple(parse_rational(str(v)) for v in data["xyz"]))


def _det3(m) -> Fraction:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


@dataclass(frozen=True)
class Sl3Matrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(v) for v in r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("need a 3x3 matrix")
        if _det3(rows) != 1:
            raise ValueError(f"determinant {_det3(rows)} != 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls) -> "Sl3Matrix":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __matmul__(self, other: "Sl3Matrix") -> "Sl3Matrix":
        a, b = self.rows, other.rows
        return Sl3Matrix(tuple(tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)))

    def inverse(self) -> "Sl3Matrix":
        m = self.rows
        cof = [[(m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3]
                 - m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3]) for j in range(3)] for i in range(3)]
        return Sl3Matrix(tuple(tuple(r) for r in cof))

    def apply(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint(tuple(sum(a * v for a, v in zip(row, p.xyz)) for row in self.rows))


def _check_curve(f: CurvePoly):
    if f.is_zero:
        raise ValueError("the zero polynomial does not define a curve")


def incident(f: CurvePoly, p: ProjPoint) -> bool:
    _check_curve(f)
    return f.evaluate(p) == 0


def substitute(f: CurvePoly, h: Sl3Matrix) -> CurvePoly:
    """The polynomial v -> f(h v)."""
    lin = [_linear(row) for row in h.rows]
    out: Poly = {}
    for m, q in f.coeffs:
        term: Poly = {(0, 0, 0): q}
        for form, e in zip(lin, m.exponents):
            for _ in range(e):
                term = _pmul(term, form)
        out = _padd(out, term)
    return CurvePoly._from_poly(f.d, out)


def act(g: Sl3Matrix, f: CurvePoly, pts: Sequence[ProjPoint] = ()):
    """(g.f, [g.p]) with (g.f)(v) = f(g^-1 v)."""
    _check_curve(f)
    return substitute(f, g.inverse()), [g.apply(p) for p in pts]


def curve_support(f: CurvePoly) -> frozenset:
    _check_curve(f)
    return frozenset(m for m, _ in f.coeffs)


def point_support(p: ProjPoint) -> frozenset:
    return frozenset(m for m, v in zip((X, Y, Z), p.xyz) if v != 0)


@dataclass(frozen=True)
class OriginProbe:
    passes_through: bool
    jacobian_vanishes: bool
    tangent_cone: tuple  # coefficients of (y^2, yz, z^2) in f(1, y, z)

    @property
    def tangent_cone_kind(self) -> str:
        """'two_lines', 'double_line' or 'zero' (only meaningful at a singular point)."""
        a, b, c = self.tangent_cone
        if a == b == c == 0:
            return "zero"
        return "double_line" if b * b - 4 * a * c == 0 else "two_lines"


def origin_probe(f: CurvePoly) -> OriginProbe:
    """Local data of f at (1:0:0)."""
    _check_curve(f)
    d = f.d
    co = f.coefficient
    passes = co(Monomial(d, 0, 0)) == 0
    jac = passes and co(Monomial(d - 1, 1, 0)) == 0 and co(Monomial(d - 1, 0, 1)) == 0
    cone = (co(Monomial(d - 2, 2, 0)), co(Monomial(d - 2, 1, 1)), co(Monomial(d - 2, 0, 2))) if d >= 2 else (0, 0, 0)
    return OriginProbe(passes, jac, tuple(Fraction(v) for v in cone))


def hessian_det(f: CurvePoly) -> CurvePoly:
    """det of the matrix of second partials (no rescaling); may be the zero polynomial."""
    if f.d != 3:
        raise ValueError("hessian_det is implemented for cubics")
    _check_curve(f)
    p = f._poly()
    first = [_pdiff(p, i) for i in range(3)]
    H = [[_pdiff(first[i], j) for j in range(3)] for i in range(3)]
    det: Poly = {}
    for (i, j, k), sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                            ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        det = _padd(det, _pmul(_pmul(H[0][i], H[1][j]), H[2][k]), sign)
    return CurvePoly._from_poly(3, det)


def curve_from_str(text: str) -> CurvePoly:
    """Parse e.g. ``"y^2z - x^3"`` or ``"2*xyz + 1/3*y^3"``."""
    s = text.replace(" ", "").replace("-", "+-")
    terms = {}
    for tok in filter(None, s.split("+")):
        neg = tok.startswith("-")
        tok = tok.lstrip("-")
        if "*" in tok:
            c, m = tok.split("*", 1)
            coef = parse_rational(c)
        else:
            i = 0
            while i < len(tok) and (tok[i].isdigit() or tok[i] == "/"):
                i += 1
            coef = parse_rational(tok[:i]) if i else Fraction(1)
            m = tok[i:]
        mono = Monomial.parse(m)
        terms[mono] = terms.get(mono, 0) + (-coef if neg else coef)
    if not terms:
        raise ValueError(f"empty polynomial {text!r}")
    return CurvePoly(next(iter(terms)).degree, tuple(terms.items()))
