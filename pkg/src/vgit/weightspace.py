"""Monomials, the one-parameter pairing, the Mukai order and linear forms in (gamma; w).

All arithmetic is exact (``fractions.Fraction``).  Weight indices are 1-based,
so the form ``w1 - 1/2*w2`` has ``w == (1, -1/2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]

R_MIN = Fraction(-1, 2)
R_MAX = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_MONO_RE = re.compile(r"([xyz])(?:\^?(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    if not isinstance(text, str):
        raise ValueError(f"expected a string rational, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not an exact rational of the form p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def fmt_rational(q: Rational) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_fraction(q) -> Fraction:
    if isinstance(q, bool) or isinstance(q, float):
        raise TypeError(f"inexact value {q!r}; use int, Fraction or a 'p/q' string")
    if isinstance(q, str):
        return parse_rational(q)
    return Fraction(q)


@dataclass(frozen=True, order=True)
class Monomial:
    """x^a y^b z^c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"negative exponent in {self}")

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse strings like ``"x^2y"``, ``"xz2"`` or ``"1"``."""
        s = text.replace("*", "").replace(" ", "")
        if s == "1":
            return cls(0, 0, 0)
        exps = {"x": 0, "y": 0, "z": 0}
        pos = 0
        for m in _MONO_RE.finditer(s):
            if m.start() != pos:
                break
            exps[m.group(1)] += int(m.group(2) or 1)
            pos = m.end()
        if pos != len(s) or not s:
            raise ValueError(f"cannot parse monomial {text!r}")
        return cls(exps["x"], exps["y"], exps["z"])

    def __str__(self) -> str:
        parts = []
        for var, e in zip("xyz", self.exponents):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "".join(parts) or "1"


X = Monomial(1, 0, 0)
Y = Monomial(0, 1, 0)
Z = Monomial(0, 0, 1)


def monomials(text: str) -> frozenset:
    """``monomials("xz^2, y^2z")`` -> frozenset of Monomials."""
    return frozenset(Monomial.parse(t) for t in text.split(",") if t.strip())


def coords(letters: str) -> frozenset:
    """Point support from coordinate letters, e.g. ``coords("xz")``."""
    table = {"x": X, "y": Y, "z": Z}
    try:
        return frozenset(table[ch] for ch in letters)
    except KeyError as exc:
        raise ValueError(f"bad coordinate letters {letters!r}") from exc


def all_monomials(d: int) -> list:
    return [Monomial(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


@dataclass(frozen=True)
class NormalizedSubgroup:
    """The diagonal subgroup diag(t, t^r, t^(-1-r)) for r in [-1/2, 1]."""

    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", as_fraction(self.r))
        if not (R_MIN <= self.r <= R_MAX):
            raise ValueError(f"r={self.r} outside [-1/2, 1]")

    @property
    def weights(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(1), self.r, -1 - self.r)


def _r_value(r) -> Fraction:
    if isinstance(r, NormalizedSubgroup):
        return r.r
    r = as_fraction(r)
    if not (R_MIN <= r <= R_MAX):
        raise ValueError(f"r={r} outside [-1/2, 1]")
    return r


def pairing_coeffs(m: Monomial) -> tuple[int, int]:
    """(constant, slope) with pairing(m, r) = constant + slope * r."""
    return (m.a - m.c, m.b - m.c)


def pairing(m: Monomial, r) -> Fraction:
    r = _r_value(r)
    const, slope = pairing_coeffs(m)
    return const + slope * r


def mukai_leq(m1: Monomial, m2: Monomial) -> bool:
    """True when m1 <= m2 in the Mukai order (same degree required)."""
    if m1.degree != m2.degree:
        raise ValueError(f"degree mismatch: {m1} vs {m2}")
    return m2.a >= m1.a and m2.a + m2.b >= m1.a + m1.b


def maximal_elements(S: Iterable[Monomial]) -> frozenset:
    S = frozenset(S)
    return frozenset(m for m in S if not any(o != m and mukai_leq(m, o) for o in S))


def minimal_elements(S: Iterable[Monomial]) -> frozenset:
    S = frozenset(S)
    return frozenset(m for m in S if not any(o != m and mukai_leq(o, m) for o in S))


@dataclass(frozen=True)
class WeightVector:
    """Linearization (gamma; w_1, ..., w_n) with nonnegative rational entries."""

    gamma: Fraction
    w: tuple

    def __post_init__(self):
        g = as_fraction(self.gamma)
        w = tuple(as_fraction(x) for x in self.w)
        if g < 0 or any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def total(self) -> Fraction:
        return sum(self.w, Fraction(0))

    def coords(self) -> tuple:
        return (self.gamma,) + self.w

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """``"1,1/2,1"`` -> gamma=1, w=(1/2, 1)."""
        vals = [parse_rational(t) for t in text.split(",")]
        if not vals:
            raise ValueError("empty weight list")
        return cls(vals[0], tuple(vals[1:]))

    def __str__(self) -> str:
        return "(" + fmt_rational(self.gamma) + "; " + ", ".join(fmt_rational(x) for x in self.w) + ")"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class LinearForm:
    """gamma_coeff*gamma + sum_i w[i]*w_i + const.

    Stability inequalities use the convention ``form <= 0``.  The constant is
    zero for forms on the full cone; it becomes nonzero on the gamma = 1 slice.
    """

    gamma: Fraction
    w: tuple
    const: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        object.__setattr__(self, "w", tuple(Fraction(x) for x in self.w))
        object.__setattr__(self, "const", Fraction(self.const))

    # constructors
    @classmethod
    def zero(cls, n: int) -> "LinearForm":
        return cls(0, (0,) * n)

    @classmethod
    def of_gamma(cls, n: int, c: Rational = 1) -> "LinearForm":
        return cls(c, (0,) * n)

    @classmethod
    def var(cls, n: int, i: int, c: Rational = 1) -> "LinearForm":
        if not 1 <= i <= n:
            raise IndexError(f"weight index {i} outside 1..{n}")
        w = [0] * n
        w[i - 1] = c
        return cls(0, tuple(w))

    @classmethod
    def sum_of(cls, n: int, indices: Iterable[int], c: Rational = 1) -> "LinearForm":
        w = [Fraction(0)] * n
        for i in indices:
            if not 1 <= i <= n:
                raise IndexError(f"weight index {i} outside 1..{n}")
            w[i - 1] += c
        return cls(0, tuple(w))

    @classmethod
    def constant(cls, n: int, c: Rational) -> "LinearForm":
        return cls(0, (0,) * n, c)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def coeffs(self) -> tuple:
        return (self.gamma,) + self.w

    def _check(self, other: "LinearForm"):
        if self.n != other.n:
            raise ValueError(f"form size mismatch {self.n} vs {other.n}")

    def __add__(self, other: "LinearForm") -> "LinearForm":
        self._check(other)
        return LinearForm(self.gamma + other.gamma, tuple(a + b for a, b in zip(self.w, other.w)),
                          self.const + other.const)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __neg__(self) -> "LinearForm":
        return self.scale(-1)

    def scale(self, c: Rational) -> "LinearForm":
        c = Fraction(c)
        return LinearForm(c * self.gamma, tuple(c * a for a in self.w), c * self.const)

    def __mul__(self, c: Rational) -> "LinearForm":
        return self.scale(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.gamma == 0 and self.const == 0 and all(a == 0 for a in self.w)

    def evaluate(self, wv: Union[WeightVector, Sequence]) -> Fraction:
        if isinstance(wv, WeightVector):
            gamma, w = wv.gamma, wv.w
        else:
            gamma, w = Fraction(wv[0]), tuple(wv[1:])
        if len(w) != self.n:
            raise ValueError(f"weight vector has {len(w)} entries, form expects {self.n}")
        return self.gamma * gamma + sum((a * b for a, b in zip(self.w, w)), Fraction(0)) + self.const

    def at_gamma(self, value: Rational = 1) -> "LinearForm":
        """Substitute gamma = value, folding the gamma term into the constant."""
        return LinearForm(0, self.w, self.const + self.gamma * Fraction(value))

    def primitive(self) -> "LinearForm":
        """Positive rescaling to coprime integer coefficients (orientation kept)."""
        vals = (self.gamma,) + self.w + (self.const,)
        den = reduce(_lcm, (v.denominator for v in vals), 1)
        ints = [int(v * den) for v in vals]
        g = reduce(gcd, ints, 0)
        if g == 0:
            return self
        return LinearForm(Fraction(ints[0], g), tuple(Fraction(v, g) for v in ints[1:-1]), Fraction(ints[-1], g))

    def hyperplane_key(self) -> "LinearForm":
        """Primitive form with its first nonzero coefficient made positive."""
        p = self.primitive()
        for v in (p.gamma,) + p.w + (p.const,):
            if v != 0:
                return p if v > 0 else -p
        return p

    def same_ray(self, other: "LinearForm") -> bool:
        """Equal up to a positive rational factor."""
        return self.primitive() == other.primitive()

    def same_hyperplane(self, other: "LinearForm") -> bool:
        return self.hyperplane_key() == other.hyperplane_key()

    def sort_key(self) -> tuple:
        return self.coeffs + (self.const,)

    def terms(self) -> list:
        out = []
        for i, a in enumerate(self.w, start=1):
            if a != 0:
                out.append((f"w{i}", a))
        if self.gamma != 0:
            out.append(("gamma", self.gamma))
        if self.const != 0:
            out.append(("1", self.const))
        return out

    def __str__(self) -> str:
        pieces = []
        for name, a in self.terms():
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if name == "1":
                body = fmt_rational(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{fmt_rational(mag)}*{name}"
            pieces.append((sign, body))
        if not pieces:
            return "0"
        s = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> dict:
        return {name: fmt_rational(a) for name, a in self.terms()}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, str]) -> "LinearForm":
        w = [Fraction(0)] * n
        gamma = const = Fraction(0)
        for key, val in data.items():
            q = parse_rational(val)
            if key == "gamma":
                gamma = q
            elif key == "1":
                const = q
            elif key.startswith("w") and key[1:].isdigit() and 1 <= int(key[1:]) <= n:
                w[int(key[1:]) - 1] = q
            else:
                raise ValueError(f"unknown coefficient name {key!r}")
        return cls(gamma, tuple(w), const)


def dominated_by(f: LinearForm, g: LinearForm) -> bool:
    """True if c*g - f has all coefficients >= 0 for some c > 0.

    Then f <= c*g on the nonnegative orthant, so g < 0 forces f < 0 and
    g <= 0 forces f <= 0.
    """
    lo, hi = None, None
    for fk, gk in zip(f.coeffs + (f.const,), g.coeffs + (g.const,)):
        if gk > 0:
            b = fk / gk
            lo = b if lo is None else max(lo, b)
        elif gk < 0:
            b = fk / gk
            hi = b if hi is None else min(hi, b)
        elif fk > 0:
            return False
    if hi is not None and hi <= 0:
        return False
    return lo is None or hi is None or lo <= hi


def prune_forms(forms: Iterable[LinearForm]) -> list:
    """Deduplicate up to positive scaling and drop dominated forms.

    Forms are visited in a fixed order and a form is removed only when some
    other form that is still present dominates it, so mutually dominating
    pairs keep one member.
    """
    uniq = {}
    for f in forms:
        uniq.setdefault(f.primitive(), f)
    keys = sorted(uniq, key=LinearForm.sort_key)
    alive = set(range(len(keys)))
    for i in range(len(keys)):
        if any(j != i and j in alive and dominated_by(keys[i], keys[j]) for j in range(len(keys))):
            alive.discard(i)
    return [keys[i] for i in sorted(alive)]
