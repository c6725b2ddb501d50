"""Hilbert-Mumford function mu for support tuples, maximized exactly over r in [-1/2, 1].

For a tuple (curve support X; point supports P_1..P_n) and weights (gamma; w),

    mu(r) = sum_i w_i * min_{m in P_i} <m, r>  -  gamma * max_{m in X} <m, r>.

Each term is piecewise linear in r with kinks only where two pairings of the
same support cross, so the maximum over r sits on a finite candidate set that
does not depend on the weights.  Evaluating mu at every candidate gives linear
forms in (gamma; w) whose maximum is max_r mu.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .weightspace import (R_MAX, R_MIN, LinearForm, Monomial, WeightVector, pairing,
                          pairing_coeffs, prune_forms)


@dataclass(frozen=True)
class SupportTuple:
    curve: frozenset
    points: tuple
    label: str = field(default="", compare=False)

    def __post_init__(self):
        curve = frozenset(self.curve)
        points = tuple(frozenset(p) for p in self.points)
        if not curve:
            raise ValueError("empty curve support")
        degs = {m.degree for m in curve}
        if len(degs) != 1:
            raise ValueError(f"curve support mixes degrees {sorted(degs)}")
        for p in points:
            if not p:
                raise ValueError("empty point support")
            if any(m.degree != 1 for m in p):
                raise ValueError("point supports must consist of coordinate monomials x, y, z")
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def degree(self) -> int:
        return next(iter(self.curve)).degree

    def __str__(self) -> str:
        cs = ", ".join(str(m) for m in sorted(self.curve, reverse=True))
        ps = " ".join("{" + ",".join(str(m) for m in sorted(p, reverse=True)) + "}" for p in self.points)
        return f"({{{cs}}}; {ps})"


def _crossings(S: Iterable[Monomial]) -> set:
    out = set()
    for m1, m2 in combinations(sorted(S), 2):
        c1, s1 = pairing_coeffs(m1)
        c2, s2 = pairing_coeffs(m2)
        if s1 != s2:
            r = Fraction(c2 - c1, s1 - s2)
            if R_MIN < r < R_MAX:
                out.add(r)
    return out


def candidate_rs(st: SupportTuple) -> list:
    """Endpoints of [-1/2, 1] plus interior crossings of pairings within each support."""
    rs = {R_MIN, R_MAX} | _crossings(st.curve)
    for p in st.points:
        rs |= _crossings(p)
    return sorted(rs)


def mu_at(st: SupportTuple, wv: WeightVector, r) -> Fraction:
    if wv.n != st.n:
        raise ValueError(f"weight vector has {wv.n} points, tuple has {st.n}")
    total = sum((wi * min(pairing(m, r) for m in p) for wi, p in zip(wv.w, st.points)), Fraction(0))
    return total - wv.gamma * max(pairing(m, r) for m in st.curve)


def mu_form_at(st: SupportTuple, r) -> LinearForm:
    """mu(r) as a linear form in (gamma; w)."""
    return LinearForm(-max(pairing(m, r) for m in st.curve),
                      tuple(min(pairing(m, r) for m in p) for p in st.points))


@dataclass(frozen=True)
class MuPiece:
    """On lo <= r <= hi, mu(r) = const + r * slope."""

    lo: Fraction
    hi: Fraction
    const: LinearForm
    slope: LinearForm


def mu_profile(st: SupportTuple) -> list:
    rs = candidate_rs(st)
    pieces = []
    for lo, hi in zip(rs, rs[1:]):
        f_lo, f_hi = mu_form_at(st, lo), mu_form_at(st, hi)
        slope = (f_hi - f_lo).scale(1 / (hi - lo))
        pieces.append(MuPiece(lo, hi, f_lo - slope.scale(lo), slope))
    return pieces


@dataclass(frozen=True)
class MuMaximum:
    """Maximum value of mu over r and the closed interval of maximizers."""

    value: Fraction
    argmax_lo: Fraction
    argmax_hi: Fraction

    def attains(self, r) -> bool:
        return self.argmax_lo <= r <= self.argmax_hi


def max_mu_over_r(st: SupportTuple, wv: WeightVector) -> MuMaximum:
    vals = [(r, mu_at(st, wv, r)) for r in candidate_rs(st)]
    best = max(v for _, v in vals)
    hits = [r for r, v in vals if v == best]
    # mu is concave for nonnegative weights, so the maximizers form an interval
    return MuMaximum(best, min(hits), max(hits))


@dataclass(frozen=True)
class Witness:
    form: LinearForm
    tuple_index: int
    r: Fraction


@dataclass(frozen=True)
class StabilityRegion:
    """Weights with every form < 0 are stable; the region is the chamber of stability."""

    forms: tuple
    witnesses: tuple = ()

    def values(self, wv: WeightVector) -> list:
        return [f.evaluate(wv) for f in self.forms]

    def contains(self, wv: WeightVector) -> bool:
        return all(v < 0 for v in self.values(wv))


def candidate_forms(tuples: Sequence[SupportTuple]) -> list:
    out = []
    for k, st in enumerate(tuples):
        for r in candidate_rs(st):
            out.append(Witness(mu_form_at(st, r), k, r))
    return out


def region_from_tuples(tuples: Sequence[SupportTuple], prune: bool = True) -> StabilityRegion:
    tuples = list(tuples)
    if not tuples:
        raise ValueError("no support tuples")
    ns = {st.n for st in tuples}
    if len(ns) != 1:
        raise ValueError(f"tuples disagree on the number of points: {sorted(ns)}")
    wit = candidate_forms(tuples)
    if prune:
        forms = prune_forms(w.form for w in wit)
    else:
        seen = {}
        for w in wit:
            seen.setdefault(w.form.primitive(), w.form.primitive())
        forms = sorted(seen.values(), key=LinearForm.sort_key)
    return StabilityRegion(tuple(forms), tuple(wit))


class Verdict(str, Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"

    def __str__(self) -> str:
        return self.value


def verdict_from_values(values: Iterable[Fraction]) -> Verdict:
    values = list(values)
    if any(v > 0 for v in values):
        return Verdict.UNSTABLE
    if any(v == 0 for v in values):
        return Verdict.STRICTLY_SEMISTABLE
    return Verdict.STABLE


def verdict(tuples: Sequence[SupportTuple], wv: WeightVector,
            region: Optional[StabilityRegion] = None) -> Verdict:
    if region is None:
        # one-off query: the maxima of mu decide directly, no pruning needed
        return verdict_from_values(max_mu_over_r(st, wv).value for st in tuples)
    return verdict_from_values(region.values(wv))
