"""Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

Variables are nonnegative unless listed in ``free``; free variables are split
into a difference of two nonnegative ones.  The tableau uses gmpy2 rationals
for speed; inputs and outputs are ``fractions.Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from gmpy2 import mpq

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _pivot(rows, obj, pr, pc):
    prow = rows[pr]
    inv = 1 / prow[pc]
    if inv != 1:
        prow[:] = [v * inv for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(rows):
        if i != pr:
            f = row[pc]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
    f = obj[pc]
    if f:
        for j in nz:
            obj[j] -= f * prow[j]


def _run(rows, basis, obj, allowed):
    while True:
        enter = next((j for j, ok in enumerate(allowed) if ok and obj[j] > 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(rows, obj, best[1], enter)
        basis[best[1]] = enter


def _q(v) -> mpq:
    v = Fraction(v)
    return mpq(v.numerator, v.denominator)


def _frac(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def _objective_row(c, rows, basis, width):
    obj = [_q(v) for v in c] + [mpq(0)] * (width - len(c))
    for i, b in enumerate(basis):
        cb = obj[b]
        if cb:
            obj = [a - cb * v for a, v in zip(obj, rows[i])]
    return obj


def maximize(c: Sequence, A_ub: Sequence = (), b_ub: Sequence = (), A_eq: Sequence = (),
             b_eq: Sequence = (), free: Sequence[int] = ()) -> LPResult:
    """maximize c.x subject to A_ub x <= b_ub, A_eq x = b_eq, x_j >= 0 for j not in free."""
    nv = len(c)
    free = sorted(set(free))
    # column layout: original vars, negative parts of free vars, slacks, artificials
    neg_col = {j: nv + k for k, j in enumerate(free)}
    ncore = nv + len(free)
    m_ub, m_eq = len(A_ub), len(A_eq)
    nslack = m_ub
    width = ncore + nslack + m_ub + m_eq  # artificials allocated per row (not all used)
    rows, basis = [], []
    art_cols = []
    col_art = ncore + nslack
    for k, (arow, b) in enumerate(list(zip(A_ub, b_ub)) + list(zip(A_eq, b_eq))):
        if len(arow) != nv:
            raise ValueError("constraint width mismatch")
        row = [mpq(0)] * (width + 1)
        for j, a in enumerate(arow):
            a = _q(a)
            row[j] = a
            if j in neg_col:
                row[neg_col[j]] = -a
        is_ub = k < m_ub
        if is_ub:
            row[ncore + k] = mpq(1)
        row[-1] = _q(b)
        if row[-1] < 0:
            row = [-v for v in row]
        if is_ub and row[ncore + k] == 1:
            basis.append(ncore + k)
        else:
            row[col_art] = mpq(1)
            basis.append(col_art)
            art_cols.append(col_art)
            col_art += 1
        rows.append(row)
    width = col_art
    rows = [r[:width] + [r[-1]] for r in rows]
    art = set(art_cols)

    if art:
        c1 = [-1 if j in art else 0 for j in range(width)]
        obj = _objective_row(c1, rows, basis, width + 1)
        _run(rows, basis, obj, [True] * width)
        if -obj[-1] != 0:
            return LPResult(INFEASIBLE)
        # drive artificials out of the basis or drop redundant rows
        i = 0
        while i < len(rows):
            if basis[i] in art:
                pc = next((j for j in range(width) if j not in art and rows[i][j] != 0), None)
                if pc is None:
                    del rows[i]
                    del basis[i]
                    continue
                _pivot(rows, obj, i, pc)
                basis[i] = pc
            i += 1

    allowed = [j not in art for j in range(width)]
    cfull = [Fraction(v) for v in c] + [-Fraction(c[j]) for j in free]
    obj = _objective_row(cfull, rows, basis, width + 1)
    status = _run(rows, basis, obj, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    vals = [Fraction(0)] * width
    for i, b in enumerate(basis):
        vals[b] = _frac(rows[i][-1])
    x = [vals[j] - (vals[neg_col[j]] if j in neg_col else 0) for j in range(nv)]
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, tuple(x), value)


def minimize(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()) -> LPResult:
    res = maximize([-Fraction(v) for v in c], A_ub, b_ub, A_eq, b_eq, free)
    if res.ok:
        return LPResult(OPTIMAL, res.x, -res.value)
    return res


def max_slack(strict_A: Sequence, strict_b: Sequence, A_ub: Sequence = (), b_ub: Sequence = (),
              A_eq: Sequence = (), b_eq: Sequence = (), free: Sequence[int] = (),
              cap: Fraction = Fraction(1)):
    """Maximize t subject to strict_A x + t <= strict_b, the other constraints and 0 <= t <= cap.

    Returns (t, x); t > 0 certifies a point satisfying every strict row strictly.
    Returns (None, None) if even t = 0 is infeasible.
    """
    nv = len(strict_A[0]) if strict_A else (len(A_ub[0]) if A_ub else len(A_eq[0]))
    c = [0] * nv + [1]
    Aub = [list(r) + [1] for r in strict_A] + [list(r) + [0] for r in A_ub] + [[0] * nv + [1]]
    bub = list(strict_b) + list(b_ub) + [cap]
    Aeq = [list(r) + [0] for r in A_eq]
    res = maximize(c, Aub, bub, Aeq, list(b_eq), free)
    if not res.ok:
        return None, None
    return res.x[-1], res.x[:-1]


def max_slack_from(x0: Sequence, strict_A: Sequence, strict_b: Sequence, A_eq: Sequence = (),
                   b_eq: Sequence = (), cap: Fraction = Fraction(1)):
    """max_slack over free variables, warm-started at a point x0 that satisfies every strict row.

    Substituting x = x0 + y makes every right-hand side positive, so the slack
    basis is feasible and only equality rows need artificials.
    """
    x0 = [Fraction(v) for v in x0]
    nv = len(x0)

    def shift(A, b):
        return [Fraction(bi) - sum(Fraction(a) * xi for a, xi in zip(row, x0)) for row, bi in zip(A, b)]

    sb = shift(strict_A, strict_b)
    if any(v <= 0 for v in sb):
        raise ValueError("x0 does not satisfy the strict rows strictly")
    t, y = max_slack(strict_A, sb, A_eq=A_eq, b_eq=shift(A_eq, b_eq), free=range(nv), cap=cap)
    if t is None:
        return None, None
    return t, tuple(a + b for a, b in zip(x0, y))
