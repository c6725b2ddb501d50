"""Small exact polyhedral utilities for H-descriptions A x <= b."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from . import lp


def solve_square(A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Gaussian elimination; None if singular."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[col])]
    return tuple(M[r][-1] for r in range(n))


def vertices(A: Sequence[Sequence], b: Sequence) -> list:
    """All vertices of {x : A x <= b} by brute force over square subsystems."""
    dim = len(A[0])
    found = set()
    for idx in combinations(range(len(A)), dim):
        x = solve_square([A[i] for i in idx], [b[i] for i in idx])
        if x is None:
            continue
        if all(sum(Fraction(a) * xi for a, xi in zip(row, x)) <= bi for row, bi in zip(A, b)):
            found.add(x)
    return sorted(found)


def _free(dim, free):
    return range(dim) if free is None else free


def is_redundant(A: Sequence[Sequence], b: Sequence, k: int, free=None) -> bool:
    """True if row k is implied by the other rows (variables free unless ``free`` says otherwise)."""
    others_A = [row for i, row in enumerate(A) if i != k]
    others_b = [v for i, v in enumerate(b) if i != k]
    res = lp.maximize(list(A[k]), others_A, others_b, free=_free(len(A[k]), free))
    if res.status == lp.INFEASIBLE:
        return True
    if res.status == lp.UNBOUNDED:
        return False
    return res.value <= Fraction(b[k])


def implies(A: Sequence[Sequence], b: Sequence, f: Sequence, f0, A_eq=(), b_eq=(), free=None) -> bool:
    """True if f.x <= f0 holds on {A x <= b, A_eq x = b_eq} (vacuously if empty)."""
    res = lp.maximize(list(f), A, b, A_eq, b_eq, _free(len(f), free))
    if res.status == lp.INFEASIBLE:
        return True
    if res.status == lp.UNBOUNDED:
        return False
    return res.value <= Fraction(f0)
