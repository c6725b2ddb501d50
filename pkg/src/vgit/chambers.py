"""Chambers of the wall arrangement on the gamma = 1 slice of the cubic ample cone.

Cells are open regions of the slice cut out by the deduplicated wall
hyperplanes; each is identified by its sign vector and found by flooding from
a start cell, one exact LP per (cell, hyperplane) facet test.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .errors import OutOfRange
from .cone_walls import Wall, active_walls, ample_cone, membership
from .weightspace import LinearForm, WeightVector, fmt_rational

DEFAULT_CAP = 4


def chamber_cap() -> int:
    raw = os.environ.get("VGIT_CHAMBER_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"VGIT_CHAMBER_CAP must be an integer, got {raw!r}") from exc


@dataclass(frozen=True)
class Slice:
    n: int
    polytope: tuple       # affine forms in w, read as form <= 0
    hyperplanes: tuple    # deduplicated affine forms (hyperplane_key orientation)
    walls: tuple          # active walls
    wall_index: tuple     # wall_index[k] = hyperplane index of walls[k]

    def values(self, w: Sequence[Fraction]) -> list:
        pt = [Fraction(1)] + list(w)
        return [h.evaluate(pt) for h in self.hyperplanes]

    def strictly_inside(self, w: Sequence[Fraction]) -> bool:
        pt = [Fraction(1)] + list(w)
        return all(f.evaluate(pt) < 0 for f in self.polytope)

    def walls_on(self, k: int) -> list:
        return [w for w, j in zip(self.walls, self.wall_index) if j == k]


def build_slice(n: int, cap: Optional[int] = None) -> Slice:
    cap = chamber_cap() if cap is None else cap
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise OutOfRange(f"n={n} exceeds the chamber cap {cap} (set VGIT_CHAMBER_CAP to raise it)")
    cone = ample_cone(n, 3)
    poly = tuple(f.primitive() for f in cone.slice_forms())
    walls = active_walls(n)
    keys, index = [], []
    for w in walls:
        k = w.hyperplane.at_gamma(1).hyperplane_key()
        if k not in keys:
            keys.append(k)
        index.append(keys.index(k))
    return Slice(n, poly, tuple(keys), tuple(walls), tuple(index))


def _rows(forms):
    return [list(f.w) for f in forms], [-f.const for f in forms]


def _cell_lp(sl: Slice, signs: Sequence[int], on: Optional[int] = None, x0=None):
    """Max-slack point strictly inside the polytope with the given signs (hyperplane `on` set to 0).

    x0, if given, must lie strictly inside the cell with these signs (ignoring `on`).
    """
    strict = list(sl.polytope)
    for k, (h, s) in enumerate(zip(sl.hyperplanes, signs)):
        if k != on:
            strict.append(h.scale(-s))
    A, b = _rows(strict)
    eqA, eqb = ([list(sl.hyperplanes[on].w)], [-sl.hyperplanes[on].const]) if on is not None else ([], [])
    if x0 is not None:
        return lp.max_slack_from(x0, A, b, eqA, eqb)
    # w >= 0 on the slice, so the default nonnegative variables suffice
    return lp.max_slack(A, b, A_eq=eqA, b_eq=eqb)


@dataclass(frozen=True)
class Chamber:
    id: int
    signs: tuple
    rep: tuple
    adjacent: tuple  # ((chamber id, hyperplane index), ...)

    def sign_string(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def rep_weights(self) -> WeightVector:
        return WeightVector(1, self.rep)


@dataclass(frozen=True)
class OnWall:
    labels: tuple
    hyperplanes: tuple


def _start_point(sl: Slice) -> tuple:
    t, x = lp.max_slack(*_rows(sl.polytope))
    if not t or t <= 0:
        raise ValueError("the slice has empty interior")
    base = list(x)
    direction = [Fraction(1, 7 + 4 * i) for i in range(sl.n)]
    delta = Fraction(1, 3)
    for _ in range(200):
        pt = [b + delta * d for b, d in zip(base, direction)]
        if sl.strictly_inside(pt) and all(v != 0 for v in sl.values(pt)):
            return tuple(pt)
        delta /= 3
    raise RuntimeError("could not find a generic start point")


def enumerate_chambers(sl: Slice) -> list:
    start = _start_point(sl)
    signs0 = tuple(1 if v > 0 else -1 for v in sl.values(start))
    _, rep0 = _cell_lp(sl, signs0, x0=start)
    order, reps = [signs0], [rep0]
    ids = {signs0: 0}
    adj = {0: []}
    queue = deque([signs0])
    while queue:
        signs = queue.popleft()
        cid = ids[signs]
        for k in range(len(sl.hyperplanes)):
            t, x = _cell_lp(sl, signs, on=k, x0=reps[cid])
            if t is None or t <= 0:
                continue
            nb = signs[:k] + (-signs[k],) + signs[k + 1:]
            if nb not in ids:
                # step off the facet point into the neighbour, then recentre there
                h = sl.hyperplanes[k]
                grad = list(h.w)
                norm2 = sum(g * g for g in grad)
                step = Fraction(t, 2) / norm2
                while True:
                    pt = [xi + nb[k] * step * g for xi, g in zip(x, grad)]
                    if sl.strictly_inside(pt) and _signs_match(sl, pt, nb):
                        break
                    step /= 2
                _, rep = _cell_lp(sl, nb, x0=pt)
                ids[nb] = len(order)
                order.append(nb)
                reps.append(rep)
                adj[ids[nb]] = []
                queue.append(nb)
            adj[cid].append((ids[nb], k))
    return [Chamber(cid, signs, tuple(reps[cid]), tuple(sorted(adj[cid]))) for cid, signs in enumerate(order)]


def _signs_match(sl: Slice, pt, signs) -> bool:
    return all(v * s > 0 for v, s in zip(sl.values(pt), signs))


def locate(sl: Slice, chambers: Sequence[Chamber], wv: WeightVector):
    if wv.n != sl.n:
        raise ValueError(f"expected {sl.n} weights, got {wv.n}")
    if wv.gamma != 1:
        raise OutOfRange("locate works on the gamma = 1 slice")
    if not sl.strictly_inside(wv.w):
        raise OutOfRange("weight vector is not in the interior of the ample cone")
    vals = sl.values(wv.w)
    zero = [k for k, v in enumerate(vals) if v == 0]
    if zero:
        labels = tuple(w.label for w in sl.walls if membership(w, wv) == "On")
        return OnWall(labels, tuple(zero))
    signs = tuple(1 if v > 0 else -1 for v in vals)
    for c in chambers:
        if c.signs == signs:
            return c
    raise RuntimeError("sign vector not found among the enumerated chambers")


def chambers_to_json(sl: Slice, chambers: Sequence[Chamber]) -> dict:
    return {
        "n": sl.n,
        "hyperplanes": [{"form": h.to_json(), "walls": [w.label for w in sl.walls_on(k)]}
                        for k, h in enumerate(sl.hyperplanes)],
        "chambers": [{"id": c.id, "signs": c.sign_string(), "rep": [fmt_rational(v) for v in c.rep],
                      "adjacent": [[i, k] for i, k in c.adjacent]} for c in chambers],
    }
