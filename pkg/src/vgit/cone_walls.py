"""The ample cone of (P^2 x (P^2)^n) for degree-d curves and its VGIT walls for cubics.

Coordinates are (gamma; w_1..w_n), 1-based point indices.  Every inequality is
a LinearForm read as ``form <= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import lp
from .weightspace import LinearForm, WeightVector


class Membership(str, Enum):
    INSIDE = "Inside"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AmpleCone:
    n: int
    d: int
    forms: tuple
    labels: tuple

    def membership(self, wv: WeightVector) -> Membership:
        if wv.n != self.n:
            raise ValueError(f"expected {self.n} weights, got {wv.n}")
        vals = [f.evaluate(wv) for f in self.forms]
        if any(v > 0 for v in vals):
            return Membership.OUTSIDE
        if any(v == 0 for v in vals):
            return Membership.BOUNDARY
        return Membership.INSIDE

    def slice_forms(self) -> list:
        """Non-constant forms of the gamma = 1 slice, as affine forms in w."""
        out = []
        for f in self.forms:
            g = f.at_gamma(1)
            if any(a != 0 for a in g.w):
                out.append(g)
        return out


def ample_cone(n: int, d: int) -> AmpleCone:
    if d < 3:
        raise ValueError("curve degree must be at least 3")
    if n < 0:
        raise ValueError("n must be nonnegative")
    W = LinearForm.sum_of(n, range(1, n + 1))
    G = LinearForm.of_gamma(n)
    forms, labels = [], []
    for i in range(1, n + 1):
        forms.append(LinearForm.var(n, i, 3) - W - G.scale(2 * d - 3))
        labels.append(f"A{i}")
    for i in range(1, n + 1):
        forms.append(LinearForm.var(n, i, 2) - W - G.scale(d - 2))
        labels.append(f"B{i}")
    for i, j in combinations(range(1, n + 1), 2):
        forms.append(LinearForm.sum_of(n, (i, j), 3) - W.scale(2) - G.scale(d))
        labels.append(f"C{i}{j}" if n < 10 else f"C{i},{j}")
    for i in range(1, n + 1):
        forms.append(LinearForm.var(n, i, -1))
        labels.append(f"N{i}")
    forms.append(-G)
    labels.append("Ngamma")
    return AmpleCone(n, d, tuple(forms), tuple(labels))


class WallFamily(str, Enum):
    THREE_A1 = "3A1"
    A2 = "A2"
    A3 = "A3"
    D4 = "D4"

    def __str__(self) -> str:
        return self.value


def _fmt_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(s)) + "}"


@dataclass(frozen=True)
class Wall:
    family: WallFamily
    n: int
    I: frozenset
    J: frozenset = frozenset()
    hyperplane: LinearForm = None
    boundary: tuple = ()          # forms <= 0 (every family except D4)
    block_triples: tuple = ()     # D4: alternatives ((B1, B2, B3), ...)

    @property
    def label(self) -> str:
        if self.family is WallFamily.A3:
            return f"W(A3,{_fmt_set(self.I)},{_fmt_set(self.J)})"
        return f"W({self.family.value},{_fmt_set(self.I)})"

    def __str__(self) -> str:
        return self.label

    def boundary_options(self) -> list:
        """Alternatives of boundary constraints; the wall segment is the union over them."""
        if self.family is WallFamily.D4:
            return [d4_boundary(self.n, self.I, t) for t in self.block_triples]
        return [list(self.boundary)]

    def to_json(self, active: Optional[bool] = None) -> dict:
        rec = {
            "family": self.family.value,
            "I": sorted(self.I),
            "J": sorted(self.J),
            "hyperplane": self.hyperplane.to_json(),
            "boundary": [f.to_json() for f in self.boundary],
        }
        if self.family is WallFamily.D4:
            rec["block_triples"] = [[sorted(b) for b in t] for t in self.block_triples]
        if active is not None:
            rec["active"] = active
        return rec


def d4_boundary(n: int, I: frozenset, blocks) -> list:
    G = LinearForm.of_gamma(n)
    base = LinearForm.sum_of(n, I) + G.scale(2)
    return [LinearForm.sum_of(n, B) - base for B in blocks]


def set_partitions_3(items: Sequence[int]) -> list:
    """Partitions of items into three unlabeled, possibly empty blocks."""
    items = sorted(items)
    seen = set()
    out = []
    for labels in product(range(3), repeat=len(items)):
        blocks = [frozenset(i for i, l in zip(items, labels) if l == k) for k in range(3)]
        key = tuple(sorted(blocks, key=lambda b: (-len(b), sorted(b))))
        if key not in seen:
            seen.add(key)
            out.append(key)
    out.sort(key=lambda t: [sorted(b) for b in t])
    return out


def _subsets(n: int) -> list:
    idx = range(1, n + 1)
    out = []
    for k in range(n + 1):
        out.extend(frozenset(c) for c in combinations(idx, k))
    return out


def make_wall(family, n: int, I=(), J=()) -> Wall:
    family = WallFamily(family)
    I, J = frozenset(I), frozenset(J)
    full = frozenset(range(1, n + 1))
    if not I <= full or not J <= full or I & J:
        raise ValueError("index sets must be disjoint subsets of 1..n")
    G = LinearForm.of_gamma(n)
    SI = LinearForm.sum_of(n, I)
    rest = full - I
    SR = LinearForm.sum_of(n, rest)
    if family is WallFamily.THREE_A1:
        if not I or I == full:
            raise ValueError("W(3A1, I) needs a nonempty proper subset I")
        h = SI.scale(2) - SR
        bd = tuple(LinearForm.var(n, m, 2) - SR - G.scale(2) for m in sorted(rest))
        return Wall(family, n, I, frozenset(), h, bd)
    if family is WallFamily.A2:
        if I == full:
            raise ValueError("W(A2, I) needs a proper subset I")
        h = SI.scale(5) - SR.scale(4) + G.scale(3)
        return Wall(family, n, I, frozenset(), h, (SI.scale(2) - SR,))
    if family is WallFamily.A3:
        SJ = LinearForm.sum_of(n, J)
        SK = LinearForm.sum_of(n, full - I - J)
        h = SI - SK + G
        bd = (SI - G - SJ, SJ - SI - G.scale(2))
        return Wall(family, n, I, J, h, bd)
    if len(I) > n - 3:
        raise ValueError("W(D4, I) needs |I| <= n - 3")
    h = SI.scale(2) - SR + G.scale(3)
    return Wall(family, n, I, frozenset(), h, (), tuple(set_partitions_3(rest)))


def enumerate_walls(n: int) -> list:
    if n < 1:
        raise ValueError("walls are enumerated for n >= 1")
    full = frozenset(range(1, n + 1))
    subs = _subsets(n)
    walls = [make_wall("3A1", n, I) for I in subs if I and I != full]
    walls += [make_wall("A2", n, I) for I in subs if I != full]
    for I in subs:
        for J in subs:
            if not I & J:
                walls.append(make_wall("A3", n, I, J))
    walls += [make_wall("D4", n, I) for I in subs if len(I) <= n - 3]
    return walls


def expected_wall_count(n: int) -> int:
    from math import comb
    return (2 ** n - 2) + (2 ** n - 1) + 3 ** n + sum(comb(n, k) for k in range(0, max(n - 2, 0)))


def _rows(forms: Sequence[LinearForm]):
    """Forms with const = 0 as rows over (gamma, w)."""
    return [list(f.coeffs) for f in forms], [-f.const for f in forms]


def segment_point(wall: Wall, cone: AmpleCone, boundary: Sequence[LinearForm], strict_boundary: bool = False):
    """Max-slack point of {h = 0, boundary <= 0, cone < 0} with gamma fixed to 1.

    Returns (t, point) with t > 0 iff the segment meets the interior of the cone.
    """
    n = wall.n
    strict = list(cone.forms) + (list(boundary) if strict_boundary else [])
    weak = [] if strict_boundary else list(boundary)
    sA, sb = _rows(strict)
    wA, wb = _rows(weak)
    eqA = [list(wall.hyperplane.coeffs), [1] + [0] * n]
    eqb = [-wall.hyperplane.const, 1]
    t, x = lp.max_slack(sA, sb, wA, wb, eqA, eqb, free=range(n + 1))
    return t, x


def wall_activity(wall: Wall, cone: AmpleCone) -> bool:
    if cone.n != wall.n or cone.d != 3:
        raise ValueError("wall activity is defined against the cubic ample cone of the same n")
    for bd in wall.boundary_options():
        t, _ = segment_point(wall, cone, bd)
        if t is not None and t > 0:
            return True
    return False


def wall_representative(wall: Wall, cone: AmpleCone) -> Optional[WeightVector]:
    """A point in the relative interior of the wall segment (boundary strict), or None."""
    best = None
    for bd in wall.boundary_options():
        t, x = segment_point(wall, cone, bd, strict_boundary=True)
        if t is not None and t > 0 and (best is None or t > best[0]):
            best = (t, x)
    if best is None:
        return None
    return WeightVector(best[1][0], tuple(best[1][1:]))


def membership(wall: Wall, wv: WeightVector) -> str:
    if wall.hyperplane.evaluate(wv) != 0:
        return "Off"
    for bd in wall.boundary_options():
        if all(f.evaluate(wv) <= 0 for f in bd):
            return "On"
    return "Off"


def active_walls(n: int) -> list:
    cone = ample_cone(n, 3)
    return [w for w in enumerate_walls(n) if wall_activity(w, cone)]


def parse_wall_label(label: str, n: int) -> Wall:
    """Inverse of Wall.label, e.g. ``W(A3,{},{1})``."""
    s = label.strip()
    if not (s.startswith("W(") and s.endswith(")")):
        raise ValueError(f"bad wall label {label!r}")
    body = s[2:-1]
    fam, _, rest = body.partition(",")
    sets = []
    for chunk in rest.split("}"):
        chunk = chunk.strip(", ")
        if not chunk:
            continue
        if not chunk.startswith("{"):
            raise ValueError(f"bad wall label {label!r}")
        inner = chunk[1:]
        sets.append(frozenset(int(v) for v in inner.split(",") if v.strip()))
    if fam == "A3":
        if len(sets) != 2:
            raise ValueError(f"bad wall label {label!r}")
        return make_wall(fam, n, sets[0], sets[1])
    if len(sets) != 1:
        raise ValueError(f"bad wall label {label!r}")
    return make_wall(fam, n, sets[0])
