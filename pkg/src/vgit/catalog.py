"""Curve/point configurations, their maximal support tuples and wall-crossing reports.

A configuration records where each marked point sits relative to the
singularities of a fixed curve type.  ``tuples_of`` returns, for each relevant
one-parameter subgroup normal form, the curve support and the point supports
after moving the configuration into that normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import polytope
from .errors import OutOfRange
from .cone_walls import (Wall, WallFamily, ample_cone, make_wall, wall_activity, wall_representative)
from .mu_engine import SupportTuple, Verdict, candidate_forms, region_from_tuples, verdict
from .weightspace import LinearForm, WeightVector, coords, fmt_rational, monomials


class Family(str, Enum):
    GENERIC = "generic"
    THREE_LINES = "3A1"
    CONIC_TRANSVERSE = "2A1"
    CUSPIDAL = "A2"
    CONIC_TANGENT = "A3"
    CONIC_TANGENT_ON_LINE = "A3-line"
    CONCURRENT_LINES = "D4"
    S_3A1_MINUS = "S(3A1,-)"
    S_3A1_PLUS = "S(3A1,+)"
    S_A2_MINUS = "S(A2,-)"
    S_A2_PLUS = "S(A2,+)"
    S_A3_MINUS = "S(A3,-)"
    S_A3_PLUS = "S(A3,+)"
    S_D4_MINUS = "S(D4,-)"
    S_D4_PLUS = "S(D4,+)"

    def __str__(self) -> str:
        return self.value


_SIDE_FAMILIES = {
    (WallFamily.THREE_A1, -1): Family.S_3A1_MINUS, (WallFamily.THREE_A1, 1): Family.S_3A1_PLUS,
    (WallFamily.A2, -1): Family.S_A2_MINUS, (WallFamily.A2, 1): Family.S_A2_PLUS,
    (WallFamily.A3, -1): Family.S_A3_MINUS, (WallFamily.A3, 1): Family.S_A3_PLUS,
    (WallFamily.D4, -1): Family.S_D4_MINUS, (WallFamily.D4, 1): Family.S_D4_PLUS,
}
_SIDE_OF = {v: k for k, v in _SIDE_FAMILIES.items()}


def _fs(x) -> frozenset:
    return frozenset(int(i) for i in x)


@dataclass(frozen=True)
class Configuration:
    """Incidence data of marked points p_1..p_n on a curve of a given type.

    THREE_LINES: I at the vertex eta, ``nodes`` = (points at eta', points at
      eta''), ``clusters`` = groups of points sharing a smooth point of the
      line opposite eta.
    CONIC_TRANSVERSE: ``nodes`` = (points at one node, points at the other).
    CUSPIDAL: I at the cusp, the rest at one flex.
    CONIC_TANGENT: I at the tacnode, J at a smooth point of the line, the rest
      at a smooth point of the conic.
    CONIC_TANGENT_ON_LINE: I at the tacnode, the rest on the line.
    CONCURRENT_LINES: I at the triple point, ``blocks`` = points on each line.
    S families carry the data of the wall they border (I, J, blocks).
    ``heavy`` optionally singles out the heaviest cluster or block.
    """

    family: Family
    n: int
    d: int = 3
    I: frozenset = frozenset()
    J: frozenset = frozenset()
    nodes: tuple = ()
    clusters: tuple = ()
    blocks: tuple = ()
    heavy: Optional[int] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "I", _fs(self.I))
        object.__setattr__(self, "J", _fs(self.J))
        object.__setattr__(self, "nodes", tuple(_fs(s) for s in self.nodes))
        object.__setattr__(self, "clusters", tuple(_fs(s) for s in self.clusters))
        object.__setattr__(self, "blocks", tuple(_fs(s) for s in self.blocks))
        full = frozenset(range(1, self.n + 1))
        groups = [self.I, self.J] + list(self.nodes) + list(self.clusters) + list(self.blocks)
        seen = set()
        for g in groups:
            if not g <= full:
                raise ValueError(f"point index outside 1..{self.n}")
            if seen & g:
                raise ValueError("a point is placed twice")
            seen |= g
        if fam is not Family.GENERIC and self.d != 3:
            raise ValueError("only the generic family is defined for d != 3")
        if fam is Family.GENERIC and self.d < 3:
            raise ValueError("curve degree must be at least 3")
        if fam is Family.THREE_LINES:
            if len(self.nodes) != 2:
                raise ValueError("3A1 needs two further node sets")
            if seen != full:
                raise ValueError("3A1 configuration must place every point")
        if fam is Family.CONIC_TRANSVERSE:
            if len(self.nodes) != 2 or seen != full:
                raise ValueError("2A1 needs two node sets covering every point")
        if fam in (Family.CONCURRENT_LINES, Family.S_D4_MINUS, Family.S_D4_PLUS):
            if len(self.blocks) != 3 or seen != full:
                raise ValueError("D4 needs I and three blocks covering every point")
        if self.heavy is not None:
            pool = self.clusters if fam is Family.THREE_LINES else self.blocks
            if not 0 <= self.heavy < len(pool):
                raise ValueError("heavy index out of range")

    @property
    def rest(self) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.I - self.J

    @property
    def wall_data(self):
        return _SIDE_OF.get(self.family)

    def wall(self) -> Wall:
        fam, _ = _SIDE_OF[self.family]
        return make_wall(fam, self.n, self.I, self.J)

    def to_json(self) -> dict:
        rec = {"family": self.family.value, "n": self.n}
        if self.family is Family.GENERIC:
            rec["d"] = self.d
        for key in ("I", "J"):
            rec[key] = sorted(getattr(self, key))
        for key in ("nodes", "clusters", "blocks"):
            val = getattr(self, key)
            if val:
                rec[key] = [sorted(s) for s in val]
        if self.heavy is not None:
            rec["heavy"] = self.heavy
        return rec

    @classmethod
    def from_json(cls, data: dict) -> "Configuration":
        known = {"family", "n", "d", "I", "J", "nodes", "clusters", "blocks", "heavy"}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown configuration keys {sorted(extra)}")
        return cls(Family(data["family"]), int(data["n"]), int(data.get("d", 3)),
                   _fs(data.get("I", ())), _fs(data.get("J", ())),
                   tuple(_fs(s) for s in data.get("nodes", ())),
                   tuple(_fs(s) for s in data.get("clusters", ())),
                   tuple(_fs(s) for s in data.get("blocks", ())),
                   data.get("heavy"))


# constructors -------------------------------------------------------------

def generic(n: int, d: int = 3) -> Configuration:
    return Configuration(Family.GENERIC, n, d)


def three_lines(n: int, I, eta2=(), eta3=(), clusters=None, heavy=None) -> Configuration:
    I, eta2, eta3 = _fs(I), _fs(eta2), _fs(eta3)
    if clusters is None:
        left = sorted(frozenset(range(1, n + 1)) - I - eta2 - eta3)
        clusters = [frozenset([i]) for i in left]
    return Configuration(Family.THREE_LINES, n, I=I, nodes=(eta2, eta3), clusters=tuple(clusters), heavy=heavy)


def conic_transverse(n: int, first=None) -> Configuration:
    first = _fs(first if first is not None else [1] if n else [])
    return Configuration(Family.CONIC_TRANSVERSE, n, nodes=(first, frozenset(range(1, n + 1)) - first))


def cuspidal(n: int, I) -> Configuration:
    return Configuration(Family.CUSPIDAL, n, I=_fs(I))


def conic_tangent(n: int, I, J) -> Configuration:
    return Configuration(Family.CONIC_TANGENT, n, I=_fs(I), J=_fs(J))


def conic_tangent_on_line(n: int, I=()) -> Configuration:
    return Configuration(Family.CONIC_TANGENT_ON_LINE, n, I=_fs(I))


def _default_blocks(n: int, I) -> tuple:
    left = sorted(frozenset(range(1, n + 1)) - _fs(I))
    blocks = [frozenset(left[k::3]) for k in range(3)]
    return tuple(blocks)


def concurrent_lines(n: int, I, blocks=None, heavy=None) -> Configuration:
    blocks = tuple(blocks) if blocks is not None else _default_blocks(n, I)
    return Configuration(Family.CONCURRENT_LINES, n, I=_fs(I), blocks=blocks, heavy=heavy)


def wall_configuration(wall: Wall, blocks=None) -> Configuration:
    """The curve type that sits on the wall, with otherwise general points."""
    if wall.family is WallFamily.THREE_A1:
        return three_lines(wall.n, wall.I)
    if wall.family is WallFamily.A2:
        return cuspidal(wall.n, wall.I)
    if wall.family is WallFamily.A3:
        return conic_tangent(wall.n, wall.I, wall.J)
    return concurrent_lines(wall.n, wall.I, blocks if blocks is not None else _finest_triple(wall))


def _finest_triple(wall: Wall) -> tuple:
    return max(wall.block_triples, key=lambda t: (sum(1 for b in t if b), [sorted(b) for b in t]))


def side_configuration(wall: Wall, side: int, blocks=None) -> Configuration:
    if side not in (-1, 1):
        raise ValueError("side must be -1 or +1")
    fam = _SIDE_FAMILIES[(wall.family, side)]
    if wall.family is WallFamily.D4:
        blocks = tuple(blocks) if blocks is not None else _finest_triple(wall)
    else:
        blocks = ()
    return Configuration(fam, wall.n, I=wall.I, J=wall.J, blocks=blocks)


# tuples -------------------------------------------------------------------

def _points(n: int, placement: dict, default: str) -> tuple:
    """placement maps coordinate letters to index sets."""
    out = []
    for i in range(1, n + 1):
        letter = default
        for key, idx in placement.items():
            if i in idx:
                letter = key
                break
        out.append(coords(letter))
    return tuple(out)


def _generic_tuples(n: int, d: int) -> list:
    out = []
    for m in range(3, d + 1):
        out.append(SupportTuple(monomials(f"x^{d - m}y^{m}, x^{d - 1}z"), _points(n, {}, "z"), f"flex-order-{m}"))
    for i in range(1, n + 1):
        out.append(SupportTuple(monomials(f"x^{d - 2}y^2, x^{d - 1}z"), _points(n, {"x": {i}}, "z"), f"tangent-{i}"))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                out.append(SupportTuple(monomials(f"x^{d - 1}y"), _points(n, {"x": {i}, "y": {j}}, "z"),
                                        f"line-{i}-{j}"))
    return out


def _three_lines_tuples(c: Configuration) -> list:
    n, eta = c.n, c.I
    lam = frozenset(range(1, n + 1)) - eta
    out = []
    for k, node in enumerate(c.nodes):
        out.append(SupportTuple(monomials("xyz"), _points(n, {"x": eta, "y": node}, "z"), f"g1[{k}]"))
        out.append(SupportTuple(monomials("xyz"), _points(n, {"x": node, "y": eta}, "z"), f"g3[{k}]"))
        out.append(SupportTuple(monomials("xyz"), _points(n, {"x": node, "y": lam - node}, "z"), f"g4[{k}]"))
    if c.heavy is not None:
        clusters = [c.clusters[c.heavy]]
    else:
        clusters = list(c.clusters) or [frozenset()]
    for k, J in enumerate(clusters):
        out.append(SupportTuple(monomials("xy^2"), _points(n, {"x": eta, "y": J}, "z"), f"g2[{k}]"))
        out.append(SupportTuple(monomials("x^2y"), _points(n, {"x": J, "y": eta}, "z"), f"g5[{k}]"))
        out.append(SupportTuple(monomials("x^2z"), _points(n, {"x": J, "y": lam - J}, "z"), f"g6[{k}]"))
    return out


def _cuspidal_tuples(c: Configuration) -> list:
    n, cusp, flex = c.n, c.I, c.rest
    return [
        SupportTuple(monomials("y^3, xz^2"), _points(n, {"x": cusp}, "z"), "g1"),
        SupportTuple(monomials("y^3, x^2z"), _points(n, {"x": flex}, "z"), "g2"),
        SupportTuple(monomials("xy^2"), _points(n, {"x": cusp}, "y"), "g3"),
        SupportTuple(monomials("x^2y"), _points(n, {"x": flex}, "y"), "g4"),
    ]


def _conic_tangent_tuples(c: Configuration) -> list:
    n, t, b, a = c.n, c.I, c.J, c.rest
    return [
        SupportTuple(monomials("xz^2, y^2z"), _points(n, {"x": t, "y": b}, "z"), "g1"),
        SupportTuple(monomials("x^2z, xy^2"), _points(n, {"x": b, "y": t}, "z"), "g2"),
        SupportTuple(monomials("x^2y"), _points(n, {"x": b, "y": a}, "z"), "g3"),
        SupportTuple(monomials("x^2z, xy^2"), _points(n, {"x": a, "y": b}, "z"), "g4"),
        SupportTuple(monomials("xy^2"), _points(n, {"x": t, "y": a}, "z"), "g5"),
        SupportTuple(monomials("x^2y"), _points(n, {"x": a, "y": t}, "z"), "g6"),
    ]


def _on_line_tuples(c: Configuration) -> list:
    return [SupportTuple(monomials("xz^2, y^2z"), _points(c.n, {"x": c.I}, "y"), "g1")]


def _concurrent_tuples(c: Configuration) -> list:
    n, sigma = c.n, c.I
    if c.heavy is not None:
        alphas = [c.heavy]
    else:
        alphas = [k for k, B in enumerate(c.blocks) if B] or [0]
    out = []
    for k in alphas:
        alpha = c.blocks[k]
        beta = frozenset().union(*(B for j, B in enumerate(c.blocks) if j != k))
        out.append(SupportTuple(monomials("y^2z"), _points(n, {"x": sigma, "y": alpha}, "z"), f"g1[{k}]"))
        out.append(SupportTuple(monomials("x^2z"), _points(n, {"x": alpha, "y": sigma}, "z"), f"g2[{k}]"))
        out.append(SupportTuple(monomials("x^2y"), _points(n, {"x": alpha, "y": beta}, "z"), f"g3[{k}]"))
    return out


def _wall_tuples(c: Configuration) -> list:
    if c.family is Family.THREE_LINES:
        return _three_lines_tuples(c)
    if c.family is Family.CUSPIDAL:
        return _cuspidal_tuples(c)
    if c.family is Family.CONIC_TANGENT:
        return _conic_tangent_tuples(c)
    return _concurrent_tuples(c)


def side_tuples(wall: Wall, side: int, blocks=None) -> list:
    """Tuples of the wall configuration whose mu attains a positive multiple of -side*h."""
    base = wall_configuration(wall, blocks)
    tuples = _wall_tuples(base)
    target = wall.hyperplane.scale(-side).primitive()
    keep = set()
    for wit in candidate_forms(tuples):
        if wit.form.primitive() == target:
            keep.add(wit.tuple_index)
    return [tuples[k] for k in sorted(keep)]


def tuples_of(c: Configuration) -> list:
    seen, out = set(), []
    for st in _tuples_of(c):
        if st not in seen:
            seen.add(st)
            out.append(st)
    return out


def _tuples_of(c: Configuration) -> list:
    fam = c.family
    if fam is Family.GENERIC:
        return _generic_tuples(c.n, c.d)
    if fam is Family.CONIC_TRANSVERSE:
        return [SupportTuple(monomials("xyz"), _points(c.n, {"x": c.nodes[0], "y": c.nodes[1]}, "z"), "g")]
    if fam is Family.CONIC_TANGENT_ON_LINE:
        return _on_line_tuples(c)
    if fam in (Family.THREE_LINES, Family.CUSPIDAL, Family.CONIC_TANGENT, Family.CONCURRENT_LINES):
        return _wall_tuples(c)
    wfam, side = _SIDE_OF[fam]
    return side_tuples(c.wall(), side, c.blocks or None)


def classify(c: Configuration, wv: WeightVector, cone_guard: bool = True) -> Verdict:
    """Verdict for the configuration at wv.

    With ``cone_guard`` the generic tuples of the same n are added; their forms
    cut out the ample cone, so weights outside it are reported Unstable.
    """
    if wv.n != c.n:
        raise ValueError(f"configuration has {c.n} points but the weights have {wv.n}")
    tuples = list(tuples_of(c))
    if cone_guard and c.family is not Family.GENERIC:
        tuples += _generic_tuples(c.n, c.d)
    return verdict(tuples, wv)


# wall derivation ------------------------------------------------------------

@dataclass(frozen=True)
class DerivedWall:
    hyperplane: LinearForm
    pair: tuple
    residual: tuple


def derive_wall(c: Configuration) -> DerivedWall:
    """The unique opposite-sign pair among the breakpoint forms, plus the remaining forms.

    Unpruned forms are used: on degenerate walls (e.g. gamma = 0) one member of
    the pair is dominated and would otherwise disappear.
    """
    forms = region_from_tuples(tuples_of(c), prune=False).forms
    prims = {f.primitive(): f for f in forms}
    pairs = []
    for f in prims:
        g = (-f).primitive()
        if g in prims and f.sort_key() > g.sort_key():
            pairs.append((g, f))
    if len(pairs) != 1:
        raise ValueError(f"expected one opposite-sign pair, found {len(pairs)}")
    lo, hi = pairs[0]
    residual = tuple(f for f in forms if f.primitive() not in (lo, hi))
    return DerivedWall(lo.hyperplane_key(), (prims[lo], prims[hi]), residual)


def same_polyhedron_on(h: LinearForm, A: Sequence[LinearForm], B: Sequence[LinearForm]) -> bool:
    """{h = 0, A <= 0} == {h = 0, B <= 0} inside the nonnegative orthant of (gamma; w)."""
    n = h.n
    dim = n + 1
    orth = [[-1 if k == j else 0 for k in range(dim)] for j in range(dim)]
    norm = [[1] * dim]

    def inside(P, Q):
        rows = [list(f.coeffs) for f in P] + orth + norm
        rhs = [0] * len(P) + [0] * dim + [1]
        return all(polytope.implies(rows, rhs, list(q.coeffs), 0, [list(h.coeffs)], [0]) for q in Q)

    return inside(A, B) and inside(B, A)


# crossing reports -------------------------------------------------------------

@dataclass(frozen=True)
class SideDescription:
    curve: str
    at_singularity: frozenset = frozenset()
    on_line: frozenset = frozenset()
    coincident: tuple = ()
    text: str = ""

    def to_json(self) -> dict:
        return {"curve": self.curve, "at_singularity": sorted(self.at_singularity),
                "on_line": sorted(self.on_line), "coincident": [sorted(s) for s in self.coincident],
                "text": self.text}


def _pt(idx: Iterable[int]) -> str:
    idx = sorted(idx)
    return " = ".join(f"p{i}" for i in idx)


def describe_side(wall: Wall, side: int, blocks=None) -> SideDescription:
    n, I, J = wall.n, wall.I, wall.J
    rest = frozenset(range(1, n + 1)) - I - J
    fam = wall.family

    def desc(curve, detail, **kw):
        return SideDescription(curve, text=f"{curve}: {detail}", **kw)

    if fam is WallFamily.THREE_A1:
        if side < 0:
            return desc("irreducible nodal cubic", f"{_pt(I)} at the A1 point", at_singularity=I)
        return desc("conic plus transverse line", ", ".join(f"p{i}" for i in sorted(rest)) + " on the line",
                    on_line=rest)
    if fam is WallFamily.A2:
        if side < 0:
            return desc("cuspidal cubic", f"{_pt(I)} at the A2 point" if I else "no point at the A2 point",
                        at_singularity=I)
        return desc("smooth cubic", f"{_pt(rest)} at a flex", coincident=(rest,))
    if fam is WallFamily.A3:
        if side < 0:
            bits = []
            if I:
                bits.append(f"{_pt(I)} at the A3 point")
            if J:
                bits.append(", ".join(f"p{i}" for i in sorted(J)) + " on the line")
            return desc("conic plus tangent line", "; ".join(bits) or "no point at the A3 point",
                        at_singularity=I, on_line=J)
        groups = tuple(g for g in (rest, J) if g)
        if J and rest:
            detail = f"{_pt(J)} on the tangent line at {_pt(rest)}"
        elif rest:
            detail = f"{_pt(rest)}" if len(rest) > 1 else f"{_pt(rest)} anywhere"
        else:
            detail = f"{_pt(J)} on a common tangent line"
        return desc("smooth cubic", detail, coincident=groups)
    blocks = tuple(blocks) if blocks is not None else _finest_triple(wall)
    nonempty = [B for B in blocks if B]
    if side < 0:
        lead = f"{_pt(I)} at the D4 point; " if I else ""
        return desc("three concurrent lines", lead + "; ".join(f"{_pt(B)} on line {k}"
                                                                for k, B in enumerate(nonempty, 1)),
                    at_singularity=I)
    return desc("smooth cubic", ", ".join(_pt(B) for B in nonempty) + " at three collinear points",
                coincident=tuple(nonempty))


@dataclass(frozen=True)
class CrossingReport:
    wall: Wall
    minus_side: Configuration
    plus_side: Configuration
    minus_description: SideDescription
    plus_description: SideDescription
    representative: Optional[WeightVector]

    def to_json(self) -> dict:
        rec = {
            "wall": self.wall.label,
            "hyperplane": self.wall.hyperplane.to_json(),
            "minus": {"configuration": self.minus_side.to_json(), "description": self.minus_description.to_json(),
                      "unstable_when": "hyperplane > 0"},
            "plus": {"configuration": self.plus_side.to_json(), "description": self.plus_description.to_json(),
                     "unstable_when": "hyperplane < 0"},
        }
        if self.representative is not None:
            rec["representative"] = [fmt_rational(v) for v in self.representative.coords()]
        if self.wall.n == 2:
            rec["table_row"] = table_row(self).to_json()
        return rec


def crossing_report(wall: Wall, blocks=None) -> CrossingReport:
    cone = ample_cone(wall.n, 3)
    if not wall_activity(wall, cone):
        raise OutOfRange(f"{wall.label} is not an active wall")
    return CrossingReport(wall, side_configuration(wall, -1, blocks), side_configuration(wall, 1, blocks),
                          describe_side(wall, -1, blocks), describe_side(wall, 1, blocks),
                          wall_representative(wall, cone))


@dataclass(frozen=True)
class TableRow:
    """One row of the n = 2 crossing table; LHS - RHS of ``equation`` is a positive multiple of h."""

    wall: str
    equation: str
    unstable_when_lhs_gt_rhs: str
    unstable_when_lhs_lt_rhs: str

    def to_json(self) -> dict:
        return {"wall": self.wall, "equation": self.equation,
                "unstable_when_lhs_gt_rhs": self.unstable_when_lhs_gt_rhs,
                "unstable_when_lhs_lt_rhs": self.unstable_when_lhs_lt_rhs}


def _equation_n2(wall: Wall) -> str:
    I, J = sorted(wall.I), sorted(wall.J)
    other = [k for k in (1, 2) if k not in I + J]
    if wall.family is WallFamily.THREE_A1:
        return f"w{I[0]} = 1/2 w{other[0]}"
    if wall.family is WallFamily.A2:
        return "0 = 4(w1 + w2) - 3" if not I else f"w{I[0]} = 4/5 w{other[0]} - 3/5"
    if not I and not J:
        return "0 = w1 + w2 - 1"
    if not I and len(J) == 1:
        return f"0 = w{other[0]} - 1"
    raise ValueError(f"{wall.label} is not an active wall for n = 2")


def table_row(report: CrossingReport) -> TableRow:
    w = report.wall
    return TableRow(w.label, _equation_n2(w), report.minus_description.text, report.plus_description.text)
