"""Command line interface: ``vgit <subcommand> ...``.

Exit codes: 0 success, 1 invalid input, 2 input outside the valid range.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .catalog import Configuration, Family
from .chambers import build_slice, chambers_to_json, enumerate_chambers, locate
from .cone_walls import (ample_cone, enumerate_walls, make_wall, parse_wall_label, wall_activity)
from .errors import OutOfRange
from .weightspace import WeightVector, fmt_rational, parse_rational

EXIT_OK, EXIT_INVALID, EXIT_RANGE = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_INVALID)


def _rationals(text: str) -> list:
    return [parse_rational(t) for t in text.split(",")] if text.strip() else []


def _index_set(text: str) -> frozenset:
    return frozenset(int(t) for t in text.split(",") if t.strip())


def _groups(text: str) -> tuple:
    return tuple(_index_set(g) for g in text.split("|"))


_ALIASES = {"2A1-nodes": "2A1", "3A1": "3A1", "generic": "generic", "A2": "A2", "A3": "A3",
            "A3-line": "A3-line", "D4": "D4"}


def parse_config(desc: str, n: int) -> Configuration:
    """``NAME[:key=value;...]`` or a JSON object (inline or ``@file``)."""
    desc = desc.strip()
    if desc.startswith("@"):
        desc = Path(desc[1:]).read_text()
    if desc.startswith("{"):
        data = json.loads(desc)
        data.setdefault("n", n)
        cfg = Configuration.from_json(data)
        if cfg.n != n:
            raise UsageError(f"configuration has n={cfg.n} but {n} weights were given")
        return cfg
    name, _, opts = desc.partition(":")
    kv = {}
    for item in filter(None, (s.strip() for s in opts.split(";"))):
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"bad option {item!r}")
        kv[key.strip()] = val.strip()
    name = _ALIASES.get(name, name)
    fam = Family(name)
    I = _index_set(kv.pop("I", ""))
    J = _index_set(kv.pop("J", ""))
    heavy = int(kv.pop("heavy")) if "heavy" in kv else None
    if fam is Family.GENERIC:
        d = int(kv.pop("d", 3))
        cfg = catalog.generic(n, d)
    elif fam is Family.THREE_LINES:
        nodes = _groups(kv.pop("nodes")) if "nodes" in kv else ((), ())
        clusters = _groups(kv.pop("clusters")) if "clusters" in kv else None
        cfg = catalog.three_lines(n, I or {1}, nodes[0], nodes[1] if len(nodes) > 1 else (), clusters, heavy)
    elif fam is Family.CONIC_TRANSVERSE:
        cfg = catalog.conic_transverse(n, _index_set(kv.pop("first")) if "first" in kv else None)
    elif fam is Family.CUSPIDAL:
        cfg = catalog.cuspidal(n, I)
    elif fam is Family.CONIC_TANGENT:
        cfg = catalog.conic_tangent(n, I, J)
    elif fam is Family.CONIC_TANGENT_ON_LINE:
        cfg = catalog.conic_tangent_on_line(n, I)
    elif fam is Family.CONCURRENT_LINES:
        blocks = _groups(kv.pop("blocks")) if "blocks" in kv else None
        cfg = catalog.concurrent_lines(n, I, blocks, heavy)
    else:
        blocks = _groups(kv.pop("blocks")) if "blocks" in kv else ()
        cfg = Configuration(fam, n, I=I, J=J, blocks=blocks)
    if kv:
        raise UsageError(f"unknown options {sorted(kv)}")
    return cfg


def parse_wall(text: str, n: int):
    text = text.strip()
    if text.startswith("W("):
        return parse_wall_label(text, n)
    fam, _, opts = text.partition(":")
    kv = dict(item.split("=", 1) for item in filter(None, opts.split(";")))
    return make_wall(fam, n, _index_set(kv.get("I", "")), _index_set(kv.get("J", "")))


def _emit(obj, as_json: bool, text: str):
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_cone(args):
    cone = ample_cone(args.n, args.d)
    if args.json:
        _emit({"n": cone.n, "d": cone.d, "inequalities": [{"label": l, "form": f.to_json()}
                                                           for l, f in zip(cone.labels, cone.forms)]}, True, "")
    else:
        print(f"ample cone n={cone.n} d={cone.d} (form <= 0)")
        for label, f in zip(cone.labels, cone.forms):
            print(f"  {label:8s} {f} <= 0")


def cmd_walls(args):
    cone = ample_cone(args.n, 3)
    rows = []
    for w in enumerate_walls(args.n):
        active = wall_activity(w, cone)
        if active or args.all:
            rows.append((w, active))
    if args.json:
        _emit([w.to_json(active) for w, active in rows], True, "")
        return
    for w, active in rows:
        tag = "" if not args.all else ("  active" if active else "  inactive")
        print(f"{w.label:18s} {w.hyperplane} = 0{tag}")
    print(f"{sum(1 for _, a in rows if a)} active walls")


def cmd_chambers(args):
    sl = build_slice(args.n)
    data = chambers_to_json(sl, enumerate_chambers(sl))
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"{len(data['chambers'])} chambers written to {args.out}")
    else:
        sys.stdout.write(text)


def cmd_locate(args):
    w = _rationals(args.weights)
    if len(w) != args.n:
        raise UsageError(f"expected {args.n} weights, got {len(w)}")
    wv = WeightVector(1, tuple(w))
    sl = build_slice(args.n)
    res = locate(sl, enumerate_chambers(sl), wv)
    if hasattr(res, "labels"):
        _emit({"on_walls": list(res.labels), "hyperplanes": list(res.hyperplanes)}, args.json,
              "on walls: " + (", ".join(res.labels) or "(hyperplane extension only)"))
    else:
        _emit({"chamber": res.id, "signs": res.sign_string(), "rep": [fmt_rational(v) for v in res.rep]},
              args.json, f"chamber {res.id} signs {res.sign_string()} rep ("
              + ", ".join(fmt_rational(v) for v in res.rep) + ")")


def cmd_classify(args):
    vals = _rationals(args.weights)
    if not vals:
        raise UsageError("empty weight list")
    wv = WeightVector(vals[0], tuple(vals[1:]))
    cfg = parse_config(args.config, wv.n)
    v = catalog.classify(cfg, wv, cone_guard=not args.no_guard)
    _emit({"configuration": cfg.to_json(), "weights": [fmt_rational(x) for x in wv.coords()],
           "verdict": v.value}, args.json, v.value)


def cmd_crosswall(args):
    wall = parse_wall(args.wall, args.n)
    rep = catalog.crossing_report(wall)
    data = rep.to_json()
    if args.json:
        _emit(data, True, "")
        return
    print(f"{wall.label}: {wall.hyperplane} = 0")
    print(f"  unstable when form > 0: {rep.minus_description.text}   [{rep.minus_side.family.value}]")
    print(f"  unstable when form < 0: {rep.plus_description.text}   [{rep.plus_side.family.value}]")
    if "table_row" in data:
        row = data["table_row"]
        print(f"  {row['equation']}  |  LHS > RHS: {row['unstable_when_lhs_gt_rhs']}  |  "
              f"LHS < RHS: {row['unstable_when_lhs_lt_rhs']}")


def cmd_plot(args):
    from .plot import render_svg
    if args.n != 2:
        raise OutOfRange("plot supports n = 2 only")
    sl = build_slice(2)
    svg = render_svg(sl, enumerate_chambers(sl))
    Path(args.out).write_text(svg)
    print(f"wrote {args.out}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vgit", description="Exact VGIT walls and chambers for plane cubics with n marked points.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("cone", help="ample cone inequalities")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("walls", help="candidate walls and their activity")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--all", action="store_true", help="include inactive walls")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_walls)

    s = sub.add_parser("chambers", help="chamber decomposition of the gamma = 1 slice (JSON)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_chambers)

    s = sub.add_parser("locate", help="chamber or walls containing w (gamma = 1)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--weights", required=True, help="w1,...,wn as p/q rationals")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_locate)

    s = sub.add_parser("classify", help="stability verdict of a configuration")
    s.add_argument("--config", required=True, help="NAME[:key=val;...] or JSON / @file.json")
    s.add_argument("--weights", required=True, help="gamma,w1,...,wn as p/q rationals")
    s.add_argument("--no-guard", action="store_true", help="omit the ample-cone guard tuples")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("crosswall", help="configurations exchanged across a wall")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--wall", required=True, help="label W(A3,{},{1}) or FAMILY:I=..;J=..")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_crosswall)

    s = sub.add_parser("plot", help="SVG picture of the n = 2 chambers")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (ValueError, KeyError, IndexError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
