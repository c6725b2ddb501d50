"""Print the crossing table for the active walls at a given n (default 2)."""
import argparse
import json
from dataclasses import dataclass

from vgit.catalog import crossing_report
from vgit.cone_walls import active_walls


@dataclass
class Config:
    n: int = 2
    json: bool = False


def main(cfg: Config):
    reports = [crossing_report(w) for w in active_walls(cfg.n)]
    if cfg.json:
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
        return
    for r in reports:
        print(f"{r.wall.label}: {r.wall.hyperplane} = 0")
        print(f"  unstable when form > 0: {r.minus_description.text}")
        print(f"  unstable when form < 0: {r.plus_description.text}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    main(Config(a.n, a.json))
