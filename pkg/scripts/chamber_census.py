"""Count walls, hyperplanes and arrangement cells of the gamma = 1 slice for n = 1..max_n.

n = 3 takes about a minute with exact arithmetic.
"""
import argparse
import time
from dataclasses import dataclass

from vgit.chambers import build_slice, enumerate_chambers
from vgit.cone_walls import enumerate_walls


@dataclass
class Config:
    max_n: int = 2


def main(cfg: Config):
    print(f"{'n':>2} {'walls':>6} {'active':>6} {'planes':>6} {'cells':>6} {'seconds':>8}")
    for n in range(1, cfg.max_n + 1):
        t0 = time.perf_counter()
        sl = build_slice(n, cap=max(cfg.max_n, 1))
        cells = enumerate_chambers(sl)
        dt = time.perf_counter() - t0
        print(f"{n:>2} {len(enumerate_walls(n)):>6} {len(sl.walls):>6} {len(sl.hyperplanes):>6} "
              f"{len(cells):>6} {dt:>8.2f}", flush=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=2)
    main(Config(ap.parse_args().max_n))
