"""Compare the definitional and lattice quasi-regularity checks on random instances."""
from __future__ import annotations

import argparse
import random
import time
import warnings
from collections import Counter
from dataclasses import dataclass

from momentcut.cutconfig import check_detrans, check_rank_criterion, is_quasi_regular, lattice_verdict, subdivide
from momentcut.generators import random_instance


@dataclass
class Config:
    instances: int = 500
    seed: int = 0
    max_cuts: int = 3


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    for _ in range(cfg.instances):
        P, C = random_instance(rng, max_n=cfg.max_cuts)
        S = subdivide(P, C)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            q = bool(is_quasi_regular(P, C, S))
        tally["quasi_regular"] += q
        tally["verdict_disagreements"] += q != lattice_verdict(P, C, S).holds
        bad = {d.vertex for d in check_detrans(P, C, S)}
        for v, r in check_rank_criterion(P, C, S).items():
            tally["vertices"] += 1
            tally["vertex_disagreements"] += (v in bad) == r.holds
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", "--instances", type=int, default=Config.instances)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--max-cuts", type=int, default=Config.max_cuts)
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})
    t0 = time.perf_counter()
    tally = run(cfg)
    print(f"{cfg.instances} instances (seed {cfg.seed}) in {time.perf_counter() - t0:.1f}s")
    for k in ("quasi_regular", "vertices", "verdict_disagreements", "vertex_disagreements"):
        print(f"  {k:<22} {tally[k]}")
    raise SystemExit(1 if tally["verdict_disagreements"] or tally["vertex_disagreements"] else 0)


if __name__ == "__main__":
    main()
