"""Odd-family searches over a range of primes.

Besides hit counts this reports how the hits split by p mod 4; the known
examples all have p = 3 mod 4, and this is an observation, not a claim.
"""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from hypertouch.field import is_prime
from hypertouch.search import SearchSpec, run_search
from hypertouch.zeta import DEFAULT_BUDGET


@dataclass
class Config:
    pmin: int = 3
    pmax: int = 48
    family: str = "odd"
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    out: str = "runs/search_sweep.json"


def main(cfg: Config) -> dict:
    results = {}
    for p in range(cfg.pmin, cfg.pmax):
        if not is_prime(p) or p == 2:
            continue
        res = run_search(SearchSpec(p, cfg.family, cfg.budget), cfg.workers)
        results[p] = {**res.summary(), "tuples": [list(h.coefficients) for h in res.hits]}
        print(f"p={p:3d} (p mod 4 = {p % 4})  hits={len(res.hits):4d}  survivors={res.survivors:5d}  "
              f"skipped={res.skipped}  {res.wall_time:.2f}s")
    by_class = {r: sum(v["hits"] for p, v in results.items() if p % 4 == r) for r in (1, 3)}
    print(f"hits with p = 1 mod 4: {by_class[1]}, with p = 3 mod 4: {by_class[3]}")
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "by_p_mod_4": by_class, "results": results}, indent=1))
    return results


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    main(Config(**vars(ap.parse_args())))
