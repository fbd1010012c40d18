"""Long run: general-family search at p = 19 with the leading coefficient a6 fixed.

The full family has 19^7 tuples; fixing a6 = 1 leaves 19^6 (about 4.7e7),
which includes x^7 + x^6 + 9x^5 + 5x^4 + 6x^3 + x^2 + 16x + 1.  Around ten
minutes on one core.
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from hypertouch.search import SearchSpec, iter_search
from hypertouch.zeta import DEFAULT_BUDGET

TARGET = (1, 9, 5, 6, 1, 16, 1)


@dataclass
class Config:
    p: int = 19
    a6: int = 1
    workers: int = 1
    budget: int = DEFAULT_BUDGET
    out: str = "runs/search_p19_general.jsonl"


def main(cfg: Config) -> bool:
    spec = SearchSpec(cfg.p, "general", cfg.budget, prefix=(cfg.a6,))
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    tested = hits = 0
    seen_target = False
    with open(cfg.out, "w") as fh:
        for r in iter_search(spec, cfg.workers):
            tested += r.tested
            for h in r.hits:
                hits += 1
                seen_target |= h.coefficients == TARGET
                fh.write(json.dumps(h.to_json()) + "\n")
            print(f"\r{tested}/{spec.size} tuples, {hits} hits, {time.perf_counter() - start:.0f}s", end="", flush=True)
    print()
    print(json.dumps({"config": asdict(cfg), "tested": tested, "hits": hits, "target_found": seen_target}))
    return seen_target


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    raise SystemExit(0 if main(Config(**vars(ap.parse_args()))) else 1)
