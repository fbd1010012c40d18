"""Re-verify every known example curve (shape, a-number, nilpotency, supersingularity, verdict)."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from hypertouch.table import TABLE, verify_row
from hypertouch.zeta import DEFAULT_BUDGET


@dataclass
class Config:
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    out: str = "runs/table.json"


def main(cfg: Config) -> list[dict]:
    rows = []
    for row in TABLE:
        t = time.perf_counter()
        r = verify_row(row, cfg.budget, cfg.workers)
        r["seconds"] = round(time.perf_counter() - t, 3)
        rows.append(r)
        field = f"F_{r['p']}" + (f"^{r['k']}" if r["k"] > 1 else "")
        print(f"{field:8s} {'PASS' if r['pass'] else 'FAIL'}  a={r['a_number']} "
              f"tri(given)={r['shape_as_given']!s:5s} tri(touchpoint)={r['shape_at_touchpoint']!s:5s} "
              f"{r['supersingular']:15s} {r['outcome']:15s} {r['seconds']:6.2f}s  {r['curve']}")
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    main(Config(**vars(ap.parse_args())))
