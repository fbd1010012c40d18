"""Classify the CM curve y^2 = x^7 + 7x^5 + 14x^3 + 7x at every classified prime below a bound."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from hypertouch.cm_family import PrimeClass, classify_prime, verify_cm_prediction
from hypertouch.field import is_prime
from hypertouch.zeta import DEFAULT_BUDGET


@dataclass
class Config:
    pmax: int = 200
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    out: str = "runs/cm_sweep.json"


def main(cfg: Config) -> list[dict]:
    rows = []
    for p in range(3, cfg.pmax):
        if not is_prime(p) or classify_prime(p).cls is PrimeClass.OUT_OF_SCOPE:
            continue
        t = time.perf_counter()
        rep = verify_cm_prediction(p, cfg.budget, cfg.workers)
        c = rep.classification
        rows.append({
            "p": p,
            "p_mod_7": p % 7,
            "class": rep.prime_class.value,
            "outcome": c.outcome.value,
            "a_number": c.a_number,
            "supersingular": c.supersingularity.verdict.value,
            "location": c.to_json().get("location"),
            "pass": rep.passed,
            "seconds": round(time.perf_counter() - t, 3),
        })
        r = rows[-1]
        print(f"{p:4d}  {r['class']:17s} {r['outcome']:15s} a={r['a_number']}  "
              f"{'PASS' if r['pass'] else 'FAIL'}  {r['seconds']:.2f}s")
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    Path(cfg.out).write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1))
    print(f"{sum(r['pass'] for r in rows)}/{len(rows)} primes match the prediction")
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in asdict(Config()).items():
        ap.add_argument(f"--{k}", type=type(v), default=v)
    main(Config(**vars(ap.parse_args())))
