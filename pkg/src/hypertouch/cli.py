"""Command-line driver.

Coefficients are always ascending (constant term first).  Over F_{p^k}, k > 1,
each coefficient is a bracketed vector over the modulus' power basis, e.g.
``--p 19 --modulus 16,0,1 --f 0,1,0,[1,12],0,[0,4],0,1``.

Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 internal
invariant or verification failure.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import cartier, cm_family, search, table, touchpoint, zeta
from .curve import Curve, make_curve
from .errors import (
    BudgetExceeded,
    CountingError,
    HypertouchError,
    InternalInvariantError,
    InvalidInput,
    PreconditionViolated,
)
from .field import build_field
from .poly import Poly

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


def _int_list(s: str) -> list[int]:
    try:
        return [int(v) for v in s.split(",") if v.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def parse_coefficients(s: str) -> list:
    try:
        data = json.loads("[" + s + "]")
    except json.JSONDecodeError as e:
        raise InvalidInput(f"cannot parse coefficient list {s!r}: {e}") from None
    for c in data:
        ok = isinstance(c, int) or (isinstance(c, list) and all(isinstance(v, int) for v in c))
        if not ok:
            raise InvalidInput(f"bad coefficient {c!r}")
    return data


def curve_from_args(args) -> Curve:
    if args.curve:
        with open(args.curve) as fh:
            return Curve.from_json(json.load(fh))
    if args.p is None or args.f is None:
        raise InvalidInput("give --p and --f, or --curve FILE")
    ctx = build_field(args.p, args.k, args.modulus)
    return make_curve(ctx, Poly(ctx, parse_coefficients(args.f)))


def _add_curve_args(sp):
    sp.add_argument("--p", type=int, help="odd prime")
    sp.add_argument("--k", type=int, default=1, help="extension degree (ignored with --modulus)")
    sp.add_argument("--modulus", type=_int_list, help="monic irreducible modulus, ascending")
    sp.add_argument("--f", help="ascending coefficients of f, c0,c1,...")
    sp.add_argument("--curve", help="curve JSON file instead of --p/--f")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=zeta.DEFAULT_BUDGET, help="field evaluations allowed for counting")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    ap = argparse.ArgumentParser(
        prog="hypertouch",
        description="Non-transversality tests for genus-3 hyperelliptic curves. "
        "Polynomial coefficients are given in ASCENDING order (c0 first).",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("matrix", "Cartier-Manin matrix, kernels, a-number, p-rank"),
        ("zeta", "point counts, L-polynomial, Newton slopes"),
        ("classify", "transversality verdict for an a-number-1 supersingular curve"),
        ("touchpoint", "touchpoint for the Cartier operator"),
    ]:
        _add_curve_args(sub.add_parser(name, parents=[common], help=help_))
    sp = sub.add_parser("cm", parents=[common], help="check the CM-curve prediction at p")
    sp.add_argument("--p", type=int, required=True)
    sp = sub.add_parser("search", parents=[common], help="exhaustive family search (JSON lines)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--family", choices=sorted(search.FAMILY_ARITY), default="odd")
    sp.add_argument("--prefix", type=_int_list, default=[], help="fix the leading tuple entries")
    sub.add_parser("verify-table", parents=[common], help="regression over the known example curves")
    sp = sub.add_parser("components", parents=[common], help="p^5 + p^2 + 1")
    sp.add_argument("--p", type=int, required=True)
    return ap


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _run(args) -> int:
    if args.format == "csv" and args.command not in ("search", "verify-table"):
        raise InvalidInput("csv output is only available for search and verify-table")
    cmd = args.command
    if cmd == "matrix":
        _emit(cartier.cartier_manin(curve_from_args(args)).to_json())
    elif cmd == "zeta":
        _emit(zeta.zeta_data(curve_from_args(args), args.budget, args.workers).to_json())
    elif cmd == "classify":
        _emit(touchpoint.classify(curve_from_args(args), args.budget, args.workers).to_json())
    elif cmd == "touchpoint":
        _emit(touchpoint.find_touchpoint(curve_from_args(args)).to_json())
    elif cmd == "components":
        _emit({"count": cm_family.pftq_component_count(args.p)})
    elif cmd == "cm":
        pc = cm_family.classify_prime(args.p)
        if pc.cls is cm_family.PrimeClass.OUT_OF_SCOPE:
            _emit({"p": args.p, "prime_class": pc.cls.value, "reason": pc.reason, "pass": None})
            return EXIT_OK
        rep = cm_family.verify_cm_prediction(args.p, args.budget, args.workers)
        _emit(rep.to_json())
        return EXIT_OK if rep.passed else EXIT_INTERNAL
    elif cmd == "search":
        spec = search.SearchSpec(args.p, args.family, args.budget, tuple(args.prefix))
        return _search(spec, args.workers, args.format)
    elif cmd == "verify-table":
        rep = table.verify_table(args.budget, args.workers)
        if args.format == "csv":
            cols = ["p", "k", "curve", "model_valid", "shape_as_given", "shape_at_touchpoint",
                    "a_number", "nilpotent", "supersingular", "outcome", "pass"]
            w = csv.DictWriter(sys.stdout, cols, extrasaction="ignore", lineterminator="\n")
            w.writeheader()
            w.writerows(rep["rows"])
        else:
            _emit(rep)
        return EXIT_OK if rep["pass"] else EXIT_INTERNAL
    return EXIT_OK


def _search(spec: search.SearchSpec, workers: int, fmt: str) -> int:
    import time

    start = time.perf_counter()
    tested = skipped = n_hits = 0
    writer = None
    if fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["coefficients", "f", "a_number", "verdict", "location"])
    for r in search.iter_search(spec, workers):
        tested += r.tested
        skipped += r.skipped
        for h in r.hits:
            n_hits += 1
            if writer:
                loc = h.location if isinstance(h.location, str) else " ".join(map(str, h.location))
                writer.writerow([" ".join(map(str, h.coefficients)), " ".join(map(str, h.f)),
                                 h.a_number, h.verdict, loc])
            else:
                _emit(h.to_json())
        sys.stdout.flush()
    summary = {"tested": tested, "skipped": skipped, "hits": n_hits,
               "wall_time": round(time.perf_counter() - start, 3)}
    if writer:
        print(f"# {json.dumps(summary)}", file=sys.stderr)
    else:
        _emit({"summary": summary})
    return EXIT_OK


def _glue_values(argv: list[str]) -> list[str]:
    # "--f -1,0,..." would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--f", "--modulus", "--prefix") and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_values(argv))
    try:
        return _run(args)
    except (InvalidInput, PreconditionViolated, OSError) as e:
        err, code = e, EXIT_INPUT
    except BudgetExceeded as e:
        err, code = e, EXIT_BUDGET
    except (InternalInvariantError, CountingError, HypertouchError) as e:
        err, code = e, EXIT_INTERNAL
    print(json.dumps({"error": type(err).__name__, "message": str(err)}), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
