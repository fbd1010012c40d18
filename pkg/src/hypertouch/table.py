"""Regression data: known supersingular a-number-1 curves with a touchpoint.

Extension-field coefficients are vectors over the power basis of the stated
modulus, e.g. sqrt(3) in F_{19^2} = F_19[t]/(t^2 - 3) is (0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .cartier import cartier_manin, is_strictly_lower_triangular
from .curve import Curve, make_curve
from .errors import HypertouchError
from .field import build_field
from .poly import Poly
from .touchpoint import Outcome, classify
from .zeta import DEFAULT_BUDGET, Verdict


@dataclass(frozen=True)
class TableRow:
    p: int
    label: str
    f: tuple  # ascending; ints or basis vectors
    modulus: tuple[int, ...] | None = None
    cm: bool = False  # the CM curve x^7 + 7x^5 + 14x^3 + 7x

    def curve(self) -> Curve:
        ctx = build_field(self.p, 1, self.modulus)
        return make_curve(ctx, Poly(ctx, self.f))


def _odd(a5, a3, a1):
    return (0, a1, 0, a3, 0, a5, 0, 1)


TABLE: tuple[TableRow, ...] = (
    TableRow(11, "x^7 + x^5 + 7x^3 + x", _odd(1, 7, 1)),
    TableRow(19, "x^7 + 7x^5 + 14x^3 + 7x", _odd(7, 14, 7), cm=True),
    TableRow(19, "x^7 + 4s x^5 + (12s + 1)x^3 + x, s = sqrt(3)", _odd((0, 4), (1, 12), 1), (-3, 0, 1)),
    TableRow(19, "x^7 + x^6 + 9x^5 + 5x^4 + 6x^3 + x^2 + 16x + 1", (1, 16, 1, 6, 5, 9, 1, 1)),
    TableRow(23, "x^7 + 7x^5 + 14x^3 + 7x", _odd(7, 14, 7), cm=True),
    TableRow(31, "x^7 + (s + 6)x^5 + (8s + 23)x^3 + 17x, s = sqrt(3)", _odd((6, 1), (23, 8), 17), (-3, 0, 1)),
    TableRow(
        43,
        "x^7 + (3b^2 + 25b + 40)x^5 + (28b^2 + 10b + 7)x^3 + x, b^3 = 3",
        _odd((40, 25, 3), (7, 10, 28), 1),
        (-3, 0, 0, 1),
    ),
    TableRow(47, "x^7 + 7x^5 + 14x^3 + 7x", _odd(7, 14, 7), cm=True),
    TableRow(
        59,
        "x^7 + (32b^2 + b + 16)x^5 + (28b^2 + 43b + 1)x^3 + 7x, b^3 + 5b - 2 = 0",
        _odd((16, 1, 32), (1, 43, 28), 7),
        (-2, 5, 0, 1),
    ),
    TableRow(67, "x^7 + 18x^5 + 3x^3 + x", _odd(18, 3, 1)),
    TableRow(
        67,
        "x^7 + (33b^3 + 43b^2 + 64b + 6)x^5 + (54b^3 + 8b^2 + 26b + 7)x^3 + x, b^4 + 8b^2 + 54b + 2 = 0",
        _odd((6, 64, 43, 33), (7, 26, 8, 54), 1),
        (2, 54, 8, 0, 1),
    ),
    TableRow(71, "x^7 + 7x^5 + 17x^3 + 5x", _odd(7, 17, 5)),
    TableRow(71, "x^7 + 2x^5 - 6x^3 + 21x", _odd(2, -6, 21)),
    TableRow(79, "x^7 + 7x^5 + 14x^3 + 7x", _odd(7, 14, 7), cm=True),
    TableRow(79, "x^7 + (9s + 5)x^5 + (8s + 15)x^3 + 2x, s = sqrt(3)", _odd((5, 9), (15, 8), 2), (-3, 0, 1)),
)


def verify_row(row: TableRow, budget: int = DEFAULT_BUDGET, workers: int = 1) -> dict:
    out: dict = {"p": row.p, "curve": row.label, "k": 1 if row.modulus is None else len(row.modulus) - 1}
    try:
        C = row.curve()
    except HypertouchError as e:
        out.update(model_valid=False, error=repr(e), **{"pass": False})
        return out
    cd = cartier_manin(C)
    c = classify(C, budget, workers)
    tp = c.touchpoint
    shape_at_tp = bool(tp and tp.found and is_strictly_lower_triangular(cartier_manin(tp.witness).M))
    out.update(
        model_valid=True,
        shape_as_given=is_strictly_lower_triangular(cd.M),
        shape_at_touchpoint=shape_at_tp,
        a_number=cd.a_number,
        nilpotent=cd.nilpotent,
        p_rank=cd.p_rank,
        supersingular=c.supersingularity.verdict.value,
        outcome=c.outcome.value,
        touchpoint=tp.to_json() if tp else None,
    )
    common = shape_at_tp and cd.a_number == 1 and cd.nilpotent
    if out["k"] == 1:
        ok = common and c.supersingularity.verdict is Verdict.SUPERSINGULAR and c.outcome is Outcome.NON_TRANSVERSAL
    else:
        ok = common and (
            c.outcome is Outcome.NON_TRANSVERSAL
            or c.supersingularity.verdict is Verdict.INDETERMINATE
        )
    out["pass"] = bool(ok)
    return out


def verify_table(budget: int = DEFAULT_BUDGET, workers: int = 1) -> dict:
    rows = [verify_row(r, budget, workers) for r in TABLE]
    return {"rows": rows, "pass": all(r["pass"] for r in rows)}
