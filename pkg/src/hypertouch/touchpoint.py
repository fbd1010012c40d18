"""Touchpoints for the Cartier operator and the transversality classification.

For a supersingular genus-3 curve with a-number 1, ker C is spanned by one
differential q(x) dx/y with deg q <= 2.  A touchpoint exists iff q is, up to
scaling, (x - x0)^2 (or the constant 1, meaning x0 = infinity) and ker C^2 is
the space of differentials vanishing at x0.  Both conditions are linear algebra
on the Cartier-Manin matrix; no search over points is needed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .cartier import CartierData, cartier_manin, echelon_basis, is_strictly_lower_triangular
from .curve import Curve, invert_model, shift_model
from .errors import InternalInvariantError, PreconditionViolated
from .field import FieldElement
from .zeta import DEFAULT_BUDGET, SupersingularityReport, Verdict, is_supersingular

INFINITY = "inf"


@dataclass(frozen=True)
class TouchpointReport:
    found: bool
    location: FieldElement | str | None = None  # x0, INFINITY, or None
    witness: Curve | None = None

    @property
    def at_infinity(self) -> bool:
        return self.location == INFINITY

    def to_json(self) -> dict:
        d: dict = {"found": self.found}
        if self.found:
            d["location"] = INFINITY if self.at_infinity else list(self.location.rep)
            d["witness_f"] = self.witness.f.reps()
        return d


def kernel_quadratic(cd: CartierData) -> tuple[FieldElement, FieldElement, FieldElement]:
    (b,) = cd.ker1
    return b[0], b[1], b[2]


def find_touchpoint(C: Curve, cd: CartierData | None = None) -> TouchpointReport:
    cd = cd or cartier_manin(C)
    if cd.a_number != 1 or not cd.nilpotent:
        raise PreconditionViolated(
            f"touchpoints need a-number 1 and nilpotent Cartier operator (a={cd.a_number}, nilpotent={cd.nilpotent})"
        )
    ctx = C.ctx
    b0, b1, b2 = kernel_quadratic(cd)
    # binary form b2 X^2 + b1 X Z + b0 Z^2 must be a square of a linear form
    if b1 * b1 - 4 * b0 * b2:
        return TouchpointReport(False)
    if b2:
        x0 = -b1 / (2 * b2)
        vanishing = [(-x0, ctx.one, ctx.zero), (ctx.zero, -x0, ctx.one)]
        location: FieldElement | str = x0
    else:
        # b2 = 0 and zero discriminant force b1 = 0: double root at infinity
        vanishing = [(ctx.one, ctx.zero, ctx.zero), (ctx.zero, ctx.one, ctx.zero)]
        location = INFINITY
    if echelon_basis(vanishing) != cd.ker2:
        return TouchpointReport(False)
    witness = invert_model(C) if location == INFINITY else shift_model(C, location)
    if not is_strictly_lower_triangular(cartier_manin(witness).M):
        raise InternalInvariantError(f"witness model at {location!r} lacks the triangular shape")
    return TouchpointReport(True, location, witness)


class Outcome(str, enum.Enum):
    NON_TRANSVERSAL = "NonTransversal"
    TRANSVERSAL = "Transversal"
    NOT_APPLICABLE = "NotApplicable"


class Reason(str, enum.Enum):
    NOT_SUPERSINGULAR = "NotSupersingular"
    A_NUMBER_NOT_1 = "ANumberNot1"
    INDETERMINATE = "SupersingularityIndeterminate"


@dataclass(frozen=True)
class Classification:
    outcome: Outcome
    reason: Reason | None
    a_number: int
    supersingularity: SupersingularityReport
    touchpoint: TouchpointReport | None
    cartier: CartierData

    def to_json(self) -> dict:
        d = {
            "outcome": self.outcome.value,
            "a_number": self.a_number,
            "p_rank": self.cartier.p_rank,
            "nilpotent": self.cartier.nilpotent,
            "strictly_lower_triangular": is_strictly_lower_triangular(self.cartier.M),
            "supersingularity": self.supersingularity.to_json(),
        }
        if self.reason is not None:
            d["reason"] = self.reason.value
        if self.touchpoint is not None:
            d["touchpoint"] = self.touchpoint.to_json()
            if self.touchpoint.found:
                d["location"] = d["touchpoint"]["location"]
        return d


def classify(C: Curve, budget: int = DEFAULT_BUDGET, workers: int = 1) -> Classification:
    cd = cartier_manin(C)
    ss = is_supersingular(C, budget, workers)
    tp = find_touchpoint(C, cd) if cd.a_number == 1 and cd.nilpotent else None

    def result(outcome, reason=None):
        return Classification(outcome, reason, cd.a_number, ss, tp, cd)

    if ss.verdict is Verdict.NOT_SUPERSINGULAR:
        return result(Outcome.NOT_APPLICABLE, Reason.NOT_SUPERSINGULAR)
    if cd.a_number != 1:
        return result(Outcome.NOT_APPLICABLE, Reason.A_NUMBER_NOT_1)
    if ss.verdict is Verdict.INDETERMINATE:
        return result(Outcome.NOT_APPLICABLE, Reason.INDETERMINATE)
    if tp is None:
        raise InternalInvariantError("supersingular curve with non-nilpotent Cartier operator")
    return result(Outcome.NON_TRANSVERSAL if tp.found else Outcome.TRANSVERSAL)
