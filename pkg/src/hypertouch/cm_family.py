"""Reductions of the CM curve y^2 = x^7 + 7x^5 + 14x^3 + 7x.

The Jacobian has CM by Q(zeta_7 + zeta_7^-1, i).  For p = 3 mod 4 the
reduction is supersingular with a-number 1; it has a touchpoint for the
Cartier operator when p = +-2 mod 7 and none when p = +-3 mod 7.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .curve import Curve, make_curve
from .errors import BadReduction, NotPrime, PreconditionViolated
from .field import build_field, is_prime
from .poly import Poly
from .touchpoint import Classification, Outcome, classify
from .zeta import DEFAULT_BUDGET

CM_COEFFS = (0, 7, 0, 14, 0, 7, 0, 1)  # ascending


class PrimeClass(str, enum.Enum):
    TOUCHPOINT = "TouchpointClass"
    TRANSVERSAL = "TransversalClass"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class PrimeClassification:
    p: int
    cls: PrimeClass
    reason: str = ""


def cm_curve(p: int) -> Curve:
    if p in (2, 7):
        raise BadReduction(f"the CM curve has bad reduction at {p}")
    ctx = build_field(p)
    return make_curve(ctx, Poly(ctx, CM_COEFFS))


def classify_prime(p: int) -> PrimeClassification:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p in (2, 7):
        return PrimeClassification(p, PrimeClass.OUT_OF_SCOPE, f"bad reduction at {p}")
    if p % 4 != 3:
        return PrimeClassification(p, PrimeClass.OUT_OF_SCOPE, f"p = {p % 4} mod 4, need 3 mod 4")
    r = p % 7
    if r in (2, 5):
        return PrimeClassification(p, PrimeClass.TOUCHPOINT)
    if r in (3, 4):
        return PrimeClassification(p, PrimeClass.TRANSVERSAL)
    return PrimeClassification(p, PrimeClass.OUT_OF_SCOPE, f"p = {r} mod 7, need +-2 or +-3 mod 7")


_EXPECTED = {PrimeClass.TOUCHPOINT: Outcome.NON_TRANSVERSAL, PrimeClass.TRANSVERSAL: Outcome.TRANSVERSAL}


@dataclass(frozen=True)
class CMReport:
    p: int
    prime_class: PrimeClass
    classification: Classification
    passed: bool

    def to_json(self) -> dict:
        d = self.classification.to_json()
        d.update(p=self.p, prime_class=self.prime_class.value, **{"pass": self.passed})
        return d


def verify_cm_prediction(p: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> CMReport:
    pc = classify_prime(p)
    if pc.cls is PrimeClass.OUT_OF_SCOPE:
        raise PreconditionViolated(f"no prediction at p = {p}: {pc.reason}")
    c = classify(cm_curve(p), budget, workers)
    passed = c.outcome is _EXPECTED[pc.cls] and c.a_number == 1
    return CMReport(p, pc.cls, c, passed)


def pftq_component_count(p: int) -> int:
    """Irreducible components of the supersingular locus through an a = 3 point."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p**5 + p**2 + 1
