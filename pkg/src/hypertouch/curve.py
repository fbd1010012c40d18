"""Genus-3 hyperelliptic models y^2 = f(x) with deg f in {7, 8}.

Model changes (shift, inversion) are isomorphisms defined over the base field,
so they preserve point counts as well as every geometric invariant.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import BadDegree, EvenCharacteristic, NotSquarefree
from .field import FieldCtx, FieldElement, build_field
from .poly import Poly, is_squarefree, reverse8, shift


@dataclass(frozen=True, eq=True)
class Curve:
    ctx: FieldCtx
    f: Poly

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def model_degree(self) -> int:
        return self.f.degree

    def __str__(self):
        return f"y^2 = {self.f!r} over {self.ctx}"

    def to_json(self) -> dict:
        d = {"p": self.ctx.p, "k": self.ctx.k}
        if self.ctx.modulus is not None:
            d["modulus"] = list(self.ctx.modulus)
        d["f"] = self.f.reps()
        return d

    @classmethod
    def from_json(cls, data: dict | str) -> "Curve":
        if isinstance(data, str):
            data = json.loads(data)
        ctx = build_field(int(data["p"]), int(data.get("k", 1)), data.get("modulus"))
        if ctx.k != int(data.get("k", ctx.k)):
            raise BadDegree("k disagrees with the modulus degree")
        return make_curve(ctx, Poly(ctx, [_coerce_coeff(c) for c in data["f"]]))


def _coerce_coeff(c):
    if isinstance(c, (list, tuple)):
        return [int(v) for v in c]
    return int(c)


def make_curve(ctx: FieldCtx, f: Poly | list) -> Curve:
    if ctx.p == 2:
        raise EvenCharacteristic("characteristic 2")
    if not isinstance(f, Poly):
        f = Poly(ctx, f)
    if f.degree not in (7, 8):
        raise BadDegree(f"deg f = {f.degree}, expected 7 or 8")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f!r} has a repeated factor")
    return Curve(ctx, f)


def shift_model(C: Curve, c: FieldElement | int) -> Curve:
    """y^2 = f(x + c); the point with x = x0 moves to x = x0 - c."""
    return Curve(C.ctx, shift(C.f, c))


def invert_model(C: Curve) -> Curve:
    """y^2 = x^8 f(1/x) via (x, y) -> (1/x, y/x^4); the fibres over 0 and infinity swap."""
    return Curve(C.ctx, reverse8(C.f))


def rescale_model(C: Curve, u: FieldElement | int) -> Curve:
    """y^2 = u^2 f(x), isomorphic over the base field through y -> u y."""
    u = C.ctx(u)
    return Curve(C.ctx, C.f * (u * u))
