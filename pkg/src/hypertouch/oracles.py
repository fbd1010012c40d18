"""Brute-force reference implementations for the test suite.

Nothing in the main pipeline imports this module.  The oracles deliberately
avoid Poly multiplication, the cartier helpers and the search shortcuts.
"""
from __future__ import annotations

import itertools

from .curve import Curve, invert_model, make_curve, shift_model
from .errors import NotSquarefree
from .field import FieldElement, build_field
from .poly import Embedding, Poly
from .touchpoint import INFINITY, Outcome, classify


def _naive_times(a: list[FieldElement], b: list[FieldElement]) -> list[FieldElement]:
    zero = a[0].ctx.zero
    out = [zero for _ in range(len(a) + len(b) - 1)]
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def naive_matrix_oracle(C: Curve) -> list[list[FieldElement]]:
    """Expand f^((p-1)/2) one factor at a time and read off c_{ip-j}."""
    p = C.ctx.p
    f = list(C.f.coeffs)
    h = [C.ctx.one]
    for _ in range((p - 1) // 2):
        h = _naive_times(h, f)

    def c(n):
        return h[n] if 0 <= n < len(h) else C.ctx.zero

    return [[c(i * p - j) for j in (1, 2, 3)] for i in (1, 2, 3)]


def _shape_ok(M) -> bool:
    zeros = [M[0][0], M[0][1], M[0][2], M[1][1], M[1][2], M[2][2]]
    return all(z == z.ctx.zero for z in zeros)


def exhaustive_touchpoint_oracle(C: Curve) -> set:
    """Every x0 in F_{q^2} (plus infinity) whose recentred model has the triangular shape.

    Finite locations are returned as elements of the quadratic extension.
    """
    ctx = C.ctx
    big = build_field(ctx.p, 2 * ctx.k, max_k=12)
    emb = Embedding(ctx, big)
    Cbig = Curve(big, emb.poly(C.f))
    hits: set = set()
    for x0 in big.elements():
        if _shape_ok(naive_matrix_oracle(shift_model(Cbig, x0))):
            hits.add(x0)
    if _shape_ok(naive_matrix_oracle(invert_model(Cbig))):
        hits.add(INFINITY)
    return hits


def family_polynomial(p: int, family: str, coeffs: tuple[int, ...]) -> list[int]:
    """Ascending integer coefficients of x^7 + ... for a family tuple (descending order)."""
    if family == "odd":
        a5, a3, a1 = coeffs
        return [0, a1, 0, a3, 0, a5, 0, 1]
    return list(reversed(coeffs)) + [1]


def no_shortcut_search_oracle(p: int, family: str) -> list[tuple[int, ...]]:
    """Classify every tuple of the family with the full pipeline; return NonTransversal tuples."""
    ctx = build_field(p)
    arity = 3 if family == "odd" else 7
    hits = []
    for t in itertools.product(range(p), repeat=arity):
        try:
            C = make_curve(ctx, Poly(ctx, family_polynomial(p, family, t)))
        except NotSquarefree:
            continue
        if classify(C).outcome is Outcome.NON_TRANSVERSAL:
            hits.append(t)
    return hits
