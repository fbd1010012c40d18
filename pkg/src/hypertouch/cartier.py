"""Cartier-Manin matrix and the kernels of the (semilinear) Cartier operator.

Convention: on the basis dx/y, x dx/y, x^2 dx/y the Cartier operator acts as
v -> (M v)^(1/p).  Hence ker C = ker M, ker C^2 = ker(M^(p) M) and
C^3 = 0 iff M^(p^2) M^(p) M = 0, where M^(p^r) raises every entry to p^r.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve import Curve
from .field import FieldCtx, FieldElement, frobenius
from .poly import poly_pow

Matrix = tuple[tuple[FieldElement, ...], ...]
Vector = tuple[FieldElement, ...]


# -- small dense linear algebra over F_q ----------------------------------------

def mat(ctx: FieldCtx, rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(ctx(x) for x in row) for row in rows)


def identity(ctx: FieldCtx, n: int = 3) -> Matrix:
    return tuple(tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    ctx = A[0][0].ctx
    n, m, l = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(l):
            acc = ctx.zero
            for t in range(m):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_frobenius(A: Matrix, r: int = 1) -> Matrix:
    return tuple(tuple(frobenius(x, r) for x in row) for row in A)


def is_zero_matrix(A: Matrix) -> bool:
    return not any(x for row in A for x in row)


def rref(A: Sequence[Sequence[FieldElement]]) -> tuple[list[list[FieldElement]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = [list(row) for row in A]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = R[r][c].inv()
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def echelon_basis(vectors: Sequence[Sequence[FieldElement]]) -> tuple[Vector, ...]:
    """Canonical basis of the span: nonzero rows of the RREF."""
    if not vectors:
        return ()
    R, piv = rref(vectors)
    return tuple(tuple(row) for row in R[: len(piv)])


def nullspace(A: Matrix) -> tuple[Vector, ...]:
    """Echelonized basis of {v : A v = 0}."""
    ctx = A[0][0].ctx
    n = len(A[0])
    R, piv = rref(A)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for fc in free:
        v = [ctx.zero] * n
        v[fc] = ctx.one
        for row, pc in zip(R, piv):
            v[pc] = -row[fc]
        basis.append(v)
    return echelon_basis(basis)


def mat_vec(A: Matrix, v: Sequence[FieldElement]) -> Vector:
    ctx = A[0][0].ctx
    out = []
    for row in A:
        acc = ctx.zero
        for a, b in zip(row, v):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


# -- Cartier-Manin data ------------------------------------------------------------

@dataclass(frozen=True)
class CartierData:
    M: Matrix
    a_number: int
    ker1: tuple[Vector, ...]  # ker C
    ker2: tuple[Vector, ...]  # ker C^2
    nilpotent: bool
    p_rank: int

    def to_json(self) -> dict:
        return {
            "M": [list(x.rep) for row in self.M for x in row],
            "a_number": self.a_number,
            "p_rank": self.p_rank,
            "nilpotent": self.nilpotent,
            "ker1": [[list(x.rep) for x in v] for v in self.ker1],
            "ker2": [[list(x.rep) for x in v] for v in self.ker2],
        }


def cartier_manin_matrix(C: Curve) -> Matrix:
    p = C.ctx.p
    h = poly_pow(C.f, (p - 1) // 2)
    return tuple(tuple(h[i * p - j] for j in range(1, 4)) for i in range(1, 4))


def cartier_manin(C: Curve) -> CartierData:
    return cartier_data(cartier_manin_matrix(C))


def cartier_data(M: Matrix) -> CartierData:
    return CartierData(
        M=M,
        a_number=3 - rank(M),
        ker1=semilinear_kernel(M, 1),
        ker2=semilinear_kernel(M, 2),
        nilpotent=is_zero_matrix(cube(M)),
        p_rank=p_rank(M),
    )


def square(M: Matrix) -> Matrix:
    """Matrix of C^2, i.e. M^(p) M."""
    return mat_mul(mat_frobenius(M, 1), M)


def cube(M: Matrix) -> Matrix:
    """Matrix of C^3, i.e. M^(p^2) M^(p) M."""
    return mat_mul(mat_frobenius(M, 2), square(M))


def semilinear_kernel(M: Matrix, depth: int = 1) -> tuple[Vector, ...]:
    if depth == 1:
        return nullspace(M)
    if depth == 2:
        return nullspace(square(M))
    raise ValueError("depth must be 1 or 2")


def p_rank(M: Matrix) -> int:
    return rank(cube(M))


def is_strictly_lower_triangular(M: Matrix) -> bool:
    return all(not M[i][j] for i in range(3) for j in range(i, 3))
