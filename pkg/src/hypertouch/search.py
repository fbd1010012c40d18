"""Exhaustive search of coefficient families for non-transversal points.

Tuples are enumerated in lexicographic order.  A vectorized prefilter computes
the Cartier-Manin matrices of a whole block at once and keeps only tuples with
a-number 1, nilpotent matrix and a square kernel quadratic; those survivors go
through the full classification (squarefreeness, filtration check, counting).
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .curve import make_curve
from .errors import InvalidInput, NotSquarefree
from .field import build_field
from .poly import Poly
from .touchpoint import INFINITY, Outcome, Reason, classify
from .zeta import DEFAULT_BUDGET

FAMILY_ARITY = {"odd": 3, "general": 7}
BLOCK = 1 << 15


@dataclass(frozen=True)
class SearchSpec:
    p: int
    family: str = "odd"
    budget: int = DEFAULT_BUDGET
    prefix: tuple[int, ...] = ()  # fixed leading entries of the tuple

    def __post_init__(self):
        build_field(self.p)  # validates p
        if self.family not in FAMILY_ARITY:
            raise InvalidInput(f"unknown family {self.family!r}")
        if len(self.prefix) >= self.arity:
            raise InvalidInput("prefix leaves no free coefficient")
        object.__setattr__(self, "prefix", tuple(int(c) % self.p for c in self.prefix))

    @property
    def arity(self) -> int:
        return FAMILY_ARITY[self.family]

    @property
    def free(self) -> int:
        return self.arity - len(self.prefix)

    @property
    def size(self) -> int:
        return self.p**self.free


@dataclass(frozen=True)
class Hit:
    coefficients: tuple[int, ...]  # (a5, a3, a1) or (a6, ..., a0)
    f: tuple[int, ...]  # ascending
    a_number: int
    verdict: str
    location: list[int] | str

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "f": list(self.f),
            "a_number": self.a_number,
            "verdict": self.verdict,
            "location": self.location,
        }


@dataclass
class RangeResult:
    hits: list[Hit] = field(default_factory=list)
    tested: int = 0
    skipped: int = 0
    survivors: int = 0


@dataclass
class SearchResult:
    hits: list[Hit]
    tested: int
    skipped: int
    survivors: int
    wall_time: float

    def summary(self) -> dict:
        return {
            "tested": self.tested,
            "skipped": self.skipped,
            "survivors": self.survivors,
            "hits": len(self.hits),
            "wall_time": round(self.wall_time, 3),
        }


def family_polynomial(family: str, t: tuple[int, ...]) -> list[int]:
    """Ascending coefficients of the monic degree-7 member of the family."""
    if family == "odd":
        a5, a3, a1 = t
        return [0, a1, 0, a3, 0, a5, 0, 1]
    return list(reversed(t)) + [1]


def _tuples(spec: SearchSpec, lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi, dtype=np.int64)
    cols = []
    for _ in range(spec.free):
        idx, r = np.divmod(idx, spec.p)
        cols.append(r)
    cols.reverse()
    pre = [np.full(hi - lo, c, dtype=np.int64) for c in spec.prefix]
    return np.stack(pre + cols, axis=1)


def _family_arrays(family: str, T: np.ndarray) -> np.ndarray:
    B = T.shape[0]
    F = np.zeros((B, 8), dtype=np.int64)
    F[:, 7] = 1
    if family == "odd":
        F[:, 5], F[:, 3], F[:, 1] = T[:, 0], T[:, 1], T[:, 2]
    else:
        F[:, :7] = T[:, ::-1]
    return F


def cartier_matrices(p: int, F: np.ndarray) -> np.ndarray:
    """Cartier-Manin matrices (B, 3, 3) over F_p for a block of polynomials F (B, deg+1)."""
    L = 3 * p  # only c_0 .. c_{3p-1} are ever read
    B = F.shape[0]
    h = np.zeros((B, L), dtype=np.int64)
    h[:, 0] = 1
    support = [j for j in range(F.shape[1]) if F[:, j].any()]
    for _ in range((p - 1) // 2):
        nxt = np.zeros_like(h)
        for j in support:
            if j < L:
                nxt[:, j:] += F[:, j : j + 1] * h[:, : L - j]
        h = nxt % p
    M = np.empty((B, 3, 3), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            M[:, i, j] = h[:, (i + 1) * p - (j + 1)]
    return M


def prefilter(p: int, M: np.ndarray) -> np.ndarray:
    """Mask of matrices with rank 2, M^3 = 0 and a kernel quadratic of zero discriminant."""
    cof = np.empty_like(M)
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [y for y in range(3) if y != j]
            minor = M[:, r[0], c[0]] * M[:, r[1], c[1]] - M[:, r[0], c[1]] * M[:, r[1], c[0]]
            cof[:, i, j] = (-1) ** (i + j) * minor % p
    det = (M[:, 0, :] * cof[:, 0, :]).sum(axis=1) % p
    rank2 = (det == 0) & cof.reshape(len(M), 9).any(axis=1)
    M2 = np.einsum("bij,bjk->bik", M, M) % p
    M3 = np.einsum("bij,bjk->bik", M2, M) % p
    nilpotent = ~M3.reshape(len(M), 9).any(axis=1)
    # columns of adj(M) = rows of the cofactor matrix span ker M when rank M = 2
    kern = np.zeros((len(M), 3), dtype=np.int64)
    chosen = np.zeros(len(M), dtype=bool)
    for i in range(3):
        row = cof[:, i, :]
        take = ~chosen & row.any(axis=1)
        kern[take] = row[take]
        chosen |= take
    disc = (kern[:, 1] * kern[:, 1] - 4 * kern[:, 0] * kern[:, 2]) % p
    return rank2 & nilpotent & (disc == 0)


def _search_range(spec: SearchSpec, lo: int, hi: int) -> RangeResult:
    ctx = build_field(spec.p)
    out = RangeResult()
    for a in range(lo, hi, BLOCK):
        b = min(hi, a + BLOCK)
        T = _tuples(spec, a, b)
        mask = prefilter(spec.p, cartier_matrices(spec.p, _family_arrays(spec.family, T)))
        out.tested += b - a
        for row in T[mask]:
            t = tuple(int(v) for v in row)
            out.survivors += 1
            fc = family_polynomial(spec.family, t)
            try:
                C = make_curve(ctx, Poly(ctx, fc))
            except NotSquarefree:
                continue
            c = classify(C, spec.budget)
            if c.reason is Reason.INDETERMINATE:
                out.skipped += 1
            elif c.outcome is Outcome.NON_TRANSVERSAL:
                tp = c.touchpoint
                loc = INFINITY if tp.at_infinity else list(tp.location.rep)
                out.hits.append(Hit(t, tuple(fc), c.a_number, c.supersingularity.verdict.value, loc))
    return out


def _ranges(spec: SearchSpec, workers: int) -> list[tuple[int, int]]:
    n = spec.size
    parts = max(1, workers * 4) if workers > 1 else 1
    step = max(BLOCK, -(-n // parts))
    return [(lo, min(n, lo + step)) for lo in range(0, n, step)]


def _search_task(args):
    spec, lo, hi = args
    return _search_range(spec, lo, hi)


def iter_search(spec: SearchSpec, workers: int = 1) -> Iterator[RangeResult]:
    """Per-range results in lexicographic order, independent of the worker count."""
    ranges = _ranges(spec, workers)
    if workers <= 1:
        for lo, hi in ranges:
            yield _search_range(spec, lo, hi)
        return
    with ProcessPoolExecutor(workers) as ex:
        yield from ex.map(_search_task, [(spec, lo, hi) for lo, hi in ranges])


def run_search(spec: SearchSpec, workers: int = 1) -> SearchResult:
    start = time.perf_counter()
    total = RangeResult()
    for r in iter_search(spec, workers):
        total.hits.extend(r.hits)
        total.tested += r.tested
        total.skipped += r.skipped
        total.survivors += r.survivors
    return SearchResult(total.hits, total.tested, total.skipped, total.survivors, time.perf_counter() - start)
