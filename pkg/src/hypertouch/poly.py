"""Dense univariate polynomials over a FieldCtx, ascending coefficient order."""
from __future__ import annotations

import random
from typing import Iterable, Sequence

import numpy as np

from .errors import DegreeOutOfRange, DivisionByZero, FieldMismatch, ZeroPolynomial
from .field import FieldCtx, FieldElement

# numpy products are used while every partial sum stays below 2^62
_INT64_SAFE = 2**62


class Poly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, c=1) -> "Poly":
        return cls(ctx, [0] * n + [c])

    @classmethod
    def random(cls, ctx: FieldCtx, degree: int, rng: random.Random, monic: bool = False) -> "Poly":
        cs = [ctx.random(rng) for _ in range(degree)]
        cs.append(ctx.one if monic else ctx.random(rng, nonzero=True))
        return cls(ctx, cs)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                cs = repr(c)
                if " + " in cs:
                    cs = f"({cs})"
                terms.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return " + ".join(reversed(terms)) or "0"

    def reps(self) -> list[list[int]]:
        return [list(c.rep) for c in self.coeffs]

    def _check(self, other: "Poly"):
        if other.ctx != self.ctx:
            raise FieldMismatch(f"{self.ctx} vs {other.ctx}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly(self.ctx, [other])
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ctx, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly(self.ctx, [other])
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.ctx(other)
            return Poly(self.ctx, [a * c for a in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self or not other:
            return Poly(self.ctx)
        if min(len(self.coeffs), len(other.coeffs)) > 8 and _numpy_ok(self.ctx, self.degree + other.degree + 1):
            return _from_array(self.ctx, _mul_arrays(self.ctx, _to_array(self), _to_array(other)))
        out = [self.ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(self.ctx), self
        inv_lc = other.lc.inv()
        quo = [self.ctx.zero] * (dq + 1)
        d = other.degree
        for s in range(dq, -1, -1):
            c = rem[s + d] * inv_lc
            quo[s] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[s + i] = rem[s + i] - c * b
        return Poly(self.ctx, quo), Poly(self.ctx, rem[:d])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * self.lc.inv()

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    eval = __call__


def derivative(f: Poly) -> Poly:
    return Poly(f.ctx, [c * i for i, c in enumerate(f.coeffs)][1:])


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while g:
        f, g = g, f % g
    return f.monic()


def poly_pow(f: Poly, e: int) -> Poly:
    """f^e by square-and-multiply."""
    if e < 0:
        raise ValueError("negative exponent")
    ctx = f.ctx
    if e == 0:
        return Poly(ctx, [1])
    if not f:
        return f
    if _numpy_ok(ctx, f.degree * e + 1):
        base = _to_array(f)
        result = None
        while e:
            if e & 1:
                result = base if result is None else _mul_arrays(ctx, result, base)
            e >>= 1
            if e:
                base = _mul_arrays(ctx, base, base)
        return _from_array(ctx, result)
    result = Poly(ctx, [1])
    base = f
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def powmod(f: Poly, e: int, m: Poly) -> Poly:
    result = Poly(f.ctx, [1])
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


def is_squarefree(f: Poly) -> bool:
    if not f:
        raise ZeroPolynomial("squarefreeness of the zero polynomial")
    return gcd(f, derivative(f)).degree == 0


def shift(f: Poly, c) -> Poly:
    """f(x + c), by Horner's rule in the shifted variable."""
    c = f.ctx(c)
    acc = Poly(f.ctx)
    lin = Poly(f.ctx, [c, 1])
    for a in reversed(f.coeffs):
        acc = acc * lin + a
    return acc


def reverse8(f: Poly) -> Poly:
    """x^8 f(1/x) for deg f in {7, 8}."""
    if f.degree not in (7, 8):
        raise DegreeOutOfRange(f"reverse8 needs degree 7 or 8, got {f.degree}")
    return Poly(f.ctx, [f[8 - i] for i in range(9)])


def roots(f: Poly, rng: random.Random | None = None) -> list[FieldElement]:
    """All roots of f in its coefficient field, sorted by index (Cantor-Zassenhaus)."""
    if not f:
        raise ZeroPolynomial("roots of the zero polynomial")
    ctx = f.ctx
    rng = rng or random.Random(0)
    x = Poly(ctx, [0, 1])
    split = gcd(f, powmod(x, ctx.q, f) - x)
    found: list[FieldElement] = []
    stack = [split]
    while stack:
        h = stack.pop()
        if h.degree <= 0:
            continue
        if h.degree == 1:
            found.append(-h[0] / h[1])
            continue
        while True:
            delta = ctx.random(rng)
            g = gcd(h, powmod(Poly(ctx, [delta, 1]), (ctx.q - 1) // 2, h) - 1)
            if 0 < g.degree < h.degree:
                stack.extend([g, h // g])
                break
    return sorted(found, key=lambda r: r.index())


# -- numpy fast path -----------------------------------------------------------

def _numpy_ok(ctx: FieldCtx, length: int) -> bool:
    return length * ctx.k * (ctx.p - 1) ** 2 < _INT64_SAFE


def _to_array(f: Poly) -> np.ndarray:
    return np.array([c.rep for c in f.coeffs], dtype=np.int64).reshape(len(f.coeffs), f.ctx.k)


def _from_array(ctx: FieldCtx, a: np.ndarray) -> Poly:
    return Poly(ctx, [FieldElement(ctx, tuple(int(v) for v in row)) for row in a])


def _mul_arrays(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of coefficient arrays of shape (n, k) over F_{p^k}."""
    p, k = ctx.p, ctx.k
    n = a.shape[0] + b.shape[0] - 1
    if k == 1:
        return (np.convolve(a[:, 0], b[:, 0]) % p).reshape(n, 1)
    wide = np.zeros((n, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            wide[:, i + j] = (wide[:, i + j] + np.convolve(a[:, i], b[:, j])) % p
    m = ctx.modulus
    for d in range(2 * k - 2, k - 1, -1):
        top = wide[:, d]
        for i in range(k):
            if m[i]:
                wide[:, d - k + i] = (wide[:, d - k + i] - top * m[i]) % p
    return wide[:, :k] % p


class Embedding:
    """A field homomorphism F_{p^k} -> F_{p^n} (k | n), fixed by sending t to the least root."""

    def __init__(self, small: FieldCtx, big: FieldCtx):
        if small.p != big.p or big.k % small.k:
            raise FieldMismatch(f"{small} does not embed in {big}")
        self.small, self.big = small, big
        if small.k == 1:
            self.image_of_t = big.one
        else:
            self.image_of_t = roots(Poly(big, small.modulus))[0]
        pw = [big.one]
        for _ in range(small.k - 1):
            pw.append(pw[-1] * self.image_of_t)
        self._powers = pw

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.ctx != self.small:
            raise FieldMismatch(f"{x.ctx} vs {self.small}")
        acc = self.big.zero
        for c, w in zip(x.rep, self._powers):
            if c:
                acc = acc + w * c
        return acc

    def poly(self, f: Poly) -> Poly:
        return Poly(self.big, [self(c) for c in f.coeffs])
