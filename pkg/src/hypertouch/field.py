"""Exact arithmetic in F_p and F_{p^k} for odd p and k <= 6.

Elements of F_{p^k} are coefficient vectors (c_0, ..., c_{k-1}) with respect to
the power basis 1, t, ..., t^{k-1} of F_p[t]/(modulus).  Coordinates are plain
Python ints, so p is only bounded by the machine-word cap below.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)

MAX_P = 2**31  # p^2 must fit a signed 64-bit word (the numpy counting kernels rely on it)
MAX_K = 6


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- small helpers on int lists over F_p (ascending, no trailing zeros) ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([x % p for x in out])


def _ppowmod(a: list[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(h: Sequence[int], p: int) -> bool:
    """Rabin's test: h | t^(p^k) - t and gcd(t^(p^(k/l)) - t, h) = 1 for primes l | k."""
    h = _trim([x % p for x in h])
    k = len(h) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    t = [0, 1]

    def t_pow_p_pow(r: int) -> list[int]:
        x = t
        for _ in range(r):
            x = _ppowmod(x, p, h, p)
        return x

    full = t_pow_p_pow(k)
    if _trim([(a - b) % p for a, b in itertools.zip_longest(full, t, fillvalue=0)]):
        return False
    for ell in prime_factors(k):
        x = t_pow_p_pow(k // ell)
        diff = _trim([(a - b) % p for a, b in itertools.zip_longest(x, t, fillvalue=0)])
        if len(_pgcd(h, diff, p)) != 1:
            return False
    return True


# -- field context -------------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None  # ascending, monic, length k+1; None when k == 1

    @property
    def q(self) -> int:
        return self.p**self.k

    def __call__(self, value) -> "FieldElement":
        """Coerce an int or a coordinate vector into this field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldMismatch(f"element of {value.ctx} used in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        rep = tuple(int(c) % self.p for c in value)
        if len(rep) > self.k:
            raise ValueError(f"vector of length {len(rep)} in a degree-{self.k} field")
        return FieldElement(self, rep + (0,) * (self.k - len(rep)))

    @property
    def zero(self) -> "FieldElement":
        return self(0)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of t (equals 1 in a prime field)."""
        return self((0, 1)) if self.k > 1 else self.one

    def from_index(self, n: int) -> "FieldElement":
        rep = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            rep.append(r)
        return FieldElement(self, tuple(rep))

    def elements(self) -> Iterator["FieldElement"]:
        for i in range(self.q):
            yield self.from_index(i)

    def random(self, rng: random.Random, nonzero: bool = False) -> "FieldElement":
        lo = 1 if nonzero else 0
        return self.from_index(rng.randrange(lo, self.q))

    def _reduce(self, prod: list[int]) -> tuple[int, ...]:
        p, k, m = self.p, self.k, self.modulus
        # modulus is monic: t^k = -(m_0 + ... + m_{k-1} t^{k-1})
        for d in range(len(prod) - 1, k - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(k):
                    prod[d - k + i] -= c * m[i]
            prod[d] = 0
        return tuple(x % p for x in prod[:k])

    def __str__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}) mod {list(self.modulus)}"


def build_field(
    p: int, k: int = 1, modulus: Sequence[int] | None = None, *, max_k: int = MAX_K
) -> FieldCtx:
    """Return F_{p^k}.

    Without an explicit ``modulus`` the lexicographically smallest monic
    irreducible polynomial is used, comparing (c_0, c_1, ...) low degree first.
    """
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p >= MAX_P:
        raise NotPrime(f"p={p} exceeds the supported word-size cap {MAX_P}")
    if modulus is not None:
        m = [int(c) % p for c in modulus]
        _trim(m)
        k = len(m) - 1
        if not 1 <= k <= max_k:
            raise DegreeOutOfRange(f"modulus degree {k} outside 1..{max_k}")
        if m[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not is_irreducible_mod_p(m, p):
            raise ReducibleModulus(f"{m} is reducible over GF({p})")
        if k == 1:
            return FieldCtx(p, 1, None)
        return FieldCtx(p, k, tuple(m))
    if not 1 <= k <= max_k:
        raise DegreeOutOfRange(f"extension degree {k} outside 1..{max_k}")
    if k == 1:
        return FieldCtx(p, 1, None)
    for low in itertools.product(range(p), repeat=k):
        if low[0] == 0:
            continue  # divisible by t
        cand = list(low) + [1]
        if is_irreducible_mod_p(cand, p):
            return FieldCtx(p, k, tuple(cand))
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class FieldElement:
    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: FieldCtx, rep: tuple[int, ...]):
        self.ctx = ctx
        self.rep = rep

    def _other(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatch(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.rep, o.rep)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-a % p for a in self.rep))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a - b) % p for a, b in zip(self.rep, o.rep)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        if ctx.k == 1:
            return FieldElement(ctx, (self.rep[0] * o.rep[0] % ctx.p,))
        prod = [0] * (2 * ctx.k - 1)
        for i, a in enumerate(self.rep):
            if a:
                for j, b in enumerate(o.rep):
                    prod[i + j] += a * b
        return FieldElement(ctx, ctx._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.ctx.k == 1:
            return FieldElement(self.ctx, (pow(self.rep[0], -1, self.ctx.p),))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.ctx(other) * self.inv()

    def __bool__(self):
        return any(self.rep)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.rep == other.rep

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.modulus, self.rep))

    def index(self) -> int:
        """Inverse of ``FieldCtx.from_index``: sum c_i p^i."""
        n = 0
        for c in reversed(self.rep):
            n = n * self.ctx.p + c
        return n

    def is_prime_field_element(self) -> bool:
        return not any(self.rep[1:])

    def __int__(self):
        if not self.is_prime_field_element():
            raise ValueError(f"{self!r} is not in the prime field")
        return self.rep[0]

    def __repr__(self):
        if self.ctx.k == 1:
            return str(self.rep[0])
        terms = []
        for i, c in enumerate(self.rep):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*t" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms) or "0"


def frobenius(x: FieldElement, r: int = 1) -> FieldElement:
    """x^(p^r)."""
    r %= x.ctx.k
    if r == 0 or x.ctx.k == 1:
        return x
    return x ** (x.ctx.p**r)


def quadratic_character(x: FieldElement) -> int:
    if not x:
        return 0
    y = x ** ((x.ctx.q - 1) // 2)
    return 1 if y == x.ctx.one else -1

