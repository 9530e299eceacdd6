"""Exact arithmetic in Z[zeta_e] in the power basis reduced modulo Phi_e."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import divisors, mobius, totient


class OrderMismatch(ValueError):
    pass


class NotCoprime(ValueError):
    pass


class NotDivisible(ValueError):
    pass


class EvenM(ValueError):
    pass


class NonRationalTrace(ArithmeticError):
    pass


def phi(e: int) -> int:
    return int(totient(e))


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low -> high), den monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dd]
        quot[i] = c
        if c:
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("non-zero remainder in cyclotomic division")
    return quot


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of Phi_e(x) by dividing x^e - 1 by Phi_d, d | e, d < e."""
    if e < 1:
        raise ValueError("order must be >= 1")
    num = [-1] + [0] * (e - 1) + [1]
    den = [1]
    for d in divisors(e)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_poly_divexact(num, den))


@lru_cache(maxsize=None)
def _power_reduction(e: int) -> tuple[tuple[int, ...], ...]:
    """Row m holds the canonical coordinates of x^m mod Phi_e, for 0 <= m < e."""
    f = cyclotomic_polynomial(e)
    n = len(f) - 1
    rows = []
    cur = [1] + [0] * (n - 1)
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by x, then fold the x^n term using the monic Phi_e
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * f[i]
    return tuple(rows)


@dataclass(frozen=True)
class CycPoly:
    """Exponent-vector accumulator: coeffs[m] is the multiplicity of zeta_e^m."""

    order: int
    coeffs: tuple[int, ...]

    @classmethod
    def zero(cls, e: int) -> "CycPoly":
        return cls(e, (0,) * e)


@dataclass(frozen=True)
class CycInt:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != phi(self.order):
            raise ValueError(f"expected {phi(self.order)} coordinates, got {len(self.coeffs)}")

    # constructors
    @classmethod
    def const(cls, e: int, c: int) -> "CycInt":
        return cls(e, (int(c),) + (0,) * (phi(e) - 1))

    @classmethod
    def zeta(cls, e: int, m: int = 1) -> "CycInt":
        return cls(e, _power_reduction(e)[m % e])

    @classmethod
    def from_exponents(cls, e: int, vec) -> "CycInt":
        return canonicalize(CycPoly(e, tuple(int(c) for c in vec)))

    # arithmetic
    def _check(self, other):
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatch(f"{self.order} != {other.order}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = CycInt.const(self.order, other)
        other = self._check(other)
        return CycInt(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycInt.const(self.order, other)
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.order, tuple(other * x for x in self.coeffs))
        other = self._check(other)
        e = self.order
        vec = [0] * e
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        vec[(i + j) % e] += x * y
        return canonicalize(CycPoly(e, tuple(vec)))

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> "CycInt":
        return cls(int(obj["order"]), tuple(int(c) for c in obj["coeffs"]))


def canonicalize(poly: CycPoly) -> CycInt:
    e = poly.order
    red = _power_reduction(e)
    n = phi(e)
    out = [0] * n
    for m, c in enumerate(poly.coeffs):
        if c:
            row = red[m % e]
            for i in range(n):
                if row[i]:
                    out[i] += c * row[i]
    return CycInt(e, tuple(out))


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_sub(a: CycInt, b: CycInt) -> CycInt:
    return a - b


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def cyc_scale(a: CycInt, c: int) -> CycInt:
    return a * int(c)


def to_exponents(a: CycInt) -> CycPoly:
    return CycPoly(a.order, tuple(a.coeffs) + (0,) * (a.order - len(a.coeffs)))


def conjugate(a: CycInt, s: int) -> CycInt:
    """Apply the automorphism zeta_e -> zeta_e^s."""
    e = a.order
    if math.gcd(s, e) != 1:
        raise NotCoprime(f"gcd({s}, {e}) != 1")
    vec = [0] * e
    for i, c in enumerate(a.coeffs):
        vec[(s * i) % e] += c
    return canonicalize(CycPoly(e, tuple(vec)))


def units(e: int) -> list[int]:
    return [s for s in range(1, e + 1) if math.gcd(s, e) == 1]


def trace_to_Q(a: CycInt) -> int:
    """Trace to Q as the sum of all Galois conjugates."""
    e = a.order
    vec = [0] * e
    for s in units(e):
        for i, c in enumerate(a.coeffs):
            vec[(s * i) % e] += c
    total = canonicalize(CycPoly(e, tuple(vec)))
    if not total.is_rational():
        raise NonRationalTrace(total.coeffs)
    return total.coeffs[0]


@lru_cache(maxsize=None)
def power_traces(e: int) -> tuple[int, ...]:
    """Tr(zeta_e^t) for t = 0..e-1 via mu(e/g) phi(e)/phi(e/g), g = gcd(t, e)."""
    out = []
    for t in range(e):
        g = math.gcd(t, e)
        out.append(int(mobius(e // g)) * phi(e) // phi(e // g))
    return tuple(out)


def trace_mobius(a: CycInt) -> int:
    tr = power_traces(a.order)
    return sum(c * tr[i] for i, c in enumerate(a.coeffs))


def lift_order(a: CycInt, from_e: int, to_E: int) -> CycInt:
    if a.order != from_e:
        raise OrderMismatch(f"{a.order} != {from_e}")
    if to_E % from_e:
        raise NotDivisible(f"{from_e} does not divide {to_E}")
    step = to_E // from_e
    vec = [0] * to_E
    for i, c in enumerate(a.coeffs):
        vec[i * step] += c
    return canonicalize(CycPoly(to_E, tuple(vec)))


def collapse_to_odd(a: CycInt) -> CycInt:
    """Rewrite an element of Z[zeta_2m] (m odd) in Z[zeta_m] via zeta_2m = -zeta_m^((m+1)/2)."""
    e = a.order
    if e % 2:
        raise EvenM(f"order {e} is odd")
    m = e // 2
    if m % 2 == 0:
        raise EvenM(f"m = {m} is even")
    h = (m + 1) // 2
    vec = [0] * m
    for i, c in enumerate(a.coeffs):
        vec[(h * i) % m] += -c if i % 2 else c
    return canonicalize(CycPoly(m, tuple(vec)))


def expand_from_odd(a: CycInt) -> CycInt:
    """Inverse of collapse_to_odd: zeta_m = zeta_2m^2."""
    return lift_order(a, a.order, 2 * a.order)


def embed_numeric(a: CycInt, k: int = 1) -> complex:
    e = a.order
    if math.gcd(k, e) != 1:
        raise NotCoprime(f"gcd({k}, {e}) != 1")
    z = cmath.exp(2j * math.pi * k / e)
    total = 0j
    for c in reversed(a.coeffs):
        total = total * z + c
    return total
