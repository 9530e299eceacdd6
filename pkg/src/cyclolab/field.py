"""Finite fields F_{p^r}, generators of F_q^x and full discrete-log tables.

Elements of F_q are encoded as integers ``c0 + c1*p + ... + c_{r-1}*p^(r-1)``
where ``c0 + c1*x + ...`` is the residue-class polynomial modulo the defining
polynomial.  For prime fields the encoding is the residue itself.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sympy import factorint, isprime

DEFAULT_SIZE_BOUND = 2**31
CACHE_ENV = "CYCLOLAB_CACHE"


class FieldError(ValueError):
    pass


class NonPrime(FieldError):
    pass


class Reducible(FieldError):
    pass


class SizeExceeded(FieldError):
    pass


class NotAGenerator(FieldError):
    pass


# -- polynomials over F_p, coefficient lists low -> high ----------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = [c % p for c in a]
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(_trim(a)) - 1 >= df:
        a = _trim(a)
        shift = len(a) - 1 - df
        c = a[-1] * inv_lead % p
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
    return _trim(a)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, n, f, p):
    result = [1]
    base = _pmod(base, f, p)
    while n:
        if n & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        n >>= 1
    return result


def is_irreducible(poly, p) -> bool:
    """Rabin-style test for a monic polynomial over F_p (coefficients low -> high)."""
    f = _trim([c % p for c in poly])
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    for d in range(1, r):
        if r % d:
            continue
        h = _psub(_ppowmod(x, p**d, f, p), x, p)
        if len(_pgcd(f, h, p)) > 1:
            return False
    return _psub(_ppowmod(x, p**r, f, p), x, p) == []


def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    # lexicographic on (c0, c1, ..., c_{r-1}); leading coefficient fixed to 1
    for lower in itertools.product(range(p), repeat=r):
        poly = tuple(lower) + (1,)
        if poly[0] != 0 and is_irreducible(poly, p):
            return poly
    raise Reducible(f"no irreducible polynomial of degree {r} over F_{p}")


# -- field descriptor ---------------------------------------------------------

@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple[int, ...]

    def encode(self, p: int) -> int:
        return sum(c * p**i for i, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    r: int
    q: int
    defining_poly: tuple[int, ...]

    def element(self, code: int) -> FieldElement:
        coeffs = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs))

    def encode(self, x: FieldElement | int) -> int:
        if isinstance(x, FieldElement):
            return x.encode(self.p)
        return int(x)

    def mul(self, x: int, y: int) -> int:
        if self.r == 1:
            return x * y % self.p
        a = [c for c in self.element(x).coeffs]
        b = [c for c in self.element(y).coeffs]
        prod = _pmod(_pmul(a, b, self.p), list(self.defining_poly), self.p)
        return FieldElement(tuple(prod) + (0,) * (self.r - len(prod))).encode(self.p)

    def pow(self, x: int, n: int) -> int:
        if self.r == 1:
            return pow(x, n, self.p)
        result, base = 1, x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def add_one(self, x):
        """Encoding of v + 1; works elementwise on numpy arrays."""
        c0 = x % self.p
        return x - c0 + (c0 + 1) % self.p

    def neg_one(self) -> int:
        return self.p - 1

    def key(self) -> str:
        return f"{self.p}^{self.r}/poly=" + ",".join(map(str, self.defining_poly))


def make_field(p: int, r: int = 1, defining_poly=None, size_bound: int = DEFAULT_SIZE_BOUND) -> FieldDescriptor:
    if not isprime(p):
        raise NonPrime(f"{p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if r < 1:
        raise FieldError("extension degree must be >= 1")
    q = p**r
    if q < 7:
        raise FieldError(f"q = {q} is too small")
    if q > size_bound:
        raise SizeExceeded(f"q = {q} exceeds bound {size_bound}")
    if defining_poly is None:
        poly = (0, 1) if r == 1 else smallest_irreducible(p, r)
    else:
        poly = tuple(int(c) % p for c in defining_poly)
        if len(poly) != r + 1 or poly[-1] != 1:
            raise Reducible(f"defining polynomial must be monic of degree {r}: {defining_poly}")
        if r > 1 and not is_irreducible(poly, p):
            raise Reducible(poly)
    return FieldDescriptor(p, r, q, poly)


def has_full_order(field: FieldDescriptor, g: int) -> bool:
    if g == 0:
        return False
    n = field.q - 1
    return all(field.pow(g, n // ell) != 1 for ell in factorint(n))


def find_generator(field: FieldDescriptor) -> FieldElement:
    """Least element (by encoding, so constants first) of order q - 1."""
    for g in range(1, field.q):
        if has_full_order(field, g):
            return field.element(g)
    raise NotAGenerator("no generator found")  # unreachable for a field


def all_generators(field: FieldDescriptor) -> list[int]:
    g = field.encode(find_generator(field))
    n = field.q - 1
    return sorted(field.pow(g, s) for s in range(1, n) if np.gcd(s, n) == 1)


# -- discrete log table -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DLogTable:
    """index_of[code] = ind_gamma(element); index_of[0] = -1."""

    field: FieldDescriptor
    generator: int
    index_of: np.ndarray

    def __getitem__(self, x) -> int:
        return int(self.index_of[self.field.encode(x)])

    def key(self) -> str:
        return f"{self.field.key()}/g={self.generator}"


def _powers(field: FieldDescriptor, g: int) -> np.ndarray:
    n = field.q - 1
    out = np.empty(n, dtype=np.int64)
    x = 1
    if field.r == 1:
        p = field.p
        for i in range(n):
            out[i] = x
            x = x * g % p
    else:
        for i in range(n):
            out[i] = x
            x = field.mul(x, g)
    return out


def build_dlog_table(field: FieldDescriptor, generator, cache_dir=None) -> DLogTable:
    g = field.encode(generator)
    cache = _cache_path(field, g, cache_dir)
    if cache is not None and cache.exists():
        index_of = np.load(cache)
        if index_of.shape == (field.q,):
            return DLogTable(field, g, index_of)

    n = field.q - 1
    powers = _powers(field, g)
    index_of = np.full(field.q, -1, dtype=np.int64)
    index_of[powers] = np.arange(n, dtype=np.int64)
    if index_of[0] != -1 or (index_of[1:] < 0).any():
        raise NotAGenerator(f"{generator} does not generate F_{field.q}^x")
    index_of.setflags(write=False)
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        np.save(cache, index_of)
        cache.with_suffix(".json").write_text(json.dumps({"key": f"{field.key()}/g={g}"}))
    return DLogTable(field, g, index_of)


def _cache_path(field: FieldDescriptor, g: int, cache_dir) -> Path | None:
    root = cache_dir or os.environ.get(CACHE_ENV)
    if not root:
        return None
    key = f"{field.key()}/g={g}"
    return Path(root) / (hashlib.sha256(key.encode()).hexdigest()[:24] + ".npy")
