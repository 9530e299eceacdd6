"""Cyclotomic numbers, Jacobi sums and Dickson-Hurwitz sums over F_q.

Characters are chi_e(gamma) = zeta_e with chi_e^m(0) = 0 for every m,
including m = 0, so that J_e(0, 0) = q - 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .cyclotomic import CycInt, CycPoly, canonicalize
from .field import DLogTable, FieldDescriptor, build_dlog_table, find_generator, make_field


class KindMismatch(ValueError):
    pass


class NonConstantResult(ArithmeticError):
    pass


class NotDivisibleByESquared(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class SumTable:
    kind: str  # "cyclotomic" | "dickson_hurwitz"
    e: int
    values: np.ndarray
    provenance: dict = dc_field(default_factory=dict)

    def __getitem__(self, ab) -> int:
        a, b = ab
        return int(self.values[a % self.e, b % self.e])

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "e": self.e,
            "provenance": self.provenance,
            "values": self.values.tolist(),
        }


class FieldData:
    """Index pairs (ind v, ind(v+1)) for v in F_q minus {0, -1}, shared by every order."""

    def __init__(self, dlog: DLogTable):
        self.field = dlog.field
        self.dlog = dlog
        q = self.field.q
        v = np.arange(q, dtype=np.int64)
        w = self.field.add_one(v)
        keep = (v != 0) & (w != 0)
        self.ind_v = dlog.index_of[v[keep]]
        self.ind_w = dlog.index_of[w[keep]]
        self._contexts: dict[int, CyclotomyContext] = {}

    def context(self, e: int) -> "CyclotomyContext":
        if e not in self._contexts:
            self._contexts[e] = CyclotomyContext(self, e)
        return self._contexts[e]

    @property
    def provenance(self) -> dict:
        f = self.field
        return {"p": f.p, "r": f.r, "poly": list(f.defining_poly), "generator": self.dlog.generator}


class CyclotomyContext:
    def __init__(self, data: FieldData, e: int):
        q = data.field.q
        if e < 2 or (q - 1) % e:
            raise ValueError(f"order {e} must divide q - 1 = {q - 1}")
        self.data = data
        self.field: FieldDescriptor = data.field
        self.dlog = data.dlog
        self.e = e
        self.k = (q - 1) // e
        self.q = q
        self._jacobi_counts: dict[tuple[int, int], np.ndarray] = {}
        self._jacobi: dict[tuple[int, int], CycInt] = {}

    @property
    def k_even(self) -> bool:
        return self.k % 2 == 0

    @cached_property
    def _res(self):
        return self.data.ind_v % self.e, self.data.ind_w % self.e

    def sub(self, f: int) -> "CyclotomyContext":
        """Context of order f for the same field and generator."""
        return self.data.context(f)

    # cyclotomic numbers

    def cyclotomic_number(self, a: int, b: int) -> int:
        x, y = self._res
        return int(np.count_nonzero((x == a % self.e) & (y == b % self.e)))

    @cached_property
    def table(self) -> SumTable:
        x, y = self._res
        e = self.e
        vals = np.bincount(x * e + y, minlength=e * e).reshape(e, e)
        vals.setflags(write=False)
        return SumTable("cyclotomic", e, vals, self.data.provenance)

    # Jacobi sums

    def jacobi_counts(self, i: int, j: int) -> np.ndarray:
        """Exponent-vector form of J_e(i, j): entry m counts terms equal to zeta_e^m."""
        e = self.e
        key = (i % e, j % e)
        if key not in self._jacobi_counts:
            x, y = self._res
            cnt = np.bincount((key[0] * x + key[1] * y) % e, minlength=e)
            cnt.setflags(write=False)
            self._jacobi_counts[key] = cnt
        return self._jacobi_counts[key]

    def jacobi_sum(self, i: int, j: int) -> CycInt:
        key = (i % self.e, j % self.e)
        if key not in self._jacobi:
            counts = self.jacobi_counts(*key)
            self._jacobi[key] = canonicalize(CycPoly(self.e, tuple(int(c) for c in counts)))
        return self._jacobi[key]

    @cached_property
    def all_jacobi_counts(self) -> np.ndarray:
        e = self.e
        out = np.empty((e, e, e), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                out[i, j] = self.jacobi_counts(i, j)
        return out

    # Dickson-Hurwitz sums

    def dickson_hurwitz(self, a: int, b: int) -> int:
        e = self.e
        h = np.arange(e)
        return int(self.table.values[h, (a - b * h) % e].sum())

    @cached_property
    def dh_table(self) -> SumTable:
        e = self.e
        h = np.arange(e)
        T = self.table.values
        vals = np.empty((e, e), dtype=np.int64)
        for a in range(e):
            for b in range(e):
                vals[a, b] = T[h, (a - b * h) % e].sum()
        vals.setflags(write=False)
        return SumTable("dickson_hurwitz", e, vals, self.data.provenance)

    def dh_half(self, i: int, n: int, branch: str = "low") -> int:
        """Half-order sum sum_{a < e/2} (a, (i - n a)/2) for e = 2 l^2.

        ``(i - n a)/2`` is solved modulo l^2; ``branch`` picks the lift to a
        residue modulo 2 l^2: "low" (in [0, l^2)), "even", "odd", or "both"
        (sum over the two lifts).
        """
        e = self.e
        if e % 2:
            raise ValueError("dh_half needs an even order")
        L = e // 2
        half = (L + 1) // 2  # inverse of 2 modulo odd L
        T = self.table.values
        total = 0
        for a in range(L):
            b0 = (half * (i - n * a)) % L
            lifts = {
                "low": [b0],
                "even": [b0 if b0 % 2 == 0 else b0 + L],
                "odd": [b0 if b0 % 2 else b0 + L],
                "both": [b0, b0 + L],
            }[branch]
            total += sum(int(T[a, b]) for b in lifts)
        return total


def context_for(p: int, r: int, e: int, generator=None, defining_poly=None, cache_dir=None) -> CyclotomyContext:
    """Convenience: field, generator (least by default), dlog table and order-e context."""
    f = make_field(p, r, defining_poly)
    g = find_generator(f) if generator is None else generator
    return FieldData(build_dlog_table(f, g, cache_dir)).context(e)


def cyclotomic_number(ctx: CyclotomyContext, a: int, b: int) -> int:
    return ctx.cyclotomic_number(a, b)


def full_table(ctx: CyclotomyContext) -> SumTable:
    return ctx.table


def jacobi_sum(ctx: CyclotomyContext, i: int, j: int) -> CycInt:
    return ctx.jacobi_sum(i, j)


def dickson_hurwitz(ctx: CyclotomyContext, a: int, b: int) -> int:
    return ctx.dickson_hurwitz(a, b)


def dh_half(ctx: CyclotomyContext, i: int, n: int, branch: str = "low") -> int:
    return ctx.dh_half(i, n, branch)


def jacobi_from_cyclo(table: SumTable, a: int, b: int) -> CycInt:
    """sum_{i,j} (i,j)_e zeta_e^(a i + b j)."""
    if table.kind != "cyclotomic":
        raise KindMismatch(table.kind)
    e = table.e
    ii, jj = np.meshgrid(np.arange(e), np.arange(e), indexing="ij")
    vec = np.zeros(e, dtype=np.int64)
    np.add.at(vec, ((a * ii + b * jj) % e).ravel(), table.values.ravel())
    return canonicalize(CycPoly(e, tuple(int(c) for c in vec)))


def _inverse_exponents(ctx: CyclotomyContext, a: int, b: int) -> np.ndarray:
    e = ctx.e
    cnt = ctx.all_jacobi_counts
    ii, jj = np.meshgrid(np.arange(e), np.arange(e), indexing="ij")
    shift = (a * ii + b * jj) % e
    m = np.arange(e)
    # W[m] = sum_{i,j} cnt[i, j, m + shift(i,j)]
    idx = (m[None, None, :] + shift[:, :, None]) % e
    return np.take_along_axis(cnt, idx, axis=2).sum(axis=(0, 1))


def cyclo_from_jacobi(ctx: CyclotomyContext, a: int, b: int) -> int:
    """Recover (a,b)_e from sum_{i,j} zeta_e^-(a i + b j) J_e(i, j) = e^2 (a,b)_e."""
    e = ctx.e
    val = canonicalize(CycPoly(e, tuple(int(c) for c in _inverse_exponents(ctx, a, b))))
    if not val.is_rational():
        raise NonConstantResult(val.coeffs)
    c = val.coeffs[0]
    if c % (e * e):
        raise NotDivisibleByESquared(c)
    return c // (e * e)
