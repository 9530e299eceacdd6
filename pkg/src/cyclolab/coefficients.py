"""Jacobi-sum coefficients and their Dickson-Hurwitz expressions at orders l^2 and 2 l^2.

Coefficient subscripts: a head subscript ``t`` is read modulo the order and is
zero beyond the power basis (``t >= phi(e)``); shifted subscripts ``u*l + t``
inside sums are reduced modulo ``phi(e) = l(l-1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import isprime

from .cyclotomic import CycInt, collapse_to_odd, phi, trace_to_Q
from .sums import CyclotomyContext


class OutOfRange(ValueError):
    pass


def ell_of(e: int) -> int:
    """The odd prime l with e = 2 l^2."""
    l = math.isqrt(e // 2)
    if e != 2 * l * l or l < 3 or not isprime(l):
        raise ValueError(f"order {e} is not 2 l^2 for an odd prime l")
    return l


@dataclass(frozen=True)
class CoeffSet:
    order: int
    n: int
    coeffs: tuple[int, ...]

    def head(self, t: int) -> int:
        t %= self.order
        return self.coeffs[t] if t < len(self.coeffs) else 0

    def shifted(self, m: int) -> int:
        return self.coeffs[m % len(self.coeffs)]

    def element(self) -> CycInt:
        return CycInt(self.order, self.coeffs)


def extract_coeffs(ctx: CyclotomyContext, order: int, n: int) -> CoeffSet:
    sub = ctx.sub(order)
    return CoeffSet(order, n % order, sub.jacobi_sum(1, n).coeffs)


# -- AT1: coefficients of J_{2l^2}(1, n) from Dickson-Hurwitz sums --

AT1_BRANCHES = ("+", "-", "alternating")


def at1_coeffs(ctx: CyclotomyContext, n: int, sign_choice: str = "alternating") -> CoeffSet:
    """d_i = B(i) -/+ B(l(l-1)+j) - B(l^2+i) +/- B(2 phi(l^2)+l+j), j = i mod l.

    ``sign_choice`` is the sign in front of the last term ("+" or "-"), or
    "alternating": "+" when floor(i / l) is even and "-" otherwise.
    """
    e = ctx.e
    l = ell_of(e)
    B = ctx.dh_table
    out = []
    for i in range(phi(e)):
        j = i % l
        if sign_choice == "alternating":
            s = 1 if (i // l) % 2 == 0 else -1
        elif sign_choice in ("+", "-"):
            s = 1 if sign_choice == "+" else -1
        else:
            raise ValueError(sign_choice)
        out.append(
            B[i, n]
            - s * B[l * (l - 1) + j, n]
            - B[l * l + i, n]
            + s * B[2 * phi(l * l) + l + j, n]
        )
    return CoeffSet(e, n % e, tuple(out))


def epsilon(l: int, t: int) -> int:
    if not 0 <= t <= l * l - 1:
        raise OutOfRange(t)
    return l * l if t // l <= l - 2 else -l


# -- order l^2 coefficient relation (LM1) --------------------------------------

def lemma_C(ctx: CyclotomyContext, t: int, n: int) -> tuple[int, int]:
    """(l(l-1) B(t,n) - l sum_{u=1}^{l-1} B(ul+t,n), eps(t) b_t - l sum_{u=0}^{l-2} b_{ul+t}) at order l^2."""
    l = ell_of(ctx.e)
    sub = ctx.sub(l * l)
    B = sub.dh_table
    lhs = l * (l - 1) * B[t, n] - l * sum(B[u * l + t, n] for u in range(1, l))
    b = extract_coeffs(ctx, l * l, n)
    rhs = epsilon(l, t % (l * l)) * b.head(t) - l * sum(b.shifted(u * l + t) for u in range(l - 1))
    return lhs, rhs


# -- order 2 l^2 trace identities --------------------------------------------

def dh_trace_combination(ctx: CyclotomyContext, t: int, n: int, sign_lu: int = -1, sign_2lu: int = 1) -> int:
    """l(l-1) B(t,n) + sign_lu*l sum_{u=1}^{2l-1} B(lu+t,n) + sign_2lu*l sum_{u=1}^{l-1} B(2lu+t,n)."""
    l = ell_of(ctx.e)
    B = ctx.dh_table
    return (
        l * (l - 1) * B[t, n]
        + sign_lu * l * sum(B[l * u + t, n] for u in range(1, 2 * l))
        + sign_2lu * l * sum(B[2 * l * u + t, n] for u in range(1, l))
    )


def thm1_D(ctx: CyclotomyContext, t: int, n: int) -> tuple[int, int]:
    l = ell_of(ctx.e)
    lhs = dh_trace_combination(ctx, t, n)
    d = extract_coeffs(ctx, ctx.e, n)
    rhs = (
        l * (l - 1) * d.head(t)
        - l * sum(d.shifted(u * l + t) for u in range(l - 1, 2 * l - 2))
        - l * (ctx.q - 2)
    )
    return lhs, rhs


def trace_identity_212(ctx: CyclotomyContext, t: int, n: int) -> tuple[int, int]:
    e = ctx.e
    lhs = trace_to_Q(ctx.jacobi_sum(1, n) * CycInt.zeta(e, -t))
    return lhs, dh_trace_combination(ctx, t, n)


def trace_identity_213(ctx: CyclotomyContext, t: int, n: int, branch: str = "low") -> tuple[int, int]:
    l = ell_of(ctx.e)
    L = l * l
    lhs = trace_to_Q(collapse_to_odd(ctx.jacobi_sum(2, n)) * CycInt.zeta(L, -t))
    rhs = l * (l - 1) * ctx.dh_half(t, n, branch) - l * sum(
        ctx.dh_half(l * u + t, n, branch) for u in range(1, l)
    )
    return lhs, rhs
