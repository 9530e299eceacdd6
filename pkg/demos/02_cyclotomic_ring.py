"""
Exact arithmetic in Z[zeta_e]
=============================

Canonical coordinates, Galois conjugates, traces and the odd-order collapse.
"""

from cyclolab.cyclotomic import (
    CycInt, collapse_to_odd, conjugate, cyclotomic_polynomial, embed_numeric, power_traces, trace_to_Q,
)

print("Phi_18 =", cyclotomic_polynomial(18))

z = CycInt.zeta(18)
print("zeta^10 * zeta^12 == zeta^4:", CycInt.zeta(18, 10) * CycInt.zeta(18, 12) == CycInt.zeta(18, 4))
print("conjugate(zeta, 5) =", conjugate(z, 5).coeffs)

# traces two ways: sum of conjugates, and the closed form per power
print("Tr(zeta_18^t), t = 0..17:", power_traces(18))
print("Tr(zeta_18^6) =", trace_to_Q(CycInt.zeta(18, 6)))
print("Tr(zeta_18^2) =", trace_to_Q(CycInt.zeta(18, 2)), "(a primitive ninth root)")

c = collapse_to_odd(z)
print("zeta_18 in Z[zeta_9]:", c.coeffs, abs(embed_numeric(c) - embed_numeric(z)))
