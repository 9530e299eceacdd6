"""
Cyclotomic numbers and Jacobi sums of order 18
==============================================

Count (a,b)_18 over F_37 and move between the table and the Jacobi sums.
"""

import numpy as np

from cyclolab.cyclotomic import embed_numeric
from cyclolab.sums import context_for, cyclo_from_jacobi, jacobi_from_cyclo

ctx = context_for(37, 1, 18)
T = ctx.table.values
print("q = 37, k =", ctx.k, " total =", T.sum(), " column 0 sum =", T[:, 0].sum())
print(T)

J = ctx.jacobi_sum(1, 2)
print("J(1,2) coordinates:", J.coeffs, " |J|^2 =", round(abs(embed_numeric(J)) ** 2, 9))

# forward and inverse finite Fourier transforms agree with direct counting
fwd = all(jacobi_from_cyclo(ctx.table, a, b) == ctx.jacobi_sum(a, b) for a in range(18) for b in range(18))
inv = np.array([[cyclo_from_jacobi(ctx, a, b) for b in range(18)] for a in range(18)])
print("forward ok:", fwd, " inverse ok:", np.array_equal(inv, T))

print("Dickson-Hurwitz sums B(a, 1):", ctx.dh_table.values[:, 1])
