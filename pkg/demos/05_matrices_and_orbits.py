"""
Cyclotomic matrices and symmetry classes
========================================

The 18 x 18 matrices for q = 19 and q = 37, their exact invariants, and the
64 symmetry classes of (a,b)_18.
"""

from cyclolab.matrix import build_orbit_table, char_poly, cyclo_matrix, determinant, eigenvalues
from cyclolab.sums import context_for

A = cyclo_matrix(context_for(19, 1, 18, 13))
B = cyclo_matrix(context_for(37, 1, 18, 5))

print("det A =", determinant(A), " A^18 = 0:", (A ** 18).is_zero())
print("det B =", determinant(B))
print("char poly B:", char_poly(B))
for z in eigenvalues(B):
    print(f"  {z.real: .6f}")

t = build_orbit_table(18, "odd")
print(t.render())
print("classes:", t.class_count)
