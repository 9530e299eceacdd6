"""
4 l^4 (a,b) from traces of Jacobi sums
======================================

Compare the literal trace expression with the orbit decomposition and the
direct count, cell by cell.
"""

from cyclolab.formula import TraceCache, thm2_orbit_form, thm2_trace_form
from cyclolab.sums import context_for

for p in (19, 37):
    ctx = context_for(p, 1, 18)
    tc = TraceCache(ctx)
    truth = {(a, b): 324 * ctx.table[a, b] for a in range(18) for b in range(18)}
    lit = sum(thm2_trace_form(ctx, a, b, tc) == v for (a, b), v in truth.items())
    orb = sum(thm2_orbit_form(ctx, a, b, tc) == v for (a, b), v in truth.items())
    print(f"q={p}: literal trace expression {lit}/324, orbit decomposition {orb}/324")

a, b = 0, 1
ctx = context_for(19, 1, 18)
print("cell", (a, b), "truth", 324 * ctx.table[a, b], "literal", thm2_trace_form(ctx, a, b),
      "orbit", thm2_orbit_form(ctx, a, b))
