"""
Finite fields and indices
=========================

Build F_19 and F_{17^2}, pick the least generator and look at the index table.
"""

from cyclolab.field import all_generators, build_dlog_table, find_generator, make_field

# prime field: elements are plain residues
f19 = make_field(19)
g = f19.encode(find_generator(f19))
print("F_19 least generator:", g)
print("all generators:", all_generators(f19))

table = build_dlog_table(f19, g)
print("ind(18) =", table[18], " ind(4) =", table[4])

# quadratic extension: elements are encoded c0 + c1*17
f289 = make_field(17, 2)
print("F_289 defining polynomial (low -> high):", f289.defining_poly)
g289 = f289.encode(find_generator(f289))
t289 = build_dlog_table(f289, g289)
x = f289.mul(g289, g289)
print("generator", g289, "squared is", x, "with index", t289[x])
