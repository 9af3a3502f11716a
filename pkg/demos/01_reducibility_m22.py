# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Reducibility picture for M = N = 2
#
# The fixed vectors of the fourth congruence subgroup split into quotients
# V_c, one for each triple c between (2,2,2) and (4,4,4).  For each of them we
# compute its dimension and the number of self-intertwining operators, both as
# polynomials in the residue field size q.

# +
from gl3branch import ConductorData, ALPHA, Q, dim_V, enumerate_Tm, intertwine_V
from gl3branch.emit import diagram_emit, table_emit

m = ConductorData(2, 2)
triples = enumerate_Tm(m, componentwise_max=(4, 4, 4))
len(triples)
# -

# Self-intertwining numbers.  A value 1 means V_c is irreducible; (3,3,4) is
# the interesting one, with q-1 operators.

for c in sorted(triples, key=lambda t: (-sum(t), t)):
    print(c, intertwine_V(c, c, m).i_VV)

# Dimensions come out expanded.  Dividing by alpha = (q+1)(q^2+q+1) isn't
# supported by the polynomial type, so compare against the factored form instead.

print(dim_V((3, 3, 4), m) == Q**4 * (Q - 1) ** 3 * ALPHA)
print(table_emit(m, bound=(4, 4, 4), q0=5))

# The same data as a DOT graph (pipe into `dot -Tsvg` to draw it).

print(diagram_emit(m, bound=(4, 4, 4)))
