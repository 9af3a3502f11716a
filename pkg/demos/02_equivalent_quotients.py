# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Equivalent quotients when M = 1, N = 2
#
# Distinct quotients can only share constituents when their third entries
# agree, so it is enough to scan pairs with c3 = d3.

# +
from itertools import combinations

from gl3branch import ConductorData, enumerate_Tm, intertwine_V

m = ConductorData(1, 2)
triples = enumerate_Tm(m, sum_max=9)

for c, d in combinations(triples, 2):
    if c[2] != d[2]:
        continue
    n = intertwine_V(c, d, m).i_VV
    if n:
        print(f"{c} ~ {d}: {n} operators")
# -

# (1,3,4) and (2,2,4) are both irreducible, so they are isomorphic.
# V_(2,3,4) has q-2 self-intertwiners and shares a constituent with V_(1,4,4).

rep = intertwine_V((2, 3, 4), (2, 3, 4), m)
print(rep.i_VV, [rep.i_VV(q) for q in (5, 7, 9, 11)])

# The inclusion-exclusion behind one of these numbers.

for t in intertwine_V((1, 4, 4), (2, 3, 4), m).to_json()["subset_terms"]:
    print(t["c_I"], t["d_J"], t["sign"], t["count_S"])
