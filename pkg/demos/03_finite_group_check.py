# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # Brute force in GL(3, Z/25)
#
# With q = p = 5 every symbolic count can be recomputed directly.  Double
# cosets are orbits of C_c on the cosets K/C_d, and a double coset supports an
# intertwiner when the two characters agree on its stabiliser.

# +
import time

from gl3branch import ConductorData, count_R, count_S
from gl3branch.oracle import double_coset_orbits, mackey_support_count, verify_report

t0 = time.time()
res = double_coset_orbits(5, 2, (2, 2, 2), (2, 2, 2))
print(res.count, "double cosets among", res.index_d, "cosets", f"({time.time() - t0:.1f}s)")
print("symbolic:", count_R((2, 2, 2), (2, 2, 2)), "->", count_R((2, 2, 2), (2, 2, 2))(5))
# -

# Supports for each conductor pair with N <= 2.

for M, N in [(0, 1), (1, 1), (1, 2), (2, 2)]:
    m = ConductorData(M, N)
    mk = mackey_support_count(5, (2, 2, 2), (2, 2, 2), m)
    print(m.m, mk.count, count_S((2, 2, 2), (2, 2, 2), m))

# The full level 1 report, as the CLI `verify` subcommand emits it.

for r in verify_report(5, ConductorData(0, 1), level=1):
    print(r.to_json())
