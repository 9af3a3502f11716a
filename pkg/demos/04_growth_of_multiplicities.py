# ---
# jupyter:
#   jupytext:
#     text_representation:
#       extension: .py
#       format_name: light
# ---

# # How reducibility grows with the level
#
# Along the edges (M,n,n) and (n,N,n) the self-intertwining number grows
# linearly in n and then levels off.  Off the edges it can be a genuine
# polynomial in q.

# +
from gl3branch import ConductorData, intertwine_V

m = ConductorData(2, 3)
for n in range(3, 9):
    a = intertwine_V((2, n, n), (2, n, n), m).i_VV
    b = intertwine_V((n, 3, n), (n, 3, n), m).i_VV
    print(n, a, b)
# -

# Interior triples with c3 = n+1 above (n,n,n).

m = ConductorData(1, 1)
for n in range(2, 6):
    c = (n, n, n + 1)
    print(c, intertwine_V(c, c, m).i_VV)
