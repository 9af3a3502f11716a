"""Text artifacts: Hasse diagrams in DOT and dimension tables in CSV."""

from __future__ import annotations

import csv
import io
from typing import Optional

from .poset import ConductorData, Triple, covering_pairs, enumerate_Tm
from .support import dim_V, intertwine_V

__all__ = ["bounded_triples", "diagram_emit", "diagram_content", "table_rows", "table_emit"]

# Guard against accidental huge enumerations from the command line.
SAFETY_LIMIT = 40


def bounded_triples(m: ConductorData, bound=None, sum_max: Optional[int] = None) -> list[Triple]:
    """``enumerate_Tm`` under either a componentwise bound or a bound on ``c1+c2+c3``."""
    if bound is not None:
        if max(bound) > SAFETY_LIMIT:
            raise ValueError(f"bound {tuple(bound)} exceeds safety limit {SAFETY_LIMIT}")
        return enumerate_Tm(m, componentwise_max=bound)
    if sum_max is None:
        raise ValueError("a bound is required")
    if sum_max > 3 * SAFETY_LIMIT:
        raise ValueError(f"sum bound {sum_max} exceeds safety limit {3 * SAFETY_LIMIT}")
    return enumerate_Tm(m, sum_max=sum_max)


def _node_id(c) -> str:
    return "c_%d_%d_%d" % tuple(c)


def diagram_content(m: ConductorData, triples) -> dict:
    """Nodes with self-intertwining numbers, covering edges and equivalence edges."""
    ts = sorted(triples, key=lambda t: (-sum(t), -t[2], t))
    nodes = {t: intertwine_V(t, t, m).i_VV for t in ts}
    cover = covering_pairs(ts)
    cover.sort(key=lambda e: (ts.index(e[0]), ts.index(e[1])))
    equiv = []
    for i, c in enumerate(ts):
        for d in ts[i + 1:]:
            if c[2] == d[2] and intertwine_V(c, d, m).i_VV:
                equiv.append((c, d))
    return {"nodes": nodes, "covering": cover, "equivalent": equiv}


def diagram_emit(m: ConductorData, bound=None, sum_max: Optional[int] = None, q0: Optional[int] = None) -> str:
    """DOT digraph of ``T_m`` under the bound, arrows pointing down the order."""
    content = diagram_content(m, bounded_triples(m, bound, sum_max))
    lines = [
        "digraph Tm {",
        f'  label="M={m.M}, N={m.N}";',
        "  rankdir=TB;",
        "  node [shape=box, fontname=monospace];",
    ]
    for t, ivv in content["nodes"].items():
        label = f"{t}\\nI(V,V)={ivv}"
        if q0 is not None:
            label += f" = {ivv.evaluate(q0)}"
        lines.append(f'  {_node_id(t)} [label="{label}"];')
    for hi, lo in content["covering"]:
        lines.append(f"  {_node_id(hi)} -> {_node_id(lo)};")
    for c, d in content["equivalent"]:
        lines.append(f"  {_node_id(c)} -> {_node_id(d)} [style=dashed, dir=none, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def table_rows(m: ConductorData, triples, q0: Optional[int] = None) -> list[tuple]:
    """Rows ``(triple, dim_V, value at q0)`` with equal dimensions grouped together."""
    rows = [(t, dim_V(t, m)) for t in triples]
    rows.sort(key=lambda r: (-r[1].degree, tuple(-x for x in reversed(r[1].coeffs)), r[0]))
    return [(t, v, None if q0 is None else v.evaluate(q0)) for t, v in rows]


def table_emit(m: ConductorData, bound=None, sum_max: Optional[int] = None, q0: Optional[int] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["triple", "dim_poly", "dim_at_q0"])
    for t, v, x in table_rows(m, bounded_triples(m, bound, sum_max), q0):
        w.writerow([str(t), str(v), "" if x is None else x])
    return buf.getvalue()
