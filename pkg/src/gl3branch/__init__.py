"""Branching rules for ramified principal series of GL(3) over a p-adic field.

Restricted to the maximal compact subgroup ``K = GL(3, R)``, the principal
series splits along a poset of level triples.  Everything here is exact and
symbolic in the residue field size ``q``; :mod:`gl3branch.oracle` rechecks the
counts by brute force in ``GL(3, Z/p^n)``.
"""

__version__ = "0.1.0"

from .polyq import ALPHA, ONE, Q, ZERO, QPoly, phi, poly_arith, poly_eval
from .poset import (
    ConductorData,
    Triple,
    covering_pairs,
    descendants,
    enumerate_Tm,
    in_T,
    in_Tm,
    leq,
    meet_family,
    parse_triple,
)
from .cosets import CosetRep, count_R, enumerate_R, x_count
from .support import (
    count_S,
    dim_U,
    dim_V,
    intertwine_V,
    irreducibility_report,
    supports,
)
from .emit import diagram_emit, table_emit

__all__ = [
    "QPoly", "Q", "ONE", "ZERO", "ALPHA", "phi", "poly_arith", "poly_eval",
    "ConductorData", "Triple", "parse_triple", "in_T", "in_Tm", "leq",
    "descendants", "meet_family", "enumerate_Tm", "covering_pairs",
    "CosetRep", "enumerate_R", "count_R", "x_count",
    "supports", "count_S", "dim_U", "dim_V", "intertwine_V", "irreducibility_report",
    "diagram_emit", "table_emit",
]
