"""Distinguished representatives of the double cosets ``C_c \\ K / C_d``.

The representatives fall into six families indexed by the Weyl group of
``GL(3)``.  The torus family ``t_{a,x}`` depends on a triple ``a`` and on a
class ``x`` of units whose number is a polynomial in ``q``; the other five
families are finite lattice-point sets independent of ``q``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .polyq import ONE, ZERO, Q, QPoly, phi
from .poset import Triple, in_T, in_T1, leq, underline

__all__ = [
    "INF",
    "WEYL",
    "FAMILY_OF_W",
    "FAMILIES",
    "DepthPair",
    "XStratum",
    "XClassLabel",
    "CosetRep",
    "weyl_subset",
    "tcd_set",
    "depth_pair",
    "a_op",
    "x_strata",
    "x_count",
    "x_classes",
    "classify_x",
    "s1_params",
    "s2_params",
    "s1s2_params",
    "s2s1_params",
    "enumerate_R",
    "count_R",
    "family_counts",
    "rep_belongs",
]

INF = math.inf

WEYL = ("1", "s1", "s2", "s1s2", "s2s1", "w0")
FAMILY_OF_W = {
    "1": "T_FAMILY",
    "s1": "S1",
    "s2": "S2",
    "s1s2": "S1S2",
    "s2s1": "S2S1",
    "w0": "W0",
}
FAMILIES = tuple(FAMILY_OF_W[w] for w in WEYL)

UNIT_CLASS = "UNIT_CLASS"
ONE_PLUS_PI_CLASS = "ONE_PLUS_PI_CLASS"


def weyl_subset(c, d) -> tuple:
    """The Weyl elements whose families contribute to ``C_c \\ K / C_d``."""
    c1, c2, _ = c
    d1, d2, _ = d
    if leq((1, 1, 1), c) and leq((1, 1, 1), d):
        return WEYL
    if c1 * d1 * (c2 + d2) > 0 and c2 * d2 == 0:
        return ("1", "s1", "w0")
    if c1 * d1 == 0 and (c1 + d1) * c2 * d2 > 0:
        return ("1", "s2", "w0")
    if c1 * c2 == 0 and d1 * d2 == 0 and (c1 + c2) * (d1 + d2) > 0:
        return ("1", "w0")
    if tuple(c) == (0, 0, 0) or tuple(d) == (0, 0, 0):
        return ("1",)
    raise ValueError(f"no Weyl case applies to c={tuple(c)}, d={tuple(d)}")


def tcd_set(c, d) -> list[Triple]:
    c = Triple(*c)
    d = Triple(*d)
    if c == (0, 0, 0) or d == (0, 0, 0):
        return [Triple(1, 1, 1)]
    if c.c2 * d.c2 > 0 and c.c1 == 0 and d.c1 == 0:
        return [Triple(1, a, a) for a in range(1, min(c.c2, d.c2) + 1)]
    if c.c1 * d.c1 > 0 and c.c2 == 0 and d.c2 == 0:
        return [Triple(a, 1, a) for a in range(1, min(c.c1, d.c1) + 1)]
    cu, du = underline(c), underline(d)
    out = []
    for a1 in range(1, min(cu.c1, du.c1) + 1):
        for a2 in range(1, min(cu.c2, du.c2) + 1):
            top = min(cu.c3, du.c3, a1 + cu.c2, du.c1 + a2)
            for a3 in range(max(a1, a2), top + 1):
                out.append(Triple(a1, a2, a3))
    return out


class DepthPair(NamedTuple):
    a_cd: int
    a_cd_prime: int


def depth_pair(a, c, d) -> DepthPair:
    """Precision depths of the ``x`` parameter of ``t_{a,x}``."""
    a1, a2, a3 = a
    c1, c2, c3 = c
    d1, d2, d3 = d
    k = min(
        a1, a2, a3 - a1, a3 - a2,
        c1 - a1, c2 - a2, c3 - a3,
        d1 - a1, d2 - a2, d3 - a3,
        a1 + c2 - a3, d1 + a2 - a3,
    )
    kp = min(d3 - a3, c3 - a3, c1 - a1, d2 - a2)
    return DepthPair(max(0, k), max(0, kp))


def a_op(a) -> Triple:
    a1, a2, a3 = a
    return Triple(a3 - a2, a3 - a1, (a3 - a1) + (a3 - a2))


@dataclass(frozen=True)
class XStratum:
    """Classes of ``X^a_{c,d}`` sharing one value of ``val(x-1)``."""

    kind: str
    val_x_minus_1: float  # int, or INF for the class of x = 1
    residue_precision: int
    count: QPoly


def x_strata(a, c, d) -> list[XStratum]:
    a1, a2, a3 = a
    k, kp = depth_pair(a, c, d)
    if a1 + a2 != a3:
        return [XStratum(UNIT_CLASS, INF, k, phi(k))]
    if kp == 0:
        return [XStratum(ONE_PLUS_PI_CLASS, INF, 0, ONE)]
    # i = 0: x and x-1 both units, classes modulo p^k
    first = QPoly.monomial(k - 1) * (Q - 2) if k >= 1 else ONE
    out = [XStratum(ONE_PLUS_PI_CLASS, 0, k, first)]
    for i in range(1, kp):
        out.append(XStratum(ONE_PLUS_PI_CLASS, i, min(i + k, kp), phi(min(k, kp - i))))
    out.append(XStratum(ONE_PLUS_PI_CLASS, INF, kp, ONE))
    return out


def x_count(a, c, d, val_bound=INF) -> QPoly:
    """Number of classes in ``X^a_{c,d}``, optionally only those with ``val(x-1) <= val_bound``.

    The bound only stratifies the case ``a1 + a2 = a3``.
    """
    strata = x_strata(a, c, d)
    if strata[0].kind == UNIT_CLASS:
        return strata[0].count
    total = ZERO
    for s in strata:
        if s.val_x_minus_1 <= val_bound:
            total = total + s.count
    return total


@dataclass(frozen=True)
class XClassLabel:
    kind: str
    val_x_minus_1: float
    residue_precision: int
    residue: int  # representative modulo p^residue_precision
    lift: int  # integer representative used to build matrices

    def to_json(self) -> dict:
        v = self.val_x_minus_1
        return {
            "kind": self.kind,
            "val_x_minus_1": "inf" if v == INF else int(v),
            "residue_precision": self.residue_precision,
            "representative_residue": self.residue,
        }


def _units(p: int, k: int) -> list[int]:
    return [u for u in range(p**k) if u % p] if k else [1]


def x_classes(a, c, d, p: int) -> list[XClassLabel]:
    """Concrete class representatives of ``X^a_{c,d}`` for ``q = p``."""
    out = []
    for s in x_strata(a, c, d):
        prec = s.residue_precision
        mod = p**prec
        if s.kind == UNIT_CLASS:
            for u in _units(p, prec):
                out.append(XClassLabel(UNIT_CLASS, INF, prec, u % mod, u))
        elif s.val_x_minus_1 == INF:
            out.append(XClassLabel(ONE_PLUS_PI_CLASS, INF, prec, 1 % mod, 1))
        elif s.val_x_minus_1 == 0:
            if prec == 0:
                out.append(XClassLabel(ONE_PLUS_PI_CLASS, 0, 0, 0, 2))
            else:
                for u in range(mod):
                    if u % p not in (0, 1):
                        out.append(XClassLabel(ONE_PLUS_PI_CLASS, 0, prec, u, u))
        else:
            i = int(s.val_x_minus_1)
            for u in _units(p, prec - i):
                x = 1 + p**i * u
                out.append(XClassLabel(ONE_PLUS_PI_CLASS, i, prec, x % mod, x))
    return out


def _val(x: int, p: int) -> float:
    if x == 0:
        return INF
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def classify_x(x: int, a, c, d, p: int) -> XClassLabel:
    """Class of the unit ``x`` in ``X^a_{c,d}``, as one of ``x_classes(a, c, d, p)``."""
    if x % p == 0:
        raise ValueError("x must be a unit")
    for lab in x_classes(a, c, d, p):
        mod = p**lab.residue_precision
        if lab.kind == UNIT_CLASS:
            if x % mod == lab.residue:
                return lab
            continue
        kp = depth_pair(a, c, d).a_cd_prime
        v = _val(x - 1, p)
        if lab.val_x_minus_1 == INF:
            if v >= kp:
                return lab
        elif v == lab.val_x_minus_1 and x % mod == lab.residue:
            return lab
    raise AssertionError("unclassified unit")


@dataclass(frozen=True)
class CosetRep:
    family: str
    a: Optional[Triple] = None
    x: Optional[XClassLabel] = None
    alpha: Optional[int] = None
    beta: Optional[int] = None

    @property
    def params(self) -> dict:
        if self.family == "T_FAMILY":
            return {"a": list(self.a), "x": self.x.to_json()}
        if self.family in ("S1", "S2"):
            return {"alpha": self.alpha, "beta": self.beta}
        if self.family in ("S1S2", "S2S1"):
            return {"alpha": self.alpha}
        return {}

    def to_json(self) -> dict:
        return {"family": self.family, "params": self.params}

    def __str__(self) -> str:
        if self.family == "T_FAMILY":
            return f"t_{self.a},x={self.x.lift}"
        if self.family in ("S1", "S2"):
            return f"{self.family.lower()}^({self.alpha},{self.beta})"
        if self.family in ("S1S2", "S2S1"):
            return f"{self.family.lower()}^({self.alpha})"
        return "w0"

    def matrix(self, p: int, n: Optional[int] = None) -> tuple:
        """Row-major 3x3 integer matrix with ``pi = p``, reduced mod ``p^n`` if given."""
        f = self.family
        if f == "T_FAMILY":
            a1, a2, a3 = self.a
            m = (1, 0, 0, p**a1, 1, 0, self.x.lift * p**a3, p**a2, 1)
        elif f == "S1":
            m = (0, 1, 0, 1, 0, 0, p**self.beta, p**self.alpha, 1)
        elif f == "S2":
            m = (1, 0, 0, p**self.beta, 0, 1, p**self.alpha, 1, 0)
        elif f == "S1S2":
            m = (0, 0, 1, 1, 0, 0, p**self.alpha, 1, 0)
        elif f == "S2S1":
            m = (0, 1, 0, 0, p**self.alpha, 1, 1, 0, 0)
        elif f == "W0":
            m = (0, 0, 1, 0, 1, 0, 1, 0, 0)
        else:
            raise ValueError(f"unknown family {f!r}")
        if n is not None:
            mod = p**n
            m = tuple(v % mod for v in m)
        return m


def _pairs(alpha_hi, beta_hi, diff_lo, diff_hi, alpha_lo=1, beta_lo=1) -> list[tuple[int, int]]:
    return [
        (al, be)
        for al in range(alpha_lo, alpha_hi + 1)
        for be in range(beta_lo, beta_hi + 1)
        if diff_lo <= be - al <= diff_hi
    ]


def s1_params(c, d) -> list[tuple[int, int]]:
    cu, du = underline(c), underline(d)
    return _pairs(min(du.c2, c[2]), min(cu.c2, d[2]), -c[0], d[0])


def s2_params(c, d) -> list[tuple[int, int]]:
    cu, du = underline(c), underline(d)
    return _pairs(min(du.c1, c[2]), min(cu.c1, d[2]), -c[1], d[1])


def s1s2_params(c, d) -> list[int]:
    return list(range(1, min(d[0], c[1]) + 1))


def s2s1_params(c, d) -> list[int]:
    return list(range(1, min(c[0], d[1]) + 1))


def enumerate_R(c, d, p: int) -> list[CosetRep]:
    """All distinguished representatives for ``q = p``, family by family."""
    c, d = Triple(*c), Triple(*d)
    if not (in_T(c) and in_T(d)):
        raise ValueError("c and d must lie in T")
    ws = weyl_subset(c, d)
    out = []
    if "1" in ws:
        for a in tcd_set(c, d):
            for lab in x_classes(a, c, d, p):
                out.append(CosetRep("T_FAMILY", a=a, x=lab))
    if "s1" in ws:
        out += [CosetRep("S1", alpha=al, beta=be) for al, be in s1_params(c, d)]
    if "s2" in ws:
        out += [CosetRep("S2", alpha=al, beta=be) for al, be in s2_params(c, d)]
    if "s1s2" in ws:
        out += [CosetRep("S1S2", alpha=al) for al in s1s2_params(c, d)]
    if "s2s1" in ws:
        out += [CosetRep("S2S1", alpha=al) for al in s2s1_params(c, d)]
    if "w0" in ws:
        out.append(CosetRep("W0"))
    return out


def family_counts(c, d) -> dict:
    """Symbolic number of representatives in each family."""
    c, d = Triple(*c), Triple(*d)
    ws = weyl_subset(c, d)
    counts = {f: ZERO for f in FAMILIES}
    if "1" in ws:
        tot = ZERO
        for a in tcd_set(c, d):
            tot = tot + x_count(a, c, d)
        counts["T_FAMILY"] = tot
    if "s1" in ws:
        counts["S1"] = QPoly.const(len(s1_params(c, d)))
    if "s2" in ws:
        counts["S2"] = QPoly.const(len(s2_params(c, d)))
    if "s1s2" in ws:
        counts["S1S2"] = QPoly.const(len(s1s2_params(c, d)))
    if "s2s1" in ws:
        counts["S2S1"] = QPoly.const(len(s2s1_params(c, d)))
    if "w0" in ws:
        counts["W0"] = ONE
    return counts


def count_R(c, d) -> QPoly:
    total = ZERO
    for v in family_counts(c, d).values():
        total = total + v
    return total


def rep_belongs(rep: CosetRep, c, d, p: Optional[int] = None) -> bool:
    """Whether ``rep`` is one of the representatives produced for ``(c, d)``."""
    c, d = Triple(*c), Triple(*d)
    ws = weyl_subset(c, d)
    f = rep.family
    if f == "T_FAMILY":
        if "1" not in ws or rep.a not in tcd_set(c, d):
            return False
        if p is None:
            return True
        return classify_x(rep.x.lift, rep.a, c, d, p) == rep.x
    if f == "S1":
        return "s1" in ws and (rep.alpha, rep.beta) in s1_params(c, d)
    if f == "S2":
        return "s2" in ws and (rep.alpha, rep.beta) in s2_params(c, d)
    if f == "S1S2":
        return "s1s2" in ws and rep.alpha in s1s2_params(c, d)
    if f == "S2S1":
        return "s2s1" in ws and rep.alpha in s2s1_params(c, d)
    if f == "W0":
        return "w0" in ws
    return False
