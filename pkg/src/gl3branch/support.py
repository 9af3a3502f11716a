"""Supporting double cosets, intertwining numbers and dimensions.

``count_S(c, d, m)`` is the number of double cosets ``C_c g C_d`` on which the
characters ``chi_c`` and ``chi_d`` are compatible, which equals the dimension of
``Hom_K(U_c, U_d)``.  Inclusion-exclusion over immediate descendants turns
these into intertwining numbers and dimensions of the quotients ``V_c``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import chain, combinations
from typing import Optional

from .cosets import (
    FAMILIES,
    INF,
    CosetRep,
    a_op,
    depth_pair,
    rep_belongs,
    s1_params,
    s2_params,
    tcd_set,
    weyl_subset,
    x_count,
)
from .polyq import ALPHA, ONE, ZERO, Q, QPoly
from .poset import ConductorData, Triple, in_Tm, meet_family, sset

__all__ = [
    "SupportDecision",
    "IntertwiningReport",
    "IrreducibilityReport",
    "TheoremMismatch",
    "t_family_case",
    "supports",
    "count_S",
    "count_S_by_family",
    "dim_U",
    "dim_V",
    "intertwine_V",
    "total_support_member",
    "theorem_predictions",
    "irreducibility_report",
]


class TheoremMismatch(AssertionError):
    """A closed form for an intertwining number disagrees with the computed value."""


@dataclass(frozen=True)
class SupportDecision:
    rep: CosetRep
    supported: bool
    case_tag: str


def _subsets(s) -> list[tuple]:
    s = sorted(s)
    return list(chain.from_iterable(combinations(s, r) for r in range(len(s) + 1)))


def _check_pair(c, d, m: ConductorData) -> tuple[Triple, Triple]:
    c, d = Triple(*c), Triple(*d)
    for t in (c, d):
        if not in_Tm(t, m):
            raise ValueError(f"{t} is not in T_m for m={m.m}")
    return c, d


def t_family_case(a, c, d, m: ConductorData) -> tuple[str, bool, float]:
    """Case of the torus family and its verdict, ignoring ``x``.

    Returns ``(tag, passes, val_bound)``: when ``passes`` is true the classes
    with ``val(x-1) <= val_bound`` are supported (``val_bound`` is ``INF`` unless
    the tag ends in ``c``).
    """
    M, N = m.M, m.N
    a1, a2, a3 = a
    if a1 >= M and a2 >= N:
        return "i1", True, INF
    if a1 < M and a2 >= N:
        level, prefix = M, "i2"
    elif a1 >= N and a2 < N:
        level, prefix = N, "i3"
    else:
        # both a1 and a2 below N
        return "i_low", False, INF
    diffs = [c[j] - a[j] for j in range(3)] + [d[j] - a[j] for j in range(3)]
    if a1 + a2 < a3:
        ok = level <= min(diffs + [c[1] + a1 - a3, d[0] + a2 - a3])
        return prefix + "a", ok, INF
    if a1 + a2 > a3:
        ao = a_op(a)
        ok = level <= min([c[j] - ao[j] for j in range(3)] + [d[j] - ao[j] for j in range(3)])
        return prefix + "b", ok, INF
    ok = level <= min(diffs)
    bound = depth_pair(a, c, d).a_cd_prime - level
    return prefix + "c", ok and bound >= 0, bound


def _s1_ok(al, be, c, d, m: ConductorData) -> bool:
    M, N = m.M, m.N
    return (
        N <= al <= min(d[1], c[2]) - M
        and N <= be <= min(c[1], d[2]) - M
        and M - c[0] <= be - al <= d[0] - M
    )


def _s2_ok(al, be, c, d, m: ConductorData) -> bool:
    N = m.N
    return (
        N <= al <= min(d[0], c[2]) - N
        and N <= be <= min(c[0], d[2]) - N
        and N - c[1] <= be - al <= d[1] - N
    )


def supports(rep: CosetRep, c, d, m: ConductorData, p: Optional[int] = None) -> SupportDecision:
    """Whether the double coset of ``rep`` supports an intertwiner from ``U_d`` to ``U_c``."""
    c, d = _check_pair(c, d, m)
    if not rep_belongs(rep, c, d, p):
        raise ValueError(f"{rep} is not a representative for c={c}, d={d}")
    f = rep.family
    if f == "T_FAMILY":
        tag, ok, bound = t_family_case(rep.a, c, d, m)
        if ok and bound != INF:
            ok = rep.x.val_x_minus_1 <= bound
        return SupportDecision(rep, ok, tag)
    if f == "S1":
        return SupportDecision(rep, _s1_ok(rep.alpha, rep.beta, c, d, m), "ii")
    if f == "S2":
        return SupportDecision(rep, _s2_ok(rep.alpha, rep.beta, c, d, m), "iii")
    return SupportDecision(rep, False, "excluded_w")


def count_S_by_family(c, d, m: ConductorData) -> dict:
    c, d = _check_pair(c, d, m)
    return dict(_count_S_cached(c, d, m.M, m.N))


@lru_cache(maxsize=None)
def _count_S_cached(c: Triple, d: Triple, M: int, N: int) -> tuple:
    m = ConductorData(M, N)
    ws = weyl_subset(c, d)
    counts = {f: ZERO for f in FAMILIES}
    if "1" in ws:
        tot = ZERO
        for a in tcd_set(c, d):
            _, ok, bound = t_family_case(a, c, d, m)
            if ok:
                tot = tot + x_count(a, c, d, bound)
        counts["T_FAMILY"] = tot
    if "s1" in ws:
        n = sum(1 for al, be in s1_params(c, d) if _s1_ok(al, be, c, d, m))
        counts["S1"] = QPoly.const(n)
    if "s2" in ws:
        n = sum(1 for al, be in s2_params(c, d) if _s2_ok(al, be, c, d, m))
        counts["S2"] = QPoly.const(n)
    return tuple(counts.items())


def count_S(c, d, m: ConductorData) -> QPoly:
    """``I(U_c, U_d)``: the number of supporting double cosets."""
    total = ZERO
    for v in count_S_by_family(c, d, m).values():
        total = total + v
    return total


def dim_U(c, m: Optional[ConductorData] = None) -> QPoly:
    """Dimension of ``U_c``, i.e. the index of ``C_c`` in ``K``."""
    c1, c2, c3 = c
    if m is not None and not in_Tm(c, m):
        raise ValueError(f"{tuple(c)} is not in T_m for m={m.m}")
    if c1 * c2 > 0:
        return ALPHA * QPoly.monomial(c1 + c2 + c3 - 3)
    if c1 + c2 > 0:
        return (Q * Q + Q + 1) * QPoly.monomial(2 * (c1 + c2 - 1))
    raise ValueError("dim_U needs c1 or c2 positive")


def dim_V(c, m: ConductorData) -> QPoly:
    c = Triple(*c)
    total = ZERO
    for I in _subsets(sset(c, m)):
        term = dim_U(meet_family(c, I, m), m)
        total = total + term if len(I) % 2 == 0 else total - term
    return total


@dataclass
class IntertwiningReport:
    c: Triple
    d: Triple
    i_UU: QPoly
    i_VV: QPoly
    subset_terms: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "d": list(self.d),
            "i_UU": self.i_UU.to_json(),
            "i_UU_text": str(self.i_UU),
            "i_VV": self.i_VV.to_json(),
            "i_VV_text": str(self.i_VV),
            "subset_terms": [
                {
                    "I": list(I),
                    "J": list(J),
                    "c_I": list(cI),
                    "d_J": list(dJ),
                    "sign": sign,
                    "count_S": val.to_json(),
                }
                for (I, J), (cI, dJ, sign, val) in self.subset_terms.items()
            ],
        }


def intertwine_V(c, d, m: ConductorData) -> IntertwiningReport:
    """``I(V_c, V_d)`` by double inclusion-exclusion over descendant meets."""
    c, d = _check_pair(c, d, m)
    terms = {}
    total = ZERO
    for I in _subsets(sset(c, m)):
        cI = meet_family(c, I, m)
        for J in _subsets(sset(d, m)):
            dJ = meet_family(d, J, m)
            val = count_S(cI, dJ, m)
            sign = -1 if (len(I) + len(J)) % 2 else 1
            terms[(I, J)] = (cI, dJ, sign, val)
            total = total + val if sign > 0 else total - val
    return IntertwiningReport(c, d, terms[((), ())][3], total, terms)


def total_support_member(rep: CosetRep, m: ConductorData) -> bool:
    """Membership in the union of all supporting sets over ``c, d`` in ``T_m``."""
    N = m.N
    f = rep.family
    if f == "T_FAMILY":
        a1, a2, a3 = rep.a
        return a3 >= max(a1, a2) >= N
    if f in ("S1", "S2"):
        return rep.alpha >= N and rep.beta >= N
    return False


@dataclass
class IrreducibilityReport:
    c: Triple
    i_VV: QPoly
    irreducible: Optional[bool]
    theorem_tags: list

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "i_VV": self.i_VV.to_json(),
            "i_VV_text": str(self.i_VV),
            "irreducible": self.irreducible,
            "theorem_tags": [{"tag": t, "predicted": v.to_json()} for t, v in self.theorem_tags],
        }


def theorem_predictions(c, m: ConductorData) -> list[tuple[str, QPoly]]:
    """Closed-form values of ``I(V_c, V_c)`` known for special triples."""
    c = Triple(*c)
    M, N = m.M, m.N
    c1, c2, c3 = c
    out = []
    if c == m.m:
        out.append(("base", ONE))
    if c1 == M and c2 == N and N <= c3 <= N + M:
        out.append(("Thm4.1", ONE))
    if c1 >= M and c2 >= N and c3 == c1 + c2:
        out.append(("Thm4.2", ONE))
    if c1 > M and c2 > N and c3 == max(c1, c2):
        out.append(("Thm4.3", ONE))
    if c1 == c2 == c3 and c1 > N:
        out.append(("Cor4.4", ONE))
    if c1 == M and c2 == c3 and c2 > N:
        n = c2
        val = n - N + 1 if n < M + N else M + 1
        out.append(("Prop4.5(1)", QPoly.const(val)))
    if c1 == c3 and c2 == N and c1 >= N:
        n = c1
        val = n - N + 1 if n < 2 * N else N + 1
        out.append(("Prop4.5(2)", QPoly.const(val)))
    return out


def irreducibility_report(c, m: ConductorData, strict: bool = False) -> IrreducibilityReport:
    """Self-intertwining number of ``V_c`` together with the applicable closed forms.

    A closed form disagreeing with the computed value raises ``TheoremMismatch``
    when ``strict`` is set and warns otherwise.
    """
    c = Triple(*c)
    ivv = intertwine_V(c, c, m).i_VV
    tags = theorem_predictions(c, m)
    for tag, predicted in tags:
        if predicted != ivv:
            msg = f"{tag} predicts {predicted} for V_{c}, computed {ivv}"
            if strict:
                raise TheoremMismatch(msg)
            warnings.warn(msg)
    return IrreducibilityReport(c, ivv, ivv == ONE, tags)
