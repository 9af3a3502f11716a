"""The poset of level triples and its up-set above the conductor triple.

A triple ``c = (c1, c2, c3)`` lies in ``T`` when ``0 <= c1, c2 <= c3 <= c1 + c2``.
It names the subgroup of ``GL(3, R)`` whose (2,1), (3,2), (3,1) entries lie in
``p^c1``, ``p^c2``, ``p^c3``.  ``T_m`` is the set of triples above
``m = (M, N, N)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

__all__ = [
    "Triple",
    "ConductorData",
    "Predicates",
    "in_T",
    "in_T1",
    "in_Tm",
    "leq",
    "poset_predicates",
    "underline",
    "descendants",
    "sset",
    "meet_family",
    "meet_family_bruteforce",
    "enumerate_Tm",
    "covering_pairs",
    "parse_triple",
]


class Triple(NamedTuple):
    c1: int
    c2: int
    c3: int

    def __str__(self) -> str:
        return f"({self.c1},{self.c2},{self.c3})"

    def to_json(self) -> list:
        return [self.c1, self.c2, self.c3]


def parse_triple(text: str) -> Triple:
    """Parse ``"c1,c2,c3"`` (parentheses and spaces tolerated)."""
    parts = text.strip().strip("()[]").split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma separated integers, got {text!r}")
    try:
        return Triple(*(int(x) for x in parts))
    except ValueError:
        raise ValueError(f"malformed triple {text!r}") from None


@dataclass(frozen=True)
class ConductorData:
    """Conductors ``M = cond(chi_2) <= N = cond(chi_3)`` with ``N > 0``."""

    M: int
    N: int

    def __post_init__(self):
        if not (0 <= self.M <= self.N):
            raise ValueError(f"need 0 <= M <= N, got M={self.M}, N={self.N}")
        if self.N < 1:
            raise ValueError("N must be positive (the inducing character is ramified)")

    @property
    def m(self) -> Triple:
        return Triple(self.M, self.N, self.N)

    @classmethod
    def unchecked(cls, M: int, N: int) -> "ConductorData":
        # The unramified base m = (0,0,0) is only needed to reproduce poset examples.
        obj = object.__new__(cls)
        object.__setattr__(obj, "M", M)
        object.__setattr__(obj, "N", N)
        return obj


class Predicates(NamedTuple):
    in_T: bool
    in_T1: bool
    in_Tm: bool
    leq_cd: bool


def in_T(c) -> bool:
    c1, c2, c3 = c
    return 0 <= c1 <= c3 and 0 <= c2 <= c3 and c3 <= c1 + c2


def in_T1(a) -> bool:
    a1, a2, a3 = a
    return 1 <= a1 <= a3 and 1 <= a2 <= a3


def leq(c, d) -> bool:
    return c[0] <= d[0] and c[1] <= d[1] and c[2] <= d[2]


def in_Tm(c, m: ConductorData) -> bool:
    return in_T(c) and leq(m.m, c)


def poset_predicates(c, d, m: ConductorData) -> Predicates:
    return Predicates(in_T(c), in_T1(c), in_Tm(c, m), leq(c, d))


def underline(c) -> Triple:
    return Triple(*(max(x, 1) for x in c))


def descendants(c, m: ConductorData) -> tuple[list[tuple[int, Triple]], frozenset]:
    """Candidate immediate descendants ``c_{i}`` and the index set of those in ``T_m``."""
    c = Triple(*c)
    if not in_Tm(c, m):
        raise ValueError(f"{c} is not in T_m for m={m.m}")
    c1, c2, c3 = c
    if c1 == 0:
        cands = [(3, Triple(0, c2 - 1, c2 - 1))]
    elif c2 == 0:
        cands = [(3, Triple(c1 - 1, 0, c1 - 1))]
    else:
        cands = [
            (1, Triple(c1 - 1, c2, c3)),
            (2, Triple(c1, c2 - 1, c3)),
            (3, Triple(c1, c2, c3 - 1)),
        ]
    s = frozenset(i for i, d in cands if in_Tm(d, m))
    return cands, s


def sset(c, m: ConductorData) -> frozenset:
    return descendants(c, m)[1]


def meet_family(c, I: Iterable[int], m: ConductorData) -> Triple:
    """Largest element of ``T_m`` below every ``c_{i}``, ``i in I``.

    Closed form: componentwise minimum, then clamp the third entry to the sum
    of the first two.
    """
    c = Triple(*c)
    I = set(I)
    if not I:
        return c
    cands, s = descendants(c, m)
    if not I <= s:
        raise ValueError(f"indices {sorted(I)} not all in S_c = {sorted(s)}")
    ds = [d for i, d in cands if i in I]
    w1 = min(d[0] for d in ds)
    w2 = min(d[1] for d in ds)
    w3 = min(d[2] for d in ds)
    w = Triple(w1, w2, min(w3, w1 + w2))
    if not in_Tm(w, m):
        raise AssertionError(f"meet {w} of {c} over {sorted(I)} left T_m")
    return w


def meet_family_bruteforce(c, I: Iterable[int], m: ConductorData) -> Optional[Triple]:
    """Reference maximum by exhaustive search; ``None`` if no unique maximum."""
    c = Triple(*c)
    I = set(I)
    if not I:
        return c
    cands, _ = descendants(c, m)
    ds = [d for i, d in cands if i in I]
    below = [
        e
        for e in enumerate_Tm(m, componentwise_max=c)
        if all(leq(e, d) for d in ds)
    ]
    tops = [e for e in below if all(leq(f, e) for f in below)]
    return tops[0] if len(tops) == 1 else None


def enumerate_Tm(
    m: ConductorData,
    componentwise_max=None,
    sum_max: Optional[int] = None,
) -> list[Triple]:
    """All ``c`` in ``T_m`` under the given bound, in lexicographic order."""
    if (componentwise_max is None) == (sum_max is None):
        raise ValueError("give exactly one of componentwise_max, sum_max")
    M, N, _ = m.m
    if componentwise_max is not None:
        b1, b2, b3 = componentwise_max
    else:
        b1 = b2 = b3 = sum_max
    out = []
    for c1 in range(M, b1 + 1):
        for c2 in range(N, b2 + 1):
            for c3 in range(max(c1, c2, N), min(c1 + c2, b3) + 1):
                if sum_max is not None and c1 + c2 + c3 > sum_max:
                    break
                out.append(Triple(c1, c2, c3))
    return out


def covering_pairs(triples: Iterable[Triple]) -> list[tuple[Triple, Triple]]:
    """Pairs ``(upper, lower)`` with ``lower`` covered by ``upper`` within ``triples``."""
    ts = sorted(set(triples))
    below = {t: [u for u in ts if u != t and leq(u, t)] for t in ts}
    out = []
    for t in ts:
        for u in below[t]:
            if not any(leq(u, v) and v != u for v in below[t]):
                out.append((t, u))
    return out
