"""Brute-force checks over the finite groups GL(3, Z/p^n).

The symbolic counts are independently recomputed here at ``q = p``:

* ``K/C_d`` is enumerated by canonical labels.  ``C_d`` is the stabiliser of
  two lattices, so a coset ``k C_d`` is labelled by the canonical forms of the
  two image lattices.
* ``C_c`` orbits on ``K/C_d`` are the double cosets.
* A double coset of ``k`` supports an intertwiner exactly when
  ``chi_c(h) = chi_d(k^-1 h k)`` on the stabiliser ``C_c cap k C_d k^-1``.
  Characters are handled as integer exponents modulo the order of the cyclic
  group (Z/p^N)^x, so equality of roots of unity is integer equality.
"""

from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

from .cosets import CosetRep, enumerate_R
from .poset import ConductorData, Triple, in_T, in_Tm, leq
from .residue import IDENTITY, ResidueRing, vp
from .support import count_S, dim_U, supports
from .cosets import count_R

__all__ = [
    "OracleLimitError",
    "CharSpec",
    "build_characters",
    "character_conductor",
    "chi_exponent",
    "coset_label",
    "enumerate_cosets",
    "DoubleCosetResult",
    "double_coset_orbits",
    "locate_representatives",
    "MackeyResult",
    "mackey_support_count",
    "PairReport",
    "verify_pair",
    "verify_report",
    "sample_coset_pairs",
    "coset_pair_relations_check",
    "DEFAULT_CEILING",
]

log = logging.getLogger(__name__)

DEFAULT_CEILING = 10**6
DEFAULT_SAMPLES = 10**5


class OracleLimitError(RuntimeError):
    """A computation would exceed the configured resource ceiling."""


# characters


@dataclass(frozen=True)
class CharSpec:
    """Characters ``chi_2, chi_3`` of (Z/p^N)^x as exponents of a fixed generator."""

    p: int
    M: int
    N: int
    generator: int
    order: int
    e2: int
    e3: int
    dlog: dict = field(repr=False, compare=False)

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def log(self, u: int) -> int:
        return self.dlog[u % self.modulus]


def character_conductor(e: int, p: int, N: int, generator: int) -> int:
    """Conductor of the exponent-``e`` character, by testing ``1 + p^t`` subgroups."""
    mod = p**N
    order = p ** (N - 1) * (p - 1)
    dlog = _dlog_table(p, N, generator)
    for t in range(0, N + 1):
        if t == 0:
            elems = [u for u in range(mod) if u % p]
        else:
            elems = [(1 + p**t * s) % mod for s in range(p ** (N - t))]
        if all(e * dlog[u] % order == 0 for u in elems):
            return t
    raise AssertionError("characters of (Z/p^N)^x have conductor at most N")


@lru_cache(maxsize=None)
def _dlog_table(p: int, N: int, generator: int) -> dict:
    mod = p**N
    order = p ** (N - 1) * (p - 1)
    table, x = {}, 1
    for k in range(order):
        table[x] = k
        x = x * generator % mod
    if len(table) != order:
        raise ValueError(f"{generator} does not generate (Z/{mod})^x")
    return table


def build_characters(p: int, M: int, N: int) -> CharSpec:
    """Exponents realising conductors ``cond(chi_2) = M``, ``cond(chi_3) = N`` and
    ``cond(chi_2 / chi_3) = N``."""
    ConductorData(M, N)
    ring = ResidueRing(p, N)
    g = ring.unit_generator
    order = p ** (N - 1) * (p - 1)
    e3 = 1
    if M == 0:
        e2 = 0
    else:
        e2 = next(
            e for e in range(1, order)
            if vp(e, p, N) == N - M and vp(e - e3, p, N) == 0
        )
    spec = CharSpec(p, M, N, g, order, e2, e3, _dlog_table(p, N, g))
    checks = [(e2, M), (e3, N), ((e2 - e3) % order, N), ((-e3) % order, N)]
    for e, want in checks:
        got = character_conductor(e, p, N, g)
        assert got == want, f"exponent {e}: conductor {got}, wanted {want}"
    return spec


def chi_exponent(g: tuple, c, spec: CharSpec, ring: Optional[ResidueRing] = None) -> int:
    """Exponent of ``chi_c(g) = chi_2(g22) chi_3(g33)``."""
    c = Triple(*c)
    if not in_Tm(c, ConductorData(spec.M, spec.N)):
        raise ValueError(f"chi_c is not a character of C_c for c={c}")
    if ring is not None:
        if not ring.in_C(g, c):
            raise ValueError("matrix is not in C_c")
    else:
        p = spec.p
        if g[3] % p ** c[0] or g[7] % p ** c[1] or g[6] % p ** c[2]:
            raise ValueError("matrix is not in C_c")
    return _chi(g, spec)


def _chi(g: tuple, spec: CharSpec) -> int:
    # with chi_2 trivial, g22 need not be a unit (c1 = 0)
    e = spec.e3 * spec.dlog[g[8] % spec.modulus]
    if spec.e2:
        e += spec.e2 * spec.dlog[g[4] % spec.modulus]
    return e % spec.order


# cosets of C_d in K


def _lattice_scales(d) -> tuple:
    d1, d2, d3 = d
    return ((0, d1, d3), (0, d3 - d2, d3))


def coset_label(ring: ResidueRing, k: tuple, d) -> tuple:
    """Canonical label of the left coset ``k C_d``."""
    p = ring.p
    cols = ((k[0], k[3], k[6]), (k[1], k[4], k[7]), (k[2], k[5], k[8]))
    out = []
    for scales in _lattice_scales(d):
        rows = [tuple(x * p**s for x in col) for col, s in zip(cols, scales)]
        out.append(ring.howell([ring.reduce(r) for r in rows]))
    return tuple(out)


def _act(ring: ResidueRing, g: tuple, label: tuple) -> tuple:
    return tuple(ring.howell([ring.apply(g, r) for r in lat]) for lat in label)


@dataclass
class CosetSpace:
    ring: ResidueRing
    d: Triple
    labels: list
    reps: list
    index: dict


@lru_cache(maxsize=32)
def enumerate_cosets(p: int, n: int, d, ceiling: int = DEFAULT_CEILING) -> CosetSpace:
    """All cosets ``k C_d`` of GL(3, Z/p^n), found by breadth-first search."""
    ring = ResidueRing(p, n)
    d = Triple(*d)
    if not in_T(d) or d.c3 > n:
        raise ValueError(f"need d in T with d3 <= n, got {d}")
    gens = ring.level_generators((0, 0, 0))
    start = coset_label(ring, IDENTITY, d)
    labels, reps, index = [start], [IDENTITY], {start: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        lab, k = labels[i], reps[i]
        for g in gens:
            nl = _act(ring, g, lab)
            if nl not in index:
                if len(labels) >= ceiling:
                    raise OracleLimitError(f"more than {ceiling} cosets of C_{d}")
                index[nl] = len(labels)
                labels.append(nl)
                reps.append(ring.mul(g, k))
                queue.append(index[nl])
    return CosetSpace(ring, d, labels, reps, index)


# double cosets


@dataclass
class Orbit:
    base: int  # index of the base coset k C_d
    rep: tuple  # the matrix k
    size: int
    transversal: dict  # coset index -> (u, u^-1), u in C_c with u k C_d = that coset


@dataclass
class DoubleCosetResult:
    p: int
    n: int
    c: Triple
    d: Triple
    index_d: int
    orbits: list
    orbit_of: list  # coset index -> orbit number

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list:
        return [o.rep for o in self.orbits]


@lru_cache(maxsize=64)
def double_coset_orbits(p: int, n: int, c, d, ceiling: int = DEFAULT_CEILING) -> DoubleCosetResult:
    """Partition ``K/C_d`` into ``C_c``-orbits, i.e. the double cosets ``C_c \\ K / C_d``."""
    c, d = Triple(*c), Triple(*d)
    if not in_T(c) or c.c3 > n:
        raise ValueError(f"need c in T with c3 <= n, got {c}")
    space = enumerate_cosets(p, n, d, ceiling)
    ring = space.ring
    gens = [(g, ring.inv(g)) for g in ring.level_generators(c)]
    orbit_of = [-1] * len(space.labels)
    orbits = []
    for start in range(len(space.labels)):
        if orbit_of[start] >= 0:
            continue
        oid = len(orbits)
        trans = {start: (IDENTITY, IDENTITY)}
        orbit_of[start] = oid
        queue = deque([start])
        while queue:
            i = queue.popleft()
            u, ui = trans[i]
            lab = space.labels[i]
            for g, gi in gens:
                j = space.index[_act(ring, g, lab)]
                if j not in trans:
                    trans[j] = (ring.mul(g, u), ring.mul(ui, gi))
                    orbit_of[j] = oid
                    queue.append(j)
        orbits.append(Orbit(start, space.reps[start], len(trans), trans))
    return DoubleCosetResult(p, n, c, d, len(space.labels), orbits, orbit_of)


def locate_representatives(result: DoubleCosetResult, reps: Iterable[CosetRep]) -> list[int]:
    """Orbit number of each distinguished representative's double coset."""
    space = enumerate_cosets(result.p, result.n, result.d)
    ring = space.ring
    out = []
    for rep in reps:
        lab = coset_label(ring, rep.matrix(ring.p, ring.n), result.d)
        out.append(result.orbit_of[space.index[lab]])
    return out


def _schreier_generators(ring: ResidueRing, orbit: Orbit, gens: list, space: CosetSpace):
    """Generators of the stabiliser of the base coset in ``C_c`` (Schreier's lemma)."""
    for i, (u, _) in orbit.transversal.items():
        lab = space.labels[i]
        for g in gens:
            j = space.index[_act(ring, g, lab)]
            h = ring.mul(orbit.transversal[j][1], ring.mul(g, u))
            if h != IDENTITY:
                yield h


@dataclass
class MackeyResult:
    count: int
    supported: list  # per orbit: True / False
    mode: str
    confident: bool = True
    checked: int = 0


def mackey_support_count(
    p: int,
    c,
    d,
    m: ConductorData,
    spec: Optional[CharSpec] = None,
    mode: str = "exact",
    n: Optional[int] = None,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    ceiling: int = DEFAULT_CEILING,
) -> MackeyResult:
    """Number of double cosets ``C_c k C_d`` on which the two characters agree.

    ``exact``: test the character identity on Schreier generators of each
    stabiliser, which is conclusive because both sides are homomorphisms.
    ``enumerate``: test every element of each stabiliser (refused above
    ``ceiling`` elements).  ``sampled``: test ``samples`` uniform stabiliser
    elements per double coset; a violation refutes support, otherwise support
    is accepted with ``confident=False``.
    """
    c, d = Triple(*c), Triple(*d)
    for t in (c, d):
        if not in_Tm(t, m):
            raise ValueError(f"{t} is not in T_m for m={m.m}")
    if n is None:
        n = max(c.c3, d.c3, m.N)
    if n < max(c.c3, d.c3, m.N):
        raise ValueError("level too small for these triples")
    if spec is None:
        spec = build_characters(p, m.M, m.N)
    res = double_coset_orbits(p, n, c, d, ceiling)
    space = enumerate_cosets(p, n, d, ceiling)
    ring = space.ring
    gens = ring.level_generators(c)
    verdicts = []
    checked = 0
    confident = True
    rng = random.Random(seed)
    c_order = ring.gl3_order // space_index(p, n, c, ceiling)
    for orbit in res.orbits:
        k = orbit.rep
        ki = ring.inv(k)

        def agrees(h):
            return _chi(h, spec) == _chi(ring.mul(ki, ring.mul(h, k)), spec)

        if mode == "exact":
            ok = True
            for h in _schreier_generators(ring, orbit, gens, space):
                checked += 1
                if not agrees(h):
                    ok = False
                    break
        elif mode == "enumerate":
            stab_order = c_order // orbit.size
            if stab_order > ceiling:
                raise OracleLimitError(
                    f"stabiliser of order {stab_order} exceeds ceiling {ceiling}; use exact or sampled mode"
                )
            sgens = list(dict.fromkeys(_schreier_generators(ring, orbit, gens, space)))
            elems = _closure(ring, sgens)
            assert len(elems) == stab_order, (len(elems), stab_order)
            checked += len(elems)
            ok = all(agrees(h) for h in elems)
        elif mode == "sampled":
            ok = True
            base_lab = space.labels[orbit.base]
            for _ in range(samples):
                r = ring.random_element(c, rng)
                j = space.index[_act(ring, r, base_lab)]
                h = ring.mul(orbit.transversal[j][1], r)
                checked += 1
                if not agrees(h):
                    ok = False
                    break
            if ok:
                confident = False
        else:
            raise ValueError(f"unknown mode {mode!r}")
        verdicts.append(ok)
    return MackeyResult(sum(verdicts), verdicts, mode, confident, checked)


def space_index(p: int, n: int, c, ceiling: int = DEFAULT_CEILING) -> int:
    """``[K : C_c]`` modulo p^n, by counting cosets."""
    return len(enumerate_cosets(p, n, Triple(*c), ceiling).labels)


def _closure(ring: ResidueRing, gens: list) -> set:
    elems = {IDENTITY}
    queue = deque([IDENTITY])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = ring.mul(g, x)
            if y not in elems:
                elems.add(y)
                queue.append(y)
    return elems


# comparison with the symbolic side


@dataclass
class PairReport:
    c: Triple
    d: Triple
    expected_R: int
    oracle_R: int
    expected_S: Optional[int]
    oracle_S: Optional[int]
    expected_index: int
    oracle_index: int
    reps_distinct: bool
    decisions_match: Optional[bool]

    @property
    def status(self) -> str:
        ok = (
            self.expected_R == self.oracle_R
            and self.expected_S == self.oracle_S
            and self.expected_index == self.oracle_index
            and self.reps_distinct
            and self.decisions_match is not False
        )
        return "pass" if ok else "fail"

    def to_json(self) -> dict:
        return {
            "c": list(self.c),
            "d": list(self.d),
            "expected_R": self.expected_R,
            "oracle_R": self.oracle_R,
            "expected_S": self.expected_S,
            "oracle_S": self.oracle_S,
            "expected_index": self.expected_index,
            "oracle_index": self.oracle_index,
            "reps_distinct": self.reps_distinct,
            "decisions_match": self.decisions_match,
            "status": self.status,
        }


def verify_pair(
    p: int,
    c,
    d,
    m: Optional[ConductorData],
    n: int,
    mode: str = "exact",
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    ceiling: int = DEFAULT_CEILING,
) -> PairReport:
    """Compare one pair against the finite-group computation.

    With ``m`` set, the pair must lie in ``T_m`` and supports are compared too;
    without it only the double coset parametrization is checked.
    """
    c, d = Triple(*c), Triple(*d)
    res = double_coset_orbits(p, n, c, d, ceiling)
    reps = enumerate_R(c, d, p)
    where = locate_representatives(res, reps)
    distinct = len(set(where)) == len(where) == res.count
    exp_S = orc_S = None
    decisions = None
    if m is not None:
        mk = mackey_support_count(p, c, d, m, mode=mode, n=n, seed=seed, samples=samples, ceiling=ceiling)
        orc_S = mk.count
        exp_S = count_S(c, d, m).evaluate(p)
        if distinct:
            decisions = all(
                supports(rep, c, d, m, p).supported == mk.supported[o]
                for rep, o in zip(reps, where)
            )
    return PairReport(
        c, d,
        count_R(c, d).evaluate(p), res.count,
        exp_S, orc_S,
        _expected_index(c, p), space_index(p, n, c, ceiling),
        distinct, decisions,
    )


def _expected_index(c, p: int) -> int:
    return 1 if tuple(c) == (0, 0, 0) else dim_U(c).evaluate(p)


def verify_report(
    p: int,
    m: ConductorData,
    pair_list: Optional[Iterable] = None,
    level: int = 1,
    mode: str = "exact",
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    ceiling: int = DEFAULT_CEILING,
) -> list[PairReport]:
    """Per-pair comparison of symbolic and finite-group counts.

    The default pair list is every ``(c, d)`` in ``T_m`` with ``c3, d3 <= level``.
    """
    if pair_list is None:
        from .poset import enumerate_Tm

        ts = enumerate_Tm(m, componentwise_max=(level, level, level))
        pair_list = [(c, d) for c in ts for d in ts]
    out = []
    for c, d in pair_list:
        rep = verify_pair(p, c, d, m, level, mode, seed, samples, ceiling)
        log.info("pair %s %s: %s", rep.c, rep.d, rep.status)
        out.append(rep)
    return out


# coset-pair relations


def _inverse_exact(h: tuple) -> tuple:
    a, b, c, d, e, f, g, hh, i = h
    det = a * (e * i - f * hh) - b * (d * i - f * g) + c * (d * hh - e * g)
    if det not in (1, -1):
        raise ValueError("representative is not unimodular")
    adj = (
        e * i - f * hh, c * hh - b * i, b * f - c * e,
        f * g - d * i, a * i - c * g, c * d - a * f,
        d * hh - e * g, b * g - a * hh, a * e - b * d,
    )
    return tuple(x * det for x in adj)


def _mul_exact(A: tuple, B: tuple) -> tuple:
    return tuple(
        sum(A[3 * r + k] * B[3 * k + s] for k in range(3))
        for r in range(3)
        for s in range(3)
    )


def sample_coset_pairs(rep: CosetRep, c, d, p: int, n: int, samples: int, seed: int = 0) -> list:
    """Integer coset pairs ``(g, g')`` with ``g rep = rep g'``, ``g in C_c``, ``g' in C_d``.

    ``g`` is uniform in ``C_c cap rep C_d rep^-1`` modulo p^n, lifted to
    ``[0, p^n)``; ``g'`` is then computed exactly over the integers.
    """
    c, d = Triple(*c), Triple(*d)
    res = double_coset_orbits(p, n, c, d)
    space = enumerate_cosets(p, n, d)
    ring = space.ring
    h = rep.matrix(p)
    hmod = ring.reduce(h)
    base = space.index[coset_label(ring, hmod, d)]
    orbit = res.orbits[res.orbit_of[base]]
    # transversal is rooted at orbit.rep; move it to the representative's coset
    u0, u0i = orbit.transversal[base]
    hi = _inverse_exact(h)
    rng = random.Random(seed)
    out = []
    base_lab = space.labels[orbit.base]
    for _ in range(samples):
        r = ring.random_element(c, rng)
        j = space.index[_act(ring, r, base_lab)]
        s = ring.mul(orbit.transversal[j][1], r)  # stabilises the orbit's base coset
        g = ring.mul(u0, ring.mul(s, u0i))  # stabilises rep's coset
        gp = _mul_exact(hi, _mul_exact(g, h))
        out.append((g, gp))
    return out


def _split(g: tuple) -> dict:
    return {f"{r + 1}{s + 1}": g[3 * r + s] for r in range(3) for s in range(3)}


def s1_relations(g: tuple, gp: tuple, rep: CosetRep, c, d, p: int) -> list[tuple[str, Fraction, Fraction]]:
    """Matrix-coefficient identities for a coset pair of ``s1^(alpha, beta)``."""
    al, be = rep.alpha, rep.beta
    G, Gp = _split(g), _split(gp)
    P = Fraction(p)
    gam21, gam32, gam31 = Fraction(G["21"]) / P ** c[0], Fraction(G["32"]) / P ** c[1], Fraction(G["31"]) / P ** c[2]
    gamp21, gamp32, gamp31 = Fraction(Gp["21"]) / P ** d[0], Fraction(Gp["32"]) / P ** d[1], Fraction(Gp["31"]) / P ** d[2]
    g22, g23, g33 = G["22"], G["23"], G["33"]
    return [
        ("g22", Fraction(g22),
         g33 - g23 * P**be - gamp21 * P ** (d[0] + al - be) + gam32 * P ** (c[1] - be) - gamp31 * P ** (d[2] - be)),
        ("g'22", Fraction(Gp["22"]),
         g33 - g23 * P**be - gam21 * P ** (c[0] + be - al) - gamp32 * P ** (d[1] - al) + gam31 * P ** (c[2] - al)),
        ("g'33", Fraction(Gp["33"]), g33 - g23 * P**be - Gp["23"] * P**al),
        ("g11", Fraction(G["11"]), Gp["22"] - Gp["23"] * P**al),
        ("g'11", Fraction(Gp["11"]), g22 + g23 * P**be),
        ("g12", Fraction(G["12"]), gamp21 * P ** d[0] - Gp["23"] * P**be),
        ("g'12", Fraction(Gp["12"]), g23 * P**al + gam21 * P ** c[0]),
        ("g13", Fraction(G["13"]), Fraction(Gp["23"])),
        ("g'13", Fraction(Gp["13"]), Fraction(g23)),
    ]


def t_relations(g: tuple, gp: tuple, rep: CosetRep, c, d, p: int) -> list[tuple[str, Fraction, Fraction]]:
    """Matrix-coefficient identities for a coset pair of ``t_{a,x}``."""
    a1, a2, a3 = rep.a
    x = rep.x.lift
    G, Gp = _split(g), _split(gp)
    P = Fraction(p)
    gam21, gam32, gam31 = Fraction(G["21"]) / P ** c[0], Fraction(G["32"]) / P ** c[1], Fraction(G["31"]) / P ** c[2]
    gamp21, gamp32, gamp31 = Fraction(Gp["21"]) / P ** d[0], Fraction(Gp["32"]) / P ** d[1], Fraction(Gp["31"]) / P ** d[2]
    g12, g13, g22, g23 = G["12"], G["13"], G["22"], G["23"]
    rx = P ** (a1 + a2) - x * P**a3
    lhs = (g12 * P**a1 + g13 * P ** (a1 + a2) - g23 * P**a2) * x * rx
    rhs = (
        -gam21 * x * P ** (c[0] + a2)
        - gamp21 * rx * P ** (d[0] + a2 - a3)
        + gam32 * rx * P ** (a1 + c[1] - a3)
        + gamp32 * x * P ** (a1 + d[1])
        + gam31 * P ** (c[2] - a3 + a1 + a2)
        - gamp31 * P ** (d[2] - a3 + a1 + a2)
    )
    gp11 = g22 + g23 * x * P ** (a3 - a1) + gam21 * P ** (c[0] - a1) - gamp21 * P ** (d[0] - a1)
    gp33 = g22 - g12 * rx * P ** (-a2) - gam32 * P ** (c[1] - a2) + gamp32 * P ** (d[1] - a2)
    return [
        ("main", lhs, rhs),
        ("g'11", Fraction(Gp["11"]), gp11),
        ("g11", Fraction(G["11"]), Gp["11"] - g12 * P**a1 - g13 * x * P**a3),
        ("g'22", Fraction(Gp["22"]), g22 - g12 * P**a1 - g13 * P ** (a1 + a2) + g23 * P**a2),
        ("g'33", Fraction(Gp["33"]), gp33),
        ("g33", Fraction(G["33"]), Gp["33"] - g13 * rx + g23 * P**a2),
        ("g'12", Fraction(Gp["12"]), Fraction(g12 + g13 * P**a2)),
        ("g'13", Fraction(Gp["13"]), Fraction(g13)),
        ("g'23", Fraction(Gp["23"]), Fraction(g23 - g13 * P**a1)),
    ]


def coset_pair_relations_check(
    rep: CosetRep,
    c,
    d,
    p: int,
    n: int,
    samples: int = 1000,
    seed: int = 0,
    pairs: Optional[list] = None,
) -> tuple[bool, list]:
    """Check the coset-pair coefficient identities on sampled pairs.

    Returns ``(passed, failures)``; each failure is ``(sample_index, relation)``.
    """
    if rep.family == "S1":
        relations = s1_relations
    elif rep.family == "T_FAMILY":
        relations = t_relations
    else:
        raise ValueError("relations are available for the S1 and T families only")
    if pairs is None:
        pairs = sample_coset_pairs(rep, c, d, p, n, samples, seed)
    failures = []
    for idx, (g, gp) in enumerate(pairs):
        for name, lhs, rhs in relations(g, gp, rep, c, d, p):
            if lhs != rhs:
                failures.append((idx, name))
    return not failures, failures
