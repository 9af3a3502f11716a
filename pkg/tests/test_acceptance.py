"""Acceptance criteria, one test each.

Every test records a ``criterion k: PASS|FAIL`` line that is printed in the
pytest terminal summary.  Run this file directly to print only those lines.
"""

import csv
import io
import sys

from acceptance_log import LINES, criterion
from checks import (
    SELF_M22,
    SELF_M12,
    EQUIV_M12,
    GRID,
    M12,
    M22,
    SMALL_GRID,
    DIMS_M22,
    DIMS_M12,
    check_base_irreducible,
    check_containment,
    check_cubic_level,
    check_depth_inequality,
    check_figure,
    check_monotonicity,
    check_positivity,
    check_symmetry,
    check_table,
    check_telescoping,
    check_theorem_grid,
    check_x_count_enumeration,
    equivalences,
)
from gl3branch.cosets import enumerate_R
from gl3branch.emit import table_emit
from gl3branch.oracle import coset_pair_relations_check, verify_report
from gl3branch.poset import ConductorData, enumerate_Tm, parse_triple

P = 5


def _table_from_csv(text):
    rows = list(csv.reader(io.StringIO(text)))[1:]
    out = {parse_triple(r[0]): r[1] for r in rows}
    assert len(out) == len(rows)
    return out


def test_criterion_1_dimensions_m22():
    with criterion(1, "dimensions of V_c, M=N=2, bound (4,4,4)", 1.0):
        from gl3branch.support import _count_S_cached

        _count_S_cached.cache_clear()
        got = _table_from_csv(table_emit(M22, bound=(4, 4, 4)))
        assert got == {c: str(v) for c, v in DIMS_M22.items()}, "CSV rows differ"
        assert check_table(M22, DIMS_M22, enumerate_Tm(M22, componentwise_max=(4, 4, 4))) == []


def test_criterion_2_dimensions_m12():
    with criterion(2, "dimensions of V_c, M=1, N=2, sum <= 9", 1.0):
        got = _table_from_csv(table_emit(M12, sum_max=9))
        assert got == {c: str(v) for c, v in DIMS_M12.items()}, "CSV rows differ"
        assert check_table(M12, DIMS_M12, enumerate_Tm(M12, sum_max=9)) == []


def test_criterion_3_self_intertwining_m22():
    with criterion(3, "self-intertwining numbers, M=N=2 (14 nodes)", 5.0):
        from gl3branch.support import _count_S_cached

        _count_S_cached.cache_clear()
        assert len(enumerate_Tm(M22, componentwise_max=(4, 4, 4))) == len(SELF_M22) == 14
        bad = check_figure(M22, SELF_M22)
        assert bad == [], bad


def test_criterion_4_self_intertwining_m12():
    with criterion(4, "self-intertwining numbers, M=1, N=2 (13 nodes) and both equivalences", 5.0):
        ts = enumerate_Tm(M12, sum_max=9)
        assert sorted(ts) == sorted(c for c, _ in SELF_M12)
        bad = check_figure(M12, SELF_M12)
        assert bad == [], bad
        assert equivalences(M12, ts) == EQUIV_M12


def test_criterion_5_theorem_grid():
    with criterion(5, "closed-form irreducibility and multiplicity grid, 0<=M<=N<=3", 60.0):
        assert len(GRID) == 9
        bad = check_theorem_grid(GRID)
        assert bad == [], bad


def test_criterion_6_oracle_level1():
    with criterion(6, "oracle concordance at level 1, p=5", 300.0):
        total = 0
        for m in (ConductorData(0, 1), ConductorData(1, 1)):
            reports = verify_report(P, m, level=1)
            total += len(reports)
            bad = [r.to_json() for r in reports if r.status != "pass"]
            assert bad == [], bad
        assert total == 4 + 1


def test_criterion_7_oracle_level2():
    with criterion(7, "oracle concordance at level 2, p=5, named pairs", 1800.0):
        named = [((2, 2, 2), (2, 2, 2)), ((1, 1, 2), (1, 1, 2)), ((2, 2, 2), (1, 1, 2))]
        m = ConductorData(1, 1)
        reports = verify_report(P, m, named, level=2, mode="exact")
        bad = [r.to_json() for r in reports if r.status != "pass"]
        assert bad == [], bad
        assert reports[0].oracle_R == 18
        reports = verify_report(P, ConductorData(2, 2), named[:1], level=2, mode="exact")
        assert all(r.status == "pass" for r in reports)
        # the sampled path agrees on the same data
        reports = verify_report(P, m, named[:1], level=2, mode="sampled", seed=0, samples=10**4)
        assert all(r.status == "pass" for r in reports)


def test_criterion_8_properties():
    with criterion(8, "property suites (monotonicity, symmetry, telescoping, positivity, depth, X counts, supports at (n,n,n))", 120.0):
        for m in SMALL_GRID:
            b = (m.N + 2,) * 3
            assert check_monotonicity(m, b) == [], ("monotonicity", m)
            assert check_symmetry(m, b) == [], ("symmetry", m)
            assert check_containment(m, b) == [], ("containment", m)
            assert check_telescoping(m, b) == [], ("telescoping", m)
            assert check_positivity(m, b) == [], ("positivity", m)
        assert check_base_irreducible(GRID) == []
        assert check_depth_inequality() == []
        assert check_x_count_enumeration(P) == []
        assert check_cubic_level(GRID, extra=2) == []


def test_criterion_9_coset_pair_relations():
    with criterion(9, "coset-pair relations on 1000 sampled pairs per representative, levels 1-2", 60.0):
        cases = [((1, 1, 1), (1, 1, 1), 1), ((2, 2, 2), (2, 2, 2), 2), ((1, 1, 2), (2, 2, 2), 2)]
        families = set()
        for c, d, n in cases:
            for rep in enumerate_R(c, d, P):
                if rep.family not in ("S1", "T_FAMILY"):
                    continue
                ok, fails = coset_pair_relations_check(rep, c, d, P, n, samples=1000, seed=0)
                assert ok, (str(rep), c, d, fails[:3])
                families.add((rep.family, n))
        assert families == {("S1", 1), ("S1", 2), ("T_FAMILY", 1), ("T_FAMILY", 2)}


if __name__ == "__main__":
    import pytest

    code = pytest.main([__file__, "-q", "--no-header", "-p", "no:cacheprovider"] + sys.argv[1:])
    print()
    for line in LINES:
        print(line)
    sys.exit(code)
