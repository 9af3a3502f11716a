import warnings

import pytest

from checks import (
    GRID,
    SMALL_GRID,
    check_base_irreducible,
    check_containment,
    check_cubic_level,
    check_monotonicity,
    check_positivity,
    check_symmetry,
    check_telescoping,
    check_theorem_grid,
)
from gl3branch.cosets import CosetRep, classify_x, enumerate_R
from gl3branch.polyq import ALPHA, ONE, Q, QPoly
from gl3branch.poset import ConductorData, enumerate_Tm
from gl3branch.support import (
    TheoremMismatch,
    count_S,
    dim_U,
    dim_V,
    intertwine_V,
    irreducibility_report,
    supports,
    total_support_member,
)

M22 = ConductorData(2, 2)
M12 = ConductorData(1, 2)
M01 = ConductorData(0, 1)


def _t(a, c, d, lift=1, p=5):
    return CosetRep("T_FAMILY", a=a, x=classify_x(lift, a, c, d, p))


def test_support_examples():
    c = (4, 4, 4)
    d = supports(CosetRep("S1", alpha=2, beta=2), c, c, M22)
    assert d.supported and d.case_tag == "ii"
    c = (2, 2, 2)
    d = supports(_t((1, 2, 2), c, c), c, c, M22, 5)
    assert not d.supported and d.case_tag == "i2b"
    c = (1, 1, 1)
    d = supports(_t((1, 1, 1), c, c), c, c, M01, 5)
    assert d.supported and d.case_tag == "i1"
    assert supports(CosetRep("W0"), c, c, M01).case_tag == "excluded_w"


def test_supports_rejects_foreign_rep():
    with pytest.raises(ValueError):
        supports(CosetRep("S1", alpha=3, beta=3), (1, 1, 1), (1, 1, 1), M01)


def test_count_S_examples():
    assert count_S((2, 2, 2), (2, 2, 2), M22) == ONE
    assert count_S((1, 1, 1), (1, 1, 1), M01) == 2
    assert count_S((2, 2, 3), (2, 2, 2), M22) == ONE


def test_dim_examples():
    assert dim_U((1, 1, 1)) == ALPHA
    assert dim_U((0, 1, 1)) == Q * Q + Q + 1
    assert dim_U((2, 2, 3)) == ALPHA * Q**4
    with pytest.raises(ValueError):
        dim_U((0, 0, 0))
    assert dim_V((3, 3, 4), M22) == Q**4 * (Q - 1) ** 3 * ALPHA
    assert dim_V((2, 2, 2), M22) == Q**3 * ALPHA
    assert dim_V((1, 2, 2), M12) == Q**2 * ALPHA
    assert dim_V((2, 2, 2), M22) + dim_V((2, 2, 3), M22) == dim_U((2, 2, 3))


def test_intertwine_examples():
    assert intertwine_V((3, 3, 4), (3, 3, 4), M22).i_VV == Q - 1
    assert intertwine_V((2, 4, 4), (2, 4, 4), M22).i_VV == 3
    assert intertwine_V((1, 3, 4), (2, 2, 4), M12).i_VV == ONE


def test_intertwine_json_has_terms():
    data = intertwine_V((3, 3, 4), (3, 3, 4), M22).to_json()
    assert data["i_VV"] == [-1, 1]
    assert len(data["subset_terms"]) == 64
    assert data["subset_terms"][0]["I"] == [] and data["subset_terms"][0]["sign"] == 1


def test_total_support_examples():
    assert total_support_member(CosetRep("T_FAMILY", a=(1, 2, 2)), M12)
    assert not total_support_member(CosetRep("S1", alpha=1, beta=3), M12)
    assert not total_support_member(CosetRep("W0"), M12)


def test_total_support_contains_all_supports():
    for m in SMALL_GRID:
        ts = enumerate_Tm(m, componentwise_max=(m.N + 2,) * 3)
        for c in ts:
            for d in ts:
                for r in enumerate_R(c, d, 5):
                    if supports(r, c, d, m, 5).supported:
                        assert total_support_member(r, m), (c, d, str(r))


def test_irreducibility_examples():
    r = irreducibility_report((2, 3, 3), M22, strict=True)
    assert r.i_VV == 2 and not r.irreducible
    assert ("Prop4.5(1)", QPoly.const(2)) in r.theorem_tags
    r = irreducibility_report((2, 2, 4), M22, strict=True)
    assert r.irreducible and "Thm4.2" in dict(r.theorem_tags)
    r = irreducibility_report((3, 3, 3), M22, strict=True)
    assert r.irreducible and "Thm4.3" in dict(r.theorem_tags)


def test_mismatch_surfaces(monkeypatch):
    import gl3branch.support as sup

    monkeypatch.setattr(sup, "theorem_predictions", lambda c, m: [("fake", QPoly.const(7))])
    with pytest.raises(TheoremMismatch):
        sup.irreducibility_report((2, 2, 2), M22, strict=True)
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        sup.irreducibility_report((2, 2, 2), M22)
    assert w


@pytest.mark.parametrize("m", SMALL_GRID, ids=str)
def test_monotonicity(m):
    assert check_monotonicity(m, (m.N + 3,) * 3) == []


@pytest.mark.parametrize("m", GRID, ids=str)
def test_symmetry_containment_telescoping(m):
    b = (m.N + 3,) * 3
    assert check_symmetry(m, b) == []
    assert check_containment(m, b) == []
    assert check_telescoping(m, b) == []


@pytest.mark.parametrize("m", SMALL_GRID, ids=str)
def test_positivity(m):
    assert check_positivity(m, (m.N + 2,) * 3) == []


def test_base_irreducible():
    assert check_base_irreducible() == []


def test_supports_at_cubic_levels():
    assert check_cubic_level(GRID, extra=3) == []


def test_theorem_grid():
    assert check_theorem_grid() == []
