import pytest
from hypothesis import given, strategies as st

from gl3branch.polyq import ALPHA, ONE, ZERO, Q, QPoly, phi, poly_arith, poly_eval

polys = st.lists(st.integers(-20, 20), max_size=6).map(QPoly)


def test_arith_examples():
    assert poly_arith("add", Q - 1, ONE) == Q
    assert poly_arith("mul", Q - 1, Q - 1) == QPoly([1, -2, 1])
    assert poly_arith("mul", Q + 1, Q * Q + Q + 1) == QPoly([1, 2, 2, 1])
    assert ALPHA == QPoly([1, 2, 2, 1])


def test_eval_examples():
    assert poly_eval(ALPHA, 5) == 186
    assert poly_eval(Q - 2, 5) == 3
    assert poly_eval(Q**4 * (Q - 1) ** 3, 5) == 40000


def test_eval_rejects_small_q():
    with pytest.raises(ValueError):
        poly_eval(Q, 3)


def test_phi():
    assert phi(0) == ONE
    assert phi(1) == Q - 1
    assert phi(3) == Q**2 * (Q - 1)


def test_normal_form_and_text():
    assert QPoly([1, 2, 0, 0]) == QPoly([1, 2])
    assert ZERO.degree == -1 and not ZERO
    assert str(Q**4 * (Q - 1) ** 3) == "q^7 - 3q^6 + 3q^5 - q^4"
    assert str(Q - 1) == "q - 1"
    assert QPoly.from_json((Q - 2).to_json()) == Q - 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys, st.integers(4, 50))
def test_evaluation_is_a_homomorphism(a, b, q0):
    assert (a + b)(q0) == a(q0) + b(q0)
    assert (a * b)(q0) == a(q0) * b(q0)
