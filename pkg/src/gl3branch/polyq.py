"""Integer polynomials in the residue-field size ``q``.

Every count produced by this package (coset counts, dimensions, numbers of
intertwining operators) is a polynomial in ``q`` with integer coefficients.
``QPoly`` is a small dense, immutable implementation of that ring.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

__all__ = ["QPoly", "Q", "ONE", "ZERO", "ALPHA", "phi", "poly_arith", "poly_eval"]

MIN_Q = 4

Coercible = Union["QPoly", int]


class QPoly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``q**i``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._coeffs = tuple(c)

    @classmethod
    def const(cls, n: int) -> "QPoly":
        return cls((n,))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "QPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "QPoly":
        return cls(data)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def to_json(self) -> list:
        return list(self._coeffs)

    def __call__(self, q0: int) -> int:
        return poly_eval(self, q0)

    def evaluate(self, q0: int) -> int:
        """Evaluate at any integer, without the ``q > 3`` guard of ``poly_eval``."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * q0 + c
        return acc

    # ring structure

    @staticmethod
    def _coerce(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        return NotImplemented

    def __add__(self, other: Coercible) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self._coeffs)

    def __sub__(self, other: Coercible) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "QPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))
# (q+1)(q^2+q+1), the index of the Iwahori subgroup in GL(3) of the residue field
ALPHA = (Q + 1) * (Q * Q + Q + 1)


def poly_arith(op: str, p1: QPoly, p2: QPoly) -> QPoly:
    if op == "add":
        return p1 + p2
    if op == "sub":
        return p1 - p2
    if op == "mul":
        return p1 * p2
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(p: QPoly, q0: int) -> int:
    """Exact value of ``p`` at ``q = q0``; only ``q0 >= 4`` is meaningful."""
    if q0 < MIN_Q:
        raise ValueError(f"q0 must be at least {MIN_Q}, got {q0}")
    return p.evaluate(q0)


def phi(k: int) -> QPoly:
    """Number of units of R/p^k: 1 for k = 0, else q^(k-1)(q-1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return ONE
    return QPoly.monomial(k - 1) * (Q - 1)
