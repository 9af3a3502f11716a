"""3x3 matrices over Z/p^n and canonical forms of submodules of (Z/p^n)^3.

Matrices are row-major 9-tuples of ints in ``[0, p^n)``.  Tuples of Python
ints are faster than numpy arrays at this size and keep arithmetic exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

__all__ = ["ResidueRing", "IDENTITY", "vp"]

IDENTITY = (1, 0, 0, 0, 1, 0, 0, 0, 1)


def vp(x: int, p: int, cap: int) -> int:
    """p-adic valuation of ``x``, capped at ``cap`` (used for zero)."""
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class ResidueRing:
    """The ring Z/p^n with ``p`` an odd prime at least 5."""

    p: int
    n: int

    def __post_init__(self):
        if self.p < 5 or any(self.p % k == 0 for k in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"p must be a prime >= 5, got {self.p}")
        if self.n < 1:
            raise ValueError("n must be >= 1")

    @cached_property
    def modulus(self) -> int:
        return self.p**self.n

    @cached_property
    def gl3_order(self) -> int:
        p = self.p
        return p ** (9 * (self.n - 1)) * (p**3 - 1) * (p**3 - p) * (p**3 - p**2)

    @cached_property
    def unit_generator(self) -> int:
        """A generator of the cyclic group (Z/p^n)^x."""
        p, mod = self.p, self.modulus
        order = p ** (self.n - 1) * (p - 1)
        primes = _prime_factors(order)
        for g in range(2, mod):
            if g % p and all(pow(g, order // r, mod) != 1 for r in primes):
                return g
        raise AssertionError("no generator found")

    def is_unit(self, x: int) -> bool:
        return x % self.p != 0

    def mul(self, A: tuple, B: tuple) -> tuple:
        mod = self.modulus
        a0, a1, a2, a3, a4, a5, a6, a7, a8 = A
        b0, b1, b2, b3, b4, b5, b6, b7, b8 = B
        return (
            (a0 * b0 + a1 * b3 + a2 * b6) % mod,
            (a0 * b1 + a1 * b4 + a2 * b7) % mod,
            (a0 * b2 + a1 * b5 + a2 * b8) % mod,
            (a3 * b0 + a4 * b3 + a5 * b6) % mod,
            (a3 * b1 + a4 * b4 + a5 * b7) % mod,
            (a3 * b2 + a4 * b5 + a5 * b8) % mod,
            (a6 * b0 + a7 * b3 + a8 * b6) % mod,
            (a6 * b1 + a7 * b4 + a8 * b7) % mod,
            (a6 * b2 + a7 * b5 + a8 * b8) % mod,
        )

    def det(self, A: tuple) -> int:
        a, b, c, d, e, f, g, h, i = A
        return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % self.modulus

    def inv(self, A: tuple) -> tuple:
        a, b, c, d, e, f, g, h, i = A
        mod = self.modulus
        det = (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % mod
        if det % self.p == 0:
            raise ZeroDivisionError("matrix is not invertible mod p")
        di = pow(det, -1, mod)
        adj = (
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        )
        return tuple(x * di % mod for x in adj)

    def reduce(self, A) -> tuple:
        mod = self.modulus
        return tuple(int(x) % mod for x in A)

    def in_group(self, A: tuple) -> bool:
        return self.det(A) % self.p != 0

    def in_C(self, A: tuple, c) -> bool:
        """Membership in the level subgroup ``C_c`` (reduced mod p^n, ``c3 <= n``)."""
        c1, c2, c3 = c
        p = self.p
        return (
            A[3] % p**c1 == 0
            and A[7] % p**c2 == 0
            and A[6] % p**c3 == 0
            and self.in_group(A)
        )

    def elementary(self, i: int, j: int, t: int) -> tuple:
        m = list(IDENTITY)
        m[3 * i + j] = t % self.modulus
        return tuple(m)

    def diag(self, a: int, b: int, c: int) -> tuple:
        mod = self.modulus
        return (a % mod, 0, 0, 0, b % mod, 0, 0, 0, c % mod)

    def level_generators(self, c) -> list[tuple]:
        """Generators of ``C_c`` modulo p^n (``c = (0,0,0)`` gives all of GL(3))."""
        p, n = self.p, self.n
        g = self.unit_generator
        gens = [self.diag(g, 1, 1), self.diag(1, g, 1), self.diag(1, 1, g)]
        gens += [self.elementary(0, 1, 1), self.elementary(0, 2, 1), self.elementary(1, 2, 1)]
        c1, c2, c3 = c
        for (i, j), e in (((1, 0), c1), ((2, 1), c2), ((2, 0), c3)):
            if e < n:
                gens.append(self.elementary(i, j, p**e))
        return gens

    def random_element(self, c, rng) -> tuple:
        """Uniform element of ``C_c`` modulo p^n."""
        p, n, mod = self.p, self.n, self.modulus
        c1, c2, c3 = c
        while True:
            m = [rng.randrange(mod) for _ in range(9)]
            m[3] = p**c1 * rng.randrange(p ** (n - c1)) % mod
            m[7] = p**c2 * rng.randrange(p ** (n - c2)) % mod
            m[6] = p**c3 * rng.randrange(p ** (n - c3)) % mod
            m = tuple(m)
            if self.in_group(m):
                return m

    def apply(self, A: tuple, v: tuple) -> tuple:
        mod = self.modulus
        return (
            (A[0] * v[0] + A[1] * v[1] + A[2] * v[2]) % mod,
            (A[3] * v[0] + A[4] * v[1] + A[5] * v[2]) % mod,
            (A[6] * v[0] + A[7] * v[1] + A[8] * v[2]) % mod,
        )

    def howell(self, rows) -> tuple:
        """Canonical echelon basis of the submodule of (Z/p^n)^3 spanned by ``rows``.

        Pivots are powers of p, entries above a pivot are reduced modulo it and
        each pivot row's p-power multiples that kill the pivot are fed back, so
        the form depends only on the span.
        """
        p, n, mod = self.p, self.n, self.modulus
        work = [list(r) for r in rows if any(r)]
        pivots = []
        for j in range(3):
            best, bv = -1, n
            for idx, r in enumerate(work):
                x = r[j]
                if x:
                    v = 0
                    while x % p == 0:
                        x //= p
                        v += 1
                    if v < bv:
                        best, bv = idx, v
                        if v == 0:
                            break
            if best < 0:
                continue
            r = work.pop(best)
            pv = p**bv
            u = pow(r[j] // pv, -1, mod)
            r = [x * u % mod for x in r]
            nxt = []
            for s in work:
                t = s[j] // pv
                if t:
                    s = [(x - t * y) % mod for x, y in zip(s, r)]
                if any(s):
                    nxt.append(s)
            killed = [x * p ** (n - bv) % mod for x in r]
            if any(killed):
                nxt.append(killed)
            work = nxt
            pivots.append((j, pv, r))
        out = [r for _, _, r in pivots]
        for i, (j, pv, r) in enumerate(pivots):
            for k in range(i):
                t = out[k][j] // pv
                if t:
                    out[k] = [(x - t * y) % mod for x, y in zip(out[k], r)]
        return tuple(tuple(r) for r in out)


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out
