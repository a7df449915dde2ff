"""Tiny exact cyclotomic arithmetic for character computations.

Elements of Q(zeta_N) are carried as coefficient vectors in the group ring
Q[x]/(x^N - 1) (exponents mod N), where sums and products are convolutions
and never need a field reduction.  Extracting a rational value reduces the
vector modulo the N-th cyclotomic polynomial; character inner products and
class pairings always land in Q, and the reduction certifies it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["Cyclotomic", "cyclotomic_polynomial"]


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    while den and den[-1] == 0:
        den = den[:-1]
        dd -= 1
    q = [Fraction(0)] * max(len(num) - dd, 1)
    while len(num) - 1 >= dd and any(c != 0 for c in num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        coef = num[-1] / den[-1]
        q[shift] += coef
        for i, c in enumerate(den):
            num[shift + i] -= coef * c
    while num and num[-1] == 0:
        num.pop()
    return q, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]   # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("cyclotomic division must be exact")
            num = q
    return tuple(num)


class Cyclotomic:
    """An element of Q(zeta_N) as a vector over the powers of zeta mod N."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        self.n = n
        self.coeffs = [Fraction(0)] * n
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)):
                self.coeffs[e % n] += Fraction(c)

    @classmethod
    def zeta(cls, n: int, power: int = 1) -> "Cyclotomic":
        return cls(n, {power: Fraction(1)})

    @classmethod
    def rational(cls, n: int, value) -> "Cyclotomic":
        return cls(n, {0: Fraction(value)})

    def __add__(self, other):
        other = self._coerce(other)
        out = Cyclotomic(self.n)
        out.coeffs = [a + b for a, b in zip(self.coeffs, other.coeffs)]
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Cyclotomic(self.n)
        out.coeffs = [-a for a in self.coeffs]
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = Cyclotomic(self.n)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out.coeffs[(i + j) % self.n] += a * b
        return out

    __rmul__ = __mul__

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise ValueError("mixed cyclotomic orders")
            return other
        return Cyclotomic.rational(self.n, other)

    def conjugate(self) -> "Cyclotomic":
        out = Cyclotomic(self.n)
        for e, c in enumerate(self.coeffs):
            out.coeffs[(-e) % self.n] += c
        return out

    def as_rational(self) -> Fraction:
        """Reduce modulo the cyclotomic polynomial; raise if not rational."""
        _, rem = _poly_divmod(list(self.coeffs), list(cyclotomic_polynomial(self.n)))
        if len(rem) > 1:
            raise ValueError("cyclotomic value is not rational")
        return rem[0] if rem else Fraction(0)

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self.coeffs})"
