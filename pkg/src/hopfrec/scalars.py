"""Exact scalars: elements of cyclotomic number fields Q(zeta_n).

A Scalar is a residue modulo the n-th cyclotomic polynomial Phi_n with
rational coefficients.  Conductor n = 1 encodes a plain rational.  Every
operation is exact; equality is decidable; no floats anywhere.

Representation constraint: coefficients are a tuple of Fraction of length
deg Phi_n = phi(n), reduced modulo Phi_n, so each field element has exactly
one representation at a given conductor.  Scalars of different conductors
compare and combine by promotion into Q(zeta_lcm).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_div_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Quotient of num by den in Q[x]; the division must be exact."""
    num = list(num)
    dd = len(den) - 1
    assert den[dd] != 0
    q = [_ZERO] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] / den[dd]
        q[k - dd] = c
        if c:
            for i, dc in enumerate(den):
                num[k - dd + i] -= c * dc
    assert all(c == 0 for c in num[:dd]), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree.  Monic with integer entries."""
    if n < 1:
        raise ValueError(f"conductor must be a positive integer, got {n}")
    num = [_ZERO] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = _ONE
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, [Fraction(c) for c in cyclotomic_poly(d)])
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def phi_degree(n: int) -> int:
    """Euler phi(n), the degree of Phi_n."""
    return len(cyclotomic_poly(n)) - 1


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    """Remainder of a polynomial modulo Phi_n, padded to length phi(n)."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    cs = list(coeffs)
    for k in range(len(cs) - 1, deg - 1, -1):
        c = cs[k]
        if c:
            # subtract c * x^(k-deg) * Phi_n; Phi_n is monic
            for i in range(deg + 1):
                cs[k - deg + i] -= c * phi[i]
        cs.pop()
    while len(cs) < deg:
        cs.append(_ZERO)
    return tuple(cs)


def _ext_inverse(coeffs: tuple[Fraction, ...], n: int) -> tuple[Fraction, ...]:
    """Inverse of a nonzero residue modulo Phi_n via extended Euclid in Q[x]."""
    phi = [Fraction(c) for c in cyclotomic_poly(n)]

    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    r0, r1 = phi, strip(list(coeffs))
    s0, s1 = [_ZERO], [_ONE]
    while r1:
        # r0 = q * r1 + r2
        r2 = list(r0)
        q = [_ZERO] * max(1, len(r2) - len(r1) + 1)
        lead = r1[-1]
        for k in range(len(r2) - 1, len(r1) - 2, -1):
            c = r2[k] / lead
            q[k - len(r1) + 1] = c
            if c:
                for i, rc in enumerate(r1):
                    r2[k - len(r1) + 1 + i] -= c * rc
        r2 = strip(r2)
        # s2 = s0 - q * s1
        s2 = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
        for a, qa in enumerate(q):
            if qa:
                for b, sb in enumerate(s1):
                    s2[a + b] -= qa * sb
        r0, r1 = r1, r2
        s0, s1 = s1, strip(s2)
    # r0 = gcd, a nonzero constant since Phi_n is irreducible over Q
    assert len(r0) == 1 and r0[0] != 0, "residue not invertible"
    g = r0[0]
    return _reduce([c / g for c in s0], n)


class Scalar:
    """An element of Q(zeta_n), exact.

    Do not mutate.  Construct through the classmethods or by arithmetic;
    int and Fraction operands are coerced on the fly.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi_degree(conductor):
            raise ValueError(
                f"conductor {conductor} needs {phi_degree(conductor)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Scalar is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, p, q=1) -> "Scalar":
        return cls(1, (Fraction(p, q),))

    @classmethod
    def zero(cls) -> "Scalar":
        return _S_ZERO

    @classmethod
    def one(cls) -> "Scalar":
        return _S_ONE

    @classmethod
    def zeta(cls, n: int) -> "Scalar":
        """A primitive n-th root of unity, as the residue of x mod Phi_n."""
        return cls(n, _reduce([_ZERO, _ONE], n))

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(1, (Fraction(x),))
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; only for residues with zero zeta part."""
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def promote(self, n: int) -> "Scalar":
        """The same value viewed in Q(zeta_n); requires conductor | n."""
        m = self.conductor
        if m == n:
            return self
        assert n % m == 0, "promotion target must be a conductor multiple"
        stride = n // m
        out = [_ZERO] * ((len(self.coeffs) - 1) * stride + 1)
        for k, c in enumerate(self.coeffs):
            out[k * stride] = c
        return Scalar(n, _reduce(out, n))

    # -- arithmetic ------------------------------------------------------

    def _pair(self, other):
        other = Scalar.coerce(other)
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.promote(n), other.promote(n), n

    @staticmethod
    def _coercible(other) -> bool:
        return isinstance(other, (Scalar, int, Fraction))

    def __add__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        a, b, n = self._pair(other)
        return Scalar(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        a, b, n = self._pair(other)
        if n == 1:
            return Scalar(1, (a.coeffs[0] * b.coeffs[0],))
        conv = [_ZERO] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ca in enumerate(a.coeffs):
            if ca:
                for j, cb in enumerate(b.coeffs):
                    if cb:
                        conv[i + j] += ca * cb
        return Scalar(n, _reduce(conv, n))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.conductor == 1:
            return Scalar(1, (1 / self.coeffs[0],))
        return Scalar(self.conductor, _ext_inverse(self.coeffs, self.conductor))

    def __truediv__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not Scalar._coercible(other):
            return NotImplemented
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = _S_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        a, b, _ = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-conductor equality makes a consistent hash useless

    # -- display ---------------------------------------------------------

    def __str__(self):
        if self.conductor == 1:
            f = self.coeffs[0]
            return f"{f.numerator}/{f.denominator}"
        body = ",".join(f"{c.numerator}/{c.denominator}" for c in self.coeffs)
        return f"z{self.conductor}[{body}]"

    def __repr__(self):
        return f"Scalar({self})"


_S_ZERO = Scalar(1, (_ZERO,))
_S_ONE = Scalar(1, (_ONE,))

ZERO = _S_ZERO
ONE = _S_ONE


def sc(x) -> Scalar:
    """Shorthand coercion used throughout the package."""
    return Scalar.coerce(x)
