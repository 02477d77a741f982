"""The algebra of e^(-r) times Laurent polynomials with rational coefficients.

An element is e^(-r) * sum_k c_k r^k with finitely many nonzero c_k in Q and
k ranging over (possibly negative) integers.  The algebra is closed under
d/dr, under multiplication by any integer power of r, and therefore under the
radial Laplacian f'' + ((n-1)/r) f' in any dimension n.  That closure is what
lets every identity in this package be checked by exact coefficient
arithmetic: the exponential factor is part of the type, never a number.

Numeric evaluation (the only place floating point appears) goes through
mpmath at a configurable mantissa size, 128 bits by default.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import mpmath

from .errors import EvenDimension, NonpositiveRadius

DEFAULT_PRECISION = 128  # mantissa bits for numeric evaluation


class ExpLaurent:
    """e^(-r) * (Laurent polynomial in r) with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(k)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExpLaurent is immutable")

    @classmethod
    def zero(cls) -> "ExpLaurent":
        return cls()

    @classmethod
    def exponential(cls) -> "ExpLaurent":
        """The bare e^(-r), i.e. coefficient 1 on r^0."""
        return cls({0: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "ExpLaurent") -> "ExpLaurent":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return ExpLaurent(out)

    def __sub__(self, other: "ExpLaurent") -> "ExpLaurent":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return ExpLaurent(out)

    def __neg__(self) -> "ExpLaurent":
        return ExpLaurent({k: -c for k, c in self.terms.items()})

    def scale(self, s) -> "ExpLaurent":
        s = Fraction(s)
        if not s:
            return ExpLaurent.zero()
        return ExpLaurent({k: s * c for k, c in self.terms.items()})

    def mul_rpow(self, j: int) -> "ExpLaurent":
        """Multiply by r^j (j may be negative)."""
        if j == 0:
            return self
        return ExpLaurent({k + j: c for k, c in self.terms.items()})

    # -- calculus -------------------------------------------------------------

    def diff(self) -> "ExpLaurent":
        """d/dr, using d/dr (e^-r r^k) = e^-r (k r^(k-1) - r^k)."""
        out: dict = {}
        for k, c in self.terms.items():
            if k:
                out[k - 1] = out.get(k - 1, 0) + k * c
            out[k] = out.get(k, 0) - c
        return ExpLaurent(out)

    def laplacian(self, n: int) -> "ExpLaurent":
        """Radial Laplacian f'' + ((n-1)/r) f' in odd dimension n."""
        if n % 2 == 0:
            raise EvenDimension(f"dimension must be odd, got {n}")
        d1 = self.diff()
        out = d1.diff()
        if n != 1:
            out = out + d1.mul_rpow(-1).scale(n - 1)
        return out

    # -- evaluation -------------------------------------------------------------

    def laurent_at(self, x: Fraction) -> Fraction:
        """The Laurent part sum_k c_k x^k, exactly (x must be nonzero)."""
        x = Fraction(x)
        total = Fraction(0)
        for k, c in self.terms.items():
            total += c * x ** k
        return total

    def eval(self, at, prec_bits: int = DEFAULT_PRECISION) -> mpmath.mpf:
        """Numeric value e^(-at) * sum c_k at^k at the given precision."""
        at = Fraction(at)
        if at <= 0:
            raise NonpositiveRadius(f"evaluation point must be positive, got {at}")
        with mpmath.workprec(prec_bits):
            x = mpmath.mpf(at.numerator) / at.denominator
            total = mpmath.mpf(0)
            for k, c in self.terms.items():
                total += (mpmath.mpf(c.numerator) / c.denominator) * x ** k
            return mpmath.exp(-x) * total

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if self.is_zero:
            return "ExpLaurent(0)"
        bits = [f"{c}*r^{k}" for k, c in sorted(self.terms.items(), reverse=True)]
        return f"ExpLaurent(e^-r * ({' + '.join(bits)}))"
