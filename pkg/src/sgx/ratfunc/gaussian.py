"""Exact Gaussian rationals, the constant field Q(i)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from sgx.errors import DivisionByZero

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational")


class GaussRational:
    """An element ``re + im*i`` of Q(i).

    Both parts are ``fractions.Fraction`` so equality and hashing are
    structural.

    >>> GaussRational(1, 2) * GaussRational(1, -2)
    GaussRational(5)
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, v) -> "GaussRational":
        if isinstance(v, GaussRational):
            return v
        if isinstance(v, complex):
            raise TypeError("floating point complex numbers are not exact")
        return cls(v)

    @staticmethod
    def _raw(re: Fraction, im: Fraction) -> "GaussRational":
        g = object.__new__(GaussRational)
        g.re = re
        g.im = im
        return g

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def is_rational_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational._raw(self.re + other, self.im)
            return NotImplemented
        return GaussRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational._raw(self.re - other, self.im)
            return NotImplemented
        return GaussRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational._raw(other - self.re, -self.im)
        return NotImplemented

    def __neg__(self):
        return GaussRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                return GaussRational._raw(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussRational._raw(a * c, _ZERO)
            return GaussRational._raw(a * c, a * d)
        if not d:
            return GaussRational._raw(a * c, b * c)
        return GaussRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussRational":
        return GaussRational._raw(self.re, -self.im)

    def inverse(self) -> "GaussRational":
        if not self:
            raise DivisionByZero("inverse of zero in Q(i)")
        if not self.im:
            return GaussRational._raw(1 / self.re, _ZERO)
        n = self.norm()
        return GaussRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussRational):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise DivisionByZero("division by zero in Q(i)")
                return GaussRational._raw(self.re / other, self.im / other)
            return NotImplemented
        if not other.im:
            if not other.re:
                raise DivisionByZero("division by zero in Q(i)")
            return GaussRational._raw(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(other) / self
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def sort_key(self):
        """Norm first, then real part, then imaginary part."""
        return (self.norm(), self.re, self.im)

    def denominator(self) -> int:
        """Least common denominator of both parts."""
        a, b = self.re.denominator, self.im.denominator
        return a * b // gcd(a, b)

    def __repr__(self):
        if not self.im:
            return f"GaussRational({self.re})"
        return f"GaussRational({self.re}, {self.im})"

    def __str__(self):
        return format_gauss(self)


ZERO = GaussRational._raw(_ZERO, _ZERO)
ONE = GaussRational._raw(_ONE, _ZERO)
I = GaussRational._raw(_ZERO, _ONE)


def _fmt_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _fmt_imag(q: Fraction) -> str:
    # magnitude only, sign handled by the caller
    q = abs(q)
    if q == 1:
        return "i"
    if q.denominator == 1:
        return f"{q.numerator}*i"
    if q.numerator == 1:
        return f"i/{q.denominator}"
    return f"{q.numerator}*i/{q.denominator}"


def format_gauss(c: GaussRational) -> str:
    """Canonical text for a Gaussian rational, e.g. ``1/2-3*i``.

    The output is accepted by the expression parser and re-reads to the
    same value.
    """
    if not c.im:
        return _fmt_frac(c.re)
    im = _fmt_imag(c.im)
    if not c.re:
        return im if c.im > 0 else "-" + im
    return _fmt_frac(c.re) + ("+" if c.im > 0 else "-") + im


def is_compound(c: GaussRational) -> bool:
    """True if ``format_gauss(c)`` needs parentheses inside a product."""
    if c.re and c.im:
        return True
    part = c.im if c.im else c.re
    return part.denominator != 1


# ---------------------------------------------------------------------------
# Gaussian integers: exact factorisation helpers for the rational-root search.
# Elements are plain tuples (a, b) meaning a + b*i.

def gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gi_norm(x) -> int:
    return x[0] * x[0] + x[1] * x[1]


def gi_divmod_exact(x, y):
    """Return x / y if it is a Gaussian integer, else None."""
    n = gi_norm(y)
    re = x[0] * y[0] + x[1] * y[1]
    im = x[1] * y[0] - x[0] * y[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _factor_int(n: int) -> dict:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _two_squares(p: int):
    """Return (a, b) with a*a + b*b == p for a prime p = 1 mod 4."""
    # Hermite-Serret: find a square root of -1 mod p, then run Euclid.
    for c in range(2, p):
        t = pow(c, (p - 1) // 4, p)
        if t * t % p == p - 1:
            break
    a, b = p, t
    limit = isqrt(p)
    while b > limit:
        a, b = b, a % b
    c = isqrt(p - b * b)
    return (b, c)


def gaussian_prime_factors(z):
    """Factor a nonzero Gaussian integer into Gaussian primes.

    Returns a list of ``(prime, exponent)`` pairs; the unit is dropped.
    """
    n = gi_norm(z)
    if n == 0:
        raise ValueError("cannot factor zero")
    primes = []
    for p, _ in sorted(_factor_int(n).items()):
        if p == 2:
            candidates = [(1, 1)]
        elif p % 4 == 3:
            candidates = [(p, 0)]
        else:
            a, b = _two_squares(p)
            candidates = [(a, b), (a, -b)]
        for pi in candidates:
            e = 0
            while True:
                q = gi_divmod_exact(z, pi)
                if q is None:
                    break
                z = q
                e += 1
            if e:
                primes.append((pi, e))
    return primes


def gaussian_divisors(z):
    """All divisors of ``z`` up to units (one representative per associate class)."""
    divs = [(1, 0)]
    for pi, e in gaussian_prime_factors(z):
        new = []
        for d in divs:
            acc = d
            new.append(acc)
            for _ in range(e):
                acc = gi_mul(acc, pi)
                new.append(acc)
        divs = new
    return divs


UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))
