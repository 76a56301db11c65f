"""Dense univariate polynomials over Q(i)."""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from sgx.errors import DivisionByZero
from sgx.ratfunc.gaussian import ONE, ZERO, GaussRational, format_gauss, is_compound


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial with coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [GaussRational.coerce(c) for c in coeffs]
        self.coeffs = _trim(cs)
        self._hash = None

    @classmethod
    def _from_trimmed(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls._from_trimmed((ZERO, ONE))

    @classmethod
    def linear_root(cls, root) -> "Poly":
        """The monic polynomial ``x - root``."""
        return cls((-GaussRational.coerce(root), ONE))

    # -- basic properties --------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> GaussRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def trailing(self) -> GaussRational:
        return self.coeffs[0] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly._from_trimmed(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_trimmed(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (GaussRational, int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._from_trimmed(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly._from_trimmed(_trim(out))

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = GaussRational.coerce(c)
        if not c:
            return Poly._from_trimmed(())
        return Poly._from_trimmed(tuple(c * a for a in self.coeffs))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._from_trimmed((ONE,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly"):
        """Euclidean division; returns (quotient, remainder)."""
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) <= db:
            return Poly._from_trimmed(()), self
        inv_lead = other.lead.inverse()
        quo = [ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lead
            quo[k - db] = q
            for j in range(db + 1):
                if bc[j]:
                    rem[k - db + j] = rem[k - db + j] - q * bc[j]
        return Poly._from_trimmed(_trim(quo)), Poly._from_trimmed(_trim(rem[:db]))

    def __floordiv__(self, other):
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other):
        return self.divmod(_as_poly(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.lead
        if lead == 1:
            return self
        inv = lead.inverse()
        return Poly._from_trimmed(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly._from_trimmed(
            _trim([c * k for k, c in enumerate(self.coeffs)][1:])
        )

    def __call__(self, v):
        """Evaluate by Horner's rule at a Gaussian rational."""
        v = GaussRational.coerce(v)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift(self, s) -> "Poly":
        """Return ``p(x + s)`` exactly."""
        s = GaussRational.coerce(s)
        if not s or len(self.coeffs) <= 1:
            return self
        n = len(self.coeffs)
        # p(x+s) = sum_k c_k sum_j C(k,j) s^(k-j) x^j
        powers = [ONE]
        for _ in range(n):
            powers.append(powers[-1] * s)
        out = [ZERO] * n
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            for j in range(k + 1):
                out[j] = out[j] + c * powers[k - j] * comb(k, j)
        return Poly._from_trimmed(_trim(out))

    def content_denominator(self) -> int:
        """Least common multiple of all coefficient denominators."""
        d = 1
        for c in self.coeffs:
            cd = c.denominator()
            d = d * cd // gcd(d, cd)
        return d

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly.constant(v)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic()


def format_poly(p: Poly, var: str = "x") -> str:
    """Canonical text, degree descending, parser compatible."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            term = format_gauss(c)
            if c.re and c.im and parts:
                term = f"({term})"
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = mono
            elif c == -1:
                # unary minus binds tighter than ^ in the input grammar
                term = "-1*" + mono if (k > 1 and not parts) else "-" + mono
            elif is_compound(c):
                term = f"({format_gauss(c)})*{mono}"
            else:
                term = f"{format_gauss(c)}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out
