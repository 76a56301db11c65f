"""The difference-differential field Q(i)(x).

The derivation is d/dx and the endomorphism is the shift x -> x + 1.
"""

from __future__ import annotations

from fractions import Fraction

from sgx.errors import DivisionByZero
from sgx.ratfunc.gaussian import ONE, GaussRational, is_compound
from sgx.ratfunc.poly import Poly, format_poly, poly_gcd

_ONE_POLY = Poly._from_trimmed((ONE,))
_ZERO_POLY = Poly._from_trimmed(())


class RatFunc:
    """A reduced fraction ``num / den`` with ``den`` monic.

    Because the representation is canonical, ``==`` is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            num, den = _ZERO_POLY, _ONE_POLY
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lead
        if lead != 1:
            inv = lead.inverse()
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RatFunc":
        f = object.__new__(cls)
        f.num = num
        f.den = den
        f._hash = None
        return f

    @classmethod
    def x(cls) -> "RatFunc":
        return cls._reduced(Poly.x(), _ONE_POLY)

    @classmethod
    def constant(cls, c) -> "RatFunc":
        return cls(Poly.constant(c))

    @classmethod
    def coerce(cls, v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, Poly):
            return cls._reduced(v, _ONE_POLY)
        return cls.constant(v)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def constant_value(self) -> GaussRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.lead if self.num else GaussRational(0)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, GaussRational, Poly)):
            return self == RatFunc.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- field operations ----------------------------------------------------
    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            c = GaussRational.coerce(other)
            if not c:
                return RatFunc._reduced(_ZERO_POLY, _ONE_POLY)
            return RatFunc._reduced(self.num.scale(c), self.den)
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        # gcd(num, den) == 1 survives powering
        return RatFunc._reduced(self.num ** e, self.den ** e) if e else RatFunc.constant(1)

    def __call__(self, v):
        d = self.den(v)
        if not d:
            raise DivisionByZero(f"{self} has a pole at {v}")
        return self.num(v) / d

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        return format_ratfunc(self)


def delta(f: RatFunc) -> RatFunc:
    """Derivative d/dx by the quotient rule."""
    if f.den.degree == 0:
        return RatFunc._reduced(f.num.derivative(), f.den)
    return RatFunc(
        f.num.derivative() * f.den - f.num * f.den.derivative(),
        f.den * f.den,
    )


def sigma(f: RatFunc, l: int = 1) -> RatFunc:
    """Substitute x -> x + l.

    Shifting preserves both coprimality and the monic leading
    coefficient, so no renormalisation is needed.
    """
    if not l:
        return f
    return RatFunc._reduced(f.num.shift(l), f.den.shift(l))


def log_derivative(f: RatFunc) -> RatFunc:
    return delta(f) / f


def _wrap(p: Poly) -> str:
    s = format_poly(p)
    nonzero = [c for c in p.coeffs if c]
    if len(nonzero) > 1:
        return f"({s})"
    if p.degree > 0:
        c = p.lead
        if c != 1 and c != -1:
            return f"({s})"
        return s
    if is_compound(p.lead):
        return f"({s})"
    return s


def format_ratfunc(f: RatFunc) -> str:
    """Canonical text: expanded numerator and denominator, degree descending."""
    if f.den.degree == 0:
        return format_poly(f.num)
    return f"{_wrap(f.num)}/{_wrap(f.den)}"
