"""Sparse polynomials in the variables sigma^l(y_j) over Q(i)."""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from sgx.ratfunc import GaussRational, format_gauss
from sgx.ratfunc.gaussian import is_compound

_ZERO = GaussRational(0)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


class SigmaPolynomial:
    """A polynomial whose variables are pairs ``(name, level)``.

    ``(name, level)`` stands for ``sigma^level(name)``. Terms are stored as
    ``{monomial: coeff}`` where a monomial is a sorted tuple of
    ``((name, level), exponent)`` pairs.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = GaussRational.coerce(c)
            if c:
                self.terms[m] = c

    @classmethod
    def _wrap(cls, terms: dict) -> "SigmaPolynomial":
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def var(cls, name: str, level: int = 0) -> "SigmaPolynomial":
        return cls._wrap({(((name, level), 1),): GaussRational(1)})

    @classmethod
    def constant(cls, c) -> "SigmaPolynomial":
        c = GaussRational.coerce(c)
        return cls._wrap({(): c} if c else {})

    @classmethod
    def coerce(cls, v) -> "SigmaPolynomial":
        return v if isinstance(v, SigmaPolynomial) else cls.constant(v)

    # -- structure ------------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    @property
    def names(self) -> list:
        """Base names that occur, sorted."""
        return sorted({v[0] for v in self.variables()})

    @property
    def order(self) -> int:
        """Highest sigma-level present; -1 for constants."""
        return max((v[1] for v in self.variables()), default=-1)

    @property
    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRational)):
            other = SigmaPolynomial.constant(other)
        if not isinstance(other, SigmaPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = SigmaPolynomial.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SigmaPolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return SigmaPolynomial._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-SigmaPolynomial.coerce(other))

    def __rsub__(self, other):
        return SigmaPolynomial.coerce(other) - self

    def __mul__(self, other):
        other = SigmaPolynomial.coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return SigmaPolynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = SigmaPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- sigma and evaluation -------------------------------------------------
    def prolong(self, l: int = 1) -> "SigmaPolynomial":
        """Apply sigma^l: every level goes up by ``l``. Coefficients in Q(i)
        are sigma-constants."""
        if l < 0:
            raise ValueError("prolongation index must be non-negative")
        if l == 0:
            return self
        return SigmaPolynomial._wrap({
            tuple(((n, lv + l), e) for (n, lv), e in m): c
            for m, c in self.terms.items()
        })

    def substitute(self, values: dict) -> "SigmaPolynomial":
        """Replace variables by polynomials; unmapped variables stay."""
        out = SigmaPolynomial()
        for m, c in self.terms.items():
            t = SigmaPolynomial.constant(c)
            for v, e in m:
                t = t * (values[v] ** e if v in values else SigmaPolynomial.var(*v) ** e)
            out = out + t
        return out

    def evaluate(self, values, one=1):
        """Evaluate with ``values[(name, level)]`` drawn from any commutative
        ring whose elements accept ``+``, ``*`` and multiplication by
        ``int``/``Fraction``/``GaussRational`` coefficients."""
        total = None
        for m, c in self.terms.items():
            t = one
            for v, e in m:
                for _ in range(e):
                    t = t * values[v]
            t = t * _plain(c)
            total = t if total is None else total + t
        return total if total is not None else one * 0

    def __repr__(self):
        return f"SigmaPolynomial({format_sigma_poly(self)!r})"

    def __str__(self):
        return format_sigma_poly(self)


def _plain(c: GaussRational):
    if c.im:
        return c
    return c.re if c.re.denominator != 1 else c.re.numerator


def _var_text(v) -> str:
    name, level = v
    if level == 0:
        return name
    if level == 1:
        return f"s({name})"
    return f"s^{level}({name})"


def _var_rank(v):
    # smaller rank = larger variable: higher level first, then name
    return (-v[1], v[0])


def _grevlex_cmp(a, b) -> int:
    """Compare monomials in graded reverse lexicographic order (-1, 0, 1)."""
    da, db = sum(e for _, e in a), sum(e for _, e in b)
    if da != db:
        return -1 if da < db else 1
    ea, eb = dict(a), dict(b)
    for v in sorted(set(ea) | set(eb), key=_var_rank, reverse=True):
        x, y = ea.get(v, 0), eb.get(v, 0)
        if x != y:
            return 1 if x < y else -1
    return 0


_mono_sort_key = cmp_to_key(lambda a, b: _grevlex_cmp(b, a))


def format_sigma_poly(p: SigmaPolynomial) -> str:
    """Text like ``s(g11)*g11-1``; readable back by the spec-file parser."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_mono_sort_key):
        c = p.terms[m]
        mono = "*".join(
            _var_text(v) + (f"^{e}" if e > 1 else "") for v, e in sorted(m, key=lambda ve: _var_rank(ve[0]))
        )
        if not mono:
            term = format_gauss(c)
            if c.re and c.im and parts:
                term = f"({term})"
        elif c == 1:
            term = mono
        elif c == -1:
            # a leading unary minus would bind tighter than ^ when re-read
            first_exp = sorted(m, key=lambda ve: _var_rank(ve[0]))[0][1]
            term = "-1*" + mono if (first_exp > 1 and not parts) else "-" + mono
        elif is_compound(c):
            term = f"({format_gauss(c)})*{mono}"
        else:
            term = f"{format_gauss(c)}*{mono}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def prolong(p: SigmaPolynomial, l: int) -> SigmaPolynomial:
    return p.prolong(l)
