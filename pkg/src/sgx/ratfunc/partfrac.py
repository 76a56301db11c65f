"""Root finding over Q(i), partial fractions, and the decision procedures
built on them (rational antiderivatives, logarithmic derivatives,
d-th powers)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sgx.errors import DivisionByZero, InvalidParameter, RequiresExtension
from sgx.ratfunc.field import RatFunc, sigma
from sgx.ratfunc.gaussian import (
    ONE,
    UNITS,
    ZERO,
    GaussRational,
    gaussian_divisors,
)
from sgx.ratfunc.poly import Poly, poly_gcd


def _candidate_roots(s: Poly):
    """Candidate Q(i)-roots of a polynomial with nonzero constant term."""
    d = s.content_denominator()
    coeffs = [c * d for c in s.coeffs]
    lead, trail = coeffs[-1], coeffs[0]
    lead_gi = (lead.re.numerator, lead.im.numerator)
    trail_gi = (trail.re.numerator, trail.im.numerator)
    # Cauchy bound |r| <= 1 + max |c_k / c_n|, used only for pruning
    lead_norm = lead.norm()
    ratio = max((c.norm() / lead_norm for c in coeffs[:-1]), default=Fraction(0))
    bound = (1.0 + math.sqrt(float(ratio))) ** 2 * 1.001 + 1.0
    seen = set()
    out = []
    for a in gaussian_divisors(trail_gi):
        for b in gaussian_divisors(lead_gi):
            base = GaussRational(*a) / GaussRational(*b)
            if float(base.norm()) > bound:
                continue
            for u in UNITS:
                r = base * GaussRational(*u)
                if r not in seen:
                    seen.add(r)
                    out.append(r)
    out.sort(key=GaussRational.sort_key)
    return out


def gauss_roots(p: Poly):
    """Roots of ``p`` in Q(i) with multiplicities.

    Returns ``(roots, residual)`` where ``roots`` is a list of
    ``(root, multiplicity)`` sorted by norm then lexicographically and
    ``p == lead(p) * prod((x - root)**mult) * residual`` with ``residual``
    monic and free of Q(i)-roots.
    """
    if not p:
        raise InvalidParameter("gauss_roots of the zero polynomial")
    rest = p.monic()
    roots = []
    zeros = 0
    while rest.degree > 0 and not rest.trailing:
        rest = Poly._from_trimmed(rest.coeffs[1:])
        zeros += 1
    if zeros:
        roots.append((ZERO, zeros))
    if rest.degree > 0:
        g = poly_gcd(rest, rest.derivative())
        squarefree = rest.exact_div(g) if g.degree > 0 else rest
        found = []
        todo = squarefree
        for r in _candidate_roots(squarefree):
            if todo.degree <= 0:
                break
            if not todo(r):
                found.append(r)
                todo = todo.exact_div(Poly.linear_root(r))
        for r in found:
            lin = Poly.linear_root(r)
            m = 0
            while True:
                q, rem = rest.divmod(lin)
                if rem:
                    break
                rest = q
                m += 1
            roots.append((r, m))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots, rest


def split_or_raise(p: Poly):
    roots, residual = gauss_roots(p)
    if residual.degree > 0:
        raise RequiresExtension(residual)
    return roots


@dataclass(frozen=True)
class PoleAtom:
    """The term ``coeff / (x + beta)**order``; the pole sits at ``-beta``."""

    beta: GaussRational
    order: int
    coeff: GaussRational

    def __post_init__(self):
        if self.order < 1:
            raise InvalidParameter("pole order must be positive")
        if not self.coeff:
            raise InvalidParameter("pole atom with zero coefficient")

    def to_ratfunc(self) -> RatFunc:
        lin = Poly((self.beta, ONE))
        return RatFunc(Poly.constant(self.coeff), lin ** self.order)

    def shifted(self, l: int) -> "PoleAtom":
        """The atom of sigma^l applied to this term."""
        return PoleAtom(self.beta + l, self.order, self.coeff)


def _atom_key(a: PoleAtom):
    return (a.order, a.beta.sort_key())


@dataclass(frozen=True)
class PartialFraction:
    poly_part: Poly
    atoms: tuple

    def recombine(self) -> RatFunc:
        out = RatFunc(self.poly_part)
        for a in self.atoms:
            out = out + a.to_ratfunc()
        return out

    @property
    def logarithmic_part(self) -> tuple:
        return tuple(a for a in self.atoms if a.order == 1)

    def max_order(self) -> int:
        return max((a.order for a in self.atoms), default=0)


def _series_quotient(num: Poly, den: Poly, n: int):
    """First ``n`` power-series coefficients of num/den at 0 (den(0) != 0)."""
    inv0 = den.coeff(0).inverse()
    out = []
    for k in range(n):
        acc = num.coeff(k)
        for j in range(1, k + 1):
            dj = den.coeff(j)
            if dj:
                acc = acc - dj * out[k - j]
        out.append(acc * inv0)
    return out


def partial_fractions(f: RatFunc) -> PartialFraction:
    """Decompose ``f`` into a polynomial plus pole atoms over Q(i).

    Raises RequiresExtension when the denominator does not split.
    """
    poly_part, rem = f.num.divmod(f.den)
    atoms = []
    if rem:
        roots = split_or_raise(f.den)
        for rho, m in roots:
            # den = (x - rho)^m * h ; expand rem/h around rho
            lin = Poly.linear_root(rho)
            h = f.den.exact_div(lin ** m)
            cs = _series_quotient(rem.shift(rho), h.shift(rho), m)
            for k, c in enumerate(cs):
                if c:
                    atoms.append(PoleAtom(-rho, m - k, c))
    atoms.sort(key=_atom_key)
    return PartialFraction(poly_part, tuple(atoms))


def logarithmic_part(f: RatFunc) -> list:
    """The simple-pole atoms of ``f``."""
    return list(partial_fractions(f).logarithmic_part)


def antiderivative(f: RatFunc) -> Optional[RatFunc]:
    """A rational ``g`` with ``delta(g) == f``, or None.

    A rational antiderivative exists exactly when the logarithmic part
    vanishes; the constant of integration is zero.
    """
    pf = partial_fractions(f)
    if pf.logarithmic_part:
        return None
    integ = [ZERO] + [c / (k + 1) for k, c in enumerate(pf.poly_part.coeffs)]
    g = RatFunc(Poly(integ))
    for a in pf.atoms:
        lin = Poly((a.beta, ONE))
        m = a.order - 1
        g = g + RatFunc(Poly.constant(-a.coeff / m), lin ** m)
    return g


def is_log_derivative(f: RatFunc) -> Optional[RatFunc]:
    """A witness ``g`` with ``delta(g)/g == f``, or None.

    ``f`` is a logarithmic derivative in Q(i)(x) iff it has no
    polynomial part, only simple poles, and integer residues; then
    ``g = prod (x + beta)**residue``.
    """
    pf = partial_fractions(f)
    if pf.poly_part:
        return None
    g = RatFunc.constant(1)
    for a in pf.atoms:
        if a.order != 1 or not a.coeff.is_rational_integer():
            return None
    for a in pf.atoms:
        g = g * RatFunc(Poly((a.beta, ONE))) ** int(a.coeff.re)
    return g


def valuations(f: RatFunc):
    """Zero/pole orders of a nonzero ``f`` at each finite point of Q(i).

    Returns a dict ``{point: order}``; raises RequiresExtension if the
    numerator or denominator does not split.
    """
    if not f:
        raise DivisionByZero("valuations of the zero function")
    out = {}
    for rho, m in split_or_raise(f.num):
        out[rho] = out.get(rho, 0) + m
    for rho, m in split_or_raise(f.den):
        out[rho] = out.get(rho, 0) - m
    return out


def is_dth_power(f: RatFunc, d: int) -> Optional[RatFunc]:
    """Decide ``f = c * g**d`` with ``c`` constant (every constant is a
    d-th power over C). Returns the divisor part ``g`` (monic numerator
    and denominator) or None.
    """
    if d < 1:
        raise InvalidParameter("d must be a positive integer")
    if not f:
        return RatFunc.constant(0)
    g = RatFunc.constant(1)
    for rho, v in sorted(valuations(f).items(), key=lambda kv: kv[0].sort_key()):
        if v % d:
            return None
        g = g * RatFunc(Poly.linear_root(rho)) ** (v // d)
    return g


def shifted_atoms(f: RatFunc, l: int) -> PartialFraction:
    """Partial fractions of sigma^l(f), recomputed from scratch."""
    return partial_fractions(sigma(f, l))
