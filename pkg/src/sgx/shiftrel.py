"""Decision procedures for the sigma-Galois group of the three building
block equations over Q(i)(x):

* ``y' = a`` (additive group),
* ``y' = a*y`` (multiplicative group),
* ``y**d = b`` (cyclic group of order d).

Each question reduces to whether some nonzero combination of the shifts
``sigma^l(a)`` satisfies a rationality condition. Poles whose locations
differ by an integer are grouped into orbit classes; inside a class the
shifts act as multiplication by ``T`` on a Laurent polynomial of
coefficients, and the Laurent polynomial ring is a domain. That turns the
unbounded search into a finite check.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from sgx.errors import InvalidOrder, InvalidParameter
from sgx.ratfunc import (
    GaussRational,
    PoleAtom,
    RatFunc,
    antiderivative,
    is_dth_power,
    is_log_derivative,
    partial_fractions,
    sigma,
    valuations,
)


# ---------------------------------------------------------------------------
# Orbit classes

def orbit_key(beta: GaussRational):
    """Split ``beta`` as ``rep + n`` with integer ``n`` and Re(rep) in [0, 1)."""
    n = math.floor(beta.re)
    return GaussRational._raw(beta.re - n, beta.im), n


@dataclass(frozen=True)
class OrbitClass:
    """Pole data whose locations differ by rational integers.

    ``members[n][m]`` is the coefficient of ``1/(x + rep + n)**m``.
    """

    rep: GaussRational
    members: dict = field(default_factory=dict)

    def orders(self):
        return sorted({m for per in self.members.values() for m in per})

    def laurent(self, order: int) -> "LaurentVec":
        return LaurentVec(
            {n: per[order] for n, per in self.members.items() if order in per}
        )

    def atoms(self):
        return [
            PoleAtom(self.rep + n, m, c)
            for n, per in sorted(self.members.items())
            for m, c in sorted(per.items())
        ]


def orbit_decompose(atoms) -> list:
    """Partition pole atoms by ``beta`` modulo the integers."""
    classes = {}
    for a in atoms:
        rep, n = orbit_key(a.beta)
        per = classes.setdefault(rep, {}).setdefault(n, {})
        if a.order in per:
            raise InvalidParameter(f"duplicate atom at beta={a.beta}, order={a.order}")
        per[a.order] = a.coeff
    return [
        OrbitClass(rep, classes[rep])
        for rep in sorted(classes, key=GaussRational.sort_key)
    ]


class LaurentVec:
    """A Laurent polynomial ``sum c_n T^n`` stored sparsely.

    Multiplication by ``T`` is the action of sigma on an orbit class.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {n: c for n, c in (coeffs or {}).items() if c}

    @classmethod
    def from_list(cls, values, start: int = 0):
        return cls({start + k: v for k, v in enumerate(values)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentVec) and self.coeffs == other.coeffs

    def __mul__(self, other: "LaurentVec") -> "LaurentVec":
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentVec(out)

    def shift(self, l: int) -> "LaurentVec":
        return LaurentVec({n + l: c for n, c in self.coeffs.items()})

    def map(self, fn) -> "LaurentVec":
        return LaurentVec({n: fn(c) for n, c in self.coeffs.items()})

    def reduce_mod(self, p: int) -> "LaurentVec":
        return LaurentVec({n: c % p for n, c in self.coeffs.items()})

    def __repr__(self):
        return f"LaurentVec({dict(sorted(self.coeffs.items()))})"


# ---------------------------------------------------------------------------
# Verdicts

@dataclass(frozen=True)
class GaVerdict:
    full: bool
    antiderivative: Optional[RatFunc] = None
    reason: str = ""

    @property
    def kind(self) -> str:
        return "Full" if self.full else "Trivial"


@dataclass(frozen=True)
class GmVerdict:
    """``NotFull`` carries ``e`` with ``sum e_l sigma^l(a) == witness'/witness``."""

    full: bool
    exponents: tuple = ()
    witness: Optional[RatFunc] = None
    reason: str = ""

    @property
    def kind(self) -> str:
        return "Full" if self.full else "NotFull"


@dataclass(frozen=True)
class CyclicVerdict:
    """``NotFull`` carries a prime ``p | d`` and ``g`` with ``b / g**p`` constant."""

    full: bool
    prime: Optional[int] = None
    witness: Optional[RatFunc] = None
    reason: str = ""

    @property
    def kind(self) -> str:
        return "Full" if self.full else "NotFull"


def shift_combination(a: RatFunc, coeffs) -> RatFunc:
    """``sum_l coeffs[l] * sigma^l(a)``."""
    out = RatFunc.constant(0)
    for l, c in enumerate(coeffs):
        if c:
            out = out + sigma(a, l) * GaussRational.coerce(c)
    return out


# ---------------------------------------------------------------------------
# Classifiers

def classify_ga(a: RatFunc) -> GaVerdict:
    """Is ``y' = a`` full [sigma]Ga, or is ``y`` rational?

    A C-linear relation ``sum c_l sigma^l(y)`` in C(x) forces
    ``c(T) * A_c(T) == 0`` for the residue Laurent polynomial of every
    orbit class, so any nonzero logarithmic part makes the group full.
    """
    pf = partial_fractions(a)
    log_part = pf.logarithmic_part
    if log_part:
        cls = orbit_decompose(log_part)[0]
        return GaVerdict(True, reason=f"nonzero residues in orbit class {cls.rep}+Z")
    g = antiderivative(a)
    return GaVerdict(False, antiderivative=g, reason="logarithmic part vanishes")


def _binomial_difference(k: int):
    """Coefficients of (T - 1)^k, lowest degree first."""
    return [math.comb(k, j) * (-1) ** (k - j) for j in range(k + 1)]


def classify_gm(a: RatFunc) -> GmVerdict:
    """Is ``y' = a*y`` full [sigma]Gm?

    Decides existence of a nonzero integer vector ``e`` with
    ``sum e_l sigma^l(a)`` a logarithmic derivative in C(x).
    """
    pf = partial_fractions(a)
    higher = [t for t in pf.atoms if t.order >= 2]
    if higher:
        t = higher[0]
        rep, _ = orbit_key(t.beta)
        return GmVerdict(True, reason=f"pole of order {t.order} in orbit class {rep}+Z")
    log_part = pf.logarithmic_part
    for cls in orbit_decompose(log_part):
        if any(c.im for c in cls.laurent(1).coeffs.values()):
            return GmVerdict(True, reason=f"non-real residue in orbit class {cls.rep}+Z")
    k = pf.poly_part.degree + 1 if pf.poly_part else 0
    n = 1
    for t in log_part:
        d = t.coeff.re.denominator
        n = n * d // math.gcd(n, d)
    e = tuple(n * c for c in _binomial_difference(k))
    combo = shift_combination(a, e)
    witness = is_log_derivative(combo)
    if witness is None:  # pragma: no cover - would contradict the criterion
        raise AssertionError(f"no logarithmic witness for {combo}")
    return GmVerdict(False, exponents=e, witness=witness,
                     reason="real residues and annihilated polynomial part")


def _prime_divisors(d: int):
    out, p = [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def valuation_classes(b: RatFunc):
    """Orbit classes of the zero/pole orders of ``b``.

    Points are converted to the atom convention ``x + beta`` so that
    ``sigma`` shifts offsets up by one.
    """
    atoms = [PoleAtom(-rho, 1, GaussRational(v)) for rho, v in valuations(b).items() if v]
    return orbit_decompose(atoms)


def classify_cyclic(b: RatFunc, d: int) -> CyclicVerdict:
    """Is ``y**d = b`` full [sigma]mu_d?

    Full iff for every prime ``p | d`` some orbit class has a valuation
    vector not divisible by ``p``. A Laurent polynomial over Z/p^m with a
    unit coefficient is not a zero divisor, so a dependence among shifted
    valuation vectors modulo ``d`` can only come from a prime dividing all
    of them.
    """
    if d < 2:
        raise InvalidOrder(f"cyclic order must be >= 2, got {d}")
    if not b:
        raise InvalidParameter("b must be nonzero")
    classes = valuation_classes(b)
    for p in _prime_divisors(d):
        if all(v % p == 0 for cls in classes for v in cls.laurent(1).map(lambda c: c.re.numerator).coeffs.values()):
            witness = is_dth_power(b, p)
            return CyclicVerdict(False, prime=p, witness=witness,
                                 reason=f"every valuation divisible by {p}")
    return CyclicVerdict(True, reason="each prime divisor of d misses some valuation vector")


# ---------------------------------------------------------------------------
# Brute-force oracles. These recompute partial fractions of every shift from
# scratch and never use orbit classes.

def _coordinates(a: RatFunc, n: int):
    """Partial-fraction coordinates of sigma^l(a) for l = 0..n."""
    rows = []
    for l in range(n + 1):
        pf = partial_fractions(sigma(a, l))
        row = {("poly", k): c for k, c in enumerate(pf.poly_part.coeffs) if c}
        for t in pf.atoms:
            row[("atom", t.order, t.beta)] = t.coeff
        rows.append(row)
    return rows


def nullspace(rows):
    """Basis of ``{c : sum_l c_l rows[l] == 0}`` over Q(i).

    ``rows`` are dicts of coordinates; returns a list of coefficient lists.
    """
    keys = sorted({k for r in rows for k in r}, key=repr)
    # columns = rows of the input; solve M c = 0 with M[key][l] = rows[l][key]
    m = [[GaussRational.coerce(r.get(k, 0)) for r in rows] for k in keys]
    ncols = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = [GaussRational(0)] * ncols
        vec[free] = GaussRational(1)
        for row_i, pc in enumerate(pivots):
            vec[pc] = -m[row_i][free]
        basis.append(vec)
    return basis


def _additive_relation(a: RatFunc, length: int):
    rows = _coordinates(a, length)
    log_rows = [{k: v for k, v in r.items() if k[0] == "atom" and k[1] == 1} for r in rows]
    for n in range(length + 1):
        basis = nullspace(log_rows[: n + 1])
        if basis:
            vec = basis[-1]
            lead = vec[n]
            return tuple(v / lead for v in vec)
    return None


def _lcm_denominators(values):
    out = 1
    for v in values:
        d = v.denominator()
        out = out * d // math.gcd(out, d)
    return out


def _multiplicative_relation(a: RatFunc, bound: int, length: int):
    rows = _coordinates(a, length)
    keys = sorted({k for r in rows for k in r}, key=repr)
    denom = _lcm_denominators(v for r in rows for v in r.values())
    # integer matrices of scaled real and imaginary parts, one row per shift
    re = [[int((r.get(k, GaussRational(0)).re * denom)) for k in keys] for r in rows]
    im = [[int((r.get(k, GaussRational(0)).im * denom)) for k in keys] for r in rows]
    simple = np.array([k[0] == "atom" and k[1] == 1 for k in keys], dtype=bool)
    biggest = max([abs(v) for row in re + im for v in row], default=0)
    dtype = np.int64 if biggest * bound * (length + 1) < 2 ** 62 else object
    for n in range(length + 1):
        axes = [np.arange(-bound, bound + 1)] * n + [
            np.array([v for v in range(-bound, bound + 1) if v])
        ]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n + 1)
        grid = grid.astype(dtype)
        if not keys:
            # a == 0: every vector works
            return tuple(int(v) for v in grid[0])
        vre = grid @ np.array([row for row in re[: n + 1]], dtype=dtype)
        vim = grid @ np.array([row for row in im[: n + 1]], dtype=dtype)
        ok = np.all(vim == 0, axis=1)
        if (~simple).any():
            ok &= np.all(vre[:, ~simple] == 0, axis=1)
        if simple.any():
            ok &= np.all(vre[:, simple] % denom == 0, axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return tuple(int(v) for v in grid[hits[0]])
    return None


def brute_force_relation(a: RatFunc, mode: str, bound: int = 6, length: int = 4):
    """Exhaustive search for a relation among ``a, sigma(a), ..., sigma^length(a)``.

    ``mode="additive"``: a Q(i)-vector ``c`` such that ``sum c_l sigma^l(a)``
    has no logarithmic part (exact linear algebra; ``bound`` unused).
    ``mode="multiplicative"``: an integer vector ``e`` in the box
    ``[-bound, bound]^(n+1)`` such that ``sum e_l sigma^l(a)`` is a
    logarithmic derivative.

    The shortest relation is returned, its last entry nonzero; None if no
    relation exists within the limits.
    """
    if mode == "additive":
        return _additive_relation(a, length)
    if mode == "multiplicative":
        return _multiplicative_relation(a, bound, length)
    raise InvalidParameter(f"unknown mode {mode!r}")


def brute_force_kummer(b: RatFunc, d: int, length: int = 3, exact_products: bool = False):
    """Search ``k`` in ``{0..p-1}^(n+1)`` with ``prod sigma^j(b)**k_j`` a
    p-th power, for each prime ``p | d``.

    With ``exact_products`` the products are formed as rational functions
    and tested with ``is_dth_power``; otherwise zero/pole orders of each
    shift are added up. Returns ``(p, k)`` or None.
    """
    if d < 2:
        raise InvalidOrder(f"cyclic order must be >= 2, got {d}")
    shifts = [sigma(b, j) for j in range(length + 1)]
    vals = None if exact_products else [valuations(s) for s in shifts]
    for p in _prime_divisors(d):
        for n in range(length + 1):
            for head in itertools.product(range(p), repeat=n):
                for last in range(1, p):
                    k = head + (last,)
                    if exact_products:
                        prod = RatFunc.constant(1)
                        for s, kj in zip(shifts, k):
                            if kj:
                                prod = prod * s ** kj
                        if is_dth_power(prod, p) is not None:
                            return p, k
                    else:
                        total = {}
                        for v, kj in zip(vals, k):
                            for pt, m in v.items():
                                total[pt] = total.get(pt, 0) + kj * m
                        if all(m % p == 0 for m in total.values()):
                            return p, k
    return None


def exponent_vector_as_laurent(e) -> LaurentVec:
    return LaurentVec.from_list([Fraction(v) for v in e])
