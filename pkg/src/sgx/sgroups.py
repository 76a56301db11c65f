"""Sigma-closed subgroups of GL_n given by difference-polynomial equations
in the matrix entries, with the families needed for verdicts."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from sgx.diffpoly import (
    SigmaPolynomial,
    TruncatedIdeal,
    eliminate,
    groebner,
    is_subideal,
    same_ideal,
    truncation,
)
from sgx.errors import InvalidParameter
from sgx.ratfunc import GaussRational

# ---------------------------------------------------------------------------
# Group names

_NAME_RE = re.compile(
    r"^\s*(ga|gm|sl|gl|mu|cyclic|torus|u|un|sln|gln)\s*(?:\(?\s*(\d+)\s*\)?)?\s*$",
    re.IGNORECASE,
)


@dataclass(frozen=True)
class GroupName:
    """A named linear algebraic group: kind in {Ga, Gm, SL, GL, mu, cyclic,
    torus, U} with its integer parameter (matrix size, order or rank)."""

    kind: str
    param: int = 0

    def __str__(self):
        if self.kind in ("Ga", "Gm"):
            return self.kind
        return f"{self.kind}({self.param})"

    @property
    def n(self) -> int:
        if self.kind == "Ga":
            return 2
        if self.kind in ("Gm", "mu", "cyclic"):
            return 1
        return self.param

    @property
    def is_finite(self) -> bool:
        return self.kind in ("mu", "cyclic")

    @property
    def is_trivial(self) -> bool:
        return (self.is_finite and self.param == 1) or (self.kind == "U" and self.param == 1) \
            or (self.kind == "torus" and self.param == 0)

    @property
    def is_unipotent(self) -> bool:
        return self.kind in ("Ga", "U")


def parse_group_name(name) -> GroupName:
    """Accepts ``Ga``, ``Gm``, ``sl2``, ``SLn(3)``, ``GL(2)``, ``mu(6)``,
    ``cyclic(2)``, ``torus(2)``, ``U3`` and similar spellings."""
    if isinstance(name, GroupName):
        g = name
    else:
        m = _NAME_RE.match(str(name))
        if not m:
            raise InvalidParameter(f"unknown group name {name!r}")
        kind, param = m.group(1).lower(), m.group(2)
        kind = {"ga": "Ga", "gm": "Gm", "sl": "SL", "sln": "SL", "gl": "GL", "gln": "GL",
                "mu": "mu", "cyclic": "cyclic", "torus": "torus", "u": "U", "un": "U"}[kind]
        if kind in ("Ga", "Gm"):
            if param is not None:
                raise InvalidParameter(f"{kind} takes no parameter")
            g = GroupName(kind, 0)
        else:
            if param is None:
                raise InvalidParameter(f"{kind} needs an integer parameter")
            g = GroupName(kind, int(param))
    if g.kind in ("SL", "GL", "U", "mu", "cyclic") and g.param < 1:
        raise InvalidParameter(f"parameter of {g.kind} must be >= 1")
    if g.kind == "torus" and g.param < 1:
        raise InvalidParameter("torus rank must be >= 1")
    if g.n > 9:
        raise InvalidParameter("matrix size above 9 is not supported")
    return g


# ---------------------------------------------------------------------------
# Specs

@dataclass(frozen=True)
class LinearSigmaOperator:
    """``L(y) = sigma^n(y) + lambdas[n-1] sigma^(n-1)(y) + ... + lambdas[0] y``."""

    lambdas: tuple

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(GaussRational.coerce(c) for c in self.lambdas))

    @property
    def n(self) -> int:
        return len(self.lambdas)

    def apply(self, u: SigmaPolynomial) -> SigmaPolynomial:
        out = u.prolong(self.n)
        for k, c in enumerate(self.lambdas):
            if c:
                out = out + u.prolong(k) * c
        return out

    def __str__(self):
        return str(self.apply(SigmaPolynomial.var("y")))


@dataclass(frozen=True)
class FullAlgebraic:
    name: GroupName


@dataclass(frozen=True)
class ConstantPoints:
    name: GroupName


@dataclass(frozen=True)
class GaLinearSubgroup:
    operator: LinearSigmaOperator


@dataclass(frozen=True)
class Custom:
    label: str = ""


class _Unsupported:
    """Answer of a predicate that is not decided for the given family."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unsupported"

    def __bool__(self):
        raise TypeError("Unsupported has no truth value")


UNSUPPORTED = _Unsupported()


def entry(j: int, k: int, level: int = 0) -> SigmaPolynomial:
    """The matrix entry ``g_jk`` (1-based) at sigma-level ``level``."""
    return SigmaPolynomial.var(f"g{j}{k}", level)


def entry_names(n: int) -> tuple:
    return tuple(f"g{j}{k}" for j in range(1, n + 1) for k in range(1, n + 1))


def determinant(n: int, prefix: str = "g", level: int = 0) -> SigmaPolynomial:
    out = SigmaPolynomial.constant(0)
    for perm in _permutations(n):
        sign, p = perm
        t = SigmaPolynomial.constant(sign)
        for j, k in enumerate(p):
            t = t * SigmaPolynomial.var(f"{prefix}{j + 1}{k + 1}", level)
        out = out + t
    return out


def _permutations(n: int):
    from itertools import permutations

    for p in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        yield (-1) ** inv, p


@dataclass
class SigmaGroupSpec:
    """A sigma-closed subgroup of GL_n. Determinants are always invertible."""

    n: int
    defining: tuple
    family_tag: object = field(default_factory=Custom)

    def __post_init__(self):
        self.defining = tuple(SigmaPolynomial.coerce(p) for p in self.defining)

    @property
    def names(self) -> tuple:
        return entry_names(self.n)

    @property
    def max_order(self) -> int:
        return max((p.order for p in self.defining), default=0)

    def det(self) -> SigmaPolynomial:
        return determinant(self.n)

    def truncation(self, order: int) -> TruncatedIdeal:
        return truncation(self.defining, order, names=self.names, invert=[self.det()])


def _algebraic_equations(g: GroupName) -> list:
    n = g.n
    e = entry
    if g.kind == "Ga":
        return [e(1, 1) - 1, e(2, 1), e(2, 2) - 1]
    if g.kind in ("Gm", "GL"):
        return []
    if g.kind == "SL":
        return [determinant(n) - 1]
    if g.kind in ("mu", "cyclic"):
        return [e(1, 1) ** g.param - 1]
    if g.kind == "torus":
        return [e(j, k) for j in range(1, n + 1) for k in range(1, n + 1) if j != k]
    if g.kind == "U":
        out = []
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if j == k:
                    out.append(e(j, k) - 1)
                elif j > k:
                    out.append(e(j, k))
        return out
    raise InvalidParameter(f"unknown group {g}")


def full_algebraic(name) -> SigmaGroupSpec:
    """The algebraic group with no difference constraints."""
    g = parse_group_name(name)
    return SigmaGroupSpec(g.n, tuple(_algebraic_equations(g)), FullAlgebraic(g))


def constant_points(name) -> SigmaGroupSpec:
    """Points fixed by sigma: adds ``sigma(g_jk) - g_jk`` for every entry."""
    g = parse_group_name(name)
    eqs = _algebraic_equations(g)
    n = g.n
    eqs += [entry(j, k, 1) - entry(j, k) for j in range(1, n + 1) for k in range(1, n + 1)]
    return SigmaGroupSpec(n, tuple(eqs), ConstantPoints(g))


def ga_linear_subgroup(op) -> SigmaGroupSpec:
    """Unipotent ``[[1, u], [0, 1]]`` with ``L(u) = 0``."""
    if not isinstance(op, LinearSigmaOperator):
        op = LinearSigmaOperator(tuple(op))
    eqs = _algebraic_equations(GroupName("Ga")) + [op.apply(entry(1, 2))]
    return SigmaGroupSpec(2, tuple(eqs), GaLinearSubgroup(op))


# ---------------------------------------------------------------------------
# Predicates

def is_sigma_reduced(spec: SigmaGroupSpec):
    """Whether sigma is injective on the coordinate ring, per family."""
    tag = spec.family_tag
    if isinstance(tag, GaLinearSubgroup):
        lam = tag.operator.lambdas
        return not lam or bool(lam[0])
    if isinstance(tag, (FullAlgebraic, ConstantPoints)):
        return True
    return UNSUPPORTED


def is_sigma_connected(spec: SigmaGroupSpec):
    """Whether the group has no nontrivial sigma-etale quotient, per family.

    Algebraic groups without constraints and all G_L are connected in the
    sigma sense; constant points of a finite nontrivial group are not,
    since their coordinate ring is a product of copies of k.
    """
    tag = spec.family_tag
    if isinstance(tag, (GaLinearSubgroup, FullAlgebraic)):
        return True
    if isinstance(tag, ConstantPoints):
        g = tag.name
        if g.is_finite:
            return g.param == 1
        return True
    return UNSUPPORTED


def recognize_ga_linear(spec: SigmaGroupSpec, deadline=None) -> Optional[LinearSigmaOperator]:
    """The operator L when ``spec`` defines G_L inside the standard Ga.

    Constant Ga is G_{sigma - 1}. Custom specs are matched by comparing
    reduced Groebner bases of truncations.
    """
    tag = spec.family_tag
    if isinstance(tag, GaLinearSubgroup):
        return tag.operator
    if isinstance(tag, ConstantPoints) and tag.name.kind == "Ga":
        return LinearSigmaOperator((GaussRational(-1),))
    if isinstance(tag, Custom) and spec.n == 2:
        cand = None
        for p in spec.defining:
            vs = p.variables()
            if vs and all(v[0] == "g12" for v in vs) and p.total_degree == 1 and p.order >= 1:
                cand = p
                break
        if cand is None:
            return None
        top = cand.order
        lead = cand.terms.get(((("g12", top), 1),))
        if not lead:
            return None
        norm = cand * lead.inverse()
        lam = []
        for k in range(top):
            c = norm.terms.get(((("g12", k), 1),), GaussRational(0))
            lam.append(c)
        if () in norm.terms:
            return None
        op = LinearSigmaOperator(tuple(lam))
        model = ga_linear_subgroup(op)
        order = max(model.max_order, spec.max_order)
        if same_ideal(spec.truncation(order), model.truncation(order), deadline):
            return op
    return None


# ---------------------------------------------------------------------------
# Generated subgroups

def _rename(p: SigmaPolynomial, n: int, prefix: str) -> SigmaPolynomial:
    mapping = {}
    for (name, lv) in p.variables():
        mapping[(name, lv)] = SigmaPolynomial.var(prefix + name[1:], lv)
    return p.substitute(mapping)


def _linear_solvable(p: SigmaPolynomial, candidates: set):
    """A variable v in ``candidates`` with ``p = c*v + rest`` where rest is
    free of v and c is constant."""
    for v in sorted(p.variables()):
        if v not in candidates:
            continue
        occ = [(m, c) for m, c in p.terms.items() if any(x == v for x, _ in m)]
        if len(occ) == 1 and occ[0][0] == ((v, 1),):
            return v, occ[0][1]
    return None


def _eliminate_linear(polys, candidates: set):
    """Substitute away variables defined by linear equations."""
    polys = [p for p in polys if p]
    subst = {}
    changed = True
    while changed:
        changed = False
        for idx, p in enumerate(polys):
            hit = _linear_solvable(p, candidates)
            if hit is None:
                continue
            v, c = hit
            value = (SigmaPolynomial.var(*v) * c - p) * c.inverse()
            subst = {k: s.substitute({v: value}) for k, s in subst.items()}
            subst[v] = value
            polys = [q.substitute({v: value}) for k, q in enumerate(polys) if k != idx]
            polys = [q for q in polys if q]
            candidates = candidates - {v}
            changed = True
            break
    return polys, subst


def word_product_equations(groups, order: int):
    """Equations and target entries of the product map for a word of groups.

    Returns ``(constraints, targets, factor_vars)`` where ``targets`` maps
    each ``(g_jk, level)`` to a polynomial in factor variables.
    """
    n = groups[0].n
    constraints, factor_vars = [], set()
    mats = []
    for t, h in enumerate(groups):
        prefix = f"f{t}_"
        ideal = truncation(h.defining, order, names=h.names)
        constraints += [_rename(p, n, prefix) for p in ideal.generators]
        for name in h.names:
            for lv in range(order + 1):
                factor_vars.add((prefix + name[1:], lv))
        mats.append(prefix)
    constraints, subst = _eliminate_linear(constraints, set(factor_vars))
    targets = {}
    for lv in range(order + 1):
        cur = None
        for prefix in mats:
            m = [[SigmaPolynomial.var(f"{prefix}{j}{k}", lv) for k in range(1, n + 1)]
                 for j in range(1, n + 1)]
            m = [[e.substitute(subst) for e in row] for row in m]
            cur = m if cur is None else _matmul(cur, m)
        for j in range(n):
            for k in range(n):
                targets[(f"g{j + 1}{k + 1}", lv)] = cur[j][k]
    used = set()
    for p in constraints:
        used |= p.variables()
    for p in targets.values():
        used |= p.variables()
    return constraints, targets, sorted(v for v in factor_vars if v in used)


def _matmul(a, b):
    n = len(a)
    return [[sum((a[j][t] * b[t][k] for t in range(n)), SigmaPolynomial()) for k in range(n)]
            for j in range(n)]


def generated_subgroup_truncation(h1: SigmaGroupSpec, h2: SigmaGroupSpec, word_length: int,
                                  order: int, deadline=None) -> TruncatedIdeal:
    """Order-``order`` ideal of the closure of the products h1*h2*h1*...
    with ``word_length`` factors."""
    if h1.n != h2.n:
        raise InvalidParameter("groups live in different GL_n")
    if word_length < 1:
        raise InvalidParameter("word length must be positive")
    word = [h1 if t % 2 == 0 else h2 for t in range(word_length)]
    constraints, targets, fvars = word_product_equations(word, order)
    n = h1.n
    target_vars = [(name, lv) for lv in range(order, -1, -1) for name in entry_names(n)]
    polys = list(constraints) + [SigmaPolynomial.var(*v) - targets[v] for v in target_vars]
    # factor variables are the elimination block, largest level first
    fvars = sorted(fvars, key=lambda v: (-v[1], v[0]))
    gens = eliminate(polys, fvars, target_vars, deadline)
    ideal = TruncatedIdeal(order, entry_names(n), gens,
                           [determinant(n).prolong(l) for l in range(order + 1)])
    return groebner(ideal, deadline)


# ---------------------------------------------------------------------------
# The GL_2 example with a nontrivial sigma-etale quotient

class ProductAlgebra:
    """``k^r`` with sigma acting by a permutation of the coordinates:
    ``sigma(v)[k] = v[perm[k]]`` (sigma is the identity on k)."""

    def __init__(self, r: int, perm=None):
        self.r = r
        self.perm = tuple(perm) if perm is not None else tuple(range(r))

    def element(self, values) -> "ProductElement":
        return ProductElement(tuple(GaussRational.coerce(v) for v in values), self)

    def const(self, c) -> "ProductElement":
        return self.element([c] * self.r)


@dataclass(frozen=True)
class ProductElement:
    values: tuple
    algebra: ProductAlgebra

    def _lift(self, other):
        if isinstance(other, ProductElement):
            return other.values
        return (GaussRational.coerce(other),) * len(self.values)

    def __add__(self, other):
        return ProductElement(tuple(a + b for a, b in zip(self.values, self._lift(other))), self.algebra)

    __radd__ = __add__

    def __mul__(self, other):
        return ProductElement(tuple(a * b for a, b in zip(self.values, self._lift(other))), self.algebra)

    __rmul__ = __mul__

    def sigma(self, l: int = 1) -> "ProductElement":
        v = self.values
        for _ in range(l):
            v = tuple(v[p] for p in self.algebra.perm)
        return ProductElement(v, self.algebra)

    def is_zero(self) -> bool:
        return all(not a for a in self.values)

    def is_unit(self) -> bool:
        return all(a for a in self.values)


def gl2_component_equations() -> list:
    a, b, c, d = entry(1, 1), entry(1, 2), entry(2, 1), entry(2, 2)
    s = lambda p, l=1: p.prolong(l)  # noqa: E731
    q = a * s(a) + b * s(b)
    return [
        c * s(a) + d * s(b),
        a * s(c) + b * s(d),
        q - (c * s(c) + d * s(d)),
        q * q - 1,
        s(a) * s(a, 2) + s(b) * s(b, 2) - q,
    ]


def gl2_component_invariant() -> SigmaPolynomial:
    """``a*sigma(a) + b*sigma(b)``; it takes the values +1 and -1 on the group."""
    a, b = entry(1, 1), entry(1, 2)
    return a * a.prolong(1) + b * b.prolong(1)


@dataclass
class GL2Fixture:
    spec: SigmaGroupSpec
    invariant: SigmaPolynomial

    def assignment(self, matrix, algebra: ProductAlgebra, levels: int = 2) -> dict:
        out = {}
        for j in range(2):
            for k in range(2):
                v = matrix[j][k]
                if not isinstance(v, ProductElement):
                    v = algebra.const(v)
                for l in range(levels + 1):
                    out[(f"g{j + 1}{k + 1}", l)] = v.sigma(l)
        return out

    def evaluate(self, p: SigmaPolynomial, matrix, algebra: ProductAlgebra):
        vals = self.assignment(matrix, algebra, max(p.order, 0))
        return p.evaluate(vals, one=algebra.const(1))

    def is_member(self, matrix, algebra: ProductAlgebra) -> bool:
        a, b = matrix[0][0], matrix[0][1]
        c, d = matrix[1][0], matrix[1][1]
        lift = lambda v: v if isinstance(v, ProductElement) else algebra.const(v)  # noqa: E731
        det = lift(a) * lift(d) + lift(b) * lift(c) * -1
        if not det.is_unit():
            return False
        return all(self.evaluate(p, matrix, algebra).is_zero() for p in self.spec.defining)

    def invariant_value(self, matrix, algebra: ProductAlgebra):
        return self.evaluate(self.invariant, matrix, algebra)

    def witness_points(self):
        """The identity over k, and diag((1,-1),(1,-1)) over k x k with the
        coordinates swapped by sigma."""
        k = ProductAlgebra(1)
        kk = ProductAlgebra(2, (1, 0))
        zero = kk.const(0)
        twisted = kk.element((1, -1))
        return [
            ([[1, 0], [0, 1]], k),
            ([[twisted, zero], [zero, twisted]], kk),
        ]


def fixture_gl2_example() -> GL2Fixture:
    spec = SigmaGroupSpec(2, tuple(gl2_component_equations()), Custom("gl2-components"))
    return GL2Fixture(spec, gl2_component_invariant())


def spec_contains(outer: SigmaGroupSpec, inner: SigmaGroupSpec, order: int, deadline=None) -> bool:
    """Whether every order-``order`` equation of ``outer`` vanishes on ``inner``."""
    return is_subideal(outer.truncation(order), inner.truncation(order), deadline)
