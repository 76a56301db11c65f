"""Realizability verdicts for sigma-algebraic groups as sigma-Galois groups
over C(x), with explicit building-block equations.

Each building block is a first-order (or 2x2 unipotent) system whose
sigma-Galois group is the full prolongation of Ga, Gm or mu_d. Blocks are
placed at pairwise distinct gamma in {i, 2i, 3i, ...}, so their pole orbits
under x -> x + 1 never meet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from sgx.errors import ClassifierMismatch, InvalidParameter
from sgx.ratfunc import GaussRational, I, RatFunc, X, delta
from sgx.sgroups import (
    ConstantPoints,
    Custom,
    FullAlgebraic,
    GroupName,
    SigmaGroupSpec,
    constant_points,
    full_algebraic,
    is_sigma_connected,
    is_sigma_reduced,
    parse_group_name,
    recognize_ga_linear,
)
from sgx.shiftrel import classify_cyclic, classify_ga, classify_gm

# ---------------------------------------------------------------------------
# Solution descriptors


@dataclass(frozen=True)
class ExpAtom:
    """``y = exp(1/(x - gamma))``."""

    gamma: GaussRational


@dataclass(frozen=True)
class LogAtom:
    """``y = log(1/(x - gamma) + 1)``."""

    gamma: GaussRational


@dataclass(frozen=True)
class RootAtom:
    """``y = ((x + 1 - gamma)/(x - gamma))**(1/d)``."""

    gamma: GaussRational
    d: int


@dataclass(frozen=True)
class ExpLinear:
    """``y = exp(x)``; sigma(y) = e*y, so its group is the constant Gm."""


@dataclass(frozen=True)
class Citation:
    ref: str
    statement: str


CITE = {
    "generation": Citation(
        "generation",
        "any linear algebraic group is generated by finitely many closed subgroups "
        "isomorphic to Ga, Gm or finite cyclic groups",
    ),
    "patching": Citation(
        "patching",
        "building blocks whose poles lie on disjoint shift orbits combine into one "
        "equation whose group is generated by the block groups",
    ),
    "main-theorem": Citation(
        "main-theorem",
        "the prolongation of any linear algebraic group is realizable over C(x) with "
        "the shift x -> x + 1",
    ),
    "ga-subgroups": Citation(
        "ga-subgroups",
        "a proper nontrivial sigma-closed subgroup G_L of Ga is not realizable: a "
        "rational a with a linear shift relation would have no logarithmic part",
    ),
    "constant-unipotent": Citation(
        "constant-unipotent",
        "the constant points of a nontrivial unipotent group are not realizable",
    ),
    "sigma-reduced": Citation(
        "sigma-reduced",
        "a realizable group is sigma-reduced because sigma is bijective on C(x)",
    ),
    "sigma-connected": Citation(
        "sigma-connected",
        "a realizable group is sigma-connected because C(x) has no nontrivial finite "
        "sigma-stable extensions",
    ),
    "constant-gm": Citation(
        "constant-gm",
        "y' = y has solution exp(x) with sigma(y) = e*y, so the group is the constant "
        "points of Gm",
    ),
}


@dataclass
class PVEquation:
    """``delta(Y) = A*Y`` with a symbolic solution and a verified group."""

    n: int
    A: tuple
    solution: object
    claimed_group: SigmaGroupSpec
    check: object = None  # verdict of the shiftrel classifier

    def matrix_strings(self):
        return [[str(c) for c in row] for row in self.A]


@dataclass(frozen=True)
class GeneratorTag:
    """One generating subgroup: ``kind`` in {Ga, Gm, Cyclic} and where it
    sits inside GL_n (e.g. ``E12`` or ``diag(t,1)``)."""

    kind: str
    embedding: str
    d: Optional[int] = None

    def __str__(self):
        base = f"Cyclic({self.d})" if self.kind == "Cyclic" else self.kind
        return f"{base}[{self.embedding}]"


@dataclass
class Realizable:
    blocks: list
    decomposition: list
    justification: list = field(default_factory=list)

    kind = "Realizable"


@dataclass
class NotRealizable:
    reason: str  # ProperGaSubgroup | ConstantUnipotent | NotSigmaReduced | NotSigmaConnected
    citation: Citation

    kind = "NotRealizable"


@dataclass
class Unknown:
    note: str = "no implemented criterion applies"

    kind = "Unknown"


RealizabilityVerdict = Union[Realizable, NotRealizable, Unknown]


# ---------------------------------------------------------------------------
# Building blocks

def _kind_of(kind) -> tuple:
    if isinstance(kind, GeneratorTag):
        return kind.kind, kind.d
    if isinstance(kind, tuple):
        return kind
    text = str(kind)
    if text.lower().startswith("cyclic"):
        g = parse_group_name(text)
        return "Cyclic", g.param
    return text, None


def build_block(kind, gamma) -> PVEquation:
    """The equation for one generator placed at ``gamma``.

    ``kind`` is ``"Gm"``, ``"Ga"``, ``("Cyclic", d)`` or ``"cyclic(d)"``.
    The construction is checked by the matching classifier; a failed check
    raises ClassifierMismatch.
    """
    gamma = GaussRational.coerce(gamma)
    k, d = _kind_of(kind)
    if k == "Gm":
        a = -1 / (X - gamma) ** 2
        verdict = classify_gm(a)
        eq = PVEquation(1, ((a,),), ExpAtom(gamma), full_algebraic("Gm"), verdict)
    elif k == "Ga":
        a = -1 / ((X - gamma) * (X + 1 - gamma))
        verdict = classify_ga(a)
        zero = RatFunc.constant(0)
        eq = PVEquation(2, ((zero, a), (zero, zero)), LogAtom(gamma), full_algebraic("Ga"), verdict)
    elif k == "Cyclic":
        if d is None or d < 2:
            raise InvalidParameter("cyclic block needs d >= 2")
        b = (X + 1 - gamma) / (X - gamma)
        verdict = classify_cyclic(b, d)
        a = delta(b) / (b * d)
        eq = PVEquation(1, ((a,),), RootAtom(gamma, d), full_algebraic(f"mu({d})"), verdict)
    else:
        raise InvalidParameter(f"unknown block kind {kind!r}")
    if not verdict.full:
        raise ClassifierMismatch(f"{k} block at gamma={gamma} is not full: {verdict}")
    return eq


def constant_gm_block() -> PVEquation:
    """``y' = y``: solution exp(x), group the constant points of Gm. The
    classifier must find the relation sigma(a) - a = 0."""
    one = RatFunc.constant(1)
    verdict = classify_gm(one)
    if verdict.full or tuple(verdict.exponents) != (-1, 1):
        raise ClassifierMismatch(f"constant Gm block: unexpected verdict {verdict}")
    return PVEquation(1, ((one,),), ExpLinear(), constant_points("Gm"), verdict)


# ---------------------------------------------------------------------------
# Decomposition into generators

def decompose(name) -> list:
    """Generating subgroups isomorphic to Ga, Gm or a cyclic group."""
    g = parse_group_name(name)
    n = g.n
    if g.kind == "Ga":
        return [GeneratorTag("Ga", "E12")]
    if g.kind == "Gm":
        return [GeneratorTag("Gm", "diag(t)")]
    if g.kind in ("mu", "cyclic"):
        return [] if g.param == 1 else [GeneratorTag("Cyclic", "diag(t)", g.param)]
    if g.kind == "torus":
        return [GeneratorTag("Gm", _diag(n, k)) for k in range(n)]
    if g.kind == "U":
        return [GeneratorTag("Ga", f"E{j}{j + 1}") for j in range(1, n)]
    if g.kind in ("SL", "GL"):
        out = []
        for j in range(1, n):
            out.append(GeneratorTag("Ga", f"E{j}{j + 1}"))
            out.append(GeneratorTag("Ga", f"E{j + 1}{j}"))
        if g.kind == "GL":
            out.append(GeneratorTag("Gm", _diag(n, 0)))
        return out
    raise InvalidParameter(f"no decomposition for {g}")


def _diag(n: int, k: int) -> str:
    return "diag(" + ",".join("t" if j == k else "1" for j in range(n)) + ")"


def gamma_schedule(count: int) -> list:
    """``i, 2i, 3i, ...``: pairwise differences are never integers."""
    return [I * (k + 1) for k in range(count)]


# ---------------------------------------------------------------------------
# Verdicts

def _candidate_names(n: int, spec: SigmaGroupSpec) -> list:
    names = []
    if n == 1:
        names += ["Gm", "GL(1)", "SL(1)", "torus(1)", "U(1)"]
        degs = {p.total_degree for p in spec.defining if p.total_degree > 0}
        names += [f"mu({d})" for d in sorted(degs)]
    else:
        if n == 2:
            names.append("Ga")
        names += [f"SL({n})", f"GL({n})", f"torus({n})", f"U({n})"]
    return names


def retag(spec: SigmaGroupSpec) -> SigmaGroupSpec:
    """Give a Custom spec the family tag of a constructor producing the same
    set of defining equations."""
    if not isinstance(spec.family_tag, Custom):
        return spec
    target = frozenset(spec.defining)
    for name in _candidate_names(spec.n, spec):
        for ctor in (full_algebraic, constant_points):
            try:
                cand = ctor(name)
            except InvalidParameter:
                continue
            if cand.n == spec.n and frozenset(cand.defining) == target:
                return cand
    return spec


def realize_algebraic(name) -> Realizable:
    g = parse_group_name(name)
    tags = decompose(g)
    gammas = gamma_schedule(len(tags))
    blocks = [build_block((t.kind, t.d), gm) for t, gm in zip(tags, gammas)]
    return Realizable(blocks, tags, [CITE["main-theorem"], CITE["generation"], CITE["patching"]])


_GM_ALIASES = (GroupName("Gm"), GroupName("GL", 1), GroupName("torus", 1))


def verdict(spec: SigmaGroupSpec, deadline=None) -> RealizabilityVerdict:
    """Decision cascade: full algebraic groups are realizable; proper G_L,
    constant unipotent groups, non sigma-reduced and non sigma-connected
    groups are not; constant Gm is realizable by y' = y; otherwise Unknown."""
    spec = retag(spec)
    tag = spec.family_tag
    if isinstance(tag, FullAlgebraic):
        return realize_algebraic(tag.name)
    op = recognize_ga_linear(spec, deadline)
    if op is not None and op.n >= 1:
        return NotRealizable("ProperGaSubgroup", CITE["ga-subgroups"])
    if isinstance(tag, ConstantPoints) and tag.name.is_unipotent and not tag.name.is_trivial:
        return NotRealizable("ConstantUnipotent", CITE["constant-unipotent"])
    if is_sigma_reduced(spec) is False:
        return NotRealizable("NotSigmaReduced", CITE["sigma-reduced"])
    if is_sigma_connected(spec) is False:
        return NotRealizable("NotSigmaConnected", CITE["sigma-connected"])
    if isinstance(tag, ConstantPoints) and tag.name in _GM_ALIASES:
        block = constant_gm_block()
        return Realizable([block], [GeneratorTag("Gm", "diag(t)")], [CITE["constant-gm"]])
    return Unknown()
