import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgx.diffpoly import contains, dimension, groebner, is_subideal, same_ideal
from sgx.errors import InvalidParameter
from sgx.ratfunc import I, GaussRational
from sgx.sgroups import (
    UNSUPPORTED,
    ConstantPoints,
    Custom,
    FullAlgebraic,
    GroupName,
    LinearSigmaOperator,
    ProductAlgebra,
    SigmaGroupSpec,
    constant_points,
    determinant,
    entry,
    fixture_gl2_example,
    full_algebraic,
    ga_linear_subgroup,
    generated_subgroup_truncation,
    is_sigma_connected,
    is_sigma_reduced,
    parse_group_name,
    recognize_ga_linear,
    spec_contains,
)

g = entry(1, 1)


# -- names and constructors ------------------------------------------------------

def test_parse_group_names():
    assert parse_group_name("sl2") == GroupName("SL", 2)
    assert parse_group_name("SLn(3)") == GroupName("SL", 3)
    assert parse_group_name("mu(6)") == GroupName("mu", 6)
    assert parse_group_name("Gm") == GroupName("Gm")
    assert parse_group_name("U3") == GroupName("U", 3)
    for bad in ["SL", "Gm(2)", "mu(0)", "foo", "gl10"]:
        with pytest.raises(InvalidParameter):
            parse_group_name(bad)


def test_full_algebraic_examples():
    gm = full_algebraic("Gm")
    assert gm.n == 1 and gm.defining == ()
    mu2 = full_algebraic("mu(2)")
    assert mu2.n == 1 and mu2.defining == (g ** 2 - 1,)
    sl2 = full_algebraic("SLn(2)")
    assert sl2.n == 2 and sl2.defining == (determinant(2) - 1,)
    assert isinstance(sl2.family_tag, FullAlgebraic)


def test_constant_points_examples():
    assert constant_points("Gm").defining == (g.prolong(1) - g,)
    assert set(constant_points("mu(2)").defining) == {g ** 2 - 1, g.prolong(1) - g}
    ga = constant_points("Ga")
    u = entry(1, 2)
    assert u.prolong(1) - u in ga.defining
    assert isinstance(ga.family_tag, ConstantPoints)


def test_ga_linear_examples():
    u = entry(1, 2)
    const = ga_linear_subgroup([-1])
    assert same_ideal(const.truncation(2), constant_points("Ga").truncation(2))
    frozen = ga_linear_subgroup([0])
    assert u.prolong(1) in frozen.defining
    op = LinearSigmaOperator((1, -3))
    spec = ga_linear_subgroup(op)
    assert spec.max_order == 2
    assert u.prolong(2) - u.prolong(1) * 3 + u in spec.defining


# -- predicates --------------------------------------------------------------

def test_reduced_examples():
    assert is_sigma_reduced(ga_linear_subgroup([-1])) is True
    assert is_sigma_reduced(ga_linear_subgroup([0])) is False
    assert is_sigma_reduced(full_algebraic("SL2")) is True
    assert is_sigma_reduced(SigmaGroupSpec(1, ())) is UNSUPPORTED


def test_connected_examples():
    assert is_sigma_connected(constant_points("mu(2)")) is False
    assert is_sigma_connected(constant_points("mu(1)")) is True
    assert is_sigma_connected(ga_linear_subgroup([2, 0, 1])) is True
    assert is_sigma_connected(full_algebraic("mu(3)")) is True
    assert is_sigma_connected(constant_points("SL2")) is True
    assert is_sigma_connected(fixture_gl2_example().spec) is UNSUPPORTED


def test_unsupported_has_no_truth_value():
    with pytest.raises(TypeError):
        bool(UNSUPPORTED)


lambdas = st.lists(st.one_of(st.just(GaussRational(0)),
                             st.builds(GaussRational, st.integers(-3, 3), st.integers(-2, 2))),
                   min_size=1, max_size=3)


@given(lambdas)
@settings(max_examples=50)
def test_reduced_iff_constant_coefficient(lam):
    op = LinearSigmaOperator(tuple(lam))
    spec = ga_linear_subgroup(op)
    assert is_sigma_reduced(spec) == bool(op.lambdas[0])
    if not op.lambdas[0]:
        # w = L'(u) with L = L' o sigma: sigma(w) lies in the ideal, w does not
        u = entry(1, 2)
        w = u.prolong(op.n - 1)
        for k, c in enumerate(op.lambdas[1:]):
            if c:
                w = w + u.prolong(k) * c
        t = spec.truncation(op.n)
        assert contains(t, w.prolong(1))
        assert not contains(t, w)


@pytest.mark.parametrize("name", ["Gm", "Ga", "mu(2)", "SL2", "torus(2)"])
@pytest.mark.parametrize("i", [0, 1, 2])
def test_constant_inside_full(name, i):
    assert spec_contains(full_algebraic(name), constant_points(name), i)


def test_recognize_ga_linear():
    assert recognize_ga_linear(constant_points("Ga")).lambdas == (GaussRational(-1),)
    spec = ga_linear_subgroup([1, -3])
    custom = SigmaGroupSpec(2, spec.defining, Custom("copy"))
    assert recognize_ga_linear(custom) == LinearSigmaOperator((1, -3))
    assert recognize_ga_linear(full_algebraic("SL2")) is None


# -- closure under products, pointwise ----------------------------------------

def _mat_mul(a, b):
    n = len(a)
    return [[sum((a[j][t] * b[t][k] for t in range(n)), GaussRational(0)) for k in range(n)]
            for j in range(n)]


def _values(seq):
    out = {}
    for lv, m in enumerate(seq):
        for j, row in enumerate(m):
            for k, v in enumerate(row):
                out[(f"g{j + 1}{k + 1}", lv)] = GaussRational.coerce(v)
    return out


def _is_point(spec, seq):
    i = len(seq) - 1
    vals = _values(seq)
    one = GaussRational(1)
    for lv in range(i + 1):
        if not spec.det().prolong(lv).evaluate(vals, one):
            return False
    return all(not p.evaluate(vals, one) for p in spec.truncation(i).generators)


def _rand(rng):
    return GaussRational(Fraction(rng.randint(-5, 5), rng.randint(1, 3)), rng.randint(-2, 2))


def _rand_nonzero(rng):
    while True:
        c = _rand(rng)
        if c:
            return c


def _sl2(rng):
    a, b, c = _rand(rng), _rand(rng), _rand(rng)
    return _mat_mul(_mat_mul([[1, a], [0, 1]], [[1, 0], [b, 1]]), [[1, c], [0, 1]])


def _sample(kind, i, rng):
    """A point over Q(i) given by its matrices at sigma-levels 0..i."""
    if kind == "full Gm":
        return [[[_rand_nonzero(rng)]] for _ in range(i + 1)]
    if kind == "const Gm":
        return [[[_rand_nonzero(rng)]]] * (i + 1)
    if kind == "full mu4":
        return [[[rng.choice([1, -1, I, -I])]] for _ in range(i + 1)]
    if kind == "const mu2":
        return [[[rng.choice([1, -1])]]] * (i + 1)
    if kind == "full SL2":
        return [_sl2(rng) for _ in range(i + 1)]
    if kind == "const SL2":
        return [_sl2(rng)] * (i + 1)
    if kind == "const Ga":
        u = _rand(rng)
        return [[[1, u], [0, 1]]] * (i + 1)
    if kind.startswith("G_L"):
        lam0 = {"G_L 2": 2, "G_L 0": 0}[kind]
        u0 = _rand(rng)
        seq = [u0, -lam0 * u0][: i + 1]
        return [[[1, u], [0, 1]] for u in seq]
    raise AssertionError(kind)


SPECS = {
    "full Gm": full_algebraic("Gm"),
    "const Gm": constant_points("Gm"),
    "full mu4": full_algebraic("mu(4)"),
    "const mu2": constant_points("mu(2)"),
    "full SL2": full_algebraic("SL2"),
    "const SL2": constant_points("SL2"),
    "const Ga": constant_points("Ga"),
    "G_L 2": ga_linear_subgroup([2]),
    "G_L 0": ga_linear_subgroup([0]),
}


@pytest.mark.parametrize("kind", sorted(SPECS))
@pytest.mark.parametrize("i", [0, 1])
def test_product_closure_on_samples(kind, i):
    spec = SPECS[kind]
    rng = random.Random(f"{kind}:{i}")
    for _ in range(10):
        p, q = _sample(kind, i, rng), _sample(kind, i, rng)
        assert _is_point(spec, p) and _is_point(spec, q)
        prod = [_mat_mul(a, b) for a, b in zip(p, q)]
        assert _is_point(spec, prod)


# -- generated subgroups -------------------------------------------------------

def test_generated_constant_gm_idempotent():
    cg = constant_points("Gm")
    ideal = generated_subgroup_truncation(cg, cg, 2, 1)
    assert same_ideal(ideal, cg.truncation(1))


def test_generated_mu2_and_constant_gm():
    ideal = generated_subgroup_truncation(constant_points("mu(2)"), constant_points("Gm"), 2, 1)
    assert same_ideal(ideal, constant_points("Gm").truncation(1))


def _root_subgroup(upper):
    zero = entry(2, 1) if upper else entry(1, 2)
    return SigmaGroupSpec(2, (entry(1, 1) - 1, entry(2, 2) - 1, zero), Custom("root"))


def test_generated_sl2_from_root_subgroups():
    ideal = generated_subgroup_truncation(_root_subgroup(True), _root_subgroup(False), 4, 0)
    assert dimension(ideal) == 3
    assert same_ideal(ideal, full_algebraic("SL2").truncation(0))


def test_generated_monotone_in_word_length():
    h1, h2 = _root_subgroup(True), _root_subgroup(False)
    ideals = [generated_subgroup_truncation(h1, h2, w, 0) for w in range(1, 5)]
    assert [dimension(t) for t in ideals] == [1, 2, 3, 3]
    for small, big in zip(ideals, ideals[1:]):
        assert is_subideal(big, small)


def test_generated_rejects_mismatch():
    with pytest.raises(InvalidParameter):
        generated_subgroup_truncation(full_algebraic("Gm"), full_algebraic("SL2"), 2, 0)
    with pytest.raises(InvalidParameter):
        generated_subgroup_truncation(full_algebraic("Gm"), full_algebraic("Gm"), 0, 0)


# -- the GL2 example with two sigma-components -------------------------------------

def test_gl2_fixture_witnesses():
    fx = fixture_gl2_example()
    assert len(fx.spec.defining) == 5
    (ident, k), (twisted, kk) = fx.witness_points()
    assert fx.is_member(ident, k)
    assert fx.invariant_value(ident, k).values == (GaussRational(1),)
    assert fx.is_member(twisted, kk)
    assert fx.invariant_value(twisted, kk).values == (GaussRational(-1),) * 2


def test_gl2_fixture_rejects_random_matrices():
    fx = fixture_gl2_example()
    k = ProductAlgebra(1)
    rng = random.Random(7)
    for _ in range(20):
        m = [[_rand(rng), _rand(rng)], [_rand(rng), _rand(rng)]]
        # sigma acts trivially: membership forces an orthogonal-type matrix
        a, b, c, d = m[0][0], m[0][1], m[1][0], m[1][1]
        if a * c + b * d == 0 and (a * a + b * b) ** 2 == 1:
            continue
        assert not fx.is_member(m, k)


def test_gl2_fixture_contains_orthogonal_constants():
    fx = fixture_gl2_example()
    k = ProductAlgebra(1)
    assert fx.is_member([[0, 1], [-1, 0]], k)
    assert fx.is_member([[0, I], [I, 0]], k)
    assert fx.invariant_value([[0, I], [I, 0]], k).values == (GaussRational(-1),)


def test_gl2_fixture_groebner_is_proper():
    t = fixture_gl2_example().spec.truncation(1)
    groebner(t)
    assert not t.is_unit()
