from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import atom_lists, from_atoms, gauss, polys
from sgx.errors import InvalidOrder, InvalidParameter
from sgx.ratfunc import I, GaussRational, PoleAtom, RatFunc, X, delta, is_dth_power, sigma
from sgx.shiftrel import (
    LaurentVec,
    brute_force_kummer,
    brute_force_relation,
    classify_cyclic,
    classify_ga,
    classify_gm,
    orbit_decompose,
    shift_combination,
)

x = X
BETAS = [0, I, 1 + I, 2 * I]
residues = st.one_of(
    st.builds(lambda n, d: GaussRational(Fraction(n, d)), st.integers(-3, 3).filter(bool), st.integers(1, 3)),
    st.builds(lambda n, d: GaussRational(0, Fraction(n, d)), st.integers(-3, 3).filter(bool), st.integers(1, 3)),
)


def atom(beta, order=1, coeff=1):
    return PoleAtom(GaussRational.coerce(beta), order, GaussRational.coerce(coeff))


# -- orbit classes ----------------------------------------------------------

def test_orbit_examples():
    classes = orbit_decompose([atom(I), atom(1 + I), atom(3 + I)])
    assert len(classes) == 1
    assert classes[0].rep == I
    assert sorted(classes[0].members) == [0, 1, 3]
    assert len(orbit_decompose([atom(0), atom(I)])) == 2
    assert orbit_decompose([]) == []


def test_orbit_rep_real_part_in_unit_interval():
    cls = orbit_decompose([atom(GaussRational(Fraction(-7, 2), 1))])[0]
    assert cls.rep == GaussRational(Fraction(1, 2), 1)
    assert list(cls.members) == [-4]


def test_orbit_rejects_duplicates():
    with pytest.raises(InvalidParameter):
        orbit_decompose([atom(0), atom(0)])


@given(atom_lists([0, 1, -2, I, 1 + I, Fraction(1, 2), Fraction(5, 2) + I], max_atoms=6))
def test_orbit_partition(atoms):
    classes = orbit_decompose(atoms)
    back = [a for c in classes for a in c.atoms()]
    assert sorted(back, key=repr) == sorted(atoms, key=repr)
    reps = [c.rep for c in classes]
    assert len(reps) == len(set(reps))
    for c in classes:
        assert 0 <= c.rep.re < 1
        for a in c.atoms():
            assert (a.beta - c.rep).is_rational_integer()


def test_laurent_product_is_shift():
    v = LaurentVec.from_list([1, -2, 3])
    t = LaurentVec({1: 1})
    assert v * t == v.shift(1)
    assert (v * LaurentVec()).is_zero()


# -- Ga ----------------------------------------------------------------------

def test_ga_examples():
    assert classify_ga(-1 / ((x - I) * (x + 1 - I))).full
    v = classify_ga(1 / (x - I) ** 2)
    assert not v.full and v.antiderivative == -1 / (x - I)
    a = 1 / x + 1 / (x + 1)
    assert classify_ga(a).full
    assert brute_force_relation(a, "additive", 6, 4) is None


def test_ga_zero():
    v = classify_ga(RatFunc.constant(0))
    assert not v.full and v.antiderivative == 0


# -- Gm ----------------------------------------------------------------------

def test_gm_examples():
    assert classify_gm(-1 / (x - I) ** 2).full
    v = classify_gm(RatFunc.constant(1))
    assert v.exponents == (-1, 1) and v.witness == 1
    v = classify_gm(1 / (2 * x))
    assert v.exponents == (2,) and v.witness == x
    assert classify_gm(I / x).full
    assert brute_force_relation(I / x, "multiplicative", 6, 4) is None


def test_gm_zero():
    v = classify_gm(RatFunc.constant(0))
    assert v.exponents == (1,) and v.witness == 1


def test_gm_polynomial_part():
    a = x ** 2 + 1 / (3 * (x - I))
    v = classify_gm(a)
    assert not v.full
    combo = shift_combination(a, v.exponents)
    assert delta(v.witness) / v.witness == combo


# -- cyclic ------------------------------------------------------------------

@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_cyclic_lemma_instance(d):
    assert classify_cyclic((x + 1) / x, d).full


def test_cyclic_examples():
    v = classify_cyclic(x ** 2, 2)
    assert not v.full and v.prime == 2 and v.witness == x
    b = x ** 2 * (x + 5)
    assert classify_cyclic(b, 2).full
    assert brute_force_kummer(b, 2, 2, exact_products=True) is None


def test_cyclic_degenerate():
    v = classify_cyclic(RatFunc.constant(3), 6)
    assert not v.full and v.prime == 2 and v.witness == 1
    with pytest.raises(InvalidOrder):
        classify_cyclic(x, 1)
    with pytest.raises(InvalidParameter):
        classify_cyclic(RatFunc.constant(0), 2)


def test_cyclic_mixed_prime():
    # every valuation divisible by 2 but not by 3
    b = x ** 2 / (x + I) ** 4
    assert classify_cyclic(b, 3).full
    v = classify_cyclic(b, 6)
    assert not v.full and v.prime == 2
    assert (b / v.witness ** 2).is_constant()


# -- brute force --------------------------------------------------------------

def test_brute_force_examples():
    assert brute_force_relation(1 / (x - I) ** 2, "additive", 6, 4) == (1,)
    assert brute_force_relation(RatFunc.constant(1), "multiplicative", 1, 1) == (-1, 1)
    assert brute_force_relation(-1 / (x - I) ** 2, "multiplicative", 6, 4) is None
    with pytest.raises(InvalidParameter):
        brute_force_relation(x, "other")


# -- properties ----------------------------------------------------------------

inputs = st.builds(from_atoms, atom_lists(BETAS, max_atoms=4, max_order=2, coeffs=residues))


@given(inputs)
@settings(max_examples=40)
def test_ga_matches_oracle(a):
    v = classify_ga(a)
    if v.full:
        assert brute_force_relation(a, "additive", 6, 4) is None
    else:
        assert delta(v.antiderivative) == a


@given(inputs)
@settings(max_examples=40)
def test_gm_matches_oracle(a):
    v = classify_gm(a)
    if v.full:
        assert brute_force_relation(a, "multiplicative", 6, 4) is None
    else:
        assert any(v.exponents)
        f = v.witness
        assert delta(f) / f == shift_combination(a, v.exponents)


@st.composite
def valuation_products(draw):
    b = RatFunc.constant(draw(st.sampled_from([1, 2, I])))
    for beta in draw(st.lists(st.sampled_from(BETAS), max_size=3, unique=True)):
        b = b * (x + beta) ** draw(st.sampled_from([-2, -1, 1, 2]))
    return b


@given(valuation_products(), st.sampled_from([2, 3, 4, 6]))
@settings(max_examples=15)
def test_cyclic_matches_kummer_oracle(b, d):
    v = classify_cyclic(b, d)
    hit = brute_force_kummer(b, d, 3, exact_products=True)
    if v.full:
        assert hit is None
    else:
        assert (b / v.witness ** v.prime).is_constant()
        assert hit is not None


@given(inputs)
@settings(max_examples=30)
def test_shift_covariance(a):
    s = sigma(a, 1)
    assert classify_ga(s).full == classify_ga(a).full
    assert classify_gm(s).full == classify_gm(a).full


@given(valuation_products(), st.sampled_from([2, 3, 4, 6]))
@settings(max_examples=30)
def test_cyclic_shift_covariance(b, d):
    if not b.is_constant():
        assert classify_cyclic(sigma(b, 1), d).full == classify_cyclic(b, d).full


@given(inputs, gauss.filter(bool))
@settings(max_examples=30)
def test_ga_scaling(a, lam):
    assert classify_ga(a * lam).full == classify_ga(a).full


@given(polys(3))
@settings(max_examples=30)
def test_polynomials_are_ga_trivial_and_gm_not_full(p):
    a = RatFunc(p)
    assert not classify_ga(a).full
    v = classify_gm(a)
    assert not v.full
    assert delta(v.witness) / v.witness == shift_combination(a, v.exponents)


def test_dth_power_witness_for_not_full():
    b = (x + 1) ** 3 / x ** 3
    v = classify_cyclic(b, 3)
    assert not v.full
    assert is_dth_power(b, 3) == v.witness
