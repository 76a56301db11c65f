import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgx.diffpoly import (
    PolyRing,
    SigmaPolynomial,
    TruncatedIdeal,
    contains,
    dimension,
    groebner,
    groebner_basis,
    prolong,
    same_ideal,
    truncation,
)
from sgx.errors import ResourceBudgetExceeded
from sgx.ratfunc import I

S = SigmaPolynomial
y = S.var("y")
y1, y2 = y.prolong(1), y.prolong(2)


def basis_strings(ideal):
    return sorted(str(g) for g in groebner(ideal).groebner_basis)


# -- prolongation ---------------------------------------------------------------

def test_prolong_examples():
    assert prolong(y ** 2 - 1, 1) == y1 ** 2 - 1
    p = y * y1 + I
    assert prolong(p, 0) == p
    assert prolong(p, 1) == y1 * y2 + I


@st.composite
def sigma_polys(draw):
    out = S.constant(draw(st.integers(-3, 3)))
    for _ in range(draw(st.integers(0, 3))):
        term = S.constant(draw(st.integers(-3, 3)))
        for _ in range(draw(st.integers(0, 2))):
            term = term * S.var(draw(st.sampled_from(["y", "z"])), draw(st.integers(0, 2)))
        out = out + term
    return out


@given(sigma_polys(), sigma_polys(), st.integers(0, 3))
def test_prolong_respects_products(p, q, l):
    assert prolong(p * q, l) == prolong(p, l) * prolong(q, l)
    assert prolong(p + q, l) == prolong(p, l) + prolong(q, l)


# -- truncation -----------------------------------------------------------------

def test_truncation_examples():
    t = truncation([y1 - y], 2, invert=[y])
    assert set(t.generators) == {y1 - y, y2 - y1}
    assert dimension(t) == 1
    t = truncation([], 2, names=["y"], invert=[y])
    assert t.generators == []
    assert dimension(t) == 3
    t = truncation([y], 0, invert=[y])
    assert dimension(t) == -1


@given(st.lists(sigma_polys(), max_size=3), st.integers(0, 3))
def test_truncation_orders(gens, i):
    t = truncation(gens, i, names=["y", "z"])
    assert all(g.order <= i for g in t.generators)


# -- Groebner ------------------------------------------------------------------

def test_groebner_examples():
    t = TruncatedIdeal(2, ("y",), [y1 - y, y2 - y1])
    # the reduced basis replaces y2 - y1 by y2 - y (same ideal)
    assert basis_strings(t) == ["s(y)-y", "s^2(y)-y"]
    assert contains(t, y2 - y1)
    t = TruncatedIdeal(1, ("y",), [y ** 2 - 1, y1 - y])
    assert basis_strings(t) == ["s(y)-y", "y^2-1"]
    g = {n: S.var(n) for n in ("g11", "g12", "g21", "g22")}
    det = g["g11"] * g["g22"] - g["g12"] * g["g21"]
    t = truncation([det - 1], 0, names=("g11", "g12", "g21", "g22"))
    assert len(groebner(t).groebner_basis) == 1
    assert dimension(t) == 3


def test_groebner_textbook_example():
    # x^2 + y^2 - 1, x - y  ->  y^2 - 1/2, x - y  (grevlex, x > y)
    a, b = S.var("a"), S.var("b")
    t = TruncatedIdeal(0, ("a", "b"), [a ** 2 + b ** 2 - 1, a - b])
    assert basis_strings(t) == ["a-b", "b^2-1/2"]


@given(st.lists(sigma_polys(), min_size=1, max_size=3))
@settings(max_examples=40)
def test_groebner_idempotent(gens):
    t = TruncatedIdeal(2, ("y", "z"), gens)
    first = groebner(t).groebner_basis
    again = groebner(TruncatedIdeal(2, ("y", "z"), list(first))).groebner_basis
    assert again == first
    for g in gens:
        assert contains(t, g)


def test_unit_ideal():
    t = TruncatedIdeal(0, ("y",), [y, y - 1])
    assert dimension(t) == -1
    assert groebner(t).groebner_basis == [S.constant(1)]


def test_degree_cap():
    ring = PolyRing([("y", 0)])
    with pytest.raises(ResourceBudgetExceeded):
        groebner_basis([ring.from_sigma(y ** 13)], ring)


def test_deadline():
    names = [f"v{k}" for k in range(7)]
    vs = [S.var(n) for n in names]
    gens = [sum((v ** 3 for v in vs), S()) - 1] + [vs[k] * vs[k + 1] - vs[(k + 3) % 7] ** 2 for k in range(6)]
    t = TruncatedIdeal(0, tuple(names), gens)
    with pytest.raises(ResourceBudgetExceeded):
        groebner(t, deadline=time.monotonic() - 1)


# -- dimension of prolongations ----------------------------------------------

def _entries(n):
    return tuple(f"g{j}{k}" for j in range(1, n + 1) for k in range(1, n + 1))


@pytest.mark.parametrize("i", [0, 1, 2])
def test_prolongation_dimension(i):
    # Gm: dim 1, Ga (as the additive line): dim 1, SL2: dim 3
    gm = truncation([], i, names=["y"], invert=[y])
    assert dimension(gm) == i + 1
    ga = truncation([], i, names=["u"])
    assert dimension(ga) == i + 1
    g = {n: S.var(n) for n in _entries(2)}
    det = g["g11"] * g["g22"] - g["g12"] * g["g21"]
    sl2 = truncation([det - 1], i, names=_entries(2))
    assert dimension(sl2) == 3 * (i + 1)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_constant_gm_dimension(i):
    assert dimension(truncation([y1 - y], i, invert=[y])) == 1


def test_same_ideal():
    a = TruncatedIdeal(2, ("y",), [y1 - y, y2 - y1])
    b = TruncatedIdeal(2, ("y",), [y2 - y, y1 - y])
    assert same_ideal(a, b)
