"""Shared random generators for the test suites."""

from fractions import Fraction

from hypothesis import strategies as st

from sgx.ratfunc import GaussRational, PoleAtom, Poly, RatFunc

small_int = st.integers(min_value=-6, max_value=6)
small_frac = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=4))
gauss = st.builds(GaussRational, small_frac, small_frac)
gauss_int = st.builds(GaussRational, st.integers(-3, 3), st.integers(-3, 3))
nonzero_gauss = gauss.filter(bool)


@st.composite
def polys(draw, max_degree=3, coeffs=gauss):
    cs = draw(st.lists(coeffs, min_size=0, max_size=max_degree + 1))
    return Poly(cs)


@st.composite
def split_ratfuncs(draw, max_poles=3, max_order=3, max_degree=3):
    """Rational functions whose denominators split over Q(i)."""
    num = draw(polys(max_degree))
    roots = draw(st.lists(st.tuples(gauss_int, st.integers(1, max_order)), max_size=max_poles))
    den = Poly((1,))
    for r, m in roots:
        den = den * Poly.linear_root(r) ** m
    return RatFunc(num, den)


@st.composite
def atom_lists(draw, betas, max_atoms=4, max_order=2, coeffs=nonzero_gauss):
    """Distinct pole atoms with locations from ``betas``."""
    keys = draw(st.lists(st.tuples(st.sampled_from(betas), st.integers(1, max_order)),
                         max_size=max_atoms, unique=True))
    return [PoleAtom(GaussRational.coerce(b), m, draw(coeffs)) for b, m in keys]


def from_atoms(atoms, poly=None) -> RatFunc:
    out = RatFunc(poly if poly is not None else Poly(()))
    for a in atoms:
        out = out + a.to_ratfunc()
    return out
