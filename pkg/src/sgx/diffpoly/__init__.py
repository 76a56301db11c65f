"""Sigma-polynomial rings, truncated ideals and a Groebner kernel."""

from sgx.diffpoly.groebner import MAX_BASIS, MAX_DEGREE, PolyRing, groebner_basis
from sgx.diffpoly.ideal import (
    TruncatedIdeal,
    contains,
    dimension,
    eliminate,
    groebner,
    is_subideal,
    ordered_variables,
    same_ideal,
    truncation,
)
from sgx.diffpoly.sigmapoly import SigmaPolynomial, format_sigma_poly, prolong

__all__ = [
    "SigmaPolynomial", "format_sigma_poly", "prolong",
    "TruncatedIdeal", "truncation", "groebner", "dimension", "contains",
    "is_subideal", "same_ideal", "eliminate", "ordered_variables",
    "PolyRing", "groebner_basis", "MAX_DEGREE", "MAX_BASIS",
]
