"""Exact arithmetic in Q(i)(x) with d/dx and the shift x -> x + 1."""

from sgx.ratfunc.field import RatFunc, delta, format_ratfunc, log_derivative, sigma
from sgx.ratfunc.gaussian import I, ONE, ZERO, GaussRational, format_gauss
from sgx.ratfunc.partfrac import (
    PartialFraction,
    PoleAtom,
    antiderivative,
    gauss_roots,
    is_dth_power,
    is_log_derivative,
    logarithmic_part,
    partial_fractions,
    valuations,
)
from sgx.ratfunc.poly import Poly, format_poly, poly_gcd

X = RatFunc.x()

__all__ = [
    "GaussRational", "I", "ONE", "ZERO", "format_gauss",
    "Poly", "format_poly", "poly_gcd",
    "RatFunc", "X", "delta", "sigma", "log_derivative", "format_ratfunc",
    "PoleAtom", "PartialFraction", "gauss_roots", "partial_fractions",
    "logarithmic_part", "antiderivative", "is_log_derivative",
    "is_dth_power", "valuations",
]
