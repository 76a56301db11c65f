"""Truncated sigma-ideals: the order-i part of a defining sigma-ideal,
optionally saturated at elements declared invertible."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from sgx.diffpoly.groebner import (
    PolyRing,
    groebner_basis,
    is_unit_basis,
    max_independent_set,
    reduce,
)
from sgx.diffpoly.sigmapoly import SigmaPolynomial

ORDER_TAG = "grevlex/level-major"


def ordered_variables(names, order: int) -> list:
    """Variables of level <= order, largest first: higher level first, then
    the given name order."""
    return [(n, lv) for lv in range(order, -1, -1) for n in names]


@dataclass
class TruncatedIdeal:
    """An ideal of polynomials in ``sigma^l(name)`` for ``l <= order``.

    ``inverted`` lists polynomials treated as units; the ideal is saturated
    at them. ``basis`` is filled by ``groebner`` and holds the reduced basis
    of the saturated ideal.
    """

    order: int
    names: tuple
    generators: list
    inverted: list = field(default_factory=list)
    order_tag: str = ORDER_TAG
    _basis: Optional[list] = field(default=None, repr=False)

    @property
    def variables(self) -> list:
        return ordered_variables(self.names, self.order)

    def ring(self) -> PolyRing:
        return PolyRing(self.variables)

    @property
    def groebner_basis(self) -> Optional[list]:
        return self._basis

    def is_unit(self) -> bool:
        basis = groebner(self).groebner_basis
        return len(basis) == 1 and basis[0] == 1


def truncation(generators, order: int, names=None, invert=()) -> TruncatedIdeal:
    """Collect the prolongations ``sigma^l(p)`` with order at most ``order``.

    ``invert`` holds level-0 polynomials (e.g. a determinant) that are made
    invertible at every level ``0..order``.
    """
    generators = [SigmaPolynomial.coerce(g) for g in generators]
    if names is None:
        names = sorted({n for g in generators for n in g.names})
    gens = []
    for g in generators:
        top = g.order
        for l in range(0, order - max(top, 0) + 1):
            p = g.prolong(l)
            if p:
                gens.append(p)
    inv = [SigmaPolynomial.coerce(h).prolong(l) for h in invert for l in range(order + 1)]
    return TruncatedIdeal(order, tuple(names), gens, inv)


def _saturated_basis(ideal: TruncatedIdeal, deadline=None) -> list:
    base_vars = ideal.variables
    if not ideal.inverted:
        ring = PolyRing(base_vars)
        gb = groebner_basis([ring.from_sigma(g) for g in ideal.generators], ring, deadline)
        return [ring.to_sigma(g) for g in gb]
    inv_vars = [("__inv", k) for k in range(len(ideal.inverted))]
    ring = PolyRing(inv_vars + base_vars, (len(inv_vars), len(base_vars)))
    polys = [ring.from_sigma(g) for g in ideal.generators]
    for v, h in zip(inv_vars, ideal.inverted):
        polys.append(ring.from_sigma(SigmaPolynomial.var(*v) * h - 1))
    gb = groebner_basis(polys, ring, deadline)
    k = len(inv_vars)
    kept = [g for g in gb if all(not any(m[:k]) for m in g)]
    # the block order restricted to the base variables is plain grevlex, so
    # the kept elements already form the reduced basis
    return [ring.to_sigma(g) for g in kept]


def groebner(ideal: TruncatedIdeal, deadline: Optional[float] = None) -> TruncatedIdeal:
    """Fill in and return the reduced Groebner basis (cached)."""
    if ideal._basis is None:
        ideal._basis = _saturated_basis(ideal, deadline)
    return ideal


def _basis_dicts(ideal: TruncatedIdeal, deadline=None):
    groebner(ideal, deadline)
    ring = ideal.ring()
    return ring, [ring.from_sigma(g) for g in ideal.groebner_basis]


def dimension(ideal: TruncatedIdeal, deadline: Optional[float] = None) -> int:
    """Krull dimension of the quotient ring; -1 for the unit ideal."""
    ring, basis = _basis_dicts(ideal, deadline)
    if not basis:
        return ring.nvars
    if is_unit_basis(basis, ring):
        return -1
    return max_independent_set(basis, ring)


def contains(ideal: TruncatedIdeal, p, deadline: Optional[float] = None) -> bool:
    """Ideal membership of ``p`` (whose variables must have level <= order)."""
    ring, basis = _basis_dicts(ideal, deadline)
    p = SigmaPolynomial.coerce(p)
    if p.variables() - set(ring.variables):
        raise ValueError("polynomial uses variables outside the truncation")
    return not reduce(ring.from_sigma(p), basis, ring)


def is_subideal(a: TruncatedIdeal, b: TruncatedIdeal, deadline=None) -> bool:
    """Whether ``a`` is contained in ``b`` (both saturated)."""
    groebner(a, deadline)
    return all(contains(b, g, deadline) for g in a.groebner_basis)


def same_ideal(a: TruncatedIdeal, b: TruncatedIdeal, deadline=None) -> bool:
    groebner(a, deadline)
    groebner(b, deadline)
    if set(a.variables) != set(b.variables):
        return False
    return a.groebner_basis == b.groebner_basis


def eliminate(polys, eliminate_vars, keep_vars, deadline=None) -> list:
    """Generators of ``(polys) ∩ k[keep_vars]`` by a block order."""
    ring = PolyRing(list(eliminate_vars) + list(keep_vars),
                    (len(eliminate_vars), len(keep_vars)))
    gb = groebner_basis([ring.from_sigma(p) for p in polys], ring, deadline)
    k = len(eliminate_vars)
    return [ring.to_sigma(g) for g in gb if all(not any(m[:k]) for m in g)]
