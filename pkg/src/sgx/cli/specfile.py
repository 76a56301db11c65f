"""JSON serialization of SigmaGroupSpec.

Format::

    {"n": 2,
     "family_tag": {"kind": "FullAlgebraic", "name": "SL(2)"},
     "equations": ["g11*g22-g12*g21-1"]}

``kind`` is one of FullAlgebraic, ConstantPoints (both with ``name``),
GaLinearSubgroup (with ``lambda``: list of coefficient strings
lambda_0..lambda_{n-1}) or Custom (optional ``label``). Equations use
``s^k(g_jk)`` (or ``s(g11)``, ``g11``) for sigma^k of an entry. For a
tagged family the equations may be omitted; when present they must agree
with the family's own equations.
"""

from __future__ import annotations

import json

from sgx.cli.parser import parse, parse_sigma_poly
from sgx.diffpoly import format_sigma_poly
from sgx.errors import InvalidParameter
from sgx.ratfunc import format_gauss
from sgx.sgroups import (
    ConstantPoints,
    Custom,
    FullAlgebraic,
    GaLinearSubgroup,
    LinearSigmaOperator,
    SigmaGroupSpec,
    constant_points,
    entry_names,
    full_algebraic,
    ga_linear_subgroup,
)


def tag_to_json(tag) -> dict:
    if isinstance(tag, FullAlgebraic):
        return {"kind": "FullAlgebraic", "name": str(tag.name)}
    if isinstance(tag, ConstantPoints):
        return {"kind": "ConstantPoints", "name": str(tag.name)}
    if isinstance(tag, GaLinearSubgroup):
        return {"kind": "GaLinearSubgroup", "lambda": [format_gauss(c) for c in tag.operator.lambdas]}
    return {"kind": "Custom", "label": getattr(tag, "label", "")}


def spec_to_json(spec: SigmaGroupSpec) -> dict:
    return {
        "n": spec.n,
        "family_tag": tag_to_json(spec.family_tag),
        "equations": [format_sigma_poly(p) for p in spec.defining],
    }


def _constant(text) -> object:
    f = parse(str(text))
    if not f.is_constant():
        raise InvalidParameter(f"coefficient {text!r} is not a constant")
    return f.constant_value()


def spec_from_json(data) -> SigmaGroupSpec:
    if not isinstance(data, dict):
        raise InvalidParameter("spec must be a JSON object")
    tag = data.get("family_tag", {"kind": "Custom"})
    if isinstance(tag, str):
        tag = {"kind": tag}
    if not isinstance(tag, dict) or "kind" not in tag:
        raise InvalidParameter("family_tag must be an object with a 'kind' field")
    kind = tag["kind"]
    if kind == "FullAlgebraic":
        built = full_algebraic(tag.get("name", ""))
    elif kind == "ConstantPoints":
        built = constant_points(tag.get("name", ""))
    elif kind == "GaLinearSubgroup":
        lam = tag.get("lambda")
        if not isinstance(lam, list):
            raise InvalidParameter("GaLinearSubgroup needs a 'lambda' list")
        built = ga_linear_subgroup(LinearSigmaOperator(tuple(_constant(c) for c in lam)))
    elif kind == "Custom":
        built = None
    else:
        raise InvalidParameter(f"unknown family kind {kind!r}")

    n = data.get("n", built.n if built else None)
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 9:
        raise InvalidParameter("n must be an integer between 1 and 9")
    eqs = data.get("equations")
    if eqs is None:
        if built is None:
            raise InvalidParameter("a Custom spec needs equations")
        eqs_parsed = None
    else:
        if not isinstance(eqs, list) or not all(isinstance(e, str) for e in eqs):
            raise InvalidParameter("equations must be a list of strings")
        eqs_parsed = [parse_sigma_poly(e) for e in eqs]
        allowed = set(entry_names(n))
        for p in eqs_parsed:
            bad = {v[0] for v in p.variables()} - allowed
            if bad:
                raise InvalidParameter(f"unknown variables {sorted(bad)} for n={n}")
    if built is not None:
        if built.n != n:
            raise InvalidParameter(f"family has n={built.n}, file says n={n}")
        if eqs_parsed is not None and frozenset(eqs_parsed) != frozenset(built.defining):
            raise InvalidParameter("equations do not match the family tag")
        return built
    return SigmaGroupSpec(n, tuple(eqs_parsed), Custom(str(tag.get("label", ""))))


def load_spec(path: str) -> SigmaGroupSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidParameter(f"cannot read spec file: {exc}") from exc
    except ValueError as exc:
        raise InvalidParameter(f"spec file is not valid JSON: {exc}") from exc
    return spec_from_json(data)
