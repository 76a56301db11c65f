"""The ``sgx`` command line: classifiers, partial fractions, group
predicates and realizability verdicts, with text or JSON output.

Exit codes: 0 verdict produced, 2 input error, 3 resource budget
exceeded, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from sgx import __version__
from sgx.cli.parser import parse
from sgx.cli.specfile import load_spec, spec_to_json
from sgx.diffpoly import dimension, format_sigma_poly, groebner
from sgx.errors import (
    ClassifierMismatch,
    DivisionByZero,
    InvalidParameter,
    ParseError,
    RequiresExtension,
    ResourceBudgetExceeded,
)
from sgx.ratfunc import format_gauss, partial_fractions
from sgx.realize import ExpAtom, ExpLinear, LogAtom, NotRealizable, Realizable, RootAtom, verdict
from sgx.sgroups import UNSUPPORTED, constant_points, full_algebraic, is_sigma_connected, is_sigma_reduced
from sgx.shiftrel import classify_cyclic, classify_ga, classify_gm, orbit_decompose

DEFAULT_DEADLINE_MS = 30000
VALUE_FLAGS = ("--a", "--b", "--f", "--d", "--group", "--spec", "--order", "--deadline-ms")
KNOWN_FLAGS = VALUE_FLAGS + ("--json", "--constant", "--help", "-h", "--version")

CLASSIFIER_CITES = {
    "ga": {"ref": "ga-criterion",
           "statement": "y' = a has full group [sigma]Ga iff the logarithmic part of a is nonzero"},
    "gm": {"ref": "gm-criterion",
           "statement": "y' = a*y has full group [sigma]Gm iff no nonzero integer combination "
                        "of shifts of a is a logarithmic derivative"},
    "cyclic": {"ref": "cyclic-criterion",
               "statement": "y^d = b has full group [sigma]mu_d iff for each prime p | d some "
                            "orbit class of zeros and poles of b has a valuation not divisible by p"},
}


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


_PARSER = None


def build_parser() -> argparse.ArgumentParser:
    global _PARSER
    if _PARSER is not None:
        return _PARSER
    common = _ArgParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON certificate")
    common.add_argument("--deadline-ms", type=int, default=None,
                        help="time budget for Groebner jobs (default $SGX_DEADLINE_MS or 30000)")

    p = _ArgParser(prog="sgx", description="Sigma-Galois groups over C(x) with the shift x -> x+1.")
    p.add_argument("--version", action="version", version=f"sgx {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    cl = sub.add_parser("classify", help="decide the group of a building-block equation")
    clsub = cl.add_subparsers(dest="mode", required=True, parser_class=_ArgParser)
    ga = clsub.add_parser("ga", parents=[common], help="y' = a")
    ga.add_argument("--a", required=True)
    gm = clsub.add_parser("gm", parents=[common], help="y' = a*y")
    gm.add_argument("--a", required=True)
    cy = clsub.add_parser("cyclic", parents=[common], help="y^d = b")
    cy.add_argument("--b", required=True)
    cy.add_argument("--d", required=True, type=int)

    pf = sub.add_parser("pf", parents=[common], help="partial fractions over Q(i)")
    pf.add_argument("--f", required=True)

    rz = sub.add_parser("realize", parents=[common], help="realizability verdict")
    src = rz.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="algebraic group name, e.g. sl2, GL(3), mu(6), torus(2)")
    src.add_argument("--spec", help="JSON spec file")
    rz.add_argument("--constant", action="store_true", help="use the constant points of --group")

    gr = sub.add_parser("group", help="predicates on a spec file")
    grsub = gr.add_subparsers(dest="mode", required=True, parser_class=_ArgParser)
    dim = grsub.add_parser("dim", parents=[common], help="dimension of the order-i truncation")
    dim.add_argument("--spec", required=True)
    dim.add_argument("--order", required=True, type=int)
    red = grsub.add_parser("reduced", parents=[common], help="is the group sigma-reduced")
    red.add_argument("--spec", required=True)
    con = grsub.add_parser("connected", parents=[common], help="is the group sigma-connected")
    con.add_argument("--spec", required=True)
    _PARSER = p
    return p


def _merge_dash_values(argv):
    """Turn ``--a -1/x`` into ``--a=-1/x`` so values may start with '-'."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok in VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-") \
                and argv[k + 1].split("=")[0] not in KNOWN_FLAGS:
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def _deadline(args):
    ms = args.deadline_ms
    if ms is None:
        env = os.environ.get("SGX_DEADLINE_MS")
        if env is None:
            ms = DEFAULT_DEADLINE_MS
        else:
            try:
                ms = int(env)
            except ValueError:
                raise InvalidParameter("SGX_DEADLINE_MS must be an integer") from None
    if ms <= 0:
        raise InvalidParameter("deadline must be positive")
    return time.monotonic() + ms / 1000.0


# ---------------------------------------------------------------------------
# Certificates

def _atoms_json(atoms):
    return [{"beta": format_gauss(t.beta), "order": t.order, "coeff": format_gauss(t.coeff)}
            for t in atoms]


def _classify_ga(args):
    a = parse(args.a)
    v = classify_ga(a)
    cert = {"input": {"a": str(a)}, "verdict": v.kind, "reason": v.reason, "witnesses": {}}
    if v.full:
        cls = orbit_decompose(partial_fractions(a).logarithmic_part)
        cert["witnesses"]["logarithmic_part"] = _atoms_json(cls[0].atoms())
    else:
        cert["witnesses"]["antiderivative"] = str(v.antiderivative)
    return cert, [f"verdict: {v.kind}", f"reason: {v.reason}"] + (
        [] if v.full else [f"antiderivative: {v.antiderivative}"])


def _classify_gm(args):
    a = parse(args.a)
    v = classify_gm(a)
    cert = {"input": {"a": str(a)}, "verdict": v.kind, "reason": v.reason, "witnesses": {}}
    lines = [f"verdict: {v.kind}", f"reason: {v.reason}"]
    if not v.full:
        cert["witnesses"] = {"exponents": list(v.exponents), "witness": str(v.witness)}
        lines += [f"exponents: {list(v.exponents)}", f"witness: {v.witness}"]
    return cert, lines


def _classify_cyclic(args):
    b = parse(args.b)
    v = classify_cyclic(b, args.d)
    cert = {"input": {"b": str(b), "d": args.d}, "verdict": v.kind, "reason": v.reason, "witnesses": {}}
    lines = [f"verdict: {v.kind}", f"reason: {v.reason}"]
    if not v.full:
        cert["witnesses"] = {"prime": v.prime, "witness": str(v.witness)}
        lines += [f"prime: {v.prime}", f"witness: {v.witness}"]
    return cert, lines


def _pf(args):
    f = parse(args.f)
    pf = partial_fractions(f)
    cert = {"input": {"f": str(f)}, "verdict": "Decomposed",
            "witnesses": {"poly_part": str(pf.poly_part), "atoms": _atoms_json(pf.atoms)}}
    lines = [f"poly_part: {pf.poly_part}"] + [
        f"atom: ({format_gauss(t.coeff)})/(x+({format_gauss(t.beta)}))^{t.order}" for t in pf.atoms
    ]
    return cert, lines


def _solution_text(sol) -> str:
    if isinstance(sol, ExpAtom):
        return f"exp(1/(x-({format_gauss(sol.gamma)})))"
    if isinstance(sol, LogAtom):
        return f"log(1/(x-({format_gauss(sol.gamma)}))+1)"
    if isinstance(sol, RootAtom):
        g = format_gauss(sol.gamma)
        return f"((x+1-({g}))/(x-({g})))^(1/{sol.d})"
    if isinstance(sol, ExpLinear):
        return "exp(x)"
    return str(sol)


def _block_json(tag, block):
    check = block.check
    out = {
        "generator": str(tag),
        "n": block.n,
        "A": block.matrix_strings(),
        "solution": _solution_text(block.solution),
        "check": {"classifier_verdict": check.kind},
    }
    gamma = getattr(block.solution, "gamma", None)
    if gamma is not None:
        out["gamma"] = format_gauss(gamma)
    if getattr(check, "exponents", ()):
        out["check"]["exponents"] = list(check.exponents)
        out["check"]["witness"] = str(check.witness)
    return out


def _realize(args, deadline):
    if args.spec:
        spec = load_spec(args.spec)
    else:
        spec = (constant_points if args.constant else full_algebraic)(args.group)
    v = verdict(spec, deadline)
    cert = {"input": {"spec": spec_to_json(spec)}, "verdict": v.kind}
    lines = [f"verdict: {v.kind}"]
    if isinstance(v, Realizable):
        cert["blocks"] = [_block_json(t, b) for t, b in zip(v.decomposition, v.blocks)]
        cert["decomposition"] = [str(t) for t in v.decomposition]
        cert["citations"] = [{"ref": c.ref, "statement": c.statement} for c in v.justification]
        for t, b in zip(v.decomposition, v.blocks):
            lines.append(f"block {t}: A = {b.matrix_strings()}, solution {_solution_text(b.solution)}")
    elif isinstance(v, NotRealizable):
        cert["reason"] = v.reason
        cert["citations"] = [{"ref": v.citation.ref, "statement": v.citation.statement}]
        lines.append(f"reason: {v.reason}")
    else:
        cert["reason"] = v.note
        lines.append(f"note: {v.note}")
    return cert, lines


def _tri(value):
    return "Unsupported" if value is UNSUPPORTED else bool(value)


def _group(args, deadline):
    spec = load_spec(args.spec)
    cert = {"input": {"spec": spec_to_json(spec)}}
    if args.mode == "dim":
        if args.order < 0 or args.order > 8:
            raise InvalidParameter("order must be between 0 and 8")
        ideal = groebner(spec.truncation(args.order), deadline)
        d = dimension(ideal, deadline)
        cert.update({"verdict": "Dimension", "order": args.order, "dimension": d,
                     "basis": [format_sigma_poly(g) for g in ideal.groebner_basis]})
        return cert, [f"dimension at order {args.order}: {d}"]
    fn = is_sigma_reduced if args.mode == "reduced" else is_sigma_connected
    value = _tri(fn(spec))
    cert.update({"verdict": "Predicate", "predicate": args.mode, "value": value})
    return cert, [f"{args.mode}: {value}"]


def _dispatch(args):
    deadline = _deadline(args)
    if args.command == "classify":
        cmd = f"classify {args.mode}"
        handler = {"ga": _classify_ga, "gm": _classify_gm, "cyclic": _classify_cyclic}[args.mode]
        cert, lines = handler(args)
        cert["citations"] = [CLASSIFIER_CITES[args.mode]]
        return cmd, cert, lines
    if args.command == "pf":
        cert, lines = _pf(args)
        return "pf", cert, lines
    if args.command == "realize":
        cert, lines = _realize(args, deadline)
        return "realize", cert, lines
    cert, lines = _group(args, deadline)
    return f"group {args.mode}", cert, lines


def dumps(cert: dict) -> str:
    """Key-sorted, whitespace-free JSON."""
    return json.dumps(cert, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_merge_dash_values(argv))
        for name, value in vars(args).items():
            # argparse may hand back a list for values such as "--"
            if isinstance(value, list):
                raise UsageError(f"sgx: invalid value for --{name.replace('_', '-')}")
        if args.command == "classify" and args.mode == "cyclic" and args.d < 2:
            raise InvalidParameter("d must be >= 2")
        cmd, cert, lines = _dispatch(args)
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except (RequiresExtension, InvalidParameter, DivisionByZero) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except ResourceBudgetExceeded as exc:
        print(f"error: ResourceBudgetExceeded: {exc}", file=stderr)
        return 3
    except ClassifierMismatch as exc:
        print(f"internal error: {exc}", file=stderr)
        return 1
    cert["command"] = cmd
    cert["tool_version"] = __version__
    if args.json:
        print(dumps(cert), file=stdout)
    else:
        print("\n".join(lines), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())
