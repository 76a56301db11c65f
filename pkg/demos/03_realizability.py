"""
Realizability verdicts: explicit equations for full algebraic groups,
certified obstructions for several constant and non-reduced groups.
"""

from sgx.cli import dumps, run
from sgx.realize import NotRealizable, Realizable, verdict
from sgx.sgroups import constant_points, fixture_gl2_example, full_algebraic, ga_linear_subgroup

cases = {
    "SL2": full_algebraic("SL2"),
    "GL2": full_algebraic("GL2"),
    "mu(6)": full_algebraic("mu(6)"),
    "constant Ga": constant_points("Ga"),
    "constant mu(2)": constant_points("mu(2)"),
    "constant U(3)": constant_points("U(3)"),
    "constant Gm": constant_points("Gm"),
    "G_L, L = sigma": ga_linear_subgroup([0]),
    "GL2 with two components": fixture_gl2_example().spec,
}

for label, spec in cases.items():
    v = verdict(spec)
    print(f"\n{label}: {v.kind}")
    if isinstance(v, Realizable):
        for tag, block in zip(v.decomposition, v.blocks):
            print(f"  {tag}: A = {block.matrix_strings()}  ({block.check.kind})")
    elif isinstance(v, NotRealizable):
        print(f"  {v.reason}: {v.citation.statement}")

# %% The same verdict as a JSON certificate
print()
run(["realize", "--group", "sl2", "--json"])
print(dumps({"note": "certificates are key-sorted and whitespace-free"}))
