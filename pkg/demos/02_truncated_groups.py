"""
Sigma-closed subgroups of GL_n through their order-i truncations.

Dimensions come from reduced Groebner bases; the generated subgroup of two
root subgroups of SL_2 is approximated by words of growing length.
"""

from sgx.diffpoly import dimension, format_sigma_poly, groebner
from sgx.sgroups import (
    Custom,
    SigmaGroupSpec,
    constant_points,
    entry,
    fixture_gl2_example,
    full_algebraic,
    ga_linear_subgroup,
    generated_subgroup_truncation,
    is_sigma_connected,
    is_sigma_reduced,
)

# %% Dimensions of truncations grow like (i+1)*dim G for full groups
for name in ["Gm", "SL2"]:
    full, const = full_algebraic(name), constant_points(name)
    dims = [(dimension(full.truncation(i)), dimension(const.truncation(i))) for i in range(3)]
    print(f"{name}: (full, constant) dims for i = 0,1,2 ->", dims)

# %% Subgroups of Ga cut out by a linear difference operator
for lam in ([-1], [0], [1, -3]):
    spec = ga_linear_subgroup(lam)
    t = groebner(spec.truncation(2))
    print(f"\nL with lambda = {lam}: reduced={is_sigma_reduced(spec)}, "
          f"connected={is_sigma_connected(spec)}, dim at order 2 = {dimension(t)}")
    for g in t.groebner_basis:
        print("   ", format_sigma_poly(g))

# %% Words in the two root subgroups of SL2
def root(upper):
    zero = entry(2, 1) if upper else entry(1, 2)
    return SigmaGroupSpec(2, (entry(1, 1) - 1, entry(2, 2) - 1, zero), Custom("root"))


for w in range(1, 5):
    ideal = generated_subgroup_truncation(root(True), root(False), w, 0)
    print(f"\nword length {w}: dim {dimension(ideal)}")

# %% A group with two sigma-components
fx = fixture_gl2_example()
for matrix, algebra in fx.witness_points():
    print("\nmember:", fx.is_member(matrix, algebra),
          "invariant:", [str(v) for v in fx.invariant_value(matrix, algebra).values])
