"""
Building-block equations over C(x) with the shift x -> x+1.

Each classifier decides whether the group of y' = a, y' = a*y or y^d = b
is the full prolongation, and returns a checkable witness otherwise.
"""

from sgx.ratfunc import I, X, delta, partial_fractions
from sgx.shiftrel import (
    brute_force_kummer,
    brute_force_relation,
    classify_cyclic,
    classify_ga,
    classify_gm,
    shift_combination,
)

x = X

# %% Partial fractions over Q(i)
f = x ** 3 / (x - 1) + 1 / (x - I) ** 2
pf = partial_fractions(f)
print("f =", f)
print("  polynomial part:", pf.poly_part)
for atom in pf.atoms:
    print(f"  ({atom.coeff})/(x+({atom.beta}))^{atom.order}")

# %% Additive blocks: a log atom is full, a pure double pole is not
for a in [-1 / ((x - I) * (x + 1 - I)), 1 / (x - I) ** 2]:
    v = classify_ga(a)
    print(f"\ny' = {a}:", v.kind, "-", v.reason)
    if not v.full:
        print("  antiderivative:", v.antiderivative, "check:", delta(v.antiderivative) == a)
    print("  brute force (additive, length 4):", brute_force_relation(a, "additive", 6, 4))

# %% Multiplicative blocks
for a in [-1 / (x - I) ** 2, x * 0 + 1, 1 / (2 * x), I / x]:
    v = classify_gm(a)
    print(f"\ny' = ({a})*y:", v.kind)
    if not v.full:
        combo = shift_combination(a, v.exponents)
        print("  exponents:", v.exponents, "witness:", v.witness)
        print("  log-derivative identity holds:", delta(v.witness) / v.witness == combo)
    print("  brute force (box 6, length 4):", brute_force_relation(a, "multiplicative", 6, 4))

# %% Radicals
b = (x + 1) / x
for d in (2, 3, 4, 6):
    print(f"\ny^{d} = {b}:", classify_cyclic(b, d).kind,
          "| Kummer box:", brute_force_kummer(b, d, 3, exact_products=True))
v = classify_cyclic(x ** 2 / (x + I) ** 4, 6)
print("\ny^6 = x^2/(x+i)^4:", v.kind, "prime", v.prime, "witness", v.witness)
