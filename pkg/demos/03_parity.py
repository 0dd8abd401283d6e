"""Parity blocks, the I(d, λ, j) family, and the two bounds z and Z."""
from kneser_transversal import ParamTriple, alpha, beta, d_formula, i_sets, od, parity_blocks, z_lower, z_upper

s = [1, 3, 4, 6, 7, 9]
print("blocks of", s, "->", parity_blocks(s), "OD =", od(s))

d, lam = 7, 2
print(f"alpha({d},{lam}) = {alpha(d, lam)}")
print("beta(λ, j) for j = λ+1..d-λ+2:", [beta(lam, j) for j in range(lam + 1, d - lam + 3)])
for j, block in enumerate(i_sets(d, lam), 1):
    print(f"  I_{j} = {sorted(block)}  OD = {od(block)}")

print("D(k, l) for k = 5:", [d_formula(5, l) for l in range(1, 9)])

for k in (3, 5, 10, 20):
    p = ParamTriple(k, d, lam)
    print(f"k={k:>2}: z = {z_lower(p)}, Z = {z_upper(p)}, width = {z_upper(p) - z_lower(p)}")
