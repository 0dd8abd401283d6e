"""Searching for ζ on cyclic polytopes.

Vertices of the cyclic polytope are labelled 1..n along the moment curve.
A candidate T is described by the lengths of the runs of vertices between
consecutive chosen ones. The search walks n upward and stops at the first
vertex count with no passing composition.
"""
from fractions import Fraction

from kneser_transversal import ParamTriple, asymptotic_trend, geometric_transversal_test, zeta

res = zeta(ParamTriple(3, 5, 2), "both-agree")
print(f"zeta(3,5,2) = {res.value}, witness gaps {res.witness.gaps}, T = {res.witness.t_positions}")
print("search transcript (n, found):", res.transcript)
print("witness verified on the moment curve:", geometric_transversal_test(res.witness, 3))

print("\nratio zeta/k against its limit 2 - alpha for d=5, λ=2:")
for row in asymptotic_trend(5, 2, [5, 10, 20, 40]):
    gap = row["zeta_over_k"] - row["limit"]
    print(f"  k={row['k']:>2} zeta={row['zeta']:>3} zeta/k={str(row['zeta_over_k']):>6} "
          f"distance={str(gap):>6} ({float(gap):.3f})")
assert asymptotic_trend(5, 2, [40])[0]["limit"] == Fraction(5, 3)
