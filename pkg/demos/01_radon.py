"""Radon partitions with exact rationals.

Four points in the plane split into two blocks whose hulls meet. The
coefficients come straight from the affine dependence, so the identity
below holds with no rounding at all.
"""
from fractions import Fraction

from kneser_transversal import PointConfig, conv_aff_intersects, is_general_position, radon_partition

cfg = PointConfig.from_points([(0, 0), (4, 0), (0, 4), (1, 1)])
print("general position:", is_general_position(cfg))

rp = radon_partition(cfg)
print("positive block:", rp.positive, "negative block:", rp.negative)
for i, c in sorted(rp.coefficients.items()):
    print(f"  point {i} {[str(x) for x in cfg.point(i)]} weight {c}")

# the common point, once from each side
total = sum(rp.coefficients[i] for i in rp.positive)
for block in (rp.positive, rp.negative):
    pt = [sum(abs(rp.coefficients[i]) * cfg.point(i)[a] for i in block) / total for a in range(cfg.dim)]
    print("  common point:", [str(Fraction(x)) for x in pt])

# conv(S) meets aff(T)? three decision paths agree
for s, t in ([1, 4], [2, 3]), ([2, 3], [1, 4]):
    for method in ("radon", "lp", "auto"):
        print(f"conv{s} meets aff{t} via {method}:", conv_aff_intersects(cfg, s, t, method))
