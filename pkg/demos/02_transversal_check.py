"""Certifying a complete Kneser transversal.

With d=3, λ=1, k=3 we take n = (d-λ+1)+k = 6 random integer points. The
builder picks d-λ+1 of them so that their affine hull meets the hull of
every k-set, and the checker confirms this by enumerating all k-sets.
"""
import json
import random
from itertools import combinations

from kneser_transversal import build_theorem1_transversal, is_complete_kneser_transversal
from kneser_transversal.geometry import random_general_position

rng = random.Random(7)
d, lam, k = 3, 1, 3
cfg = random_general_position(d - lam + 1 + k, d, rng)
for i, p in enumerate(cfg.points, 1):
    print(i, [str(x) for x in p])

cert = build_theorem1_transversal(cfg, k, lam)
print("certificate:", json.dumps(cert.to_json()))

# most other choices of T do not work; count them
good = [t for t in combinations(cfg.labels, d - lam + 1) if is_complete_kneser_transversal(cfg, t, k).verified]
print(f"{len(good)} of the possible T work here:", good)

bad = next(t for t in combinations(cfg.labels, d - lam + 1) if t not in good)
print("a failing T and its witness k-set:", is_complete_kneser_transversal(cfg, bad, k).to_json())
