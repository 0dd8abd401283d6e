"""Self-check suites run by ``kneser verify``.

Each check returns None on success or a JSON-serialisable counterexample.
"""
from __future__ import annotations

import random

from . import cyclic, geometry, parity
from .cyclic import GapComposition, compositions
from .parity import ParamTriple, alpha

SUITES = ("radon", "parity", "cyclic", "constructions")


def _nontrivial_pairs(d_max):
    return [(d, lam) for d in range(1, d_max + 1) for lam in range(1, d + 1) if alpha(d, lam) < 1]


def _random_split(rng):
    d = rng.randint(1, 5)
    cfg = geometry.random_general_position(d + 2, d, rng)
    s_size = rng.randint(1, d + 1)
    labels = list(cfg.labels)
    rng.shuffle(labels)
    return cfg, sorted(labels[:s_size]), sorted(labels[s_size:])


def check_radon(rng, trials=100):
    for _ in range(trials):
        d = rng.randint(1, 6)
        cfg = geometry.random_general_position(d + 2, d, rng)
        rp = geometry.radon_partition(cfg)
        c = rp.coefficients
        for axis in range(d):
            lhs = sum(c[i] * cfg.point(i)[axis] for i in rp.positive)
            rhs = sum(c[i] * cfg.point(i)[axis] for i in rp.negative)
            if lhs != rhs:
                return {"check": "radon identity", "points": [list(map(str, p)) for p in cfg.points]}
        if not geometry.hulls_intersect(cfg, rp.positive, rp.negative):
            return {"check": "radon hulls", "points": [list(map(str, p)) for p in cfg.points]}
    for _ in range(trials):
        cfg, s, t = _random_split(rng)
        if geometry.conv_aff_intersects(cfg, s, t, "radon") != geometry.conv_aff_intersects(cfg, s, t, "lp"):
            return {"check": "radon vs lp", "S": s, "T": t}
    return None


def check_parity(rng):
    for k in range(1, 9):
        for l in range(1, 9):
            if parity.d_formula(k, l) != parity.d_oracle(k, l, 2 * k + 2):
                return {"check": "D formula", "k": k, "l": l}
    for k in range(1, 11):
        for lam in range(1, 5):
            for j in range(lam + 1, 11):
                if parity.opti_solve(k, lam, j) != parity.opti_oracle(k, lam, j):
                    return {"check": "opti", "k": k, "lambda": lam, "j": j}
    for d, lam in _nontrivial_pairs(12):
        sets = parity.i_sets(d, lam)
        m = d - lam + 2
        half = -(-d // 2)
        if len(sets) != 2 * half - lam + 1:
            return {"check": "I count", "d": d, "lambda": lam}
        if any(sum(x in s for s in sets) != half for x in range(1, m + 1)):
            return {"check": "I coverage", "d": d, "lambda": lam}
        if any(parity.od(s) > lam - 1 for s in sets):
            return {"check": "I parity", "d": d, "lambda": lam}
    for _ in range(500):
        t = sorted(rng.sample(range(1, 21), rng.randint(1, 10)))
        s = sorted(rng.sample(t, rng.randint(1, len(t))))
        if parity.od(s) > parity.od(t):
            return {"check": "OD monotone", "S": s, "T": t}
    return None


def check_cyclic(rng, n_max=10, d_max=5, k_max=5):
    for d, lam in _nontrivial_pairs(d_max):
        m = d - lam + 2
        for k in range(lam + 1, k_max + 1):
            for n in range(d - lam + 1, n_max + 1):
                for g in compositions(n - (d - lam + 1), m):
                    comp = GapComposition(g, d, lam)
                    if cyclic.gap_transversal_test(comp, k) != cyclic.sign_transversal_test(comp, k):
                        return {"check": "gap vs sign", "d": d, "lambda": lam, "k": k, "gaps": list(g)}
            p = ParamTriple(k, d, lam)
            res = cyclic.zeta(p)
            if not res.z_lower <= res.value <= res.z_upper:
                return {"check": "sandwich", **res.to_json()}
    return None


def check_constructions(rng, trials=20):
    for k, d, lam in [(3, 3, 1), (3, 4, 2), (3, 5, 2), (4, 5, 2)]:
        for _ in range(trials):
            cfg = geometry.random_general_position(d - lam + 1 + k, d, rng)
            if not geometry.build_theorem1_transversal(cfg, k, lam).verified:
                return {"check": "lemma transversal", "k": k, "d": d, "lambda": lam}
    for d, k in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        for _ in range(trials):
            cfg = geometry.random_general_position(d + 2 * (k - 1), d, rng)
            if not geometry.balanced_hyperplane(cfg, k).verified:
                return {"check": "balanced hyperplane", "k": k, "d": d}
    for d, lam in _nontrivial_pairs(8):
        for k in range(lam + 1, 9):
            p = ParamTriple(k, d, lam)
            for j in range(lam + 1, d - lam + 3):
                comp = cyclic.construct_transversal(p, j)
                if not cyclic.gap_transversal_test(comp, k):
                    return {"check": "construction", "k": k, "d": d, "lambda": lam, "j": j}
                if comp.n <= 14 and not cyclic.sign_transversal_test(comp, k):
                    return {"check": "construction (sign)", "k": k, "d": d, "lambda": lam, "j": j}
    return None


_CHECKS = {
    "radon": check_radon,
    "parity": check_parity,
    "cyclic": check_cyclic,
    "constructions": check_constructions,
}


def run_suite(suite: str, seed: int = 0):
    """Run one suite (or ``"all"``); returns a list of (name, counterexample-or-None)."""
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        rng = random.Random(seed)
        out.append((name, _CHECKS[name](rng)))
    return out
