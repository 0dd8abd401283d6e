"""Cyclic polytopes through the alternating oriented matroid.

A candidate transversal of the cyclic polytope on vertices 1..n is encoded by
its gap composition: the run lengths ``|A_1|, ..., |A_{d-λ+2}|`` in

    A_1 w_1 A_2 w_2 ... A_{d-λ+1} w_{d-λ+1} A_{d-λ+2}

where the ``w_i`` are the transversal vertices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations

from . import errors
from .geometry import is_complete_kneser_transversal, moment_curve
from .parity import ParamTriple, alpha, od, opti_solve, z_lower, z_upper

METHODS = ("gap-optimizer", "sign-oracle", "both-agree")
DEFAULT_ORACLE_CAP = 24


@dataclass(frozen=True)
class AlternatingCircuit:
    support: tuple
    signs: tuple

    @property
    def positive(self) -> tuple:
        return tuple(i for i, s in zip(self.support, self.signs) if s > 0)

    @property
    def negative(self) -> tuple:
        return tuple(i for i, s in zip(self.support, self.signs) if s < 0)


@dataclass(frozen=True)
class GapComposition:
    gaps: tuple
    d: int
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "gaps", tuple(self.gaps))
        if len(self.gaps) != self.d - self.lam + 2:
            raise errors.RangeViolation(
                f"composition needs d-λ+2 = {self.d - self.lam + 2} gaps, got {len(self.gaps)}")
        if any(g < 0 for g in self.gaps):
            raise errors.RangeViolation(f"negative gap in {self.gaps}")

    @property
    def n(self) -> int:
        return self.d - self.lam + 1 + sum(self.gaps)

    @property
    def t_positions(self) -> tuple:
        """1-based vertex labels of w_1, ..., w_{d-λ+1}."""
        out, pos = [], 0
        for g in self.gaps[:-1]:
            pos += g + 1
            out.append(pos)
        return tuple(out)


@dataclass
class ZetaResult:
    k: int
    d: int
    lam: int
    value: int
    witness: GapComposition
    method: str
    z_lower: int
    z_upper: int
    transcript: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k, "d": self.d, "lambda": self.lam, "zeta": self.value,
            "witness_gaps": list(self.witness.gaps), "method": self.method,
            "z_lower": self.z_lower, "z_upper": self.z_upper,
            "transcript": [{"n": n, "passes": ok} for n, ok in self.transcript],
        }


def am_circuit(support, d: int) -> AlternatingCircuit:
    support = tuple(support)
    if len(support) != d + 2:
        raise errors.BadSupportSize(f"circuit support must have d+2 = {d + 2} elements")
    if any(b <= a for a, b in zip(support, support[1:])):
        raise errors.BadSupportSize("circuit support must be strictly increasing")
    return AlternatingCircuit(support, tuple(1 if i % 2 == 0 else -1 for i in range(d + 2)))


class GapProgram:
    """The integer program behind the gap criterion for fixed (k, d, λ).

    Every index set S ⊆ [d-λ+2] with OD(S) <= λ-1 contributes the constraint
    sum(gaps[S]) <= k-1; only maximal such S are kept.
    """

    def __init__(self, k: int, d: int, lam: int):
        if lam < 1:
            raise errors.RangeViolation("λ must be at least 1")
        self.k, self.d, self.lam = k, d, lam
        self.m = d - lam + 2

    @cached_property
    def constraints(self) -> list:
        ok = []
        for mask in range(1, 1 << self.m):
            s = [i + 1 for i in range(self.m) if mask >> i & 1]
            if od(s) <= self.lam - 1:
                ok.append(mask)
        maximal = [a for a in ok if not any(b != a and a & b == a for b in ok)]
        return [tuple(i for i in range(self.m) if mask >> i & 1) for mask in maximal]

    def feasible(self, gaps) -> bool:
        return all(sum(gaps[i] for i in s) <= self.k - 1 for s in self.constraints)

    def _dfs(self, total):
        """Yield feasible compositions with the given sum, lexicographically descending."""
        m, cap_k = self.m, self.k - 1
        member = [[c for c, s in enumerate(self.constraints) if i in s] for i in range(m)]
        slack = [cap_k] * len(self.constraints)
        gaps = [0] * m

        def rec(i, left):
            caps = [min(slack[c] for c in member[j]) for j in range(i, m)]
            if sum(caps) < left:
                return
            if i == m - 1:
                gaps[i] = left
                yield tuple(gaps)
                return
            for v in range(min(caps[0], left), -1, -1):
                gaps[i] = v
                for c in member[i]:
                    slack[c] -= v
                yield from rec(i + 1, left - v)
                for c in member[i]:
                    slack[c] += v
            gaps[i] = 0

        yield from rec(0, total)

    def find(self, total: int):
        """Lexicographically largest feasible composition of ``total``, or None."""
        return next(self._dfs(total), None)

    def maximize(self):
        """Branch-and-bound maximum of sum(gaps); returns (best_sum, lexicographically largest witness)."""
        m, cap_k = self.m, self.k - 1
        member = [[c for c, s in enumerate(self.constraints) if i in s] for i in range(m)]
        slack = [cap_k] * len(self.constraints)
        gaps = [0] * m
        best = [-1, None]

        def rec(i, cur):
            if i == m:
                if cur > best[0]:
                    best[0], best[1] = cur, tuple(gaps)
                return
            caps = [min(slack[c] for c in member[j]) for j in range(i, m)]
            if cur + sum(caps) <= best[0]:
                return
            for v in range(caps[0], -1, -1):
                gaps[i] = v
                for c in member[i]:
                    slack[c] -= v
                rec(i + 1, cur + v)
                for c in member[i]:
                    slack[c] += v
            gaps[i] = 0

        rec(0, 0)
        return best[0], best[1]


def compositions(total: int, parts: int):
    """All compositions of ``total`` into ``parts`` non-negative parts, lexicographically descending."""
    if parts == 1:
        yield (total,)
        return
    for v in range(total, -1, -1):
        for rest in compositions(total - v, parts - 1):
            yield (v,) + rest


def gap_transversal_test(comp: GapComposition, k: int) -> bool:
    return GapProgram(k, comp.d, comp.lam).feasible(comp.gaps)


def sign_transversal_test(comp: GapComposition, k: int, oracle_cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Direct test on alternating circuits: every k-set off T must contain λ+1 points
    that are monochromatic in the circuit on T ∪ K'."""
    n, d, lam = comp.n, comp.d, comp.lam
    if n > oracle_cap:
        raise errors.OracleCapExceeded(f"n = {n} exceeds the oracle cap {oracle_cap}")
    t = comp.t_positions
    rest = [v for v in range(1, n + 1) if v not in set(t)]
    good = {}

    def mono(kp):
        if kp not in good:
            circ = am_circuit(sorted(t + kp), d)
            signs = {s for i, s in zip(circ.support, circ.signs) if i in kp}
            good[kp] = len(signs) == 1
        return good[kp]

    return all(any(mono(kp) for kp in combinations(kset, lam + 1))
               for kset in combinations(rest, k))


def geometric_transversal_test(comp: GapComposition, k: int, params=None) -> bool:
    """Exact-geometry check on γ(t_1..t_n) (default t_i = i) with T at the composition's positions."""
    params = list(range(1, comp.n + 1)) if params is None else params
    cfg = moment_curve(params, comp.d)
    if k > cfg.n:
        return True
    return is_complete_kneser_transversal(cfg, comp.t_positions, k).verified


def _check_params(p: ParamTriple):
    if p.k < p.lam + 1:
        raise errors.RangeViolation(f"k = {p.k} must be at least λ+1 = {p.lam + 1}")


def _scan(p: ParamTriple, start: int, stop: int, finder):
    """Linear scan n = start.. while some composition passes; returns (value, witness, transcript)."""
    t_size = p.d - p.lam + 1
    transcript, value, witness = [], None, None
    for n in range(start, stop + 1):
        w = finder(n - t_size)
        transcript.append((n, w is not None))
        if w is None:
            break
        value, witness = n, w
    return value, witness, transcript


def _oracle_finder(p: ParamTriple, oracle_cap: int):
    m = p.d - p.lam + 2

    def find(total):
        for g in compositions(total, m):
            if sign_transversal_test(GapComposition(g, p.d, p.lam), p.k, oracle_cap):
                return g
        return None

    return find


def zeta(p: ParamTriple, method: str = "gap-optimizer", oracle_cap: int = DEFAULT_ORACLE_CAP) -> ZetaResult:
    """ζ(k, d, λ) in the non-trivial range, scanning n from z upward and confirming failure above."""
    if method not in METHODS:
        raise errors.RangeViolation(f"unknown method {method!r}")
    lo, hi = z_lower(p), z_upper(p)  # raise RangeViolation outside the non-trivial range
    _check_params(p)

    def run(finder):
        value, witness, transcript = _scan(p, lo, hi + 1, finder)
        if value is None or value < lo or value > hi:
            raise errors.BoundViolation(f"search gave {value}, outside [z, Z] = [{lo}, {hi}]")
        return value, witness, transcript

    results = {}
    if method in ("gap-optimizer", "both-agree"):
        results["gap"] = run(GapProgram(p.k, p.d, p.lam).find)
    if method in ("sign-oracle", "both-agree"):
        if hi + 1 > oracle_cap:
            raise errors.OracleCapExceeded(f"search needs n up to {hi + 1} > oracle cap {oracle_cap}")
        results["sign"] = run(_oracle_finder(p, oracle_cap))
    if method == "both-agree" and results["gap"][:2] != results["sign"][:2]:
        raise errors.BoundViolation(f"gap search {results['gap'][:2]} and sign oracle "
                                    f"{results['sign'][:2]} disagree")
    value, witness, transcript = next(iter(results.values()))
    return ZetaResult(p.k, p.d, p.lam, value, GapComposition(witness, p.d, p.lam),
                      method, lo, hi, transcript)


def search_max_vertices(p: ParamTriple):
    """Largest n admitting a passing composition, in either range, with the failing n+1 confirmed.

    Returns ``(value, witness_gaps, transcript)``.
    """
    _check_params(p)
    prog = GapProgram(p.k, p.d, p.lam)
    best, _ = prog.maximize()
    t_size = p.d - p.lam + 1
    return _scan(p, t_size + best, t_size + best + 1, prog.find)


def zeta_trivial(p: ParamTriple, verify: bool = False) -> int:
    if p.nontrivial:
        raise errors.RangeViolation(f"α(d, λ) = {alpha(p.d, p.lam)} < 1; use zeta()")
    _check_params(p)
    value = p.d - p.lam + p.k
    if verify:
        found, _, transcript = search_max_vertices(p)
        if found != value or transcript[-1] != (value + 1, False):
            raise errors.BoundViolation(f"gap search gives {found}, expected {value}")
    return value


def construct_transversal(p: ParamTriple, j: int) -> GapComposition:
    """Even distribution of opti_solve's a·j + r points over the first j gaps."""
    if not p.nontrivial:
        raise errors.RangeViolation(f"α(d, λ) = {alpha(p.d, p.lam)} >= 1 (trivial range)")
    m = p.d - p.lam + 2
    if not p.lam + 1 <= j <= m:
        raise errors.BadJ(f"j = {j} outside {p.lam + 1}..{m}")
    sol = opti_solve(p.k, p.lam, j)
    gaps = [sol.a + 1] * sol.r + [sol.a] * (j - sol.r) + [0] * (m - j)
    return GapComposition(tuple(gaps), p.d, p.lam)


def best_construction(p: ParamTriple) -> GapComposition:
    """The construction attaining z (first maximising odd-(j+λ) value of j)."""
    js = [j for j in range(p.lam + 1, p.d - p.lam + 3) if (j + p.lam) % 2]
    j = max(js, key=lambda j: (opti_solve(p.k, p.lam, j).value, -j))
    return construct_transversal(p, j)


def asymptotic_trend(d: int, lam: int, k_list, method: str = "gap-optimizer") -> list:
    rows = []
    limit = 2 - alpha(d, lam)
    for k in k_list:
        res = zeta(ParamTriple(k, d, lam), method)
        rows.append({
            "k": k, "zeta": res.value, "zeta_over_k": Fraction(res.value, k),
            "limit": limit, "z_over_k": Fraction(res.z_lower, k), "Z_over_k": Fraction(res.z_upper, k),
        })
    return rows
