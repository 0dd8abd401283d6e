"""Integer combinatorics of parity blocks, the I(d, λ, j) family and the z/Z bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import errors

UNBOUNDED = math.inf


@dataclass(frozen=True)
class ParamTriple:
    k: int
    d: int
    lam: int

    def __post_init__(self):
        if not (self.d >= self.lam >= 1 and self.k >= 1):
            raise errors.RangeViolation(f"need d >= λ >= 1 and k >= 1, got {self}")

    @property
    def nontrivial(self) -> bool:
        return alpha(self.d, self.lam) < 1

    @property
    def t_size(self) -> int:
        """d - λ + 1, the number of points spanning a complete transversal."""
        return self.d - self.lam + 1


@dataclass(frozen=True)
class OptiSolution:
    a: int
    r: int
    value: int


def _check_nonempty(s):
    s = list(s)
    if not s:
        raise errors.EmptySet("index set is empty")
    return s


def od(s) -> int:
    """Number of odd gaps between consecutive elements of the increasing sequence ``s``."""
    s = _check_nonempty(s)
    return sum((b - a) % 2 for a, b in zip(s, s[1:]))


def parity_blocks(s) -> list:
    s = _check_nonempty(s)
    blocks = [[s[0]]]
    for x in s[1:]:
        if (x - blocks[-1][-1]) % 2:
            blocks.append([x])
        else:
            blocks[-1].append(x)
    return blocks


def d_formula(k: int, l: int):
    """Largest n such that every k-subset of [n] has OD >= l; ``UNBOUNDED`` when l = 0."""
    if l == 0:
        return UNBOUNDED
    if k >= l:
        return 2 * k - l - 1
    return k - 1


def d_oracle(k: int, l: int, n_max: int) -> int:
    """Brute-force counterpart of :func:`d_formula`, capped at ``n_max``."""
    best = k - 1
    for n in range(k, n_max + 1):
        # OD is monotone under inclusion, so a k-set qualifies iff it has a qualifying subset
        if all(od(c) >= l for c in combinations(range(1, n + 1), k)):
            best = n
        else:
            break
    return best


def alpha(d: int, lam: int) -> Fraction:
    return Fraction(lam - 1, math.ceil(d / 2))


def beta(lam: int, j: int) -> int:
    return -(-(j + lam - 1) // 2)


def _base_set(d: int, lam: int) -> list:
    return list(range(1, lam)) + list(range(lam, d - lam + 2, 2))


def i_sets(d: int, lam: int) -> list:
    """The 2⌈d/2⌉-λ+1 subsets I(d, λ, j) of [d-λ+2]."""
    if d < lam or lam < 1:
        raise errors.BadRange(f"need d >= λ >= 1, got d={d}, λ={lam}")
    if alpha(d, lam) >= 1:
        raise errors.BadRange(f"I(d, λ, j) is only defined for α(d, λ) < 1, got d={d}, λ={lam}")
    if d % 2:
        m = d - lam + 2
        base = _base_set(d, lam)
        return [sorted((x - 1 + shift) % m + 1 for x in base) for shift in range(m)]
    top = d - lam + 2
    return [s + [top] if 1 in s else s for s in i_sets(d - 1, lam)]


def _j_range(p: ParamTriple):
    return [j for j in range(p.lam + 1, p.d - p.lam + 3) if (j + p.lam) % 2]


def _require_nontrivial(p: ParamTriple):
    if not p.nontrivial:
        raise errors.RangeViolation(f"α(d, λ) = {alpha(p.d, p.lam)} >= 1 (trivial range)")
    if p.k < p.lam + 1:
        raise errors.RangeViolation(f"k = {p.k} must be at least λ+1 = {p.lam + 1}")


def z_lower(p: ParamTriple) -> int:
    _require_nontrivial(p)
    js = _j_range(p)
    if not js:
        raise errors.RangeViolation(f"empty j-range for {p}")
    return p.t_size + max(opti_solve(p.k, p.lam, j).value for j in js)


def z_upper(p: ParamTriple) -> int:
    _require_nontrivial(p)
    return p.t_size + math.floor((2 - alpha(p.d, p.lam)) * (p.k - 1))


def opti_solve(k: int, lam: int, j: int) -> OptiSolution:
    """Closed-form maximiser of a·j + r under the even-distribution constraints."""
    b = beta(lam, j)
    a, r = divmod(k - 1, b)
    return OptiSolution(a, r, a * j + r)


def opti_feasible(k: int, lam: int, j: int, a: int, r: int) -> bool:
    b = beta(lam, j)
    if a < 0 or not 0 <= r <= j - 1:
        return False
    if r >= b:
        return b * (a + 1) <= k - 1
    return (a + 1) * r + (b - r) * a <= k - 1


def opti_oracle(k: int, lam: int, j: int) -> OptiSolution:
    best = None
    for a in range(k + 1):
        for r in range(j):
            if opti_feasible(k, lam, j, a, r) and (best is None or a * j + r > best.value):
                best = OptiSolution(a, r, a * j + r)
    return best
