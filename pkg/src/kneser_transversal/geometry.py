"""Exact point-configuration geometry: Radon partitions, hull/flat intersection,
and complete Kneser transversal certificates.

Point labels are 1-based everywhere in the public API.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil

from . import errors
from .linalg import affinely_independent, det, lifted, nullspace
from .lp import feasible_point


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point coordinates are not accepted; pass int, Fraction or 'p/q'")
    return Fraction(x)


@dataclass(frozen=True)
class PointConfig:
    """A labelled finite point set in R^dim with exact coordinates."""

    dim: int
    points: tuple
    allow_duplicates: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise errors.DimensionMismatch(f"dimension must be positive, got {self.dim}")
        pts = tuple(tuple(as_fraction(c) for c in p) for p in self.points)
        for i, p in enumerate(pts, 1):
            if len(p) != self.dim:
                raise errors.DimensionMismatch(
                    f"point {i} has {len(p)} coordinates, expected {self.dim}")
        if not self.allow_duplicates and len(set(pts)) != len(pts):
            raise errors.DuplicatePoints("duplicate points are rejected unless allow_duplicates=True")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points, allow_duplicates=False):
        points = list(points)
        if not points:
            raise errors.EmptySet("a configuration needs at least one point")
        return cls(len(points[0]), tuple(points), allow_duplicates)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def point(self, label: int):
        return self.points[label - 1]

    def subset(self, labels):
        return [self.points[i - 1] for i in labels]


@dataclass(frozen=True)
class SignedPartition:
    positive: tuple
    negative: tuple
    coefficients: dict = field(compare=False)

    @property
    def blocks(self) -> frozenset:
        """The unordered split ``{A, B}``, for comparisons that ignore orientation."""
        return frozenset((frozenset(self.positive), frozenset(self.negative)))


@dataclass(frozen=True)
class TransversalCertificate:
    t_indices: tuple
    k: int
    verified: bool
    failing_kset: tuple | None = None

    def to_json(self) -> dict:
        return {
            "t_indices": list(self.t_indices),
            "k": self.k,
            "verified": self.verified,
            "failing_kset": None if self.failing_kset is None else list(self.failing_kset),
        }


def _check_labels(config, labels, name):
    labels = tuple(sorted(set(labels)))
    if not labels:
        raise errors.EmptySet(f"{name} is empty")
    if labels[0] < 1 or labels[-1] > config.n:
        raise errors.DimensionMismatch(f"{name} has labels outside 1..{config.n}")
    return labels


def _dependence(points):
    """Canonical affine dependence: first RREF null-space vector (or None if there is none)."""
    basis = nullspace(lifted(points))
    return basis[0] if basis else None


def _unique_dependence(points):
    """The affine dependence of d+2 points when they are in general position, else None.

    General position of d+2 points is equivalent to a one-dimensional
    dependence space whose generator has full support.
    """
    basis = nullspace(lifted(points))
    if len(basis) != 1 or any(c == 0 for c in basis[0]):
        return None
    return basis[0]


def radon_partition(config: PointConfig) -> SignedPartition:
    d, n = config.dim, config.n
    if n != d + 2:
        raise errors.DimensionMismatch(f"radon_partition needs d+2 = {d + 2} points, got {n}")
    c = _dependence(config.points)
    pos = tuple(i + 1 for i, x in enumerate(c) if x > 0)
    neg = tuple(i + 1 for i, x in enumerate(c) if x < 0)
    if not pos or not neg:
        raise errors.DegenerateInput("affine dependence is one-signed (internal error)")
    scale = sum(c[i - 1] for i in pos)
    coeffs = {i: abs(c[i - 1]) / scale for i in pos + neg}
    return SignedPartition(pos, neg, coeffs)


def is_general_position(config: PointConfig) -> bool:
    d, pts = config.dim, config.points
    if config.n <= d + 1:
        return affinely_independent(list(pts))
    for sub in combinations(pts, d + 1):
        if det(lifted(list(sub))) == 0:
            return False
    return True


def _lp_conv_aff(s_pts, t_pts) -> bool:
    d = len(s_pts[0])
    ns, nt = len(s_pts), len(t_pts)
    rows = []
    for i in range(d):
        rows.append([p[i] for p in s_pts] + [-q[i] for q in t_pts])
    rows.append([1] * ns + [0] * nt)
    rows.append([0] * ns + [1] * nt)
    rhs = [0] * d + [1, 1]
    return feasible_point(rows, rhs, free=range(ns, ns + nt)) is not None


def hulls_intersect(config: PointConfig, a, b) -> bool:
    """Whether conv(a) and conv(b) meet, decided by exact LP."""
    a_pts, b_pts = config.subset(a), config.subset(b)
    d = config.dim
    rows = [[p[i] for p in a_pts] + [-q[i] for q in b_pts] for i in range(d)]
    rows.append([1] * len(a_pts) + [0] * len(b_pts))
    rows.append([0] * len(a_pts) + [1] * len(b_pts))
    return feasible_point(rows, [0] * d + [1, 1]) is not None


class _ConvAffTester:
    """Decides conv(S) ∩ aff(T) ≠ ∅ for a fixed T, caching the reduced subproblems."""

    def __init__(self, config, t):
        self.config = config
        self.t = tuple(t)
        self.t_pts = config.subset(self.t)
        self.lam = config.dim - (len(self.t) - 1)
        self.t_independent = self.lam >= 1 and affinely_independent(self.t_pts)
        self._cache = {}

    def radon(self, s):
        """Monochromatic-S criterion; None when S ∪ T is not in general position."""
        labels = tuple(s) + self.t
        c = _unique_dependence(self.config.subset(labels))
        if c is None:
            return None
        signs = {x > 0 for x in c[: len(s)]}
        return len(signs) == 1

    def lp(self, s):
        return _lp_conv_aff(self.config.subset(s), self.t_pts)

    def reduction(self, s, method="auto"):
        return any(self.test(sub, method) for sub in combinations(s, self.lam + 1))

    def test(self, s, method="auto"):
        s = tuple(s)
        key = (s, method)
        if key in self._cache:
            return self._cache[key]
        if method == "lp":
            out = self.lp(s)
        elif method == "radon":
            out = self.radon(s)
            if out is None:
                raise errors.DegenerateInput("S ∪ T is not d+2 points in general position")
        elif method == "reduction":
            out = self.reduction(s, "auto")
        else:
            out = None
            n_all = len(s) + len(self.t)
            if self.t_independent and len(s) > self.lam + 1:
                out = self.reduction(s, "auto")
            elif n_all == self.config.dim + 2:
                out = self.radon(s)
            if out is None:
                out = self.lp(s)
        self._cache[key] = out
        return out


def conv_aff_intersects(config: PointConfig, s, t, method: str = "auto") -> bool:
    """Whether conv(S) meets aff(T).

    ``method`` selects the decision path: ``"radon"`` (d+2 points in general
    position, monochromatic-S criterion), ``"reduction"`` (test every
    (λ+1)-subset of S), ``"lp"`` (exact feasibility), or ``"auto"``.
    """
    s = _check_labels(config, s, "S")
    t = _check_labels(config, t, "T")
    if set(s) & set(t):
        raise errors.OverlappingSets(f"S and T share labels {sorted(set(s) & set(t))}")
    tester = _ConvAffTester(config, t)
    if method == "reduction" and not (tester.t_independent and len(s) >= tester.lam + 1):
        raise errors.DegenerateInput("reduction needs affinely independent T and |S| >= λ+1")
    return tester.test(s, method)


def is_complete_kneser_transversal(config: PointConfig, t_indices, k: int) -> TransversalCertificate:
    t = _check_labels(config, t_indices, "T")
    d, n = config.dim, config.n
    lam = d - len(t) + 1
    if not 1 <= lam <= d:
        raise errors.BadTransversalSize(f"|T| = {len(t)} gives λ = {lam}, outside 1..{d}")
    if k < 1:
        raise errors.KTooLarge(f"k must be positive, got {k}")
    if k > n:
        raise errors.KTooLarge(f"k = {k} exceeds n = {n}")
    rest = [i for i in config.labels if i not in set(t)]
    tester = _ConvAffTester(config, t)
    # k-sets meeting T are trivially cut; combinations() yields the rest in lexicographic order
    for kset in combinations(rest, k):
        if not tester.test(kset):
            return TransversalCertificate(t, k, False, kset)
    return TransversalCertificate(t, k, True)


def lemma_partition(config: PointConfig, t: int):
    """Split d+2 points into (S, T) with |T| = t and conv(S) ∩ aff(T) ≠ ∅."""
    d, n = config.dim, config.n
    if n != d + 2:
        raise errors.DimensionMismatch(f"lemma_partition needs d+2 = {d + 2} points, got {n}")
    if not (d + 2) // 2 <= t <= d + 1:
        raise errors.BadT(f"t = {t} outside {(d + 2) // 2}..{d + 1}")
    rp = radon_partition(config)
    a, b = rp.positive, rp.negative
    if len(a) < len(b):
        a, b = b, a
    zero = [i for i in config.labels if i not in rp.coefficients]
    # zero-weight points pad T first so S keeps a positive-weight part of A
    pad = (zero + list(a))[: t - len(b)]
    tt = tuple(sorted(set(b) | set(pad)))
    ss = tuple(i for i in config.labels if i not in tt)
    if not conv_aff_intersects(config, ss, tt):
        raise errors.DegenerateInput("lemma partition failed its own verification")
    return ss, tt


def alpha_lt_one(d: int, lam: int) -> bool:
    return lam - 1 < ceil(d / 2)


def build_theorem1_transversal(config: PointConfig, k: int, lam: int) -> TransversalCertificate:
    """Complete Kneser transversal for n = (d-λ+1)+k points, spanned by a lemma partition."""
    d, n = config.dim, config.n
    if not 1 <= lam <= d or not alpha_lt_one(d, lam):
        raise errors.RangeViolation(f"(d, λ) = ({d}, {lam}) is not in the non-trivial range")
    if k < lam + 1:
        raise errors.RangeViolation(f"k = {k} must be at least λ+1 = {lam + 1}")
    if n != d - lam + 1 + k:
        raise errors.RangeViolation(f"n = {n} must equal (d-λ+1)+k = {d - lam + 1 + k}")
    sub = PointConfig(d, config.points[: d + 2], config.allow_duplicates)
    _, t = lemma_partition(sub, d - lam + 1)
    return is_complete_kneser_transversal(config, t, k)


def _hyperplane(pts):
    """Coefficients (a, b) of the unique hyperplane a·x = b through d affinely independent points."""
    rows = [list(p) + [-1] for p in pts]
    basis = nullspace(rows)
    if len(basis) != 1:
        return None
    v = basis[0]
    return v[:-1], v[-1]


def balanced_hyperplane(config: PointConfig, k: int) -> TransversalCertificate:
    """Hyperplane through d points with at most k-1 points strictly on each side."""
    d, n = config.dim, config.n
    if n != d + 2 * (k - 1):
        raise errors.RangeViolation(f"n = {n} must equal d+2(k-1) = {d + 2 * (k - 1)}")
    for t in combinations(config.labels, d):
        h = _hyperplane(config.subset(t))
        if h is None:
            continue
        a, b = h
        above = below = 0
        for p in config.points:
            s = sum(x * y for x, y in zip(a, p)) - b
            if s > 0:
                above += 1
            elif s < 0:
                below += 1
        if above <= k - 1 and below <= k - 1:
            return is_complete_kneser_transversal(config, t, k)
    raise errors.NotFound("no balanced hyperplane; the input violates the preconditions")


def moment_curve(params, d: int) -> PointConfig:
    params = [as_fraction(t) for t in params]
    if any(b <= a for a, b in zip(params, params[1:])):
        raise errors.NonIncreasingParams("moment-curve parameters must be strictly increasing")
    return PointConfig(d, tuple(tuple(t ** e for e in range(1, d + 1)) for t in params))


def random_general_position(n: int, d: int, rng: random.Random, bound: int = 1000) -> PointConfig:
    """Integer points uniform in [-bound, bound]^d, resampled until in general position."""
    while True:
        pts = tuple(tuple(rng.randint(-bound, bound) for _ in range(d)) for _ in range(n))
        if len(set(pts)) < n:
            continue
        cfg = PointConfig(d, pts)
        if is_general_position(cfg):
            return cfg
