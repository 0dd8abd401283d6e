"""Bound reports and the (k, d, λ) summary table."""
from __future__ import annotations

import math
from fractions import Fraction

from . import errors
from .cyclic import zeta, zeta_trivial
from .parity import ParamTriple, alpha, z_lower, z_upper

# Bounds stated in the literature that the computation tightens; reported, never silently replaced.
PUBLISHED_RANGES = {(3, 5, 2): (7, 8)}

MAX_TABLE_CELLS = 2000


def known_m_star(k: int, d: int, lam: int, zeta_value: int | None = None):
    """Exact m*(k, d, λ) when a proven result pins it down, as ``(value, citation)``; else None."""
    if k == lam:
        return d, "k=lambda: d affinely independent points"
    if k < lam:
        return None
    if lam == 1:
        return d + 2 * (k - 1), "lambda=1: halving hyperplane meets Z"
    a = alpha(d, lam)
    if a >= 1:
        return d - lam + k, "trivial range: m*=zeta=d-lambda+k"
    lower = d - lam + 1 + k
    if lower == z_upper(ParamTriple(k, d, lam)):
        return lower, "lemma lower bound meets Z"
    if zeta_value is not None and lower == zeta_value:
        return lower, "lemma lower bound meets searched zeta"
    return None


def discrepancy_note(k: int, d: int, lam: int, exact):
    rng = PUBLISHED_RANGES.get((k, d, lam))
    if rng is None or exact is None:
        return None
    lo, hi = rng
    if lo == hi == exact[0]:
        return None
    return (f"DISCREPANCY: published bounds {lo} <= m*({k},{d},{lam}) <= {hi}, "
            f"but computed z = Z = zeta = {exact[0]} together with the lemma lower bound "
            f"give m* = {exact[0]}; reported, not resolved")


def bound_report(k: int, d: int, lam: int) -> dict:
    if not (d >= lam >= 1 and k >= lam):
        raise errors.RangeViolation(f"need d >= λ >= 1 and k >= λ, got k={k}, d={d}, λ={lam}")
    a = alpha(d, lam)
    rep = {
        "k": k, "d": d, "lambda": lam, "alpha": a,
        "range": "trivial" if a >= 1 else "non-trivial",
        "m_lower_for_comparison": d - lam + k + math.ceil(k / lam) - 1,
        "m_upper_exclusive_for_comparison": d + 2 * (k - lam) + 1,
    }
    if k == lam:
        rep["m_star_k_equals_lambda"] = d
    if lam == 1 and k >= 2:
        rep["m_star_lambda_1"] = d + 2 * (k - 1)
    if k >= lam + 1:
        p = ParamTriple(k, d, lam)
        if a < 1:
            rep["z"] = z_lower(p)
            rep["Z"] = z_upper(p)
            rep["lemma_lower_bound"] = d - lam + 1 + k
            lim = 2 - a
            rep["exact_value_window"] = bool(Fraction(d, 2) <= k < 2 / (1 - a))
            rep["zeta_over_k_limit"] = lim
        else:
            rep["zeta"] = zeta_trivial(p)
    exact = known_m_star(k, d, lam)
    rep["m_star"] = exact[0] if exact else None
    rep["m_star_citation"] = exact[1] if exact else None
    note = discrepancy_note(k, d, lam, exact)
    rep["notes"] = [note] if note else []
    return rep


TABLE_COLUMNS = ["k", "d", "lambda", "alpha", "range", "z", "Z", "zeta", "m_star", "citation", "note"]


def table_rows(d_max: int, k_max: int, lam_max: int, cell_limit: int = MAX_TABLE_CELLS) -> list:
    cells = d_max * k_max * lam_max
    if cells > cell_limit:
        raise errors.GridTooLarge(f"{cells} cells exceed the limit {cell_limit}")
    rows = []
    for d in range(1, d_max + 1):
        for lam in range(1, min(d, lam_max) + 1):
            for k in range(lam, k_max + 1):
                a = alpha(d, lam)
                row = dict.fromkeys(TABLE_COLUMNS, "")
                row.update(k=k, d=d, alpha=str(a), range="trivial" if a >= 1 else "non-trivial")
                row["lambda"] = lam
                zv = None
                if k >= lam + 1:
                    p = ParamTriple(k, d, lam)
                    if a < 1:
                        row["z"], row["Z"] = z_lower(p), z_upper(p)
                        zv = zeta(p).value
                    else:
                        zv = zeta_trivial(p)
                    row["zeta"] = zv
                exact = known_m_star(k, d, lam, zv)
                if exact:
                    row["m_star"], row["citation"] = exact
                row["note"] = discrepancy_note(k, d, lam, exact) or ""
                rows.append(row)
    return rows
