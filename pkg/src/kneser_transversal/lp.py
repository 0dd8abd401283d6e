"""Exact rational feasibility via phase-1 simplex with Bland's rule.

Only feasibility is needed by the geometry layer, so there is no phase 2.
"""
from fractions import Fraction


def _pivot(tab, obj, basis, row, col):
    p = tab[row][col]
    tab[row] = [x / p for x in tab[row]]
    for i, r in enumerate(tab):
        if i != row and r[col] != 0:
            f = r[col]
            tab[i] = [a - f * b for a, b in zip(r, tab[row])]
    if obj[col] != 0:
        f = obj[col]
        obj[:] = [a - f * b for a, b in zip(obj, tab[row])]
    basis[row] = col


def phase_one(a_eq, b_eq):
    """Find ``x >= 0`` with ``a_eq @ x == b_eq`` or return None.

    Artificial variables start in the basis; the sum of artificials is
    minimised using Bland's smallest-index rule for both the entering and the
    leaving variable, which rules out cycling.
    """
    m = len(a_eq)
    n = len(a_eq[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in a_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        art = [Fraction(int(j == i)) for j in range(m)]
        tab.append(row + art + [rhs])
    basis = [n + i for i in range(m)]
    # reduced-cost row for min sum(artificials), last entry is -objective
    obj = [Fraction(0)] * (n + m + 1)
    for r in tab:
        for j in range(n):
            obj[j] -= r[j]
        obj[-1] -= r[-1]

    while True:
        col = next((j for j in range(n + m) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i, r in enumerate(tab):
            if r[col] > 0:
                ratio = r[-1] / r[col]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # cannot happen: phase-1 objective is bounded below by 0
            raise ArithmeticError("unbounded phase-1 problem")
        _pivot(tab, obj, basis, best[1], col)

    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tab[i][-1]
    return x


def feasible_point(a_eq, b_eq, free=()):
    """Like :func:`phase_one` but the variables listed in ``free`` are sign-unrestricted."""
    free = set(free)
    n = len(a_eq[0])
    cols = []  # (original index, sign)
    for j in range(n):
        cols.append((j, 1))
        if j in free:
            cols.append((j, -1))
    split = [[row[j] * s for j, s in cols] for row in a_eq]
    y = phase_one(split, b_eq)
    if y is None:
        return None
    x = [Fraction(0)] * n
    for (j, s), v in zip(cols, y):
        x[j] += s * v
    return x
