"""Exact linear algebra over ``fractions.Fraction``.

Matrices are plain lists of rows. Nothing here touches floating point.
"""
from fractions import Fraction


def to_fraction_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row-echelon form. Returns ``(matrix, pivot_columns)``; input is not modified."""
    m = to_fraction_matrix(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, n_cols=None):
    """Basis of the right null space, one vector per free column in increasing column order.

    The vector for free column ``f`` has a 1 at ``f``, zeros at the other free
    columns and minus the RREF entries at the pivot columns.
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(n_cols)] for j in range(n_cols)]
    m, pivots = rref(rows)
    n_cols = len(m[0])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def det(rows):
    """Determinant of a square matrix by fraction-exact elimination."""
    m = to_fraction_matrix(rows)
    n = len(m)
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        acc *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * acc


def lifted(points):
    """Columns ``(p, 1)``: the affine dependences of ``points`` are the null space of this matrix."""
    d = len(points[0])
    rows = [[p[i] for p in points] for i in range(d)]
    rows.append([1] * len(points))
    return rows


def affinely_independent(points):
    if len(points) > len(points[0]) + 1:
        return False
    return rank(lifted(points)) == len(points)
