"""Dense exact linear algebra over the rationals: row reduction, affine solves, inversion."""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(rows):
    """Reduced row echelon form of a list of rows (copied, exact).

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    piv_r = 0
    for col in range(ncols):
        src = None
        for r in range(piv_r, len(rows)):
            if rows[r][col] != 0:
                src = r
                break
        if src is None:
            continue
        rows[piv_r], rows[src] = rows[src], rows[piv_r]
        inv = ONE / rows[piv_r][col]
        rows[piv_r] = [v * inv for v in rows[piv_r]]
        for r in range(len(rows)):
            if r != piv_r and rows[r][col] != 0:
                f = rows[r][col]
                piv_row = rows[piv_r]
                rows[r] = [a - f * b for a, b in zip(rows[r], piv_row)]
        pivots.append(col)
        piv_r += 1
        if piv_r == len(rows):
            break
    return rows[:piv_r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def expand_in_rref(reduced, pivots, vec):
    """Coefficients of vec in the span of an RREF basis, or None if not in the span."""
    coeffs = [vec[p] for p in pivots]
    residual = list(vec)
    for c, row in zip(coeffs, reduced):
        if c != 0:
            residual = [a - c * b for a, b in zip(residual, row)]
    if any(v != 0 for v in residual):
        return None
    return coeffs


def solve_affine(a_rows, b_col):
    """Solve A x = b exactly.

    Returns (particular_solution, nullspace_basis) or None when inconsistent.
    """
    if not a_rows:
        return [], []
    ncols = len(a_rows[0])
    aug = [list(r) + [b] for r, b in zip(a_rows, b_col)]
    reduced, pivots = rref(aug)
    if ncols in pivots:
        return None
    particular = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        particular[p] = row[-1]
    free = [c for c in range(ncols) if c not in pivots]
    null_basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        null_basis.append(v)
    return particular, null_basis


def invert(a_rows):
    """Exact inverse of a square matrix, or None when singular."""
    n = len(a_rows)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(a_rows)]
    reduced, pivots = rref(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in reduced[:n]]

