"""Classical Yang-Baxter machinery on exact sparse operators: leg embeddings,
the cyclic-difference invariant Z, double brackets, CYB_lambda, and the solver
that certifies a candidate and extracts its lambda."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import format_scalar
from .tensorops import SparseOp2, SparseOp3

ZERO = Fraction(0)

TRIANGULAR = "triangular"
QUASITRIANGULAR = "quasitriangular"
NOT_R_MATRIX = "not_r_matrix"


def embed(r: SparseOp2, legs: int) -> SparseOp3:
    """Act with r on the named pair of tensor legs (12, 13 or 23), identity elsewhere."""
    n = r.n
    cols3 = {}
    rng = range(1, n + 1)
    if legs == 12:
        for (k, l), col in r.cols.items():
            for c in rng:
                cols3[(k, l, c)] = {(i, j, c): v for (i, j), v in col.items()}
    elif legs == 23:
        for (k, l), col in r.cols.items():
            for a in rng:
                cols3[(a, k, l)] = {(a, i, j): v for (i, j), v in col.items()}
    elif legs == 13:
        for (k, l), col in r.cols.items():
            for b in rng:
                cols3[(k, b, l)] = {(i, b, j): v for (i, j), v in col.items()}
    else:
        raise ValueError("legs must be one of 12, 13, 23")
    return SparseOp3(n, cols3)


def z_op(n: int) -> SparseOp3:
    """u (x) v (x) w -> w (x) u (x) v - v (x) w (x) u."""
    cols = {}
    rng = range(1, n + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                col = {}
                col[(c, a, b)] = col.get((c, a, b), ZERO) + 1
                col[(b, c, a)] = col.get((b, c, a), ZERO) - 1
                col = {k: v for k, v in col.items() if v != 0}
                if col:
                    cols[(a, b, c)] = col
    return SparseOp3(n, cols)


def double_bracket(a: SparseOp2, b: SparseOp2) -> SparseOp3:
    """[a12, b13] + [a12, b23] + [a13, b23]."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    a12, a13 = embed(a, 12), embed(a, 13)
    b13, b23 = embed(b, 13), embed(b, 23)
    return a12.bracket(b13) + a12.bracket(b23) + a13.bracket(b23)


def cyb_lambda(r: SparseOp2, lam) -> SparseOp3:
    """[r12, r13] + [r12, r23] + [r13, r23] - lambda Z."""
    return double_bracket(r, r) - Fraction(lam) * z_op(r.n)


@dataclass
class CybReport:
    lambda_: object  # Fraction or None
    residual_nonzero_count: int
    classification: str

    def to_json_obj(self):
        return {
            "classification": self.classification,
            "lambda": None if self.lambda_ is None else format_scalar(self.lambda_),
            "residual_nonzero_count": self.residual_nonzero_count,
        }


def find_lambda(r: SparseOp2) -> CybReport:
    """Classify r: solve lambda from the first nonzero entry of Z against the
    double bracket, then verify proportionality globally."""
    bb = double_bracket(r, r)
    if bb.is_zero():
        return CybReport(Fraction(0), 0, TRIANGULAR)
    z = z_op(r.n)
    lam = None
    for inp in sorted(z.cols):
        col = z.cols[inp]
        out = min(k for k, v in col.items() if v != 0)
        lam = bb.cols.get(inp, {}).get(out, ZERO) / col[out]
        break
    if lam is None:
        return CybReport(None, bb.count_nonzero(), NOT_R_MATRIX)
    residual = bb - lam * z
    count = residual.count_nonzero()
    if count == 0 and lam != 0:
        return CybReport(lam, 0, QUASITRIANGULAR)
    return CybReport(None, count, NOT_R_MATRIX)
