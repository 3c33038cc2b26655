"""Carriers of triangular solutions, maximal parabolic subalgebras, the induced
quasi-Frobenius structure, nilpotent orbit actions, and the Jordanian family."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import expand_in_rref, invert, rref
from .tensorops import MatrixN, SparseOp2, kron_pair, kron_sum2, wedge_to_op

ZERO = Fraction(0)


@dataclass
class LieSubalgebra:
    """Subspace of gl_n with a reduced basis; bracket_closed records whether it
    is actually a Lie subalgebra."""

    n: int
    basis: list
    bracket_closed: bool = True
    _rows: list = field(default_factory=list, repr=False)
    _pivots: list = field(default_factory=list, repr=False)

    @classmethod
    def from_matrices(cls, n, mats):
        rows, pivots = rref([m.to_vector() for m in mats if not m.is_zero()]) if mats else ([], [])
        basis = [MatrixN.from_vector(n, row) for row in rows]
        sub = cls(n=n, basis=basis, _rows=rows, _pivots=pivots)
        sub.bracket_closed = sub._check_closure()
        return sub

    @property
    def dimension(self):
        return len(self.basis)

    def contains(self, mat: MatrixN) -> bool:
        if not self.basis:
            return mat.is_zero()
        return expand_in_rref(self._rows, self._pivots, mat.to_vector()) is not None

    def coordinates(self, mat: MatrixN):
        """Coefficients of mat in the reduced basis, or None when outside the span."""
        if not self.basis:
            return [] if mat.is_zero() else None
        return expand_in_rref(self._rows, self._pivots, mat.to_vector())

    def same_span(self, other) -> bool:
        return self.n == other.n and self._rows == other._rows

    def _check_closure(self) -> bool:
        for i, a in enumerate(self.basis):
            for b in self.basis[i + 1:]:
                if not self.contains(a.bracket(b)):
                    return False
        return True


def carrier(r: SparseOp2) -> LieSubalgebra:
    """Span of the first-leg contractions of an antisymmetric operator.

    Slices of a traceless wedge element are traceless; this is asserted.  The
    result records whether the span closes under the bracket instead of
    raising, so callers can report failures.
    """
    if not r.is_antisymmetric():
        raise ValueError("carrier is only defined for antisymmetric operators")
    n = r.n
    slices = {}
    for (i, j), (k, l), v in r.entries():
        sl = slices.setdefault((i, k), {})
        sl[(j, l)] = sl.get((j, l), ZERO) + v
    mats = [MatrixN(n, entries) for entries in slices.values()]
    for m in mats:
        assert m.trace() == 0, "carrier slice has nonzero trace"
    return LieSubalgebra.from_matrices(n, mats)


def parabolic(m: int, n: int) -> LieSubalgebra:
    """Maximal parabolic subalgebra: off-diagonal e_{jl} with j <= m or l > m,
    together with the traceless diagonal."""
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    mats = []
    for j in range(1, n + 1):
        for l in range(1, n + 1):
            if j != l and (j <= m or l > m):
                mats.append(MatrixN.unit(n, j, l))
    for j in range(1, n):
        mats.append(MatrixN.unit(n, j, j) - MatrixN.unit(n, j + 1, j + 1))
    return LieSubalgebra.from_matrices(n, mats)


@dataclass
class FrobeniusData:
    """Matrix of the contraction isomorphism in the reduced dual basis, together
    with its inverse and the induced two-form."""

    subalgebra: LieSubalgebra
    r_check_matrix: list
    r_check_inverse: list = None
    form: list = None

    @property
    def invertible(self):
        return self.r_check_inverse is not None

    @property
    def skew(self):
        if self.form is None:
            return False
        k = len(self.form)
        return all(self.form[i][j] == -self.form[j][i] for i in range(k) for j in range(k))


def r_check(r: SparseOp2, f: LieSubalgebra) -> FrobeniusData:
    """Matrix of xi -> (xi (x) 1) r on the dual of the reduced carrier basis.

    Because the basis is row reduced, the dual basis extends to coordinate
    functionals at the pivot positions, and the contraction against a pivot
    functional is exactly the corresponding first-leg slice.
    """
    n = r.n
    k = f.dimension
    slices = {}
    for (i, j), (kk, l), v in r.entries():
        sl = slices.setdefault((i, kk), {})
        sl[(j, l)] = sl.get((j, l), ZERO) + v
    columns = []
    for pivot in f._pivots:
        a, b = pivot // n + 1, pivot % n + 1
        image = MatrixN(n, slices.get((a, b), {}))
        coords = f.coordinates(image)
        if coords is None:
            raise ValueError("contraction image leaves the carrier")
        columns.append(coords)
    matrix = [[columns[i][j] for i in range(k)] for j in range(k)]
    inverse = invert(matrix) if k else []
    if inverse is None:
        return FrobeniusData(subalgebra=f, r_check_matrix=matrix)
    form = [[inverse[j][i] for j in range(k)] for i in range(k)]
    return FrobeniusData(subalgebra=f, r_check_matrix=matrix,
                         r_check_inverse=inverse, form=form)


def structure_constants(f: LieSubalgebra):
    """Sparse expansion coefficients of all pairwise brackets of basis elements."""
    consts = {}
    for i, a in enumerate(f.basis):
        for j, b in enumerate(f.basis):
            if i == j:
                continue
            coords = f.coordinates(a.bracket(b))
            if coords is None:
                raise ValueError("subalgebra is not bracket closed")
            sparse = [(s, c) for s, c in enumerate(coords) if c != 0]
            if sparse:
                consts[(i, j)] = sparse
    return consts


def cocycle_check(fd: FrobeniusData) -> bool:
    """The two-form built from the inverse contraction satisfies the cocycle
    identity on every basis triple.

    Repeated indices and permutations follow formally from skewness, so the
    loop runs over strictly increasing triples after checking skewness.
    """
    if not fd.invertible or not fd.skew:
        return False
    f = fd.subalgebra
    form = fd.form
    consts = structure_constants(f)
    k = f.dimension

    def f_of_bracket(i, j, l):
        return sum((c * form[s][l] for s, c in consts.get((i, j), ())), ZERO)

    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                total = (f_of_bracket(i, j, l)
                         + f_of_bracket(l, i, j)
                         + f_of_bracket(j, l, i))
                if total != 0:
                    return False
    return True


def eval_functional(eta, mat: MatrixN):
    """Apply a functional given by elementary-dual coefficients {(a, b): c}."""
    return sum((c * mat.entries.get(pos, ZERO) for pos, c in eta.items()), ZERO)


def frobenius_functional_check(fd: FrobeniusData, eta) -> bool:
    """eta([X, Y]) must reproduce the inverse-contraction form F(X, Y) =
    <r_check^{-1} X, Y> on all basis pairs, and the induced two-form must be
    nondegenerate.  (The two orders of the pairing differ by the skew sign;
    this orientation is the one the computed map satisfies.)"""
    if not fd.invertible:
        return False
    f = fd.subalgebra
    k = f.dimension
    gram = [[ZERO] * k for _ in range(k)]
    for i, x in enumerate(f.basis):
        for j, y in enumerate(f.basis):
            gram[i][j] = eval_functional(eta, x.bracket(y))
            if gram[i][j] != fd.form[i][j]:
                return False
    return invert(gram) is not None


def cg_boundary_functional(n: int, u, t):
    """Frobenius functional of the two-parameter boundary family.

    This is the functional the inverse contraction actually induces (verified
    exactly; the well-known displayed form writes -t for -1/t at position
    (n, n-1), omits the t e_{n-1,n}* term, and carries an extra -2 e_{nn}*
    that does not annihilate the derived subalgebra).
    """
    u, t = Fraction(u), Fraction(t)
    eta = {(j, j + 2): 1 / u for j in range(1, n - 1)}
    eta[(n, n - 1)] = -1 / t
    eta[(n - 1, n)] = t
    eta[(n - 1, n - 1)] = Fraction(2)
    return eta


def cg_boundary_functional_displayed(n: int, u, t):
    """Literal transcription of the commonly displayed functional; kept for the
    regression test that documents its failure against the inverse contraction."""
    u, t = Fraction(u), Fraction(t)
    eta = {(j, j + 2): 1 / u for j in range(1, n - 1)}
    eta[(n, n - 1)] = -t
    eta[(n - 1, n - 1)] = Fraction(2)
    eta[(n, n)] = Fraction(-2)
    return eta


def dual_functional(f: LieSubalgebra, basis_list, index):
    """Elementary-dual coordinates of the functional dual to basis_list[index],
    where basis_list spans f; off-diagonal duals are coordinate functionals and
    the diagonal block is solved exactly."""
    from .linalg import solve_affine
    n = f.n
    rows = []
    rhs = []
    positions = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    for k, mat in enumerate(basis_list):
        rows.append([mat.entries.get(pos, ZERO) for pos in positions])
        rhs.append(Fraction(1) if k == index else ZERO)
    solved = solve_affine(rows, rhs)
    if solved is None:
        raise ValueError("dual functional system is inconsistent")
    particular, _ = solved
    return {pos: v for pos, v in zip(positions, particular) if v != 0}


def apply_r_check(r: SparseOp2, eta) -> MatrixN:
    """(eta (x) 1) r for a functional in elementary-dual coordinates."""
    n = r.n
    out = {}
    for (i, j), (k, l), v in r.entries():
        c = eta.get((i, k), ZERO)
        if c:
            key = (j, l)
            out[key] = out.get(key, ZERO) + c * v
    return MatrixN(n, out)


def nilpotent_exp_action(x: MatrixN, s, r: SparseOp2) -> SparseOp2:
    """Conjugate r by exp(sX) (x) exp(sX); X must be nilpotent."""
    if not x.is_nilpotent():
        raise ValueError("X must be nilpotent")
    g = x.exp_nilpotent(s)
    ginv = x.exp_nilpotent(-Fraction(s))
    big = kron_pair(g, g)
    big_inv = kron_pair(ginv, ginv)
    return big @ r @ big_inv


def jordanian_x(n: int) -> MatrixN:
    """(1/2) sum of (n - k) e_{k,k+1}."""
    return MatrixN(n, {(k, k + 1): Fraction(n - k, 2) for k in range(1, n)})


def jordanian(n: int) -> SparseOp2:
    """Leg-wise bracket of the weighted super-diagonal against the (1, n) solution."""
    from .bd import bd_r_matrix
    r = wedge_to_op(bd_r_matrix(1, n))
    d = kron_sum2(jordanian_x(n))
    return d @ r - r @ d
