"""Root-system data for sl_n: BD-triples, the induced partial order on positive
roots, and the alpha/beta/gamma pieces of the quasitriangular construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .tensorops import WedgeElement

ZERO = Fraction(0)


@dataclass(frozen=True, order=True)
class PosRoot:
    """The positive root e_i - e_j (i < j), with root vector e_{ij}."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ValueError("not a positive root: (%d, %d)" % (self.i, self.j))

    def simples(self):
        """Indices of the simple roots in the decomposition e_i - e_j = a_i + ... + a_{j-1}."""
        return range(self.i, self.j)


def cartan_pairing(i: int, j: int) -> int:
    """<a_i, a_j> for the A-series Cartan matrix (trace-form normalization)."""
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


class BDTriple:
    """Subsets S0, S1 of simple-root indices of sl_n with a bijection zeta: S0 -> S1.

    zeta must preserve the Cartan pairing and satisfy the nilpotency condition
    (every index escapes S0 under iteration).  When the triple comes from
    cg_triple, cg_m records the shift so root images can be computed in O(1).
    """

    __slots__ = ("n", "s0", "s1", "zeta", "cg_m", "_orbits")

    def __init__(self, n, s0, s1, zeta, cg_m=None):
        self.n = n
        self.s0 = frozenset(s0)
        self.s1 = frozenset(s1)
        self.zeta = dict(zeta)
        self.cg_m = cg_m
        self._orbits = {}
        self._validate()

    def _validate(self):
        simple = set(range(1, self.n))
        if not (self.s0 <= simple and self.s1 <= simple):
            raise ValueError("S0/S1 must consist of simple-root indices 1..n-1")
        if set(self.zeta) != self.s0 or set(self.zeta.values()) != self.s1:
            raise ValueError("zeta is not a bijection S0 -> S1")
        if len(set(self.zeta.values())) != len(self.zeta):
            raise ValueError("zeta is not injective")
        for a in self.s0:
            for b in self.s0:
                if cartan_pairing(self.zeta[a], self.zeta[b]) != cartan_pairing(a, b):
                    raise ValueError("zeta violates the orthogonality condition")
        for a in self.s0:
            seen = set()
            cur = a
            while cur in self.s0:
                if cur in seen:
                    raise ValueError("zeta violates the nilpotency condition")
                seen.add(cur)
                cur = self.zeta[cur]

    def __repr__(self):
        return "BDTriple(n=%d, s0=%r, s1=%r)" % (self.n, sorted(self.s0), sorted(self.s1))


def cg_triple(m: int, n: int) -> BDTriple:
    """The maximal triple for coprime m < n: drop a_{n-m} from S0, a_m from S1,
    and shift indices by m modulo n."""
    if not 1 <= m < n:
        raise ValueError("need 1 <= m < n")
    if gcd(m, n) != 1:
        raise ValueError("m and n must be coprime")
    s0 = set(range(1, n)) - {n - m}
    s1 = set(range(1, n)) - {m}
    zeta = {s: (s + m) % n for s in s0}
    return BDTriple(n, s0, s1, zeta, cg_m=m)


def zeta_hat(t: BDTriple, r: PosRoot):
    """Z-linear extension of zeta applied to a positive root, or None when some
    simple component falls outside S0."""
    m = t.cg_m
    if m is not None:
        if r.i <= t.n - m <= r.j - 1:
            return None
        if r.j + m <= t.n:
            return PosRoot(r.i + m, r.j + m)
        return PosRoot(r.i + m - t.n, r.j + m - t.n)
    images = []
    for s in r.simples():
        if s not in t.s0:
            return None
        images.append(t.zeta[s])
    images.sort()
    lo, hi = images[0], images[-1]
    if images != list(range(lo, hi + 1)):
        raise ValueError("zeta image of a root is not a root")
    return PosRoot(lo, hi + 1)


def orbit(t: BDTriple, rho: PosRoot):
    """Strict forward iterates zeta_hat(rho), zeta_hat^2(rho), ... as a tuple."""
    cached = t._orbits.get(rho)
    if cached is not None:
        return cached
    chain = []
    cur = rho
    limit = t.n * t.n + 1
    while True:
        cur = zeta_hat(t, cur)
        if cur is None:
            break
        chain.append(cur)
        if len(chain) > limit:
            raise RuntimeError("zeta iteration failed to terminate")
    result = tuple(chain)
    t._orbits[rho] = result
    return result


def precedes(t: BDTriple, rho: PosRoot, mu: PosRoot, allow_equal: bool = False) -> bool:
    """Whether some iterate of the extended zeta sends rho to mu (N >= 1; N >= 0
    when allow_equal)."""
    if allow_equal and rho == mu:
        return True
    return mu in orbit(t, rho)


def all_pos_roots(n):
    return [PosRoot(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


def alpha_part(m: int, n: int) -> WedgeElement:
    """2 * sum of e_rho ^ e_{-mu} over all strictly ordered pairs rho < mu."""
    t = cg_triple(m, n)
    w = WedgeElement(n)
    for rho in all_pos_roots(n):
        for mu in orbit(t, rho):
            w._accumulate((rho.i, rho.j), (mu.j, mu.i), Fraction(2))
    w.terms = {k: v for k, v in w.terms.items() if v != 0}
    return w


def strict_pair_count(m: int, n: int) -> int:
    t = cg_triple(m, n)
    return sum(len(orbit(t, rho)) for rho in all_pos_roots(n))


def beta_part(m: int, n: int) -> WedgeElement:
    """The diagonal part: sum over j < l of (-1 + (2/n)[(j-l) m^{-1} mod n]) e_jj ^ e_ll."""
    if gcd(m, n) != 1:
        raise ValueError("m and n must be coprime")
    m_inv = pow(m, -1, n)
    w = WedgeElement(n)
    for j in range(1, n + 1):
        for l in range(j + 1, n + 1):
            coeff = Fraction(-1) + Fraction(2, n) * (((j - l) * m_inv) % n)
            w._accumulate((j, j), (l, l), coeff)
    w.terms = {k: v for k, v in w.terms.items() if v != 0}
    return w


def gamma_part(n: int) -> WedgeElement:
    """sum over j < l of e_{jl} ^ e_{lj}."""
    if n < 2:
        raise ValueError("need n >= 2")
    return WedgeElement.from_terms(
        n, (((j, l), (l, j), 1) for j in range(1, n + 1) for l in range(j + 1, n + 1)))


def bd_r_matrix(m: int, n: int) -> WedgeElement:
    """Quasitriangular solution alpha + beta + gamma attached to the (m, n) triple."""
    return alpha_part(m, n) + beta_part(m, n) + gamma_part(n)


@dataclass(frozen=True)
class CartanVector:
    """Traceless diagonal matrix given by its diagonal."""

    n: int
    diagonal: tuple

    def __post_init__(self):
        if sum(self.diagonal, ZERO) != 0:
            raise ValueError("diagonal must sum to zero")

    @classmethod
    def from_simple(cls, n, s):
        diag = [ZERO] * n
        diag[s - 1] = Fraction(1)
        diag[s] = Fraction(-1)
        return cls(n, tuple(diag))


def _simple_root_functional(n, s):
    """a_s as a functional on diagonal matrices: diag -> diag_s - diag_{s+1}."""
    def f(d):
        return d[s - 1] - d[s]
    return f


def _diag_coefficient_matrix(b: WedgeElement):
    """Antisymmetric coefficient matrix C with b = (1/2) sum C_{jl} e_jj (x) e_ll.

    Raises when b has non-diagonal wedge legs.
    """
    n = b.n
    c = [[ZERO] * n for _ in range(n)]
    for ((a, bb), (cc, d)), v in b.terms.items():
        if a != bb or cc != d:
            raise ValueError("element does not lie in the diagonal wedge square")
        c[a - 1][cc - 1] += v
        c[cc - 1][a - 1] -= v
    return c


def _check_in_hwedgeh(c):
    for row in c:
        if sum(row, ZERO) != 0:
            raise ValueError("element does not lie in h ^ h (nonzero trace leg)")


def _beta_equation(t: BDTriple, c, s):
    """Left and right sides of the defining equation of the beta variety for a_s in S0.

    The contraction (1 (x) f) applied to sum c_{jl}/2 e_jj (x) e_ll gives the
    diagonal vector with entries sum_l c_{jl} f(e_ll) / 2; the right side is
    half the sum of the trace-form duals of a_s and its image.
    """
    n = t.n
    z = t.zeta[s]
    fvals = [ZERO] * n
    fvals[z - 1] += 1
    fvals[z] -= 1
    fvals[s - 1] -= 1
    fvals[s] += 1
    left = [sum((c[j][l] * fvals[l] for l in range(n)), ZERO) / 2 for j in range(n)]
    h_image = CartanVector.from_simple(n, z)
    h_source = CartanVector.from_simple(n, s)
    right = [(a + b) / 2 for a, b in zip(h_image.diagonal, h_source.diagonal)]
    return left, right


def verify_beta_variety(t: BDTriple, b: WedgeElement) -> bool:
    """Check the defining linear equations of the beta variety for b in h ^ h."""
    c = _diag_coefficient_matrix(b)
    _check_in_hwedgeh(c)
    for s in sorted(t.s0):
        left, right = _beta_equation(t, c, s)
        if left != right:
            return False
    return True


def solve_beta_variety(t: BDTriple):
    """Solve the beta-variety system exactly.

    Unknowns are the coefficients of e_jj ^ e_ll (j < l); the h ^ h membership
    constraints are included as homogeneous equations.  Returns
    (solution WedgeElement, affine dimension of the solution set), or None if
    the system is inconsistent.
    """
    n = t.n
    pairs = [(j, l) for j in range(1, n + 1) for l in range(j + 1, n + 1)]
    index = {p: k for k, p in enumerate(pairs)}
    rows, rhs = [], []

    # Row sums of the antisymmetric coefficient matrix must vanish (h ^ h membership).
    for j in range(1, n + 1):
        row = [ZERO] * len(pairs)
        for l in range(1, n + 1):
            if l > j:
                row[index[(j, l)]] += 1
            elif l < j:
                row[index[(l, j)]] -= 1
        rows.append(row)
        rhs.append(ZERO)

    for s in sorted(t.s0):
        z = t.zeta[s]
        fvals = [ZERO] * n
        fvals[z - 1] += 1
        fvals[z] -= 1
        fvals[s - 1] -= 1
        fvals[s] += 1
        h_image = CartanVector.from_simple(n, z)
        h_source = CartanVector.from_simple(n, s)
        for d in range(1, n + 1):
            row = [ZERO] * len(pairs)
            for (j, l) in pairs:
                coeff = ZERO
                if j == d:
                    coeff += fvals[l - 1]
                if l == d:
                    coeff -= fvals[j - 1]
                if coeff:
                    row[index[(j, l)]] = coeff / 2
            rows.append(row)
            rhs.append((h_image.diagonal[d - 1] + h_source.diagonal[d - 1]) / 2)

    from .linalg import solve_affine
    solved = solve_affine(rows, rhs)
    if solved is None:
        return None
    particular, null_basis = solved
    sol = WedgeElement.from_terms(
        n, (((j, j), (l, l), particular[index[(j, l)]]) for (j, l) in pairs))
    return sol, len(null_basis)
