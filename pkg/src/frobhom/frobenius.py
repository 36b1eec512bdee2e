"""Frobenius forms, characteristic functions and the classification of maps
of algebras as n-homomorphisms and p|q-homomorphisms.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial

from .algebras import (AlgebraElement, AlgebraError, FiniteSpace, LinearMap,
                       TensorPowerAlgebra, function_algebra, is_function_algebra_form,
                       is_homomorphism, symmetric_power)
from .exact.matrix import DenseMatrix, bareiss_det, hankel_det, laplace_det, nullspace, rref
from .exact.pade import PadeError, minimal_rational_type, pade_reconstruct
from .exact.series import FormalSeries, log1p_series

DEFAULT_TUPLE_CAP = 20000
DEFAULT_GRID_CAP = 250000


class ClassificationError(ValueError):
    pass


class GridCapExceeded(ClassificationError):
    pass


@dataclass(frozen=True)
class HomType:
    kind: str  # "unclassified" | "n-homomorphism" | "pq-homomorphism"
    p: int | None = None
    q: int | None = None
    witness: dict | None = field(default=None, compare=False)

    @classmethod
    def n_hom(cls, n):
        return cls("n-homomorphism", n, 0)

    @classmethod
    def pq_hom(cls, p, q):
        return cls("pq-homomorphism", p, q)

    @classmethod
    def unclassified(cls, witness=None):
        return cls("unclassified", witness=witness)

    @property
    def ok(self):
        return self.kind != "unclassified"

    @property
    def n(self):
        return self.p if self.kind == "n-homomorphism" else None

    @property
    def pq(self):
        return (self.p, self.q) if self.ok else None

    def __str__(self):
        if self.kind == "n-homomorphism":
            return f"n-homomorphism (n={self.p})"
        if self.kind == "pq-homomorphism":
            return f"pq-homomorphism ({self.p},{self.q})"
        return "not-classified"


def _target_zero(f):
    return Fraction(0) if f.target is None else f.target.zero()


def _is_zero(x):
    return x == 0


# Frobenius recursion ----------------------------------------------------------

def frobenius_phi(f, args):
    """Phi_k(a_1, ..., a_k) by the Frobenius recursion.

    Phi_1(a) = f(a) and
    Phi_{k+1}(a_1, ..., a_{k+1}) = f(a_1) Phi_k(a_2, ..., a_{k+1})
        - sum_{j >= 2} Phi_k(a_2, ..., a_1 a_j, ..., a_{k+1}).
    """
    args = tuple(args)
    if not args:
        raise ValueError("Phi needs at least one argument")
    for a in args:
        if not isinstance(a, AlgebraElement) or a.algebra is not f.source:
            raise AlgebraError("Phi arguments must be elements of f's source algebra")
    zero = _target_zero(f)

    @lru_cache(maxsize=None)
    def phi(xs):
        if any(x.is_zero() for x in xs):
            return zero  # multilinear
        if len(xs) == 1:
            return f(xs[0])
        a1, rest = xs[0], xs[1:]
        out = f(a1) * phi(rest)
        for j in range(len(rest)):
            out = out - phi(rest[:j] + (a1 * rest[j],) + rest[j + 1:])
        return out

    return phi(args)


def moments(f, a, K):
    """[s_0, ..., s_K] with s_k = f(a^k); s_0 = f(1)."""
    out = [f.unit_value()]
    power = a.algebra.one()
    for _ in range(K):
        power = power * a
        out.append(f(power))
    return out


def newton_psi(s, k):
    """P_k(s_1, ..., s_k) = det(N_k) / k!, where N_k has s_1..s_k down the first
    column, 1, 2, ..., k-1 on the superdiagonal and s_{i-j+1} below it.

    ``s`` is indexed from s_0 (ignored) as produced by :func:`moments`.
    """
    if k == 0:
        return Fraction(1)
    if k < 0:
        raise ValueError("k must be >= 0")
    if len(s) <= k:
        raise ValueError(f"psi_{k} needs moments s_1..s_{k}")
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if j == i + 1:
                row.append(i + 1)
            elif j <= i:
                row.append(s[i - j + 1])
            else:
                row.append(0)
        rows.append(row)
    return bareiss_det(DenseMatrix.from_rows(rows)) * Fraction(1, factorial(k))


def psi_newton_recursion(s, K):
    """psi_0..psi_K from k psi_k = sum_i (-1)^(i-1) s_i psi_{k-i} (no determinants)."""
    out = [Fraction(1)]
    for k in range(1, K + 1):
        acc = 0
        for i in range(1, k + 1):
            term = s[i] * out[k - i]
            acc = acc + term if i % 2 else acc - term
        out.append(acc * Fraction(1, k))
    return out


@dataclass
class CharacteristicFunction:
    series: FormalSeries
    chi: int | None
    reconstructed: object = None  # RationalFunction once reconstructed

    def reconstruct(self, p_max, q_max):
        t = minimal_rational_type(self.series, p_max, q_max)
        if t is None:
            return None
        self.reconstructed = pade_reconstruct(self.series, *t).function
        return self.reconstructed


def char_series(f, a, N, check=True):
    """R(f, a, z) = exp(f(log(1 + a z))) to order N, in f's target ring."""
    if N < 1:
        raise ValueError("order must be >= 1")
    log_az = log1p_series(N).substitute_az(a)
    image = log_az.map(lambda c: f(c) if isinstance(c, AlgebraElement) else c * f.unit_value())
    series = image.exp()
    if check:
        s = moments(f, a, N)
        for k in range(1, N + 1):
            if series[k] != newton_psi(s, k):
                raise ArithmeticError(f"series coefficient {k} disagrees with Newton polynomial")
    return CharacteristicFunction(series, f.chi())


def diagonal_phi_identity_check(f, a, k):
    """Phi_k(a, ..., a) == k! psi_k(f, a)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return frobenius_phi(f, [a] * k) == newton_psi(moments(f, a, k), k) * factorial(k)


# n-homomorphisms ------------------------------------------------------------

def is_n_homomorphism(f, n, cap=DEFAULT_TUPLE_CAP):
    """f(1) = n and Phi_{n+1} vanishes on every multiset of basis vectors."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m = f.source.dim
    if comb(m + n, n + 1) > cap:
        raise ClassificationError(f"C({m + n}, {n + 1}) basis tuples exceed cap {cap}")
    if f.unit_value() != f.target_one() * n:
        return HomType.unclassified({"reason": "f(1) != n", "f(1)": f.unit_value()})
    basis = f.source.basis()
    for idx in combinations_with_replacement(range(m), n + 1):
        v = frobenius_phi(f, [basis[i] for i in idx])
        if not _is_zero(v):
            return HomType.unclassified({"reason": f"Phi_{n + 1} != 0", "basis": idx, "value": v})
    return HomType.n_hom(n)


# Identity testing on lattices ---------------------------------------------

def essential_coordinates(f):
    """Basis indices J whose span maps onto A / I, I = {b : f(b c) = 0 for all c}.

    psi_k(f, a) only depends on a modulo I, so polynomial identities in a
    only need the coordinates in J.
    """
    A = f.source
    basis = A.basis()
    rows = []
    for j in range(A.dim):
        # b -> f(b e_j) as a linear map in the coordinates of b
        cols = [f.apply_coords((b * basis[j]).coords) for b in basis]
        for t in range(len(cols[0])):
            rows.append([cols[i][t] for i in range(A.dim)])
    ideal = nullspace(rows, A.dim)
    _, pivots = rref(ideal, A.dim) if ideal else ([], [])
    return [j for j in range(A.dim) if j not in set(pivots)]


def simplex_lattice(n, D):
    """All y in N^n with |y| <= D; unisolvent for polynomials of degree <= D."""
    if n == 0:
        yield ()
        return
    for first in range(D + 1):
        for rest in simplex_lattice(n - 1, D - first):
            yield (first,) + rest


def identity_grid(coords, dim, D):
    """Points deciding whether a homogeneous degree-D polynomial in ``coords`` vanishes.

    Homogeneity lets the first coordinate be fixed to 1; the rest run over
    the simplex lattice of size D.
    """
    if not coords:
        yield tuple([0] * dim)
        return
    lead, rest = coords[0], coords[1:]
    for y in simplex_lattice(len(rest), D):
        v = [0] * dim
        v[lead] = 1
        for c, x in zip(rest, y):
            v[c] = x
        yield tuple(v)


def grid_size(n_coords, D):
    return comb(D + n_coords - 1, n_coords - 1) if n_coords else 1


class _PsiEvaluator:
    """psi_0..psi_K at many points; integer arithmetic when the data allow it."""

    def __init__(self, f, K):
        self.f, self.K = f, K
        A = f.source
        self.integral = f.is_scalar and all(
            x.denominator == 1 for r in f.matrix for x in r) and all(
            c.denominator == 1 for i in range(A.dim) for j in range(i, A.dim)
            for _, c in A.basis_product(i, j)) and all(u.denominator == 1 for u in A.unit_coords)
        if self.integral:
            self.table = [[tuple((k, int(c)) for k, c in A.basis_product(i, j))
                           for j in range(A.dim)] for i in range(A.dim)]
            self.row = [int(x) for x in f.matrix[0]]
            self.unit = [int(u) for u in A.unit_coords]

    def psi(self, point):
        """psi_0..psi_K at a = point (exact Fractions / target elements)."""
        if self.integral:
            phis = self._phis_int(point)
            return [Fraction(p, factorial(j)) for j, p in enumerate(phis)]
        a = AlgebraElement(self.f.source, point)
        return psi_newton_recursion(moments(self.f, a, self.K), self.K)

    def scaled_int(self, point):
        """K! * psi_j as integers (only when ``integral``)."""
        phis = self._phis_int(point)
        K = self.K
        return [p * (factorial(K) // factorial(j)) for j, p in enumerate(phis)]

    def _phis_int(self, point):
        K, m = self.K, len(point)
        table, row = self.table, self.row
        # sparse multiplication-by-a matrix: mult[i] = [(k, c)] with e_i a = sum c e_k
        nz = [(j, y) for j, y in enumerate(point) if y]
        mult = []
        for i in range(m):
            acc = {}
            ti = table[i]
            for j, y in nz:
                for k, c in ti[j]:
                    acc[k] = acc.get(k, 0) + c * y
            mult.append([(k, c) for k, c in acc.items() if c])
        power = list(self.unit)
        s = [sum(r * u for r, u in zip(row, power))]
        for _ in range(K):
            out = [0] * m
            for i, x in enumerate(power):
                if x:
                    for k, c in mult[i]:
                        out[k] += x * c
            power = out
            s.append(sum(r * u for r, u in zip(row, power) if u))
        # phi_k = k! psi_k = sum_i (-1)^(i-1) s_i phi_{k-i} (k-1)!/(k-i)!
        phis = [1]
        for k in range(1, K + 1):
            acc = 0
            ff = 1  # (k-1)!/(k-i)!
            for i in range(1, k + 1):
                if i > 1:
                    ff *= k - i + 1
                term = s[i] * phis[k - i] * ff
                acc = acc + term if i % 2 else acc - term
            phis.append(acc)
        return phis


def _int_hankel_det(c, k, size):
    if size == 1:
        return c[k] if k >= 0 else 0
    if size == 2:
        def at(i):
            return c[i] if i >= 0 else 0
        return at(k) * at(k + 2) - at(k + 1) * at(k + 1)
    a = [[c[k + i + j] if k + i + j >= 0 else 0 for j in range(size)] for i in range(size)]
    n = size
    sign, prev = 1, 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[t][t]
        at = a[t]
        for i in range(t + 1, n):
            ai = a[i]
            ait = ai[t]
            for j in range(t + 1, n):
                ai[j] = (ai[j] * pivot - ait * at[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def hankel_values(psis, ks, size):
    """Exact Hankel minors of the psi sequence (generic ring path)."""
    out = {}
    for k in ks:
        if size == 0:
            out[k] = Fraction(1)
            continue
        m = DenseMatrix(size, size, [psis[k + i + j] if k + i + j >= 0 else 0
                                     for i in range(size) for j in range(size)])
        out[k] = bareiss_det(m)
    return out


def is_pq_homomorphism(f, p, q, k_max=None, grid_cap=DEFAULT_GRID_CAP):
    """f(1) = p - q and the (q+1)-Hankel minors of psi(f, a) at every index
    k = p-q+1 .. k_max (default p+1) vanish identically in a.

    Each minor is homogeneous of degree (q+1)k + q(q+1) in a and only sees
    a modulo the largest ideal inside ker f, so vanishing on the matching
    lattice (see :func:`identity_grid`) decides the identity exactly.
    """
    if p < 0 or q < 0:
        raise ValueError("p, q must be >= 0")
    if f.unit_value() != f.target_one() * (p - q):
        return HomType.unclassified({"reason": "f(1) != p - q", "f(1)": f.unit_value()})
    k_lo = p - q + 1
    k_hi = p + 1 if k_max is None else k_max
    ks = list(range(k_lo, k_hi + 1))
    if not ks:
        return HomType.pq_hom(p, q)
    size = q + 1
    K = k_hi + 2 * q
    D = size * k_hi + q * size
    J = essential_coordinates(f)
    npts = grid_size(len(J), D)
    if npts > grid_cap:
        raise GridCapExceeded(f"identity grid of {npts} points exceeds cap {grid_cap}")
    ev = _PsiEvaluator(f, K)
    for point in identity_grid(J, f.source.dim, D):
        if ev.integral:
            c = ev.scaled_int(point)
            for k in ks:
                v = _int_hankel_det(c, k, size)
                if v:
                    return HomType.unclassified(_witness(f, point, k, size))
        else:
            vals = hankel_values(ev.psi(point), ks, size)
            for k in ks:
                if not _is_zero(vals[k]):
                    return HomType.unclassified(_witness(f, point, k, size))
    return HomType.pq_hom(p, q)


def _witness(f, point, k, size):
    psis = _PsiEvaluator(f, k + 2 * (size - 1)).psi(point)
    return {"reason": f"Hankel minor of size {size} at k={k} is nonzero",
            "a": list(point), "k": k, "value": hankel_values(psis, [k], size)[k]}


def probe_points(f, count=3):
    """Deterministic generic-looking points in the essential coordinates."""
    J = essential_coordinates(f)
    seeds = [(2, 3, 5, 7, 11, 13, 17, 19), (3, 7, 2, 13, 5, 19, 11, 23), (5, 2, 11, 3, 17, 7, 29, 13)]
    pts = []
    for s in seeds[:count]:
        v = [0] * f.source.dim
        for t, j in enumerate(J):
            v[j] = s[t % len(s)] + 10 * (t // len(s))
        pts.append(tuple(v))
    return pts


def classify(f, p_max=4, q_max=4, grid_cap=DEFAULT_GRID_CAP):
    """Minimal (p, q), smallest q first, for which f is a p|q-homomorphism."""
    chi = f.chi()
    if chi is None:
        return HomType.unclassified({"reason": "f(1) is not an integer multiple of 1",
                                     "f(1)": f.unit_value()})
    # any point bounds q from below: R(f, a, z) has type <= (p, q) everywhere
    q_lo = 0
    if f.is_scalar:
        order = 2 * (p_max + q_max) + 4
        for point in probe_points(f, count=1):
            psis = _PsiEvaluator(f, order).psi(point)
            t = minimal_rational_type(FormalSeries(psis, order), p_max, q_max)
            if t is None:
                return HomType.unclassified({"reason": "series at probe not rational within bounds",
                                             "a": list(point)})
            q_lo = max(q_lo, t[1])
    last = None
    for q in range(q_lo, q_max + 1):
        p = chi + q
        if p < 0 or p > p_max:
            continue
        res = is_pq_homomorphism(f, p, q, grid_cap=grid_cap)
        if res.ok:
            return HomType.n_hom(p) if q == 0 else HomType.pq_hom(p, q)
        last = res
    return HomType.unclassified(last.witness if last else {"reason": "no (p, q) within bounds"})


# Berezinian and expansion at infinity ---------------------------------------

def f_berezinian(f, a, pq=None, bounds=(6, 6)):
    """Leading coefficient ratio of R(f, a, z) (formally exp(f(log a)))."""
    if not a.is_unit():
        raise ZeroDivisionError("f-Berezinian needs an invertible element")
    if not f.is_scalar:
        raise ClassificationError("f-Berezinian is implemented for scalar-valued f")
    if pq is None:
        p_max, q_max = bounds
        series = char_series(f, a, 2 * (p_max + q_max) + 4, check=False).series
        t = minimal_rational_type(series, p_max, q_max)
        if t is None:
            raise ClassificationError("R(f, a, z) is not rational within the given bounds")
    else:
        t = pq
        series = char_series(f, a, 2 * sum(t) + 4, check=False).series
    res = pade_reconstruct(series, *t)
    if not res.consistent:
        raise ClassificationError(f"R(f, a, z) is not of type {t}")
    return res.function.leading_ratio()


def psi_star(f, a, k, pq=None):
    """Coefficient of z^k in the expansion of R(f, a, z) at infinity."""
    chi = f.chi()
    if chi is None:
        raise ClassificationError("psi* needs an integral f(1)")
    if chi - k < 0:
        raise ValueError("psi*_k is defined for k <= chi")
    inv = a.inverse()
    psi = newton_psi(moments(f, inv, chi - k), chi - k)
    return f_berezinian(f, a, pq) * psi


# Buchstaber-Rees lift and its inverse --------------------------------------

def br_lift(f, n, S=None):
    """The homomorphism S^n A -> B polarizing psi_n(f, .).

    On the basis tensor of a multiset M (sum over distinct orderings) the
    value is Phi_n(e_M) / prod(mult!), i.e. (#orderings) * Phi_n(e_M) / n!.
    """
    if not is_n_homomorphism(f, n).ok:
        raise ClassificationError(f"f is not an n-homomorphism for n = {n}")
    A = f.source
    if S is None:
        S = symmetric_power(A, n)
    basis = A.basis()
    cols = []
    for M in S.labels:
        v = frobenius_phi(f, [basis[i] for i in M])
        denom = 1
        for i in set(M):
            denom *= factorial(M.count(i))
        v = v * Fraction(1, denom)
        cols.append([v] if f.is_scalar else list(v.coords))
    lift = LinearMap(S.algebra, f.target, [list(r) for r in zip(*cols)])
    if not is_homomorphism(lift):
        raise ArithmeticError("Buchstaber-Rees lift failed to be a homomorphism")
    return lift


def _insertion(amb, A, slot, i):
    """1 (x) ... (x) e_i (slot) (x) ... (x) 1 in the tensor power ``amb``."""
    coords = [Fraction(0)] * amb.dim
    for idx in range(amb.dim):
        t = amb.index_tuple(idx)
        if t[slot] != i:
            continue
        c = Fraction(1)
        for s, x in enumerate(t):
            if s != slot:
                c *= A.unit_coords[x]
                if not c:
                    break
        coords[idx] = c
    return coords


def power_sum_pi(S, p, q, i):
    """Ambient coords of pi(e_i) = sum_{p-group} ins(e_i) - sum_{q-group} ins(e_i)."""
    amb = S.ambient
    if not isinstance(amb, TensorPowerAlgebra):
        sign = 1 if p == 1 else -1
        return [sign * Fraction(int(k == i)) for k in range(amb.dim)]
    A = amb.base
    out = [Fraction(0)] * amb.dim
    for slot in range(p + q):
        ins = _insertion(amb, A, slot, i)
        sign = 1 if slot < p else -1
        for k, x in enumerate(ins):
            if x:
                out[k] += sign * x
    return out


def pq_hom_from_sym_hom(h, p, q, verify=True):
    """f(a) = h(pi(a)) for a homomorphism h: S^{p|q}A -> B (S^p A when q = 0)."""
    S = getattr(h.source, "subalgebra", None)
    if S is None:
        raise AlgebraError("h must be defined on a subalgebra built by this package")
    if not is_homomorphism(h):
        raise ClassificationError("h is not an algebra homomorphism")
    amb = S.ambient
    A = amb.base if isinstance(amb, TensorPowerAlgebra) else amb
    cols = []
    for i in range(A.dim):
        coords = S.coordinates(power_sum_pi(S, p, q, i))  # raises NotInSubalgebra
        v = h(AlgebraElement(S.algebra, coords))
        cols.append([v] if h.is_scalar else list(v.coords))
    f = LinearMap(A, h.target, [list(r) for r in zip(*cols)])
    if verify and not is_pq_homomorphism(f, p, q).ok:
        raise ArithmeticError("pulled-back map is not a p|q-homomorphism")
    return f


# Point configurations -------------------------------------------------------

@dataclass(frozen=True)
class PointConfiguration:
    space: FiniteSpace
    multiplicities: tuple  # ((label, n), ...) sorted by space order, nonzero only

    def __init__(self, space, multiplicities):
        if not isinstance(space, FiniteSpace):
            space = FiniteSpace(tuple(space))
        mult = dict(multiplicities)
        for label, n in mult.items():
            if label not in space.points:
                raise ValueError(f"{label!r} is not a point of the space")
            if int(n) != n:
                raise ValueError("multiplicities must be integers")
        items = tuple((x, int(mult[x])) for x in space.points if mult.get(x, 0))
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "multiplicities", items)

    @classmethod
    def from_signed_points(cls, space, plus, minus=()):
        mult = {}
        for x in plus:
            mult[x] = mult.get(x, 0) + 1
        for x in minus:
            mult[x] = mult.get(x, 0) - 1
        return cls(space, mult)

    def as_dict(self):
        return dict(self.multiplicities)

    @property
    def p(self):
        return sum(n for _, n in self.multiplicities if n > 0)

    @property
    def q(self):
        return -sum(n for _, n in self.multiplicities if n < 0)

    @property
    def chi(self):
        return self.p - self.q

    def vector(self):
        d = self.as_dict()
        return [d.get(x, 0) for x in self.space.points]


def ev_functional(cfg, A=None):
    """sum_alpha n_alpha ev_{x_alpha} on C(X)."""
    if A is None:
        A = function_algebra(cfg.space)
    return LinearMap.functional(A, cfg.vector())


def recover_configuration(f):
    """Read multiplicities off the dual-basis coordinates; None if not integral."""
    A = f.source
    if not f.is_scalar or not is_function_algebra_form(A):
        raise AlgebraError("recovery needs a functional on a function algebra")
    space = getattr(A, "space", None) or FiniteSpace(tuple(range(A.dim)))
    values = f.matrix[0]
    if any(v.denominator != 1 for v in values):
        return None
    return PointConfiguration(space, {x: int(v) for x, v in zip(space.points, values)})


def functional_from_representation(A, rho):
    """f = str o rho for a representation given on the basis: rho[i] = rho(e_i).

    Linearity is by construction; multiplicativity and rho(1) = 1 are checked.
    """
    from .superlinalg import SuperMatrix, supertrace

    if len(rho) != A.dim:
        raise AlgebraError("rho must give one supermatrix per basis vector")
    dims = {(r.p, r.q) for r in rho}
    if len(dims) != 1:
        raise AlgebraError("rho takes values in supermatrices of one shape")
    p, q = dims.pop()

    def rho_of(coords):
        acc = None
        for c, r in zip(coords, rho):
            term = r.matrix.scale(c)
            acc = term if acc is None else acc + term
        return SuperMatrix(p, q, acc)

    if rho_of(A.unit_coords).matrix != DenseMatrix.identity(p + q):
        raise AlgebraError("rho(1) is not the identity")
    for i in range(A.dim):
        for j in range(i, A.dim):
            prod = [Fraction(0)] * A.dim
            for k, c in A.basis_product(i, j):
                prod[k] = c
            if (rho[i].matrix @ rho[j].matrix) != rho_of(prod).matrix:
                raise AlgebraError(f"rho(e{i}) rho(e{j}) != rho(e{i} e{j})")
    f = LinearMap.functional(A, [supertrace(r) for r in rho])
    f.representation = rho_of
    return f
