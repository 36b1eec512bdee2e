"""Even supermatrices: supertrace, Berezinian, the characteristic function
Ber(1 + zM), its Hankel recurrences, and the Liouville relation.

Every identity is computed along two independent routes that must agree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exact.matrix import DenseMatrix, SingularMatrixError, bareiss_det, hankel_det, matrix_inverse
from .exact.ring import inverse as ring_inverse, is_unit, parity
from .exact.series import FormalSeries


class SuperMatrixError(ValueError):
    pass


class IndeterminateError(ArithmeticError):
    """The Hankel-ratio formula has a non-invertible denominator minor."""


class DualPathMismatch(AssertionError):
    pass


class SuperMatrix:
    """Block matrix [[A00, A01], [A10, A11]] of dimension p|q, checked even."""

    def __init__(self, p, q, matrix, check_parity=True):
        if p < 0 or q < 0 or p + q < 1:
            raise SuperMatrixError("need p, q >= 0 and p + q >= 1")
        if not isinstance(matrix, DenseMatrix):
            matrix = DenseMatrix.from_rows(matrix)
        if (matrix.rows, matrix.cols) != (p + q, p + q):
            raise SuperMatrixError(f"a {p}|{q} matrix is {p + q}x{p + q}")
        self.p, self.q = p, q
        self.matrix = matrix
        if check_parity:
            self._check_even()

    @classmethod
    def from_blocks(cls, a00, a01, a10, a11, p=None, q=None):
        a00 = [list(r) for r in a00]
        a11 = [list(r) for r in a11]
        p = len(a00) if p is None else p
        q = len(a11) if q is None else q
        a01 = [list(r) for r in a01] if a01 else [[0] * q for _ in range(p)]
        a10 = [list(r) for r in a10] if a10 else [[0] * p for _ in range(q)]
        rows = [a00[i] + a01[i] for i in range(p)] + [a10[i] + a11[i] for i in range(q)]
        return cls(p, q, DenseMatrix.from_rows(rows))

    @classmethod
    def diagonal(cls, evens, odds):
        evens, odds = list(evens), list(odds)
        n = len(evens) + len(odds)
        vals = evens + odds
        return cls(len(evens), len(odds),
                   DenseMatrix(n, n, [vals[i] if i == j else 0 for i in range(n) for j in range(n)]))

    @classmethod
    def identity(cls, p, q):
        return cls(p, q, DenseMatrix.identity(p + q))

    def _check_even(self):
        p = self.p
        for i in range(p + self.q):
            for j in range(p + self.q):
                want = 0 if (i < p) == (j < p) else 1
                try:
                    got = parity(self.matrix[i, j])
                except ValueError as exc:
                    raise SuperMatrixError(f"entry ({i},{j}): {exc}") from None
                if got is not None and got != want:
                    kind = "diagonal" if want == 0 else "off-diagonal"
                    raise SuperMatrixError(
                        f"entry ({i},{j}) in a {kind} block has the wrong parity; "
                        "even matrices need even diagonal and odd off-diagonal blocks")

    @property
    def a00(self):
        return self.matrix.block(0, self.p, 0, self.p)

    @property
    def a01(self):
        return self.matrix.block(0, self.p, self.p, self.p + self.q)

    @property
    def a10(self):
        return self.matrix.block(self.p, self.p + self.q, 0, self.p)

    @property
    def a11(self):
        return self.matrix.block(self.p, self.p + self.q, self.p, self.p + self.q)

    def __matmul__(self, other):
        if (self.p, self.q) != (other.p, other.q):
            raise SuperMatrixError("dimension mismatch")
        return SuperMatrix(self.p, self.q, self.matrix @ other.matrix)

    def __add__(self, other):
        return SuperMatrix(self.p, self.q, self.matrix + other.matrix)

    def scale(self, c):
        return SuperMatrix(self.p, self.q, self.matrix.scale(c))

    def map(self, fn, check_parity=True):
        return SuperMatrix(self.p, self.q, self.matrix.map(fn), check_parity)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q) and self.matrix == other.matrix

    def __repr__(self):
        return f"SuperMatrix({self.p}|{self.q}, {self.matrix.to_rows()!r})"


def supertrace(M):
    p = M.p
    acc = 0
    for i in range(p + M.q):
        acc = acc + M.matrix[i, i] if i < p else acc - M.matrix[i, i]
    return acc


def _det(m):
    return bareiss_det(m) if m.rows else Fraction(1)


def berezinian_block(M):
    """det(A00 - A01 A11^-1 A10) / det(A11)."""
    if M.q == 0:
        return _det(M.a00)
    try:
        inv11 = matrix_inverse(M.a11)
    except SingularMatrixError:
        raise ZeroDivisionError("A11 block is not invertible") from None
    if M.p == 0:
        return ring_inverse(_det(M.a11))
    schur = M.a00 - (M.a01 @ inv11) @ M.a10
    d11 = _det(M.a11)
    if not is_unit(d11):
        raise ZeroDivisionError("det A11 is not invertible")
    return _det(schur) * ring_inverse(d11)


def power_supertraces(M, N):
    """str(M^k) for k = 1..N."""
    out = []
    power = M.matrix
    for k in range(1, N + 1):
        if k > 1:
            power = power @ M.matrix
        out.append(supertrace(SuperMatrix(M.p, M.q, power, check_parity=False)))
    return out


def char_series_via_log(M, N):
    """exp(str log(1 + zM)) = exp(sum_k (-1)^(k+1) str(M^k) z^k / k)."""
    traces = power_supertraces(M, N)
    coeffs = [0] + [traces[k - 1] * Fraction((-1) ** (k + 1), k) for k in range(1, N + 1)]
    return FormalSeries(coeffs, N).exp()


def one_plus_zM(M, N):
    """1 + zM as a supermatrix over truncated series in z."""
    n = M.p + M.q

    def entry(i, j):
        return FormalSeries([1 if i == j else 0, M.matrix[i, j]], N)

    return SuperMatrix(M.p, M.q, DenseMatrix(n, n, [entry(i, j) for i in range(n) for j in range(n)]))


def char_series_via_block(M, N):
    return _as_series(berezinian_block(one_plus_zM(M, N)), N)


def _as_series(x, N):
    return x if isinstance(x, FormalSeries) else FormalSeries.constant(x, N)


def char_function_series(M, N):
    """c_0..c_N of Ber(1 + zM), with both routes checked against each other."""
    if N < 1:
        raise ValueError("order must be >= 1")
    via_log = char_series_via_log(M, N)
    via_block = char_series_via_block(M, N)
    if via_log != via_block:
        k = next(i for i in range(N + 1) if via_log[i] != via_block[i])
        raise DualPathMismatch(
            f"Ber(1+zM) routes disagree at z^{k}: exp-str-log gives {via_log[k]!r}, "
            f"block formula gives {via_block[k]!r}; M = {M!r}")
    return list(via_log.coeffs)


@dataclass
class HankelReport:
    p: int
    q: int
    entries: list = field(default_factory=list)  # (k, value, vanishes)
    sharpness: list = field(default_factory=list)  # (k, value) probes with k <= p - q

    @property
    def ok(self):
        return all(v for _, _, v in self.entries)


def hankel_recurrence_check(M, k_max):
    """(q+1)-Hankel minors of c_k vanish for every k = p-q+1 .. k_max."""
    p, q = M.p, M.q
    c = char_function_series(M, max(k_max + 2 * q, 1))
    report = HankelReport(p, q)
    for k in range(p - q + 1, k_max + 1):
        v = hankel_det(c, k, q + 1)
        report.entries.append((k, v, v == 0))
    if p - q >= -q:
        k = p - q
        report.sharpness.append((k, hankel_det(c, k, q + 1)))
    return report


def ber_via_hankel(M, c=None):
    """|c_{p-q} .. c_p|_{q+1} / |c_{p-q+2} .. c_{p+1}|_q, with c_j = 0 for j < 0.

    When p < q the negative indices make this an extrapolation of the
    displayed formula; it is exposed but flagged by :func:`ratio_formula_is_experimental`.
    """
    p, q = M.p, M.q
    if c is None:
        c = char_function_series(M, max(p + q + 1, 1))
    num = hankel_det(c, p - q, q + 1)
    den = hankel_det(c, p - q + 2, q)
    if not is_unit(den):
        raise IndeterminateError("denominator Hankel minor is not invertible")
    return num * ring_inverse(den)


def ratio_formula_is_experimental(M):
    return M.p < M.q


def matrix_exp_series(M, order):
    """exp(tM) as a supermatrix over truncated series in t."""
    n = M.p + M.q
    powers = [DenseMatrix.identity(n)]
    for k in range(1, order + 1):
        powers.append(powers[-1] @ M.matrix)
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append(FormalSeries(
                [powers[k][i, j] * Fraction(1, factorial(k)) for k in range(order + 1)], order))
    return SuperMatrix(M.p, M.q, DenseMatrix(n, n, entries))


@dataclass
class LiouvilleReport:
    lhs: FormalSeries
    rhs: FormalSeries

    @property
    def ok(self):
        return self.lhs == self.rhs


def liouville_check(M, order):
    """exp(t str M) against Ber(exp(tM)), both as series in t."""
    if order < 1:
        raise ValueError("order must be >= 1")
    lhs = FormalSeries([0, supertrace(M)], order).exp()
    rhs = _as_series(berezinian_block(matrix_exp_series(M, order)), order)
    return LiouvilleReport(lhs, rhs)


def diagonal_oracle(lambdas, mus, N):
    """Coefficients of prod(1 + lambda z) / prod(1 + mu z) up to z^N.

    Plain list arithmetic: polynomial products, then one geometric series
    sum (-mu z)^k per denominator factor.
    """
    c = [Fraction(1)] + [Fraction(0)] * N
    for lam in lambdas:
        c = [c[k] + (lam * c[k - 1] if k else 0) for k in range(N + 1)]
    for mu in mus:
        geo = [Fraction(-mu) ** k for k in range(N + 1)]
        c = [sum(c[i] * geo[k - i] for i in range(k + 1)) for k in range(N + 1)]
    return c
