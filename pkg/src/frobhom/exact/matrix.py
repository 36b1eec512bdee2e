"""Dense matrices over exact rings: determinants, inverses, Hankel minors,
and row reduction over Q.
"""

from fractions import Fraction

from .ring import as_rational, inverse as ring_inverse, is_domain_element, is_unit


class SingularMatrixError(ArithmeticError):
    pass


class DenseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(as_rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n, one=1):
        return cls(n, n, [one if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return DenseMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def block(self, r0, r1, c0, c1):
        return DenseMatrix(r1 - r0, c1 - c0,
                           [self[i, j] for i in range(r0, r1) for j in range(c0, c1)])

    def map(self, fn):
        return DenseMatrix(self.rows, self.cols, [fn(e) for e in self.entries])

    def __add__(self, other):
        self._same_shape(other)
        return DenseMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return DenseMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda e: -e)

    def scale(self, c):
        """Left scalar multiple c * M (order kept for supercommutative rings)."""
        return self.map(lambda e: c * e)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    a = self[i, k]
                    if a == 0:
                        continue
                    acc = acc + a * other[k, j]
                out.append(acc)
        return DenseMatrix(self.rows, other.cols, out)

    def trace(self):
        acc = 0
        for i in range(min(self.rows, self.cols)):
            acc = acc + self[i, i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and all(
            a == b for a, b in zip(self.entries, other.entries))

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"DenseMatrix({self.to_rows()!r})"

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def _require_square(m):
    if not m.is_square:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


def bareiss_det(m):
    """Exact determinant.

    Over Q this is fraction-free Bareiss elimination.  Rings with zero
    divisors (Grassmann, truncated series) make the exact divisions
    unreliable, so those go through the division-free expansion instead.
    """
    _require_square(m)
    if all(is_domain_element(e) for e in m.entries):
        return _bareiss(m.to_rows())
    return laplace_det(m)


def _bareiss(a):
    n = len(a)
    if n == 0:
        return Fraction(1)
    integral = all(isinstance(e, int) or (isinstance(e, Fraction) and e.denominator == 1)
                   for row in a for e in row)
    if integral:
        a = [[int(e) for e in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                v = row_i[j] * pivot - aik * row_k[j]
                row_i[j] = v // prev if integral else v / prev
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1])


def laplace_det(m):
    """Division-free determinant, row-by-row expansion memoized on used columns.

    Products are formed in row order, so the result is the Leibniz sum
    sum_sigma sgn(sigma) m[0, s(0)] m[1, s(1)] ... with that factor order.
    """
    _require_square(m)
    n = m.rows
    rows = m.to_rows()
    memo = {}

    def expand(r, used):
        if r == n:
            return 1
        if used in memo:
            return memo[used]
        acc = 0
        skipped = 0
        for c in range(n):
            if used >> c & 1:
                continue
            e = rows[r][c]
            if e != 0:
                term = e * expand(r + 1, used | (1 << c))
                acc = acc - term if skipped & 1 else acc + term
            skipped += 1
        memo[used] = acc
        return acc

    return as_rational(expand(0, 0))


det = bareiss_det


def matrix_inverse(m):
    """Gauss-Jordan inverse choosing unit pivots (valid over local rings)."""
    _require_square(m)
    n = m.rows
    a = m.to_rows()
    inv = DenseMatrix.identity(n).to_rows()
    for k in range(n):
        piv = next((i for i in range(k, n) if is_unit(a[i][k])), None)
        if piv is None:
            raise SingularMatrixError("no invertible pivot; matrix is not invertible")
        a[k], a[piv] = a[piv], a[k]
        inv[k], inv[piv] = inv[piv], inv[k]
        pinv = ring_inverse(a[k][k])
        a[k] = [pinv * e for e in a[k]]
        inv[k] = [pinv * e for e in inv[k]]
        for i in range(n):
            if i == k:
                continue
            f = a[i][k]
            if f == 0:
                continue
            a[i] = [x - f * y for x, y in zip(a[i], a[k])]
            inv[i] = [x - f * y for x, y in zip(inv[i], inv[k])]
    return DenseMatrix.from_rows(inv)


def hankel_matrix(c, k, size):
    """size x size matrix with (i, j) entry c_{k+i+j}; c_j = 0 for j < 0."""
    need = k + 2 * (size - 1)
    if size > 0 and need >= len(c):
        raise ValueError(f"Hankel minor needs c_{need}, sequence has {len(c)} terms")
    return DenseMatrix(size, size, [c[k + i + j] if k + i + j >= 0 else 0
                                    for i in range(size) for j in range(size)])


def hankel_det(c, k, size):
    if size == 0:
        return Fraction(1)
    return bareiss_det(hankel_matrix(c, k, size))


# Row reduction over Q ------------------------------------------------------

def rref(rows, ncols=None):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    a = [[Fraction(e) for e in r] for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][c]
        if pv != 1:
            a[r] = [e / pv for e in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of A x = b over Q (free variables set to 0), or None."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x
