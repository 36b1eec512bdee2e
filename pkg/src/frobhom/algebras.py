"""Finite-dimensional commutative unital algebras over Q.

Algebras are given by structure constants e_i e_j = sum_k c[i][j][k] e_k.
Function algebras C(X) on finite sets, tensor powers, the symmetric powers
S^n A and the super-symmetric powers S^{p|q} A are all built on top of this.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import comb

from .exact.matrix import nullspace, rref, solve

DEFAULT_CAP = 4096


class AlgebraError(ValueError):
    pass


class CapExceeded(AlgebraError):
    pass


class NotInSubalgebra(AlgebraError):
    pass


def _q(x):
    return x if isinstance(x, Fraction) else Fraction(x)


class CommutativeAlgebra:
    """Structure constants stored sparsely: (i, j) with i <= j -> ((k, c), ...)."""

    def __init__(self, dim, products, unit, name=None, validate=True):
        if dim < 1:
            raise AlgebraError("algebra dimension must be >= 1")
        self.dim = dim
        self._products = {key: tuple((k, _q(c)) for k, c in val if c != 0)
                          for key, val in products.items()}
        self.unit_coords = tuple(_q(u) for u in unit)
        if len(self.unit_coords) != dim:
            raise AlgebraError("unit has wrong length")
        self.name = name
        if validate:
            self.validate()

    @classmethod
    def from_structure_constants(cls, c, unit, name=None, validate=True):
        m = len(c)
        if any(len(ci) != m or any(len(cij) != m for cij in ci) for ci in c):
            raise AlgebraError("structure constants must form an m x m x m array")
        for i in range(m):
            for j in range(m):
                if [_q(x) for x in c[i][j]] != [_q(x) for x in c[j][i]]:
                    raise AlgebraError(f"not commutative: e{i} e{j} != e{j} e{i}")
        products = {(i, j): tuple((k, c[i][j][k]) for k in range(m))
                    for i in range(m) for j in range(i, m)}
        return cls(m, products, unit, name=name, validate=validate)

    def basis_product(self, i, j):
        if i > j:
            i, j = j, i
        return self._products.get((i, j), ())

    def structure_constants(self):
        m = self.dim
        out = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
        for i in range(m):
            for j in range(m):
                for k, c in self.basis_product(i, j):
                    out[i][j][k] = c
        return out

    def multiply(self, u, v):
        out = [Fraction(0)] * self.dim
        nz_v = [(j, b) for j, b in enumerate(v) if b != 0]
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in nz_v:
                ab = a * b
                for k, c in self.basis_product(i, j):
                    out[k] += ab * c
        return tuple(out)

    # elements
    def element(self, coords):
        return AlgebraElement(self, coords)

    def basis_element(self, i):
        return AlgebraElement(self, [1 if k == i else 0 for k in range(self.dim)])

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def one(self):
        return AlgebraElement(self, self.unit_coords)

    def zero(self):
        return AlgebraElement(self, [0] * self.dim)

    def validate(self):
        """Commutativity is built in; check associativity and the unit on the basis."""
        m = self.dim
        basis = [tuple(Fraction(int(k == i)) for k in range(m)) for i in range(m)]
        for i in range(m):
            if self.multiply(self.unit_coords, basis[i]) != basis[i]:
                raise AlgebraError(f"unit does not act as identity on e{i}")
        for i in range(m):
            for j in range(i, m):
                eij = self.multiply(basis[i], basis[j])
                for l in range(m):
                    left = self.multiply(eij, basis[l])
                    right = self.multiply(basis[i], self.multiply(basis[j], basis[l]))
                    if left != right:
                        raise AlgebraError(f"not associative on (e{i}, e{j}, e{l})")
        return True

    def multiplication_matrix(self, coords):
        """Columns are coords * e_j, so M @ x = coords * x."""
        cols = [self.multiply(coords, tuple(Fraction(int(k == j)) for k in range(self.dim)))
                for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def ring_key(self):
        return ("algebra", id(self))

    def __repr__(self):
        return f"CommutativeAlgebra(dim={self.dim}{', ' + self.name if self.name else ''})"


class TensorPowerAlgebra(CommutativeAlgebra):
    """A^{(x)n} with basis e_{i_1} (x) ... (x) e_{i_n}, index = base-m digits."""

    def __init__(self, base, n, cap=DEFAULT_CAP):
        if n < 1:
            raise AlgebraError("tensor power needs n >= 1")
        if base.dim ** n > cap:
            raise CapExceeded(f"dim(A)^{n} = {base.dim ** n} exceeds cap {cap}")
        self.base = base
        self.n = n
        self._cache = {}
        unit = [Fraction(1)] * (base.dim ** n)
        for idx in range(base.dim ** n):
            for t in self.index_tuple(idx):
                unit[idx] *= base.unit_coords[t]
        super().__init__(base.dim ** n, {}, unit, name=f"{base.name or 'A'}^(x){n}",
                         validate=False)

    def index_tuple(self, idx):
        m = self.base.dim
        out = []
        for _ in range(self.n):
            idx, r = divmod(idx, m)
            out.append(r)
        return tuple(reversed(out))

    def tuple_index(self, tup):
        idx = 0
        for t in tup:
            idx = idx * self.base.dim + t
        return idx

    def basis_product(self, i, j):
        if i > j:
            i, j = j, i
        hit = self._cache.get((i, j))
        if hit is not None:
            return hit
        terms = {(): Fraction(1)}
        for a, b in zip(self.index_tuple(i), self.index_tuple(j)):
            factor = self.base.basis_product(a, b)
            terms = {t + (k,): c * ck for t, c in terms.items() for k, ck in factor}
            if not terms:
                break
        out = tuple((self.tuple_index(t), c) for t, c in terms.items() if c != 0)
        self._cache[(i, j)] = out
        return out


class AlgebraElement:
    __slots__ = ("algebra", "coords", "_hash")

    def __init__(self, algebra, coords):
        coords = tuple(_q(c) for c in coords)
        if len(coords) != algebra.dim:
            raise AlgebraError(f"element of a dim-{algebra.dim} algebra needs {algebra.dim} coords")
        self.algebra = algebra
        self.coords = coords
        self._hash = None

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra is not self.algebra:
                raise AlgebraError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.algebra, [other * u for u in self.algebra.unit_coords])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.algebra, [a * other for a in self.coords])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgebraElement(self.algebra, self.algebra.multiply(self.coords, other.coords))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._lift(other).inverse()

    def __pow__(self, k):
        return element_power(self, k)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return other.algebra is self.algebra and other.coords == self.coords
        if isinstance(other, (int, Fraction)):
            return self.coords == self._lift(other).coords
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def is_zero(self):
        return not any(self.coords)

    def ring_key(self):
        return self.algebra.ring_key()

    def parity(self):
        return None if self.is_zero() else 0

    def is_unit(self):
        return _solve_inverse(self) is not None

    def inverse(self):
        inv = _solve_inverse(self)
        if inv is None:
            raise ZeroDivisionError("element is not invertible in its algebra")
        return inv

    def scalar_value(self):
        """The rational c when this element equals c * 1."""
        u = self.algebra.unit_coords
        r = next(i for i, x in enumerate(u) if x != 0)
        c = self.coords[r] / u[r]
        if any(x != c * y for x, y in zip(self.coords, u)):
            return None
        return c

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _solve_inverse(a):
    alg = a.algebra
    x = solve(alg.multiplication_matrix(a.coords), list(alg.unit_coords))
    if x is None:
        return None
    return AlgebraElement(alg, x)


def element_power(a, k):
    if k < 0:
        return element_power(a.inverse(), -k)
    out = a.algebra.one()
    base = a
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


@dataclass(frozen=True)
class FiniteSpace:
    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise AlgebraError("point labels must be distinct")

    def __len__(self):
        return len(self.points)

    def index(self, label):
        return self.points.index(label)


def function_algebra(X):
    """C(X): basis of indicator functions delta_x, all idempotent and orthogonal."""
    if not isinstance(X, FiniteSpace):
        X = FiniteSpace(tuple(X))
    if len(X) == 0:
        raise AlgebraError("function algebra of the empty set")
    m = len(X)
    alg = CommutativeAlgebra(m, {(i, i): ((i, 1),) for i in range(m)}, [1] * m,
                             name=f"C({','.join(map(str, X.points))})")
    alg.space = X
    return alg


def truncated_polynomial_algebra(m):
    """Q[t] / (t^m) with basis 1, t, ..., t^(m-1); local, so not of function type."""
    if m < 1:
        raise AlgebraError("need m >= 1")
    products = {(i, j): (((i + j, 1),) if i + j < m else ()) for i in range(m) for j in range(i, m)}
    return CommutativeAlgebra(m, products, [1] + [0] * (m - 1), name=f"Q[t]/(t^{m})")


def ground_field():
    return function_algebra(FiniteSpace(("*",)))


class LinearMap:
    """f: A -> B given by a dim(B) x dim(A) matrix; target None means Q."""

    def __init__(self, source, target, matrix):
        rows = [[_q(x) for x in r] for r in matrix]
        tdim = 1 if target is None else target.dim
        if len(rows) != tdim or any(len(r) != source.dim for r in rows):
            raise AlgebraError(f"matrix must be {tdim} x {source.dim}")
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(r) for r in rows)

    @classmethod
    def functional(cls, source, values):
        """Scalar-valued map with f(e_i) = values[i]."""
        return cls(source, None, [list(values)])

    @property
    def is_scalar(self):
        return self.target is None

    def apply_coords(self, coords):
        out = []
        for row in self.matrix:
            acc = Fraction(0)
            for r, x in zip(row, coords):
                if r and x:
                    acc += r * x
            out.append(acc)
        return out

    def __call__(self, a):
        if isinstance(a, AlgebraElement):
            if a.algebra is not self.source:
                raise AlgebraError("argument is not an element of the source algebra")
            coords = a.coords
        elif isinstance(a, (int, Fraction)):
            coords = [a * u for u in self.source.unit_coords]
        else:
            raise AlgebraError(f"cannot apply a linear map to {type(a).__name__}")
        out = self.apply_coords(coords)
        return out[0] if self.target is None else AlgebraElement(self.target, out)

    def target_one(self):
        return Fraction(1) if self.target is None else self.target.one()

    def unit_value(self):
        return self(self.source.one())

    def chi(self):
        """f(1) as an integer n when f(1) = n * 1_B, else None."""
        v = self.unit_value()
        c = v if self.target is None else v.scalar_value()
        if c is None or c.denominator != 1:
            return None
        return int(c)

    def _check_same(self, other):
        if other.source is not self.source or other.target is not self.target:
            raise AlgebraError("linear maps with different source/target")

    def __add__(self, other):
        self._check_same(other)
        return LinearMap(self.source, self.target,
                         [[a + b for a, b in zip(r, s)] for r, s in zip(self.matrix, other.matrix)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        return LinearMap(self.source, self.target, [[c * a for a in r] for r in self.matrix])

    __rmul__ = __mul__

    def compose(self, g):
        """self o g."""
        if g.target is not self.source:
            raise AlgebraError("cannot compose: g's target is not f's source")
        cols = [self.apply_coords(col) for col in zip(*g.matrix)]
        return LinearMap(g.source, self.target, [list(r) for r in zip(*cols)])

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source is other.source and self.target is other.target
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"LinearMap({[[str(x) for x in r] for r in self.matrix]})"


# Subalgebras ----------------------------------------------------------------

class SubalgebraBasis:
    """Span of ``vectors`` inside ``ambient``, checked to be a unital subalgebra.

    ``algebra`` is the induced CommutativeAlgebra in the given basis.
    """

    def __init__(self, ambient, vectors, labels=None):
        self.ambient = ambient
        self.vectors = [v if isinstance(v, AlgebraElement) else AlgebraElement(ambient, v)
                        for v in vectors]
        self.labels = list(labels) if labels is not None else list(range(len(self.vectors)))
        k = len(self.vectors)
        # rref of [B | I] gives coordinates: v = sum_r v[pivot_r] * T_r . B
        aug = [list(v.coords) + [Fraction(int(i == j)) for j in range(k)]
               for i, v in enumerate(self.vectors)]
        red, pivots = rref(aug, ambient.dim)
        if len(pivots) != k:
            raise AlgebraError("subalgebra basis vectors are linearly dependent")
        self._red = [(p, row[: ambient.dim], row[ambient.dim:]) for row, p in zip(red, pivots)]
        self.dim = k
        unit = self.coordinates(ambient.one())
        products = {}
        for i in range(k):
            for j in range(i, k):
                c = self.coordinates(self.vectors[i] * self.vectors[j])
                products[(i, j)] = tuple((r, x) for r, x in enumerate(c) if x)
        self.algebra = CommutativeAlgebra(k, products, unit, name="sub", validate=k <= 16)
        self.algebra.subalgebra = self

    def coordinates(self, v):
        if isinstance(v, AlgebraElement):
            v = v.coords
        out = [Fraction(0)] * self.dim
        residual = list(v)
        for p, row, t in self._red:
            c = residual[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        residual[j] -= c * x
                for j, x in enumerate(t):
                    if x:
                        out[j] += c * x
        if any(residual):
            raise NotInSubalgebra("vector lies outside the subalgebra")
        return tuple(out)

    def contains(self, v):
        try:
            self.coordinates(v)
        except NotInSubalgebra:
            return False
        return True

    def embed(self, coords):
        out = [Fraction(0)] * self.ambient.dim
        for c, v in zip(coords, self.vectors):
            if c:
                for j, x in enumerate(v.coords):
                    if x:
                        out[j] += c * x
        return AlgebraElement(self.ambient, out)

    def __len__(self):
        return self.dim


def _distinct_permutations(ms):
    return sorted(set(permutations(ms)))


def _symmetrized(ambient, groups):
    """Sum over distinct orderings within each group of index tuples, concatenated."""
    coords = [Fraction(0)] * ambient.dim
    for parts in product(*[_distinct_permutations(g) for g in groups]):
        coords[ambient.tuple_index(sum(parts, ()))] += 1
    return AlgebraElement(ambient, coords)


def symmetric_power(A, n, cap=DEFAULT_CAP):
    """S^n A: symmetrized basis tensors (no 1/n! factor), one per size-n multiset."""
    if n < 1:
        raise AlgebraError("symmetric power needs n >= 1")
    if n == 1:
        return SubalgebraBasis(A, A.basis(), labels=[(i,) for i in range(A.dim)])
    amb = TensorPowerAlgebra(A, n, cap)
    labels = list(combinations_with_replacement(range(A.dim), n))
    vecs = [_symmetrized(amb, [ms]) for ms in labels]
    return SubalgebraBasis(amb, vecs, labels=labels)


def sym_tensor_power(A, p, q, cap=DEFAULT_CAP):
    """S^p A (x) S^q A inside A^{(x)(p+q)}, labelled by pairs of multisets."""
    if p < 0 or q < 0 or p + q < 1:
        raise AlgebraError("need p, q >= 0 with p + q >= 1")
    amb = TensorPowerAlgebra(A, p + q, cap)
    labels = [(P, Q) for P in combinations_with_replacement(range(A.dim), p)
              for Q in combinations_with_replacement(range(A.dim), q)]
    vecs = [_symmetrized(amb, [P, Q]) for P, Q in labels]
    return SubalgebraBasis(amb, vecs, labels=labels)


def mu_last_arguments(u, p, q):
    """Multiply slot p (last of the p-group) with slot p+q (last of the q-group).

    ``u`` lives in A^{(x)(p+q)}; the result lives in A^{(x)(p+q-1)} with slot
    order (p-1 slots, q-1 slots, product slot).  Applied to a symmetrized
    tensor this automatically sums over every choice of "last argument".
    """
    if p < 1 or q < 1:
        raise AlgebraError("mu needs p, q >= 1")
    amb = u.algebra
    if not isinstance(amb, TensorPowerAlgebra) or amb.n != p + q:
        raise AlgebraError("u must lie in A^(x)(p+q)")
    A = amb.base
    target = TensorPowerAlgebra(A, p + q - 1, cap=max(DEFAULT_CAP, A.dim ** (p + q - 1)))
    out = [Fraction(0)] * target.dim
    for idx, c in enumerate(u.coords):
        if not c:
            continue
        t = amb.index_tuple(idx)
        head = t[: p - 1] + t[p: p + q - 1]
        for k, ck in A.basis_product(t[p - 1], t[p + q - 1]):
            out[target.tuple_index(head + (k,))] += c * ck
    return AlgebraElement(target, out)


def sym_pq_power(A, p, q, cap=DEFAULT_CAP):
    """S^{p|q}A = {u in S^pA (x) S^qA : mu(u) in S^{p-1}A (x) S^{q-1}A (x) 1}."""
    if p < 1 or q < 1:
        raise AlgebraError("S^{p|q} needs p, q >= 1")
    if A.dim ** (p + q) > cap:
        raise CapExceeded(f"dim(A)^(p+q) = {A.dim ** (p + q)} exceeds cap {cap}")
    big = sym_tensor_power(A, p, q, cap)
    m = A.dim
    unit = A.unit_coords
    r0 = next(i for i, x in enumerate(unit) if x != 0)
    images = [mu_last_arguments(v, p, q).coords for v in big.vectors]
    n_prefix = m ** (p + q - 2)
    equations = []
    for pre in range(n_prefix):
        for k in range(m):
            if k == r0:
                continue
            # trailing vector v must satisfy v[k] * unit[r0] - v[r0] * unit[k] = 0
            row = [img[pre * m + k] * unit[r0] - img[pre * m + r0] * unit[k] for img in images]
            if any(row):
                equations.append(row)
    kernel = nullspace(equations, len(images)) if equations else [
        [Fraction(int(i == j)) for j in range(len(images))] for i in range(len(images))]
    vecs = [big.embed(v) for v in kernel]
    sub = SubalgebraBasis(big.ambient, vecs)
    if not sub.contains(big.ambient.one()):
        raise AlgebraError("computed S^{p|q} does not contain the unit")
    sub.parent = big
    sub.p, sub.q = p, q
    return sub


# Homomorphisms --------------------------------------------------------------

def is_homomorphism(f):
    A = f.source
    if f.unit_value() != f.target_one():
        return False
    basis = A.basis()
    images = [f(e) for e in basis]
    for i in range(A.dim):
        for j in range(i, A.dim):
            if f(basis[i] * basis[j]) != images[i] * images[j]:
                return False
    return True


def is_function_algebra_form(A):
    """Complete set of orthogonal idempotents as basis, unit = sum of them."""
    for i in range(A.dim):
        for j in range(i, A.dim):
            want = ((i, Fraction(1)),) if i == j else ()
            if A.basis_product(i, j) != want:
                return False
    return all(u == 1 for u in A.unit_coords)


def enumerate_homomorphisms(A):
    """All algebra homomorphisms A -> Q for A with an idempotent basis.

    Each f(e_i) is a root of t^2 = t; orthogonality forces f(e_i) f(e_j) = 0
    and the unit forces sum f(e_i) = 1.  Solutions are found by backtracking.
    """
    if not is_function_algebra_form(A):
        raise AlgebraError("homomorphism enumeration needs a split semisimple "
                           "algebra presented by orthogonal idempotents")
    found = []

    def extend(values):
        i = len(values)
        if i == A.dim:
            if sum(values) == 1:
                found.append(LinearMap.functional(A, values))
            return
        for t in (Fraction(0), Fraction(1)):
            if t == 1 and any(values):
                continue  # e_i e_j = 0 forces f(e_i) f(e_j) = 0
            extend(values + [t])

    extend([])
    return [f for f in found if is_homomorphism(f)]


def tensor_point_evaluation(sub, point):
    """Evaluate elements of a subalgebra of C(X)^{(x)n} at a point of X^n.

    ``point`` is a tuple of basis indices of C(X); the result is a functional
    on ``sub.algebra``.
    """
    amb = sub.ambient
    idx = amb.tuple_index(tuple(point)) if isinstance(amb, TensorPowerAlgebra) else point[0]
    return LinearMap.functional(sub.algebra, [v.coords[idx] for v in sub.vectors])


def dim_symmetric_power(m, n):
    return comb(m + n - 1, n)
