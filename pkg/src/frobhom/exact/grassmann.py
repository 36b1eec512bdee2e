"""Grassmann algebra over Q on at most 16 anticommuting generators.

Monomials are bitmasks; bit ``i`` stands for the generator xi_{i+1}.
"""

from fractions import Fraction
from functools import lru_cache

from .ring import is_scalar

MAX_GENERATORS = 16


@lru_cache(maxsize=None)
def _reorder_sign(a, b):
    """Sign of moving the generators of ``b`` past those of ``a`` (a & b == 0)."""
    swaps = 0
    bb = b
    while bb:
        low = bb & -bb
        j = low.bit_length() - 1
        swaps += bin(a >> (j + 1)).count("1")
        bb ^= low
    return -1 if swaps & 1 else 1


class GrassmannElement:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n, terms=None):
        if not 0 <= n <= MAX_GENERATORS:
            raise ValueError(f"generator count {n} outside 0..{MAX_GENERATORS}")
        self.n = n
        clean = {}
        limit = 1 << n
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise ValueError(f"monomial {mask:b} uses a generator beyond xi_{n}")
            c = Fraction(c)
            if c != 0:
                clean[mask] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def scalar(cls, n, value):
        return cls(n, {0: value})

    @classmethod
    def generator(cls, n, i):
        """The generator xi_i, 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} outside 1..{n}")
        return cls(n, {1 << (i - 1): 1})

    @classmethod
    def monomial(cls, n, indices, coeff=1):
        """coeff * xi_{i1} xi_{i2} ... in the given order (sign applied)."""
        out = cls.scalar(n, coeff)
        for i in indices:
            out = out * cls.generator(n, i)
        return out

    # ring plumbing
    def ring_key(self):
        return ("grassmann", self.n)

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            if other.n != self.n:
                raise ValueError(
                    f"mismatched generator counts: {self.n} vs {other.n}")
            return other
        if is_scalar(other):
            return GrassmannElement(self.n, {0: other})
        return NotImplemented

    @property
    def body(self):
        return self.terms.get(0, Fraction(0))

    def soul(self):
        return GrassmannElement(self.n, {m: c for m, c in self.terms.items() if m})

    def parity(self):
        """0/1 for homogeneous elements, None for zero; ValueError if mixed."""
        ps = {bin(m).count("1") & 1 for m in self.terms}
        if not ps:
            return None
        if len(ps) > 1:
            raise ValueError("inhomogeneous Grassmann element has no parity")
        return ps.pop()

    def is_even(self):
        return all(bin(m).count("1") % 2 == 0 for m in self.terms)

    def is_unit(self):
        return self.body != 0

    def inverse(self):
        b = self.body
        if b == 0:
            raise ZeroDivisionError("Grassmann element with zero body is not invertible")
        # x = b (1 + s) with s nilpotent: x^-1 = b^-1 sum (-s)^k, s^(n+1) = 0
        s = self.soul() * (1 / b)
        term = GrassmannElement.scalar(self.n, 1)
        total = term
        for _ in range(self.n):
            term = term * (-s)
            if not term.terms:
                break
            total = total + term
        return total * (1 / b)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return GrassmannElement(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            return GrassmannElement(self.n, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                if ma & mb:
                    continue
                m = ma | mb
                out[m] = out.get(m, 0) + _reorder_sign(ma, mb) * ca * cb
        return GrassmannElement(self.n, out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / Fraction(other))
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if is_scalar(other):
            return self.terms == ({0: Fraction(other)} if other != 0 else {})
        if isinstance(other, GrassmannElement):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (bin(m).count("1"), m)):
            gens = "".join(f"x{i + 1}" for i in range(self.n) if m >> i & 1)
            c = self.terms[m]
            parts.append(f"{c}" if not gens else (gens if c == 1 else f"{c}*{gens}"))
        return " + ".join(parts)


def grassmann_mul(x, y):
    return x * y


def grassmann_inverse(x):
    return x.inverse()
