"""Dense univariate polynomials and reduced rational functions over Q."""

from fractions import Fraction

from .ring import as_rational
from .series import FormalSeries


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [as_rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_roots_of_linear_factors(cls, values):
        """prod (1 + v z) over ``values``."""
        out = cls([1])
        for v in values:
            out = out * cls([1, v])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        lead = other.lead
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + other.degree] / lead
            q[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(q), Polynomial(rem)

    def monic(self):
        return Polynomial([c / self.lead for c in self.coeffs]) if self.coeffs else self

    def series(self, order):
        return FormalSeries(self.coeffs[: order + 1], order)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if k == 0 else f"{c}*z" if k == 1 else f"{c}*z^{k}")
        return " + ".join(terms)


def _poly(x):
    return x if isinstance(x, Polynomial) else Polynomial([x])


def poly_gcd(a, b):
    """Monic gcd over Q (the zero polynomial if both are zero)."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """numerator / denominator in lowest terms with denominator(0) == 1."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        num = _poly(numerator)
        den = _poly(1 if denominator is None else denominator)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if not num.is_zero() else den.monic()
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        c0 = den[0]
        if c0 == 0:
            raise ValueError("denominator vanishes at z = 0; no expansion at zero")
        if num.is_zero():
            den = Polynomial([1])
        else:
            num = Polynomial([c / c0 for c in num.coeffs])
            den = Polynomial([c / c0 for c in den.coeffs])
        self.numerator = num
        self.denominator = den

    @property
    def type(self):
        """(deg numerator, deg denominator)."""
        return max(self.numerator.degree, 0), self.denominator.degree

    def series(self, order):
        return self.numerator.series(order) * self.denominator.series(order).inverse()

    def leading_ratio(self):
        return self.numerator.lead / self.denominator.lead

    def expansion_at_infinity(self, count):
        """Coefficients of z^chi, z^(chi-1), ... for ``count`` terms, chi = p - q."""
        rev_num = Polynomial(reversed(self.numerator.coeffs))
        rev_den = Polynomial(reversed(self.denominator.coeffs))
        # num(z)/den(z) = z^(p-q) * rev_num(w)/rev_den(w) with w = 1/z
        s = rev_num.series(count - 1) * rev_den.series(count - 1).inverse()
        return list(s.coeffs)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.numerator == other.numerator and self.denominator == other.denominator
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self):
        return f"({self.numerator}) / ({self.denominator})"
