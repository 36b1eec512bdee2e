"""Truncated formal power series with coefficients in any exact ring.

A series of truncation order ``N`` stores coefficients of z^0..z^N, all of
which are exact.  Binary operations keep the smaller of the two orders, so
nothing past the exactly known range is ever produced.
"""

from fractions import Fraction

from .ring import as_rational, common_ring, inverse as ring_inverse, is_scalar, ring_key


class SeriesError(ArithmeticError):
    pass


class FormalSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        common_ring(coeffs)
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    @classmethod
    def variable(cls, order, scale=1):
        """The series ``scale * z``."""
        return cls([0, scale], order)

    def __getitem__(self, k):
        if k > self.order:
            raise IndexError(f"coefficient z^{k} lies beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def ring_key(self):
        return ("series", common_ring(self.coeffs))

    def parity(self):
        from .ring import parity
        ps = {parity(c) for c in self.coeffs} - {None}
        if len(ps) > 1:
            raise ValueError("series mixes even and odd coefficients")
        return ps.pop() if ps else None

    def is_unit(self):
        from .ring import is_unit
        return is_unit(self.coeffs[0])

    def truncate(self, order):
        return FormalSeries(self.coeffs[: order + 1], min(order, self.order))

    def map(self, fn):
        return FormalSeries([fn(c) for c in self.coeffs], self.order)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, FormalSeries):
            if ring_key(self) != ring_key(other):
                a, b = common_ring(self.coeffs), common_ring(other.coeffs)
                if a is not None and b is not None:
                    raise ValueError(f"mismatched coefficient rings: {a} vs {b}")
            return other
        return FormalSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return FormalSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            if is_scalar(other):
                return FormalSeries([c * other for c in self.coeffs], self.order)
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return FormalSeries(out, n)

    def __rmul__(self, other):
        if is_scalar(other):
            return self * other
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = FormalSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FormalSeries):
            return self.order == other.order and all(
                x == y for x, y in zip(self.coeffs, other.coeffs))
        if is_scalar(other) or ring_key(other) is not None:
            return self.coeffs[0] == other and all(c == 0 for c in self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"FormalSeries({list(self.coeffs)!r}, order={self.order})"

    # analytic operations
    def inverse(self):
        a0 = self.coeffs[0]
        try:
            inv0 = ring_inverse(a0)
        except ZeroDivisionError:
            raise SeriesError("series with non-invertible constant term has no inverse") from None
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = 0
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-(inv0 * acc))
        return FormalSeries(out, self.order)

    def exp(self):
        if self.coeffs[0] != 0:
            raise SeriesError("exp needs a series with zero constant term")
        s = self.coeffs
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if s[k] != 0:
                    acc = acc + s[k] * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return FormalSeries(out, self.order)

    def log(self):
        if self.coeffs[0] != 1:
            raise SeriesError("log needs a series with constant term 1")
        s = self.coeffs
        out = [Fraction(0)]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n):
                acc = acc + out[k] * s[n - k] * k
            out.append(s[n] - acc * Fraction(1, n))
        return FormalSeries(out, self.order)

    def substitute_az(self, a):
        """s(z) -> s(a z); ``a`` may be a number or any ring element."""
        out = []
        power = 1
        for c in self.coeffs:
            out.append(c * power)
            power = power * a
        return FormalSeries(out, self.order)


def log1p_series(order):
    """log(1 + z) truncated at ``order``."""
    return FormalSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, order + 1)], order)


def series_arith(kind, *operands, a_scalar=None):
    """Dispatch one of mul / inverse / exp / log / substitute_az."""
    if kind == "mul":
        if not operands:
            raise ValueError("mul needs at least one operand")
        out = operands[0]
        for s in operands[1:]:
            out = out * s
        return out
    if len(operands) != 1:
        raise ValueError(f"{kind} takes exactly one series")
    (s,) = operands
    if kind == "inverse":
        return s.inverse()
    if kind == "exp":
        return s.exp()
    if kind == "log":
        return s.log()
    if kind == "substitute_az":
        if a_scalar is None:
            raise ValueError("substitute_az needs a_scalar")
        return s.substitute_az(a_scalar)
    raise ValueError(f"unknown series operation {kind!r}")
