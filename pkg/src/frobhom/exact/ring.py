"""Duck-typed helpers shared by every coefficient ring.

Plain ``int`` 0 and 1 act as the zero and unit of every ring used here;
the ring classes (Grassmann elements, truncated series, algebra elements)
accept Python numbers on either side of ``+``, ``-`` and ``*``.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC


def is_scalar(x):
    return isinstance(x, _RationalABC)


def as_rational(x):
    """Coerce ints and Fractions to Fraction; pass ring elements through."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return x


def is_unit(x):
    if is_scalar(x):
        return x != 0
    return x.is_unit()


def inverse(x):
    if is_scalar(x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / Fraction(x)
    return x.inverse()


def is_domain_element(x):
    """True for elements of Q (the only integral domain used here)."""
    return is_scalar(x)


def ring_key(x):
    """Hashable description of the ring ``x`` lives in; numbers embed everywhere."""
    if is_scalar(x):
        return None
    return x.ring_key()


def common_ring(values):
    """Return the single ring key shared by ``values`` or raise ValueError."""
    key = None
    for v in values:
        k = ring_key(v)
        if k is None:
            continue
        if key is None:
            key = k
        elif k != key:
            raise ValueError(f"mismatched coefficient rings: {key} vs {k}")
    return key


def parity(x):
    """0 for even, 1 for odd, None for zero (compatible with either)."""
    if is_scalar(x):
        return None if x == 0 else 0
    return x.parity()


def ring_sum(values, start=0):
    total = start
    for v in values:
        total = total + v
    return total
