"""Pade reconstruction of rational functions from truncated series over Q."""

from dataclasses import dataclass
from fractions import Fraction

from .matrix import solve
from .poly import Polynomial, RationalFunction
from .series import FormalSeries


class PadeError(ArithmeticError):
    """No denominator with D(0) = 1 solves the Pade system."""


@dataclass(frozen=True)
class PadeResult:
    function: RationalFunction
    consistent: bool  # D*s == N through the full truncation order
    order: int
    residual_index: int | None = None  # first z^k where D*s - N is nonzero


def _denominator(c, p, q):
    """d_0..d_q with d_0 = 1 killing z^(p+1) .. z^(p+q) of D*s, or None."""
    def coef(i):
        return c[i] if i >= 0 else Fraction(0)

    # try q' = 0, 1, ..., q so that ties keep the highest d's at zero
    for qq in range(q + 1):
        rows = [[coef(i - j) for j in range(1, qq + 1)] for i in range(p + 1, p + q + 1)]
        rhs = [-coef(i) for i in range(p + 1, p + q + 1)]
        sol = solve(rows, rhs) if qq else ([] if all(r == 0 for r in rhs) else None)
        if sol is not None:
            return [Fraction(1)] + sol + [Fraction(0)] * (q - qq)
    return None


def _product_coeff(c, d, i):
    return sum((d[j] * c[i - j] for j in range(len(d)) if i - j >= 0), Fraction(0))


def _check(s, p, q):
    if p < 0 or q < 0:
        raise ValueError("degrees must be non-negative")
    if s.order < p + q:
        raise ValueError(f"[{p}/{q}] Pade needs truncation order >= {p + q}, got {s.order}")
    if s[0] != 1:
        raise ValueError("Pade reconstruction expects constant term 1")


def pade_reconstruct(s: FormalSeries, p: int, q: int) -> PadeResult:
    _check(s, p, q)
    c = s.coeffs
    d = _denominator(c, p, q)
    if d is None:
        raise PadeError(f"no [{p}/{q}] Pade denominator with D(0) = 1")
    num = Polynomial([_product_coeff(c, d, i) for i in range(p + 1)])
    residual = next((i for i in range(p + 1, s.order + 1) if _product_coeff(c, d, i) != 0), None)
    return PadeResult(RationalFunction(num, Polynomial(d)), residual is None, s.order, residual)


def minimal_rational_type(s: FormalSeries, p_max: int, q_max: int):
    """Smallest q, then smallest p, whose Pade fit holds through the whole series."""
    # every candidate [p/q] must leave at least one coefficient to check
    if s.order < p_max + q_max + 1:
        raise ValueError(
            f"need truncation order >= {p_max + q_max + 1} for bounds ({p_max}, {q_max})")
    _check(s, 0, 0)
    c = s.coeffs
    for q in range(q_max + 1):
        for p in range(p_max + 1):
            d = _denominator(c, p, q)
            if d is not None and all(_product_coeff(c, d, i) == 0
                                     for i in range(p + 1, s.order + 1)):
                return p, q
    return None
