"""String forms for exact values used by the interchange files."""

import re
from fractions import Fraction

from .grassmann import GrassmannElement

_RATIONAL = re.compile(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*")


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        if not _RATIONAL.fullmatch(s):
            raise ValueError(f"not a rational 'p/q': {s!r}")
        return Fraction(s.replace(" ", ""))
    raise ValueError(f"rationals are serialized as strings 'p/q', got {s!r}")


def format_grassmann(x):
    """List of {generators: [1-based indices, increasing], coeff: "p/q"}."""
    out = []
    for mask in sorted(x.terms, key=lambda m: (bin(m).count("1"), m)):
        gens = [i + 1 for i in range(x.n) if mask >> i & 1]
        out.append({"generators": gens, "coeff": format_rational(x.terms[mask])})
    return out


def parse_grassmann(terms, n):
    out = GrassmannElement(n)
    for t in terms:
        try:
            gens, coeff = t["generators"], t["coeff"]
        except (KeyError, TypeError):
            raise ValueError(f"Grassmann term needs generators and coeff: {t!r}") from None
        if any(not isinstance(g, int) or not 1 <= g <= n for g in gens):
            raise ValueError(f"generator indices must lie in 1..{n}: {gens!r}")
        out = out + GrassmannElement.monomial(n, gens, parse_rational(coeff))
    return out
