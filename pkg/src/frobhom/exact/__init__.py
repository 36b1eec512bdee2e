from .grassmann import GrassmannElement, grassmann_inverse, grassmann_mul
from .matrix import (DenseMatrix, SingularMatrixError, bareiss_det, hankel_det,
                     hankel_matrix, laplace_det, matrix_inverse, nullspace, rank,
                     rref, solve)
from .pade import PadeError, PadeResult, minimal_rational_type, pade_reconstruct
from .poly import Polynomial, RationalFunction, poly_gcd
from .series import FormalSeries, SeriesError, log1p_series, series_arith
from .serialize import format_grassmann, format_rational, parse_grassmann, parse_rational

__all__ = [
    "DenseMatrix", "FormalSeries", "GrassmannElement", "PadeError", "PadeResult",
    "Polynomial", "RationalFunction", "SeriesError", "SingularMatrixError",
    "bareiss_det", "format_grassmann", "format_rational", "grassmann_inverse", "grassmann_mul",
    "hankel_det", "hankel_matrix", "laplace_det", "log1p_series", "matrix_inverse",
    "minimal_rational_type", "nullspace", "pade_reconstruct", "parse_grassmann", "parse_rational",
    "poly_gcd", "rank", "rref", "series_arith", "solve",
]
