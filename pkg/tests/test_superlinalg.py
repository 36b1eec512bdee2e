from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import cofactor_det, long_division, rationals
from frobhom.exact import FormalSeries, GrassmannElement
from frobhom.superlinalg import (DualPathMismatch, IndeterminateError, SuperMatrix,
                                 SuperMatrixError, ber_via_hankel, berezinian_block,
                                 char_function_series, char_series_via_block,
                                 char_series_via_log, diagonal_oracle, hankel_recurrence_check,
                                 liouville_check, ratio_formula_is_experimental, supertrace)
from frobhom.suites import case_rng, random_supermatrix

F = Fraction
D23 = SuperMatrix.diagonal([2], [3])


def g(n, *gens, c=1):
    return GrassmannElement.monomial(n, gens, c)


def one(n, c=1):
    return GrassmannElement.scalar(n, c)


def test_supertrace_examples():
    assert supertrace(D23) == -1
    assert supertrace(SuperMatrix.identity(3, 2)) == 1


def test_supertrace_is_cyclic_over_grassmann():
    rng = case_rng(0, "str-cyclic")
    for _ in range(10):
        M, N = random_supermatrix(rng, 2, 1, 4), random_supermatrix(rng, 2, 1, 4)
        assert supertrace(M @ N) == supertrace(N @ M)


def test_berezinian_examples():
    assert berezinian_block(D23) == F(2, 3)
    M = SuperMatrix(1, 1, [[one(2), g(2, 1)], [g(2, 2), one(2)]])
    assert berezinian_block(M) == one(2) - g(2, 1, 2)
    assert berezinian_block(SuperMatrix.identity(2, 2)) == 1


def test_parity_policy():
    with pytest.raises(SuperMatrixError):
        SuperMatrix(1, 1, [[1, 1], [0, 1]])  # rational odd block
    with pytest.raises(SuperMatrixError):
        SuperMatrix(1, 1, [[g(2, 1), 0], [0, 1]])  # odd entry on the diagonal


def test_singular_a11_raises():
    with pytest.raises(ZeroDivisionError):
        berezinian_block(SuperMatrix.diagonal([1], [0]))


def test_char_function_series_examples():
    assert char_function_series(D23, 5) == long_division([1, 2], [1, 3], 5)
    assert char_function_series(SuperMatrix.identity(1, 1), 4) == [1, 0, 0, 0, 0]
    assert char_function_series(SuperMatrix.diagonal([1, 2], []), 4) == [1, 3, 2, 0, 0]


def test_dual_paths_are_independent_and_agree():
    rng = case_rng(0, "dual")
    for p, q in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        M = random_supermatrix(rng, p, q, 3)
        assert char_series_via_log(M, 6) == char_series_via_block(M, 6)


def test_dual_path_mismatch_is_reported(monkeypatch):
    import frobhom.superlinalg as sl

    monkeypatch.setattr(sl, "char_series_via_block",
                        lambda M, N: FormalSeries([1] + [0] * N, N))
    with pytest.raises(DualPathMismatch, match="z\\^1"):
        sl.char_function_series(D23, 3)


def test_hankel_recurrence_examples():
    rep = hankel_recurrence_check(D23, 5)
    assert rep.ok and rep.entries[0][:2] == (1, 0)
    assert rep.sharpness == [(0, 2)]
    rep = hankel_recurrence_check(SuperMatrix.diagonal([2, 5, 7], []), 6)
    assert rep.ok and [k for k, _, _ in rep.entries] == [4, 5, 6]


def test_hankel_recurrence_random_grassmann_22():
    rng = case_rng(0, "hankel22")
    for _ in range(3):
        assert hankel_recurrence_check(random_supermatrix(rng, 2, 2, 4), 4).ok


def test_ber_via_hankel_examples():
    assert ber_via_hankel(D23) == F(2, 3)
    M = SuperMatrix.diagonal([2, 3], [])
    assert ber_via_hankel(M) == 6 == cofactor_det([[2, 0], [0, 3]])
    rng = case_rng(0, "ratio11")
    for _ in range(5):
        M = random_supermatrix(rng, 1, 1, 2)
        assert ber_via_hankel(M) == berezinian_block(M)


def test_ber_via_hankel_indeterminate():
    with pytest.raises(IndeterminateError):
        ber_via_hankel(SuperMatrix.identity(1, 1))


def test_ratio_formula_experimental_flag():
    M = SuperMatrix.diagonal([2], [3, 5])
    assert ratio_formula_is_experimental(M)
    assert ber_via_hankel(M) == F(2, 15)


def test_liouville_examples():
    rep = liouville_check(D23, 6)
    assert rep.ok and rep.lhs == FormalSeries([0, -1], 6).exp()
    upper = SuperMatrix(2, 1, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    rep = liouville_check(upper, 4)
    assert rep.ok and rep.rhs == FormalSeries([1], 4)


@given(st.lists(rationals, min_size=8, max_size=8))
def test_liouville_random_22_rational(v):
    M = SuperMatrix(2, 2, [[v[0], v[1], 0, 0], [v[2], v[3], 0, 0],
                           [0, 0, v[4], v[5]], [0, 0, v[6], v[7]]])
    assert liouville_check(M, 8).ok


def test_diagonal_oracle_examples():
    assert diagonal_oracle([2], [3], 3) == [1, -1, 3, -9]
    assert diagonal_oracle([1, 2], [], 3) == [1, 3, 2, 0]
    assert diagonal_oracle([], [], 2) == [1, 0, 0]


@given(st.lists(rationals, max_size=3), st.lists(rationals, max_size=2))
def test_oracle_agrees_with_char_function(lams, mus):
    if not lams and not mus:
        return
    M = SuperMatrix.diagonal(lams, mus)
    assert char_function_series(M, 6) == diagonal_oracle(lams, mus, 6)


def test_multiplicativity_random_grassmann():
    rng = case_rng(0, "mult")
    for p, q in [(1, 1), (2, 1), (2, 2)]:
        M, N = random_supermatrix(rng, p, q, 4), random_supermatrix(rng, p, q, 4)
        assert berezinian_block(M @ N) == berezinian_block(M) * berezinian_block(N)
