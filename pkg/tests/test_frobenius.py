from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from conftest import long_division, rationals
from frobhom.algebras import (FiniteSpace, LinearMap, function_algebra, is_homomorphism,
                              sym_pq_power, symmetric_power, tensor_point_evaluation,
                              truncated_polynomial_algebra)
from frobhom.exact import FormalSeries
from frobhom.frobenius import (ClassificationError, HomType, PointConfiguration, br_lift,
                               char_series, classify, diagonal_phi_identity_check,
                               essential_coordinates, ev_functional, f_berezinian,
                               frobenius_phi, functional_from_representation, grid_size,
                               identity_grid, is_n_homomorphism, is_pq_homomorphism, moments,
                               newton_psi, pq_hom_from_sym_hom, psi_star, recover_configuration,
                               simplex_lattice)
from frobhom.superlinalg import SuperMatrix

F = Fraction


def C(m):
    return function_algebra(FiniteSpace(tuple(f"x{i}" for i in range(1, m + 1))))


def ev(A, *values):
    return LinearMap.functional(A, values)


A2 = C(2)
F_SUM = ev(A2, 1, 1)
F_DIFF = ev(A2, 1, -1)


def test_frobenius_phi_examples():
    a = A2.element([1, 2])
    assert frobenius_phi(F_SUM, [a, a]) == 4
    assert frobenius_phi(F_SUM, [A2.one()]) == 2
    assert frobenius_phi(F_SUM, [a, a, a]) == 0


def test_newton_psi_examples():
    assert newton_psi([2, 3], 1) == 3
    assert newton_psi([2, 3, 5], 2) == 2
    assert newton_psi([2, 3, 5, 9], 3) == 0
    assert newton_psi([2], 0) == 1
    with pytest.raises(ValueError):
        newton_psi([2, 3], 2)


def test_char_series_examples():
    a = A2.element([1, 2])
    assert char_series(F_SUM, a, 4).series.coeffs == (1, 3, 2, 0, 0)
    assert list(char_series(F_DIFF, a, 3).series.coeffs) == long_division([1, 1], [1, 2], 3)
    ev1 = ev(A2, 1, 0)
    assert char_series(ev1, A2.element([5, 7]), 4).series.coeffs == (1, 5, 0, 0, 0)


def test_char_series_reconstructs_with_chi():
    cf = char_series(F_DIFF, A2.element([1, 2]), 8)
    R = cf.reconstruct(3, 3)
    assert R.type == (1, 1) and cf.chi == 0


def test_diagonal_phi_identity():
    a = A2.element([1, 2])
    assert diagonal_phi_identity_check(F_SUM, a, 2)
    assert diagonal_phi_identity_check(F_SUM, a, 1)


@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3),
       st.integers(1, 5))
def test_diagonal_identity_on_local_algebra(fv, av, k):
    A = truncated_polynomial_algebra(3)
    assert diagonal_phi_identity_check(LinearMap.functional(A, fv), A.element(av), k)


@given(st.lists(st.lists(rationals, min_size=2, max_size=2), min_size=2, max_size=4),
       st.lists(rationals, min_size=2, max_size=2))
def test_phi_is_symmetric(args, fv):
    A = truncated_polynomial_algebra(2)
    f = LinearMap.functional(A, fv)
    elems = [A.element(v) for v in args]
    values = {frobenius_phi(f, list(p)) for p in permutations(elems)}
    assert len(values) == 1


def test_is_n_homomorphism_examples():
    assert is_n_homomorphism(F_SUM, 2).ok
    assert is_n_homomorphism(ev(A2, 1, 0), 1).ok
    assert is_n_homomorphism(ev(A2, 2, 0), 2).ok
    res = is_n_homomorphism(F_SUM, 1)
    assert not res.ok and res.witness["reason"] == "f(1) != n"
    res = is_n_homomorphism(ev(C(3), 1, 1, 0), 3)
    assert not res.ok


def test_is_pq_homomorphism_examples():
    assert is_pq_homomorphism(F_DIFF, 1, 1).pq == (1, 1)
    assert is_pq_homomorphism(F_SUM, 2, 0).ok
    f = ev(C(3), 1, 1, -1)
    assert is_pq_homomorphism(f, 2, 1).ok
    res = is_pq_homomorphism(f, 1, 0)
    assert not res.ok and "k" in res.witness and res.witness["value"] != 0


def test_classify_examples():
    assert classify(F_SUM) == HomType.n_hom(2)
    assert classify(F_DIFF) == HomType.pq_hom(1, 1)
    assert str(classify(F_DIFF)) == "pq-homomorphism (1,1)"
    res = classify(ev(A2, F(1, 2), 0))
    assert not res.ok and str(res) == "not-classified"
    assert classify(ev(C(2), 2, -1)).pq == (2, 1)
    assert classify(ev(A2, 0, 0)).pq == (0, 0)


def test_classify_outside_bounds_is_unclassified():
    assert not classify(ev(C(2), 3, -2), p_max=2, q_max=2).ok


def test_classify_non_function_algebra():
    # the unit evaluation t -> 0 on Q[t]/(t^2) is a homomorphism; twice it is a 2-hom
    A = truncated_polynomial_algebra(2)
    assert classify(LinearMap.functional(A, [2, 0])).n == 2
    # f(1) = 1, f(t) = 1 is not multiplicative: f(t^2) = 0 != 1
    assert classify(LinearMap.functional(A, [1, 1]), 3, 3).kind == "unclassified"


def test_identity_grid_is_simplex_lattice():
    pts = list(simplex_lattice(2, 3))
    assert len(pts) == 10 == grid_size(3, 3)
    grid = list(identity_grid([0, 2], 3, 2))
    assert len(grid) == 3 and all(p[0] == 1 and p[1] == 0 for p in grid)


def test_essential_coordinates_drop_kernel_ideal():
    f = ev(C(4), 1, 0, -1, 0)
    assert essential_coordinates(f) == [0, 2]


def test_f_berezinian_examples():
    assert f_berezinian(F_DIFF, A2.element([2, 3])) == F(2, 3)
    ev1 = ev(A2, 1, 0)
    assert f_berezinian(ev1, A2.element([5, 7])) == 5
    a1, a2 = A2.element([2, 1]), A2.element([1, 3])
    assert f_berezinian(F_DIFF, a1 * a2) == F(2, 3) == f_berezinian(F_DIFF, a1) * f_berezinian(F_DIFF, a2)
    with pytest.raises(ZeroDivisionError):
        f_berezinian(F_DIFF, A2.element([0, 3]))


def test_psi_star_examples():
    a = A2.element([1, 2])
    assert psi_star(F_SUM, a, 2) == 2
    assert psi_star(F_SUM, a, 1) == 3
    assert psi_star(F_SUM, a, 0) == 1
    with pytest.raises(ValueError):
        psi_star(F_SUM, a, 3)


def test_br_lift_examples():
    S = symmetric_power(A2, 2)  # labels (0,0), (0,1), (1,1)
    lift = br_lift(ev(A2, 2, 0), 2, S)
    assert lift.matrix == ((1, 0, 0),)
    lift = br_lift(F_SUM, 2, S)
    assert lift.matrix == ((0, 1, 0),)
    assert is_homomorphism(lift)
    one = br_lift(ev(A2, 0, 1), 1)
    assert one.matrix == ((0, 1),)
    with pytest.raises(ClassificationError):
        br_lift(F_DIFF, 2)


def test_pq_hom_from_sym_hom_examples():
    S = sym_pq_power(A2, 1, 1)
    assert pq_hom_from_sym_hom(tensor_point_evaluation(S, (0, 1)), 1, 1).matrix == ((1, -1),)
    assert pq_hom_from_sym_hom(tensor_point_evaluation(S, (0, 0)), 1, 1).matrix == ((0, 0),)
    S2 = symmetric_power(A2, 2)
    h = tensor_point_evaluation(S2, (0, 1))
    assert pq_hom_from_sym_hom(h, 2, 0).matrix == ((1, 1),)


def test_point_configuration():
    X = FiniteSpace(("x1", "x2", "x3"))
    cfg = PointConfiguration.from_signed_points(X, ["x1", "x1", "x2"], ["x1", "x3"])
    assert cfg.as_dict() == {"x1": 1, "x2": 1, "x3": -1}
    assert (cfg.p, cfg.q, cfg.chi) == (2, 1, 1)
    assert classify(ev_functional(cfg)).pq == (2, 1)
    empty = PointConfiguration(X, {})
    assert ev_functional(empty).matrix == ((0, 0, 0),)
    with pytest.raises(ValueError):
        PointConfiguration(X, {"x9": 1})


def test_recover_configuration_examples():
    A = C(4)
    cfg = recover_configuration(ev(A, 2, -1, 0, 1))
    assert cfg.as_dict() == {"x1": 2, "x2": -1, "x4": 1} and (cfg.p, cfg.q) == (3, 1)
    assert recover_configuration(F_SUM).as_dict() == {"x1": 1, "x2": 1}
    assert recover_configuration(ev(A2, F(1, 2), 0)) is None


def test_functional_from_representation_examples():
    rho = [SuperMatrix.diagonal([1], [0]), SuperMatrix.diagonal([0], [1])]
    f = functional_from_representation(A2, rho)
    assert f.matrix == ((1, -1),)
    a = A2.element([2, 5])
    assert list(char_series(f, a, 5).series.coeffs) == long_division([1, 2], [1, 5], 5)
    f2 = functional_from_representation(A2, [SuperMatrix.diagonal([1, 0], []),
                                             SuperMatrix.diagonal([0, 1], [])])
    assert f2.matrix == ((1, 1),)
    bad = [SuperMatrix.diagonal([1], [1]), SuperMatrix.diagonal([1], [0])]
    with pytest.raises(Exception):
        functional_from_representation(A2, bad)


def test_moments_start_with_unit_value():
    assert moments(F_SUM, A2.element([1, 2]), 3) == [2, 3, 5, 9]
