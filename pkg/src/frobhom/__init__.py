"""Exact computations with n-homomorphisms, p|q-homomorphisms and the
Berezinian of even supermatrices."""

from .algebras import (AlgebraElement, CommutativeAlgebra, FiniteSpace, LinearMap,
                       enumerate_homomorphisms, function_algebra, is_homomorphism,
                       sym_pq_power, symmetric_power, tensor_point_evaluation,
                       truncated_polynomial_algebra)
from .frobenius import (HomType, PointConfiguration, br_lift, char_series, classify,
                        ev_functional, f_berezinian, frobenius_phi, functional_from_representation,
                        is_n_homomorphism, is_pq_homomorphism, newton_psi, pq_hom_from_sym_hom,
                        psi_star, recover_configuration)
from .superlinalg import (SuperMatrix, ber_via_hankel, berezinian_block, char_function_series,
                          hankel_recurrence_check, liouville_check, supertrace)

__version__ = "0.1.0"
