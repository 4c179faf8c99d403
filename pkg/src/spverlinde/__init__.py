"""Exact computations around symplectic Verlinde fusion algebras.

The package constructs the fusion rings V(m, n) with integer structure
constants, their Frobenius data and augmentation-ideal completions, the
gcd-of-dimensions invariants governing those completions, and the twisted
string K-theory models of quaternionic projective spaces, pairing every
closed formula with an independent exact oracle.
"""

from .abelian import INF, AbelianPStructure
from .chebyshev import generating_identity_check, sigma, sym, sym_root_check
from .completion import (associated_graded, completion_rank_formula,
                         completion_structure_sp1, completion_tower_sp1,
                         delta, local_dimension_groebner)
from .cycfield import CycField, CycNumber, SingularMatrix, get_field, solve_exact
from .fusion import (FusionRing, NegativeFusion, NonIntegralFusion,
                     bent_character_poly, braun_douglas,
                     braun_douglas_closed_form, braun_douglas_via_sums,
                     build_fusion_ring, det_T, det_T_closed_form_sp1,
                     douglas_sum, fundamental_char_values, gamma_polynomials,
                     handle_operator, sp_labels)
from .groebner import GroebnerBasisFp, ResourceLimit, buchberger
from .intmatrix import det_bareiss, smith_normal_form, snf_diagonal
from .ktheory import (PathTable, QuotientRingZ, coproduct_values, epsilon,
                      euler_and_T, lhp_additive_path_table, lhp_ring,
                      omega_hp_ring, y_group_oracle, y_group_structure)
from .unipoly import cyclotomic_poly

__version__ = "0.1.0"

__all__ = [
    "AbelianPStructure", "INF",
    "CycField", "CycNumber", "SingularMatrix", "get_field", "solve_exact",
    "FusionRing", "NonIntegralFusion", "NegativeFusion",
    "GroebnerBasisFp", "ResourceLimit", "buchberger",
    "PathTable", "QuotientRingZ",
    "associated_graded", "bent_character_poly", "braun_douglas",
    "braun_douglas_closed_form", "braun_douglas_via_sums",
    "build_fusion_ring", "completion_rank_formula", "completion_structure_sp1",
    "completion_tower_sp1", "coproduct_values", "cyclotomic_poly", "delta",
    "det_T", "det_T_closed_form_sp1", "det_bareiss", "douglas_sum", "epsilon",
    "euler_and_T", "fundamental_char_values", "gamma_polynomials",
    "generating_identity_check", "handle_operator", "lhp_additive_path_table",
    "lhp_ring", "local_dimension_groebner", "omega_hp_ring", "sigma",
    "smith_normal_form", "snf_diagonal", "sp_labels", "sym", "sym_root_check",
    "y_group_oracle", "y_group_structure",
]
