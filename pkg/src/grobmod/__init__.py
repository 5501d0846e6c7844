"""grobmod: exact-arithmetic Groebner-basis engine, nilpotent chain-stratum
combinatorics and the banal local-ring reproduction suite."""

from .ring import (RingError, ParseError, FieldSpec, MonomialOrder,
                   RingContext, Monomial, Polynomial, compare_monomials,
                   leading_term, parse_polynomial, divide, substitute_linear,
                   parse_ring_decl)
from .groebner import (Ideal, GroebnerBasis, GroebnerCertificate,
                       BuchbergerCounterexample, ArtinianReport, s_polynomial,
                       verify_buchberger, buchberger_complete, initial_ideal,
                       ideal_member, intersect_ideals, regular_sequence_tail,
                       krull_dimension, artinian_analysis,
                       minimal_generator_count, localized_dimension)
from .matalg import (ExactMatrix, MatrixTuple, ActionSpec, rank, char_poly,
                     is_banal, matrix_log, matrix_exp, check_point_relations,
                     jacobian_rank_at, orbit_dimension_at)
from .strata import (StratumIndex, JordanType, enumerate_strata,
                     delta_invariant, stratum_type, count_type,
                     representative_point, orbit_census, eta_jordan_type)
from .papermodels import (ModelSpec, EigenvalueData, ShapeReport,
                          build_model_ideal, paper_points, run_paper_suite,
                          classify_banal_local_ring, r22_action, r121_action,
                          expected_orbit_dimensions, dimension_chain)

__version__ = "0.1.0"
