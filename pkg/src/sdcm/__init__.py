"""Workbench for finite posets of semidualizing-complex classes.

Models label each class with its Poincare series (an exact rational
generating function); curvature-weighted comparability edges induce a
taxi-cab metric that the checkers verify against the expected identities:
metric axioms, geodesic direct edges, bounds, duality isometry, trichotomy,
and the behaviour under base and cobase change.
"""

from .change_of_rings import (HomomorphismDescriptor, base_change,
                              check_mixed_distance, check_specialization,
                              cobase_change_model, cobase_ids, injcurv_phi,
                              load_phi, phi_from_dict, phi_to_dict)
from .duality import DaggerMap, build_dagger, check_fixed_points, check_isometry
from .errors import (AmbiguousComparison, DivisionByZeroSeries, InvalidRoute,
                     MapNotOrderPreserving, ModelFormatError, NoDualizing,
                     NonNegativityViolation, NotClosedUnderDuality,
                     NotComparable, ParseError, SdcmError)
from .examples import (dual_class_poincare, golden_corpus, iterated_model,
                       localization_cases, paper_instance_models,
                       square_zero_fiber_phi, square_zero_model,
                       write_golden_corpus)
from .metric import (ComparabilityGraph, Route, ball, check_bounds,
                     check_direct_edge, check_hom_order_consistency,
                     check_metric_axioms, check_trichotomy, diameter,
                     distance, distance_table, emit_dot, route_length, sigma)
from .model import (SdcClass, SdcModel, hom_series, is_gorenstein, load_model,
                    model_from_dict, model_to_dict, save_model, validate)
from .parse import eval_expr, parse, parse_series, render
from .report import CheckReport, ValidationReport
from .series import (Curvature, IntPolynomial, LaurentSeries, add, check_nonneg,
                     coefficient, compare, curvature, curvature_estimate, div,
                     format_curvature, mul)

__version__ = "0.1.0"
