"""Exact symbolic engine for braid-twisted q-character calculus.

The package computes Kirillov-Reshetikhin q-characters, twists them by braid
group operators, normalizes, projects spectral data onto the root lattice, and
detects stabilized limits in cone-graded completions. Everything is exact
integer arithmetic on sparse exponent dictionaries; a built-in catalog replays
the worked scenarios and reports per-clause verdicts.
"""

from .braid import braid_act, braid_act_word
from .cache import (cache_clear, cache_dir, cache_get, cache_info, cache_key,
                    cache_put)
from .cartan import CartanDatum, WeightVector, build_cartan, parse_type_label
from .catalog import CaseResult, Clause, Verdict, case_names, run_case, verify_report
from .errors import (ConeError, EngineError, ExprSyntaxError,
                     FactorizationError, FMInconsistentError, MathDomainError,
                     NoLimitError, NonUnitDivisorError, NotAnAMonomialError,
                     StepCapError, UnsupportedDatumError)
from .expr import parse_expr
from .limits import (LimitReport, const_flip, factor_const_nonconst,
                     geometric_series, product_window, project_piR,
                     projected_limit, series_agree_on_window,
                     shifted_const_formula, usual_char_window,
                     w0_product_formula, weyl_char_image)
from .qchar import (QCharacter, a_chain, fm_expand, kr_highest_weight,
                    kr_qchar_closed, kr_shape_of, usual_char_from_qchar,
                    w_normalized_qchar)
from .rings import (CAMonomial, GradedSeries, LWeightMonomial, SparsePoly,
                    YMonomial, a_expand_to_y, a_pattern, embed_y_as_lweight,
                    graded_divide, wt_degree, y_ratio_to_a)
from .serialize import (canonical_json_bytes, monomial_latex, monomial_text,
                        poly_latex, pretty_json, qchar_json_obj,
                        series_json_obj, series_latex)
from .version import ENGINE_VERSION

__version__ = ENGINE_VERSION

__all__ = [
    "ENGINE_VERSION", "CartanDatum", "WeightVector", "build_cartan",
    "parse_type_label", "YMonomial", "CAMonomial", "LWeightMonomial",
    "SparsePoly", "GradedSeries", "a_pattern", "a_expand_to_y", "y_ratio_to_a",
    "embed_y_as_lweight", "wt_degree", "graded_divide", "braid_act",
    "braid_act_word", "QCharacter", "kr_highest_weight", "kr_qchar_closed",
    "kr_shape_of", "a_chain", "fm_expand", "w_normalized_qchar",
    "usual_char_from_qchar", "LimitReport", "project_piR", "projected_limit",
    "factor_const_nonconst", "const_flip", "geometric_series",
    "w0_product_formula", "shifted_const_formula", "series_agree_on_window",
    "product_window", "usual_char_window", "weyl_char_image", "Verdict",
    "Clause", "CaseResult", "case_names", "run_case", "verify_report",
    "parse_expr", "monomial_text", "monomial_latex", "poly_latex",
    "series_latex", "qchar_json_obj", "series_json_obj",
    "canonical_json_bytes", "pretty_json", "cache_key",
    "cache_get", "cache_put", "cache_info", "cache_clear", "cache_dir",
    "EngineError", "ExprSyntaxError", "MathDomainError", "NotAnAMonomialError",
    "NonUnitDivisorError", "FMInconsistentError", "StepCapError", "ConeError",
    "FactorizationError", "UnsupportedDatumError", "NoLimitError",
]
