"""Trace-defined few-weight linear codes over prime fields.

Construction of two- and three-weight codes from trace-kernel defining sets,
exact weight distributions, dual-distance analysis, classical bounds, exact
cyclotomic character sums, and a claim-by-claim verification harness.
"""

from .bounds import BoundVerdict, bound_verdict, griesmer_max_d, griesmer_min_length, hamming_max_d
from .charsums import (
    CyclotomicInteger,
    adjudicate_trace_readings,
    lemma_sweep,
    n_beta,
    sum_A,
    sum_B,
    weil_closed_form,
    weil_sum,
)
from .codes import (
    DefiningSet,
    LinearCode,
    build_family_code,
    code_d2,
    code_from_defining_set,
    defining_set_d1,
    encode,
    orbit_representatives,
)
from .duals import DualReport, Witness, dual_code, dual_min_distance, verify_dual_theorems
from .field import Field, FieldElement, make_field, relative_trace, norm_to_half, second_modulus
from .harness import VerificationReport, run_verification
from .weights import (
    WeightDistribution,
    power_moment_residuals,
    predicted_distribution,
    weight_distribution,
    wmin_wmax_check,
)

__version__ = "0.1.0"

__all__ = [
    "BoundVerdict",
    "CyclotomicInteger",
    "DefiningSet",
    "DualReport",
    "Field",
    "FieldElement",
    "LinearCode",
    "VerificationReport",
    "WeightDistribution",
    "Witness",
    "adjudicate_trace_readings",
    "bound_verdict",
    "build_family_code",
    "code_d2",
    "code_from_defining_set",
    "defining_set_d1",
    "dual_code",
    "dual_min_distance",
    "encode",
    "griesmer_max_d",
    "griesmer_min_length",
    "hamming_max_d",
    "lemma_sweep",
    "make_field",
    "n_beta",
    "norm_to_half",
    "orbit_representatives",
    "power_moment_residuals",
    "predicted_distribution",
    "relative_trace",
    "run_verification",
    "second_modulus",
    "sum_A",
    "sum_B",
    "verify_dual_theorems",
    "weight_distribution",
    "weil_closed_form",
    "weil_sum",
    "wmin_wmax_check",
]
