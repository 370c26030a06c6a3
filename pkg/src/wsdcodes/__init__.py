"""Verification toolkit for the weight distribution of binary weakly
self-dual codes: exact GF(2) enumeration, MacWilliams transforms, a dense
tensor-power state engine with combinatorial lemma sums, bound evaluation,
and a reporting CLI."""

from importlib.metadata import version as _version

from .bounds import (
    BoundReport,
    BoundRow,
    BoundValue,
    LambdaCheck,
    binary_entropy,
    binomial_baseline,
    bound_entropy,
    bound_sqrt_e,
    count_within_bound,
    doubly_even_bound,
    exponent_objective,
    interval_constant,
    lambda_family_check,
    optimal_lambda,
    tightest_bound_report,
)
from .enumerators import enumerator_eval, krawtchouk, macwilliams_transform
from .gf2 import (
    ENUMERATION_CAP,
    WORD_CAP,
    BinaryCode,
    CapacityError,
    CodeMetrics,
    InputError,
    WeightDistribution,
    bits_from_word,
    code_metrics,
    codewords,
    dual_code,
    is_doubly_even,
    is_self_dual,
    is_weakly_self_dual,
    rref,
    weight_distribution,
    word_from_bits,
)
from .hilbert import (
    STATE_CAP,
    RotationGate,
    StateVector,
    apply_s_theta,
    basis_state,
    closed_form_amplitude,
    closed_form_amplitudes,
    code_state,
    dual_component_mass,
    dual_component_mass_from_state,
    dump_amplitudes,
    enumerator_inequality,
    rotation_gate,
    self_dual_sum,
    sin_cos_powers,
    theta_grid,
)
from .zoo import (
    ZooEntry,
    build_extended_hamming,
    build_golay24,
    build_reed_muller_1,
    emit_gmat,
    get_zoo_entry,
    parse_gmat,
    random_weakly_self_dual,
    zoo_entries,
)

__version__ = _version("wsdcodes")

__all__ = [
    "BinaryCode",
    "BoundReport",
    "BoundRow",
    "BoundValue",
    "CapacityError",
    "CodeMetrics",
    "ENUMERATION_CAP",
    "InputError",
    "LambdaCheck",
    "RotationGate",
    "STATE_CAP",
    "StateVector",
    "WORD_CAP",
    "WeightDistribution",
    "ZooEntry",
    "apply_s_theta",
    "basis_state",
    "binary_entropy",
    "binomial_baseline",
    "bits_from_word",
    "bound_entropy",
    "bound_sqrt_e",
    "build_extended_hamming",
    "build_golay24",
    "build_reed_muller_1",
    "closed_form_amplitude",
    "closed_form_amplitudes",
    "code_metrics",
    "code_state",
    "codewords",
    "count_within_bound",
    "doubly_even_bound",
    "dual_code",
    "dual_component_mass",
    "dual_component_mass_from_state",
    "dump_amplitudes",
    "emit_gmat",
    "enumerator_eval",
    "enumerator_inequality",
    "exponent_objective",
    "get_zoo_entry",
    "interval_constant",
    "is_doubly_even",
    "is_self_dual",
    "is_weakly_self_dual",
    "krawtchouk",
    "lambda_family_check",
    "macwilliams_transform",
    "optimal_lambda",
    "parse_gmat",
    "random_weakly_self_dual",
    "rotation_gate",
    "rref",
    "self_dual_sum",
    "sin_cos_powers",
    "theta_grid",
    "tightest_bound_report",
    "weight_distribution",
    "word_from_bits",
    "zoo_entries",
]
