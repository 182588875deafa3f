"""Global, K-way, and pair-restricted negativities, tangles, canonical
three-qubit forms, the GHZ+W family, and convex-roof negativities."""

from .config import (
    DEFAULT_TOLERANCES,
    NumericalError,
    Tolerances,
    ValidationError,
)
from .core import (
    DensityOperator,
    EigenSystem,
    LocalUnitary,
    PureState,
    SubsystemLayout,
    apply_local_unitary,
    flat_index,
    haar_random_pure,
    hermitian_eigensystem,
    jacobi_eigensystem,
    multi_index,
    outer,
    partial_trace,
    qubit_layout,
    trace_norm,
)
from .transpose import TransposeSpec, differing_count, global_pt, kway_pt, pair_pt
from .negativity import (
    NegativityReport,
    e0_negativity,
    negative_subspace,
    negativity_from_pt,
    negativity_report,
    pair_partial_negativity,
    partial_kway_negativity,
)
from .tangle import TangleReport, one_tangle, spin_flip, three_tangle, wootters_tangle
from .canonical import (
    CanonicalForm3Q,
    CanonicalizationResult,
    build_canonical_state,
    canonical_closed_forms,
    canonicalize3,
    coherence_delta,
    ghz_rotation_profile,
    third_qubit_rotation,
)
from .ghzw import (
    GhzwParams,
    SweepRow,
    build_ghzw,
    e3_from_amplitudes,
    ghzw_canonical_params,
    sweep_family,
    tau3_closed_form,
    tau3_minus_zero,
    x_parameter,
)
from .roof import (
    Ensemble,
    RoofBudget,
    RoofResult,
    eigen_ensemble,
    isometry_ensemble,
    reduced_pair_negativity,
    roof_negativity,
)
from .statefile import ParseError, parse_state_file

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm3Q",
    "CanonicalizationResult",
    "DEFAULT_TOLERANCES",
    "DensityOperator",
    "EigenSystem",
    "Ensemble",
    "GhzwParams",
    "LocalUnitary",
    "NegativityReport",
    "NumericalError",
    "ParseError",
    "PureState",
    "RoofBudget",
    "RoofResult",
    "SubsystemLayout",
    "SweepRow",
    "TangleReport",
    "Tolerances",
    "TransposeSpec",
    "ValidationError",
    "apply_local_unitary",
    "build_canonical_state",
    "build_ghzw",
    "canonical_closed_forms",
    "canonicalize3",
    "coherence_delta",
    "differing_count",
    "e0_negativity",
    "e3_from_amplitudes",
    "eigen_ensemble",
    "flat_index",
    "ghz_rotation_profile",
    "ghzw_canonical_params",
    "global_pt",
    "haar_random_pure",
    "hermitian_eigensystem",
    "isometry_ensemble",
    "jacobi_eigensystem",
    "kway_pt",
    "multi_index",
    "negative_subspace",
    "negativity_from_pt",
    "negativity_report",
    "one_tangle",
    "outer",
    "pair_partial_negativity",
    "pair_pt",
    "parse_state_file",
    "partial_kway_negativity",
    "partial_trace",
    "qubit_layout",
    "reduced_pair_negativity",
    "roof_negativity",
    "spin_flip",
    "sweep_family",
    "tau3_closed_form",
    "tau3_minus_zero",
    "third_qubit_rotation",
    "three_tangle",
    "trace_norm",
    "wootters_tangle",
    "x_parameter",
]
