"""Conditional independence graphs for multivariate time series.

A stationary Gaussian vector series has an edge between two channels
exactly when some frequency's inverse spectral density matrix has a
nonzero entry for that pair.  This package estimates those matrices
jointly with a sparse-group penalty (convex, or its reweighted log-sum
form), selects the penalty level by an information criterion, and ships a
synthetic benchmark with known ground truth.
"""

__version__ = "0.1.0"

from .admm import (
    AdmmState,
    EdgeGraph,
    SolveReport,
    SolverOptions,
    select_edges,
    solve,
    solve_inner,
    update_phi,
    update_u,
    update_w,
)
from .bench import (
    GroundTruth,
    Metrics,
    TrialConfig,
    VarModel,
    companion_radius,
    default_window,
    frob_error,
    gen_var_clusters,
    run_trials,
    score,
    simulate,
    true_ipsd,
)
from .errors import (
    DomainError,
    GenerationFailedError,
    IngestError,
    InsufficientSamplesError,
    InvalidDataError,
    InvalidPairError,
    InvalidWindowError,
    NotPositiveDefiniteError,
    SearchFailedError,
    ShapeError,
    SpecGraphError,
    SweepExhaustedError,
    WindowOverflowError,
)
from .penalty import (
    PenaltyConfig,
    PrecisionSet,
    WeightMatrices,
    group_norms,
    group_vector,
    lla_weights,
    log_sum_penalty,
    objective,
    whittle_term,
)
from .select import (
    BicRecord,
    SearchGrid,
    bic_score,
    bic_search_grid,
    lambda_range,
    search,
)
from .spectral import (
    DftCoefficients,
    FrequencyPlan,
    SpectralStats,
    TimeSeriesMatrix,
    build_frequency_plan,
    dft,
    smoothed_psd,
)

__all__ = [
    "__version__",
    "AdmmState",
    "BicRecord",
    "DftCoefficients",
    "DomainError",
    "EdgeGraph",
    "FrequencyPlan",
    "GenerationFailedError",
    "GroundTruth",
    "IngestError",
    "InsufficientSamplesError",
    "InvalidDataError",
    "InvalidPairError",
    "InvalidWindowError",
    "Metrics",
    "NotPositiveDefiniteError",
    "PenaltyConfig",
    "PrecisionSet",
    "SearchFailedError",
    "SearchGrid",
    "ShapeError",
    "SolveReport",
    "SolverOptions",
    "SpecGraphError",
    "SpectralStats",
    "SweepExhaustedError",
    "TimeSeriesMatrix",
    "TrialConfig",
    "VarModel",
    "WeightMatrices",
    "WindowOverflowError",
    "bic_score",
    "bic_search_grid",
    "build_frequency_plan",
    "dft",
    "companion_radius",
    "default_window",
    "frob_error",
    "gen_var_clusters",
    "group_norms",
    "group_vector",
    "lambda_range",
    "lla_weights",
    "log_sum_penalty",
    "objective",
    "run_trials",
    "score",
    "search",
    "select_edges",
    "simulate",
    "smoothed_psd",
    "solve",
    "solve_inner",
    "true_ipsd",
    "update_phi",
    "update_u",
    "update_w",
    "whittle_term",
]
