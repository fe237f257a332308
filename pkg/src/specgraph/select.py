"""Data-driven choice of the penalty level and its entry/group split.

The score is a Whittle-likelihood BIC: twice the fit term scaled by the
number of raw Fourier bins behind each window, plus a log-sample-size
charge per nonzero entry of the sparse estimate.  The search is two-stage:
sweep the overall level at a fixed split, then refine the split at the
chosen level.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .admm import SolverOptions, select_edges, solve
from .errors import DomainError, ShapeError, SweepExhaustedError
from .penalty import KIND_SGLSP, PenaltyConfig, PrecisionSet
from .spectral import SpectralStats

__all__ = [
    "BicRecord",
    "SearchGrid",
    "bic_score",
    "bic_search_grid",
    "lambda_range",
    "search",
]

DEFAULT_ALPHAS = (0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3)


@dataclass(frozen=True)
class BicRecord:
    """One scored configuration from the search."""

    lam: float
    alpha: float
    bic: float
    edge_count: int
    converged: bool
    stage: int


@dataclass(frozen=True)
class SearchGrid:
    """Candidate penalty levels (descending) and split values to scan."""

    lambda_values: tuple
    alpha_values: tuple = DEFAULT_ALPHAS
    alpha0: float = 0.1

    def __post_init__(self):
        lams = tuple(float(v) for v in self.lambda_values)
        alphas = tuple(float(a) for a in self.alpha_values)
        if not lams or any(v <= 0 for v in lams):
            raise DomainError("lambda grid must be nonempty and positive")
        if any(x <= y for x, y in zip(lams, lams[1:])):
            raise DomainError("lambda grid must be strictly descending")
        if not alphas or any(not 0 <= a <= 0.3 for a in alphas):
            raise DomainError("alpha grid values must lie in [0, 0.3]")
        if not 0 <= self.alpha0 <= 1:
            raise DomainError(f"alpha0 must be in [0, 1], got {self.alpha0}")
        object.__setattr__(self, "lambda_values", lams)
        object.__setattr__(self, "alpha_values", alphas)

    @classmethod
    def from_range(
        cls,
        lam_lo: float,
        lam_hi: float,
        n_lambda: int = 10,
        alpha_values=DEFAULT_ALPHAS,
        alpha0: float = 0.1,
    ) -> "SearchGrid":
        """Log-spaced descending level grid between the given endpoints."""
        if not 0 < lam_lo < lam_hi:
            raise DomainError(f"need 0 < lam_lo < lam_hi, got ({lam_lo}, {lam_hi})")
        lams = np.geomspace(lam_hi, lam_lo, n_lambda)
        return cls(lambda_values=tuple(lams), alpha_values=alpha_values, alpha0=alpha0)


def bic_search_grid(
    lam_lo: float,
    lam_hi: float,
    n_lambda: int = 10,
    alpha_values=DEFAULT_ALPHAS,
    alpha0: float = 0.1,
) -> SearchGrid:
    """Level grid for BIC tuning over a bracket from ``lambda_range``.

    On top of the log-spaced bracket itself, one extra candidate at twice
    the upper endpoint is included.  The bracket tops out where the graph
    still has edges, so without that candidate the empty model could never
    be scored; on data whose channels are actually unrelated the empty
    model is the right answer and wins on BIC.
    """
    base = SearchGrid.from_range(
        lam_lo, lam_hi, n_lambda=n_lambda, alpha_values=alpha_values, alpha0=alpha0
    )
    return SearchGrid(
        lambda_values=(2.0 * lam_hi,) + base.lambda_values,
        alpha_values=alpha_values,
        alpha0=alpha0,
    )


def bic_score(
    phi_hat: PrecisionSet,
    s: SpectralStats,
    K: int,
    M: int,
    sparse: np.ndarray | None = None,
) -> float:
    """Whittle BIC of a fitted stack.

    2K * sum_k [ -ln det Phi_k + Re tr(S_k Phi_k) ]  +  ln(2KM) * nnz.
    The nonzero count runs over every complex entry of the exactly-sparse
    copy when one is supplied, otherwise over ``phi_hat`` itself.
    """
    from .penalty import whittle_term

    if phi_hat.matrices.shape != s.matrices.shape:
        raise ShapeError("estimate and stats shapes differ")
    if K < 1 or M < 1:
        raise DomainError("K and M must be >= 1")
    fit = whittle_term(phi_hat, s)
    counted = phi_hat.matrices if sparse is None else np.asarray(sparse)
    nnz = int(np.count_nonzero(counted))
    return 2.0 * K * fit + np.log(2.0 * K * M) * nnz


def _edge_count_at(s, kind, lam, alpha, epsilon, opts, state):
    cfg = PenaltyConfig(kind=kind, lam=lam, alpha=alpha, epsilon=epsilon)
    _, w, rep = solve(s, cfg, opts, warm=state)
    return select_edges(w).edge_count, rep.final_state


def lambda_range(
    s: SpectralStats,
    kind: str = KIND_SGLSP,
    opts: SolverOptions | None = None,
    alpha0: float = 0.1,
    epsilon: float = 1e-4,
    lam_init: float = 1.0,
    lam_floor: float = 2.0**-30,
    lam_ceil: float = 2.0**20,
):
    """Bracket useful penalty levels from the data.

    Finds lam_sm, the smallest level that yields an empty graph at the
    fixed split ``alpha0``, by a doubling/halving sweep plus 10 bisection
    steps, and returns the interval (lam_sm / 20, lam_sm / 2).

    Raises SweepExhaustedError if even ``lam_ceil`` leaves edges.  If no
    level down to ``lam_floor`` produces an edge (already-diagonal data),
    the floor is used as lam_sm and a warning is issued.
    """
    opts = opts or SolverOptions()
    state = None
    count, state = _edge_count_at(s, kind, lam_init, alpha0, epsilon, opts, state)
    if count > 0:
        lo, hi = lam_init, 2.0 * lam_init
        while True:
            if hi > lam_ceil:
                raise SweepExhaustedError(
                    f"graph still has edges at penalty level {lo:g}"
                )
            count, state = _edge_count_at(s, kind, hi, alpha0, epsilon, opts, state)
            if count == 0:
                break
            lo, hi = hi, 2.0 * hi
    else:
        hi = lam_init
        lo = lam_init / 2.0
        while True:
            if lo < lam_floor:
                warnings.warn(
                    "no edges at any penalty level tried; "
                    "the data may already be diagonal",
                    stacklevel=2,
                )
                return hi / 20.0, hi / 2.0
            count, state = _edge_count_at(s, kind, lo, alpha0, epsilon, opts, state)
            if count > 0:
                break
            lo, hi = lo / 2.0, lo
    for _ in range(10):
        mid = (lo + hi) / 2.0
        count, state = _edge_count_at(s, kind, mid, alpha0, epsilon, opts, state)
        if count == 0:
            hi = mid
        else:
            lo = mid
    lam_sm = hi
    return lam_sm / 20.0, lam_sm / 2.0


def search(
    s: SpectralStats,
    grid: SearchGrid,
    kind: str = KIND_SGLSP,
    opts: SolverOptions | None = None,
    epsilon: float = 1e-4,
    K: int | None = None,
):
    """Two-stage BIC minimization over the grid.

    Stage 1 sweeps the level grid top-down at split ``alpha0`` with warm
    starts; stage 2 rescans the split values at the winning level.  Ties
    prefer the larger level, then the larger split (sparser models).

    Returns (PenaltyConfig, records) where records holds one BicRecord per
    evaluation in order.
    """
    opts = opts or SolverOptions()
    if K is None:
        if s.plan is None:
            raise DomainError("stats carry no frequency plan; pass K explicitly")
        K = s.plan.K
    records = []
    state = None
    best1 = None
    for lam in sorted(set(grid.lambda_values), reverse=True):
        cfg = PenaltyConfig(kind=kind, lam=lam, alpha=grid.alpha0, epsilon=epsilon)
        phi, w, rep = solve(s, cfg, opts, warm=state)
        state = rep.final_state
        rec = BicRecord(
            lam=lam,
            alpha=grid.alpha0,
            bic=bic_score(phi, s, K, s.M, sparse=w),
            edge_count=select_edges(w).edge_count,
            converged=rep.converged,
            stage=1,
        )
        records.append(rec)
        if best1 is None or rec.bic < best1.bic:
            best1 = rec
    lam_star = best1.lam
    state = None
    best2 = None
    for alpha in sorted(set(grid.alpha_values), reverse=True):
        cfg = PenaltyConfig(kind=kind, lam=lam_star, alpha=alpha, epsilon=epsilon)
        phi, w, rep = solve(s, cfg, opts, warm=state)
        state = rep.final_state
        rec = BicRecord(
            lam=lam_star,
            alpha=alpha,
            bic=bic_score(phi, s, K, s.M, sparse=w),
            edge_count=select_edges(w).edge_count,
            converged=rep.converged,
            stage=2,
        )
        records.append(rec)
        if best2 is None or rec.bic < best2.bic:
            best2 = rec
    chosen = PenaltyConfig(kind=kind, lam=lam_star, alpha=best2.alpha, epsilon=epsilon)
    return chosen, records
