"""ADMM solver for the penalized inverse spectral density estimate.

The augmented-Lagrangian splitting keeps two copies of the per-window
precision stack: ``phi`` carries the smooth fit term and stays positive
definite through a closed-form eigenvalue update, ``w`` carries the
nonsmooth penalty and is exactly sparse thanks to a closed-form
group soft-threshold.  A scaled dual ``u`` ties them together.

The nonconvex log-sum variant is handled one level up: `solve` repeats the
convex inner solver with weights relinearized at the previous sparse
iterate, a standard majorize-minimize loop.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ShapeError
from .penalty import (
    KIND_SGL,
    PenaltyConfig,
    PrecisionSet,
    WeightMatrices,
    group_norms,
    lla_weights,
    objective,
)
from .spectral import SpectralStats

__all__ = [
    "SolverOptions",
    "AdmmState",
    "SolveReport",
    "EdgeGraph",
    "update_phi",
    "update_w",
    "update_u",
    "solve_inner",
    "solve",
    "select_edges",
]


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances and iteration limits for the ADMM loops.

    ``rho0`` is the initial augmented-Lagrangian parameter; with
    ``adapt_rho`` it is doubled or halved (dual rescaled accordingly)
    whenever one residual runs ahead of the other by more than ``mu``.
    ``outer_iters`` caps the reweighting passes of the log-sum variant and
    ``outer_tol`` stops them early once the stacked estimate moves by less
    than that relative amount.
    """

    rho0: float = 2.0
    adapt_rho: bool = True
    mu: float = 10.0
    eps_abs: float = 1e-4
    eps_rel: float = 1e-4
    max_inner: int = 500
    outer_iters: int = 5
    outer_tol: float = 1e-3

    def __post_init__(self):
        if not self.rho0 > 0:
            raise DomainError(f"rho0 must be > 0, got {self.rho0}")
        if self.max_inner < 1 or self.outer_iters < 1:
            raise DomainError("iteration limits must be >= 1")


@dataclass
class AdmmState:
    """Solver iterates, kept so a later call can resume where this one stopped."""

    phi: np.ndarray
    w: np.ndarray
    u: np.ndarray
    rho: float
    iterations: int = 0


@dataclass
class SolveReport:
    """What happened during a solve; the result itself travels separately."""

    converged: bool
    inner_iters: list
    primal_residual: float
    dual_residual: float
    objective_trace: list
    min_eigenvalue: float
    final_state: AdmmState


@dataclass(frozen=True)
class EdgeGraph:
    """Undirected weighted graph over p nodes; edges listed with i < j."""

    p: int
    edges: list
    weights: np.ndarray = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_set(self) -> set:
        return set(self.edges)

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.p, self.p))
        for (i, j), wt in zip(self.edges, self.weights):
            adj[i, j] = wt
            adj[j, i] = wt
        return adj


def _eig_update(e: np.ndarray, rho: float):
    """Solve the per-window stationarity equation phi^-1 - rho*phi = e.

    Shares eigenvectors with e; each eigenvalue d maps to the positive
    root (-d + sqrt(d^2 + 4*rho)) / (2*rho).
    """
    e = (e + np.conj(np.swapaxes(e, -1, -2))) / 2.0
    d, v = np.linalg.eigh(e)
    d_new = (-d + np.sqrt(d * d + 4.0 * rho)) / (2.0 * rho)
    phi = (v * d_new[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))
    phi = (phi + np.conj(np.swapaxes(phi, -1, -2))) / 2.0
    return phi, float(d_new.min())


def update_phi(smats: np.ndarray, w: np.ndarray, u: np.ndarray, rho: float) -> np.ndarray:
    """Closed-form minimizer of the fit term plus the quadratic coupling.

    The result satisfies phi^-1 = s + rho*(phi - w + u) per window and is
    Hermitian positive definite by construction.
    """
    phi, _ = _eig_update(smats - rho * w + rho * u, rho)
    return phi


def update_w(a: np.ndarray, weights: WeightMatrices, rho: float) -> np.ndarray:
    """Proximal step on the penalty: entrywise then groupwise shrinkage.

    Off-diagonal entries of ``a`` are soft-thresholded at w1/rho, then each
    cross-window group is scaled down by its group threshold w2/rho, which
    zeroes the whole group exactly once its norm falls below the threshold.
    Diagonals are copied through unchanged.
    """
    absa = np.abs(a)
    thr = weights.w1 / rho
    with np.errstate(divide="ignore", invalid="ignore"):
        scale = np.where(absa > thr, 1.0 - thr / np.where(absa > 0, absa, 1.0), 0.0)
    b = scale * a
    gthr = weights.w2 / rho
    gn = group_norms(b)
    with np.errstate(divide="ignore", invalid="ignore"):
        gscale = np.where(gn > gthr, 1.0 - gthr / np.where(gn > 0, gn, 1.0), 0.0)
    w = gscale[None, :, :] * b
    di = np.arange(a.shape[1])
    w[:, di, di] = a[:, di, di]
    return w


def update_u(u: np.ndarray, phi: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Scaled dual ascent: accumulate the consensus gap."""
    return u + (phi - w)


def _stack_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x.ravel()))


def _weighted_objective(phi_set: PrecisionSet, s: SpectralStats, weights: WeightMatrices) -> float:
    from .penalty import whittle_term

    mats = phi_set.matrices
    pen = float(np.sum(weights.w1 * np.abs(mats)))
    pen += float(np.sum(weights.w2 * group_norms(mats)))
    return whittle_term(phi_set, s) + pen


def solve_inner(
    s: SpectralStats,
    weights: WeightMatrices,
    opts: SolverOptions | None = None,
    warm: AdmmState | None = None,
):
    """Run ADMM on the convex weighted problem until the residual test passes.

    Returns (PrecisionSet, w, SolveReport).  ``w`` is the exactly-sparse
    copy of the estimate; the PrecisionSet wraps the positive definite
    copy.  A warm state (from a previous call) is resumed as-is, including
    its adapted rho, so the scaled dual it carries never needs rescaling
    on entry; rescaling happens only when adaptation changes rho mid-run.

    Stopping follows the usual combined absolute/relative residual rule,
    aggregated over all windows.  Hitting ``max_inner`` returns the current
    iterate with ``converged=False`` rather than raising.
    """
    opts = opts or SolverOptions()
    smats = s.matrices
    if weights.w1.shape != smats.shape:
        raise ShapeError(
            f"weights shaped {weights.w1.shape} do not match stats {smats.shape}"
        )
    M, p, _ = smats.shape
    if warm is None:
        diag = np.real(np.einsum("kii->ki", smats))
        if np.any(diag <= 0):
            raise DomainError("spectral stats have nonpositive diagonal entries")
        w = np.zeros_like(smats)
        di = np.arange(p)
        w[:, di, di] = 1.0 / diag
        u = np.zeros_like(smats)
        rho = opts.rho0
    else:
        w = warm.w.copy()
        u = warm.u.copy()
        rho = warm.rho
    dim_root = np.sqrt(M * p * p)
    min_eig = np.inf
    converged = False
    r_norm = s_norm = np.nan
    it = 0
    for it in range(1, opts.max_inner + 1):
        phi, dmin = _eig_update(smats - rho * w + rho * u, rho)
        min_eig = min(min_eig, dmin)
        w_prev = w
        w = update_w(phi + u, weights, rho)
        u = u + (phi - w)
        r_norm = _stack_norm(phi - w)
        s_norm = rho * _stack_norm(w - w_prev)
        eps_pri = dim_root * opts.eps_abs + opts.eps_rel * max(
            _stack_norm(phi), _stack_norm(w)
        )
        eps_dual = dim_root * opts.eps_abs + opts.eps_rel * rho * _stack_norm(u)
        if r_norm <= eps_pri and s_norm <= eps_dual:
            converged = True
            break
        if opts.adapt_rho:
            if r_norm > opts.mu * s_norm and rho < 1e12:
                rho *= 2.0
                u = u / 2.0
            elif s_norm > opts.mu * r_norm and rho > 1e-12:
                rho /= 2.0
                u = u * 2.0
    phi_set = PrecisionSet(phi)
    state = AdmmState(phi=phi, w=w, u=u, rho=rho, iterations=it)
    report = SolveReport(
        converged=converged,
        inner_iters=[it],
        primal_residual=r_norm,
        dual_residual=s_norm,
        objective_trace=[_weighted_objective(phi_set, s, weights)],
        min_eigenvalue=min_eig,
        final_state=state,
    )
    return phi_set, w, report


def solve(
    s: SpectralStats,
    cfg: PenaltyConfig,
    opts: SolverOptions | None = None,
    warm: AdmmState | None = None,
):
    """Estimate the sparse inverse spectral density stack.

    For the convex kind this is a single inner solve with flat weights.
    For the log-sum kind the inner solve is repeated, each pass reweighted
    at the previous sparse iterate, warm-started, and stopped early when
    the stacked estimate stops moving.

    Returns (PrecisionSet, w, SolveReport); the report's objective trace
    holds the penalized objective after each pass.
    """
    opts = opts or SolverOptions()
    M, p = s.M, s.p
    weights = lla_weights(None, cfg, p=p, M=M)
    passes = 1 if cfg.kind == KIND_SGL else opts.outer_iters
    state = warm
    omega_prev = None
    inner_iters = []
    trace = []
    min_eig = np.inf
    converged = True
    phi_set = w = None
    for outer in range(passes):
        phi_set, w, rep = solve_inner(s, weights, opts, warm=state)
        state = rep.final_state
        inner_iters.append(rep.inner_iters[0])
        trace.append(objective(phi_set, s, cfg))
        min_eig = min(min_eig, rep.min_eigenvalue)
        converged = converged and rep.converged
        last_primal, last_dual = rep.primal_residual, rep.dual_residual
        omega = np.concatenate(list(phi_set.matrices), axis=1)
        if omega_prev is not None:
            denom = max(np.linalg.norm(omega_prev), np.finfo(float).tiny)
            if np.linalg.norm(omega - omega_prev) / denom < opts.outer_tol:
                break
        omega_prev = omega
        if outer < passes - 1:
            weights = lla_weights(w, cfg)
    report = SolveReport(
        converged=converged,
        inner_iters=inner_iters,
        primal_residual=last_primal,
        dual_residual=last_dual,
        objective_trace=trace,
        min_eigenvalue=min_eig,
        final_state=state,
    )
    return phi_set, w, report


def select_edges(w, tol: float = 0.0) -> EdgeGraph:
    """Read the graph off the sparse estimate.

    Nodes i and j are joined when the cross-window norm of entry (i, j)
    exceeds ``tol`` (default: any exact nonzero).  The edge weight is that
    norm.
    """
    mats = w.matrices if isinstance(w, PrecisionSet) else np.asarray(w)
    if tol < 0:
        raise DomainError(f"tolerance must be >= 0, got {tol}")
    gn = group_norms(mats)
    p = gn.shape[0]
    edges = []
    wts = []
    for i in range(p):
        for j in range(i + 1, p):
            if gn[i, j] > tol:
                edges.append((i, j))
                wts.append(gn[i, j])
    return EdgeGraph(p=p, edges=edges, weights=np.asarray(wts, dtype=float))
