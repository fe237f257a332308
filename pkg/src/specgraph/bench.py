"""Synthetic benchmark: clustered vector autoregressions with known graphs.

The generator draws block-diagonal VAR coefficient stacks, so the true
conditional independence graph never crosses cluster boundaries and can be
computed exactly from the transfer function.  The harness fits competing
estimators on simulated paths and scores recovered edges against truth.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .admm import EdgeGraph, SolverOptions, select_edges, solve_inner
from .errors import DomainError, GenerationFailedError, ShapeError
from .penalty import KIND_SGL, KIND_SGLSP, PenaltyConfig, PrecisionSet, lla_weights
from .select import DEFAULT_ALPHAS, bic_search_grid, lambda_range, search
from .spectral import SpectralStats, TimeSeriesMatrix, build_frequency_plan, dft, smoothed_psd

__all__ = [
    "VarModel",
    "GroundTruth",
    "Metrics",
    "TrialConfig",
    "gen_var_clusters",
    "simulate",
    "true_ipsd",
    "score",
    "frob_error",
    "run_trials",
    "default_window",
]

EDGE_TOL = 1e-10
EDGE_GRID = 512
MAX_REJECTS = 1000


@dataclass(frozen=True)
class VarModel:
    """Stable VAR coefficients with block-diagonal cluster structure.

    ``coeffs`` has shape (order, p, p); entries joining different clusters
    are exactly zero.  The innovation covariance is the identity.
    """

    coeffs: np.ndarray = field(repr=False)
    cluster_size: int = 8

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.ndim != 3 or coeffs.shape[1] != coeffs.shape[2]:
            raise ShapeError(f"coefficients must be (order, p, p), got {coeffs.shape}")
        p = coeffs.shape[1]
        if p % self.cluster_size != 0:
            raise ShapeError(f"p={p} is not a multiple of cluster size {self.cluster_size}")
        mask = _cluster_mask(p, self.cluster_size)
        if np.any(coeffs[:, ~mask] != 0):
            raise DomainError("coefficients couple distinct clusters")
        if companion_radius(coeffs) >= 1.0:
            raise DomainError("coefficients define an unstable process")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def p(self) -> int:
        return self.coeffs.shape[1]

    @property
    def order(self) -> int:
        return self.coeffs.shape[0]

    @property
    def clusters(self) -> int:
        return self.p // self.cluster_size


@dataclass(frozen=True)
class GroundTruth:
    """True edge set and true inverse spectral density at chosen frequencies."""

    p: int
    edges: frozenset
    ipsd: np.ndarray = field(repr=False)

    @property
    def omega0(self) -> np.ndarray:
        return np.concatenate(list(self.ipsd), axis=1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Metrics:
    """Edge-recovery scores; frob_error is NaN when not applicable."""

    precision: float
    recall: float
    f1: float
    frob_error: float = math.nan


def _cluster_mask(p: int, cluster_size: int) -> np.ndarray:
    labels = np.arange(p) // cluster_size
    return labels[:, None] == labels[None, :]


def companion_radius(coeffs: np.ndarray) -> float:
    """Spectral radius of the companion matrix of a coefficient stack."""
    order, p, _ = coeffs.shape
    comp = np.zeros((order * p, order * p))
    comp[:p] = np.concatenate(list(coeffs), axis=1)
    if order > 1:
        comp[p:, : (order - 1) * p] = np.eye((order - 1) * p)
    return float(np.max(np.abs(np.linalg.eigvals(comp))))


def gen_var_clusters(
    p: int,
    cluster_size: int = 8,
    order: int = 3,
    density: float = 0.1,
    coef_range: float = 0.8,
    stability_cap: float = 0.95,
    seed=None,
) -> VarModel:
    """Draw a block-diagonal VAR model, cluster by cluster.

    Each cluster's lag matrices get a Bernoulli(``density``) support with
    uniform coefficients on (-coef_range, coef_range).  A draw is kept only
    if the cluster's companion spectral radius stays within
    ``stability_cap``; the whole cluster is redrawn otherwise.  A thousand
    consecutive rejections for one cluster raise GenerationFailedError.
    """
    if p % cluster_size != 0:
        raise ShapeError(f"p={p} is not a multiple of cluster size {cluster_size}")
    if not 0 <= density <= 1:
        raise DomainError(f"density must be in [0, 1], got {density}")
    rng = np.random.default_rng(seed)
    coeffs = np.zeros((order, p, p))
    for c in range(p // cluster_size):
        lo = c * cluster_size
        hi = lo + cluster_size
        rejects = 0
        while True:
            mask = rng.random((order, cluster_size, cluster_size)) < density
            vals = rng.uniform(-coef_range, coef_range, size=mask.shape)
            block = np.where(mask, vals, 0.0)
            if companion_radius(block) <= stability_cap:
                break
            rejects += 1
            if rejects >= MAX_REJECTS:
                raise GenerationFailedError(
                    f"cluster {c}: {MAX_REJECTS} consecutive draws were unstable"
                )
        coeffs[:, lo:hi, lo:hi] = block
    return VarModel(coeffs=coeffs, cluster_size=cluster_size)


def simulate(model: VarModel, n: int, burn_in: int = 100, seed=None) -> TimeSeriesMatrix:
    """Run the recursion from zero initial conditions and keep the last n steps.

    Innovations are independent standard normals; the first ``burn_in``
    post-startup samples are discarded.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if burn_in < 0:
        raise DomainError(f"burn_in must be >= 0, got {burn_in}")
    rng = np.random.default_rng(seed)
    p, order = model.p, model.order
    total = n + burn_in
    x = np.zeros((p, order + total))
    innov = rng.standard_normal((p, total))
    for t in range(total):
        col = order + t
        acc = innov[:, t].copy()
        for i in range(order):
            acc += model.coeffs[i] @ x[:, col - 1 - i]
        x[:, col] = acc
    return TimeSeriesMatrix(x[:, order + burn_in :])


def _transfer(coeffs: np.ndarray, freqs: np.ndarray) -> np.ndarray:
    """A(f) = I - sum_i coeffs[i] * exp(-2j pi f (i+1)), stacked over freqs."""
    order, p, _ = coeffs.shape
    lags = np.arange(1, order + 1)
    phases = np.exp(-2j * np.pi * np.outer(freqs, lags))
    out = np.broadcast_to(np.eye(p), (len(freqs), p, p)).astype(complex).copy()
    for i in range(order):
        out -= phases[:, i, None, None] * coeffs[i]
    return out


def true_ipsd(model: VarModel, frequencies) -> GroundTruth:
    """Exact inverse spectral density and edge set of a stable VAR model.

    With identity innovation covariance the inverse spectral density is
    A(f)^H A(f).  Edges are read off a dense frequency scan of [0, 0.5]:
    a pair is connected when its entry magnitude exceeds a tiny floor at
    any scanned frequency.  The scan runs cluster by cluster since the
    model never couples clusters.
    """
    freqs = np.asarray(frequencies, dtype=float)
    if freqs.ndim != 1 or len(freqs) == 0:
        raise ShapeError("frequencies must be a nonempty 1-d sequence")
    if np.any(freqs < 0) or np.any(freqs > 0.5):
        raise DomainError("frequencies must lie in [0, 0.5]")
    a = _transfer(model.coeffs, freqs)
    ipsd = np.einsum("fki,fkj->fij", np.conj(a), a)
    ipsd = (ipsd + np.conj(np.swapaxes(ipsd, -1, -2))) / 2.0
    cs = model.cluster_size
    scan = np.linspace(0.0, 0.5, EDGE_GRID)
    edges = set()
    for c in range(model.clusters):
        lo = c * cs
        block = model.coeffs[:, lo : lo + cs, lo : lo + cs]
        ab = _transfer(block, scan)
        mags = np.abs(np.einsum("fki,fkj->fij", np.conj(ab), ab)).max(axis=0)
        for i in range(cs):
            for j in range(i + 1, cs):
                if mags[i, j] > EDGE_TOL:
                    edges.add((lo + i, lo + j))
    return GroundTruth(p=model.p, edges=frozenset(edges), ipsd=ipsd)


def _as_edge_set(obj) -> set:
    if isinstance(obj, EdgeGraph):
        return obj.edge_set()
    if isinstance(obj, GroundTruth):
        return set(obj.edges)
    return {(min(i, j), max(i, j)) for i, j in obj}


def score(est, truth) -> Metrics:
    """Precision, recall, and F1 of an estimated edge set against truth.

    Empty denominators score zero rather than raising.
    """
    est_edges = _as_edge_set(est)
    true_edges = _as_edge_set(truth)
    tp = len(est_edges & true_edges)
    precision = tp / len(est_edges) if est_edges else 0.0
    recall = tp / len(true_edges) if true_edges else 0.0
    f1 = (
        2.0 * precision * recall / (precision + recall)
        if (precision + recall) > 0
        else 0.0
    )
    return Metrics(precision=precision, recall=recall, f1=f1)


def frob_error(phi_hat, truth: GroundTruth) -> float:
    """Frobenius distance between stacked estimate and stacked truth."""
    mats = phi_hat.matrices if isinstance(phi_hat, PrecisionSet) else np.asarray(phi_hat)
    if mats.shape != truth.ipsd.shape:
        raise ShapeError(
            f"estimate {mats.shape} and truth {truth.ipsd.shape} shapes differ"
        )
    return float(np.linalg.norm((mats - truth.ipsd).ravel()))


def default_window(n: int):
    """Window length and count used by the benchmark for a given n.

    K is the largest odd value at most n/8 minus one bin, M is 4 when that
    fits below Nyquist and the formula default otherwise.
    """
    K = max(3, n // 8 - 1)
    if K % 2 == 0:
        K -= 1
    half = (K - 1) // 2
    if 4 * K <= (n - 1) // 2:
        return K, 4
    return K, max(1, (n // 2 - half - 1) // K)


# valid entries for TrialConfig.methods: the two penalties under oracle
# tuning, the time-domain baseline, and the BIC-tuned variant
KNOWN_METHODS = (KIND_SGLSP, KIND_SGL, "iid", "sglsp-bic")


@dataclass(frozen=True)
class TrialConfig:
    """What the benchmark harness should run."""

    p: int = 16
    cluster_size: int = 8
    order: int = 3
    density: float = 0.1
    coef_range: float = 0.8
    stability_cap: float = 0.95
    burn_in: int = 100
    n_values: tuple = (256, 1024)
    windows: int = 4
    methods: tuple = (KIND_SGLSP, KIND_SGL)
    tuning: str = "oracle"
    n_lambda: int = 10
    alpha_values: tuple = DEFAULT_ALPHAS
    epsilon: float = 1e-4
    opts: SolverOptions = field(default_factory=SolverOptions)

    def __post_init__(self):
        bad = set(self.methods) - set(KNOWN_METHODS)
        if bad:
            raise DomainError(
                f"unknown methods {sorted(bad)}; choose from {sorted(KNOWN_METHODS)}"
            )
        if self.tuning not in ("oracle", "bic"):
            raise DomainError(f"tuning must be 'oracle' or 'bic', got {self.tuning!r}")


def _fit_path(s, cfg: PenaltyConfig, opts, warm_flat):
    """One grid point: flat convex pass, then reweighted passes if asked.

    Returns (PrecisionSet, w, flat-pass state).  The flat state is what the
    next level on a warm-started path should resume from, since its first
    pass is flat again.
    """
    weights = lla_weights(None, cfg, p=s.p, M=s.M)
    phi, w, rep = solve_inner(s, weights, opts, warm=warm_flat)
    flat_state = rep.final_state
    if cfg.kind == KIND_SGL:
        return phi, w, flat_state
    omega_prev = np.concatenate(list(phi.matrices), axis=1)
    state = flat_state
    for _ in range(opts.outer_iters - 1):
        weights = lla_weights(w, cfg)
        phi, w, rep = solve_inner(s, weights, opts, warm=state)
        state = rep.final_state
        omega = np.concatenate(list(phi.matrices), axis=1)
        denom = max(np.linalg.norm(omega_prev), np.finfo(float).tiny)
        if np.linalg.norm(omega - omega_prev) / denom < opts.outer_tol:
            break
        omega_prev = omega
    return phi, w, flat_state


def _oracle_grid_fit(s, truth, kind, lam_grid, alphas, epsilon, opts):
    """Exhaustive (level, split) scan keeping the best-F1 fit for one method."""
    best = None
    for alpha in alphas:
        state = None
        for lam in lam_grid:
            cfg = PenaltyConfig(kind=kind, lam=lam, alpha=alpha, epsilon=epsilon)
            phi, w, state = _fit_path(s, cfg, opts, state)
            m = score(select_edges(w), truth)
            if best is None or m.f1 > best["f1"]:
                best = {
                    "f1": m.f1,
                    "precision": m.precision,
                    "recall": m.recall,
                    "lam": lam,
                    "alpha": alpha,
                    "phi": phi,
                    "w": w,
                }
    return best


def _iid_stats(x: TimeSeriesMatrix) -> SpectralStats:
    cov = x.values @ x.values.T / x.n
    cov = (cov + cov.T) / 2.0
    return SpectralStats(p=x.p, M=1, matrices=cov[None].astype(complex), plan=None)


def _seed_int(ss: np.random.SeedSequence) -> int:
    return int(ss.generate_state(1, dtype=np.uint32)[0])


def run_trials(config: TrialConfig, trials: int, seed: int = 0):
    """Monte Carlo evaluation of the configured methods.

    Returns (rows, summary).  ``rows`` holds one dict per method per n per
    trial with the selected tuning, scores, and runtime; ``summary``
    aggregates mean and standard error of F1 and Frobenius error per
    (method, n).  Everything is deterministic given ``seed``.
    """
    if trials < 0:
        raise DomainError(f"trials must be >= 0, got {trials}")
    rows = []
    base = np.random.SeedSequence(seed)
    trial_seeds = [_seed_int(c) for c in base.spawn(trials)]
    for t in range(trials):
        tseed = trial_seeds[t]
        streams = np.random.SeedSequence(tseed).spawn(1 + len(config.n_values))
        model = gen_var_clusters(
            config.p,
            cluster_size=config.cluster_size,
            order=config.order,
            density=config.density,
            coef_range=config.coef_range,
            stability_cap=config.stability_cap,
            seed=streams[0],
        )
        for ni, n in enumerate(config.n_values):
            K, M = default_window(n)
            if config.windows:
                M = config.windows
            plan = build_frequency_plan(n, K, M_override=M)
            truth = true_ipsd(model, plan.center_freqs)
            x = simulate(model, n, burn_in=config.burn_in, seed=streams[1 + ni])
            s = smoothed_psd(dft(x), plan)
            rows.extend(
                _run_methods(config, s, x, truth, plan, n, t, tseed)
            )
    summary = _summarize(rows)
    return rows, summary


def _run_methods(config, s, x, truth, plan, n, trial, tseed):
    rows = []
    common = {"n": n, "K": plan.K, "M": plan.M, "trial": trial, "seed": tseed}
    for method in config.methods:
        if method in (KIND_SGLSP, KIND_SGL):
            if config.tuning == "oracle":
                rows.append(_oracle_row(config, s, truth, method, common))
            else:
                rows.append(_bic_row(config, s, truth, method, common))
        elif method == "sglsp-bic":
            rows.append(_bic_row(config, s, truth, KIND_SGLSP, common, label="sglsp-bic"))
        elif method == "iid":
            rows.append(_iid_row(config, x, truth, common))
    return rows


def _oracle_row(config, s, truth, kind, common):
    """Tune one method by exhaustive F1 maximization against the known graph."""
    t0 = time.perf_counter()
    lam_lo, lam_hi = lambda_range(s, kind=kind, opts=config.opts, epsilon=config.epsilon)
    lam_grid = np.geomspace(lam_hi, lam_lo, config.n_lambda)
    b = _oracle_grid_fit(
        s, truth, kind, lam_grid, config.alpha_values, config.epsilon, config.opts
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    return {
        "method": kind,
        **common,
        "lam": b["lam"],
        "alpha": b["alpha"],
        "precision": b["precision"],
        "recall": b["recall"],
        "f1": b["f1"],
        "frob_error": frob_error(b["phi"], truth),
        "runtime_ms": elapsed,
    }


def _bic_row(config, s, truth, kind, common, label=None):
    t0 = time.perf_counter()
    lam_lo, lam_hi = lambda_range(s, kind=kind, opts=config.opts, epsilon=config.epsilon)
    grid = bic_search_grid(
        lam_lo, lam_hi, n_lambda=config.n_lambda, alpha_values=config.alpha_values
    )
    cfg, _ = search(s, grid, kind=kind, opts=config.opts, epsilon=config.epsilon)
    from .admm import solve

    phi, w, _ = solve(s, cfg, config.opts)
    m = score(select_edges(w), truth)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return {
        "method": label or kind,
        **common,
        "lam": cfg.lam,
        "alpha": cfg.alpha,
        "precision": m.precision,
        "recall": m.recall,
        "f1": m.f1,
        "frob_error": frob_error(phi, truth),
        "runtime_ms": elapsed,
    }


def _iid_row(config, x, truth, common):
    """Time-domain baseline: one sample-covariance block, entrywise penalty only."""
    t0 = time.perf_counter()
    s = _iid_stats(x)
    lam_lo, lam_hi = lambda_range(
        s, kind=KIND_SGLSP, opts=config.opts, alpha0=1.0, epsilon=config.epsilon
    )
    lam_grid = np.geomspace(lam_hi, lam_lo, config.n_lambda)
    b = _oracle_grid_fit(
        s, truth, KIND_SGLSP, lam_grid, (1.0,), config.epsilon, config.opts
    )
    elapsed = (time.perf_counter() - t0) * 1000.0
    return {
        "method": "iid",
        **common,
        "lam": b["lam"],
        "alpha": b["alpha"],
        "precision": b["precision"],
        "recall": b["recall"],
        "f1": b["f1"],
        "frob_error": math.nan,
        "runtime_ms": elapsed,
    }


def _summarize(rows):
    groups = {}
    for row in rows:
        groups.setdefault((row["method"], row["n"]), []).append(row)
    summary = []
    for (method, n), grp in sorted(groups.items()):
        f1s = np.array([g["f1"] for g in grp])
        frobs = np.array([g["frob_error"] for g in grp])
        frobs = frobs[~np.isnan(frobs)]
        entry = {
            "method": method,
            "n": n,
            "trials": len(grp),
            "mean_f1": float(f1s.mean()),
            "stderr_f1": float(f1s.std(ddof=1) / np.sqrt(len(f1s))) if len(f1s) > 1 else 0.0,
            "mean_frob": float(frobs.mean()) if len(frobs) else math.nan,
            "stderr_frob": (
                float(frobs.std(ddof=1) / np.sqrt(len(frobs))) if len(frobs) > 1 else 0.0
            ),
        }
        summary.append(entry)
    return summary
