"""Objective pieces: Whittle fit term, sparsity penalties, reweighting.

The estimator minimizes  fit + penalty  over a set of Hermitian positive
definite matrices, one per frequency window.  The penalty couples the same
off-diagonal entry across windows into a group, so a whole group can be
driven to zero (no edge) while individual windows stay free otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DomainError,
    InvalidPairError,
    NotPositiveDefiniteError,
    ShapeError,
)
from .spectral import SpectralStats

__all__ = [
    "PenaltyConfig",
    "PrecisionSet",
    "WeightMatrices",
    "group_vector",
    "group_norms",
    "log_sum_penalty",
    "whittle_term",
    "objective",
    "lla_weights",
]

KIND_SGL = "sgl"
KIND_SGLSP = "sglsp"


@dataclass(frozen=True)
class PenaltyConfig:
    """Penalty family and its level.

    ``lam`` is the overall level, split as alpha*lam on individual entries
    and (1-alpha)*lam on cross-window groups.  ``kind`` selects the convex
    penalty ("sgl") or its reweighted log-sum relaxation ("sglsp");
    ``epsilon`` is the log-sum knee, only meaningful for "sglsp".
    """

    kind: str
    lam: float
    alpha: float
    epsilon: float = 1e-4

    def __post_init__(self):
        if self.kind not in (KIND_SGL, KIND_SGLSP):
            raise DomainError(f"unknown penalty kind {self.kind!r}")
        if not self.lam >= 0:
            raise DomainError(f"penalty level must be >= 0, got {self.lam}")
        if not 0 <= self.alpha <= 1:
            raise DomainError(f"alpha must be in [0, 1], got {self.alpha}")
        if not self.epsilon > 0:
            raise DomainError(f"epsilon must be > 0, got {self.epsilon}")

    @property
    def lam1(self) -> float:
        """Level on individual off-diagonal entries."""
        return self.alpha * self.lam

    @property
    def lam2(self) -> float:
        """Level on cross-window groups."""
        return (1.0 - self.alpha) * self.lam


@dataclass(frozen=True)
class PrecisionSet:
    """Stack of per-window inverse spectral density estimates, shape (M, p, p)."""

    matrices: np.ndarray = field(repr=False)

    def __post_init__(self):
        mats = np.asarray(self.matrices, dtype=complex)
        if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
            raise ShapeError(f"expected shape (M, p, p), got {mats.shape}")
        object.__setattr__(self, "matrices", mats)

    @property
    def M(self) -> int:
        return self.matrices.shape[0]

    @property
    def p(self) -> int:
        return self.matrices.shape[1]

    @property
    def omega(self) -> np.ndarray:
        """All windows side by side as a single p x (p*M) matrix."""
        return np.concatenate(list(self.matrices), axis=1)


@dataclass(frozen=True)
class WeightMatrices:
    """Per-entry and per-group penalty weights used by one solver pass.

    ``w1`` has shape (M, p, p), ``w2`` shape (p, p); both are nonnegative,
    finite, and zero on the diagonal.
    """

    w1: np.ndarray = field(repr=False)
    w2: np.ndarray = field(repr=False)

    def __post_init__(self):
        w1 = np.asarray(self.w1, dtype=float)
        w2 = np.asarray(self.w2, dtype=float)
        if w1.ndim != 3 or w1.shape[1] != w1.shape[2] or w2.shape != w1.shape[1:]:
            raise ShapeError(f"inconsistent weight shapes {w1.shape} / {w2.shape}")
        if not (np.all(np.isfinite(w1)) and np.all(np.isfinite(w2))):
            raise DomainError("weights must be finite")
        if np.any(w1 < 0) or np.any(w2 < 0):
            raise DomainError("weights must be nonnegative")
        di = np.arange(w1.shape[1])
        if np.any(w1[:, di, di] != 0) or np.any(w2[di, di] != 0):
            raise DomainError("diagonal weights must be zero")
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)


def group_vector(phi: PrecisionSet | np.ndarray, i: int, j: int) -> np.ndarray:
    """The (i, j) entry collected across all windows, as a length-M vector."""
    mats = phi.matrices if isinstance(phi, PrecisionSet) else np.asarray(phi)
    p = mats.shape[1]
    if not (0 <= i < p and 0 <= j < p):
        raise InvalidPairError(f"pair ({i}, {j}) out of range for p={p}")
    if i == j:
        raise InvalidPairError("diagonal entries do not form penalty groups")
    return mats[:, i, j].copy()


def group_norms(mats: np.ndarray) -> np.ndarray:
    """Entrywise cross-window 2-norms: out[i, j] = ||mats[:, i, j]||."""
    return np.sqrt(np.sum(np.abs(mats) ** 2, axis=0))


def log_sum_penalty(theta, lam: float, epsilon: float):
    """Concave magnitude penalty  lam * ln(1 + theta/epsilon)  for theta >= 0."""
    if not epsilon > 0:
        raise DomainError(f"epsilon must be > 0, got {epsilon}")
    th = np.asarray(theta, dtype=float)
    if np.any(th < 0):
        raise DomainError("log-sum penalty is only defined for nonnegative input")
    out = lam * np.log1p(th / epsilon)
    return out if out.ndim else float(out)


def _logdet_hermitian(mat: np.ndarray) -> float:
    try:
        chol = np.linalg.cholesky(mat)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefiniteError(
            "matrix is not Hermitian positive definite"
        ) from exc
    return 2.0 * float(np.sum(np.log(np.real(np.diagonal(chol)))))


def whittle_term(phi: PrecisionSet, s: SpectralStats) -> float:
    """Frequency-domain Gaussian fit term.

    Sums  Re tr(S_k Phi_k) - ln det Phi_k  over windows.  Each Phi_k must
    be Hermitian positive definite.
    """
    mats = phi.matrices
    if mats.shape != s.matrices.shape:
        raise ShapeError(
            f"precision stack {mats.shape} does not match stats {s.matrices.shape}"
        )
    total = 0.0
    for k in range(mats.shape[0]):
        trace = np.real(np.trace(s.matrices[k] @ mats[k]))
        total += float(trace) - _logdet_hermitian(mats[k])
    return total


def objective(phi: PrecisionSet, s: SpectralStats, cfg: PenaltyConfig) -> float:
    """Full penalized objective at phi.

    Both penalty kinds sum over ordered off-diagonal pairs, so each edge
    contributes twice (its (i, j) and (j, i) entries are conjugates).
    """
    g = whittle_term(phi, s)
    mats = phi.matrices
    p = mats.shape[1]
    off = ~np.eye(p, dtype=bool)
    mags = np.abs(mats)[:, off]
    gn = group_norms(mats)[off]
    if cfg.kind == KIND_SGL:
        pen = cfg.lam1 * float(np.sum(mags)) + cfg.lam2 * float(np.sum(gn))
    else:
        pen = float(np.sum(log_sum_penalty(mags, cfg.lam1, cfg.epsilon))) + float(
            np.sum(log_sum_penalty(gn, cfg.lam2, cfg.epsilon))
        )
    return g + pen


def lla_weights(
    phi_bar: PrecisionSet | np.ndarray | None,
    cfg: PenaltyConfig,
    p: int | None = None,
    M: int | None = None,
) -> WeightMatrices:
    """Weights for one convex pass of the reweighted scheme.

    With ``phi_bar=None`` (the first pass) every off-diagonal weight is the
    flat level lam1 / lam2.  Given a previous iterate, each weight is the
    local slope of the log-sum penalty there: lam / (magnitude + epsilon),
    so entries that were large are penalized less on the next pass.
    """
    if phi_bar is None:
        if p is None or M is None:
            raise ShapeError("flat weights need explicit p and M")
        w1 = np.full((M, p, p), cfg.lam1, dtype=float)
        w2 = np.full((p, p), cfg.lam2, dtype=float)
    else:
        mats = phi_bar.matrices if isinstance(phi_bar, PrecisionSet) else np.asarray(phi_bar)
        w1 = cfg.lam1 / (np.abs(mats) + cfg.epsilon)
        w2 = cfg.lam2 / (group_norms(mats) + cfg.epsilon)
    di = np.arange(w1.shape[1])
    w1[:, di, di] = 0.0
    w2[di, di] = 0.0
    return WeightMatrices(w1=w1, w2=w2)
