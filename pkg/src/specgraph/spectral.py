"""Frequency-domain statistics for multivariate time series.

Turns a p-channel real series of length n into averaged periodogram
matrices on a grid of disjoint Fourier windows.  These matrices are the
sufficient statistics consumed by the penalized solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InsufficientSamplesError,
    InvalidDataError,
    InvalidWindowError,
    WindowOverflowError,
)

__all__ = [
    "TimeSeriesMatrix",
    "FrequencyPlan",
    "DftCoefficients",
    "SpectralStats",
    "build_frequency_plan",
    "dft",
    "smoothed_psd",
]


@dataclass(frozen=True)
class TimeSeriesMatrix:
    """Real-valued series, one row per channel, one column per time step."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 2:
            raise InvalidDataError(f"expected a 2-d array (p, n), got ndim={vals.ndim}")
        if vals.shape[0] < 1 or vals.shape[1] < 2:
            raise InvalidDataError(f"series shape {vals.shape} is too small")
        if not np.all(np.isfinite(vals)):
            raise InvalidDataError("series contains NaN or Inf entries")
        object.__setattr__(self, "values", vals)

    @property
    def p(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def centered(self) -> "TimeSeriesMatrix":
        """Return a copy with the sample mean of each channel removed."""
        return TimeSeriesMatrix(self.values - self.values.mean(axis=1, keepdims=True))


@dataclass(frozen=True)
class FrequencyPlan:
    """Placement of disjoint smoothing windows on the Fourier grid.

    Window k (0-based here) averages the K bins (k*K + 1) .. (k+1)*K and is
    centered on bin k*K + half + 1 where half = (K - 1) // 2.  All member
    bins sit strictly between DC and the Nyquist bin.
    """

    n: int
    K: int
    M: int
    half: int
    centers: np.ndarray = field(repr=False)
    members: np.ndarray = field(repr=False)

    @property
    def center_freqs(self) -> np.ndarray:
        """Window center frequencies in cycles per sample."""
        return self.centers / self.n


def build_frequency_plan(n: int, K: int, M_override: int | None = None) -> FrequencyPlan:
    """Lay out M windows of K consecutive Fourier bins for a length-n series.

    Parameters
    ----------
    n : int
        Number of time samples.
    K : int
        Window length in bins; must be odd and >= 3.
    M_override : int, optional
        Use this many windows instead of the default, which is the largest
        count whose top center stays at least half a window below Nyquist.

    Raises
    ------
    InvalidWindowError
        If K is not an odd integer >= 3.
    InsufficientSamplesError
        If not even one window fits.
    WindowOverflowError
        If M_override windows would reach the Nyquist bin.
    """
    if K < 3 or K % 2 == 0:
        raise InvalidWindowError(f"window length must be odd and >= 3, got K={K}")
    if n < 2:
        raise InsufficientSamplesError(f"need at least 2 samples, got n={n}")
    half = (K - 1) // 2
    # Highest usable bin index: strictly below Nyquist frequency 1/2.
    max_bin = (n - 1) // 2
    M_default = (n // 2 - half - 1) // K
    if M_override is None:
        M = M_default
        if M < 1:
            raise InsufficientSamplesError(
                f"no window of length K={K} fits below Nyquist for n={n}"
            )
    else:
        M = int(M_override)
        if M < 1:
            raise WindowOverflowError(f"window count must be >= 1, got {M}")
        if M * K > max_bin:
            raise WindowOverflowError(
                f"{M} windows of length {K} need bin {M * K}, "
                f"but only bins 1..{max_bin} are usable for n={n}"
            )
    ks = np.arange(M)
    centers = ks * K + half + 1
    offsets = np.arange(-half, half + 1)
    members = centers[:, None] + offsets[None, :]
    return FrequencyPlan(n=n, K=K, M=M, half=half, centers=centers, members=members)


@dataclass(frozen=True)
class DftCoefficients:
    """Orthonormal DFT of a series; column m is the coefficient at bin m."""

    n: int
    coeffs: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.coeffs.shape[0]


def dft(x: TimeSeriesMatrix) -> DftCoefficients:
    """Unitary discrete Fourier transform of each channel.

    Uses the 1/sqrt(n) normalization, so total energy is preserved
    (sum of |coeffs|^2 equals sum of squares of the input).
    """
    n = x.n
    coeffs = np.fft.fft(x.values, axis=1) / np.sqrt(n)
    return DftCoefficients(n=n, coeffs=coeffs)


@dataclass(frozen=True)
class SpectralStats:
    """Averaged periodogram matrices, one Hermitian PSD p x p block per window.

    ``matrices`` has shape (M, p, p).  ``plan`` is None when the stats were
    assembled directly (the time-domain covariance path) rather than from a
    frequency plan.
    """

    p: int
    M: int
    matrices: np.ndarray = field(repr=False)
    plan: FrequencyPlan | None = None


def smoothed_psd(d: DftCoefficients, plan: FrequencyPlan) -> SpectralStats:
    """Average outer products of DFT coefficients over each plan window.

    Each window's matrix is (1/K) sum of d(f) d(f)^H over the K member
    bins, then symmetrized to be exactly Hermitian.
    """
    if plan.n != d.n:
        raise InvalidDataError(
            f"plan was built for n={plan.n} but coefficients have n={d.n}"
        )
    p = d.p
    out = np.empty((plan.M, p, p), dtype=complex)
    for k in range(plan.M):
        block = d.coeffs[:, plan.members[k]]
        s = block @ block.conj().T / plan.K
        out[k] = (s + s.conj().T) / 2.0
    return SpectralStats(p=p, M=plan.M, matrices=out, plan=plan)
