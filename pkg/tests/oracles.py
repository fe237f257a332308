"""Independent reference implementations used to freeze expected values.

Everything here is deliberately naive (double loops, dense algebra, grid
search) or delegates to an off-the-shelf convex solver, so expectations
never share a code path with the package under test.
"""
import warnings

import numpy as np


def brute_dft(values: np.ndarray) -> np.ndarray:
    """O(n^2) transform with the 1/sqrt(n) normalization."""
    p, n = values.shape
    out = np.zeros((p, n), dtype=complex)
    for m in range(n):
        for t in range(n):
            out[:, m] += values[:, t] * np.exp(-2j * np.pi * m * t / n)
    return out / np.sqrt(n)


def averaged_outer(coeffs: np.ndarray, members) -> np.ndarray:
    """Plain accumulation of outer products over one window's bins."""
    p = coeffs.shape[0]
    acc = np.zeros((p, p), dtype=complex)
    for b in members:
        d = coeffs[:, b]
        acc += np.outer(d, np.conj(d))
    return acc / len(members)


def dense_whittle(phi_mats: np.ndarray, s_mats: np.ndarray) -> float:
    """Fit term via slogdet and explicit entry loops."""
    total = 0.0
    for k in range(phi_mats.shape[0]):
        p = phi_mats.shape[1]
        tr = 0.0
        for i in range(p):
            for j in range(p):
                tr += (s_mats[k][i, j] * phi_mats[k][j, i]).real
        _, logdet = np.linalg.slogdet(phi_mats[k])
        total += tr - logdet
    return total


def sgl_objective(phi_mats: np.ndarray, s_mats: np.ndarray, lam1: float, lam2: float) -> float:
    """Convex objective by pairwise loops (ordered pairs, as in the solver)."""
    val = dense_whittle(phi_mats, s_mats)
    _, p, _ = phi_mats.shape
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            col = phi_mats[:, i, j]
            val += lam1 * float(np.abs(col).sum()) + lam2 * float(np.linalg.norm(col))
    return val


def prox_group_value(a, w1_over_rho, w2_over_rho, z) -> float:
    """w-subproblem objective for one group, scaled by 1/rho."""
    w1 = np.asarray(w1_over_rho, dtype=float)
    z = np.asarray(z, dtype=complex)
    a = np.asarray(a, dtype=complex)
    return float(
        np.sum(w1 * np.abs(z))
        + 0.5 * np.sum(np.abs(z - a) ** 2)
        + w2_over_rho * np.linalg.norm(z)
    )


def prox_group_grid_min(a, w1_over_rho, w2_over_rho, steps=201, refinements=3) -> float:
    """Grid-search the group prox over magnitudes; phases follow the input.

    For fixed magnitudes the quadratic term is minimized by aligning each
    coordinate's phase with its input, so the search space is the
    nonnegative orthant of magnitudes.
    """
    a = np.asarray(a, dtype=complex)
    absa = np.abs(a)
    phase = np.where(absa > 0, a / np.where(absa > 0, absa, 1.0), 1.0)
    w1 = np.asarray(w1_over_rho, dtype=float)
    M = len(a)
    lo = np.zeros(M)
    hi = absa + 1e-9
    best = np.inf
    for _ in range(refinements):
        axes = [np.linspace(lo[k], hi[k], steps) for k in range(M)]
        grids = np.meshgrid(*axes, indexing="ij")
        mags = np.stack([g.ravel() for g in grids], axis=-1)
        z = mags * phase[None, :]
        vals = (
            (w1[None, :] * mags).sum(axis=1)
            + 0.5 * np.sum(np.abs(z - a[None, :]) ** 2, axis=1)
            + w2_over_rho * np.linalg.norm(mags, axis=1)
        )
        idx = int(np.argmin(vals))
        best = min(best, float(vals[idx]))
        center = mags[idx]
        span = (hi - lo) / (steps - 1) * 3.0
        lo = np.maximum(center - span, 0.0)
        hi = center + span
    return best


def cvx_weighted_optimum(s_mats: np.ndarray, w1: np.ndarray, w2: np.ndarray,
                         eps: float = 1e-9, max_iters: int = 300000) -> float:
    """High-precision optimum of the weighted convex problem via cvxpy/SCS."""
    import cvxpy as cp

    M, p, _ = s_mats.shape
    X = [cp.Variable((p, p), hermitian=True) for _ in range(M)]
    fit = sum(
        cp.real(cp.trace(s_mats[k] @ X[k])) - cp.log_det(X[k]) for k in range(M)
    )
    pen = 0
    for i in range(p):
        for j in range(p):
            if i == j:
                continue
            for k in range(M):
                if w1[k, i, j] > 0:
                    pen = pen + w1[k, i, j] * cp.abs(X[k][i, j])
            if w2[i, j] > 0:
                pen = pen + w2[i, j] * cp.norm(cp.hstack([X[k][i, j] for k in range(M)]))
    prob = cp.Problem(cp.Minimize(fit + pen))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        prob.solve(solver=cp.SCS, eps=eps, max_iters=max_iters)
    if prob.value is None:
        raise RuntimeError("convex oracle failed to solve")
    return float(prob.value)


def var2_exact_ipsd_entry01(f):
    """Exact (0, 1) inverse-spectral entry for the two-channel model where
    channel 0 is 0.5 times the lag-1 value of channel 1 plus noise.

    Derived from the lag covariances: R(0) = diag(1.25, 1), R(1) has 0.5 in
    entry (0, 1) and zeros elsewhere.  The spectral density follows as
    R(0) + R(1) e^{-2i pi f} + R(1)^T e^{+2i pi f}, which is inverted in
    closed form (its determinant is 1).
    """
    f = np.asarray(f, dtype=float)
    s = np.empty(f.shape + (2, 2), dtype=complex)
    s[..., 0, 0] = 1.25
    s[..., 1, 1] = 1.0
    s[..., 0, 1] = 0.5 * np.exp(-2j * np.pi * f)
    s[..., 1, 0] = 0.5 * np.exp(2j * np.pi * f)
    inv = np.linalg.inv(s)
    return inv[..., 0, 1]
