import numpy as np

import specgraph as sg


def random_hermitian_pd(rng, p, ridge=1.5):
    """Well-conditioned random Hermitian positive definite matrix."""
    a = rng.normal(size=(p, p)) + 1j * rng.normal(size=(p, p))
    m = a @ a.conj().T / p + ridge * np.eye(p)
    return (m + m.conj().T) / 2.0


def random_stats(rng, p, M, ridge=1.5):
    mats = np.stack([random_hermitian_pd(rng, p, ridge) for _ in range(M)])
    return sg.SpectralStats(p=p, M=M, matrices=mats)


def var_stats(seed, p=8, n=512, K=None, M=None, cluster_size=None,
              density=0.25, with_truth=False):
    """Smoothed stats from a simulated clustered autoregressive series.

    Higher default density than the benchmark so that small p still gets
    a few edges.
    """
    if cluster_size is None:
        cluster_size = p
    model = sg.gen_var_clusters(
        p=p, cluster_size=cluster_size, density=density, seed=seed
    )
    series = sg.simulate(model, n=n, seed=seed + 1).centered()
    if K is None:
        K, M_def = sg.default_window(n)
        if M is None:
            M = M_def
    plan = sg.build_frequency_plan(n=n, K=K, M_override=M)
    stats = sg.smoothed_psd(sg.dft(series), plan)
    if with_truth:
        truth = sg.true_ipsd(model, plan.center_freqs)
        return stats, truth
    return stats


def tight_options(**overrides):
    """Solver options pushed toward high accuracy for oracle comparisons."""
    base = dict(eps_abs=1e-9, eps_rel=1e-9, max_inner=20000)
    base.update(overrides)
    return sg.SolverOptions(**base)
