import numpy as np
import pytest

import specgraph as sg
from conftest import random_stats, var_stats


class TestSearchGrid:
    def test_from_range_is_log_spaced_descending(self):
        grid = sg.SearchGrid.from_range(0.01, 1.0, n_lambda=5)
        lams = np.array(grid.lambda_values)
        assert lams[0] == pytest.approx(1.0)
        assert lams[-1] == pytest.approx(0.01)
        ratios = lams[1:] / lams[:-1]
        np.testing.assert_allclose(ratios, ratios[0], rtol=1e-12)

    def test_rejects_unsorted_levels(self):
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=(0.1, 0.5))

    def test_rejects_duplicate_levels(self):
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=(0.5, 0.5, 0.1))

    def test_rejects_nonpositive_levels(self):
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=(0.5, 0.0))
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=())

    def test_rejects_split_out_of_band(self):
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=(0.5,), alpha_values=(0.4,))
        with pytest.raises(sg.DomainError):
            sg.SearchGrid(lambda_values=(0.5,), alpha_values=())

    def test_rejects_bad_range(self):
        with pytest.raises(sg.DomainError):
            sg.SearchGrid.from_range(1.0, 0.5)

    def test_default_split_grid(self):
        grid = sg.SearchGrid(lambda_values=(0.5, 0.1))
        assert grid.alpha_values == (0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3)
        assert grid.alpha0 == 0.1


class TestBicScore:
    def _identity_instance(self):
        mats = np.stack([np.eye(2, dtype=complex)])
        phi = sg.PrecisionSet(matrices=mats.copy())
        stats = sg.SpectralStats(p=2, M=1, matrices=mats.copy())
        return phi, stats

    def test_identity_frozen_value(self):
        """Identity fit at K=10: 2*10*2 plus ln(20) per nonzero entry."""
        phi, stats = self._identity_instance()
        got = sg.bic_score(phi, stats, K=10, M=1)
        assert got == pytest.approx(40.0 + 2.0 * np.log(20.0), rel=1e-12)

    def test_sparse_copy_controls_count(self):
        phi, stats = self._identity_instance()
        dense = sg.bic_score(phi, stats, K=10, M=1)
        sparse = np.zeros((1, 2, 2), dtype=complex)
        sparse[0, 0, 0] = 1.0
        got = sg.bic_score(phi, stats, K=10, M=1, sparse=sparse)
        assert got == pytest.approx(dense - np.log(20.0), rel=1e-12)

    def test_count_term_scales_with_nnz(self):
        rng = np.random.default_rng(9)
        stats = random_stats(rng, p=3, M=2)
        inv = np.stack([np.linalg.inv(m) for m in stats.matrices])
        phi = sg.PrecisionSet(matrices=inv)
        full = sg.bic_score(phi, stats, K=7, M=2)
        masked = inv.copy()
        masked[:, 0, 1] = 0.0
        masked[:, 1, 0] = 0.0
        fewer = sg.bic_score(phi, stats, K=7, M=2, sparse=masked)
        assert full - fewer == pytest.approx(4.0 * np.log(28.0), rel=1e-12)

    def test_shape_mismatch_rejected(self):
        phi, stats = self._identity_instance()
        other = sg.SpectralStats(p=3, M=1, matrices=np.stack([np.eye(3) + 0j]))
        with pytest.raises(sg.ShapeError):
            sg.bic_score(phi, other, K=10, M=1)

    def test_bad_window_counts_rejected(self):
        phi, stats = self._identity_instance()
        with pytest.raises(sg.DomainError):
            sg.bic_score(phi, stats, K=0, M=1)
        with pytest.raises(sg.DomainError):
            sg.bic_score(phi, stats, K=10, M=0)


class TestLambdaRange:
    def test_brackets_the_edge_regime(self):
        s = var_stats(seed=5, p=8, n=512)
        lo, hi = sg.lambda_range(s, kind="sgl")
        assert 0 < lo < hi
        assert hi / lo == pytest.approx(10.0, rel=1e-12)
        # bottom of the range keeps edges; above the bracket none survive
        cfg_lo = sg.PenaltyConfig(kind="sgl", lam=lo, alpha=0.1)
        _, w_lo, _ = sg.solve(s, cfg_lo)
        assert sg.select_edges(w_lo).edge_count > 0
        cfg_hi = sg.PenaltyConfig(kind="sgl", lam=2.1 * hi, alpha=0.1)
        _, w_hi, _ = sg.solve(s, cfg_hi)
        assert sg.select_edges(w_hi).edge_count == 0

    def test_reweighted_range_sits_below_convex_range(self):
        """Reweighting sparsifies harder, so its bracket tops out lower."""
        s = var_stats(seed=5, p=8, n=512)
        lo_c, hi_c = sg.lambda_range(s, kind="sgl")
        lo_r, hi_r = sg.lambda_range(s, kind="sglsp")
        assert hi_r < hi_c

    def test_diagonal_data_warns_and_falls_back(self):
        rng = np.random.default_rng(3)
        mats = np.stack([np.diag(rng.uniform(1.0, 2.0, size=3)).astype(complex)
                         for _ in range(2)])
        s = sg.SpectralStats(p=3, M=2, matrices=mats)
        with pytest.warns(UserWarning):
            lo, hi = sg.lambda_range(s, kind="sgl", lam_floor=2.0**-8)
        assert 0 < lo < hi

    def test_sweep_gives_up_at_ceiling(self):
        s = var_stats(seed=5, p=8, n=512)
        with pytest.raises(sg.SweepExhaustedError):
            sg.lambda_range(s, kind="sgl", lam_init=1e-6, lam_ceil=1e-5)


class TestSearch:
    def _grid(self):
        return sg.SearchGrid.from_range(0.02, 0.4, n_lambda=6,
                                        alpha_values=(0.0, 0.1, 0.2, 0.3))

    def test_record_layout(self):
        s = var_stats(seed=11, p=6, n=512)
        grid = self._grid()
        cfg, records = sg.search(s, grid, kind="sgl")
        stage1 = [r for r in records if r.stage == 1]
        stage2 = [r for r in records if r.stage == 2]
        assert len(stage1) == 6
        assert len(stage2) == 4
        assert [r.lam for r in stage1] == sorted(grid.lambda_values, reverse=True)
        assert all(r.alpha == grid.alpha0 for r in stage1)
        assert all(r.lam == cfg.lam for r in stage2)
        assert [r.alpha for r in stage2] == [0.3, 0.2, 0.1, 0.0]

    def test_chosen_minimizes_stage_records(self):
        s = var_stats(seed=11, p=6, n=512)
        cfg, records = sg.search(s, self._grid(), kind="sgl")
        stage1 = [r for r in records if r.stage == 1]
        stage2 = [r for r in records if r.stage == 2]
        best1 = min(stage1, key=lambda r: r.bic)
        assert cfg.lam == best1.lam
        best2 = min(stage2, key=lambda r: r.bic)
        assert cfg.alpha == best2.alpha
        assert cfg.kind == "sgl"

    def test_needs_window_length(self):
        rng = np.random.default_rng(13)
        s = random_stats(rng, p=3, M=2)  # carries no frequency plan
        grid = sg.SearchGrid(lambda_values=(0.2, 0.1))
        with pytest.raises(sg.DomainError):
            sg.search(s, grid, kind="sgl")
        cfg, records = sg.search(s, grid, kind="sgl", K=9)
        assert cfg.lam in grid.lambda_values

    def test_deterministic(self):
        s = var_stats(seed=17, p=6, n=512)
        grid = self._grid()
        cfg_a, rec_a = sg.search(s, grid, kind="sgl")
        cfg_b, rec_b = sg.search(s, grid, kind="sgl")
        assert cfg_a == cfg_b
        assert [(r.lam, r.alpha, r.bic) for r in rec_a] == [
            (r.lam, r.alpha, r.bic) for r in rec_b
        ]

    def test_reweighted_fit_beats_convex_fit_on_its_own_terms(self):
        """At the tuned level the reweighted solution must score no worse
        under the log-sum objective than the convex solution does."""
        s = var_stats(seed=19, p=8, n=512)
        lo, hi = sg.lambda_range(s, kind="sglsp")
        grid = sg.SearchGrid.from_range(lo, hi, n_lambda=5,
                                        alpha_values=(0.0, 0.1, 0.2))
        cfg, _ = sg.search(s, grid, kind="sglsp")
        phi_r, _, _ = sg.solve(s, cfg)
        convex_cfg = sg.PenaltyConfig(kind="sgl", lam=cfg.lam, alpha=cfg.alpha)
        phi_c, _, _ = sg.solve(s, convex_cfg)
        val_r = sg.objective(phi_r, s, cfg)
        val_c = sg.objective(phi_c, s, cfg)
        assert val_r <= val_c + 1e-8
