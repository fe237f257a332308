import numpy as np
import pytest

import specgraph as sg
from oracles import averaged_outer, brute_dft


class TestTimeSeriesMatrix:
    def test_shape_and_accessors(self):
        x = sg.TimeSeriesMatrix(values=np.zeros((3, 10)))
        assert (x.p, x.n) == (3, 10)

    def test_rejects_one_dimensional(self):
        with pytest.raises(sg.InvalidDataError):
            sg.TimeSeriesMatrix(values=np.zeros(10))

    def test_rejects_single_sample(self):
        with pytest.raises(sg.InvalidDataError):
            sg.TimeSeriesMatrix(values=np.zeros((2, 1)))

    def test_rejects_nonfinite(self):
        vals = np.ones((2, 8))
        vals[1, 3] = np.nan
        with pytest.raises(sg.InvalidDataError):
            sg.TimeSeriesMatrix(values=vals)
        vals[1, 3] = np.inf
        with pytest.raises(sg.InvalidDataError):
            sg.TimeSeriesMatrix(values=vals)

    def test_centered_removes_channel_means(self):
        rng = np.random.default_rng(7)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(4, 64)) + 3.0)
        c = x.centered()
        assert np.allclose(c.values.mean(axis=1), 0.0, atol=1e-12)
        # original is untouched
        assert abs(x.values.mean()) > 1.0


class TestFrequencyPlan:
    def test_layout_for_128_samples(self):
        """Four windows of 15 bins on n=128: centers at bins 8, 23, 38, 53."""
        plan = sg.build_frequency_plan(n=128, K=15, M_override=4)
        assert plan.M == 4
        assert plan.half == 7
        assert plan.centers.tolist() == [8, 23, 38, 53]
        assert plan.members[0].tolist() == list(range(1, 16))
        assert plan.members[-1].tolist() == list(range(46, 61))
        np.testing.assert_allclose(
            plan.center_freqs, [0.0625, 0.1796875, 0.296875, 0.4140625]
        )

    def test_default_window_count(self):
        plan = sg.build_frequency_plan(n=128, K=15)
        assert plan.M == 3

    def test_members_stay_between_dc_and_nyquist(self):
        for n in (64, 100, 257, 1024):
            for K in (3, 7, 15, 31):
                try:
                    plan = sg.build_frequency_plan(n=n, K=K)
                except sg.InsufficientSamplesError:
                    continue
                assert plan.members.min() >= 1
                assert plan.members.max() <= (n - 1) // 2

    def test_windows_are_disjoint_and_contiguous(self):
        plan = sg.build_frequency_plan(n=512, K=9)
        flat = plan.members.ravel()
        assert len(set(flat.tolist())) == plan.M * plan.K
        assert flat.tolist() == list(range(1, plan.M * plan.K + 1))

    def test_even_window_rejected(self):
        with pytest.raises(sg.InvalidWindowError):
            sg.build_frequency_plan(n=128, K=8)

    def test_tiny_window_rejected(self):
        with pytest.raises(sg.InvalidWindowError):
            sg.build_frequency_plan(n=128, K=1)

    def test_too_short_series_rejected(self):
        with pytest.raises(sg.InsufficientSamplesError):
            sg.build_frequency_plan(n=16, K=15)

    def test_override_beyond_nyquist_rejected(self):
        with pytest.raises(sg.WindowOverflowError):
            sg.build_frequency_plan(n=128, K=15, M_override=5)
        # M * K = 60 <= 63 still fits
        plan = sg.build_frequency_plan(n=128, K=15, M_override=4)
        assert plan.M == 4

    def test_override_below_one_rejected(self):
        with pytest.raises(sg.WindowOverflowError):
            sg.build_frequency_plan(n=128, K=15, M_override=0)


class TestDft:
    def test_constant_series_loads_dc_bin(self):
        x = sg.TimeSeriesMatrix(values=np.full((1, 4), 1.5))
        d = sg.dft(x)
        assert d.coeffs[0, 0] == pytest.approx(3.0)
        np.testing.assert_allclose(d.coeffs[0, 1:], 0.0, atol=1e-12)

    def test_alternating_series_loads_top_bin(self):
        x = sg.TimeSeriesMatrix(values=np.array([[1.0, -1.0]]))
        d = sg.dft(x)
        assert d.coeffs[0, 0] == pytest.approx(0.0, abs=1e-15)
        assert d.coeffs[0, 1] == pytest.approx(np.sqrt(2.0))

    def test_matches_quadratic_time_transform(self):
        rng = np.random.default_rng(11)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(3, 16)))
        d = sg.dft(x)
        np.testing.assert_allclose(d.coeffs, brute_dft(x.values), atol=1e-12)

    def test_energy_preserved(self):
        # unitary scaling: coefficient energy equals sample energy
        for seed in range(5):
            rng = np.random.default_rng(seed)
            x = sg.TimeSeriesMatrix(values=rng.normal(size=(4, 100)))
            d = sg.dft(x)
            assert np.sum(np.abs(d.coeffs) ** 2) == pytest.approx(
                np.sum(x.values**2), rel=1e-12
            )

    def test_conjugate_symmetry_for_real_input(self):
        rng = np.random.default_rng(3)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(2, 12)))
        d = sg.dft(x)
        for m in range(1, 12):
            np.testing.assert_allclose(
                d.coeffs[:, 12 - m], np.conj(d.coeffs[:, m]), atol=1e-12
            )


class TestSmoothedPsd:
    def test_matches_direct_average(self):
        rng = np.random.default_rng(19)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(3, 64)))
        plan = sg.build_frequency_plan(n=64, K=5)
        d = sg.dft(x)
        s = sg.smoothed_psd(d, plan)
        assert s.matrices.shape == (plan.M, 3, 3)
        for k in range(plan.M):
            expect = averaged_outer(d.coeffs, plan.members[k])
            np.testing.assert_allclose(s.matrices[k], expect, atol=1e-12)

    def test_exactly_hermitian(self):
        rng = np.random.default_rng(23)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(5, 256)))
        plan = sg.build_frequency_plan(n=256, K=11)
        s = sg.smoothed_psd(sg.dft(x), plan)
        for k in range(s.M):
            assert np.array_equal(s.matrices[k], s.matrices[k].conj().T)

    def test_positive_semidefinite(self):
        rng = np.random.default_rng(29)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(4, 200)))
        plan = sg.build_frequency_plan(n=200, K=9)
        s = sg.smoothed_psd(sg.dft(x), plan)
        for k in range(s.M):
            assert np.linalg.eigvalsh(s.matrices[k]).min() > -1e-12

    def test_full_rank_when_window_covers_dimension(self):
        """With K >= p and generic data each averaged matrix is invertible."""
        rng = np.random.default_rng(31)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(3, 128)))
        plan = sg.build_frequency_plan(n=128, K=7)
        s = sg.smoothed_psd(sg.dft(x), plan)
        for k in range(s.M):
            assert np.linalg.eigvalsh(s.matrices[k]).min() > 1e-8

    def test_plan_length_mismatch_rejected(self):
        rng = np.random.default_rng(37)
        d = sg.dft(sg.TimeSeriesMatrix(values=rng.normal(size=(2, 64))))
        plan = sg.build_frequency_plan(n=128, K=5)
        with pytest.raises(sg.InvalidDataError):
            sg.smoothed_psd(d, plan)

    def test_carries_plan_reference(self):
        rng = np.random.default_rng(41)
        x = sg.TimeSeriesMatrix(values=rng.normal(size=(2, 96)))
        plan = sg.build_frequency_plan(n=96, K=5)
        s = sg.smoothed_psd(sg.dft(x), plan)
        assert s.plan is plan
