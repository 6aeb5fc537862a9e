import cmath
import math

import numpy as np
import pytest

import vaging


def test_special_functions():
    log_scale, mant = vaging.i0_of_sqrt(0j)
    assert log_scale == 0.0 and mant == 1.0
    assert abs(vaging.j0(2.404825557695773)) < 1e-12
    log_scale, mant = vaging.i0_of_sqrt(complex(4.0, 0.0))
    assert abs(mant.real * math.exp(log_scale) - 2.2795853023360673) < 1e-12


def test_golden_values():
    assert abs(vaging.sigma_to_kappa(35.0) - 2.68) <= 0.01
    assert abs(vaging.sigma_to_kappa(15.0) - 14.59) <= 0.01
    assert abs(vaging.sigma_to_kappa(5.0) - 131.0) <= 1.0
    assert vaging.coherence_block(33.33) == 113
    assert vaging.coherence_block(16.67) == 225


def test_correlation_functions():
    assert vaging.acf(0.0, 33.33, 2.68) == 1.0
    tau = 1e-3
    x = 2 * math.pi * tau * 2e9 * 33.33 / 3e8
    assert abs(vaging.acf(tau, 33.33, 0.0) - vaging.j0(x)) < 1e-12
    R = vaging.spatial_matrix(14.59, M=8)
    assert R.shape == (8, 8)
    assert np.allclose(np.diag(R), 1.0)
    assert np.allclose(R, R.conj().T)
    assert np.linalg.eigvalsh(R).min() > -1e-10
    assert cmath.isclose(R[3, 1], vaging.scf(3, 1, 14.59, M=8))


def test_fit_recovers_synthetic_model():
    v, st, sr, c = [], [], [], []
    for vi in (16.67, 25.0, 33.33):
        for ti in (5.0, 15.0, 35.0):
            for ri in (5.0, 15.0, 35.0):
                v.append(vi)
                st.append(ti)
                sr.append(ri)
                c.append(500.0 - 4.0 * vi - 30.0 * math.sqrt(ti) + 2.0 * math.sqrt(ri))
    fit = vaging.fit_copt_model(v, st, sr, c)
    assert abs(fit["a0"] - 500.0) < 1e-6
    assert abs(fit["a_v"] + 4.0) < 1e-6
    assert abs(fit["a_T"] + 30.0) < 1e-6
    assert abs(fit["a_R"] - 2.0) < 1e-6
    assert fit["r2bar"] == pytest.approx(1.0)


def test_find_copt_and_errors():
    r = vaging.find_copt([60, 80, 100], [1.0, 2.0, 1.5])
    assert r["c_opt"] == 80 and not r["at_endpoint"]
    with pytest.raises(vaging.ConfigError):
        vaging.find_copt([60, 80], [1.0, 2.0])
    with pytest.raises(ValueError):
        vaging.sigma_to_kappa(-1.0)


def test_small_ase_curve():
    out = vaging.ase_curve(M=8, n_drops=2, n_channel=2, stride=8, c_stop=200)
    assert out["C"][0] == 60 and out["C"][-1] == 200
    assert len(out["ase_mean"]) == len(out["C"])
    assert all(a > 0 for a in out["ase_mean"])
    assert out["c_opt"] in out["C"]
