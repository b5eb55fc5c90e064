import json
import math

import pytest

import modwave


def test_kdv_stable():
    p = modwave.kdv_params_from_roots(3.0, 1.0, 0.0)
    r = modwave.classify("kdv", p["a"], p["E"], p["c"])
    assert r["classification"] == "Stable"
    assert r["delta_mi"] > 0
    assert abs(sum(r["mu_roots"])) < 1e-8


def test_mkdv_cnoidal_unstable():
    r = modwave.classify("mkdv-focusing", 0.0, 0.5, -1.0)
    assert r["classification"] == "Unstable"
    assert modwave.mkdv_root_classifier(0.0, 0.5, -1.0, 1) == "Unstable2Real2Complex"


def test_jacobian_oracle():
    pf = modwave.param_jacobian("kdv", -0.5, 0.0, -4.0 / 3.0)["J"]
    fd = modwave.fd_jacobian("kdv", -0.5, 0.0, -4.0 / 3.0)["J"]
    for i in range(3):
        for j in range(3):
            assert abs(pf[i][j] - fd[i][j]) <= 1e-6 * abs(fd[i][j])


def test_profile_and_slopes():
    T, u = modwave.profile("kdv", -0.5, 0.0, -4.0 / 3.0, 64)
    assert len(u) == 64
    assert u[0] == pytest.approx(1.0, abs=1e-10)
    slopes, trunc = modwave.bloch_slopes("kdv", -0.5, 0.0, -4.0 / 3.0, modes=48)
    theory = modwave.classify("kdv", -0.5, 0.0, -4.0 / 3.0)["bloch_slopes"]
    for s in slopes:
        assert min(abs(s - t) for t in theory) < 1e-3
    assert trunc < 1e-8


def test_small_amplitude():
    kstar, lo, hi, changes = modwave.find_kstar()
    assert changes == 1 and abs(kstar - 1.146) < 1e-3
    assert modwave.lambda_fkdv(1.0, 0.75) < 0 < modwave.lambda_fkdv(1.0, 1.5)
    assert modwave.gamma_ilw(1.0) > 0
    d = modwave.delta_discriminant(1.0, 0.0, 1e-2)
    assert d == pytest.approx(modwave.delta_product_formula(1.0, 1e-2), rel=1e-10)


def test_bo():
    slopes = modwave.bo_bloch_slopes(0.0, 1.0, -2.0, modes=48)
    assert [s.real for s in slopes] == pytest.approx([-1.0, 1.0, 2.0], abs=1e-6)
    ev = modwave.bo_dispersion_eigenvalues(1.0, -2.0)
    assert min(abs(z - 2 * math.pi**2) for z in ev) < 1e-10


def test_report_json():
    rec = json.loads(modwave.report_json("kdv", -0.5, 0.0, -4.0 / 3.0))
    assert rec["schema"] == "modwave-report/1"
    assert rec["fingerprint"] == modwave.convention_fingerprint()


def test_errors():
    with pytest.raises(modwave.ModwaveError) as info:
        modwave.bo_profile(0.0, 3.0, -2.0)
    assert info.value.code == "ConstraintViolation"
