import math

import numpy as np
import pytest

import nahopf


def test_lyapunov_and_critical_parameters():
    sys = nahopf.golden_arctan_system(4.0)
    base = nahopf.BaseSystem.rotation()
    lam = nahopf.lyapunov_max(nahopf.CocycleSpec.scaled_rotation(0.5), base, 0.0, 200_000)
    assert abs(lam - math.log(3 / (2 * math.sqrt(2)))) < 1e-3
    b1, b2 = nahopf.critical_betas(nahopf.HFunction.arctan(), lam)
    assert b1 < 4.0 + 0.02 and b2 > 4.5 - 0.02
    assert sys.r_top == 1.0


def test_field_shape_and_classification():
    field = nahopf.psi_field(nahopf.golden_arctan_system(6.08), 16, 12, 300, 1)
    assert field.shape == (16, 12)
    values = field.values
    assert isinstance(values, np.ndarray) and values.shape == (16, 12)
    assert np.all(values > 0) and np.all(values <= field.r_start)
    assert nahopf.classify(field)["regime"] == "Torus"
    assert nahopf.invariance_residual(field, nahopf.golden_arctan_system(6.08)) < 0.1


def test_trivial_regime():
    field = nahopf.psi_field(nahopf.golden_arctan_system(3.0), 8, 8, 1000, 1)
    assert nahopf.classify(field)["regime"] == "Trivial"


def test_forward_orbit_arrays():
    rep = nahopf.two_point_forward(nahopf.golden_arctan_system(4.08), 0.6, (0.1, 0.7), 300, 100, 500)
    assert rep["trajectory"].shape == (301, 2)
    assert rep["norms"].shape == (301,)


def test_cesaro_matches_scalar_iteration():
    kappa = nahopf.GOLDEN_ARCTAN_KAPPA
    beta = 1 / kappa
    model = nahopf.ModelSystem(nahopf.BaseSystem.rotation(), nahopf.CocycleSpec.rotation(0.7),
                               nahopf.HFunction.arctan(kappa), beta)
    r, total = math.hypot(0.3, 0.2), 0.0
    for _ in range(2000):
        total += r
        r = kappa * math.atan(beta * r)
    assert nahopf.cesaro_average(model, 0.0, (0.3, 0.2), 2000) == pytest.approx(total / 2000, rel=1e-12)


def test_time_one_checks_pass():
    checks = nahopf.time_one_checks(samples=5)
    assert all(c["pass"] for c in checks), checks


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        nahopf.CocycleSpec.constant([[2.0, 0.0], [0.0, 2.0]])
    with pytest.raises(ValueError):
        nahopf.golden_arctan_system(-1.0).r_top
    base = nahopf.BaseSystem.random_shift(1, 2, 10)
    with pytest.raises(IndexError):
        base.symbol(11)
