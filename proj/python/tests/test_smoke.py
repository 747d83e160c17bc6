import numpy as np
import pytest

import semicrossed as sc


@pytest.fixture
def doubling():
    return sc.System.circle(2)


def test_classify(doubling):
    assert sc.classify(doubling, "1/3") == ("periodic 2", 2, 0)
    assert sc.preimages(doubling, "1/3") == ["1/6", "2/3"]
    assert sc.lift(doubling, "1/3", "min", 3) == ["1/3", "1/6", "1/12"]


def test_orbit_rep(doubling):
    f = sc.element(doubling, "U*cos(1)")
    m = sc.orbit_rep(doubling, "1/3", f, 3)
    assert m.shape == (3, 3)
    assert np.allclose(m, -0.5 * np.eye(3, k=-1))
    assert sc.spectral_norm(m) == pytest.approx(0.5)


def test_periodic_rep_is_multiplicative(doubling):
    a = sc.element(doubling, "1 + U*cos(1)", "crossed")
    b = sc.element(doubling, "U^-1*sin(2) + 2", "crossed")
    lam = np.exp(0.7j)
    ab = sc.periodic_rep(doubling, "1/7", lam, sc.multiply(doubling, a, b))
    assert np.allclose(ab, sc.periodic_rep(doubling, "1/7", lam, a) @ sc.periodic_rep(doubling, "1/7", lam, b))


def test_norm_of_one_plus_u(doubling):
    est = sc.norm(doubling, sc.element(doubling, "1 + U"), nmax=32, grid=32)
    assert est["lower"] == pytest.approx(2.0)
    assert est["upper"] <= 2.0 + 1e-6
    assert est["witness"] == "periodic"


def test_errors(doubling):
    with pytest.raises(sc.SemicrossedError, match="NotSemicrossed"):
        sc.element(doubling, "U^-1")
    with pytest.raises(sc.SemicrossedError, match="column 1"):
        sc.System.sft([[1, 0], [1, 0]])


def test_config_and_verify():
    system, elements = sc.load_config("system { kind = perm; perm = 1 2 0 }\nelement F { expr = U + 1 }")
    assert system.is_homeomorphism
    assert elements["F"].band == 1
    assert "lemma7" in sc.checks()
    assert all(row[3] for row in sc.verify("lemma3"))
