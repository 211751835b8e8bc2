"""Parity tests between the compiled kernels and the pure-Python twins."""

import importlib.util
import random

import pytest

from qspecial import _kernels_py as py

spec = importlib.util.find_spec("qspecial._kernels")
if spec is None:
    pytest.skip("compiled kernels not built", allow_module_level=True)

from qspecial import _kernels as cy  # noqa: E402


def test_backend_labels():
    assert py.BACKEND == "python"
    assert cy.BACKEND == "c"


def test_qpoch_finite_parity():
    rng = random.Random(1)
    for _ in range(50):
        a = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
        q = rng.uniform(0.1, 0.95)
        k = rng.randrange(0, 40)
        assert cy.qpoch_finite(a, q, k) == pytest.approx(
            py.qpoch_finite(a, q, k), rel=1e-14, abs=1e-300
        )


def test_qpoch_negative_parity():
    rng = random.Random(2)
    for _ in range(50):
        a = rng.uniform(-1.5, 1.5)
        q = rng.uniform(0.3, 0.9)
        k = rng.randrange(1, 15)
        vc, sc = cy.qpoch_negative(a, q, k)
        vp, sp = py.qpoch_negative(a, q, k)
        assert sc == sp
        assert vc == pytest.approx(vp, rel=1e-13)


def test_qpoch_infinite_parity():
    rng = random.Random(3)
    for _ in range(50):
        a = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
        q = rng.uniform(0.1, 0.9)
        vc, sc = cy.qpoch_infinite(a, q, 1e-16, 10000)
        vp, sp = py.qpoch_infinite(a, q, 1e-16, 10000)
        assert sc == sp == 0
        assert vc == pytest.approx(vp, rel=1e-14)


def test_phi_sum_parity():
    rng = random.Random(4)
    for _ in range(50):
        q = rng.uniform(0.2, 0.8)
        nu = rng.randrange(0, 3)
        # keep the radius of convergence positive: r <= s + 1
        nl = rng.randrange(max(0, nu - 1), 3)
        upper = tuple(complex(rng.uniform(0.1, 0.9)) for _ in range(nu))
        lower = tuple(complex(rng.uniform(0.1, 0.9)) for _ in range(nl))
        z = rng.uniform(0.05, 0.8)
        sp_pow = 1 + len(lower) - len(upper)
        vc, sc = cy.phi_sum(upper, lower, q, z, sp_pow, -1, 1e-16, 100000)
        vp, s2 = py.phi_sum(upper, lower, q, z, sp_pow, -1, 1e-16, 100000)
        assert sc == s2 == 0
        assert vc == pytest.approx(vp, rel=1e-13)


def test_phi_sum_terminating_parity():
    q = 0.6
    n = 7
    upper = (q ** float(-n), 0.3 + 0.0j)
    lower = (0.5 + 0.0j,)
    vc, sc = cy.phi_sum(upper, lower, q, 0.4, 0, n, 1e-16, 100000)
    vp, sp = py.phi_sum(upper, lower, q, 0.4, 0, n, 1e-16, 100000)
    assert sc == sp == 0
    assert vc == pytest.approx(vp, rel=1e-14)


def test_phi_sum_zero_denominator_status():
    q = 0.5
    lower = (q ** -2.0,)
    vc, sc = cy.phi_sum((0.3 + 0j,), lower, q, 0.2, 1, -1, 1e-16, 1000)
    vp, sp = py.phi_sum((0.3 + 0j,), lower, q, 0.2, 1, -1, 1e-16, 1000)
    assert sc == sp == 2
