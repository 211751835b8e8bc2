"""Tests for q-exponentials, q-gamma/beta, theta, q-Bessel, partitions.

Oracles: infinite-product definitions via mpmath.qp, classical limits,
exhaustive partition enumeration, and integer power series inversion.
"""

import cmath
import math

import mpmath
import pytest

from qspecial import (
    E_q,
    INFINITY,
    beta_q,
    e_q,
    gamma_q,
    hahn_exton_bessel,
    jackson_bessel_1,
    jackson_bessel_2,
    partition_count,
    qpoch,
    theta4,
)
from qspecial.errors import DomainError
from qspecial.qfunctions import gamma_q_reciprocal, theta4_series


def test_e_q_product_form():
    # e_q(z) = 1 / (z; q)_oo for |z| < 1
    mpmath.mp.dps = 30
    z, q = 0.4, 0.6
    assert complex(e_q(z, q)).real == pytest.approx(
        float(1 / mpmath.qp(z, q)), rel=1e-13
    )


def test_E_q_product_form():
    mpmath.mp.dps = 30
    z, q = 1.7, 0.6
    assert complex(E_q(z, q)).real == pytest.approx(
        float(mpmath.qp(-z, q)), rel=1e-13
    )


def test_exponentials_are_reciprocal():
    # e_q(z) E_q(-z) = 1
    z, q = 0.35, 0.7
    assert complex(e_q(z, q) * E_q(-z, q)).real == pytest.approx(1.0, rel=1e-12)


def test_gamma_q_at_integer():
    assert complex(gamma_q(3, 0.5)).real == pytest.approx(1.5, rel=1e-13)
    # Gamma_q(n+1) = [n]_q!
    q = 0.7
    qfact = 1.0
    for k in range(1, 5):
        qfact *= (1 - q**k) / (1 - q)
    assert complex(gamma_q(5, q)).real == pytest.approx(qfact, rel=1e-12)


def test_gamma_q_functional_equation():
    q, z = 0.55, 1.37
    lhs = gamma_q(z + 1, q)
    rhs = (1 - q**z) / (1 - q) * gamma_q(z, q)
    assert complex(lhs).real == pytest.approx(complex(rhs).real, rel=1e-12)


def test_gamma_q_classical_limit():
    # the default factor budget supports q up to about 0.99; the error
    # scales like (1 - q), so check decrease along 0.9, 0.99
    for z in (0.5, 2.3, 4.1):
        e1 = abs(complex(gamma_q(z, 0.9)).real - math.gamma(z)) / math.gamma(z)
        e2 = abs(complex(gamma_q(z, 0.99)).real - math.gamma(z)) / math.gamma(z)
        assert e2 < e1
        assert e2 < 0.05


def test_gamma_q_reciprocal_consistent():
    q, z = 0.6, 2.2
    assert complex(gamma_q(z, q) * gamma_q_reciprocal(z, q)).real == pytest.approx(
        1.0, rel=1e-12
    )


def test_beta_q_gamma_ratio():
    q, a, b = 0.65, 1.4, 2.3
    lhs = beta_q(a, b, q)
    rhs = gamma_q(a, q) * gamma_q(b, q) / gamma_q(a + b, q)
    assert complex(lhs).real == pytest.approx(complex(rhs).real, rel=1e-11)


def test_theta4_product_equals_series():
    for x in (0.0, 0.13, 0.5, 0.77):
        prod = theta4(x, 0.35)
        ser = theta4_series(x, 0.35)
        assert abs(prod - ser) <= 1e-12 * max(1.0, abs(ser))


def test_theta4_matches_mpmath_jtheta():
    # theta_4(x;q) with nome q corresponds to jtheta(4, pi x, q)
    mpmath.mp.dps = 25
    q = 0.4
    for x in (0.0, 0.2, 0.45):
        want = float(mpmath.jtheta(4, mpmath.pi * x, q))
        assert complex(theta4(x, q)).real == pytest.approx(want, rel=1e-12)


def test_jackson_bessel_relation():
    # J^(2)_nu(z;q) = (-z^2/4; q)_oo J^(1)_nu(z;q)
    nu, z, q = 0.5, 1.2, 0.55
    lhs = jackson_bessel_2(nu, z, q)
    rhs = qpoch(-z * z / 4.0, q, INFINITY) * jackson_bessel_1(nu, z, q)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_jackson_bessel_1_domain():
    with pytest.raises(DomainError):
        jackson_bessel_1(0.0, 2.5, 0.5)


def test_bessel_small_argument_leading_order():
    # all three families behave like (z/2)^nu (or z^nu) times a prefactor
    nu, q = 1.0, 0.6
    pref = qpoch(q ** (nu + 1), q, INFINITY) / qpoch(q, q, INFINITY)
    z = 1e-6
    assert abs(jackson_bessel_1(nu, z, q) - pref * (z / 2) ** nu) <= 1e-14
    assert abs(hahn_exton_bessel(nu, z, q) - pref * z**nu) <= 1e-14


def enumerate_partitions(n):
    """Count partitions by explicit recursive enumeration (slow, exact)."""

    def count(remaining, largest):
        if remaining == 0:
            return 1
        return sum(
            count(remaining - part, part)
            for part in range(min(remaining, largest), 0, -1)
        )

    return count(n, n)


def test_partition_small_values_by_enumeration():
    assert partition_count(5) == 7
    assert partition_count(10) == 42
    for n in range(0, 16):
        assert partition_count(n) == enumerate_partitions(n)


def test_partition_matches_euler_product_coefficients():
    # invert prod_k (1 - x^k) as an integer power series up to x^40
    order = 41
    euler = [0] * order
    euler[0] = 1
    for k in range(1, order):
        new = euler[:]
        for i in range(order - k):
            new[i + k] -= euler[i]
        euler = new
    inv = [0] * order
    inv[0] = 1
    for m in range(1, order):
        acc = 0
        for j in range(1, m + 1):
            acc += euler[j] * inv[m - j]
        inv[m] = -acc
    for n in range(order):
        assert partition_count(n) == inv[n]


def test_partition_rejects_out_of_range():
    with pytest.raises(DomainError):
        partition_count(-1)
    with pytest.raises(DomainError):
        partition_count(10_001)
