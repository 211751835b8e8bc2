"""Tests for Askey-Wilson polynomials, weight, integral, and relatives.

Oracles: the closed-form integral with its two pinned special values,
trapezoid quadrature on the continuous weight, and the three-term
recurrence as an independent evaluation path.
"""

import cmath
import math
import random

import pytest

from qspecial import (
    AWParams,
    INFINITY,
    aw_integral_closed,
    aw_integral_numeric,
    aw_norm,
    aw_poly,
    aw_poly_by_recurrence,
    aw_recurrence,
    continuous_q_hermite,
    q_racah,
    q_ultraspherical,
    qpoch,
)
from qspecial.askey_wilson import (
    al_salam_chihara,
    aw_gram_quadrature,
    aw_leading_coefficient,
    aw_qdifference_residual,
    q_racah_orthogonality,
)
from qspecial.errors import DomainError

P = AWParams(0.6, 0.4, -0.3, 0.2, 0.55)


def test_integral_pin_values():
    q = 0.55
    sq = math.sqrt(q)
    pinned = AWParams(1.0, sq, -1.0, -sq, q)
    assert complex(aw_integral_closed(pinned)).real == pytest.approx(1.0, abs=1e-10)
    zero = AWParams(0.0, 0.0, 0.0, 0.0, q)
    want = 2.0 / complex(qpoch(q, q, INFINITY)).real
    assert complex(aw_integral_closed(zero)).real == pytest.approx(
        want, rel=1e-10
    )


def test_integral_numeric_matches_closed():
    rng = random.Random(2)
    for _ in range(10):
        q = rng.uniform(0.2, 0.8)
        a = rng.uniform(-0.9, 0.9)
        b = rng.uniform(-0.9, 0.9)
        re = rng.uniform(-0.6, 0.6)
        im = rng.uniform(0.05, 0.6)
        if re * re + im * im > 0.81:
            continue
        p = AWParams(a, b, complex(re, im), complex(re, -im), q)
        closed = aw_integral_closed(p)
        # the quadrature covers theta in [0, pi], half the contour value
        numeric = 2.0 * aw_integral_numeric(p, n_nodes=512)
        assert abs(numeric - closed) <= 1e-8 * abs(closed)


def test_poly_degree_zero_is_one():
    assert complex(aw_poly(0, 0.3, P)).real == pytest.approx(1.0)


def test_poly_symmetric_in_parameters():
    # the 4phi3 representation privileges a; the polynomial does not
    swapped = AWParams(P.b, P.a, P.c, P.d, P.q)
    for n in range(1, 5):
        assert complex(aw_poly(n, 0.37, P)) == pytest.approx(
            complex(aw_poly(n, 0.37, swapped)), rel=1e-10
        )


def test_series_vs_recurrence():
    # q close to 1 keeps the terminating 4phi3 well conditioned at n = 8
    pp = AWParams(0.6, 0.4, -0.3, 0.2, 0.8)
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randrange(0, 9)
        x = rng.uniform(-1.0, 1.0)
        v1 = aw_poly(n, x, pp)
        v2 = aw_poly_by_recurrence(n, x, pp)
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))


def test_leading_coefficient_matches_recurrence_normalization():
    # dividing by the leading coefficient must produce a monic polynomial:
    # check via the value growth at a large argument
    n = 3
    big = 25.0
    lead = aw_leading_coefficient(n, P)
    val = complex(aw_poly(n, big, P))
    # k_n is the coefficient of x^n, so val / lead ~ x^n far from [-1, 1]
    assert abs(val / lead) == pytest.approx(big**n, rel=0.1)


def test_gram_quadrature_orthogonality():
    gram = aw_gram_quadrature(P, 5, n_nodes=1024)
    diag = [complex(aw_norm(n, P)).real for n in range(6)]
    scale = max(abs(d) for d in diag)
    for n in range(6):
        for m in range(6):
            g = complex(gram[n][m]).real
            if n == m:
                assert abs(g - diag[n]) <= 1e-8 * max(abs(diag[n]), 1e-300)
            else:
                assert abs(g) <= 1e-9 * scale


def test_qdifference_residual():
    for n in range(0, 6):
        for theta in (0.4, 1.1, 2.0):
            z = cmath.exp(1j * theta)
            res = aw_qdifference_residual(n, z, P)
            s = max(1.0, abs(aw_poly(n, math.cos(theta), P)))
            assert abs(res) <= 1e-9 * s


def test_al_salam_chihara_is_two_parameter_specialization():
    n, x = 4, 0.3
    spec = AWParams(0.5, -0.35, 0.0, 0.0, 0.6)
    assert complex(al_salam_chihara(n, x, 0.5, -0.35, 0.6)) == pytest.approx(
        complex(aw_poly(n, x, spec)), rel=1e-11
    )


def test_continuous_q_hermite_recurrence():
    # H_{n+1} = 2x H_n - (1-q^n) H_{n-1}
    q, theta = 0.5, 0.8
    x = math.cos(theta)
    h = [complex(continuous_q_hermite(n, x, q)) for n in range(7)]
    for n in range(1, 6):
        lhs = h[n + 1]
        rhs = 2 * x * h[n] - (1 - q**n) * h[n - 1]
        assert lhs == pytest.approx(rhs, rel=1e-11)


def test_q_ultraspherical_three_forms():
    q, beta = 0.85, 0.45
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randrange(0, 9)
        theta = rng.uniform(0.1, math.pi - 0.1)
        v1 = complex(q_ultraspherical(n, theta, beta, q, form="fourier"))
        v2 = complex(q_ultraspherical(n, theta, beta, q, form="phi"))
        v3 = complex(q_ultraspherical(n, theta, beta, q, form="aw"))
        s = max(1.0, abs(v1))
        assert abs(v1 - v2) <= 1e-9 * s
        assert abs(v1 - v3) <= 1e-9 * s


def test_q_racah_value_at_first_node():
    # R_n(mu(0)) = 1
    alpha, beta, gamma, delta, q, N = 0.4, 0.3, None, 0.6, 0.5, 5
    gamma = q ** float(-N - 1)  # gamma q = q^{-N}
    for n in range(N + 1):
        val = q_racah(n, 0, alpha, beta, gamma, delta, q, N)
        assert complex(val).real == pytest.approx(1.0, rel=1e-11)


def test_q_racah_orthogonality():
    q, N = 0.5, 5
    alpha, beta, delta = 0.4, 0.3, 0.6
    gamma = q ** float(-N - 1)
    diag = [
        abs(complex(q_racah_orthogonality(n, n, alpha, beta, gamma, delta, q, N)))
        for n in range(4)
    ]
    scale = max(diag)
    assert all(d > 0 for d in diag)
    for n in range(4):
        for m in range(n + 1, 4):
            off = abs(
                complex(q_racah_orthogonality(n, m, alpha, beta, gamma, delta, q, N))
            )
            assert off <= 1e-9 * scale


def test_q_racah_requires_termination_condition():
    with pytest.raises(DomainError):
        q_racah(1, 0, 0.4, 0.3, 0.37, 0.6, 0.5, 5)


def test_recurrence_coefficients_positive_c():
    # positivity of the C_n coefficients certifies orthogonality
    for n in range(1, 7):
        _, _, cn = aw_recurrence(n, P)
        assert complex(cn).real > 0
