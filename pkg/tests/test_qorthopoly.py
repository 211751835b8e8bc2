"""Tests for big/little q-Jacobi and the discrete orthogonal family tableau.

Oracles: closed-form norms, Gram entries via q-integrals and finite
sums, dual series representations, and shift-operator algebra.
"""

import random

import pytest

from qspecial import (
    BigQJacobiParams,
    FamilyParams,
    big_qjacobi,
    big_qjacobi_gram,
    big_qjacobi_monic,
    big_qjacobi_norm,
    family_eval,
    family_orthogonality,
    little_qjacobi,
    little_qjacobi_gram,
    little_qjacobi_norm,
)
from qspecial.errors import DomainError
from qspecial.qorthopoly import (
    big_qjacobi_by_recurrence,
    big_qjacobi_eigenvalue,
    big_qjacobi_shift_down,
    big_qjacobi_shift_up,
    big_qjacobi_weight_integral,
    big_qjacobi_weight,
    little_qjacobi_orthogonality,
    qtaylor_coefficients,
    quadratic_transform_u,
    quadratic_transform_v,
    quadratic_transform_check,
)
from qspecial.qcalculus import qintegral_0a

BQJ = BigQJacobiParams(0.95, 0.3, 0.855, 1.0, 0.9)


def test_big_qjacobi_normalization_point():
    # normalized value 1 at x = c/(qa)
    x0 = BQJ.c / (BQJ.q * BQJ.a)
    assert complex(big_qjacobi(4, x0, BQJ)).real == pytest.approx(1.0, rel=1e-12)


def test_big_qjacobi_dual_path():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(0, 9)
        x = rng.uniform(-BQJ.d, BQJ.c)
        a = big_qjacobi_monic(n, x, BQJ)
        b = big_qjacobi_by_recurrence(n, x, BQJ)
        assert abs(a - b) <= 1e-9 * max(1.0, abs(a), abs(b))


def test_big_qjacobi_gram_matrix():
    nmax = 4
    diag = [complex(big_qjacobi_norm(n, BQJ)).real for n in range(nmax + 1)]
    scale = max(abs(d) for d in diag)
    for n in range(nmax + 1):
        for m in range(n, nmax + 1):
            g = complex(big_qjacobi_gram(n, m, BQJ)).real
            if n == m:
                assert abs(g - diag[n]) <= 1e-8 * max(abs(diag[n]), 1e-300)
            else:
                assert abs(g) <= 1e-9 * scale


def test_big_qjacobi_weight_total_mass():
    closed = big_qjacobi_weight_integral(BQJ)
    f = lambda x: big_qjacobi_weight(x, BQJ)
    numeric = qintegral_0a(f, BQJ.c, BQJ.q) - qintegral_0a(f, -BQJ.d, BQJ.q)
    assert complex(numeric).real == pytest.approx(complex(closed).real, rel=1e-11)


def test_big_qjacobi_shift_down_lowers_degree():
    # D_q^- P~_n(.; a,b,c,d) = (1-q^n)/(1-q) P~_{n-1}(.; qa,qb,c,d)
    q = BQJ.q
    raised = BigQJacobiParams(q * BQJ.a, q * BQJ.b, BQJ.c, BQJ.d, q)
    rng = random.Random(3)
    for n in range(1, 7):
        x = rng.uniform(0.1, BQJ.c)
        lhs = big_qjacobi_shift_down(n, x, BQJ)
        rhs = (1 - q**n) / (1 - q) * big_qjacobi_monic(n - 1, x, raised)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_big_qjacobi_shift_up_raises_degree():
    q = BQJ.q
    rng = random.Random(4)
    for n in range(1, 7):
        x = rng.uniform(0.1, BQJ.c)
        lhs = big_qjacobi_shift_up(n, x, BQJ)
        factor = (q**2 * BQJ.a * BQJ.b - q ** float(1 - n)) / (
            (1 - q) * BQJ.c * BQJ.d
        )
        rhs = factor * big_qjacobi_monic(n, x, BQJ)
        assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_big_qjacobi_eigenvalue_from_shift_composition():
    # the eigenvalue is the product of the lowering and raising factors
    q = BQJ.q
    for n in range(1, 7):
        lam = big_qjacobi_eigenvalue(n, BQJ)
        down_factor = (1 - q**n) / (1 - q)
        up_factor = (q**2 * BQJ.a * BQJ.b - q ** float(1 - n)) / (
            (1 - q) * BQJ.c * BQJ.d
        )
        assert complex(lam).real == pytest.approx(down_factor * up_factor, rel=1e-11)


def test_qtaylor_coefficients_recover_basis_element():
    # f(x) = (qax/c; q)_2 has coefficients (0, 0, 1)
    q, a, c = 0.6, 0.8, 1.1

    def f(x):
        return (1 - q * a * x / c) * (1 - q**2 * a * x / c)

    coeffs = qtaylor_coefficients(f, 3, a, c, q)
    want = [0.0, 0.0, 1.0, 0.0]
    for got, w in zip(coeffs, want):
        assert abs(got - w) <= 1e-10


def test_little_qjacobi_value_at_zero():
    assert complex(little_qjacobi(5, 0.0, 0.4, 0.3, 0.6)).real == pytest.approx(1.0)


def test_little_qjacobi_forms_agree():
    # the 3phi2 path carries a q^{-n(n-1)/2} prefactor whose cancellation
    # conditioning scales like q^{-n^2} b^{-n}; q near 1 and moderate b
    # keep both representations honest at degree 8
    rng = random.Random(11)
    q, a, b = 0.95, 0.5, 0.5
    for _ in range(20):
        n = rng.randrange(0, 9)
        x = rng.uniform(0.0, 1.0)
        v1 = little_qjacobi(n, x, a, b, q, form="2phi1")
        v2 = little_qjacobi(n, x, a, b, q, form="3phi2")
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))


def test_little_qjacobi_gram_and_norm():
    a, b, q = 0.5, 0.4, 0.7
    for n in range(4):
        for m in range(n, 4):
            g = complex(little_qjacobi_gram(n, m, a, b, q)).real
            if n == m:
                want = little_qjacobi_norm(n, a, b, q)
                assert g == pytest.approx(want, rel=1e-9)
            else:
                assert abs(g) <= 1e-10


def test_little_qjacobi_orthogonality_exponent_form():
    # (alpha, beta) parametrization wraps a = q^alpha, b = q^beta
    alpha, beta, q = 0.8, 1.3, 0.65
    g = little_qjacobi_orthogonality(2, 2, alpha, beta, q)
    want = little_qjacobi_norm(2, q**alpha, q**beta, q)
    assert complex(g).real == pytest.approx(want, rel=1e-9)


def test_wall_dual_forms():
    fam = FamilyParams("wall", 0.55, a=0.4)
    for n in range(0, 9):
        for x in (0.2, 0.45, 0.8):
            v1 = family_eval(fam, n, x, form="primary")
            v2 = family_eval(fam, n, x, form="alt")
            assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1))


def test_moak_dual_forms():
    fam = FamilyParams("moak", 0.6, alpha=0.7)
    for n in range(0, 9):
        for x in (0.3, 1.1):
            v1 = family_eval(fam, n, x, form="primary")
            v2 = family_eval(fam, n, x, form="alt")
            assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))


def test_big_q_laguerre_dual_forms():
    fam = FamilyParams("big_q_laguerre", 0.9, a=0.4, c=1.0, d=1.3)
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randrange(0, 9)
        x = rng.uniform(-1.3, 1.0)
        v1 = family_eval(fam, n, x, form="primary")
        v2 = family_eval(fam, n, x, form="alt")
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))


def test_affine_families_dual_forms():
    q = 0.45
    fam = FamilyParams("affine_q_krawtchouk", q, a=0.5, N=6)
    for n in range(0, 7):
        x = q ** float(-2)
        v1 = family_eval(fam, n, x, form="primary")
        v2 = family_eval(fam, n, x, form="alt")
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))
    fam2 = FamilyParams("affine_qinv_krawtchouk", q, b=0.7, N=6)
    for n in range(0, 7):
        x = q ** float(-3)
        v1 = family_eval(fam2, n, x, form="primary")
        v2 = family_eval(fam2, n, x, form="alt")
        assert abs(v1 - v2) <= 1e-9 * max(1.0, abs(v1), abs(v2))


def test_finite_family_orthogonality():
    q = 0.5
    fams = [
        FamilyParams("q_hahn", q, a=0.4, b=0.3, N=5),
        FamilyParams("q_krawtchouk", q, b=0.6, N=5),
        FamilyParams("affine_q_krawtchouk", q, a=0.5, N=5),
        FamilyParams("affine_qinv_krawtchouk", q, b=0.7, N=5),
    ]
    for fam in fams:
        diag = [abs(complex(family_orthogonality(fam, n, n))) for n in range(4)]
        scale = max(diag)
        assert all(d > 0 for d in diag)
        for n in range(4):
            for m in range(n + 1, 4):
                off = abs(complex(family_orthogonality(fam, n, m)))
                assert off <= 1e-9 * scale


def test_infinite_family_orthogonality():
    q = 0.5
    fams = [
        FamilyParams("little_q_jacobi", q, a=0.4, b=0.3),
        FamilyParams("wall", q, a=0.4),
        FamilyParams("moak", q, alpha=0.7),
        FamilyParams("al_salam_carlitz_u", q, a=-0.6),
    ]
    for fam in fams:
        diag = [abs(complex(family_orthogonality(fam, n, n))) for n in range(4)]
        scale = max(diag)
        assert all(d > 0 for d in diag)
        for n in range(4):
            for m in range(n + 1, 4):
                off = abs(complex(family_orthogonality(fam, n, m)))
                assert off <= 1e-9 * scale


def test_family_params_validates_keys():
    with pytest.raises(DomainError):
        FamilyParams("wall", 0.5, bogus=1.0)
    with pytest.raises(DomainError):
        FamilyParams("no_such_family", 0.5)


def test_quadratic_transform_even_odd():
    q, a = 0.9, 0.45
    p = BigQJacobiParams(a, a, 1.0, 1.0, q)
    for n in range(0, 5):
        for x in (0.2, 0.35, 0.6):
            even, odd = quadratic_transform_check(n, a, q, x=x)
            s = max(
                1.0,
                abs(big_qjacobi(2 * n, x, p)),
                abs(big_qjacobi(2 * n + 1, x, p)),
            )
            assert abs(even) <= 1e-9 * s
            assert abs(odd) <= 1e-9 * s


def test_quadratic_transform_u():
    q = 0.9
    for n in range(0, 9):
        for x in (0.7, 1.2):
            u = family_eval(FamilyParams("al_salam_carlitz_u", q, a=-1.0), n, x)
            r1, r2 = quadratic_transform_u(n, x, q)
            s = max(1.0, abs(u))
            assert abs(r1) <= 1e-9 * s
            assert abs(r2) <= 1e-9 * s


def test_quadratic_transform_v():
    from qspecial import SeriesSpec, eval_phi

    q = 0.9
    for n in range(0, 9):
        for x in (0.8, 1.3):
            r = quadratic_transform_v(n, x, q)
            rhs = x**n * eval_phi(
                SeriesSpec(
                    [q ** float(-n), q ** float(-n + 1)],
                    [0],
                    q * q,
                    -q * q / (x * x),
                )
            )
            assert abs(r) <= 1e-9 * max(1.0, abs(rhs))
