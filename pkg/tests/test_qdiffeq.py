"""Tests for the second order q-difference equation and its solution basis.

Each candidate solution is plugged back into the three-point equation;
the residual must vanish relative to the size of the function values.
"""

import pytest

from qspecial.qdiffeq import (
    QHGEParams,
    connection_coefficients,
    connection_residual,
    qhge_residual,
    qhge_residual_dq,
    solution_u1,
    solution_u2,
    solution_u3,
    solution_u4,
    solution_u5,
)

P = QHGEParams(0.37, 0.61, 1.48, 0.55)


def scale(u, p, z):
    return max(1.0, abs(u(p, z)), abs(u(p, z * p.q)), abs(u(p, z / p.q)))


@pytest.mark.parametrize("z", [0.15, 0.3, 0.45])
def test_u1_solves_equation(z):
    res = qhge_residual(lambda zz: solution_u1(P, zz), P, z)
    assert abs(res) <= 1e-11 * scale(solution_u1, P, z)


@pytest.mark.parametrize("z", [0.15, 0.3, 0.45])
def test_u2_solves_equation(z):
    res = qhge_residual(lambda zz: solution_u2(P, zz), P, z)
    assert abs(res) <= 1e-11 * scale(solution_u2, P, z)


@pytest.mark.parametrize("z", [1.6, 2.4, 3.7])
def test_u3_solves_equation(z):
    res = qhge_residual(lambda zz: solution_u3(P, zz), P, z)
    assert abs(res) <= 1e-11 * scale(solution_u3, P, z)


def test_u4_solves_on_its_lattice():
    # u4 satisfies the equation on the half lattice z = q^{c-a-b-m}
    q = P.q
    base = q ** (P.c - P.a - P.b)
    for m in range(3):
        z = base * q ** float(-m)
        res = qhge_residual(lambda zz: solution_u4(P, zz), P, z)
        assert abs(res) <= 1e-10 * scale(solution_u4, P, z)


def test_u5_solves_on_its_lattice():
    # u5 satisfies the equation on the half lattice z = q^{m+1}
    for m in range(3):
        z = P.q ** float(m + 1)
        res = qhge_residual(lambda zz: solution_u5(P, zz), P, z)
        assert abs(res) <= 1e-10 * scale(solution_u5, P, z)


def test_residual_forms_agree_in_kind():
    # the Jackson derivative form vanishes on solutions too
    for z in (0.2, 0.35):
        res = qhge_residual_dq(lambda zz: solution_u1(P, zz), P, z)
        assert abs(res) <= 1e-9 * scale(solution_u1, P, z)


def test_nonsolution_has_large_residual():
    res = qhge_residual(lambda zz: 1.0 / (1.0 + zz), P, 0.3)
    assert abs(res) > 1e-3


def test_connection_formula():
    # z0 inside the unit disk (u1, u2 converge) but above q^{1+c-a-b}
    # (u3 converges)
    for z0 in (0.5, 0.6, 0.85):
        s = max(
            abs(solution_u1(P, z0)),
            abs(solution_u2(P, z0)),
            abs(solution_u3(P, z0)),
            1.0,
        )
        assert abs(connection_residual(P, z0)) <= 1e-9 * s


def test_connection_coefficients_are_q_periodic_on_lattice():
    # theta quotients make C2, C3 invariant under z -> qz
    z0 = 2.1
    c2a, c3a = connection_coefficients(P, z0)
    c2b, c3b = connection_coefficients(P, z0 * P.q)
    assert c2a == pytest.approx(c2b, rel=1e-10)
    assert c3a == pytest.approx(c3b, rel=1e-10)
