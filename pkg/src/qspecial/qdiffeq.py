"""The q-hypergeometric q-difference equation.

Residual operators (both the D_q form and the equivalent three-point
form), the five named solutions u1..u5, and the three-term connection
identity relating u1, u2, u3.
"""

import cmath
import math
from dataclasses import dataclass

from qspecial.errors import DomainError
from qspecial.qcalculus import qderiv_backward
from qspecial.qcore import DEFAULT_POLICY, INFINITY, check_q, qpoch
from qspecial.qseries import SeriesSpec, eval_phi


@dataclass(frozen=True)
class QHGEParams:
    """Exponent parameters a, b, c (entering as q^a, q^b, q^c) and base q."""

    a: complex
    b: complex
    c: complex
    q: float

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))

    def qp(self, e):
        """q raised to the (complex) exponent e."""
        return cmath.exp(complex(e) * math.log(self.q))


def qhge_residual(u, p, z):
    """Three-point residual
    (q^c - q^{a+b} z) u(qz) + (-q^c - q + (q^a + q^b) z) u(z) + (q - z) u(z/q).

    Approximately zero when u solves the q-hypergeometric equation.
    """
    q = p.q
    qa, qb, qc = p.qp(p.a), p.qp(p.b), p.qp(p.c)
    return (
        (qc - qa * qb * z) * u(q * z)
        + (-qc - q + (qa + qb) * z) * u(z)
        + (q - z) * u(z / q)
    )


def qhge_residual_dq(u, p, z):
    """Residual of the equation in Jackson-derivative form:

    z (q^c - q^{a+b+1} z) D_q^2 u
      + [(1-q^c)/(1-q) - (q^b (1-q^a)/(1-q) + q^a (1-q^{b+1})/(1-q)) z] D_q u
      - (1-q^a)(1-q^b)/(1-q)^2 u.
    """
    q = p.q
    qa, qb, qc = p.qp(p.a), p.qp(p.b), p.qp(p.c)
    d1 = qderiv_backward(u, z, q)
    d2 = qderiv_backward(lambda x: qderiv_backward(u, x, q), z, q)
    one = 1.0 - q
    return (
        z * (qc - qa * qb * q * z) * d2
        + ((1.0 - qc) / one - (qb * (1.0 - qa) / one + qa * (1.0 - qb * q) / one) * z)
        * d1
        - (1.0 - qa) * (1.0 - qb) / one**2 * u(z)
    )


def solution_u1(p, z, pol=DEFAULT_POLICY):
    """u1(z) = 2phi1(q^a, q^b; q^c; q, z), |z| < 1."""
    return eval_phi(SeriesSpec([p.qp(p.a), p.qp(p.b)], [p.qp(p.c)], p.q, z), pol)


def solution_u2(p, z, pol=DEFAULT_POLICY):
    """u2(z) = z^{1-c} 2phi1(q^{1+a-c}, q^{1+b-c}; q^{2-c}; q, z), |z| < 1."""
    body = eval_phi(
        SeriesSpec(
            [p.qp(1 + p.a - p.c), p.qp(1 + p.b - p.c)], [p.qp(2 - p.c)], p.q, z
        ),
        pol,
    )
    return complex(z) ** (1.0 - complex(p.c)) * body


def solution_u3(p, z, pol=DEFAULT_POLICY):
    """u3(z) = z^{-a} 2phi1(q^a, q^{a-c+1}; q^{a-b+1}; q, q^{-a-b+c+1}/z)."""
    arg = p.qp(-p.a - p.b + p.c + 1) / z
    body = eval_phi(
        SeriesSpec([p.qp(p.a), p.qp(p.a - p.c + 1)], [p.qp(p.a - p.b + 1)], p.q, arg),
        pol,
    )
    return complex(z) ** (-complex(p.a)) * body


def solution_u4(p, z, pol=DEFAULT_POLICY):
    """u4(z) = 3phi2(q^a, q^b, q^{a+b-c} z; q^{a+b-c+1}, 0; q, q)."""
    e = p.a + p.b - p.c
    return eval_phi(
        SeriesSpec([p.qp(p.a), p.qp(p.b), p.qp(e) * z], [p.qp(e + 1), 0], p.q, p.q),
        pol,
    )


def solution_u5(p, z, pol=DEFAULT_POLICY):
    """u5(z) = z^{-b} 3phi2(q^b, q^{b-c+1}, q/z; q^{a+b-c+1}, 0; q, q)."""
    body = eval_phi(
        SeriesSpec(
            [p.qp(p.b), p.qp(p.b - p.c + 1), p.q / z],
            [p.qp(p.a + p.b - p.c + 1), 0],
            p.q,
            p.q,
        ),
        pol,
    )
    return complex(z) ** (-complex(p.b)) * body


def _theta_ratio(alpha, beta, z, q, pol):
    """(q^alpha z, q^{1-alpha}/z;q)_oo z^{alpha-beta} / (q^beta z, q^{1-beta}/z;q)_oo.

    Invariant under z -> qz; building block of the connection coefficients.
    """
    qe = lambda e: cmath.exp(complex(e) * math.log(q))
    num = qpoch(qe(alpha) * z, q, INFINITY, pol) * qpoch(qe(1 - alpha) / z, q, INFINITY, pol)
    den = qpoch(qe(beta) * z, q, INFINITY, pol) * qpoch(qe(1 - beta) / z, q, INFINITY, pol)
    if den == 0:
        raise DomainError("connection coefficient pole")
    return num * complex(z) ** complex(alpha - beta) / den


def connection_coefficients(p, z, pol=DEFAULT_POLICY):
    """Coefficients (C2, C3) of the three-term connection identity
    u1(z) + C2(z) u2(z) = C3(z) u3(z)."""
    q = p.q
    a, b, c = p.a, p.b, p.c
    qe = p.qp
    c2 = (
        qpoch(qe(a), q, INFINITY, pol)
        * qpoch(qe(1 - c), q, INFINITY, pol)
        * qpoch(qe(c - b), q, INFINITY, pol)
        / (
            qpoch(qe(c - 1), q, INFINITY, pol)
            * qpoch(qe(a - c + 1), q, INFINITY, pol)
            * qpoch(qe(1 - b), q, INFINITY, pol)
        )
        * _theta_ratio(b - 1, b - c, z, q, pol)
    )
    c3 = (
        qpoch(qe(1 - c), q, INFINITY, pol)
        * qpoch(qe(a - b + 1), q, INFINITY, pol)
        / (
            qpoch(qe(1 - b), q, INFINITY, pol)
            * qpoch(qe(a - c + 1), q, INFINITY, pol)
        )
        * _theta_ratio(a + b - c, b - c, z, q, pol)
    )
    return c2, c3


def connection_residual(p, z0, pol=DEFAULT_POLICY):
    """Residual u1(z0) + C2(z0) u2(z0) - C3(z0) u3(z0); approximately zero."""
    c2, c3 = connection_coefficients(p, z0, pol)
    return (
        solution_u1(p, z0, pol)
        + c2 * solution_u2(p, z0, pol)
        - c3 * solution_u3(p, z0, pol)
    )
