"""Named q-special functions.

q-exponentials e_q, E_q, the q-gamma and q-beta functions, the theta
function theta4, the two Jackson q-Bessel functions plus the Hahn-Exton
one, and an exact integer partition-count oracle.
"""

import cmath
import math

from qspecial.errors import ConvergenceError, DomainError
from qspecial.qcore import DEFAULT_POLICY, INFINITY, check_q, qpoch
from qspecial.qseries import SeriesSpec, eval_phi


def e_q(z, q, pol=DEFAULT_POLICY):
    """q-exponential e_q(z) = 1/(z;q)_oo = sum z^k/(q;q)_k for |z|<1."""
    den = qpoch(z, q, INFINITY, pol)
    if den == 0:
        raise DomainError(f"e_q pole at z = {z}")
    return 1.0 / den


def E_q(z, q, pol=DEFAULT_POLICY):
    """q-exponential E_q(z) = (-z;q)_oo = sum q^{k(k-1)/2} z^k/(q;q)_k (entire)."""
    return qpoch(-complex(z), q, INFINITY, pol)


def gamma_q(z, q, pol=DEFAULT_POLICY):
    """q-gamma function (q;q)_oo (1-q)^{1-z} / (q^z;q)_oo.

    Satisfies Gamma_q(z+1) = (1-q^z)/(1-q) Gamma_q(z), Gamma_q(1) = 1.
    """
    q = check_q(q)
    z = complex(z)
    # the two infinite products are combined factorwise,
    # (1-q)^{1-z} prod_k (1-q^{k+1})/(1-q^{k+z}): the separate products
    # underflow as q -> 1 while the ratio stays of moderate size
    qz = cmath.exp(z * math.log(q))
    dev = abs(qz - q)
    prod = 1.0 + 0.0j
    qk = 1.0
    done = False
    for _ in range(pol.max_factors):
        den = 1.0 - qk * qz
        if den == 0:
            raise DomainError(f"Gamma_q pole at z = {z}")
        prod *= (1.0 - qk * q) / den
        qk *= q
        if qk * dev < pol.tail_epsilon and qk < pol.tail_epsilon:
            done = True
            break
    if not done:
        raise ConvergenceError("Gamma_q product tail bound not reached")
    return prod * (1.0 - q) ** (1.0 - z)


def gamma_q_reciprocal(z, q, pol=DEFAULT_POLICY):
    """1/Gamma_q(z) with the pole convention: 0 at z = 0, -1, -2, ..."""
    z = complex(z)
    if abs(z.imag) < 1e-12:
        nearest = round(z.real)
        if nearest <= 0 and abs(z.real - nearest) < 1e-9:
            return 0.0 + 0.0j
    return 1.0 / gamma_q(z, q, pol)


def beta_q(a, b, q, pol=DEFAULT_POLICY):
    """q-beta function (1-q)(q, q^{a+b};q)_oo / ((q^a, q^b;q)_oo)."""
    q = check_q(q)
    a, b = complex(a), complex(b)
    lq = math.log(q)
    den = qpoch(cmath.exp(a * lq), q, INFINITY, pol) * qpoch(
        cmath.exp(b * lq), q, INFINITY, pol
    )
    if abs(den) == 0:
        raise DomainError(f"B_q pole at (a,b) = ({a},{b})")
    return (
        (1.0 - q)
        * qpoch(q, q, INFINITY, pol)
        * qpoch(cmath.exp((a + b) * lq), q, INFINITY, pol)
        / den
    )


def theta4(x, q, pol=DEFAULT_POLICY):
    """theta_4(x;q) = (q^2, q e^{2 pi i x}, q e^{-2 pi i x}; q^2)_oo."""
    q = check_q(q)
    w = cmath.exp(2j * math.pi * x)
    q2 = q * q
    return (
        qpoch(q2, q2, INFINITY, pol)
        * qpoch(q * w, q2, INFINITY, pol)
        * qpoch(q / w, q2, INFINITY, pol)
    )


def theta4_series(x, q, pol=DEFAULT_POLICY):
    """Bilateral series sum_k (-1)^k q^{k^2} e^{2 pi i k x}; test cross-check."""
    q = check_q(q)
    w = cmath.exp(2j * math.pi * x)
    total = 1.0 + 0.0j
    for k in range(1, pol.max_factors):
        mag = q ** (k * k)
        if mag < pol.tail_epsilon:
            break
        total += (-1.0) ** k * mag * (w**k + w**-k)
    return total


def _bessel_prefactor(nu, q, pol):
    return qpoch(q ** (nu + 1.0), q, INFINITY, pol) / qpoch(q, q, INFINITY, pol)


def jackson_bessel_1(nu, z, q, pol=DEFAULT_POLICY):
    """First Jackson q-Bessel: prefactor (z/2)^nu 2phi1(0,0; q^{nu+1}; q, -z^2/4)."""
    q = check_q(q)
    z = complex(z)
    if abs(z) >= 2:
        raise DomainError("first Jackson q-Bessel requires |z| < 2")
    body = eval_phi(SeriesSpec([0, 0], [q ** (nu + 1.0)], q, -z * z / 4.0), pol)
    return _bessel_prefactor(nu, q, pol) * (z / 2.0) ** nu * body


def jackson_bessel_2(nu, z, q, pol=DEFAULT_POLICY):
    """Second Jackson q-Bessel: prefactor (z/2)^nu 0phi1(-; q^{nu+1}; q, -q^{nu+1}z^2/4)."""
    q = check_q(q)
    z = complex(z)
    qnu = q ** (nu + 1.0)
    body = eval_phi(SeriesSpec([], [qnu], q, -qnu * z * z / 4.0), pol)
    return _bessel_prefactor(nu, q, pol) * (z / 2.0) ** nu * body


def hahn_exton_bessel(nu, z, q, pol=DEFAULT_POLICY):
    """Hahn-Exton q-Bessel: prefactor z^nu 1phi1(0; q^{nu+1}; q, q z^2)."""
    q = check_q(q)
    z = complex(z)
    body = eval_phi(SeriesSpec([0], [q ** (nu + 1.0)], q, q * z * z), pol)
    return _bessel_prefactor(nu, q, pol) * z**nu * body


_partition_cache = [1]


def partition_count(n):
    """Number of partitions of n, exact integer via Euler's pentagonal recurrence:

    p(n) = sum_{k>=1} (-1)^{k-1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n > 10_000:
        raise DomainError("n capped at 10000")
    while len(_partition_cache) <= n:
        m = len(_partition_cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * _partition_cache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * _partition_cache[m - g2]
            k += 1
        _partition_cache.append(total)
    return _partition_cache[n]
