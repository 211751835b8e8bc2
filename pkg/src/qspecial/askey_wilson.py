"""Askey-Wilson machinery.

The Askey-Wilson weight on the unit circle, its integral in closed form
and by spectrally accurate periodic quadrature, the four-parameter
polynomials (series and recurrence paths), quadratic norms, the second
order q-difference operator, and the special and limit families:
q-ultraspherical (three printed forms), Al-Salam-Chihara, continuous
q-Hermite, and the finite q-Racah family with numerically derived
weights.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from qspecial.errors import DomainError
from qspecial.qcore import DEFAULT_POLICY, INFINITY, check_q, qpoch, qpoch_list
from qspecial.qseries import SeriesSpec, eval_phi


@dataclass(frozen=True)
class AWParams:
    """Parameters (a, b, c, d; q).  The closed-form integral and the
    positive orthogonality measure need |a|,|b|,|c|,|d| < 1 and the
    parameter set closed under complex conjugation."""

    a: complex
    b: complex
    c: complex
    d: complex
    q: float

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        for f in "abcd":
            object.__setattr__(self, f, complex(getattr(self, f)))

    @property
    def abcd(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def in_polydisc(self):
        return all(abs(e) < 1 for e in self.abcd)

    @property
    def conjugate_closed(self):
        vals = sorted(self.abcd, key=lambda w: (w.real, w.imag))
        conj = sorted((w.conjugate() for w in self.abcd), key=lambda w: (w.real, w.imag))
        return all(abs(u - v) <= 1e-12 * max(1.0, abs(u)) for u, v in zip(vals, conj))


def aw_weight(z, p, pol=DEFAULT_POLICY):
    """Weight (z^2, z^{-2};q)_oo / prod_e (ez, e/z;q)_oo on |z| = 1."""
    if abs(abs(z) - 1.0) > 1e-12:
        raise DomainError("z must lie on the unit circle")
    q = p.q
    num = qpoch(z * z, q, INFINITY, pol) * qpoch(1.0 / (z * z), q, INFINITY, pol)
    den = 1.0 + 0.0j
    for e in p.abcd:
        den *= qpoch(e * z, q, INFINITY, pol) * qpoch(e / z, q, INFINITY, pol)
    if den == 0:
        raise DomainError("weight pole")
    return num / den


def aw_integral_closed(p, pol=DEFAULT_POLICY):
    """Closed form of the contour integral (1/2 pi i) oint w(z) dz/z:

    2 (abcd;q)_oo / (ab, ac, ad, bc, bd, cd, q;q)_oo.
    """
    a, b, c, d = p.abcd
    q = p.q
    for e in p.abcd:
        if abs(e) > 1.0 + 1e-12:
            raise DomainError("closed form requires |a|,|b|,|c|,|d| <= 1")
    for pair in (a * b, a * c, a * d, b * c, b * d, c * d):
        if abs(pair - 1.0) < 1e-12:
            raise DomainError("degenerate parameter pair ef = 1")
    den = qpoch(q, q, INFINITY, pol)
    for pair in (a * b, a * c, a * d, b * c, b * d, c * d):
        den *= qpoch(pair, q, INFINITY, pol)
    return 2.0 * qpoch(a * b * c * d, q, INFINITY, pol) / den


def _weight_grid(p, n_nodes, pol):
    """Vectorized weight values on the midpoint grid
    z = e^{2 pi i (j+1/2) / n_nodes}.  The midpoint offset keeps the rule
    spectrally accurate while avoiding the removable 0/0 points at
    z = +-1 that occur for boundary parameters with |e| = 1."""
    q = p.q
    theta = 2.0 * math.pi * (np.arange(n_nodes) + 0.5) / n_nodes
    z = np.exp(1j * theta)
    z2 = z * z
    w = np.ones(n_nodes, dtype=complex)
    top = np.ones(n_nodes, dtype=complex)
    scale = max([abs(e) for e in p.abcd] + [1.0])
    qj = 1.0
    for _ in range(pol.max_factors):
        top = (1.0 - z2 * qj) * (1.0 - qj / z2)
        for e in p.abcd:
            top = top / ((1.0 - e * z * qj) * (1.0 - e * qj / z))
        w *= top
        qj *= q
        if qj * scale < pol.tail_epsilon and qj < pol.tail_epsilon:
            break
    return w


def aw_integral_numeric(p, n_nodes=512, pol=DEFAULT_POLICY):
    """(1/2 pi) int_0^pi w(e^{i theta}) d theta by the uniform trapezoid
    rule on the full circle (the integrand is analytic and periodic, so
    the rule is spectrally accurate).  Equals half the closed form."""
    if n_nodes < 16:
        raise DomainError("need n_nodes >= 16")
    w = _weight_grid(p, n_nodes, pol)
    return complex(np.sum(w)) / (2.0 * n_nodes)


def _z_of_x(x):
    x = complex(x)
    return x + cmath.sqrt(x * x - 1.0)


def _cqh_z(n, z, q):
    """Continuous q-Hermite polynomial in the variable z = e^{i theta}:

    H_n = sum_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) z^{n-2k}.
    """
    total = 0.0 + 0.0j
    cn = qpoch(q, q, n)
    for k in range(n + 1):
        total += cn / (qpoch(q, q, k) * qpoch(q, q, n - k)) * z ** (n - 2 * k)
    return total


def _aw_poly_z(n, z, p, pol=DEFAULT_POLICY):
    """p_n at the point x = (z + 1/z)/2, in terms of z.

    Series path: a^{-n}(ab,ac,ad;q)_n
        4phi3(q^{-n}, q^{n-1}abcd, az, a/z; ab, ac, ad; q, q)
    after permuting a nonzero parameter to the front (p_n is symmetric
    in a,b,c,d).  All parameters zero reduces to continuous q-Hermite.
    """
    params = list(p.abcd)
    params.sort(key=lambda e: -abs(e))
    a, b, c, d = params
    q = p.q
    if a == 0:
        return _cqh_z(n, z, q)
    abcd = a * b * c * d
    spec = SeriesSpec(
        [q ** float(-n), q ** float(n - 1) * abcd, a * z, a / z],
        [a * b, a * c, a * d],
        q,
        q,
    )
    return a ** float(-n) * qpoch_list([a * b, a * c, a * d], q, n) * eval_phi(
        spec, pol
    )


def aw_poly(n, x, p, pol=DEFAULT_POLICY):
    """Askey-Wilson polynomial p_n(x; a,b,c,d | q), symmetric in the
    parameters, with leading coefficient k_n = 2^n (q^{n-1}abcd;q)_n."""
    return _aw_poly_z(n, _z_of_x(x), p, pol)


def aw_poly_r(n, x, p, pol=DEFAULT_POLICY):
    """The normalized 4phi3 itself (value 1 at x = (a + 1/a)/2):

    r_n = 4phi3(q^{-n}, q^{n-1}abcd, az, a/z; ab, ac, ad; q, q).

    Not symmetric in the parameters; requires a != 0.
    """
    if p.a == 0:
        raise DomainError("r_n needs a != 0")
    z = _z_of_x(x)
    q = p.q
    a, b, c, d = p.abcd
    spec = SeriesSpec(
        [q ** float(-n), q ** float(n - 1) * a * b * c * d, a * z, a / z],
        [a * b, a * c, a * d],
        q,
        q,
    )
    return eval_phi(spec, pol)


def aw_leading_coefficient(n, p):
    """k_n = 2^n (q^{n-1}abcd;q)_n."""
    a, b, c, d = p.abcd
    return 2.0**n * qpoch(p.q ** float(n - 1) * a * b * c * d, p.q, n)


def aw_norm_ratio(n, p, pol=DEFAULT_POLICY):
    """h_n / h_0 = (1-q^{n-1}abcd)(q,ab,ac,ad,bc,bd,cd;q)_n
                     / ((1-q^{2n-1}abcd)(abcd;q)_n)."""
    a, b, c, d = p.abcd
    q = p.q
    abcd = a * b * c * d
    pairs = [q, a * b, a * c, a * d, b * c, b * d, c * d]
    return (
        (1.0 - q ** float(n - 1) * abcd)
        * qpoch_list(pairs, q, n)
        / ((1.0 - q ** float(2 * n - 1) * abcd) * qpoch(abcd, q, n))
    )


def aw_norm(n, p, pol=DEFAULT_POLICY):
    """Quadratic norm h_n = (1/2 pi) int_0^pi p_n^2 w d theta, via

    h_0 = (abcd;q)_oo / (q, ab, ac, ad, bc, bd, cd;q)_oo

    and the closed-form ratio h_n/h_0."""
    a, b, c, d = p.abcd
    q = p.q
    den = qpoch(q, q, INFINITY, pol)
    for pair in (a * b, a * c, a * d, b * c, b * d, c * d):
        den *= qpoch(pair, q, INFINITY, pol)
    h0 = qpoch(a * b * c * d, q, INFINITY, pol) / den
    return h0 * aw_norm_ratio(n, p, pol)


def aw_recurrence(n, p, pol=DEFAULT_POLICY):
    """Coefficients (A_n, B_n, C_n) of 2x p_n = A_n p_{n+1} + B_n p_n
    + C_n p_{n-1}.

    A_n = 2 k_n/k_{n+1}; C_n = (2 k_{n-1}/k_n)(h_n/h_{n-1}); B_n follows
    by substituting x = (a + 1/a)/2 where p_n = a^{-n}(ab,ac,ad;q)_n
    (a permuted nonzero parameter; B_n = 0 when all four vanish).
    """
    an = 2.0 * aw_leading_coefficient(n, p) / aw_leading_coefficient(n + 1, p)
    if n == 0:
        cn = 0.0
    else:
        cn = (
            2.0
            * aw_leading_coefficient(n - 1, p)
            / aw_leading_coefficient(n, p)
            * aw_norm_ratio(n, p, pol)
            / aw_norm_ratio(n - 1, p, pol)
        )
    params = sorted(p.abcd, key=lambda e: -abs(e))
    a, b, c, d = params
    if a == 0:
        return an, 0.0, cn

    def v(k):
        return a ** float(-k) * qpoch_list([a * b, a * c, a * d], p.q, k)

    x0 = (a + 1.0 / a) / 2.0
    vn = v(n)
    bn = 2.0 * x0 - an * v(n + 1) / vn - (cn * v(n - 1) / vn if n > 0 else 0.0)
    return an, bn, cn


def aw_poly_by_recurrence(n, x, p, pol=DEFAULT_POLICY):
    """p_n through the three term recurrence; dual path to the series."""
    prev, cur = 0.0 + 0.0j, 1.0 + 0.0j
    for k in range(n):
        ak, bk, ck = aw_recurrence(k, p, pol)
        prev, cur = cur, (2.0 * x * cur - bk * cur - ck * prev) / ak
    return cur


def aw_qdifference_residual(n, z, p, pol=DEFAULT_POLICY):
    """Residual of the eigenfunction equation of the Askey-Wilson
    q-difference operator, with A(z) = (1-az)(1-bz)(1-cz)(1-dz)
    / ((1-z^2)(1-qz^2)):

    A(z) P_n(qz) - (A(z)+A(1/z)) P_n(z) + A(1/z) P_n(z/q)
      + (1-q^{-n})(1-q^{n-1}abcd) P_n(z)

    where P_n(z) stands for p_n at x = (z + 1/z)/2.  Approximately zero.
    """
    q = p.q

    def big_a(w):
        den = (1.0 - w * w) * (1.0 - q * w * w)
        if den == 0:
            raise DomainError("singular point of the operator")
        num = 1.0 + 0.0j
        for e in p.abcd:
            num *= 1.0 - e * w
        return num / den

    a, b, c, d = p.abcd
    az, azi = big_a(z), big_a(1.0 / z)
    pq = _aw_poly_z(n, q * z, p, pol)
    p0 = _aw_poly_z(n, z, p, pol)
    pm = _aw_poly_z(n, z / q, p, pol)
    eig = (1.0 - q ** float(-n)) * (1.0 - q ** float(n - 1) * a * b * c * d)
    return az * pq - (az + azi) * p0 + azi * pm + eig * p0


def al_salam_chihara(n, x, a, b, q, pol=DEFAULT_POLICY):
    """Al-Salam-Chihara polynomial p_n(x; a, b, 0, 0 | q)."""
    return aw_poly(n, x, AWParams(a, b, 0, 0, q), pol)


def continuous_q_hermite(n, x, q):
    """Continuous q-Hermite polynomial p_n(x; 0,0,0,0 | q), evaluated by
    its explicit Fourier sum."""
    check_q(q)
    return _cqh_z(n, _z_of_x(x), q)


def q_ultraspherical(n, theta, beta, q, form="fourier", pol=DEFAULT_POLICY):
    """Rogers' q-ultraspherical polynomial C_n(cos theta; beta | q).

    form="fourier": sum_k ((beta;q)_k (beta;q)_{n-k}
                     / ((q;q)_k (q;q)_{n-k})) e^{i(n-2k) theta}
    form="phi":     ((beta^2;q)_n / (beta^{n/2} (q;q)_n)) *
                    4phi3(q^{-n}, q^n beta^2, beta^{1/2} e^{i theta},
                          beta^{1/2} e^{-i theta};
                          beta q^{1/2}, -beta q^{1/2}, -beta; q, q)
    form="aw":      the Askey-Wilson specialization
                    p_n(cos theta; b, b q^{1/2}, -b, -b q^{1/2} | q),
                    b = beta^{1/2}, times 2^n (beta;q)_n
                    / ((q;q)_n k_n^{AW}) obtained by matching leading
                    coefficients.
    """
    q = check_q(q)
    if form == "fourier":
        # the printed sum ((q^{-n},beta;q)_k/(q^{1-n}/beta,q;q)_k)(q/beta)^k
        # rewritten with k <-> n-k symmetric coefficients
        total = 0.0 + 0.0j
        for k in range(n + 1):
            total += (
                qpoch(beta, q, k)
                * qpoch(beta, q, n - k)
                / (qpoch(q, q, k) * qpoch(q, q, n - k))
                * cmath.exp(1j * (n - 2 * k) * theta)
            )
        return total
    if form == "phi":
        if beta == 0:
            raise DomainError("phi form needs beta != 0")
        rb = cmath.sqrt(beta)
        sq = math.sqrt(q)
        z = cmath.exp(1j * theta)
        body = eval_phi(
            SeriesSpec(
                [q ** float(-n), q ** float(n) * beta * beta, rb * z, rb / z],
                [beta * sq, -beta * sq, -beta],
                q,
                q,
            ),
            pol,
        )
        return qpoch(beta * beta, q, n) / (rb ** float(n) * qpoch(q, q, n)) * body
    if form == "aw":
        rb = cmath.sqrt(beta)
        sq = math.sqrt(q)
        p = AWParams(rb, rb * sq, -rb, -rb * sq, q)
        const = (
            2.0**n
            * qpoch(beta, q, n)
            / (qpoch(q, q, n) * aw_leading_coefficient(n, p))
        )
        return const * aw_poly(n, math.cos(theta), p, pol)
    raise DomainError(f"unknown form {form!r}")


# ---------------------------------------------------------------------------
# q-Racah


def _racah_check(alpha, beta, gamma, delta, big_n, q):
    """One of alpha q, beta delta q, gamma q must equal q^{-N}."""
    target = q ** float(-big_n)
    for v in (alpha * q, beta * delta * q, gamma * q):
        if abs(v - target) <= 1e-10 * target:
            return
    raise DomainError("one of alpha*q, beta*delta*q, gamma*q must be q^{-N}")


def q_racah_node(x, gamma, delta, q):
    """Quadratic lattice point mu(x) = q^{-x} + q^{x+1} gamma delta."""
    return q ** float(-x) + q ** float(x + 1) * gamma * delta


def q_racah(n, x, alpha, beta, gamma, delta, q, big_n, pol=DEFAULT_POLICY):
    """q-Racah polynomial R_n(mu(x)):

    4phi3(q^{-n}, q^{n+1} alpha beta, q^{-x}, q^{x+1} gamma delta;
          alpha q, beta delta q, gamma q; q, q),   n, x = 0..N.
    """
    q = check_q(q)
    _racah_check(alpha, beta, gamma, delta, big_n, q)
    if not (0 <= n <= big_n and 0 <= x <= big_n):
        raise DomainError("need 0 <= n, x <= N")
    spec = SeriesSpec(
        [
            q ** float(-n),
            q ** float(n + 1) * alpha * beta,
            q ** float(-x),
            q ** float(x + 1) * gamma * delta,
        ],
        [alpha * q, beta * delta * q, gamma * q],
        q,
        q,
    )
    return eval_phi(spec, pol)


def q_racah_weights(alpha, beta, gamma, delta, q, big_n, pol=DEFAULT_POLICY):
    """Weights w(x) on x = 0..N derived numerically from the moment
    conditions sum_x R_n(mu(x)) w(x) = delta_{n,0}, n = 0..N.

    The orthogonality relation is stated without an explicit weight
    formula; the (N+1)x(N+1) linear solve stays within the printed
    contract and is exact up to conditioning.
    """
    _racah_check(alpha, beta, gamma, delta, big_n, q)
    m = np.zeros((big_n + 1, big_n + 1), dtype=complex)
    for n in range(big_n + 1):
        for x in range(big_n + 1):
            m[n, x] = q_racah(n, x, alpha, beta, gamma, delta, q, big_n, pol)
    rhs = np.zeros(big_n + 1, dtype=complex)
    rhs[0] = 1.0
    return np.linalg.solve(m, rhs)


def q_racah_orthogonality(n, m, alpha, beta, gamma, delta, q, big_n, pol=DEFAULT_POLICY):
    """Gram entry sum_x R_n(mu(x)) R_m(mu(x)) w(x) with the derived
    weights; diagonal h_n, off-diagonal approximately zero."""
    w = q_racah_weights(alpha, beta, gamma, delta, q, big_n, pol)
    total = 0.0 + 0.0j
    for x in range(big_n + 1):
        total += (
            q_racah(n, x, alpha, beta, gamma, delta, q, big_n, pol)
            * q_racah(m, x, alpha, beta, gamma, delta, q, big_n, pol)
            * w[x]
        )
    return total


def aw_gram_quadrature(p, nmax, n_nodes=1024, pol=DEFAULT_POLICY):
    """Matrix of quadrature inner products (1/2 pi) int_0^pi p_n p_m w
    d theta for n, m <= nmax, via the uniform grid on the full circle."""
    theta = 2.0 * math.pi * (np.arange(n_nodes) + 0.5) / n_nodes
    z = np.exp(1j * theta)
    w = _weight_grid(p, n_nodes, pol)
    vals = np.empty((nmax + 1, n_nodes), dtype=complex)
    for n in range(nmax + 1):
        vals[n] = [_aw_poly_z(n, zz, p, pol) for zz in z]
    gram = np.empty((nmax + 1, nmax + 1), dtype=complex)
    for n in range(nmax + 1):
        for m in range(n, nmax + 1):
            gram[n, m] = gram[m, n] = np.sum(vals[n] * vals[m] * w) / (2.0 * n_nodes)
    return gram
