"""The q-Hahn tableau of orthogonal polynomials.

Big and little q-Jacobi polynomials with the full shift-operator
machinery (weight, monic/normalized forms, raising/lowering operators,
norms, three term recurrence), the remaining tableau families (q-Hahn,
q-Krawtchouk variants, big q-Laguerre, q-Meixner, Wall, Moak's
q-Laguerre, Al-Salam-Carlitz U/V, Stieltjes-Wigert) with dual
evaluation paths where two series representations exist, discrete /
q-integral orthogonality verifiers, the quadratic transformations
between little and big polynomials, and the q-Taylor coefficient
extractor.
"""

import math
import warnings
from dataclasses import dataclass

from qspecial.errors import DomainError
from qspecial.qcalculus import qderiv_backward, qintegral_0a, qintegral_0inf
from qspecial.qcore import DEFAULT_POLICY, INFINITY, check_q, qpoch, qpoch_list
from qspecial.qseries import SeriesSpec, eval_phi

_MAX_FINITE_N = 60  # keeps q^{-x} in double range down to q = 0.1


@dataclass(frozen=True)
class BigQJacobiParams:
    """Parameters (a, b, c, d; q) of the big q-Jacobi family; c, d > 0.

    Positivity of the orthogonality weight holds when either
    -c/(dq) < a < 1/q and -d/(cq) < b < 1/q (real case) or a = c*alpha,
    b = d*conj(alpha) with alpha non-real.  Violations only warn: the
    polynomials remain well-defined.
    """

    a: complex
    b: complex
    c: float
    d: float
    q: float

    def __post_init__(self):
        object.__setattr__(self, "q", check_q(self.q))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "d", float(self.d))
        if self.c <= 0 or self.d <= 0:
            raise DomainError("c and d must be positive")
        if not self.positive_weight:
            warnings.warn("parameters outside the positive-weight regime", stacklevel=2)

    @property
    def positive_weight(self):
        a, b, c, d, q = self.a, self.b, self.c, self.d, self.q
        if a.imag == 0 and b.imag == 0:
            return -c / (d * q) < a.real < 1 / q and -d / (c * q) < b.real < 1 / q
        alpha = a / c
        return alpha.imag != 0 and abs(b - d * alpha.conjugate()) <= 1e-12 * abs(b)


def big_qjacobi_weight(x, p, pol=DEFAULT_POLICY):
    """Weight (qx/c, -qx/d;q)_oo / (qax/c, -qbx/d;q)_oo.

    Vanishes at x = c/q and x = -d/q; positive on the support lattice in
    the positive-weight regime.
    """
    q = p.q
    num = qpoch(q * x / p.c, q, INFINITY, pol) * qpoch(-q * x / p.d, q, INFINITY, pol)
    den = qpoch(q * p.a * x / p.c, q, INFINITY, pol) * qpoch(
        -q * p.b * x / p.d, q, INFINITY, pol
    )
    if den == 0:
        raise DomainError(f"weight pole at x = {x}")
    return num / den


def big_qjacobi(n, x, p, pol=DEFAULT_POLICY):
    """Normalized big q-Jacobi polynomial, value 1 at x = c/(qa):

    3phi2(q^{-n}, q^{n+1}ab, qax/c; qa, -qad/c; q, q).

    Requires a != 0; use the monic version for the a = 0 degenerations.
    """
    if p.a == 0:
        raise DomainError("normalized form needs a != 0 (normalization point c/(qa))")
    q = p.q
    spec = SeriesSpec(
        [q ** float(-n), q ** float(n + 1) * p.a * p.b, q * p.a * x / p.c],
        [q * p.a, -q * p.a * p.d / p.c],
        q,
        q,
    )
    return eval_phi(spec, pol)


def big_qjacobi_norm_point_value(n, p):
    """Value of the monic polynomial at the normalization point c/(qa):

    (c/(qa))^n (qa;q)_n (-qad/c;q)_n / (q^{n+1}ab;q)_n.
    """
    if p.a == 0:
        raise DomainError("normalization point undefined for a = 0")
    q = p.q
    v = (
        (p.c / (q * p.a)) ** n
        * qpoch(q * p.a, q, n)
        * qpoch(-q * p.a * p.d / p.c, q, n)
        / qpoch(q ** float(n + 1) * p.a * p.b, q, n)
    )
    if v == 0:
        raise DomainError("degenerate parameters: normalization value vanishes")
    return v


def big_qjacobi_second_value(n, p):
    """Normalized value at the other endpoint-like point x = -d/(qb):

    (-ad/(bc))^n (qb;q)_n (-qbc/d;q)_n / ((qa;q)_n (-qad/c;q)_n).
    """
    if p.a == 0 or p.b == 0:
        raise DomainError("requires a, b != 0")
    q = p.q
    return (
        (-p.a * p.d / (p.b * p.c)) ** n
        * qpoch(q * p.b, q, n)
        * qpoch(-q * p.b * p.c / p.d, q, n)
        / (qpoch(q * p.a, q, n) * qpoch(-q * p.a * p.d / p.c, q, n))
    )


def al_salam_carlitz_u(n, x, a, q, pol=DEFAULT_POLICY):
    """Al-Salam-Carlitz polynomial
    U_n^{(a)}(x) = (-1)^n q^{n(n-1)/2} a^n 2phi1(q^{-n}, 1/x; 0; q, qx/a).

    Monic of degree n; orthogonal on [a, 1] for a < 0.
    """
    q = check_q(q)
    if a == 0:
        raise DomainError("a must be nonzero")
    if n == 0:
        return 1.0 + 0.0j
    if x == 0:
        # Newton-basis expansion; the 1/x singularities of the 2phi1 cancel
        total = 0.0 + 0.0j
        term = 1.0 + 0.0j  # (q^{-n};q)_k (q/a)^k prod_{j<k}(x - q^j) / (q;q)_k at x=0
        for k in range(n + 1):
            total += term
            term *= (
                (1.0 - q ** float(k - n)) * (q / a) * (0.0 - q**k) / (1.0 - q ** (k + 1))
            )
        return (-1.0) ** n * q ** (n * (n - 1) / 2) * a**n * total
    body = eval_phi(
        SeriesSpec([q ** float(-n), 1.0 / x], [0], q, q * x / a), pol
    )
    return (-1.0) ** n * q ** (n * (n - 1) / 2) * a**n * body


def big_qjacobi_monic(n, x, p, pol=DEFAULT_POLICY):
    """Monic big q-Jacobi polynomial of degree n.

    Evaluated through the three term recurrence, whose coefficients come
    from the closed forms (stable on the support; the terminating-series
    path suffers cancellation for larger n).  The independent series
    path is big_qjacobi_norm_point_value(n, p) * big_qjacobi(n, x, p).
    The degenerations a = 0 and a = b = 0 are covered by the recurrence
    coefficients directly (Al-Salam-Carlitz: U_n^{(a)} = P~_n(x;0,0,1,-a;q)).
    """
    return big_qjacobi_by_recurrence(n, x, p)


def big_qjacobi_shift_down(n, x, p, pol=DEFAULT_POLICY):
    """Backward q-derivative of the monic degree-n polynomial at x.

    Satisfies D_q^- P~_n(.;a,b,c,d) = (1-q^n)/(1-q) P~_{n-1}(.;qa,qb,c,d).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    return qderiv_backward(lambda t: big_qjacobi_monic(n, t, p, pol), x, p.q)


def dq_plus_ab(f, x, p):
    """Parameter-raising first order q-difference operator

    (D_q^{+,a,b} f)(x) = [(1-x/c)(1+x/d) f(x/q)
                          - (1-qax/c)(1+qbx/d) f(x)] / ((1-q)x).
    """
    if x == 0:
        raise DomainError("operator undefined at x = 0")
    q = p.q
    return (
        (1.0 - x / p.c) * (1.0 + x / p.d) * f(x / q)
        - (1.0 - q * p.a * x / p.c) * (1.0 + q * p.b * x / p.d) * f(x)
    ) / ((1.0 - q) * x)


def big_qjacobi_shift_up(n, x, p, pol=DEFAULT_POLICY):
    """D_q^{+,a,b} applied to the monic degree-(n-1) polynomial with
    raised parameters (qa, qb, c, d), evaluated at x.

    Satisfies the raising relation: equals
    (q^2 ab - q^{-n+1}) / ((1-q) c d) * P~_n(x; a, b, c, d).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        raised = BigQJacobiParams(p.q * p.a, p.q * p.b, p.c, p.d, p.q)
    return dq_plus_ab(lambda t: big_qjacobi_monic(n - 1, t, raised, pol), x, p)


def big_qjacobi_eigenvalue(n, p):
    """Eigenvalue q(1-q^{-n})(1-q^{n+1}ab) / ((1-q)^2 cd) of the second
    order q-difference operator obtained by composing the two shifts."""
    q = p.q
    return (
        q
        * (1.0 - q ** float(-n))
        * (1.0 - q ** float(n + 1) * p.a * p.b)
        / ((1.0 - q) ** 2 * p.c * p.d)
    )


def big_qjacobi_weight_integral(p, pol=DEFAULT_POLICY):
    """Total mass of the weight over the support [-d, c]:

    (1-q) c (q, -d/c, -qc/d, q^2 ab;q)_oo / (qa, qb, -qbc/d, -qad/c;q)_oo.
    """
    q = p.q
    num = (
        qpoch(q, q, INFINITY, pol)
        * qpoch(-p.d / p.c, q, INFINITY, pol)
        * qpoch(-q * p.c / p.d, q, INFINITY, pol)
        * qpoch(q * q * p.a * p.b, q, INFINITY, pol)
    )
    den = (
        qpoch(q * p.a, q, INFINITY, pol)
        * qpoch(q * p.b, q, INFINITY, pol)
        * qpoch(-q * p.b * p.c / p.d, q, INFINITY, pol)
        * qpoch(-q * p.a * p.d / p.c, q, INFINITY, pol)
    )
    return (1.0 - q) * p.c * num / den


def big_qjacobi_norm(n, p, pol=DEFAULT_POLICY):
    """Quadratic norm of the monic polynomial: the closed-form ratio

    q^{n(n-1)/2} (cd)^n (q, qa, qb, -qbc/d, -qad/c;q)_n
        / ((q^2 ab;q)_{2n} (q^{n+1}ab;q)_n)

    times the weight integral."""
    q = p.q
    ratio = (
        q ** (n * (n - 1) / 2)
        * (p.c * p.d) ** n
        * qpoch_list(
            [q, q * p.a, q * p.b, -q * p.b * p.c / p.d, -q * p.a * p.d / p.c], q, n
        )
        / (
            qpoch(q * q * p.a * p.b, q, 2 * n)
            * qpoch(q ** float(n + 1) * p.a * p.b, q, n)
        )
    )
    return ratio * big_qjacobi_weight_integral(p, pol)


def big_qjacobi_gram(n, m, p, pol=DEFAULT_POLICY):
    """Gram entry int_{-d}^{c} P~_n P~_m w d_qx of the monic family.

    The integral splits over the two endpoint lattices; diagonal entries
    match big_qjacobi_norm, off-diagonals vanish.
    """

    def f(x):
        return (
            big_qjacobi_monic(n, x, p, pol)
            * big_qjacobi_monic(m, x, p, pol)
            * big_qjacobi_weight(x, p, pol)
        )

    return qintegral_0a(f, p.c, p.q, pol) - qintegral_0a(f, -p.d, p.q, pol)


def big_qjacobi_recurrence(n, p):
    """Coefficients (B_n, C_n) of x P~_n = P~_{n+1} + B_n P~_n + C_n P~_{n-1}.

    C_n has the closed form

    q^{n-1}(1-q^n)(1-q^n a)(1-q^n b)(1-q^n ab)(d+q^n bc)(c+q^n ad)
      / ((1-q^{2n-1}ab)(1-q^{2n}ab)^2 (1-q^{2n+1}ab));

    B_n follows by evaluating the recurrence at the normalization point.
    C_0 is returned as 0 (unused).
    """
    q = p.q
    a, b, c, d = p.a, p.b, p.c, p.d
    if a == 0 and b == 0:
        bn = (c - d) * q**n
        cn = 0.0 if n == 0 else c * d * q ** (n - 1) * (1.0 - q**n)
        return bn, cn
    if a == 0:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            flipped = BigQJacobiParams(b, a, d, c, q)
        bn, cn = big_qjacobi_recurrence(n, flipped)
        return -bn, cn
    qn = q ** float(n)
    if n == 0:
        cn = 0.0
    else:
        cn = (
            q ** (n - 1)
            * (1.0 - qn)
            * (1.0 - qn * a)
            * (1.0 - qn * b)
            * (1.0 - qn * a * b)
            * (d + qn * b * c)
            * (c + qn * a * d)
            / (
                (1.0 - q ** float(2 * n - 1) * a * b)
                * (1.0 - q ** float(2 * n) * a * b) ** 2
                * (1.0 - q ** float(2 * n + 1) * a * b)
            )
        )
    x0 = c / (q * a)
    v = [big_qjacobi_norm_point_value(k, p) for k in (n - 1, n, n + 1)]
    bn = x0 - v[2] / v[1] - (cn * v[0] / v[1] if n > 0 else 0.0)
    return bn, cn


def big_qjacobi_by_recurrence(n, x, p):
    """Monic value through the three term recurrence; dual path to the
    hypergeometric evaluation."""
    prev, cur = 0.0 + 0.0j, 1.0 + 0.0j
    for k in range(n):
        bk, ck = big_qjacobi_recurrence(k, p)
        prev, cur = cur, (x - bk) * cur - ck * prev
    return cur


def qtaylor_coefficients(f, n, a, c, q, pol=DEFAULT_POLICY):
    """Coefficients c_k of f(x) = sum_k c_k (qax/c;q)_k for a polynomial
    f of degree <= n in that basis.

    Recovered from iterated backward q-derivatives at the special points
    c/(q^{k+1}a), where all basis terms but one drop out:

    ((D_q^-)^k f)(c/(q^{k+1}a))
        = c_k (-1)^k (qa/c)^k q^{k(k-1)/2} (q;q)_k / (1-q)^k.
    """
    q = check_q(q)
    coeffs = []
    g = f
    for k in range(n + 1):
        point = c / (q ** (k + 1) * a)
        denom = (
            (-1.0) ** k
            * (q * a / c) ** k
            * q ** (k * (k - 1) / 2)
            * qpoch(q, q, k)
            / (1.0 - q) ** k
        )
        coeffs.append(g(point) / denom)
        g = (lambda h: lambda x: qderiv_backward(h, x, q))(g)
    return coeffs


def little_qjacobi(n, x, a, b, q, form="2phi1", pol=DEFAULT_POLICY):
    """Little q-Jacobi polynomial p_n(x;a,b;q), value 1 at x = 0.

    Primary path: 2phi1(q^{-n}, q^{n+1}ab; qa; q, qx).
    Alternative (b != 0):
    (-qb)^{-n} q^{-n(n-1)/2} (qb;q)_n/(qa;q)_n
        * 3phi2(q^{-n}, q^{n+1}ab, qbx; qb, 0; q, q).
    """
    q = check_q(q)
    if form == "2phi1":
        return eval_phi(
            SeriesSpec([q ** float(-n), q ** float(n + 1) * a * b], [q * a], q, q * x),
            pol,
        )
    if form == "3phi2":
        if b == 0:
            raise DomainError("3phi2 path requires b != 0")
        body = eval_phi(
            SeriesSpec(
                [q ** float(-n), q ** float(n + 1) * a * b, q * b * x], [q * b, 0], q, q
            ),
            pol,
        )
        return (
            (-q * b) ** (-n)
            * q ** (-n * (n - 1) / 2)
            * qpoch(q * b, q, n)
            / qpoch(q * a, q, n)
            * body
        )
    raise DomainError(f"unknown form {form!r}")


def little_qjacobi_gram(n, m, a, b, q, pol=DEFAULT_POLICY):
    """Normalized q-integral Gram entry of the little q-Jacobi family:

    (1/B) int_0^1 p_n p_m t^alpha (qt;q)_oo/(qbt;q)_oo d_qt,

    with a = q^alpha, b = q^beta and B the corresponding q-beta value
    (1-q)(q, q^2 ab;q)_oo / ((qa, qb;q)_oo).  b = 0 (Wall) is allowed.
    """
    q = check_q(q)
    if not 0 < a < 1:
        raise DomainError("requires 0 < a < 1")
    alpha = math.log(a) / math.log(q)

    def integrand(t):
        w = (
            t**alpha
            * qpoch(q * t, q, INFINITY, pol)
            / qpoch(q * b * t, q, INFINITY, pol)
        )
        return (
            little_qjacobi(n, t, a, b, q, pol=pol)
            * little_qjacobi(m, t, a, b, q, pol=pol)
            * w
        )

    total = qintegral_0a(integrand, 1.0, q, pol)
    norm = (
        (1.0 - q)
        * qpoch(q, q, INFINITY, pol)
        * qpoch(q * q * a * b, q, INFINITY, pol)
        / (qpoch(q * a, q, INFINITY, pol) * qpoch(q * b, q, INFINITY, pol))
    )
    return total / norm


def little_qjacobi_norm(n, a, b, q):
    """Closed-form diagonal of the normalized Gram:

    (qa)^n (1-qab)(qb;q)_n (q;q)_n / ((1-q^{2n+1}ab)(qa;q)_n (qab;q)_n).
    """
    q = check_q(q)
    return (
        (q * a) ** n
        * (1.0 - q * a * b)
        * qpoch(q * b, q, n)
        * qpoch(q, q, n)
        / (
            (1.0 - q ** float(2 * n + 1) * a * b)
            * qpoch(q * a, q, n)
            * qpoch(q * a * b, q, n)
        )
    )


def little_qjacobi_orthogonality(n, m, alpha, beta, q, pol=DEFAULT_POLICY):
    """Gram entry in the (alpha, beta) exponent parametrization; equals
    delta_{nm} times the closed-form norm."""
    q = check_q(q)
    return little_qjacobi_gram(n, m, q**alpha, q**beta, q, pol)


# ---------------------------------------------------------------------------
# tableau families


_FAMILY_KEYS = {
    "q_hahn": ("a", "b", "N"),
    "q_krawtchouk": ("b", "N"),
    "affine_q_krawtchouk": ("a", "N"),
    "affine_qinv_krawtchouk": ("b", "N"),
    "q_meixner": ("a", "c"),
    "big_q_laguerre": ("a", "c", "d"),
    "wall": ("a",),
    "moak": ("alpha",),
    "al_salam_carlitz_u": ("a",),
    "al_salam_carlitz_v": ("a",),
    "stieltjes_wigert": (),
    "little_q_jacobi": ("a", "b"),
    "case_3a": ("b",),
}


@dataclass(frozen=True)
class FamilyParams:
    """Tagged parameter bundle for a tableau family."""

    name: str
    q: float
    params: tuple

    def __init__(self, name, q, **kwargs):
        if name not in _FAMILY_KEYS:
            raise DomainError(f"unknown family {name!r}")
        keys = _FAMILY_KEYS[name]
        if set(kwargs) != set(keys):
            raise DomainError(f"family {name!r} takes parameters {keys}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "q", check_q(q))
        object.__setattr__(self, "params", tuple(kwargs[k] for k in keys))
        if "N" in keys:
            big_n = self["N"]
            if big_n != int(big_n) or not 0 <= big_n <= _MAX_FINITE_N:
                raise DomainError(f"N must be an integer in [0, {_MAX_FINITE_N}]")

    def __getitem__(self, key):
        return self.params[_FAMILY_KEYS[self.name].index(key)]


def _check_degree(fam, n):
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if "N" in _FAMILY_KEYS[fam.name] and n > fam["N"]:
        raise DomainError("degree exceeds N")


def family_eval(fam, n, x, form="primary", pol=DEFAULT_POLICY):
    """Evaluate the degree-n polynomial of the family at x.

    form="alt" selects the second printed series representation for the
    families that have one (big q-Laguerre, Wall, Moak, affine
    q^{-1}-Krawtchouk, little q-Jacobi); elsewhere it raises.
    """
    _check_degree(fam, n)
    q = fam.q
    qn = q ** float(-n)
    name = fam.name
    alt = form == "alt"
    if form not in ("primary", "alt"):
        raise DomainError(f"unknown form {form!r}")

    if name == "q_hahn":
        a, b = fam["a"], fam["b"]
        if alt:
            raise DomainError("q_hahn has a single printed representation")
        return eval_phi(
            SeriesSpec(
                [qn, a * b * q ** float(n + 1), x],
                [a * q, q ** float(-fam["N"])],
                q,
                q,
            ),
            pol,
        )
    if name == "q_krawtchouk":
        if alt:
            raise DomainError("q_krawtchouk has a single printed representation")
        return eval_phi(
            SeriesSpec(
                [qn, -q ** float(n) / fam["b"], x],
                [0, q ** float(-fam["N"])],
                q,
                q,
            ),
            pol,
        )
    if name == "affine_q_krawtchouk":
        a = fam["a"]
        if alt:
            # the big-q-Jacobi specialization Q_n(x; a, 0, N; q)
            qh = FamilyParams("q_hahn", q, a=a, b=0, N=fam["N"])
            return family_eval(qh, n, x, pol=pol)
        return eval_phi(
            SeriesSpec([qn, 0, x], [a * q, q ** float(-fam["N"])], q, q), pol
        )
    if name == "affine_qinv_krawtchouk":
        b = fam["b"]
        if alt:
            qm = FamilyParams(
                "q_meixner", q, a=q ** float(-fam["N"] - 1), c=-1.0 / b
            )
            return family_eval(qm, n, x, pol=pol)
        return eval_phi(
            SeriesSpec([qn, x], [q ** float(-fam["N"])], q, b * q ** float(n + 1)),
            pol,
        )
    if name == "q_meixner":
        if alt:
            raise DomainError("q_meixner has a single printed representation")
        a, c = fam["a"], fam["c"]
        return eval_phi(
            SeriesSpec([qn, x], [q * a], q, -q ** float(n + 1) / c), pol
        )
    if name == "big_q_laguerre":
        a, c, d = fam["a"], fam["c"], fam["d"]
        if alt:
            if x == 0:
                raise DomainError("alt path needs x != 0")
            pref = 1.0 / qpoch(-qn * c / (a * d), q, n)
            body = eval_phi(
                SeriesSpec([qn, c / x], [q * a], q, -q * x / d), pol
            )
            return pref * body
        return eval_phi(
            SeriesSpec([qn, 0, q * a * x / c], [q * a, -q * a * d / c], q, q), pol
        )
    if name == "wall":
        a = fam["a"]
        if alt:
            if x == 0:
                raise DomainError("alt path needs x != 0")
            pref = 1.0 / qpoch(q ** float(-n) / a, q, n)
            body = eval_phi(SeriesSpec([qn, 1.0 / x], [], q, x / a), pol)
            return pref * body
        return little_qjacobi(n, x, a, 0.0, q, pol=pol)
    if name == "moak":
        alpha = fam["alpha"]
        if alt:
            return eval_phi(
                SeriesSpec([qn, -x], [0], q, q ** (n + alpha + 1)), pol
            ) / qpoch(q, q, n)
        pref = qpoch(q ** (alpha + 1.0), q, n) / qpoch(q, q, n)
        body = eval_phi(
            SeriesSpec([qn], [q ** (alpha + 1.0)], q, -x * q ** (n + alpha + 1)), pol
        )
        return pref * body
    if name == "al_salam_carlitz_u":
        if alt:
            raise DomainError("use the recurrence as the dual path for U")
        return al_salam_carlitz_u(n, x, fam["a"], q, pol)
    if name == "al_salam_carlitz_v":
        a = fam["a"]
        if alt:
            raise DomainError("al_salam_carlitz_v has a single printed representation")
        if a == 0:
            raise DomainError("a must be nonzero")
        body = eval_phi(
            SeriesSpec([qn, x], [], q, q ** float(n) / a), pol
        )
        return (-1.0) ** n * q ** (-n * (n - 1) / 2) * a**n * body
    if name == "stieltjes_wigert":
        if alt:
            raise DomainError("stieltjes_wigert has a single printed representation")
        body = eval_phi(
            SeriesSpec([qn], [0], q, -q ** (n + 1.5) * x), pol
        )
        return (-1.0) ** n * q ** (-n * (2 * n + 1) / 2) * body
    if name == "little_q_jacobi":
        return little_qjacobi(
            n, x, fam["a"], fam["b"], q, form="3phi2" if alt else "2phi1", pol=pol
        )
    if name == "case_3a":
        # undocumented case: series evaluation only, no orthogonality claim
        if alt:
            raise DomainError("case_3a has a single printed representation")
        return eval_phi(
            SeriesSpec([qn, q ** float(n) * fam["b"]], [0], q, q * x), pol
        )
    raise DomainError(f"unknown family {name!r}")


def _finite_gram(fam, n, m, weight, pol):
    big_n = fam["N"]
    _check_degree(fam, n)
    _check_degree(fam, m)
    q = fam.q
    total = 0.0 + 0.0j
    for x in range(big_n + 1):
        point = q ** float(-x)
        total += (
            family_eval(fam, n, point, pol=pol)
            * family_eval(fam, m, point, pol=pol)
            * weight(x)
        )
    return total


def family_orthogonality(fam, n, m, pol=DEFAULT_POLICY):
    """Gram entry <p_n, p_m> of the family under its printed measure.

    Finite families are summed exactly over x = 0..N; q-integral
    measures are tail-truncated by the policy.  Families without a
    printed measure (q-Meixner, Al-Salam-Carlitz V, Stieltjes-Wigert,
    case 3a) raise DomainError.
    """
    q = fam.q
    name = fam.name
    if name == "q_hahn":
        a, b, big_n = fam["a"], fam["b"], fam["N"]

        def weight(x):
            return (
                qpoch(a * q, q, x)
                * qpoch(b * q, q, big_n - x)
                * (a * q) ** float(-x)
                / (qpoch(q, q, x) * qpoch(q, q, big_n - x))
            )

        return _finite_gram(fam, n, m, weight, pol)
    if name == "q_krawtchouk":
        b, big_n = fam["b"], fam["N"]

        def weight(x):
            return qpoch(q ** float(-big_n), q, x) * (-b) ** x / qpoch(q, q, x)

        return _finite_gram(fam, n, m, weight, pol)
    if name == "affine_q_krawtchouk":
        a, big_n = fam["a"], fam["N"]

        def weight(x):
            return (
                qpoch(a * q, q, x)
                * (a * q) ** float(-x)
                / (qpoch(q, q, x) * qpoch(q, q, big_n - x))
            )

        return _finite_gram(fam, n, m, weight, pol)
    if name == "affine_qinv_krawtchouk":
        b, big_n = fam["b"], fam["N"]

        def weight(x):
            return (
                qpoch(b * q, q, big_n - x)
                * (-1.0) ** (big_n - x)
                * q ** (x * (x - 1) / 2)
                / (qpoch(q, q, x) * qpoch(q, q, big_n - x))
            )

        return _finite_gram(fam, n, m, weight, pol)
    if name in ("little_q_jacobi", "wall"):
        a = fam["a"]
        b = fam["b"] if name == "little_q_jacobi" else 0.0
        return little_qjacobi_gram(n, m, a, b, q, pol)
    if name == "moak":
        alpha = fam["alpha"]

        def integrand(x):
            # the polynomials are sampled at (1-q)x so that the lattice
            # matches the (-(1-q)x;q)_oo factor of the measure
            y = (1.0 - q) * x
            return (
                family_eval(fam, n, y, pol=pol)
                * family_eval(fam, m, y, pol=pol)
                * x**alpha
                / qpoch(-(1.0 - q) * x, q, INFINITY, pol)
            )

        return qintegral_0inf(integrand, q, pol=pol)
    if name == "al_salam_carlitz_u":
        a = fam["a"]
        if not a < 0:
            raise DomainError("orthogonality requires a < 0")

        def integrand(x):
            return (
                al_salam_carlitz_u(n, x, a, q, pol)
                * al_salam_carlitz_u(m, x, a, q, pol)
                * qpoch(q * x, q, INFINITY, pol)
                * qpoch(q * x / a, q, INFINITY, pol)
            )

        return qintegral_0a(integrand, 1.0, q, pol) - qintegral_0a(
            integrand, a, q, pol
        )
    raise DomainError(f"no printed orthogonality measure for {name!r}")


# ---------------------------------------------------------------------------
# quadratic transformations


def quadratic_transform_check(n, a, q, x=0.35, pol=DEFAULT_POLICY):
    """Residuals of the even/odd quadratic transformations linking
    normalized big q-Jacobi with parameters (a, a, 1, 1) to little
    q-Jacobi in base q^2:

    even: P_{2n}(x) = p_n(x^2; q^{-1}, a^2; q^2) / p_n((qa)^{-2}; ...)
    odd:  P_{2n+1}(x) = x p_n(x^2; q, a^2; q^2)
                          / ((qa)^{-1} p_n((qa)^{-2}; ...)).
    """
    q = check_q(q)
    p = BigQJacobiParams(a, a, 1.0, 1.0, q)
    q2 = q * q
    x0 = (q * a) ** (-2.0)
    even = big_qjacobi(2 * n, x, p, pol) - little_qjacobi(
        n, x * x, 1.0 / q, a * a, q2, pol=pol
    ) / little_qjacobi(n, x0, 1.0 / q, a * a, q2, pol=pol)
    odd = big_qjacobi(2 * n + 1, x, p, pol) - x * little_qjacobi(
        n, x * x, q, a * a, q2, pol=pol
    ) / ((q * a) ** (-1.0) * little_qjacobi(n, x0, q, a * a, q2, pol=pol))
    return even, odd


def quadratic_transform_u(n, x, q, pol=DEFAULT_POLICY):
    """Mutual residuals of the three printed forms of U_n^{(-1)}:

    q^{n(n-1)/2} 2phi1(q^{-n}, 1/x; 0; q, -qx)
      = monic big q-Jacobi with (0,0,1,1)
      = x^n 2phi0(q^{-n}, q^{-n+1}; -; q^2, q^{2n-1} x^{-2}).
    """
    q = check_q(q)
    if x == 0:
        raise DomainError("x must be nonzero")
    u = al_salam_carlitz_u(n, x, -1.0, q, pol)
    via_big = big_qjacobi_monic(n, x, BigQJacobiParams(0, 0, 1.0, 1.0, q), pol)
    body = eval_phi(
        SeriesSpec(
            [q ** float(-n), q ** float(-n + 1)],
            [],
            q * q,
            q ** float(2 * n - 1) / (x * x),
        ),
        pol,
    )
    via_wall = x**n * body
    return u - via_big, u - via_wall


def quadratic_transform_v(n, x, q, pol=DEFAULT_POLICY):
    """Residual of the two printed forms of i^{-n} V_n^{(-1)}(ix):

    i^{-n} q^{-n(n-1)/2} 2phi0(q^{-n}, ix; -; q, -q^n)
      = x^n 2phi1(q^{-n}, q^{-n+1}; 0; q^2, -q^2 x^{-2}).
    """
    q = check_q(q)
    if x == 0:
        raise DomainError("x must be nonzero")
    body = eval_phi(
        SeriesSpec([q ** float(-n), 1j * x], [], q, -q ** float(n)), pol
    )
    lhs = 1j ** (-n) * q ** (-n * (n - 1) / 2) * body
    rhs = x**n * eval_phi(
        SeriesSpec(
            [q ** float(-n), q ** float(-n + 1)], [0], q * q, -q * q / (x * x)
        ),
        pol,
    )
    return lhs - rhs
