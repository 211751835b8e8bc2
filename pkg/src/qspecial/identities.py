"""Machine-checked identity catalog.

Each record pairs two independent evaluation routes for one identity
(series vs product, series vs q-integral, polynomial vs recurrence,
coefficient stream vs closed generating function) with a seeded
parameter sampler and a tolerance class.  Verification draws random
parameters, evaluates both sides, and reports the worst relative error.
"""

import cmath
import json
import math
import random
from dataclasses import dataclass, field

from qspecial.errors import DomainError
from qspecial.qcore import DEFAULT_POLICY, INFINITY, qbinomial, qpoch, qpoch_list
from qspecial.qcalculus import qintegral_0a
from qspecial.qfunctions import E_q, e_q, gamma_q, gamma_q_reciprocal, partition_count
from qspecial.qseries import SeriesSpec, eval_phi, eval_psi
from qspecial.qorthopoly import little_qjacobi
from qspecial.askey_wilson import AWParams, aw_poly, aw_poly_by_recurrence
from qspecial.limits import classical_eval

TOLERANCES = {
    "EXACT_TERMINATING": 1e-11,
    "PRODUCT_SERIES": 1e-10,
    "LIMIT_CHAIN": 1e-8,
}


@dataclass(frozen=True)
class IdentityRecord:
    """One verifiable identity: two independent sides plus a sampler."""

    id: str
    lhs: object
    rhs: object
    sampler: object
    tolerance_class: str
    reference: str


@dataclass
class VerificationReport:
    """Outcome of sampling one identity."""

    id: str
    samples: int
    seed: int
    tolerance: float
    max_rel_error: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "id": self.id,
            "samples": self.samples,
            "max_rel_error": self.max_rel_error,
            "tolerance": self.tolerance,
            "failures": self.failures,
            "seed": self.seed,
        }

    def to_json(self):
        return json.dumps(self.to_dict())


# ---------------------------------------------------------------------------
# small helpers


def _jsonable(v):
    if isinstance(v, complex):
        return [v.real, v.imag]
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def _rel_err(l, r):
    if isinstance(l, (list, tuple)):
        return max(
            (_rel_err(a, b) for a, b in zip(l, r)), default=0.0
        )
    return abs(l - r) / max(1.0, abs(l), abs(r))


def _pinf(vals, q, pol=DEFAULT_POLICY):
    out = 1.0 + 0.0j
    for v in vals:
        out *= qpoch(v, q, INFINITY, pol)
    return out


def _s(rng, lo=0.1, hi=0.9):
    """Signed magnitude in [lo, hi]."""
    return rng.uniform(lo, hi) * rng.choice([-1.0, 1.0])


def _q(rng):
    return rng.uniform(0.1, 0.9)


def _lower_ok(vals, q, margin=0.05):
    """Reject lower parameters near the forbidden set {1, q^-1, q^-2, ...}
    with a margin wide enough to keep the series well conditioned."""
    for v in vals:
        target = 1.0
        for _ in range(80):
            if abs(v - target) < margin * abs(target):
                return False
            target /= q
            if abs(target) > 1e12:
                break
    return True


def _phi_cond(upper, lower, q, z, cap=5000):
    """Float amplification estimate for a phi series: sum|t_k| / |sum t_k|."""
    sp = 1 + len(lower) - len(upper)
    t = 1.0 + 0.0j
    tot = 0.0 + 0.0j
    ab = 0.0
    for k in range(cap):
        tot += t
        ab += abs(t)
        qk = q**k
        num = complex(z)
        for a in upper:
            num *= 1.0 - a * qk
        for b in lower:
            den = 1.0 - b * qk
            if den == 0:
                return math.inf
            num /= den
        if sp:
            num *= (-qk) ** sp
        t *= num / (1.0 - q ** (k + 1))
        if abs(t) < 1e-18 * max(1.0, ab):
            break
    return ab / max(1e-300, abs(tot))


def _psi_cond(upper, lower, q, z, cap=5000):
    """Float amplification estimate for a bilateral psi series."""
    sp = len(lower) - len(upper)
    tot = 1.0 + 0.0j
    ab = 1.0
    t = 1.0 + 0.0j
    for k in range(cap):
        qk = q**k
        num = complex(z)
        for a in upper:
            num *= 1.0 - a * qk
        den = 1.0 + 0.0j
        for b in lower:
            den *= 1.0 - b * qk
        if den == 0:
            return math.inf
        if sp:
            num *= (-qk) ** sp
        t *= num / den
        tot += t
        ab += abs(t)
        if abs(t) < 1e-18 * max(1.0, ab):
            break
    t = 1.0 + 0.0j
    nz = [b for b in lower if b != 0]
    excess = len(lower) - len(nz)
    for k in range(1, cap):
        w = q**k
        den = complex(z)
        for a in upper:
            den *= a - w
        if den == 0:
            break
        num = 1.0 + 0.0j
        for b in nz:
            num *= b - w
        if excess:
            num *= (-w) ** excess
        t *= num / den
        tot += t
        ab += abs(t)
        if abs(t) < 1e-18 * max(1.0, ab):
            break
    return ab / max(1e-300, abs(tot))


def _nmax(q, budget=2.0):
    """Largest termination degree whose series stays well conditioned.

    A terminating series at argument q has intermediate terms as large as
    roughly q^{-n(n+1)/2}; capping that at 10^budget keeps the absolute
    rounding error near 10^{budget-16}.
    """
    level = math.log10(1.0 / q)
    n = 1
    while n < 11 and (n + 1) * (n + 2) / 2.0 * level <= budget:
        n += 1
    return n


def _draw(rng, build, tries=500):
    """Rejection-sample a parameter dict; build returns None to reject."""
    for _ in range(tries):
        p = build(rng)
        if p is not None:
            return p
    raise DomainError("sampler failed to find admissible parameters")


# integer power series in q (lists of ints, index = exponent)


def _ipoly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def _ipoly_inv(a, order):
    # requires a[0] == 1; inverse has integer coefficients
    out = [0] * (order + 1)
    out[0] = 1
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, min(n, len(a) - 1) + 1):
            acc += a[k] * out[n - k]
        out[n] = -acc
    return out


def _euler_inv_series(m, order):
    """Coefficients of 1/(q^m;q)_oo up to the given order."""
    prod = [1] + [0] * order
    for j in range(m, order + 1):
        prod = _ipoly_mul(prod, [1] + [0] * (j - 1) + [-1], order)
    return _ipoly_inv(prod, order)


def _qq_pochhammer_poly(k, order):
    """(q;q)_k as an integer polynomial in q."""
    prod = [1] + [0] * order
    for j in range(1, k + 1):
        prod = _ipoly_mul(prod, [1] + [0] * (j - 1) + [-1], order)
    return prod


# float/complex power series helpers (truncated, index = power of t)


def _smul(a, b, order):
    out = [0.0j] * (order + 1)
    for i in range(min(len(a), order + 1)):
        if a[i] == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += a[i] * b[j]
    return out


def _sexp(a, order):
    # exp of a series with a[0] = 0, by b' = a' b
    b = [0.0j] * (order + 1)
    b[0] = 1.0
    for n in range(1, order + 1):
        acc = 0.0j
        for k in range(1, min(n, len(a) - 1) + 1):
            acc += k * a[k] * b[n - k]
        b[n] = acc / n
    return b


def _spow(a, e, order):
    # a[0] != 0; c = a^e via n a0 c_n = sum_k (k(e+1) - n) a_k c_{n-k}
    c = [0.0j] * (order + 1)
    c[0] = complex(a[0]) ** e
    for n in range(1, order + 1):
        acc = 0.0j
        for k in range(1, min(n, len(a) - 1) + 1):
            acc += (k * (e + 1.0) - n) * a[k] * c[n - k]
        c[n] = acc / (n * a[0])
    return c


def _euler_plus_series(x, q, order):
    """z-series of (xz;q)_oo: coefficients (-x)^k q^{k(k-1)/2}/(q;q)_k."""
    out = []
    for k in range(order + 1):
        out.append((-x) ** k * q ** (k * (k - 1) / 2.0) / qpoch(q, q, k))
    return out


def _euler_minus_series(x, q, order):
    """z-series of 1/(xz;q)_oo: coefficients x^k/(q;q)_k."""
    return [x**k / qpoch(q, q, k) for k in range(order + 1)]


# ---------------------------------------------------------------------------
# registry

_REGISTRY = {}


def _add(id, lhs, rhs, sampler, tolerance_class, reference):
    if id in _REGISTRY:
        raise DomainError(f"duplicate identity id {id!r}")
    _REGISTRY[id] = IdentityRecord(id, lhs, rhs, sampler, tolerance_class, reference)


# --- binomial theorem chain -------------------------------------------------

_add(
    "q_binomial_theorem",
    lambda p: eval_phi(SeriesSpec([p["a"]], [], p["q"], p["z"])),
    lambda p: qpoch(p["a"] * p["z"], p["q"], INFINITY)
    / qpoch(p["z"], p["q"], INFINITY),
    lambda rng: {"q": _q(rng), "a": _s(rng), "z": _s(rng)},
    "PRODUCT_SERIES",
    "q-binomial theorem; Gasper & Rahman (1990), Eq. (1.3.2)",
)

_add(
    "q_binomial_terminating",
    lambda p: eval_phi(
        SeriesSpec([p["q"] ** float(-p["n"])], [], p["q"], p["z"])
    ),
    lambda p: qpoch(p["q"] ** float(-p["n"]) * p["z"], p["q"], p["n"]),
    lambda rng: {"q": _q(rng), "n": rng.randrange(0, 13), "z": _s(rng, 0.1, 2.0)},
    "EXACT_TERMINATING",
    "terminating q-binomial theorem",
)

_add(
    "q_exp_product",
    lambda p: e_q(p["z"], p["q"]) * E_q(-p["z"], p["q"]),
    lambda p: 1.0 + 0.0j,
    lambda rng: {"q": _q(rng), "z": _s(rng)},
    "PRODUCT_SERIES",
    "product of the two q-exponentials; Euler",
)


def _eq_base_inverted(p):
    # e_{1/q}(z) summed directly in base 1/q
    q, z = p["q"], p["z"]
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(1, 300):
        term *= z / (1.0 - q ** float(-k))
        total += term
        if abs(term) < 1e-18 * max(1.0, abs(total)):
            break
    return total


_add(
    "e_q_base_inversion",
    _eq_base_inverted,
    lambda p: E_q(-p["q"] * p["z"], p["q"]),
    lambda rng: {"q": _q(rng), "z": _s(rng, 0.1, 2.0)},
    "PRODUCT_SERIES",
    "base inversion q -> 1/q of the q-exponential",
)

_add(
    "euler_chain_gamma",
    lambda p: gamma_q(p["b"], p["q"]),
    lambda p: qintegral_0a(
        lambda t: t ** (p["b"] - 1.0)
        * E_q(-(1.0 - p["q"]) * p["q"] * t, p["q"]),
        1.0 / (1.0 - p["q"]),
        p["q"],
    ),
    lambda rng: {"q": _q(rng), "b": rng.uniform(0.3, 3.0)},
    "PRODUCT_SERIES",
    "q-integral representation of the q-gamma function",
)

_add(
    "q_beta_integral",
    lambda p: gamma_q(p["a"], p["q"])
    * gamma_q(p["b"], p["q"])
    / gamma_q(p["a"] + p["b"], p["q"]),
    lambda p: qintegral_0a(
        lambda t: t ** (p["b"] - 1.0)
        * qpoch(p["q"] * t, p["q"], INFINITY)
        / qpoch(p["q"] ** p["a"] * t, p["q"], INFINITY),
        1.0,
        p["q"],
    ),
    lambda rng: {"q": _q(rng), "a": rng.uniform(0.3, 3.0), "b": rng.uniform(0.3, 3.0)},
    "PRODUCT_SERIES",
    "q-beta integral; Gasper & Rahman (1990), Eq. (1.11.7)",
)


def _heine_integral_lhs(p):
    q = p["q"]
    return eval_phi(
        SeriesSpec([q ** p["a"], q ** p["b"]], [q ** p["c"]], q, p["z"])
    )


def _heine_integral_rhs(p):
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    pref = gamma_q(c, q) / (gamma_q(b, q) * gamma_q(c - b, q))
    integrand = lambda t: (
        t ** (b - 1.0)
        * qpoch(t * q, q, INFINITY)
        / qpoch(t * q ** (c - b), q, INFINITY)
        * qpoch(t * z * q**a, q, INFINITY)
        / qpoch(t * z, q, INFINITY)
    )
    return pref * qintegral_0a(integrand, 1.0, q)


_add(
    "heine_integral_rep",
    _heine_integral_lhs,
    _heine_integral_rhs,
    lambda rng: {
        "q": _q(rng),
        "a": rng.uniform(0.3, 2.0),
        "b": rng.uniform(0.3, 1.5),
        "c": rng.uniform(0.3, 1.5) + rng.uniform(0.3, 1.5),
        "z": _s(rng),
    },
    "PRODUCT_SERIES",
    "Heine's q-integral representation of 2phi1",
)


def _sample_heine(rng):
    q = _q(rng)
    a, b, c, z = _s(rng), _s(rng), _s(rng), _s(rng)
    if not _lower_ok([c, a * z], q):
        return None
    # every series the client identities evaluate must be well conditioned
    if _phi_cond([a, b], [c], q, z) > 1e4:
        return None
    if _phi_cond([c / b, z], [a * z], q, b) > 1e4:
        return None
    if _phi_cond([a, c / b], [c, a * z], q, b * z) > 1e4:
        return None
    return {"q": q, "a": a, "b": b, "c": c, "z": z}


_add(
    "heine_transform",
    lambda p: eval_phi(SeriesSpec([p["a"], p["b"]], [p["c"]], p["q"], p["z"])),
    lambda p: _pinf([p["a"] * p["z"], p["b"]], p["q"])
    / _pinf([p["z"], p["c"]], p["q"])
    * eval_phi(
        SeriesSpec([p["c"] / p["b"], p["z"]], [p["a"] * p["z"]], p["q"], p["b"])
    ),
    lambda rng: _draw(rng, _sample_heine),
    "PRODUCT_SERIES",
    "Heine's transformation; Gasper & Rahman (1990), Eq. (1.4.1)",
)


def _sample_gauss(rng):
    q = _q(rng)
    a, b = _s(rng, 0.4, 0.9), _s(rng, 0.4, 0.9)
    c = _s(rng, 0.1, 0.85) * abs(a * b)
    if not _lower_ok([c], q):
        return None
    return {"q": q, "a": a, "b": b, "c": c}


_add(
    "q_gauss",
    lambda p: eval_phi(
        SeriesSpec(
            [p["a"], p["b"]], [p["c"]], p["q"], p["c"] / (p["a"] * p["b"])
        )
    ),
    lambda p: _pinf([p["c"] / p["a"], p["c"] / p["b"]], p["q"])
    / _pinf([p["c"], p["c"] / (p["a"] * p["b"])], p["q"]),
    lambda rng: _draw(rng, _sample_gauss),
    "PRODUCT_SERIES",
    "q-Gauss summation; Gasper & Rahman (1990), Eq. (1.5.1)",
)


def _sample_nbc(rng, nmax=13):
    q = _q(rng)
    n, b, c = rng.randrange(0, nmax), _s(rng), _s(rng)
    if not _lower_ok([c], q):
        return None
    return {"q": q, "n": n, "b": b, "c": c}


def _sample_nbc_capped(rng):
    p = _sample_nbc(rng)
    if p is None or p["n"] > _nmax(p["q"]):
        return None
    q, n, b, c = p["q"], p["n"], p["b"], p["c"]
    if _phi_cond([q ** float(-n), b], [c], q, q) > 1e3:
        return None
    return p


_add(
    "q_vandermonde_terminating",
    lambda p: eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["b"]],
            [p["c"]],
            p["q"],
            p["c"] * p["q"] ** float(p["n"]) / p["b"],
        )
    ),
    lambda p: qpoch(p["c"] / p["b"], p["q"], p["n"]) / qpoch(p["c"], p["q"], p["n"]),
    lambda rng: _draw(rng, _sample_nbc),
    "EXACT_TERMINATING",
    "terminating q-Vandermonde summation",
)

_add(
    "heine_2phi2_transform",
    lambda p: eval_phi(SeriesSpec([p["a"], p["b"]], [p["c"]], p["q"], p["z"])),
    lambda p: qpoch(p["a"] * p["z"], p["q"], INFINITY)
    / qpoch(p["z"], p["q"], INFINITY)
    * eval_phi(
        SeriesSpec(
            [p["a"], p["c"] / p["b"]],
            [p["c"], p["a"] * p["z"]],
            p["q"],
            p["b"] * p["z"],
        )
    ),
    lambda rng: _draw(rng, _sample_heine),
    "PRODUCT_SERIES",
    "2phi1 -> 2phi2 contiguous transformation",
)


def _sample_q_euler(rng):
    p = _sample_heine(rng)
    if p is None:
        return None
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    if abs(a * b * z / c) >= 0.95:
        return None
    if _phi_cond([a, b], [c], q, z) > 1e4:
        return None
    if _phi_cond([c / a, c / b], [c], q, a * b * z / c) > 1e4:
        return None
    return p


_add(
    "q_euler_transform",
    lambda p: eval_phi(SeriesSpec([p["a"], p["b"]], [p["c"]], p["q"], p["z"])),
    lambda p: qpoch(p["a"] * p["b"] * p["z"] / p["c"], p["q"], INFINITY)
    / qpoch(p["z"], p["q"], INFINITY)
    * eval_phi(
        SeriesSpec(
            [p["c"] / p["a"], p["c"] / p["b"]],
            [p["c"]],
            p["q"],
            p["a"] * p["b"] * p["z"] / p["c"],
        )
    ),
    lambda rng: _draw(rng, _sample_q_euler),
    "PRODUCT_SERIES",
    "Euler-type transformation of 2phi1",
)


def _sample_reversal(rng):
    q = _q(rng)
    n, b, c, z = rng.randrange(0, 11), _s(rng), _s(rng), _s(rng)
    if n > _nmax(q):
        return None
    if not _lower_ok([c], q):
        return None
    if not _lower_ok([q ** float(-n + 1) / b], q):
        return None
    qn = q ** float(-n)
    if _phi_cond([qn, b], [c], q, z) > 1e3:
        return None
    if (
        _phi_cond(
            [qn, q * qn / c], [q * qn / b], q, q ** float(n + 1) * c / (b * z)
        )
        > 1e3
    ):
        return None
    return {"q": q, "n": n, "b": b, "c": c, "z": z}


def _reversal_rhs(p):
    q, n, b, c, z = p["q"], p["n"], p["b"], p["c"], p["z"]
    pref = (
        q ** (-n * (n + 1) / 2.0)
        * qpoch(b, q, n)
        / qpoch(c, q, n)
        * (-z) ** n
    )
    body = eval_phi(
        SeriesSpec(
            [q ** float(-n), q ** float(-n + 1) / c],
            [q ** float(-n + 1) / b],
            q,
            q ** float(n + 1) * c / (b * z),
        )
    )
    return pref * body


_add(
    "terminating_reversal",
    lambda p: eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["b"]], [p["c"]], p["q"], p["z"]
        )
    ),
    _reversal_rhs,
    lambda rng: _draw(rng, _sample_reversal),
    "EXACT_TERMINATING",
    "order reversal of a terminating 2phi1",
)

_add(
    "q_chu_vandermonde",
    lambda p: eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["b"]], [p["c"]], p["q"], p["q"]
        )
    ),
    lambda p: qpoch(p["c"] / p["b"], p["q"], p["n"])
    * p["b"] ** p["n"]
    / qpoch(p["c"], p["q"], p["n"]),
    lambda rng: _draw(rng, _sample_nbc_capped),
    "EXACT_TERMINATING",
    "second terminating q-Chu-Vandermonde summation",
)


def _sample_term_3phi2(rng):
    q = _q(rng)
    n, b, c, z = rng.randrange(0, 11), _s(rng), _s(rng), _s(rng)
    if n > _nmax(q):
        return None
    if not _lower_ok([c, b * q ** float(1 - n) / c], q):
        return None
    qn = q ** float(-n)
    if _phi_cond([qn, b], [c], q, z) > 1e3:
        return None
    if (
        _phi_cond(
            [qn, b, b * z * qn / c], [b * q * qn / c, 0], q, q
        )
        > 1e3
    ):
        return None
    return {"q": q, "n": n, "b": b, "c": c, "z": z}


_add(
    "terminating_3phi2_transform",
    lambda p: eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["b"]], [p["c"]], p["q"], p["z"]
        )
    ),
    lambda p: qpoch(p["c"] / p["b"], p["q"], p["n"])
    / qpoch(p["c"], p["q"], p["n"])
    * eval_phi(
        SeriesSpec(
            [
                p["q"] ** float(-p["n"]),
                p["b"],
                p["b"] * p["z"] * p["q"] ** float(-p["n"]) / p["c"],
            ],
            [p["b"] * p["q"] ** float(1 - p["n"]) / p["c"], 0],
            p["q"],
            p["q"],
        )
    ),
    lambda rng: _draw(rng, _sample_term_3phi2),
    "EXACT_TERMINATING",
    "terminating 2phi1 to 3phi2 transformation",
)


def _sample_jackson_3phi2(rng):
    q = _q(rng)
    n, b, c, z = rng.randrange(0, 11), _s(rng), _s(rng), _s(rng)
    if n > _nmax(q):
        return None
    if not _lower_ok([c, c * q / (b * z)], q):
        return None
    qn = q ** float(-n)
    if _phi_cond([qn, b], [c], q, z) > 1e3:
        return None
    if _phi_cond([qn, c / b, 0], [c, c * q / (b * z)], q, q) > 1e3:
        return None
    return {"q": q, "n": n, "b": b, "c": c, "z": z}


_add(
    "jackson_3phi2_transform",
    lambda p: eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["b"]], [p["c"]], p["q"], p["z"]
        )
    ),
    lambda p: qpoch(
        p["q"] ** float(-p["n"]) * p["b"] * p["z"] / p["c"], p["q"], p["n"]
    )
    * eval_phi(
        SeriesSpec(
            [p["q"] ** float(-p["n"]), p["c"] / p["b"], 0],
            [p["c"], p["c"] * p["q"] / (p["b"] * p["z"])],
            p["q"],
            p["q"],
        )
    ),
    lambda rng: _draw(rng, _sample_jackson_3phi2),
    "EXACT_TERMINATING",
    "Jackson's terminating 2phi1 to 3phi2 transformation",
)


def _sample_three_term(rng):
    q = _q(rng)
    a, b, c = _s(rng, 0.3, 0.9), _s(rng, 0.3, 0.9), _s(rng, 0.3, 0.9)
    z = _s(rng, 0.3, 0.9)
    if not abs(c * q / (a * b)) < abs(z) < 1.0:
        return None
    if abs(c * q / (a * b * z)) >= 0.9:
        return None
    if not _lower_ok([c, q * q / c, a * q / b], q):
        return None
    for x in (c / q, a * q / c, q / b, b * z / c, c * q / (b * z)):
        if abs(x - 1.0) < 0.02:
            return None
    p = {"q": q, "a": a, "b": b, "c": c, "z": z}
    # both left-hand series and their mutual cancellation must stay tame
    if _phi_cond([a, b], [c], q, z) > 1e4:
        return None
    if _phi_cond([a * q / c, b * q / c], [q * q / c], q, z) > 1e4:
        return None
    lhs = _three_term_lhs(p)
    t1 = eval_phi(SeriesSpec([a, b], [c], q, z))
    if abs(t1) + abs(lhs - t1) > 1e3 * max(1.0, abs(lhs)):
        return None
    return p


def _three_term_lhs(p):
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    coeff = _pinf(
        [a, q / c, c / b, b * z / q, q * q / (b * z)], q
    ) / _pinf([c / q, a * q / c, q / b, b * z / c, c * q / (b * z)], q)
    return eval_phi(SeriesSpec([a, b], [c], q, z)) + coeff * eval_phi(
        SeriesSpec([a * q / c, b * q / c], [q * q / c], q, z)
    )


def _three_term_rhs(p):
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    arg = c * q / (a * b * z)
    coeff = _pinf(
        [a * b * z / c, q / c, a * q / b, arg], q
    ) / _pinf([b * z / c, q / b, a * q / c, c * q / (b * z)], q)
    return coeff * eval_phi(SeriesSpec([a, a * q / c], [a * q / b], q, arg))


_add(
    "three_term_2phi1",
    _three_term_lhs,
    _three_term_rhs,
    lambda rng: _draw(rng, _sample_three_term),
    "PRODUCT_SERIES",
    "three-term relation connecting 2phi1 at z and at cq/(abz)",
)


def _sample_symmetric_connection(rng):
    q = _q(rng)
    a, b, c = _s(rng, 0.3, 0.9), _s(rng, 0.3, 0.9), _s(rng, 0.3, 0.9)
    z = _s(rng, 0.3, 0.9)
    if abs(q * c / (a * b * z)) >= 0.85 or abs(z) >= 1.0:
        return None
    if not _lower_ok([c, q * a / b, q * b / a], q):
        return None
    # the two right-hand terms grow like 1/(b/a;q)_oo and cancel, so
    # keep the parameter pair well separated
    if abs(b / a - 1.0) < 0.05 or abs(a / b - 1.0) < 0.05:
        return None
    arg = q * c / (a * b * z)
    if _phi_cond([a, b], [c], q, z) > 1e4:
        return None
    if _phi_cond([a, q * a / c], [q * a / b], q, arg) > 1e4:
        return None
    if _phi_cond([b, q * b / c], [q * b / a], q, arg) > 1e4:
        return None
    p = {"q": q, "a": a, "b": b, "c": c, "z": z}
    t1 = _symmetric_connection_term(p, a, b)
    t2 = _symmetric_connection_term(p, b, a)
    if abs(t1) + abs(t2) > 1e3 * max(1.0, abs(t1 + t2)):
        return None
    return p


def _symmetric_connection_lhs(p):
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    return _pinf([z, q / z], q) * eval_phi(SeriesSpec([a, b], [c], q, z))


def _symmetric_connection_term(p, aa, bb):
    q, a, b, c, z = p["q"], p["a"], p["b"], p["c"], p["z"]
    arg = q * c / (a * b * z)
    return (
        _pinf([aa * z, q / (aa * z)], q)
        * _pinf([c / aa, bb], q)
        / _pinf([c, bb / aa], q)
        * eval_phi(SeriesSpec([aa, q * aa / c], [q * aa / bb], q, arg))
    )


def _symmetric_connection_rhs(p):
    return _symmetric_connection_term(p, p["a"], p["b"]) + _symmetric_connection_term(
        p, p["b"], p["a"]
    )


_add(
    "symmetric_connection",
    _symmetric_connection_lhs,
    _symmetric_connection_rhs,
    lambda rng: _draw(rng, _sample_symmetric_connection),
    "PRODUCT_SERIES",
    "symmetrized two-term connection between z and qc/(abz)",
)


def _sample_nonterm_gauss(rng):
    q = _q(rng)
    a, b, c = _s(rng), _s(rng), _s(rng)
    if not _lower_ok([c, q * q / c], q):
        return None
    if abs(c / q - 1.0) < 1e-3:
        return None
    # the two left-hand series can cancel catastrophically; bound the
    # first one directly so the float sum keeps absolute accuracy
    if abs(eval_phi(SeriesSpec([a, b], [c], q, q))) > 1e3:
        return None
    return {"q": q, "a": a, "b": b, "c": c}


_add(
    "nonterminating_q_gauss",
    lambda p: eval_phi(SeriesSpec([p["a"], p["b"]], [p["c"]], p["q"], p["q"]))
    + _pinf([p["a"], p["b"], p["q"] / p["c"]], p["q"])
    / _pinf(
        [
            p["a"] * p["q"] / p["c"],
            p["b"] * p["q"] / p["c"],
            p["c"] / p["q"],
        ],
        p["q"],
    )
    * eval_phi(
        SeriesSpec(
            [p["a"] * p["q"] / p["c"], p["b"] * p["q"] / p["c"]],
            [p["q"] ** 2 / p["c"]],
            p["q"],
            p["q"],
        )
    ),
    lambda p: _pinf([p["a"] * p["b"] * p["q"] / p["c"], p["q"] / p["c"]], p["q"])
    / _pinf([p["a"] * p["q"] / p["c"], p["b"] * p["q"] / p["c"]], p["q"]),
    lambda rng: _draw(rng, _sample_nonterm_gauss),
    "PRODUCT_SERIES",
    "nonterminating q-Gauss two-term evaluation",
)


def _sample_gauss_integral(rng):
    q = _q(rng)
    a, b = _s(rng), _s(rng)
    c = rng.uniform(q + 0.05, 2.0)
    if not _lower_ok([a * q / c, b * q / c], q):
        return None
    return {"q": q, "a": a, "b": b, "c": c}


def _gauss_integral_lhs(p):
    q, a, b, c = p["q"], p["a"], p["b"], p["c"]

    def f(t):
        return _pinf([c * t, q * t], q) / _pinf([a * t, b * t], q)

    return qintegral_0a(f, 1.0, q) - qintegral_0a(f, q / c, q)


_add(
    "q_gauss_integral_form",
    _gauss_integral_lhs,
    lambda p: (1.0 - p["q"])
    * _pinf(
        [p["a"] * p["b"] * p["q"] / p["c"], p["q"] / p["c"], p["c"], p["q"]],
        p["q"],
    )
    / _pinf(
        [p["a"] * p["q"] / p["c"], p["b"] * p["q"] / p["c"], p["a"], p["b"]],
        p["q"],
    ),
    lambda rng: _draw(rng, _sample_gauss_integral),
    "PRODUCT_SERIES",
    "Andrews-Askey q-integral evaluation",
)


def _sample_1psi1(rng):
    q = _q(rng)
    b, c, z = _s(rng, 0.3, 0.9), _s(rng, 0.1, 0.9), _s(rng, 0.3, 0.9)
    if not abs(c / b) < abs(z) < 1.0:
        return None
    if abs(c / (b * z) - 1.0) < 1e-3 or abs(q / (b * z) - 1.0) < 1e-3:
        return None
    if _psi_cond([b], [c], q, z) > 1e4:
        return None
    return {"q": q, "b": b, "c": c, "z": z}


_add(
    "ramanujan_1psi1",
    lambda p: eval_psi(SeriesSpec([p["b"]], [p["c"]], p["q"], p["z"])),
    lambda p: _pinf(
        [p["q"], p["c"] / p["b"], p["b"] * p["z"], p["q"] / (p["b"] * p["z"])],
        p["q"],
    )
    / _pinf(
        [p["c"], p["q"] / p["b"], p["z"], p["c"] / (p["b"] * p["z"])], p["q"]
    ),
    lambda rng: _draw(rng, _sample_1psi1),
    "PRODUCT_SERIES",
    "Ramanujan's bilateral 1psi1 summation",
)


def _sample_0psi1(rng):
    q = _q(rng)
    c, z = _s(rng, 0.1, 0.6), _s(rng, 0.3, 0.9)
    if abs(z) <= abs(c) * 1.1:
        return None
    if abs(c / z - 1.0) < 1e-3:
        return None
    if _psi_cond([], [c], q, z) > 1e4:
        return None
    return {"q": q, "c": c, "z": z}


_add(
    "bilateral_0psi1",
    lambda p: eval_psi(SeriesSpec([], [p["c"]], p["q"], p["z"])),
    lambda p: _pinf([p["q"], p["z"], p["q"] / p["z"]], p["q"])
    / _pinf([p["c"], p["c"] / p["z"]], p["q"]),
    lambda rng: _draw(rng, _sample_0psi1),
    "PRODUCT_SERIES",
    "bilateral 0psi1 summation",
)

_add(
    "jacobi_triple_product",
    lambda p: eval_psi(SeriesSpec([], [0], p["q"], p["z"])),
    lambda p: _pinf([p["q"], p["z"], p["q"] / p["z"]], p["q"]),
    lambda rng: {"q": _q(rng), "z": _s(rng, 0.2, 2.0)},
    "PRODUCT_SERIES",
    "Jacobi triple product identity",
)


def _sample_saalschutz(rng):
    q = _q(rng)
    n = rng.randrange(0, 11)
    if n > _nmax(q):
        return None
    a, b, c = _s(rng), _s(rng), _s(rng)
    other = a * b * q ** float(1 - n) / c
    if not _lower_ok([c, other], q):
        return None
    if _phi_cond([a, b, q ** float(-n)], [c, other], q, q) > 1e3:
        return None
    return {"q": q, "n": n, "a": a, "b": b, "c": c}


_add(
    "q_saalschutz",
    lambda p: eval_phi(
        SeriesSpec(
            [p["a"], p["b"], p["q"] ** float(-p["n"])],
            [
                p["c"],
                p["a"] * p["b"] * p["q"] ** float(1 - p["n"]) / p["c"],
            ],
            p["q"],
            p["q"],
        )
    ),
    lambda p: qpoch_list([p["c"] / p["a"], p["c"] / p["b"]], p["q"], p["n"])
    / qpoch_list([p["c"], p["c"] / (p["a"] * p["b"])], p["q"], p["n"]),
    lambda rng: _draw(rng, _sample_saalschutz),
    "EXACT_TERMINATING",
    "q-Saalschutz summation; Gasper & Rahman (1990), Eq. (1.7.2)",
)


def _sample_watson(rng, jackson=False):
    q = _q(rng)
    n = rng.randrange(0, 9)
    if n > _nmax(q):
        return None
    a = rng.uniform(0.2, 0.9)
    b, c, d = _s(rng, 0.2, 0.9), _s(rng, 0.2, 0.9), _s(rng, 0.2, 0.9)
    if jackson:
        e = a * a * q ** float(n + 1) / (b * c * d)
    else:
        e = _s(rng, 0.2, 0.9)
    s = math.sqrt(a)
    lowers = [
        a * q / b,
        a * q / c,
        a * q / d,
        a * q / e,
        a * q ** float(n + 1),
        s,
        -s,
    ]
    if not _lower_ok(lowers, q):
        return None
    if not jackson and not _lower_ok([d * e * q ** float(-n) / a], q):
        return None
    qn = q ** float(-n)
    if (
        _phi_cond(
            [a, q * s, -q * s, b, c, d, e, qn],
            [s, -s, a * q / b, a * q / c, a * q / d, a * q / e, a / qn * q],
            q,
            a * a * q ** float(2 + n) / (b * c * d * e),
        )
        > 1e3
    ):
        return None
    if not jackson and (
        _phi_cond(
            [qn, d, e, a * q / (b * c)],
            [a * q / b, a * q / c, d * e * qn / a],
            q,
            q,
        )
        > 1e3
    ):
        return None
    return {"q": q, "n": n, "a": a, "b": b, "c": c, "d": d, "e": e}


def _phi87(p):
    q, n, a, b, c, d, e = (
        p["q"], p["n"], p["a"], p["b"], p["c"], p["d"], p["e"],
    )
    s = math.sqrt(a)
    return eval_phi(
        SeriesSpec(
            [a, q * s, -q * s, b, c, d, e, q ** float(-n)],
            [s, -s, a * q / b, a * q / c, a * q / d, a * q / e,
             a * q ** float(n + 1)],
            q,
            a * a * q ** float(2 + n) / (b * c * d * e),
        )
    )


def _watson_rhs(p):
    q, n, a, b, c, d, e = (
        p["q"], p["n"], p["a"], p["b"], p["c"], p["d"], p["e"],
    )
    pref = qpoch_list([a * q, a * q / (d * e)], q, n) / qpoch_list(
        [a * q / d, a * q / e], q, n
    )
    return pref * eval_phi(
        SeriesSpec(
            [q ** float(-n), d, e, a * q / (b * c)],
            [a * q / b, a * q / c, d * e * q ** float(-n) / a],
            q,
            q,
        )
    )


_add(
    "watson_transform",
    _phi87,
    _watson_rhs,
    lambda rng: _draw(rng, _sample_watson),
    "EXACT_TERMINATING",
    "Watson's 8phi7 to 4phi3 transformation; Gasper & Rahman (1990), Sec. 2.5",
)

_add(
    "jackson_8phi7_summation",
    _phi87,
    lambda p: qpoch_list(
        [
            p["a"] * p["q"],
            p["a"] * p["q"] / (p["b"] * p["c"]),
            p["a"] * p["q"] / (p["b"] * p["d"]),
            p["a"] * p["q"] / (p["c"] * p["d"]),
        ],
        p["q"],
        p["n"],
    )
    / qpoch_list(
        [
            p["a"] * p["q"] / p["b"],
            p["a"] * p["q"] / p["c"],
            p["a"] * p["q"] / p["d"],
            p["a"] * p["q"] / (p["b"] * p["c"] * p["d"]),
        ],
        p["q"],
        p["n"],
    ),
    lambda rng: _draw(rng, lambda r: _sample_watson(r, jackson=True)),
    "EXACT_TERMINATING",
    "Jackson's terminating 8phi7 summation; Gasper & Rahman (1990), Sec. 2.6",
)

_add(
    "rogers_ramanujan_1",
    lambda p: eval_phi(SeriesSpec([], [0], p["q"], p["q"])),
    lambda p: _pinf(
        [p["q"] ** 2, p["q"] ** 3, p["q"] ** 5], p["q"] ** 5
    )
    / qpoch(p["q"], p["q"], INFINITY),
    lambda rng: {"q": _q(rng)},
    "PRODUCT_SERIES",
    "first Rogers-Ramanujan identity",
)

_add(
    "rogers_ramanujan_2",
    lambda p: eval_phi(SeriesSpec([], [0], p["q"], p["q"] ** 2)),
    lambda p: _pinf([p["q"], p["q"] ** 4, p["q"] ** 5], p["q"] ** 5)
    / qpoch(p["q"], p["q"], INFINITY),
    lambda rng: {"q": _q(rng)},
    "PRODUCT_SERIES",
    "second Rogers-Ramanujan identity",
)

# --- exercises --------------------------------------------------------------

_add(
    "qpoch_inversion",
    lambda p: qpoch(p["a"], p["q"], p["n"]),
    lambda p: (-p["a"]) ** p["n"]
    * p["q"] ** (p["n"] * (p["n"] - 1) / 2.0)
    * qpoch(p["q"] ** float(1 - p["n"]) / p["a"], p["q"], p["n"]),
    lambda rng: {"q": _q(rng), "a": _s(rng, 0.2, 2.0), "n": rng.randrange(0, 13)},
    "EXACT_TERMINATING",
    "reversal of a finite q-shifted factorial",
)


def _base_doubling_lhs(p):
    q, a, n = p["q"], p["a"], p["n"]
    return (
        qpoch(a, q, 2 * n),
        qpoch(a * a, q * q, n),
        qpoch(a, q, INFINITY),
    )


def _base_doubling_rhs(p):
    q, a, n = p["q"], p["a"], p["n"]
    s = cmath.sqrt(a)
    sq = cmath.sqrt(a * q)
    return (
        qpoch(a, q * q, n) * qpoch(a * q, q * q, n),
        qpoch(a, q, n) * qpoch(-a, q, n),
        _pinf([s, -s, sq, -sq], q),
    )


_add(
    "qpoch_base_doubling",
    _base_doubling_lhs,
    _base_doubling_rhs,
    lambda rng: {"q": _q(rng), "a": _s(rng), "n": rng.randrange(0, 9)},
    "PRODUCT_SERIES",
    "base-doubling and square-root factorizations of q-shifted factorials",
)

_add(
    "euler_odd_distinct",
    lambda p: qpoch(-p["q"], p["q"], INFINITY)
    * qpoch(p["q"], p["q"] ** 2, INFINITY),
    lambda p: 1.0 + 0.0j,
    lambda rng: {"q": _q(rng)},
    "PRODUCT_SERIES",
    "Euler's odd-distinct partition product identity",
)


def _biorthogonality_lhs(p):
    q, n, m = p["q"], p["n"], p["m"]
    total = 0.0 + 0.0j
    for l in range(m - 2, n + 3):
        total += (
            (-1.0) ** (l - m)
            * q ** ((l - m) * (l - m - 1) / 2.0)
            * gamma_q_reciprocal(n - l + 1.0, q)
            * gamma_q_reciprocal(l - m + 1.0, q)
        )
    return total


_add(
    "q_exp_biorthogonality",
    _biorthogonality_lhs,
    lambda p: 1.0 if p["n"] == p["m"] else 0.0,
    lambda rng: {"q": _q(rng), "n": rng.randrange(0, 6), "m": rng.randrange(0, 6)},
    "PRODUCT_SERIES",
    "biorthogonality of the two q-exponentials",
)


def _qpoch_convolution_rhs(p):
    q, a, b, n = p["q"], p["a"], p["b"], p["n"]
    total = 0.0 + 0.0j
    for k in range(n + 1):
        total += (
            qbinomial(n, k, q)
            * b**k
            * qpoch(a, q, k)
            * qpoch(b, q, n - k)
        )
    return total


def _sample_qpoch_convolution(rng):
    q = _q(rng)
    a, b = _s(rng, 0.2, 1.5), _s(rng, 0.2, 1.5)
    n = rng.randrange(0, 11)
    p = {"q": q, "a": a, "b": b, "n": n}
    tsum = sum(
        abs(qbinomial(n, k, q) * b**k * qpoch(a, q, k) * qpoch(b, q, n - k))
        for k in range(n + 1)
    )
    if tsum > 1e3 * max(1.0, abs(qpoch(a * b, q, n))):
        return None
    return p


_add(
    "qpoch_convolution",
    lambda p: qpoch(p["a"] * p["b"], p["q"], p["n"]),
    _qpoch_convolution_rhs,
    lambda rng: _draw(rng, _sample_qpoch_convolution),
    "EXACT_TERMINATING",
    "q-binomial convolution of shifted factorials",
)

# --- partition identities (exact integer coefficient streams) ---------------

_PARTITION_ORDER = 40


def _partition_sum_coeffs(m, half_square, order):
    """Coefficients of sum_k q^{k(k-1)/2 * [half_square]} q^{mk}/(q;q)_k."""
    out = [0] * (order + 1)
    k = 0
    while True:
        shift = m * k + (k * (k - 1) // 2 if half_square else 0)
        if shift > order:
            break
        inv = _ipoly_inv(_qq_pochhammer_poly(k, order - shift), order - shift)
        for i, c in enumerate(inv):
            out[shift + i] += c
        k += 1
    return out


_add(
    "partition_series_all",
    lambda p: tuple(_euler_inv_series(1, _PARTITION_ORDER))
    + tuple(_partition_sum_coeffs(1, False, _PARTITION_ORDER)),
    lambda p: tuple(partition_count(n) for n in range(_PARTITION_ORDER + 1)) * 2,
    lambda rng: {},
    "EXACT_TERMINATING",
    "partition generating function, two expansions, integer-exact",
)

_add(
    "partition_series_min_part",
    lambda p: tuple(_partition_sum_coeffs(p["m"], False, _PARTITION_ORDER)),
    lambda p: tuple(_euler_inv_series(p["m"], _PARTITION_ORDER)),
    lambda rng: {"m": rng.randrange(2, 5)},
    "EXACT_TERMINATING",
    "partitions with all parts >= m, integer-exact",
)


def _euler_plus_int_series(m, order):
    # coefficients of (-q^m;q)_oo
    prod = [1] + [0] * order
    for j in range(m, order + 1):
        prod = _ipoly_mul(prod, [1] + [0] * (j - 1) + [1], order)
    return prod


_add(
    "partition_series_distinct",
    lambda p: tuple(_partition_sum_coeffs(p["m"], True, _PARTITION_ORDER)),
    lambda p: tuple(_euler_plus_int_series(p["m"], _PARTITION_ORDER)),
    lambda rng: {"m": rng.randrange(1, 5)},
    "EXACT_TERMINATING",
    "distinct-part partitions with parts >= m, integer-exact",
)

# --- classical generating functions (coefficient streams) -------------------

_GF_ORDER = 12


def _gf_hermite_lhs(p):
    x = p["x"]
    return tuple(
        classical_eval("hermite", n, x) / math.factorial(n)
        for n in range(_GF_ORDER + 1)
    )


def _gf_hermite_rhs(p):
    x = p["x"]
    return tuple(_sexp([0.0, 2.0 * x, -1.0], _GF_ORDER))


_add(
    "gen_fn_hermite",
    _gf_hermite_lhs,
    _gf_hermite_rhs,
    lambda rng: {"x": rng.uniform(-2.0, 2.0)},
    "EXACT_TERMINATING",
    "Hermite exponential generating function",
)


def _gf_laguerre_lhs(p):
    return tuple(
        classical_eval("laguerre", n, p["x"], alpha=p["alpha"])
        for n in range(_GF_ORDER + 1)
    )


def _gf_laguerre_rhs(p):
    x, alpha = p["x"], p["alpha"]
    pow_part = _spow([1.0, -1.0], -alpha - 1.0, _GF_ORDER)
    t_over = [0.0] + [1.0] * _GF_ORDER  # t/(1-t)
    exp_part = _sexp([-x * c for c in t_over], _GF_ORDER)
    return tuple(_smul(pow_part, exp_part, _GF_ORDER))


_add(
    "gen_fn_laguerre",
    _gf_laguerre_lhs,
    _gf_laguerre_rhs,
    lambda rng: {"x": rng.uniform(-2.0, 2.0), "alpha": rng.uniform(-0.5, 2.0)},
    "EXACT_TERMINATING",
    "Laguerre generating function",
)


def _gf_jacobi_lhs(p):
    return tuple(
        classical_eval("jacobi", n, p["x"], alpha=p["alpha"], beta=p["beta"])
        for n in range(_GF_ORDER + 1)
    )


def _gf_jacobi_rhs(p):
    x, alpha, beta = p["x"], p["alpha"], p["beta"]
    big_r = _spow([1.0, -2.0 * x, 1.0], 0.5, _GF_ORDER)
    inv_r = _spow(big_r, -1.0, _GF_ORDER)
    a_ser = [big_r[0] + 1.0, big_r[1] - 1.0] + list(big_r[2:])
    b_ser = [big_r[0] + 1.0, big_r[1] + 1.0] + list(big_r[2:])
    out = _smul(
        inv_r,
        _smul(
            _spow(a_ser, -alpha, _GF_ORDER),
            _spow(b_ser, -beta, _GF_ORDER),
            _GF_ORDER,
        ),
        _GF_ORDER,
    )
    scale = 2.0 ** (alpha + beta)
    return tuple(scale * c for c in out)


_add(
    "gen_fn_jacobi",
    _gf_jacobi_lhs,
    _gf_jacobi_rhs,
    lambda rng: {
        "x": rng.uniform(-0.9, 0.9),
        "alpha": rng.uniform(-0.5, 2.0),
        "beta": rng.uniform(-0.5, 2.0),
    },
    "EXACT_TERMINATING",
    "Jacobi generating function",
)

_add(
    "charlier_recurrence",
    lambda p: p["x"]
    * classical_eval("charlier", p["n"], p["x"], a=p["a"]),
    lambda p: -p["a"] * classical_eval("charlier", p["n"] + 1, p["x"], a=p["a"])
    + (p["n"] + p["a"]) * classical_eval("charlier", p["n"], p["x"], a=p["a"])
    - p["n"] * classical_eval("charlier", p["n"] - 1, p["x"], a=p["a"]),
    lambda rng: {
        "n": rng.randrange(1, 9),
        "x": rng.uniform(-3.0, 3.0),
        "a": rng.uniform(0.5, 3.0),
    },
    "EXACT_TERMINATING",
    "Charlier three term recurrence",
)


def _asc_genfn_lhs(p):
    q, c, d, theta = p["q"], p["c"], p["d"], p["theta"]
    z1 = cmath.exp(1j * theta)
    num = _smul(
        _euler_plus_series(c, q, _GF_ORDER),
        _euler_plus_series(d, q, _GF_ORDER),
        _GF_ORDER,
    )
    den = _smul(
        _euler_minus_series(z1, q, _GF_ORDER),
        _euler_minus_series(1.0 / z1, q, _GF_ORDER),
        _GF_ORDER,
    )
    return tuple(_smul(num, den, _GF_ORDER))


def _asc_genfn_rhs(p):
    q, c, d, theta = p["q"], p["c"], p["d"], p["theta"]
    x = math.cos(theta)
    aw = AWParams(0, 0, c, d, q)
    # recurrence evaluation: the series form loses digits past degree 7
    return tuple(
        aw_poly_by_recurrence(m, x, aw) / qpoch(q, q, m)
        for m in range(_GF_ORDER + 1)
    )


_add(
    "alsalam_chihara_genfn",
    _asc_genfn_lhs,
    _asc_genfn_rhs,
    lambda rng: {
        # q capped: the degree-12 coefficient stream divides by (q;q)_12,
        # which loses digits as q approaches 1
        "q": min(_q(rng), 0.78),
        "c": _s(rng, 0.2, 0.8),
        "d": _s(rng, 0.2, 0.8),
        "theta": rng.uniform(0.2, 3.0),
    },
    "PRODUCT_SERIES",
    "Al-Salam-Chihara generating function, coefficient stream",
)


def _aw_kernel_lhs(p):
    q, a, b, c, d, theta, n = (
        p["q"], p["a"], p["b"], p["c"], p["d"], p["theta"], p["n"],
    )
    z1 = cmath.exp(1j * theta)
    aw = AWParams(a, b, c, d, q)
    pref = a**n / qpoch_list([a * b, a * c, a * d], q, n)
    kernel = _pinf([a * c, a * d], q) / _pinf([a * z1, a / z1], q)
    return pref * aw_poly(n, math.cos(theta), aw) * kernel


def _aw_kernel_rhs(p):
    q, a, b, c, d, theta, n = (
        p["q"], p["a"], p["b"], p["c"], p["d"], p["theta"], p["n"],
    )
    x = math.cos(theta)
    aw0 = AWParams(0, 0, c, d, q)
    total = 0.0 + 0.0j
    quiet = 0
    for m in range(400):
        term = (
            little_qjacobi(n, q**m, a * b / q, c * d / q, q)
            * a**m
            * aw_poly(m, x, aw0)
            / qpoch(q, q, m)
        )
        total += term
        if abs(term) < 1e-15 * max(1.0, abs(total)):
            quiet += 1
            if quiet >= 5:
                break
        else:
            quiet = 0
    return total


_add(
    "aw_kernel_transform",
    _aw_kernel_lhs,
    _aw_kernel_rhs,
    lambda rng: {
        "q": rng.uniform(0.2, 0.8),
        "a": rng.uniform(0.2, 0.7),
        "b": _s(rng, 0.2, 0.7),
        "c": _s(rng, 0.2, 0.7),
        "d": _s(rng, 0.2, 0.7),
        "theta": rng.uniform(0.2, 3.0),
        "n": rng.randrange(0, 5),
    },
    "LIMIT_CHAIN",
    "kernel expanding Askey-Wilson polynomials in the two-parameter subfamily",
)


# ---------------------------------------------------------------------------
# public API


def list_identities():
    """Sorted identity ids."""
    return sorted(_REGISTRY)


def get_identity(identity_id):
    if identity_id not in _REGISTRY:
        raise DomainError(f"unknown identity {identity_id!r}")
    return _REGISTRY[identity_id]


def verify(identity_id, samples=25, seed=0, tolerance=None):
    """Sample the identity and compare both sides; deterministic in seed.

    tolerance, when given, overrides the tolerance-class default.
    """
    rec = get_identity(identity_id)
    rng = random.Random(f"{identity_id}|{seed}")
    tol = TOLERANCES[rec.tolerance_class] if tolerance is None else tolerance
    report = VerificationReport(
        id=identity_id, samples=samples, seed=seed, tolerance=tol
    )
    for _ in range(samples):
        params = rec.sampler(rng)
        lhs = rec.lhs(params)
        rhs = rec.rhs(params)
        err = _rel_err(lhs, rhs)
        report.max_rel_error = max(report.max_rel_error, err)
        if err > tol:
            report.failures.append(
                {
                    "params": _jsonable(params),
                    "lhs": _jsonable(lhs),
                    "rhs": _jsonable(rhs),
                }
            )
    return report


def verify_all(samples=25, seed=0, tolerance_overrides=None):
    """Verify every identity; returns the list of reports."""
    overrides = tolerance_overrides or {}
    return [
        verify(i, samples, seed, tolerance=overrides.get(i))
        for i in list_identities()
    ]
