"""Basic and bilateral hypergeometric series.

r_phi_s(a_1..a_r; b_1..b_s; q, z)
    = sum_{k>=0} (a_1..a_r;q)_k / ((b_1..b_s;q)_k (q;q)_k)
      * ((-1)^k q^{k(k-1)/2})^{1+s-r} z^k

r_psi_s(a_1..a_r; b_1..b_s; q, z)
    = sum_{k in Z} (a_1..a_r;q)_k / (b_1..b_s;q)_k
      * ((-1)^k q^{k(k-1)/2})^{s-r} z^k

Terms are generated by the forward recurrence on the term ratio, which
is rational in q^k; per-term Pochhammers are never recomputed.
"""

import math
from dataclasses import dataclass, field

from qspecial import kernels
from qspecial.errors import ConvergenceError, DomainError
from qspecial.qcore import DEFAULT_POLICY, check_q, qpoch_list

_TERMINATION_RTOL = 1e-12
_MAX_TERMINATION_N = 10_000


@dataclass(frozen=True)
class SeriesSpec:
    """Descriptor of an (r,s) series: upper/lower parameter lists, base, argument."""

    upper: tuple
    lower: tuple
    q: float
    z: complex

    def __init__(self, upper, lower, q, z):
        object.__setattr__(self, "upper", tuple(complex(a) for a in upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in lower))
        object.__setattr__(self, "q", check_q(q))
        object.__setattr__(self, "z", complex(z))
        for b in self.lower:
            if b == 0:
                continue
            n = _as_negative_power(b, self.q)
            if n is not None and n <= 0:
                raise DomainError(
                    f"lower parameter {b} lies on the forbidden set 1, 1/q, 1/q^2, ..."
                )

    @property
    def r(self):
        return len(self.upper)

    @property
    def s(self):
        return len(self.lower)


@dataclass(frozen=True)
class ConvergenceClass:
    """Convergence classification: INFINITE, UNIT, ZERO, or TERMINATING(n)."""

    radius: str
    n: int | None = None

    def __repr__(self):
        if self.radius == "TERMINATING":
            return f"TERMINATING({self.n})"
        return self.radius


def _as_negative_power(a, q):
    """Return n >= 0 when a is numerically q^{-n}, else None."""
    if a == 0 or a.imag != 0 or a.real <= 0:
        return None
    x = a.real
    if x > 1.0 + 1e-15 or abs(x - 1.0) <= 1e-12:
        n = round(-math.log(x) / math.log(q))
        if 0 <= n <= _MAX_TERMINATION_N and abs(x - q**-n) <= _TERMINATION_RTOL * q**-n:
            return n
    return None


def classify(spec):
    """Classify by termination first, then by the ratio test on (r,s)."""
    best = None
    for a in spec.upper:
        n = _as_negative_power(a, spec.q)
        if n is not None and (best is None or n < best):
            best = n
    if best is not None:
        return ConvergenceClass("TERMINATING", best)
    if spec.r < spec.s + 1:
        return ConvergenceClass("INFINITE")
    if spec.r == spec.s + 1:
        return ConvergenceClass("UNIT")
    return ConvergenceClass("ZERO")


def eval_phi(spec, pol=DEFAULT_POLICY):
    """Evaluate the r_phi_s series.

    Terminating series are summed exactly through k = n; nonterminating
    ones are truncated by the tail policy.  UNIT class requires |z| < 1,
    ZERO class requires z = 0.
    """
    cls = classify(spec)
    sign_power = 1 + spec.s - spec.r
    if cls.radius == "TERMINATING":
        n_terms = cls.n
    else:
        if spec.z == 0:
            return 1.0 + 0.0j
        if cls.radius == "ZERO":
            raise DomainError("series has zero radius of convergence for z != 0")
        if cls.radius == "UNIT" and abs(spec.z) >= 1:
            raise DomainError(f"series requires |z| < 1, got |z| = {abs(spec.z)}")
        n_terms = -1
    value, status = kernels.phi_sum(
        spec.upper,
        spec.lower,
        spec.q,
        spec.z,
        sign_power,
        n_terms,
        pol.tail_epsilon,
        pol.max_terms,
    )
    if status == 1:
        raise ConvergenceError("phi series tail not reached within max_terms")
    if status == 2:
        raise DomainError("phi series hit a zero denominator factor")
    return value


def eval_psi(spec, pol=DEFAULT_POLICY):
    """Evaluate the bilateral r_psi_s series over k in Z.

    Convergence annulus: |b_1..b_s / (a_1..a_r)| < |z|, and |z| < 1 when
    s = r.  Upper parameters must be nonzero (a zero upper parameter
    kills all k < 0 terms; pass the parameter as lower 0 instead).
    Lower parameters may be 0.
    """
    q, z = spec.q, spec.z
    if any(a == 0 for a in spec.upper):
        raise DomainError("bilateral series requires nonzero upper parameters")
    if z == 0:
        raise DomainError("bilateral series undefined at z = 0")
    num = 1.0 + 0.0j
    for b in spec.lower:
        num *= b
    den = 1.0 + 0.0j
    for a in spec.upper:
        den *= a
    if abs(z) <= abs(num / den):
        raise DomainError("outside convergence annulus: need |b1..bs/(a1..ar)| < |z|")
    if spec.s == spec.r and abs(z) >= 1:
        raise DomainError("s = r bilateral series requires |z| < 1")
    sign_power = spec.s - spec.r

    def ratio(k):
        # t_{k+1} / t_k as a function of k (any sign)
        qk = q**k
        top = z
        for a in spec.upper:
            top *= 1.0 - a * qk
        bot = 1.0 + 0.0j
        for b in spec.lower:
            bot *= 1.0 - b * qk
        if sign_power:
            top *= (-qk) ** sign_power
        return top, bot

    total = 1.0 + 0.0j
    # upward k = 1, 2, ...
    term = 1.0 + 0.0j
    scale = 1.0
    quiet = 0
    for k in range(pol.max_terms):
        top, bot = ratio(k)
        if bot == 0:
            raise DomainError("bilateral series hit a zero denominator factor")
        term = term * top / bot
        total += term
        t = abs(term)
        scale = max(scale, t)
        if t < pol.tail_epsilon * scale:
            quiet += 1
            if quiet >= 5:
                break
        else:
            quiet = 0
    else:
        raise ConvergenceError("bilateral series upper tail not reached")
    # downward k = -1, -2, ...  The multiplier t_{-k}/t_{-k+1} is computed
    # in a factored form using w = q^k only: pulling q^{-k} out of every
    # (1 - c q^{-k}) factor avoids overflow when many terms are needed.
    nonzero_lower = [b for b in spec.lower if b != 0]
    excess = spec.s - len(nonzero_lower)
    term = 1.0 + 0.0j
    quiet = 0
    for k in range(1, pol.max_terms):
        w = q**k
        top = z
        for a in spec.upper:
            top *= a - w
        if top == 0:
            # a vanishing numerator factor kills this and all lower terms
            break
        bot = 1.0 + 0.0j
        for b in nonzero_lower:
            bot *= b - w
        if excess:
            bot *= (-w) ** excess
        term = term * bot / top
        total += term
        t = abs(term)
        scale = max(scale, t)
        if t < pol.tail_epsilon * scale:
            quiet += 1
            if quiet >= 5:
                break
        else:
            quiet = 0
    else:
        raise ConvergenceError("bilateral series lower tail not reached")
    return total


def reverse_terminating(spec):
    """Reverse the order of summation of a terminating (s+1)_phi_s series.

    The spec must have upper[0] = q^{-n} and all other parameters nonzero.
    Returns (reversed_spec, prefactor) with
    prefactor * eval_phi(reversed_spec) = eval_phi(spec).
    """
    cls = classify(spec)
    if cls.radius != "TERMINATING":
        raise DomainError("series is not terminating")
    if spec.r != spec.s + 1:
        raise DomainError("reversal implemented for (s+1)_phi_s shape only")
    n = _as_negative_power(spec.upper[0], spec.q)
    if n is None or n != cls.n:
        raise DomainError("upper[0] must be q^{-n} realizing the termination degree")
    if any(a == 0 for a in spec.upper[1:]) or any(b == 0 for b in spec.lower):
        raise DomainError("zero parameters are not supported in reversal")
    if spec.z == 0:
        raise DomainError("reversal requires z != 0")
    q, z = spec.q, spec.z
    rest = spec.upper[1:]
    prefactor = (
        (-1.0) ** n
        * q ** (-n * (n + 1) / 2)
        * qpoch_list(rest, q, n)
        / qpoch_list(spec.lower, q, n)
        * z**n
    )
    new_upper = [q ** float(-n)] + [q ** float(1 - n) / b for b in spec.lower]
    new_lower = [q ** float(1 - n) / a for a in rest]
    prod_b = 1.0 + 0.0j
    for b in spec.lower:
        prod_b *= b
    prod_a = 1.0 + 0.0j
    for a in rest:
        prod_a *= a
    new_z = q ** float(n + 1) * prod_b / (prod_a * z)
    return SeriesSpec(new_upper, new_lower, q, new_z), prefactor


@dataclass
class ConvergenceReport:
    """Step-by-step error record for a numerically checked limit."""

    label: str
    steps: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    tolerance: float = 1e-3

    @property
    def final_error(self):
        return self.errors[-1] if self.errors else math.inf

    @property
    def finally_decreasing(self):
        if len(self.errors) < 3:
            return False
        e = self.errors[-3:]
        return e[0] >= e[1] >= e[2]

    @property
    def passed(self):
        return self.final_error <= self.tolerance and self.finally_decreasing


def confluence_limit_check(spec, direction, magnitudes, pol=DEFAULT_POLICY):
    """Check the confluence limit sending upper[direction] -> oo with z/a scaling.

    Evaluates r_phi_s(..., a, ...; q, z/a) for a running through the given
    magnitudes and compares against the (r-1)_phi_s value at argument z.
    """
    if spec.r < 1:
        raise DomainError("need at least one upper parameter")
    kept = list(spec.upper)
    kept.pop(direction)
    limit_spec = SeriesSpec(kept, spec.lower, spec.q, spec.z)
    target = eval_phi(limit_spec, pol)
    report = ConvergenceReport(label="confluence", tolerance=1e-6)
    for mag in magnitudes:
        upper = list(spec.upper)
        upper[direction] = mag
        trial = SeriesSpec(upper, spec.lower, spec.q, spec.z / mag)
        value = eval_phi(trial, pol)
        err = abs(value - target) / max(abs(target), 1e-300)
        report.steps.append(mag)
        report.errors.append(err)
    return report
