"""Pure-Python twins of the compiled kernels.

Same call signatures and semantics as the Cython module ``_kernels``;
selected automatically when the extension is unavailable.  Status codes:
0 ok, 1 convergence budget exhausted, 2 zero denominator factor.
"""

import cmath

BACKEND = "python"


def qpoch_finite(a, q, k):
    """Finite product prod_{j=0}^{k-1} (1 - a q^j) for k >= 0."""
    out = 1.0 + 0.0j
    f = complex(a)
    for _ in range(k):
        out *= 1.0 - f
        f *= q
    return out


def qpoch_negative(a, q, k):
    """1 / prod_{j=1}^{k} (1 - a q^{-j}) for k >= 1; status 2 on zero factor."""
    den = 1.0 + 0.0j
    f = complex(a)
    for _ in range(k):
        f /= q
        den *= 1.0 - f
    if den == 0:
        return 0j, 2
    return 1.0 / den, 0


def qpoch_infinite(a, q, tail_epsilon, max_factors):
    """Truncated infinite product prod_{j>=0} (1 - a q^j).

    Stops once |a| q^j < tail_epsilon and the per-factor relative change
    stays below tail_epsilon for 3 consecutive factors.
    """
    out = 1.0 + 0.0j
    f = complex(a)
    mag = abs(a)
    quiet = 0
    for _ in range(max_factors):
        if mag < tail_epsilon:
            quiet += 1
            if quiet >= 3:
                return out, 0
        else:
            quiet = 0
        out *= 1.0 - f
        f *= q
        mag *= q
    return out, 1


def phi_sum(upper, lower, q, z, sign_power, n_terms, tail_epsilon, max_terms):
    """Sum the basic hypergeometric series by forward term-ratio recurrence.

    term_{k+1}/term_k = prod(1 - a_i q^k) / (prod(1 - b_j q^k)(1 - q^{k+1}))
                        * ((-1) q^k)^sign_power * z.

    n_terms >= 0 sums exactly k = 0..n_terms (terminating); n_terms < 0
    runs until 5 consecutive terms are below tail_epsilon relative to the
    running magnitude.  Returns (value, status).
    """
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    scale = 1.0
    qk = 1.0
    quiet = 0
    k = 0
    while True:
        if n_terms >= 0:
            if k >= n_terms:
                return total, 0
        elif k >= max_terms:
            return total, 1
        num = complex(z)
        for a in upper:
            num *= 1.0 - a * qk
        den = 1.0 - q * qk
        for b in lower:
            den *= 1.0 - b * qk
        if den == 0:
            return total, 2
        if sign_power:
            num *= (-qk) ** sign_power
        term = term * num / den
        total += term
        t = abs(term)
        if t > scale:
            scale = t
        if n_terms < 0:
            if t < tail_epsilon * scale:
                quiet += 1
                if quiet >= 5:
                    return total, 0
            else:
                quiet = 0
        qk *= q
        k += 1
