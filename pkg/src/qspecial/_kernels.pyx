# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Twin of ``_kernels_py``: identical call signatures, semantics, and
status codes (0 ok, 1 convergence budget exhausted, 2 zero denominator).
"""

BACKEND = "c"


def qpoch_finite(a, double q, long k):
    """Finite product prod_{j=0}^{k-1} (1 - a q^j) for k >= 0."""
    cdef double complex out = 1.0
    cdef double complex f = a
    cdef long j
    for j in range(k):
        out *= 1.0 - f
        f *= q
    return out


def qpoch_negative(a, double q, long k):
    """1 / prod_{j=1}^{k} (1 - a q^{-j}) for k >= 1; status 2 on zero factor."""
    cdef double complex den = 1.0
    cdef double complex f = a
    cdef long j
    for j in range(k):
        f /= q
        den *= 1.0 - f
    if den == 0:
        return 0j, 2
    return 1.0 / den, 0


def qpoch_infinite(a, double q, double tail_epsilon, long max_factors):
    """Truncated infinite product prod_{j>=0} (1 - a q^j).

    Stops once |a| q^j < tail_epsilon and the per-factor relative change
    stays below tail_epsilon for 3 consecutive factors.
    """
    cdef double complex out = 1.0
    cdef double complex f = a
    cdef double mag = abs(a)
    cdef int quiet = 0
    cdef long j
    for j in range(max_factors):
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


def phi_sum(upper, lower, double q, z, long sign_power, long n_terms,
            double tail_epsilon, long max_terms):
    """Sum the basic hypergeometric series by forward term-ratio recurrence.

    term_{k+1}/term_k = prod(1 - a_i q^k) / (prod(1 - b_j q^k)(1 - q^{k+1}))
                        * ((-1) q^k)^sign_power * z.

    n_terms >= 0 sums exactly k = 0..n_terms (terminating); n_terms < 0
    runs until 5 consecutive terms are below tail_epsilon relative to the
    running magnitude.  Returns (value, status).
    """
    cdef double complex total = 1.0
    cdef double complex term = 1.0
    cdef double complex zz = z
    cdef double scale = 1.0
    cdef double qk = 1.0
    cdef int quiet = 0
    cdef long k = 0
    cdef long i, nu, nl
    cdef double complex num, den, sgn
    cdef double t
    cdef double complex[16] ubuf
    cdef double complex[16] lbuf
    nu = len(upper)
    nl = len(lower)
    if nu > 16 or nl > 16:
        raise ValueError("too many series parameters")
    for i in range(nu):
        ubuf[i] = upper[i]
    for i in range(nl):
        lbuf[i] = lower[i]
    while True:
        if n_terms >= 0:
            if k >= n_terms:
                return total, 0
        elif k >= max_terms:
            return total, 1
        num = zz
        for i in range(nu):
            num *= 1.0 - ubuf[i] * qk
        den = 1.0 - q * qk
        for i in range(nl):
            den *= 1.0 - lbuf[i] * qk
        if den == 0:
            return total, 2
        if sign_power:
            sgn = -qk
            num *= sgn ** sign_power
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
