"""Jackson q-derivatives and q-integrals.

The backward q-derivative is (f(x) - f(qx)) / ((1-q)x); the forward one
is (f(x/q) - f(x)) / ((1-q)x).  The q-integral from 0 to a is the
geometric-mesh sum a(1-q) sum_{k>=0} f(a q^k) q^k.

Orientation note: qintegral_ab(f, a, b, q) is defined as
int_0^a - int_0^b, which is the NEGATIVE of the usual orientation.
The integration-by-parts residual below uses the usual orientation
(int_0^c - int_0^{-d}) internally, which is the one that makes the
boundary-term bookkeeping close.
"""

from qspecial.errors import ConvergenceError, DomainError
from qspecial.qcore import DEFAULT_POLICY, check_q


def qderiv_backward(f, x, q):
    """Backward q-derivative (f(x) - f(qx)) / ((1-q)x)."""
    q = check_q(q)
    if x == 0:
        raise DomainError("q-derivative undefined at x = 0")
    return (f(x) - f(q * x)) / ((1.0 - q) * x)


def qderiv_forward(f, x, q):
    """Forward q-derivative (f(x/q) - f(x)) / ((1-q)x)."""
    q = check_q(q)
    if x == 0:
        raise DomainError("q-derivative undefined at x = 0")
    return (f(x / q) - f(x)) / ((1.0 - q) * x)


def qintegral_0a(f, a, q, pol=DEFAULT_POLICY):
    """Jackson integral a(1-q) sum_{k>=0} f(a q^k) q^k.

    Valid for negative a as well.  Stops when 5 consecutive terms each
    contribute less than tail_epsilon of the running magnitude.
    """
    q = check_q(q)
    if a == 0:
        return 0.0 + 0.0j
    total = 0.0 + 0.0j
    scale = 0.0
    w = 1.0
    quiet = 0
    for _ in range(pol.max_terms):
        term = f(a * w) * w
        total += term
        t = abs(term)
        if t > scale:
            scale = t
        if t < pol.tail_epsilon * max(scale, 1e-300):
            quiet += 1
            if quiet >= 5:
                return a * (1.0 - q) * total
        else:
            quiet = 0
        w *= q
    raise ConvergenceError("q-integral tail not reached within max_terms")


def qintegral_ab(f, a, b, q, pol=DEFAULT_POLICY):
    """Two-endpoint q-integral with the convention int_a^b := int_0^a - int_0^b.

    Note this is the negative of the usual orientation; see module docstring.
    """
    return qintegral_0a(f, a, q, pol) - qintegral_0a(f, b, q, pol)


def qintegral_0inf(f, q, a=1.0, pol=DEFAULT_POLICY):
    """Bilateral q-integral a(1-q) sum_{k in Z} f(a q^k) q^k.

    The result is invariant under a -> a q^n.  Both tails are truncated
    independently.
    """
    q = check_q(q)
    if a == 0:
        raise DomainError("scale a must be nonzero")

    def one_sided(start_w, step):
        total = 0.0 + 0.0j
        scale = 0.0
        w = start_w
        quiet = 0
        for _ in range(pol.max_terms):
            term = f(a * w) * w
            total += term
            t = abs(term)
            if t > scale:
                scale = t
            if t < pol.tail_epsilon * max(scale, 1e-300):
                quiet += 1
                if quiet >= 5:
                    return total
            else:
                quiet = 0
            w *= step
        raise ConvergenceError("bilateral q-integral tail not reached")

    # k >= 0 runs toward zero, k < 0 runs toward infinity
    down = one_sided(1.0, q)
    up = one_sided(1.0 / q, 1.0 / q)
    return a * (1.0 - q) * (down + up)


def qintegration_by_parts_residual(f, g, c, d, q, pol=DEFAULT_POLICY):
    """Residual of q-integration by parts on [-d, c], c, d >= 0.

    Returns int (D_q^- f) g - [f(c)g(c/q) - f(-d)g(-d/q) - int f (D_q^+ g)]
    with both integrals in the usual orientation int_0^c - int_0^{-d}.
    Approximately zero for continuous f, g.
    """
    q = check_q(q)
    if c < 0 or d < 0:
        raise DomainError("c and d must be nonnegative")

    def natural(h):
        return qintegral_0a(h, c, q, pol) - qintegral_0a(h, -d, q, pol)

    lhs = natural(lambda x: qderiv_backward(f, x, q) * g(x))
    boundary = f(c) * g(c / q) - f(-d) * g(-d / q)
    rhs = boundary - natural(lambda x: f(x) * qderiv_forward(g, x, q))
    return lhs - rhs
