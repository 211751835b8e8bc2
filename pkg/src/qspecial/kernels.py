"""Kernel backend selection.

Imports the compiled extension when it was built, otherwise falls back to
the pure-Python twins.  Both expose the same functions with identical
semantics; ``BACKEND`` names the active one ("c" or "python").
"""

try:
    from qspecial._kernels import (  # type: ignore[attr-defined]
        BACKEND,
        phi_sum,
        qpoch_finite,
        qpoch_infinite,
        qpoch_negative,
    )
except ImportError:
    from qspecial._kernels_py import (
        BACKEND,
        phi_sum,
        qpoch_finite,
        qpoch_infinite,
        qpoch_negative,
    )

__all__ = ["BACKEND", "qpoch_finite", "qpoch_negative", "qpoch_infinite", "phi_sum"]
