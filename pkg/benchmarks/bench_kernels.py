"""Benchmark the compiled kernels against the pure-Python twins.

Usage: python3 benchmarks/bench_kernels.py [repeats]

Times the three hot loops (infinite q-Pochhammer products, terminating
and nonterminating series sums) on a fixed workload with both backends
and prints the speedup.
"""

import importlib.util
import random
import sys
import time

from qspecial import _kernels_py as py

if importlib.util.find_spec("qspecial._kernels") is None:
    sys.exit("compiled kernels not built; run pip install -e . first")

from qspecial import _kernels as cy


def workload_qpoch_infinite(mod, cases):
    acc = 0.0
    for a, q in cases:
        v, _ = mod.qpoch_infinite(a, q, 1e-16, 10000)
        acc += abs(v)
    return acc


def workload_phi_nonterminating(mod, cases):
    acc = 0.0
    for upper, lower, q, z, sp in cases:
        v, _ = mod.phi_sum(upper, lower, q, z, sp, -1, 1e-16, 100000)
        acc += abs(v)
    return acc


def workload_phi_terminating(mod, cases):
    acc = 0.0
    for upper, lower, q, n in cases:
        v, _ = mod.phi_sum(upper, lower, q, 0.5, 0, n, 1e-16, 100000)
        acc += abs(v)
    return acc


def timeit(fn, mod, cases, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(mod, cases)
        best = min(best, time.perf_counter() - start)
    return best, value


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    rng = random.Random(0)

    poch_cases = [
        (complex(rng.uniform(-2, 2), rng.uniform(-1, 1)), rng.uniform(0.5, 0.97))
        for _ in range(2000)
    ]
    nonterm_cases = []
    for _ in range(500):
        q = rng.uniform(0.5, 0.9)
        nu = rng.randrange(0, 3)
        nl = rng.randrange(max(0, nu - 1), 3)
        nonterm_cases.append(
            (
                tuple(complex(rng.uniform(0.1, 0.9)) for _ in range(nu)),
                tuple(complex(rng.uniform(0.1, 0.9)) for _ in range(nl)),
                q,
                rng.uniform(0.1, 0.8),
                1 + nl - nu,
            )
        )
    term_cases = []
    for _ in range(500):
        q = rng.uniform(0.5, 0.9)
        n = rng.randrange(1, 12)
        term_cases.append(
            (
                (complex(q ** float(-n)), complex(rng.uniform(0.1, 0.9))),
                (complex(rng.uniform(0.1, 0.9)),),
                q,
                n,
            )
        )

    suites = [
        ("qpoch_infinite x2000", workload_qpoch_infinite, poch_cases),
        ("phi_sum nonterminating x500", workload_phi_nonterminating, nonterm_cases),
        ("phi_sum terminating x500", workload_phi_terminating, term_cases),
    ]
    print(f"{'workload':<30} {'python':>10} {'c':>10} {'speedup':>9}")
    for label, fn, cases in suites:
        t_py, v_py = timeit(fn, py, cases, repeats)
        t_cy, v_cy = timeit(fn, cy, cases, repeats)
        if abs(v_py - v_cy) > 1e-9 * max(1.0, abs(v_py)):
            sys.exit(f"{label}: backend results disagree ({v_py} vs {v_cy})")
        print(
            f"{label:<30} {t_py * 1e3:>8.2f}ms {t_cy * 1e3:>8.2f}ms "
            f"{t_py / t_cy:>8.1f}x"
        )


if __name__ == "__main__":
    main()
