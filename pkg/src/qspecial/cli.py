"""Command-line front end: evaluation, identity verification, Gram
reports, value tables, and limit diagnostics.

Exit codes: 0 all checks pass, 1 a numeric check failed, 2 usage error.
"""

import argparse
import json
import sys

from qspecial.askey_wilson import (
    AWParams,
    aw_gram_quadrature,
    aw_norm,
    aw_poly,
    q_racah_orthogonality,
)
from qspecial.errors import QSpecialError
from qspecial.identities import list_identities, verify
from qspecial.limits import list_paths, run_limit
from qspecial.qfunctions import (
    E_q,
    beta_q,
    e_q,
    gamma_q,
    hahn_exton_bessel,
    jackson_bessel_1,
    jackson_bessel_2,
    theta4,
)
from qspecial.qorthopoly import (
    BigQJacobiParams,
    FamilyParams,
    big_qjacobi_gram,
    big_qjacobi_norm,
    family_eval,
    family_orthogonality,
    little_qjacobi_gram,
    little_qjacobi_norm,
)
from qspecial.qseries import SeriesSpec, eval_phi, eval_psi

OFFDIAG_TOL = 1e-9
DIAG_TOL = 1e-8

EVAL_TARGETS = (
    "phi, psi, eq, Eq, gammaq, betaq, theta4, besselq1, besselq2, "
    "besselhe, family:<name>, aw"
)


class UsageError(Exception):
    """Malformed command line; maps to exit code 2."""


# ---------------------------------------------------------------------------
# formatting


def _fmt(x):
    """17 significant digits; drops a negligible imaginary part."""
    if isinstance(x, complex):
        if abs(x.imag) <= 1e-12 * (1.0 + abs(x.real)):
            x = x.real
        else:
            return "%.17g%+.17gj" % (x.real, x.imag)
    if isinstance(x, float):
        return "%.17g" % x
    return str(x)


def _jsonable(x):
    if isinstance(x, complex):
        if abs(x.imag) <= 1e-12 * (1.0 + abs(x.real)):
            return x.real
        return [x.real, x.imag]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


def _emit_rows(header, rows, fmt, out):
    """Write a uniform table in the selected format.

    rows are sequences matching header; numbers are rendered with _fmt.
    """
    if fmt == "json":
        payload = [
            {k: _jsonable(v) for k, v in zip(header, row)} for row in rows
        ]
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
    elif fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")
    else:
        widths = [
            max(len(h), *(len(_fmt(r[i])) for r in rows)) if rows else len(h)
            for i, h in enumerate(header)
        ]
        out.write(
            "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()
            + "\n"
        )
        for row in rows:
            out.write(
                "  ".join(
                    _fmt(v).ljust(w) for v, w in zip(row, widths)
                ).rstrip()
                + "\n"
            )


# ---------------------------------------------------------------------------
# parameter parsing


def _parse_kv(tokens):
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(
                f"malformed parameter {tok!r} (expected key=value)"
            )
        key, _, value = tok.partition("=")
        if not key:
            raise UsageError(f"malformed parameter {tok!r} (empty key)")
        params[key] = value
    return params


def _pop_float(params, key, default=None):
    if key not in params:
        if default is not None:
            return default
        raise UsageError(f"missing parameter {key!r}")
    raw = params.pop(key)
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"parameter {key!r} is not a number: {raw!r}")


def _pop_int(params, key):
    if key not in params:
        raise UsageError(f"missing parameter {key!r}")
    raw = params.pop(key)
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"parameter {key!r} is not an integer: {raw!r}")


def _pop_list(params, key):
    if key not in params:
        raise UsageError(f"missing parameter {key!r}")
    raw = params.pop(key)
    if raw == "":
        return []
    try:
        return [float(v) for v in raw.split(",")]
    except ValueError:
        raise UsageError(f"parameter {key!r} is not a number list: {raw!r}")


def _reject_extras(params):
    if params:
        key = sorted(params)[0]
        raise UsageError(f"unknown parameter {key!r}")


def _tolerance_overrides(pairs):
    overrides = {}
    for tok in pairs or []:
        if "=" not in tok:
            raise UsageError(
                f"malformed --tolerance {tok!r} (expected id=value)"
            )
        key, _, value = tok.partition("=")
        try:
            overrides[key] = float(value)
        except ValueError:
            raise UsageError(f"--tolerance value for {key!r} is not a number")
    return overrides


def _check_nodes(n):
    if n < 64 or n > 4096 or n & (n - 1):
        raise UsageError("--nodes must be a power of two between 64 and 4096")
    return n


# ---------------------------------------------------------------------------
# eval


def _eval_target(target, params):
    if target == "phi":
        upper = _pop_list(params, "upper")
        lower = _pop_list(params, "lower")
        q = _pop_float(params, "q")
        z = _pop_float(params, "z")
        _reject_extras(params)
        return eval_phi(SeriesSpec(upper, lower, q, z))
    if target == "psi":
        upper = _pop_list(params, "upper")
        lower = _pop_list(params, "lower")
        q = _pop_float(params, "q")
        z = _pop_float(params, "z")
        _reject_extras(params)
        return eval_psi(SeriesSpec(upper, lower, q, z))
    if target in ("eq", "Eq"):
        z = _pop_float(params, "z")
        q = _pop_float(params, "q")
        _reject_extras(params)
        return e_q(z, q) if target == "eq" else E_q(z, q)
    if target == "gammaq":
        z = _pop_float(params, "z")
        q = _pop_float(params, "q")
        _reject_extras(params)
        return gamma_q(z, q)
    if target == "betaq":
        a = _pop_float(params, "a")
        b = _pop_float(params, "b")
        q = _pop_float(params, "q")
        _reject_extras(params)
        return beta_q(a, b, q)
    if target == "theta4":
        x = _pop_float(params, "x")
        q = _pop_float(params, "q")
        _reject_extras(params)
        return theta4(x, q)
    if target in ("besselq1", "besselq2", "besselhe"):
        nu = _pop_float(params, "nu")
        z = _pop_float(params, "z")
        q = _pop_float(params, "q")
        _reject_extras(params)
        fn = {
            "besselq1": jackson_bessel_1,
            "besselq2": jackson_bessel_2,
            "besselhe": hahn_exton_bessel,
        }[target]
        return fn(nu, z, q)
    if target.startswith("family:"):
        name = target.split(":", 1)[1]
        n = _pop_int(params, "n")
        x = _pop_float(params, "x")
        q = _pop_float(params, "q")
        form = params.pop("form", "primary")
        kwargs = {}
        for key in list(params):
            kwargs[key] = (
                _pop_int(params, key) if key == "N" else _pop_float(params, key)
            )
        fam = FamilyParams(name, q, **kwargs)
        return family_eval(fam, n, x, form=form)
    if target == "aw":
        n = _pop_int(params, "n")
        x = _pop_float(params, "x")
        a = _pop_float(params, "a")
        b = _pop_float(params, "b")
        c = _pop_float(params, "c")
        d = _pop_float(params, "d")
        q = _pop_float(params, "q")
        _reject_extras(params)
        return aw_poly(n, x, AWParams(a, b, c, d, q))
    raise UsageError(f"unknown eval target {target!r}; targets: {EVAL_TARGETS}")


def cmd_eval(args, out):
    params = _parse_kv(args.params)
    if args.q is not None and "q" not in params:
        params["q"] = repr(args.q)
    echo = dict(params)
    value = _eval_target(args.target, params)
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "target": args.target,
                    "params": echo,
                    "value": _jsonable(value),
                }
            )
            + "\n"
        )
    elif args.format == "csv":
        keys = sorted(echo)
        out.write(",".join(["target", *keys, "value"]) + "\n")
        out.write(
            ",".join([args.target, *(echo[k] for k in keys), _fmt(value)])
            + "\n"
        )
    else:
        echo_s = " ".join(f"{k}={v}" for k, v in echo.items())
        out.write(f"{args.target} {echo_s}\n{_fmt(value)}\n")
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, out):
    overrides = _tolerance_overrides(args.tolerance)
    if args.id == "all":
        ids = list_identities()
    else:
        ids = [args.id]
    reports = [
        verify(i, samples=args.samples, seed=args.seed, tolerance=overrides.get(i))
        for i in ids
    ]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        header = ["id", "status", "max_rel_error", "tolerance", "samples", "seed"]
        rows = [
            [
                r.id,
                "PASS" if r.passed else "FAIL",
                r.max_rel_error,
                r.tolerance,
                r.samples,
                r.seed,
            ]
            for r in reports
        ]
        _emit_rows(header, rows, args.format, out)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# ortho


def _gram_report(gram, closed_diag, out, fmt, notes=()):
    """Emit a Gram table with closed-form comparison and judge it.

    Off-diagonals are compared against the diagonal scale, diagonals
    against the closed forms where available.
    """
    nmax = len(gram) - 1
    scale = max(abs(gram[n][n]) for n in range(nmax + 1))
    scale = max(scale, 1e-300)
    breach = False
    rows = []
    for n in range(nmax + 1):
        for m in range(n, nmax + 1):
            entry = gram[n][m]
            if n == m:
                closed = closed_diag[n] if closed_diag else None
                if closed is not None:
                    rel = abs(entry - closed) / max(abs(closed), 1e-300)
                    ok = rel <= DIAG_TOL
                else:
                    rel = None
                    ok = True
            else:
                closed = 0.0
                rel = abs(entry) / scale
                ok = rel <= OFFDIAG_TOL
            breach = breach or not ok
            rows.append(
                [
                    n,
                    m,
                    entry,
                    closed if closed is not None else "",
                    rel if rel is not None else "",
                    "ok" if ok else "BREACH",
                ]
            )
    _emit_rows(
        ["n", "m", "gram", "closed", "rel_error", "status"], rows, fmt, out
    )
    for note in notes:
        out.write(f"note: {note}\n")
    return 1 if breach else 0


def cmd_ortho(args, out):
    params = _parse_kv(args.params)
    if args.q is not None and "q" not in params:
        params["q"] = repr(args.q)
    nmax = args.nmax
    if nmax < 0:
        raise UsageError("--nmax must be nonnegative")
    family = args.family
    notes = []
    if family == "aw":
        a = _pop_float(params, "a")
        b = _pop_float(params, "b")
        c = _pop_float(params, "c")
        d = _pop_float(params, "d")
        q = _pop_float(params, "q")
        _reject_extras(params)
        p = AWParams(a, b, c, d, q)
        nodes = _check_nodes(args.nodes)
        gram = aw_gram_quadrature(p, nmax, nodes)
        closed = [aw_norm(n, p) for n in range(nmax + 1)]
        if any(abs(e) > 1.0 for e in p.abcd):
            notes.append("continuous-part-only quadrature")
        return _gram_report(gram, closed, out, args.format, notes)
    if family == "big_qjacobi":
        a = _pop_float(params, "a")
        b = _pop_float(params, "b")
        c = _pop_float(params, "c")
        d = _pop_float(params, "d")
        q = _pop_float(params, "q")
        _reject_extras(params)
        p = BigQJacobiParams(a, b, c, d, q)
        gram = [
            [big_qjacobi_gram(n, m, p) for m in range(nmax + 1)]
            for n in range(nmax + 1)
        ]
        closed = [big_qjacobi_norm(n, p) for n in range(nmax + 1)]
        return _gram_report(gram, closed, out, args.format, notes)
    if family == "little_q_jacobi":
        a = _pop_float(params, "a")
        b = _pop_float(params, "b")
        q = _pop_float(params, "q")
        _reject_extras(params)
        gram = [
            [little_qjacobi_gram(n, m, a, b, q) for m in range(nmax + 1)]
            for n in range(nmax + 1)
        ]
        closed = [little_qjacobi_norm(n, a, b, q) for n in range(nmax + 1)]
        return _gram_report(gram, closed, out, args.format, notes)
    if family == "q_racah":
        alpha = _pop_float(params, "alpha")
        beta = _pop_float(params, "beta")
        gamma = _pop_float(params, "gamma")
        delta = _pop_float(params, "delta")
        q = _pop_float(params, "q")
        big_n = _pop_int(params, "N")
        _reject_extras(params)
        if nmax > big_n:
            raise UsageError("--nmax exceeds N")
        gram = [
            [
                q_racah_orthogonality(n, m, alpha, beta, gamma, delta, q, big_n)
                for m in range(nmax + 1)
            ]
            for n in range(nmax + 1)
        ]
        return _gram_report(gram, None, out, args.format, notes)
    # tableau families with a printed measure
    q = _pop_float(params, "q")
    kwargs = {}
    for key in list(params):
        kwargs[key] = (
            _pop_int(params, key) if key == "N" else _pop_float(params, key)
        )
    fam = FamilyParams(family, q, **kwargs)
    gram = [
        [family_orthogonality(fam, n, m) for m in range(nmax + 1)]
        for n in range(nmax + 1)
    ]
    return _gram_report(gram, None, out, args.format, notes)


# ---------------------------------------------------------------------------
# table


def _parse_grid(spec):
    try:
        var, _, rng = spec.partition("=")
        start_s, stop_s, step_s = rng.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError:
        raise UsageError(
            f"malformed grid {spec!r} (expected var=start:stop:step)"
        )
    if not var:
        raise UsageError(f"malformed grid {spec!r} (empty variable)")
    if step <= 0:
        raise UsageError(f"grid step must be positive in {spec!r}")
    if stop < start:
        raise UsageError(f"grid stop below start in {spec!r}")
    count = int((stop - start) / step + 1e-9) + 1
    return var, [start + k * step for k in range(count)]


def cmd_table(args, out):
    base = _parse_kv(args.params)
    if args.q is not None and "q" not in base:
        base["q"] = repr(args.q)
    if not args.grid:
        raise UsageError("table requires at least one --grid var=start:stop:step")
    grids = [_parse_grid(g) for g in args.grid]
    names = [g[0] for g in grids]
    rows = []

    def walk(idx, assignment):
        if idx == len(grids):
            params = dict(base)
            for name, value in assignment:
                params[name] = repr(value)
            value = _eval_target(args.target, params)
            rows.append([*(v for _, v in assignment), value])
            return
        var, values = grids[idx]
        for v in values:
            walk(idx + 1, [*assignment, (var, v)])

    walk(0, [])
    _emit_rows([*names, "value"], rows, args.format, out)
    return 0


# ---------------------------------------------------------------------------
# limits


def cmd_limits(args, out):
    names = list_paths() if args.path == "all" else [args.path]
    code = 0
    payload = []
    for name in names:
        report = run_limit(name, tolerance=args.tolerance_value)
        if not report.passed:
            code = 1
        if args.format == "json":
            payload.append(
                {
                    "name": report.name,
                    "parameters": _jsonable(list(report.parameters)),
                    "errors": _jsonable(list(report.errors)),
                    "tolerance": report.tolerance,
                    "final_error": report.final_error,
                    "finally_decreasing": report.finally_decreasing,
                    "passed": report.passed,
                }
            )
        else:
            rows = [
                [p, e] for p, e in zip(report.parameters, report.errors)
            ]
            out.write(
                f"{report.name}: {'PASS' if report.passed else 'FAIL'} "
                f"(final {_fmt(report.final_error)}, "
                f"tolerance {_fmt(report.tolerance)})\n"
            )
            _emit_rows(["parameter", "error"], rows, args.format, out)
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    return code


# ---------------------------------------------------------------------------
# argument parser


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qspecial",
        description="q-special functions: evaluation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nodes=False):
        p.add_argument("--q", type=float, default=None, help="default base q")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=25)
        if nodes:
            p.add_argument("--nodes", type=int, default=512)
        p.add_argument(
            "--format", choices=("json", "csv", "text"), default="text"
        )
        p.add_argument(
            "--tolerance",
            action="append",
            metavar="ID=VAL",
            help="per-identity tolerance override",
        )
        p.add_argument("--out", default=None, help="write output to a file")

    p_eval = sub.add_parser("eval", help="evaluate a target at a point")
    p_eval.add_argument("target")
    p_eval.add_argument("params", nargs="*", metavar="key=value")
    common(p_eval)

    p_verify = sub.add_parser("verify", help="verify identities")
    p_verify.add_argument("id", help="identity id or 'all'")
    common(p_verify)

    p_ortho = sub.add_parser("ortho", help="orthogonality Gram report")
    p_ortho.add_argument("family")
    p_ortho.add_argument("params", nargs="*", metavar="key=value")
    p_ortho.add_argument("--nmax", type=int, default=4)
    common(p_ortho, nodes=True)

    p_table = sub.add_parser("table", help="tabulate a target over a grid")
    p_table.add_argument("target")
    p_table.add_argument("params", nargs="*", metavar="key=value")
    p_table.add_argument(
        "--grid",
        action="append",
        metavar="var=start:stop:step",
        help="grid variable (repeatable; row-major order)",
    )
    common(p_table)

    p_limits = sub.add_parser("limits", help="classical limit diagnostics")
    p_limits.add_argument("path", help="limit path name or 'all'")
    p_limits.add_argument(
        "--tolerance-value",
        type=float,
        default=1e-3,
        help="final relative error bound",
    )
    common(p_limits)
    return parser


_COMMANDS = {
    "eval": cmd_eval,
    "verify": cmd_verify,
    "ortho": cmd_ortho,
    "table": cmd_table,
    "limits": cmd_limits,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.out:
            with open(args.out, "w", newline="\n") as handle:
                code = _COMMANDS[args.command](args, handle)
        else:
            code = _COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QSpecialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
