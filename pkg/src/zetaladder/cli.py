"""Command-line surface.

Exit codes: 0 success / law pass, 1 law verdict fail, 2 precondition,
domain, or cache-compatibility violation, 3 I/O failure, 4 law verdict
inconclusive.  A fingerprint mismatch is a usage error (the caller pointed
an incompatible configuration at an existing cache), not an I/O fault, so
it shares exit 2 with the other precondition failures.  Configuration precedence: flags > ZL_* environment variables
> defaults.  All numeric output goes to stdout with 17 significant digits so
re-runs against the same cache are byte-identical; timings and diagnostics
go to stderr.
"""
import argparse
import json
import os
import sys
import time

import numpy as np

from . import engine, integral, ladder, laws, ortho, segments
from .errors import (
    CacheMismatchError,
    ConvergenceError,
    DomainError,
    OutOfRangeError,
    PreconditionError,
)

_ENV_DEFAULTS = {
    "cache_path": ("ZL_CACHE_PATH", str, "zeta_cache.txt"),
    "panel_width": ("ZL_PANEL_WIDTH", float, 0.25),
    "gl_order": ("ZL_GL_ORDER", int, 8),
}


def _env_default(key):
    env, typ, fallback = _ENV_DEFAULTS[key]
    raw = os.environ.get(env)
    if raw is None:
        return fallback
    try:
        return typ(raw)
    except ValueError as exc:
        raise PreconditionError(f"{env}={raw!r} is not a valid {typ.__name__}") from exc


def _build_parser():
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--cache", dest="cache_path", default=None,
                        help="cache file path (ZL_CACHE_PATH)")
    shared.add_argument("--panel-width", type=float, default=None,
                        help="quadrature panel width (ZL_PANEL_WIDTH)")
    shared.add_argument("--gl-order", type=int, default=None,
                        help="Gauss-Legendre order (ZL_GL_ORDER)")
    shared.add_argument("--crossover", type=float, default=30.0,
                        help="fast-path lower edge")
    shared.add_argument("--c0", type=float, default=0.0,
                        help="ladder constant c0")
    shared.add_argument("--t-min", type=float, default=1000.0,
                        help="smallest admissible ladder height")
    shared.add_argument("--format", choices=("csv", "json"), default="csv")
    shared.add_argument("--seed", type=int, default=0,
                        help="seed for sampled diagnostics")

    p = argparse.ArgumentParser(
        prog="zetaladder",
        description="Ladder transforms, iterated segments, and measure laws "
        "on the critical line.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cache-extend", parents=[shared],
                       help="extend the integral cache")
    s.add_argument("--to", type=float, required=True)

    s = sub.add_parser("ladder", parents=[shared],
                       help="ladder point at a height")
    s.add_argument("--t", type=float, required=True)

    s = sub.add_parser("chain", parents=[shared], help="build a segment chain")
    s.add_argument("--t", type=float, required=True)
    s.add_argument("--h", type=float, required=True)
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("law", parents=[shared], help="run one law check")
    s.add_argument("law_id", choices=(
        "theorem1", "corollary1", "corollary2", "lower_bound", "rh_bound",
        "bound_comparison"))
    s.add_argument("--t", type=float)
    s.add_argument("--t-list", type=str, default=None,
                   help="comma-separated T values (bound_comparison)")
    s.add_argument("--h", type=float)
    s.add_argument("--n", type=int)
    s.add_argument("--k0", type=int)
    s.add_argument("--kmax", type=int, default=3)
    s.add_argument("--eps", type=float, default=0.05)
    s.add_argument("--tol", type=float, default=None,
                   help="relative tolerance band (law-specific default)")
    s.add_argument("--a", type=float, help="A(T) for corollary1")
    s.add_argument("--b", type=float, help="B(T) for corollary2")
    s.add_argument("--delta", type=float)
    s.add_argument("--d-const", type=float, default=1.0)
    s.add_argument("--delta-slack", type=float, default=0.1)

    s = sub.add_parser("ortho", parents=[shared], help="weighted Gram matrix")
    s.add_argument("--t", type=float, required=True)
    s.add_argument("--l", type=float, required=True)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--quad-points", type=int, default=None,
                   help="panels along the base segment (default 64*4^(k-1))")

    s = sub.add_parser("rterm", parents=[shared],
                       help="integral error-term samples")
    s.add_argument("t_list", type=float, nargs="+")

    return p


def _open_cache(args):
    path = args.cache_path or _env_default("cache_path")
    pw = args.panel_width if args.panel_width is not None else _env_default(
        "panel_width")
    order = args.gl_order if args.gl_order is not None else _env_default(
        "gl_order")
    ecfg = engine.EngineConfig(crossover=args.crossover)
    if os.path.exists(path):
        cache = integral.load_cache(path, engine_cfg=ecfg)
        if cache.panel_width != pw or cache.quad_order != order:
            raise CacheMismatchError(
                f"{path}: cache has panel_width={cache.panel_width:g}, "
                f"order={cache.quad_order}; requested {pw:g}/{order}"
            )
        return cache
    return integral.new_cache(
        path, panel_width=pw, quad_order=order, engine_cfg=ecfg)


def _ladder_cfg(args):
    return ladder.LadderConfig(c0=args.c0, T_min=args.t_min)


def _emit_report(report, fmt):
    if fmt == "json":
        sys.stdout.write(laws.law_to_json(report) + "\n")
    else:
        sys.stdout.write(laws.law_to_csv(report))
    return {"pass": 0, "fail": 1, "inconclusive": 4}[report.verdict]


def _cmd_cache_extend(args):
    cache = _open_cache(args)
    tic = time.time()
    integral.extend(cache, args.to)
    print(f"extended in {time.time() - tic:.2f}s", file=sys.stderr)
    sys.stdout.write(
        f"checkpoints {len(cache.ts)}\nt_max {cache.t_max:.17g}\n")
    return 0


def _cmd_ladder(args):
    cache = _open_cache(args)
    point = ladder.phi1(cache, _ladder_cfg(args), args.t)
    if args.format == "json":
        sys.stdout.write(json.dumps({
            "t": point.t, "phi1": point.phi1,
            "phi1_prime": point.phi1_prime, "omega": point.omega}) + "\n")
    else:
        sys.stdout.write("t,phi1,phi1_prime,omega\n")
        sys.stdout.write(
            f"{point.t:.17g},{point.phi1:.17g},{point.phi1_prime:.17g},"
            f"{point.omega:.17g}\n")
    return 0


def _cmd_chain(args):
    cache = _open_cache(args)
    chain = segments.build_chain(cache, _ladder_cfg(args), args.t, args.h, args.k)
    if args.format == "json":
        m = segments.metrics(chain)
        sys.stdout.write(json.dumps({
            "T": chain.T, "H": chain.H, "k": chain.k,
            "left": list(chain.left), "right": list(chain.right),
            "measures": list(m.measures), "gaps": list(m.gaps),
            "gap_model": m.gap_model}) + "\n")
    else:
        sys.stdout.write(segments.chain_csv(chain))
    return 0


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise PreconditionError(
                f"law {args.law_id} requires --{name.replace('_', '-')}")


def _cmd_law(args):
    if args.law_id == "bound_comparison":
        _require(args, ["t_list", "delta", "k0"])
        t_list = [float(x) for x in args.t_list.split(",")]
        report = laws.bound_comparison_report(
            t_list, args.delta, args.k0, D=args.d_const)
        return _emit_report(report, args.format)
    cache = _open_cache(args)
    cfg = _ladder_cfg(args)
    if args.law_id == "theorem1":
        _require(args, ["t", "h", "n"])
        tol = 0.10 if args.tol is None else args.tol
        report = laws.theorem1_check(
            cache, cfg, args.t, args.h, args.n, args.eps, tol)
    elif args.law_id == "corollary1":
        _require(args, ["t", "a"])
        report = laws.corollary1_check(
            cache, cfg, args.t, args.eps, args.a, args.kmax)
    elif args.law_id == "corollary2":
        _require(args, ["t", "b"])
        tol = 0.0 if args.tol is None else args.tol
        report = laws.corollary2_check(
            cache, cfg, args.t, args.eps, args.b, args.kmax, tol=tol)
    elif args.law_id == "lower_bound":
        _require(args, ["t", "h", "k0"])
        report = laws.lower_bound_check(cache, cfg, args.t, args.h, args.k0)
    else:  # rh_bound
        _require(args, ["t", "delta", "k0"])
        report = laws.rh_bound_check(
            cache, cfg, args.t, args.delta, args.k0, D=args.d_const,
            delta_slack=args.delta_slack)
    return _emit_report(report, args.format)


def _cmd_ortho(args):
    cache = _open_cache(args)
    ocfg = ortho.OrthoConfig(
        l=args.l, n_max=args.nmax, k=args.k, quad_points=args.quad_points)
    gram = ortho.gram_matrix(cache, _ladder_cfg(args), ocfg, args.t)
    if args.format == "json":
        sys.stdout.write(json.dumps({
            "T": args.t, "l": args.l, "k": args.k,
            "gram": [[float(v) for v in row] for row in gram]}) + "\n")
    else:
        sys.stdout.write(ortho.gram_csv(gram, args.t, ocfg))
    return 0


def _cmd_rterm(args):
    cache = _open_cache(args)
    rows = []
    for t in args.t_list:
        integral.extend(cache, t)
        rows.append(integral.r_term(cache, t))
    if args.format == "json":
        sys.stdout.write(json.dumps([{
            "t": s.t, "r": s.r, "r_quarter_ratio": s.r_quarter_ratio,
            "r_third_ratio": s.r_third_ratio} for s in rows]) + "\n")
    else:
        sys.stdout.write("t,r,r_quarter_ratio,r_third_ratio\n")
        for s in rows:
            sys.stdout.write(
                f"{s.t:.17g},{s.r:.17g},{s.r_quarter_ratio:.17g},"
                f"{s.r_third_ratio:.17g}\n")
    return 0


_COMMANDS = {
    "cache-extend": _cmd_cache_extend,
    "ladder": _cmd_ladder,
    "chain": _cmd_chain,
    "law": _cmd_law,
    "ortho": _cmd_ortho,
    "rterm": _cmd_rterm,
}


def main(argv=None) -> int:
    np.seterr(all="ignore")
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, PreconditionError, CacheMismatchError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O failure: {exc}", file=sys.stderr)
        return 3
    except (OutOfRangeError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
