"""Command-line interface: ``zeta-routes {eval,compare,bernoulli,mc,table}``.

Exit status is 0 on success, 1 when a verification fails (route
disagreement, Monte Carlo |z| > 4) and 2 on usage or domain errors.
Machine-readable output is JSON (one object per line for ``table``) or CSV;
floats are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Any, Sequence

from zetaroutes import __version__
from zetaroutes.bernoulli import DEFAULT_CAPACITY, bernoulli_table
from zetaroutes.distributions import Kind, make_distribution, mc_moment, moment
from zetaroutes.errors import CapacityError, ConfigurationError, DomainError
from zetaroutes.quadrature import QuadratureConfig
from zetaroutes.routes import (
    RouteId,
    RouteResult,
    applicable_routes,
    compare_routes,
    default_route,
    evaluate_route,
    parse_route,
)
from zetaroutes.series import SeriesConfig

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ("s", "route", "value", "abs_error", "converged")
MAX_EVALS_ENV = "ZETA_ROUTES_MAX_EVALS"
Z_LIMIT = 4.0


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- serialization


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """Compact JSON with every float at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def route_record(r: RouteResult) -> dict:
    q = r.result
    return {
        "route": r.route.value,
        "argument": r.argument,
        "value": q.value,
        "abs_error": q.abs_error,
        "converged": q.converged,
        "evaluations": q.evaluations,
        "levels": q.levels,
        "notes": r.notes,
    }


def _record(command: str, **fields) -> dict:
    return {"command": command, "version": __version__, **fields}


# ---------------------------------------------------------------- configs


def _quad_cfg(tol: float) -> QuadratureConfig:
    raw = os.environ.get(MAX_EVALS_ENV)
    if raw is None:
        return QuadratureConfig(tol=tol)
    try:
        budget = int(raw)
    except ValueError:
        raise UsageError(f"{MAX_EVALS_ENV} must be an integer, got {raw!r}") from None
    if budget < 1:
        raise UsageError(f"{MAX_EVALS_ENV} must be positive, got {budget}")
    return QuadratureConfig(tol=tol, max_evals=budget)


def _series_cfg(tol: float) -> SeriesConfig:
    return SeriesConfig(tol=min(tol, 1e-15))


def _check_tol(tol: float) -> None:
    if not tol > 0:
        raise UsageError(f"--tol must be positive, got {tol}")


DOMAIN_HINT = "valid domain is s > 0, s != 1"


# ---------------------------------------------------------------- commands


def cmd_eval(s: float, route: str | None = None, tol: float = 1e-12) -> dict:
    _check_tol(tol)
    rid = parse_route(route) if route else default_route(s)
    try:
        res = evaluate_route(rid, s, _quad_cfg(tol), _series_cfg(tol))
    except DomainError as exc:
        if route is None:
            raise DomainError(f"{exc}; {DOMAIN_HINT}") from exc
        raise
    return _record("eval", argument=s, tolerance=tol, results=[route_record(res)])


def cmd_compare(
    s: float,
    tol: float = 1e-10,
    routes: Sequence[str] | None = None,
    fault: float | None = None,
    fault_route: str | None = None,
) -> dict:
    _check_tol(tol)
    chosen = [parse_route(r) for r in routes] if routes else None
    faults = None
    if fault is not None:
        pool = chosen or applicable_routes(s)
        if not pool:
            raise ConfigurationError(f"no applicable route for s = {s}; {DOMAIN_HINT}")
        target = parse_route(fault_route) if fault_route else pool[0]
        faults = {target: fault}
    if chosen is None and not applicable_routes(s):
        raise ConfigurationError(f"no applicable route for s = {s}; {DOMAIN_HINT}")
    rep = compare_routes(s, chosen, tol, _quad_cfg(min(tol, 1e-12)), _series_cfg(tol), faults)
    return _record(
        "compare",
        argument=s,
        tolerance=tol,
        results=[route_record(r) for r in rep.results],
        max_pairwise_gap=rep.max_pairwise_gap,
        **{"pass": rep.passed},
    )


def cmd_bernoulli(n_max: int) -> dict:
    if n_max < 0:
        raise UsageError(f"n_max must be >= 0, got {n_max}")
    table = bernoulli_table(n_max, DEFAULT_CAPACITY)
    rows = [
        {"n": n, "numerator": str(b.numerator), "denominator": str(b.denominator)}
        for n, b in enumerate(table)
    ]
    return _record("bernoulli", n_max=n_max, bernoulli=rows)


def cmd_mc(dist: str, k: int, n: int, seed: int) -> dict:
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    if n < 1000:
        raise UsageError(f"--n must be >= 1000, got {n}")
    spec = make_distribution(Kind(dist))
    est = mc_moment(spec, k, seed, n)
    target = moment(spec, k)
    diff = est.mean - target
    if est.stderr > 0:
        z = diff / est.stderr
    else:
        z = 0.0 if diff == 0 else math.copysign(math.inf, diff)
    return _record(
        "mc",
        distribution=spec.kind.value,
        k=k,
        n=n,
        seed=seed,
        mean=est.mean,
        stderr=est.stderr,
        target=target,
        z=z,
        **{"pass": abs(z) <= Z_LIMIT},
    )


def cmd_table(s_list: Sequence[float], tol: float = 1e-12, all_routes: bool = False) -> list[dict]:
    _check_tol(tol)
    out = []
    for s in s_list:
        rids = applicable_routes(s) if all_routes else [default_route(s)]
        if not rids:
            raise ConfigurationError(f"no applicable route for s = {s}; {DOMAIN_HINT}")
        results = [evaluate_route(r, s, _quad_cfg(tol), _series_cfg(tol)) for r in rids]
        out.append(
            _record("table", argument=s, tolerance=tol, results=[route_record(r) for r in results])
        )
    return out


# ---------------------------------------------------------------- rendering


def _render_text(rec: dict) -> str:
    cmd = rec["command"]
    if cmd in ("eval", "compare", "table"):
        lines = [
            f"zeta({_fmt_float(r['argument'])}) = {_fmt_float(r['value'])} "
            f"± {r['abs_error']:.2g}  [{r['route']}]"
            for r in rec["results"]
        ]
        if cmd == "compare":
            verdict = "PASS" if rec["pass"] else "FAIL"
            lines.append(
                f"max pairwise gap {rec['max_pairwise_gap']:.3g} (tol {rec['tolerance']:g}): {verdict}"
            )
        return "\n".join(lines)
    if cmd == "bernoulli":
        return "\n".join(
            f"B_{r['n']} = {r['numerator']}" + ("" if r["denominator"] == "1" else f"/{r['denominator']}")
            for r in rec["bernoulli"]
        )
    verdict = "PASS" if rec["pass"] else "FAIL"
    return (
        f"{rec['distribution']} E[X^{rec['k']}] = {_fmt_float(rec['mean'])} "
        f"± {rec['stderr']:.3g} (target {_fmt_float(rec['target'])}, z = {rec['z']:.3f}): {verdict}"
    )


def _render_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rec in records:
        for r in rec["results"]:
            w.writerow(
                [
                    _fmt_float(rec["argument"]),
                    r["route"],
                    _fmt_float(r["value"]),
                    _fmt_float(r["abs_error"]),
                    "true" if r["converged"] else "false",
                ]
            )
    return buf.getvalue().rstrip("\n")


# ---------------------------------------------------------------- argparse


def build_parser() -> argparse.ArgumentParser:
    routes_help = ", ".join(r.value for r in RouteId)
    p = argparse.ArgumentParser(
        prog="zeta-routes",
        description="Evaluate and cross-check the Riemann zeta function along independent routes.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json")

    e = sub.add_parser("eval", parents=[fmt], help="evaluate zeta(s) along one route")
    e.add_argument("s", type=float)
    e.add_argument("--route", help=f"route tag or short alias ({routes_help})")
    e.add_argument("--tol", type=float, default=1e-12)

    c = sub.add_parser("compare", parents=[fmt], help="cross-check all applicable routes")
    c.add_argument("s", type=float)
    c.add_argument("--tol", type=float, default=1e-10)
    c.add_argument("--routes", help="comma-separated subset of routes")
    c.add_argument("--inject-fault", type=float, default=None, help=argparse.SUPPRESS)
    c.add_argument("--inject-route", default=None, help=argparse.SUPPRESS)

    b = sub.add_parser("bernoulli", parents=[fmt], help="exact Bernoulli numbers B_0..B_n")
    b.add_argument("n_max", type=int)

    m = sub.add_parser("mc", parents=[fmt], help="Monte Carlo check of a closed-form moment")
    m.add_argument("dist", choices=[k.value for k in Kind])
    m.add_argument("--k", type=int, default=1)
    m.add_argument("--n", type=int, default=1_000_000)
    m.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("table", help="batch evaluation")
    t.add_argument("s", type=float, nargs="+")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--tol", type=float, default=1e-12)
    t.add_argument("--all-routes", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            records = [cmd_eval(args.s, args.route, args.tol)]
        elif args.command == "compare":
            routes = args.routes.split(",") if args.routes else None
            records = [cmd_compare(args.s, args.tol, routes, args.inject_fault, args.inject_route)]
        elif args.command == "bernoulli":
            records = [cmd_bernoulli(args.n_max)]
        elif args.command == "mc":
            records = [cmd_mc(args.dist, args.k, args.n, args.seed)]
        else:
            records = cmd_table(args.s, args.tol, args.all_routes)
    except (DomainError, ConfigurationError, CapacityError, UsageError) as exc:
        print(f"zeta-routes {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "csv":
        print(_render_csv(records))
    elif args.format == "text":
        print("\n".join(_render_text(r) for r in records))
    else:
        print("\n".join(dumps(r) for r in records))
    return EXIT_FAIL if any(r.get("pass") is False for r in records) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
