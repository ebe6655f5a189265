"""Command-line interface.

Commands
--------
real      weighted Fekete sets on the line (closed form or optimizer)
circle    weighted Fekete sets on the unit circle
measure   density/CDF samples of the limit measure families
converge  diameter-vs-capacity tables with a weak* convergence diagnostic
verify    run the self-check batteries

Data goes to stdout (or --out), messages to stderr.  Exit codes: 0 success,
1 verification failure, 2 invalid input, 3 optimizer did not converge (the
partial result is still emitted).  Floats are printed with 17 significant
digits so that parsing the output recovers the exact binary values.  The
environment variable FEKETE_LOG in {off, info, debug} controls diagnostic
verbosity on stderr; nothing else is read from the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import os
import sys

import numpy as np

from . import __version__
from .circle import CircleWeight, circle_diameter, circle_points
from .energy import OptimizerConfig, energy_gradient, optimize
from .equilibrium import (
    MeasureSpec,
    capacity_circle,
    capacity_real,
    cdf,
    density,
    ks_distance,
)
from .errors import FeketeError, InvalidInputError
from .poly import roots
from .real_line import (
    RealWeight,
    canonical_gamma,
    pseudo_jacobi,
    s1_diameter,
    s1_points,
    s1_polynomial,
    sgt1_diameter,
)
from .verify import SUITES, run_suites

log = logging.getLogger("fekete")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NOT_CONVERGED = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID_INPUT):
        super().__init__(message)
        self.code = code


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _to_json(value) -> str:
    """Minimal JSON serializer with fixed key order and 17-digit floats."""
    if isinstance(value, dict):
        inner = ", ".join(f'"{k}": {_to_json(v)}' for k, v in value.items())
        return "{" + inner + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _fmt(value)
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v
                         for v in row])
    return buf.getvalue()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", out_path)
    else:
        sys.stdout.write(text)


def _result_payload(params: dict, points, log_diameter: float, grad_norm: float,
                    extra: dict | None = None) -> dict:
    payload = {
        "params": params,
        "points": [float(p) for p in points],
        "log_diameter": log_diameter,
        "diameter": math.exp(log_diameter),
        "energy": -log_diameter,
        "grad_norm": grad_norm,
    }
    if extra:
        payload.update(extra)
    return payload


def _emit_result(payload: dict, fmt: str, out_path: str | None) -> None:
    if fmt == "json":
        _emit(_to_json(payload) + "\n", out_path)
        return
    header = list(payload["params"].keys()) + [
        "log_diameter", "diameter", "energy", "grad_norm",
    ] + [f"point_{k}" for k in range(len(payload["points"]))]
    row = list(payload["params"].values()) + [
        payload["log_diameter"], payload["diameter"], payload["energy"],
        payload["grad_norm"],
    ] + payload["points"]
    _emit(_to_csv(header, [row]), out_path)


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------

def _cmd_real(args) -> int:
    if args.a == 0:
        raise CliError("a must be nonzero")
    if args.s < 1.0:
        raise CliError("weight exponent must satisfy s >= 1; "
                       "the maximization is unbounded for s < 1")
    if args.n < 2:
        raise CliError("n must be >= 2")
    weight = RealWeight(a=args.a, s=args.s)
    params = {"command": "real", "a": weight.a, "s": weight.s, "n": args.n,
              "method": args.method, "seed": args.seed}

    if args.method == "closed":
        if weight.s == 1.0:
            gamma = args.gamma if args.gamma is not None else canonical_gamma(args.n)
            sol = s1_polynomial(weight.a, args.n, gamma)
            pts = np.asarray(sol.points)
            diameter = s1_diameter(weight.a, args.n)
            params["gamma"] = gamma
        else:
            pts = np.sort(roots(pseudo_jacobi(weight.a, weight.s, args.n)).real)
            diameter = sgt1_diameter(weight.a, weight.s, args.n)
        grad_norm = float(np.max(np.abs(energy_gradient(pts, weight))))
        payload = _result_payload(params, pts, math.log(diameter), grad_norm)
        _emit_result(payload, args.format, args.out)
        return EXIT_OK

    cfg = OptimizerConfig(seed=args.seed)
    log.info("optimizing %d points with %d starts", args.n, cfg.starts)
    res = optimize(weight, args.n, cfg)
    payload = _result_payload(
        params, res.points, res.log_diameter, res.grad_norm,
        extra={"iterations": res.iterations, "converged": res.converged},
    )
    _emit_result(payload, args.format, args.out)
    if not res.converged:
        print("optimizer did not reach the gradient tolerance; "
              "best iterate emitted", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _cmd_circle(args) -> int:
    if abs(args.b) == 1.0:
        raise CliError("b = +-1 is excluded (charge on the circle)")
    if args.n < 2:
        raise CliError("n must be >= 2")
    weight = CircleWeight(args.b)
    params = {"command": "circle", "b": weight.b, "n": args.n,
              "method": args.method, "seed": args.seed}

    if args.method == "closed":
        alpha = args.alpha if args.alpha is not None else 0.0
        sol = circle_points(weight.b, args.n, alpha)
        params["alpha"] = alpha
        angles = np.asarray(sol.angles)
        diameter = circle_diameter(weight.b, args.n)
        grad_norm = float(np.max(np.abs(energy_gradient(angles, weight))))
        payload = _result_payload(params, angles, math.log(diameter), grad_norm)
        payload["cartesian"] = [[z.real, z.imag] for z in sol.points]
        _emit_result(payload, args.format, args.out)
        return EXIT_OK

    cfg = OptimizerConfig(seed=args.seed)
    res = optimize(weight, args.n, cfg)
    payload = _result_payload(
        params, res.points, res.log_diameter, res.grad_norm,
        extra={"iterations": res.iterations, "converged": res.converged},
    )
    payload["cartesian"] = [[math.cos(t), math.sin(t)] for t in res.points]
    _emit_result(payload, args.format, args.out)
    if not res.converged:
        print("optimizer did not reach the gradient tolerance; "
              "best iterate emitted", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def _parse_grid(spec: str) -> np.ndarray:
    parts = spec.split(":")
    if len(parts) != 3:
        raise CliError(f"grid must look like lo:hi:count, got {spec!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise CliError(f"bad grid {spec!r}: {exc}") from None
    if count < 1 or hi < lo:
        raise CliError("grid needs hi >= lo and count >= 1")
    return np.linspace(lo, hi, count)


def _measure_from_args(args) -> MeasureSpec:
    fam = args.family
    if fam == "real-s":
        if args.s is None or args.s <= 1.0:
            raise CliError("family real-s needs --s with s > 1")
        return MeasureSpec.real_sgt1(args.s)
    if fam == "arctan":
        return MeasureSpec.arctan()
    if fam == "circle-poisson":
        if args.b is None or abs(args.b) == 1.0:
            raise CliError("family circle-poisson needs --b with b != +-1")
        return MeasureSpec.circle_poisson(args.b)
    if fam == "harmonic-inf" or fam == "harmonic-i":
        if args.r is None or args.r <= 0:
            raise CliError(f"family {fam} needs --r with r > 0")
        if fam == "harmonic-inf":
            return MeasureSpec.harmonic_inf(args.r)
        return MeasureSpec.harmonic_i(args.r)
    raise CliError(f"unknown family {fam!r}")


def _cmd_measure(args) -> int:
    m = _measure_from_args(args)
    grid = _parse_grid(args.grid)
    lo, hi = m.support
    if math.isfinite(lo):
        # clip to the support and pin the endpoints as first/last rows
        xs = [lo] + [float(x) for x in grid if lo < x < hi] + [hi]
    else:
        xs = [float(x) for x in grid]
    rows = [(x, density(m, x), cdf(m, x)) for x in xs]
    if args.format == "json":
        payload = {
            "family": m.family,
            "params": {k: v for k, v in (("s", m.s), ("b", m.b), ("r", m.r))
                       if v is not None},
            "rows": [{"x": x, "density": d, "cdf": c} for x, d, c in rows],
        }
        _emit(_to_json(payload) + "\n", args.out)
    else:
        _emit(_to_csv(("x", "density", "cdf"), rows), args.out)
    return EXIT_OK


def _parse_n_list(spec: str) -> list[int]:
    try:
        ns = [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise CliError(f"bad n-list {spec!r}: {exc}") from None
    if not ns or any(n < 2 for n in ns):
        raise CliError("n-list entries must be integers >= 2")
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise CliError("n-list must be strictly increasing")
    return ns


def _cmd_converge(args) -> int:
    if (args.s is None) == (args.b is None):
        raise CliError("give exactly one of --s (line) or --b (circle)")
    ns = _parse_n_list(args.n_list)
    rows = []
    if args.s is not None:
        if args.s < 1.0:
            raise CliError("s must satisfy s >= 1")
        cap = capacity_real(args.s)
        for n in ns:
            if args.s == 1.0:
                delta = s1_diameter(1.0, n)
                pts = s1_points(1.0, n, canonical_gamma(n))
                ks = ks_distance(pts, MeasureSpec.arctan())
            else:
                delta = sgt1_diameter(1.0, args.s, n)
                pts = np.sort(roots(pseudo_jacobi(1.0, args.s, n)).real)
                ks = ks_distance(pts, MeasureSpec.real_sgt1(args.s))
            rows.append((n, delta, cap, delta - cap, ks))
    else:
        if abs(args.b) == 1.0:
            raise CliError("b = +-1 is excluded")
        cap = capacity_circle(args.b)
        m = MeasureSpec.circle_poisson(args.b)
        for n in ns:
            delta = circle_diameter(args.b, n)
            sol = circle_points(args.b, n, 0.0)
            rows.append((n, delta, cap, delta - cap, ks_distance(sol.angles, m)))
    header = ("n", "delta_n", "capacity", "delta_minus_capacity", "ks_distance")
    if args.format == "json":
        payload = {"rows": [dict(zip(header, row)) for row in rows]}
        _emit(_to_json(payload) + "\n", args.out)
    else:
        _emit(_to_csv(header, rows), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names)
    lines = [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    summary = f"{len(results) - len(failed)}/{len(results)} checks passed"
    _emit("\n".join(lines + [summary]) + "\n", args.out)
    if failed:
        print(f"verification failed: {', '.join(r.name for r in failed)}",
              file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fekete",
        description="Weighted Fekete points on the real line and the unit circle",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="write output to this path")

    p = sub.add_parser("real", help="Fekete sets for w(x) = |x - ai|^-s on the line")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "optimize"), default="closed")
    p.add_argument("--gamma", type=float, default=None,
                   help="free phase for s = 1 (default: symmetric choice)")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_real)

    p = sub.add_parser("circle", help="Fekete sets for w(z) = 1/|z - b| on the circle")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "optimize"), default="closed")
    p.add_argument("--alpha", type=float, default=None,
                   help="free rotation of the preimage grid (default 0)")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_circle)

    p = sub.add_parser("measure", help="sample a limit measure density and CDF")
    p.add_argument("--family",
                   choices=("real-s", "arctan", "circle-poisson",
                            "harmonic-inf", "harmonic-i"),
                   required=True)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--grid", required=True, help="lo:hi:count")
    common(p)
    p.set_defaults(handler=_cmd_measure)

    p = sub.add_parser("converge", help="diameter vs capacity over a list of n")
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--b", type=float, default=None)
    p.add_argument("--n-list", dest="n_list", required=True,
                   help="comma-separated, strictly increasing")
    common(p)
    p.set_defaults(handler=_cmd_converge)

    p = sub.add_parser("verify", help="run the self-check batteries")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_verify)

    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("FEKETE_LOG", "off").lower()
    if level_name == "off":
        logging.getLogger("fekete").addHandler(logging.NullHandler())
        return
    levels = {"info": logging.INFO, "debug": logging.DEBUG}
    if level_name not in levels:
        print(f"ignoring unknown FEKETE_LOG value {level_name!r}", file=sys.stderr)
        return
    logging.basicConfig(stream=sys.stderr, level=levels[level_name],
                        format="%(levelname)s %(name)s: %(message)s")


_VALUE_OPTIONS = {"--a", "--s", "--b", "--r", "--n", "--gamma", "--alpha",
                  "--grid", "--n-list", "--seed"}


def _join_dash_values(argv: list[str]) -> list[str]:
    """Merge '--opt -value' pairs so argparse does not read negative values
    (e.g. a grid '-2:2:5') as option flags."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _VALUE_OPTIONS and i + 1 < len(argv)
                and argv[i + 1].startswith("-") and argv[i + 1] != "--"
                and not argv[i + 1].startswith("--")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_dash_values(list(argv)))
    try:
        return args.handler(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except FeketeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
