"""Command-line interface.

Subcommands:

* ``dims``      — graded and cumulative dimensions of the free metabelian algebra
* ``growth``    — exact filtration growth for a chosen model
* ``euler-fit`` — enveloping-algebra coefficient growth and its stretched exponent
* ``verify``    — relation/embedding/model-law suites with witness reporting

Exit codes: 0 success, 1 verification failure, 2 usage error. Output is
deterministic byte-for-byte for a fixed configuration: rows are emitted in a
fixed order and JSON keys are written in a fixed order.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import growth as growthmod
from . import metabelian, series
from .presentations import (
    check_presentation,
    standard_tower_instances,
    tower_commutation_report,
    wplus_presentation,
    wreath_presentation,
)
from .wreath import MODE_W, MODE_WPLUS, certify_embedding, model_laws_report


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def _json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- subcommands

def _cmd_dims(args: argparse.Namespace) -> int:
    rows = []
    gamma = 0
    for n in range(1, args.max_n + 1):
        dim = metabelian.graded_dim(args.d, n)
        gamma += dim
        rows.append((n, dim, gamma))
    if args.format == "csv":
        _emit(_csv(("n", "dim", "gamma"), rows), args.out)
    else:
        _emit(
            _json(
                {
                    "command": "dims",
                    "d": args.d,
                    "max_n": args.max_n,
                    "rows": [{"n": n, "dim": dim, "gamma": g} for n, dim, g in rows],
                }
            ),
            args.out,
        )
    return 0


def _cmd_growth(args: argparse.Namespace) -> int:
    report = growthmod.growth_bfs(args.mode, args.d, args.max_n)
    wplus = args.mode == MODE_WPLUS
    rows = []
    for n in range(1, args.max_n + 1):
        row = [n, report.gamma[n], report.graded[n]]
        if wplus:
            spanning = growthmod.wplus_spanning_count(args.d, n)
            bound = growthmod.wplus_growth_bound(args.d, n)
            if report.gamma[n] > bound:
                raise ArithmeticError(
                    f"gamma({n}) = {report.gamma[n]} exceeds the growth bound {bound}"
                )
            row += [spanning, bound]
        rows.append(tuple(row))
    header = ("n", "gamma", "a_n") + (("spanning_count", "growth_bound") if wplus else ())
    if args.format == "csv":
        _emit(_csv(header, rows), args.out)
    else:
        _emit(
            _json(
                {
                    "command": "growth",
                    "mode": args.mode,
                    "d": args.d,
                    "max_n": args.max_n,
                    "rows": [dict(zip(header, row)) for row in rows],
                }
            ),
            args.out,
        )
    return 0


def _fit_points(fit_n: int) -> list[int]:
    points = []
    n = 16
    while n <= fit_n:
        points.append(n)
        n *= 2
    if not points or points[-1] != fit_n:
        points.append(fit_n)
    return points


def _cmd_euler_fit(args: argparse.Namespace) -> int:
    if args.input is not None:
        a = _read_graded_csv(args.input)
        needed = 2 * args.fit_n
        if len(a) - 1 < needed:
            raise ValueError(
                f"input provides a_n up to n = {len(a) - 1}, need {needed} for fit_n = {args.fit_n}"
            )
        target = args.target
        mode = "input"
    elif args.mode == growthmod.MODE_METABELIAN:
        a = [0] + [metabelian.graded_dim(args.d, n) for n in range(1, 2 * args.fit_n + 1)]
        target = args.target if args.target is not None else args.d / (args.d + 1)
        mode = args.mode
    else:
        a = growthmod.wplus_graded_dims(args.d, 2 * args.fit_n)
        target = args.target if args.target is not None else args.d / (args.d + 1)
        mode = args.mode
    b = series.euler_transform(a)
    fit = series.fit_stretched_exponent(b, _fit_points(args.fit_n))
    passed = None if target is None else abs(fit.final - target) <= args.tolerance
    report = {
        "command": "euler-fit",
        "mode": mode,
        "d": None if args.input is not None else args.d,
        "fit_n": args.fit_n,
        "method": fit.method,
        "classification": fit.classification,
        "points": [{"n": n, "alphaHat": alpha} for n, alpha in fit.estimates],
        "final": fit.final,
        "target": target,
        "tolerance": args.tolerance,
        "pass": passed,
    }
    _emit(_json(report), args.out)
    if args.dump_coeffs is not None:
        rows = [(n, b[n]) for n in range(len(b))]
        _emit(_csv(("n", "b_n"), rows), args.dump_coeffs)
    return 0 if passed in (True, None) else 1


def _read_graded_csv(path: str) -> list[int]:
    """Read `n,a_n` rows into the indexed-list convention (a[0] = 0)."""
    values: dict[int, int] = {}
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    start = 1 if lines and lines[0].lower().replace(" ", "") == "n,a_n" else 0
    for ln in lines[start:]:
        parts = ln.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad csv row: {ln!r}")
        values[int(parts[0])] = int(parts[1])
    if not values:
        raise ValueError("empty sequence file")
    n_max = max(values)
    return [0] + [values.get(n, 0) for n in range(1, n_max + 1)]


def _cmd_verify(args: argparse.Namespace) -> int:
    d = args.d
    if args.suite == "presentation":
        if args.mode == MODE_W:
            pres = wreath_presentation(d, d, pair_len_max=args.bound_s)
        else:
            pres = wplus_presentation(d, d, s_max=args.bound_s)
        report = check_presentation(pres, args.mode, d, d).to_dict()
    elif args.suite == "towers":
        combined = {
            "suite": "towers",
            "mode": MODE_WPLUS,
            "d": d,
            "bounds": {"i_max": args.bound_s, "j_max": args.bound_s},
            "checked": 0,
            "failures": [],
        }
        for name, a, b, t, u in standard_tower_instances(d):
            rep = tower_commutation_report(a, b, t, u, args.bound_s, args.bound_s, instance=name)
            combined["checked"] += rep.checked
            combined["failures"] += [f"{name}: {msg}" for msg in rep.failures]
        report = combined
    elif args.suite == "embedding":
        rep = certify_embedding(d, args.max_n, seed=args.seed)
        report = {
            "suite": "embedding",
            "mode": MODE_W,
            "d": d,
            "bounds": {"max_n": args.max_n},
            "checked": len(rep.ranks) + rep.hom_checks,
            "ranks": [{"n": n, "rank": r, "expected": e} for n, r, e in rep.ranks],
            "failures": rep.failures,
        }
    else:  # model-laws
        rep = model_laws_report(d, args.mode, seed=args.seed, trials=args.trials)
        report = {
            "suite": "model-laws",
            "mode": args.mode,
            "d": d,
            "bounds": {"trials": args.trials},
            "checked": rep.checked,
            "failures": rep.failures,
        }
    _emit(_json(report), args.out)
    return 0 if not report["failures"] else 1


# --------------------------------------------------------------------- parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liegrowth",
        description="Exact growth computations for metabelian and wreath-product Lie models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--d", type=int, default=2, help="number of generators (default 2)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    p_dims = sub.add_parser("dims", help="metabelian graded dimensions and growth")
    add_common(p_dims)
    p_dims.add_argument("--max-n", type=int, default=12)
    p_dims.set_defaults(fn=_cmd_dims)

    p_growth = sub.add_parser("growth", help="exact filtration growth of a model")
    add_common(p_growth)
    p_growth.add_argument("--max-n", type=int, default=12)
    p_growth.add_argument(
        "--mode",
        choices=growthmod.GROWTH_MODES,
        default=MODE_WPLUS,
    )
    p_growth.set_defaults(fn=_cmd_growth)

    p_fit = sub.add_parser("euler-fit", help="enveloping-series growth exponent")
    add_common(p_fit)
    p_fit.add_argument(
        "--mode",
        choices=(growthmod.MODE_METABELIAN, MODE_WPLUS),
        default=MODE_WPLUS,
    )
    p_fit.add_argument("--fit-n", type=int, default=2048, help="largest estimator point")
    p_fit.add_argument("--input", default=None, help="CSV of n,a_n rows instead of a model")
    p_fit.add_argument("--target", type=float, default=None)
    p_fit.add_argument("--tolerance", type=float, default=0.1)
    p_fit.add_argument("--dump-coeffs", default=None, help="also write n,b_n CSV here")
    p_fit.set_defaults(fn=_cmd_euler_fit)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    add_common(p_verify)
    p_verify.add_argument(
        "--suite",
        choices=("presentation", "towers", "embedding", "model-laws"),
        default="presentation",
    )
    p_verify.add_argument(
        "--mode",
        choices=(MODE_W, MODE_WPLUS),
        default=MODE_WPLUS,
    )
    p_verify.add_argument("--bound-s", type=int, default=5, help="relator family bound")
    p_verify.add_argument("--max-n", type=int, default=6, help="embedding degree bound")
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "d", 1) < 1:
        parser.error("--d must be >= 1")
    if getattr(args, "max_n", 1) < 1:
        parser.error("--max-n must be >= 1")
    if getattr(args, "fit_n", 1) < 1:
        parser.error("--fit-n must be >= 1")
    if getattr(args, "bound_s", 0) < 0:
        parser.error("--bound-s must be >= 0")
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
