"""Command-line front end.

Subcommands
-----------
compute   log F at one r (Nystrom determinant with a half-n error estimate)
asymp     terms of the large-gap expansion at one r or over a range
compare   determinant against expansion over an r range, with fitted C
sweep     determinant over an r range, optionally on several threads
verify    identity checks, one JSON line per report

Exit codes: 0 ok, 1 usage, 2 numerical failure, 3 verification failure.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
import csv
import json
import math
import os
import sys

import numpy as np

from .asymptotics import (
    LOG_R_COEFFICIENT,
    ZETA_PRIME_M1,
    asymp_log_F,
    one_interval_asymp,
)
from .errors import DomainError, NumericalError
from .fredholm import log_F_one_interval, log_F_two_interval
from .identities import DEFAULT_THRESHOLD, SUITES, run_suite
from .surface import GapConfig, build_surface

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3

COMPUTE_COLUMNS = ("r", "log_F", "nodes", "T", "gap")
ASYMP_COLUMNS = ("r", "c_r3", "log_r_term", "theta_term", "nu", "C", "value")
COMPARE_COLUMNS = ("r", "log_F_numeric", "c_r3", "log_r_term", "theta_term", "C",
                   "residual", "residual_r")
# one interval: the error term is O(r^(-3/2)), so the last column scales by r^(3/2)
COMPARE_ONE_COLUMNS = COMPARE_COLUMNS[:-1] + ("residual_r32",)
REPORT_COLUMNS = ("name", "residual", "threshold", "trials", "seed", "pass")


class UsageError(Exception):
    """Bad flags or flag values (exit 1)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is reserved for numerical failures
    def error(self, message):
        raise UsageError(message)


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.15g}"
    if v is None:
        return ""
    return str(v)


def _json_value(v):
    if isinstance(v, (float, np.floating)):
        v = float(f"{float(v):.15g}")
        return v if math.isfinite(v) else None
    if isinstance(v, np.integer):
        return int(v)
    return v


def emit(rows, columns, fmt, stream):
    """Write dict rows as CSV (with header) or JSON lines."""
    if fmt == "csv":
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row[c]) for c in columns])
    else:
        for row in rows:
            stream.write(json.dumps({c: _json_value(row[c]) for c in columns}) + "\n")


def parse_r_range(text):
    """``"3,3.5,4"`` or ``"start:stop:num"`` (inclusive, like ``numpy.linspace``)."""
    try:
        if ":" in text:
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError
            start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
            if num < 1:
                raise ValueError
            vals = np.linspace(start, stop, num)
        else:
            vals = np.array([float(t) for t in text.split(",") if t.strip()])
    except ValueError:
        raise UsageError(f"cannot parse --r-range {text!r}; use a,b,c or start:stop:num") from None
    if vals.size == 0:
        raise UsageError("--r-range is empty")
    if not np.all(np.isfinite(vals)) or np.any(vals <= 0):
        raise UsageError("all r values must be positive and finite")
    if np.any(np.diff(vals) <= 0):
        raise UsageError("--r-range must be strictly increasing")
    return [float(v) for v in vals]


def build_parser():
    p = _Parser(prog="airygap", description="Airy-kernel gap probabilities on two intervals.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def common(sp, r_mode):
        g = sp.add_argument_group("gap")
        g.add_argument("--x1", type=float, default=-1.0)
        g.add_argument("--x2", type=float, default=-2.0)
        g.add_argument("--x3", type=float, default=-3.0)
        if r_mode in ("one", "either"):
            g.add_argument("--r", type=float, help="gap scale")
        if r_mode in ("range", "either"):
            g.add_argument("--r-range", dest="r_range",
                           help="comma list or start:stop:num")
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", help="file path (default stdout)")

    def det_flags(sp):
        sp.add_argument("--nodes", type=int, default=120, help="nodes per interval")
        sp.add_argument("--one-interval", action="store_true",
                        help="use the single gap (-r, +inf) instead")

    sp = sub.add_parser("compute", help="Nystrom determinant at one r")
    common(sp, "one")
    det_flags(sp)

    sp = sub.add_parser("asymp", help="large-gap expansion terms")
    common(sp, "either")
    sp.add_argument("--C", type=float, help="constant term to include in value")
    sp.add_argument("--one-interval", action="store_true")

    sp = sub.add_parser("compare", help="determinant vs expansion over an r range")
    common(sp, "range")
    det_flags(sp)
    sp.add_argument("--C", type=float, help="use this C instead of fitting it")

    sp = sub.add_parser("sweep", help="determinant over an r range")
    common(sp, "range")
    det_flags(sp)
    sp.add_argument("--workers", type=int, default=1, help="threads (output order is fixed)")

    sp = sub.add_parser("verify", help="run identity checks")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, help="configurations per check")
    sp.add_argument("--format", choices=("csv", "json"), default="json")
    sp.add_argument("--output", help="file path (default stdout)")
    return p


def _config(args):
    try:
        return GapConfig(args.x1, args.x2, args.x3)
    except DomainError as e:
        raise UsageError(str(e)) from None


def _require_r(args):
    if args.r is None:
        raise UsageError("--r is required")
    if not (math.isfinite(args.r) and args.r > 0):
        raise UsageError(f"need r > 0, got r = {args.r}")
    return args.r


def _check_nodes(args):
    if args.nodes < 20:
        raise UsageError(f"need --nodes >= 20, got {args.nodes}")


def _det_row(cfg, r, n, one_interval):
    res = log_F_one_interval(r, n) if one_interval else log_F_two_interval(cfg, r, n)
    return {"r": r, "log_F": res.log_F, "nodes": res.nodes_per_interval,
            "T": res.truncation_T, "gap": res.convergence_gap}


def cmd_compute(args):
    cfg = None if args.one_interval else _config(args)
    r = _require_r(args)
    _check_nodes(args)
    return [_det_row(cfg, r, args.nodes, args.one_interval)], COMPUTE_COLUMNS


def _one_interval_terms(r):
    return {"r": r, "c_r3": -(r**3) / 12.0, "log_r_term": -math.log(r) / 8.0,
            "theta_term": 0.0, "nu": None,
            "C": ZETA_PRIME_M1 + math.log(2.0) / 24.0, "value": one_interval_asymp(r)}


def cmd_asymp(args):
    if (args.r is None) == (args.r_range is None):
        raise UsageError("give exactly one of --r and --r-range")
    rs = [_require_r(args)] if args.r_range is None else parse_r_range(args.r_range)
    rows = []
    if args.one_interval:
        rows = [_one_interval_terms(r) for r in rs]
    else:
        sq = build_surface(_config(args))
        for r in rs:
            a = asymp_log_F(sq, r, args.C)
            rows.append({"r": r, "c_r3": a.c_r3, "log_r_term": a.log_r_term,
                         "theta_term": a.theta_term, "nu": a.nu, "C": a.C, "value": a.value})
    return rows, ASYMP_COLUMNS


def _range(args, minimum):
    if args.r_range is None:
        raise UsageError("--r-range is required")
    rs = parse_r_range(args.r_range)
    if len(rs) < minimum:
        raise UsageError(f"--r-range needs at least {minimum} points, got {len(rs)}")
    return rs


def cmd_compare(args):
    rs = _range(args, 3)
    _check_nodes(args)
    rows = []
    if args.one_interval:
        for r in rs:
            t = _one_interval_terms(r)
            num = log_F_one_interval(r, args.nodes).log_F
            res = num - t["value"]
            rows.append({"r": r, "log_F_numeric": num, "c_r3": t["c_r3"],
                         "log_r_term": t["log_r_term"], "theta_term": 0.0, "C": t["C"],
                         "residual": res, "residual_r32": res * r**1.5})
        return rows, COMPARE_ONE_COLUMNS
    sq = build_surface(_config(args))
    terms = [asymp_log_F(sq, r) for r in rs]
    nums = [log_F_two_interval(sq.cfg, r, args.nodes).log_F for r in rs]
    diffs = np.array(nums) - np.array([t.value for t in terms])
    C = float(diffs.mean()) if args.C is None else float(args.C)
    for r, t, num, d in zip(rs, terms, nums, diffs):
        res = d - C
        rows.append({"r": r, "log_F_numeric": num, "c_r3": t.c_r3, "log_r_term": t.log_r_term,
                     "theta_term": t.theta_term, "C": C, "residual": res, "residual_r": res * r})
    return rows, COMPARE_COLUMNS


def cmd_sweep(args):
    rs = _range(args, 1)
    _check_nodes(args)
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    cfg = None if args.one_interval else _config(args)

    def one(r):
        return _det_row(cfg, r, args.nodes, args.one_interval)

    if args.workers == 1:
        rows = [one(r) for r in rs]
    else:
        with ThreadPoolExecutor(args.workers) as ex:
            rows = list(ex.map(one, rs))
    return rows, COMPUTE_COLUMNS


def _threshold_override():
    raw = os.environ.get("GAP_TOL")
    if raw is None or raw.strip() == "":
        return None
    try:
        val = float(raw)
    except ValueError:
        raise UsageError(f"GAP_TOL must be a number, got {raw!r}") from None
    if not val > 0:
        raise UsageError("GAP_TOL must be positive")
    return val


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; valid: {', '.join(SUITES)}")
    if args.trials is not None and args.trials < 1:
        raise UsageError("--trials must be positive")
    reports = run_suite(args.suite, seed=args.seed, trials=args.trials,
                        threshold=_threshold_override())
    return [r.to_dict() for r in reports], REPORT_COLUMNS


COMMANDS = {
    "compute": cmd_compute,
    "asymp": cmd_asymp,
    "compare": cmd_compare,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        rows, columns = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"airygap: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"airygap: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, ArithmeticError, np.linalg.LinAlgError) as e:
        print(f"airygap: numerical failure: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except SystemExit as e:  # --help
        return int(e.code or 0)

    if args.output:
        with open(args.output, "w", newline="") as fh:
            emit(rows, columns, args.format, fh)
    else:
        emit(rows, columns, args.format, sys.stdout)
    if args.command == "verify" and not all(r["pass"] for r in rows):
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
