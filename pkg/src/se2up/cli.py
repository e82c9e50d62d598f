"""Command-line front end.

Subcommands and their outputs (``--output`` names a directory):

  verify       reports.json, summary.csv
               columns: index,family,params,x,label,lhs,rhs,slack,relative_slack,degenerate
  group-check  checks.csv  columns: check,value,max_error,tolerance,pass
  maximize     trace.json, trace.csv (iter,objective,grad_norm,step), summary.csv
  report       report.csv  columns: family,label,x,index,params,lhs,rhs,slack,
                           relative_slack,degenerate,y,trend

Exit codes: 0 success, 1 usage/I-O/parse error, 2 inequality or check
violation, 3 infeasible optimization problem.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from pathlib import Path

from . import checks
from .circle import FAMILIES, CircleFunction, make_family
from .errors import ConsistencyError, InfeasibleError
from .extremal import OptProblem, maximize, tent_boundary, tent_ratio
from .uncertainty import all_reports

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION, EXIT_INFEASIBLE = 0, 1, 2, 3
DEFAULT_TOL = 1e-12

VERIFY_COLUMNS = [
    "index", "family", "params", "x", "label",
    "lhs", "rhs", "slack", "relative_slack", "degenerate",
]
REPORT_COLUMNS = [
    "family", "label", "x", "index", "params",
    "lhs", "rhs", "slack", "relative_slack", "degenerate", "y", "trend",
]
# the parameter plotted on the x axis for each family
PRIMARY_PARAM = {"von_mises": "lam", "dirichlet": "K", "shifted_packet": "M0", "random": "N"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in columns])
    return buf.getvalue()


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8", newline="")


def _output_dir(args, names) -> Path:
    if not args.output:
        raise UsageError("--output: a directory is required")
    out = Path(args.output)
    targets = {(out / n).resolve() for n in names}
    for src in args.input or []:
        if Path(src).resolve() in targets or Path(src).resolve() == out.resolve():
            raise UsageError(f"--input {src} collides with an output path")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"--input {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input {path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _parse_params(text: str | None) -> dict:
    if text is None:
        return {}
    try:
        params = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params: invalid JSON ({exc.msg})") from exc
    if not isinstance(params, dict):
        raise UsageError("--params: expected a JSON object")
    return params


def _progress(args, message: str) -> None:
    if args.verbose:
        print(message, flush=True)


# -- verify -------------------------------------------------------------------


def _family_members(family: str, params: dict, seed: int):
    """Yield ``(params, function)`` for a family, sweeping list-valued parameters."""
    if family not in FAMILIES:
        raise UsageError(f"--family: unknown family {family!r}; choose from {sorted(FAMILIES)}")
    params = dict(params)
    count = params.pop("count", 1)
    if family == "random":
        params.setdefault("seed", seed)
    elif count != 1:
        raise UsageError("count: only the random family takes a draw count")
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise UsageError(f"count: expected a positive integer, got {count!r}")
    keys = sorted(params)
    grids = [params[k] if isinstance(params[k], list) else [params[k]] for k in keys]
    for values in itertools.product(*grids):
        point = dict(zip(keys, values))
        for draw in range(count):
            member = dict(point)
            if family == "random":
                member["seed"] = point["seed"] + draw
            try:
                yield member, make_family(family, **member)
            except (TypeError, ValueError) as exc:
                raise UsageError(f"--params: {exc}") from exc


def _file_members(paths):
    for path in paths:
        data = _load_json(path)
        if isinstance(data, dict) and "functions" in data:
            data = data["functions"]
        items = data if isinstance(data, list) else [data]
        if not items:
            raise UsageError(f"--input {path}: no functions")
        for k, item in enumerate(items):
            try:
                f = CircleFunction.from_json(item)
            except ValueError as exc:
                raise UsageError(f"--input {path}: function {k}: {exc}") from exc
            yield {"file": path, "item": k}, f


def cmd_verify(args) -> int:
    tol = DEFAULT_TOL if args.tol is None else args.tol
    if args.input and args.family:
        raise UsageError("give either --input or --family, not both")
    if args.family:
        members = _family_members(args.family, _parse_params(args.params), args.seed)
        family = args.family
    elif args.input:
        members = _file_members(args.input)
        family = "file"
    else:
        raise UsageError("verify needs --input or --family")
    out = _output_dir(args, ["reports.json", "summary.csv"])

    rows = []
    violations = 0
    for index, (params, f) in enumerate(members):
        primary = PRIMARY_PARAM.get(family)
        x = params[primary] if primary else index
        try:
            reports = all_reports(f)
        except ConsistencyError as exc:
            print(f"function {index}: {exc}", file=sys.stderr)
            violations += 1
            continue
        for rep in reports:
            if not rep.holds(tol):
                violations += 1
                print(f"violation: function {index} {rep.label}: slack {rep.slack!r}", file=sys.stderr)
            rows.append(
                {
                    "index": index,
                    "family": family,
                    "params": json.dumps(params, sort_keys=True),
                    "x": x,
                    **rep.to_json(),
                }
            )
        _progress(args, f"verified function {index}")

    _write(out / "reports.json", json.dumps(rows, indent=1) + "\n")
    _write(out / "summary.csv", _csv_text(VERIFY_COLUMNS, rows))
    if violations:
        print(f"{violations} violation(s) at tol {tol}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# -- group-check ----------------------------------------------------------------


def cmd_group_check(args) -> int:
    out = _output_dir(args, ["checks.csv"])
    results = checks.run_all(seed=args.seed)
    rows = []
    failed = 0
    for res in results:
        tol = res.tolerance if args.tol is None else args.tol
        ok = res.max_error <= tol
        failed += not ok
        rows.append(
            {"check": res.check, "value": res.value, "max_error": res.max_error,
             "tolerance": tol, "pass": ok}
        )
        _progress(args, f"{res.check}: {'pass' if ok else 'FAIL'}")
    _write(out / "checks.csv", _csv_text(["check", "value", "max_error", "tolerance", "pass"], rows))
    if failed:
        print(f"{failed} check(s) failed", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# -- maximize -------------------------------------------------------------------


def cmd_maximize(args) -> int:
    data = {}
    for path in args.input or []:
        loaded = _load_json(path)
        if not isinstance(loaded, dict):
            raise UsageError(f"--input {path}: expected a JSON object")
        data.update(loaded)
    data.update(_parse_params(args.params))
    if args.seed_given:
        data["seed"] = args.seed
    try:
        problem = OptProblem.from_json(data)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = _output_dir(args, ["trace.json", "trace.csv", "summary.csv"])
    try:
        trace = maximize(problem)
    except InfeasibleError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INFEASIBLE
    boundary = ""
    if problem.N == 1 and problem.min_T_norm < 1:
        boundary = tent_ratio(tent_boundary(problem.min_T_norm))
    summary = {
        "N": problem.N,
        "min_T_norm": problem.min_T_norm,
        "seed": problem.seed,
        "iterations": trace.records[-1].iteration,
        "converged": trace.converged,
        "stop_reason": trace.stop_reason,
        "final_ratio": trace.final_ratio,
        "tent_boundary_ratio": boundary,
    }
    _write(out / "trace.json", json.dumps(trace.to_json(), indent=1) + "\n")
    _write(out / "trace.csv", trace.to_csv())
    _write(out / "summary.csv", _csv_text(list(summary), [summary]))
    _progress(args, f"final ratio {trace.final_ratio!r} ({trace.stop_reason})")
    return EXIT_OK


# -- report ---------------------------------------------------------------------


def _report_rows(path: str):
    data = _load_json(path)
    if not isinstance(data, list):
        raise UsageError(f"--input {path}: expected the JSON array written by verify")
    for k, item in enumerate(data):
        try:
            yield {
                "family": str(item["family"]),
                "label": str(item["label"]),
                "x": item["x"],
                "index": int(item["index"]),
                "params": item.get("params", ""),
                "lhs": float(item["lhs"]),
                "rhs": float(item["rhs"]),
                "slack": float(item["slack"]),
                "relative_slack": float(item["relative_slack"]),
                "degenerate": bool(item["degenerate"]),
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"--input {path}: entry {k}: bad or missing field {exc}") from exc


def cmd_report(args) -> int:
    if not args.input:
        raise UsageError("report needs at least one --input")
    out = _output_dir(args, ["report.csv"])
    rows = [row for path in args.input for row in _report_rows(path)]
    rows.sort(key=lambda r: (r["family"], r["label"]))
    previous = {}
    for row in rows:
        row["y"] = row["relative_slack"]
        key = (row["family"], row["label"])
        last = previous.get(key)
        if last is None or last[0] == row["x"]:
            row["trend"] = ""
        else:
            row["trend"] = "up" if row["y"] > last[1] else "down" if row["y"] < last[1] else "flat"
        previous[key] = (row["x"], row["y"])
    _write(out / "report.csv", _csv_text(REPORT_COLUMNS, rows))
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="se2up",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    commands = {
        "verify": (cmd_verify, "evaluate every inequality on a set of functions"),
        "group-check": (cmd_group_check, "group, algebra and representation property suites"),
        "maximize": (cmd_maximize, "maximize the combined-inequality ratio on a band"),
        "report": (cmd_report, "merge verify outputs into one plot-ready CSV"),
    }
    for name, (func, help_text) in commands.items():
        p = sub.add_parser(name, help=help_text, description=__doc__,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        p.add_argument("--input", action="append", help="input JSON file (repeatable)")
        p.add_argument("--output", help="output directory")
        p.add_argument("--tol", type=float, help="tolerance override")
        p.add_argument("--seed", type=int, help="random seed (default 0)")
        p.add_argument("--family", help=f"function family: {', '.join(sorted(FAMILIES))}")
        p.add_argument("--params", help='family or problem parameters as JSON, e.g. \'{"K": 2}\'')
        p.add_argument("--verbose", action="store_true", help="progress on stdout")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.tol is not None and not args.tol > 0:
            raise UsageError("--tol: must be positive")
        args.seed_given = args.seed is not None
        if args.seed is None:
            args.seed = 0
        return args.func(args)
    except UsageError as exc:
        print(f"se2up: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"se2up: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
