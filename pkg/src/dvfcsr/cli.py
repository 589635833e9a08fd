"""Command line interface.

Subcommands: run, analyze, period, search, verify-tables. Outputs are
deterministic (no timestamps; the version banner appears only under
--banner) so identical invocations produce byte-identical bytes.

Exit codes: 0 success, 2 parse or validation error, 3 memory left the
configured bound, 4 period undetermined within the horizon, 5 bundled
table verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources

from . import __version__
from .analysis import periodicity_report
from .connection import analyze
from .errors import DvfcsrError, MemoryDivergedError, UndeterminedPeriodError
from .register import run
from .search import SearchConfig, enumerate_candidates, verify_norm_table
from .serde import (
    analysis_to_dict,
    dumps,
    ground_from_dict,
    period_report_to_dict,
    spec_from_dict,
    state_from_dict,
    trace_from_csv,
    trace_to_csv,
)


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "banner", False):
        text = f"# dvfcsr {__version__}\n" + text
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_register(args: argparse.Namespace):
    spec = spec_from_dict(_load_json(args.spec))
    state = state_from_dict(_load_json(args.state), spec)
    return spec, state


def cmd_run(args: argparse.Namespace) -> int:
    spec, state = _load_register(args)
    res = run(spec, state, args.steps, memory_bound=args.memory_bound)
    _emit(args, trace_to_csv(spec.ground, res.outputs, res.memories))
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    spec = spec_from_dict(_load_json(args.spec))
    _emit(args, dumps(analysis_to_dict(analyze(spec))))
    return 0


def _period_table(rep) -> str:
    rows = [
        ("norm_abs", str(rep.norm_abs)),
        ("order", str(rep.order)),
        ("horizon", str(rep.horizon)),
        ("total_period", str(rep.total_period)),
        ("divisibility_ok", "yes" if rep.divisibility_ok else "no"),
        ("criterion_ok", "yes" if rep.criterion_ok else "no"),
    ]
    for k, row in enumerate(rep.sub_periods):
        for j, (t, ell) in enumerate(row):
            rows.append((f"sub_{k}_{j}", f"transient={t} period={ell}"))
    for j, (t, ell) in enumerate(rep.coord_periods):
        rows.append((f"coord_{j}", f"transient={t} period={ell}"))
    width = max(len(label) for label, _ in rows)
    return "".join(f"{label:<{width}}  {value}\n" for label, value in rows)


def cmd_period(args: argparse.Namespace) -> int:
    spec, state = _load_register(args)
    rep = periodicity_report(spec, state, horizon=args.horizon, memory_bound=args.memory_bound)
    if args.format == "json":
        _emit(args, dumps(period_report_to_dict(rep)))
    else:
        _emit(args, _period_table(rep))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    g = ground_from_dict(_load_json(args.ground))
    bounds = tuple(tuple(args.bound for _ in range(g.n)) for _ in range(g.d))
    cfg = SearchConfig(
        ground=g,
        bounds=bounds,
        include_negative=args.negative,
        require_prime=args.prime_only,
        require_max_period=args.max_period_only,
        limit=args.limit,
    )
    cands = list(enumerate_candidates(cfg))
    slots = [(k, j) for j in range(g.n) for k in range(g.d)]
    if args.format == "json":
        recs = [
            {
                "q_tilde": [list(row) for row in c.q_tilde],
                "norm_signed": c.norm_signed,
                "norm_abs": c.norm_abs,
                "prime": c.prime,
                "order": c.order,
                "max_period": c.max_period,
                "criterion_ok": c.criterion_ok,
            }
            for c in cands
        ]
        _emit(args, dumps(recs))
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"qt_{k}_{j}" for (k, j) in slots]
                    + ["norm_signed", "norm_abs", "prime", "order", "max_period", "criterion"])
    for c in cands:
        writer.writerow(
            [str(c.q_tilde[k][j]) for (k, j) in slots]
            + [
                str(c.norm_signed),
                str(c.norm_abs),
                "1" if c.prime else "0",
                "" if c.order is None else str(c.order),
                "" if c.max_period is None else str(c.max_period),
                "1" if c.criterion_ok else "0",
            ]
        )
    _emit(args, buf.getvalue())
    return 0


def cmd_verify_tables(args: argparse.Namespace) -> int:
    lines = []
    ok = True

    report = verify_norm_table()
    for pos, row in enumerate(report.rows, start=1):
        status = []
        if not row.det_matches:
            status.append(f"det MISMATCH (computed {abs(row.det_signed)})")
            ok = False
        if not row.template_matches_general:
            status.append("template MISMATCH")
            ok = False
        if not status:
            status.append("ok")
        status.append("prime" if row.prime else "composite")
        lines.append(
            f"norm table row {pos:02d}: N'={row.listed:<5d} grid={row.grid} {', '.join(status)}"
        )
    n_prime = sum(1 for r in report.rows if r.prime)
    lines.append(
        f"norm table: {sum(1 for r in report.rows if r.det_matches and r.template_matches_general)}"
        f"/{len(report.rows)} rows verified, {n_prime} prime, {len(report.rows) - n_prime} composite"
    )

    fixtures = resources.files("dvfcsr").joinpath("fixtures")
    spec = spec_from_dict(json.loads(fixtures.joinpath("reg151_spec.json").read_text(encoding="utf-8")))
    state = state_from_dict(json.loads(fixtures.joinpath("reg151_state.json").read_text(encoding="utf-8")), spec)
    want = trace_from_csv(fixtures.joinpath("trace_151.csv").read_text(encoding="utf-8"))
    steps = len(next(iter(want.values())))
    res = run(spec, state, steps)
    got = trace_from_csv(trace_to_csv(spec.ground, res.outputs, res.memories))
    for label in want:
        if got.get(label) == want[label]:
            lines.append(f"trace {label}: {steps}/{steps} columns exact")
        else:
            ok = False
            diffs = [i for i, (a, b) in enumerate(zip(got.get(label, []), want[label])) if a != b]
            lines.append(f"trace {label}: MISMATCH at columns {diffs[:8]}")

    lines.append("verify-tables: PASS" if ok else "verify-tables: FAIL")
    _emit(args, "".join(line + "\n" for line in lines))
    return 0 if ok else 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvfcsr",
        description="Vectorial feedback-with-carry shift registers: simulate, analyze, search.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--banner", action="store_true", help="prepend a version header line")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", parents=[common], help="clock a register and print the trace CSV")
    p_run.add_argument("--spec", required=True, help="register spec JSON file")
    p_run.add_argument("--state", required=True, help="register state JSON file")
    p_run.add_argument("--steps", type=int, required=True, help="number of trace columns")
    p_run.add_argument("--memory-bound", type=int, default=None, help="abort if |memory| exceeds this")
    p_run.set_defaults(func=cmd_run)

    p_an = sub.add_parser("analyze", parents=[common], help="connection element, matrices, norms as JSON")
    p_an.add_argument("--spec", required=True, help="register spec JSON file")
    p_an.set_defaults(func=cmd_analyze)

    p_per = sub.add_parser("period", parents=[common], help="observed periods vs norm-order bounds")
    p_per.add_argument("--spec", required=True, help="register spec JSON file")
    p_per.add_argument("--state", required=True, help="register state JSON file")
    p_per.add_argument("--horizon", type=int, default=None, help="trace columns to observe")
    p_per.add_argument("--memory-bound", type=int, default=None, help="abort if |memory| exceeds this")
    p_per.add_argument("--format", choices=("table", "json"), default="table")
    p_per.set_defaults(func=cmd_period)

    p_se = sub.add_parser("search", parents=[common], help="enumerate connection grids and their moduli")
    p_se.add_argument("--ground", required=True, help="ground parameters JSON file")
    p_se.add_argument("--bound", type=int, required=True, help="magnitude bound for every grid slot")
    p_se.add_argument("--negative", action="store_true", help="include negative slot values")
    p_se.add_argument("--prime-only", action="store_true", help="keep only prime |N'|")
    p_se.add_argument("--max-period-only", action="store_true", help="keep only maximal-period candidates")
    p_se.add_argument("--limit", type=int, default=None, help="stop after this many candidates")
    p_se.add_argument("--format", choices=("csv", "json"), default="csv")
    p_se.set_defaults(func=cmd_search)

    p_vt = sub.add_parser("verify-tables", parents=[common], help="recompute the bundled reference tables")
    p_vt.set_defaults(func=cmd_verify_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message; 2 on bad args
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except MemoryDivergedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except UndeterminedPeriodError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DvfcsrError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
