"""Command-line front end.

Five subcommands cover the library surface:

* ``optimize``  closed-form optimal coefficients per block count
* ``schedule``  integer iteration counts for a concrete database
* ``simulate``  run a schedule on either engine and report amplitudes
* ``compare``   cost table: blockwise search vs. random block pick
* ``bound``     query lower bounds vs. the achieved asymptotic cost

Reports go to stdout (or ``--output PATH``) in one of three formats:
``text`` (aligned, 6 significant digits), ``json`` (full double
precision, sorted keys), ``csv`` (RFC-4180 style, header row, LF line
endings).  Identical invocations produce byte-identical output; the
optional PGS_THREADS variable caps parallelism in future kernels and by
contract never changes any output.

Exit codes: 0 success, 2 invalid arguments, 3 no feasible schedule,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from .analysis import (
    comparison_table,
    lower_bound_queries,
    partial_search_coefficient,
)
from .errors import (
    BadKError,
    CapExceededError,
    InfeasibleError,
    PartialSearchError,
)
from .model import (
    Schedule,
    block_success_probability,
    item_success_probability,
    make_geometry,
    run_schedule,
)
from .optimizer import (
    asymptotic_optimum,
    asymptotic_schedule,
    optimal_exact_schedule,
)
from .statevector import save_state, sv_reduce, sv_run_schedule

__all__ = ["main", "parse_k_spec", "thread_budget"]


def thread_budget() -> int | None:
    """Optional parallelism cap from the PGS_THREADS variable.

    Today's kernels are single-threaded and deterministic, so the value
    never influences results; it is parsed so configured environments are
    accepted and future parallel kernels inherit the same contract.
    Unset, non-integer, or non-positive values mean "implementation
    default" (None).
    """
    raw = os.environ.get("PGS_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value >= 1 else None


def parse_k_spec(spec: str) -> list[float]:
    """Parse block-count specs like ``"4"``, ``"2..5"``, or ``"2..5,inf"``."""
    values: list[float] = []
    for token in spec.split(","):
        token = token.strip()
        if token == "inf":
            values.append(math.inf)
            continue
        if ".." in token:
            lo_text, _, hi_text = token.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError as exc:
                raise argparse.ArgumentTypeError(
                    f"bad block-count range {token!r}"
                ) from exc
            if hi < lo:
                raise argparse.ArgumentTypeError(
                    f"descending block-count range {token!r}"
                )
            values.extend(float(k) for k in range(lo, hi + 1))
            continue
        try:
            values.append(float(int(token)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad block count {token!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError(f"empty block-count spec {spec!r}")
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _fmt_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def _fmt_exact(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _jsonable(row: dict) -> dict:
    out = {}
    for key, value in row.items():
        if isinstance(value, float) and math.isinf(value):
            out[key] = "inf"
        else:
            out[key] = value
    return out


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _render_rows(fmt: str, cols: list[tuple[str, str]], rows: list[dict]) -> str:
    """Render row dicts as text table or CSV (JSON is handled per command)."""
    if fmt == "csv":
        sink = io.StringIO()
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow([display for display, _ in cols])
        for row in rows:
            writer.writerow([_fmt_exact(row[key]) for _, key in cols])
        return sink.getvalue()
    cells = [[_fmt_text(row[key]) for _, key in cols] for row in rows]
    widths = [
        max(len(display), max((len(row[i]) for row in cells), default=0))
        for i, (display, _) in enumerate(cols)
    ]
    lines = [
        "  ".join(d.ljust(w) for (d, _), w in zip(cols, widths)).rstrip()
    ]
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_pairs(fmt: str, pairs: list[tuple[str, object]]) -> str:
    """Render an ordered key/value report (text and CSV forms)."""
    if fmt == "csv":
        sink = io.StringIO()
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow([key for key, _ in pairs])
        writer.writerow([_fmt_exact(value) for _, value in pairs])
        return sink.getvalue()
    width = max(len(key) for key, _ in pairs)
    lines = [f"{key.ljust(width)}  {_fmt_text(value)}" for key, value in pairs]
    return "\n".join(lines) + "\n"


def cmd_optimize(args) -> str:
    rows = []
    for k in args.k:
        opt = asymptotic_optimum(k)
        rows.append(
            {
                "k": k if math.isinf(k) else int(k),
                "alpha": opt.alpha,
                "eta": opt.eta,
                "c": opt.c,
            }
        )
    if args.format == "json":
        payload = _jsonable(rows[0]) if len(rows) == 1 else [_jsonable(r) for r in rows]
        return _dump_json(payload)
    cols = [("K", "k"), ("alpha", "alpha"), ("eta", "eta"), ("c", "c")]
    return _render_rows(args.format, cols, rows)


def _schedule_row(mode: str, g, schedule: Schedule) -> dict:
    final = run_schedule(g, schedule)
    return {
        "mode": mode,
        "j1": schedule.j1,
        "j2": schedule.j2,
        "trailing_global": schedule.trailing_global,
        "queries": schedule.queries,
        "block_success": block_success_probability(final, g),
    }


def cmd_schedule(args) -> str:
    g = make_geometry(args.n, args.k)
    rows = [_schedule_row("asymptotic", g, asymptotic_schedule(g))]
    if args.exact:
        rows.append(
            _schedule_row("exact", g, optimal_exact_schedule(g, args.threshold))
        )
    if args.format == "json":
        payload = {"n": args.n, "k": args.k, "schedules": [_jsonable(r) for r in rows]}
        if args.exact:
            payload["threshold"] = args.threshold
        return _dump_json(payload)
    cols = [
        ("mode", "mode"),
        ("j1", "j1"),
        ("j2", "j2"),
        ("trailing_global", "trailing_global"),
        ("queries", "queries"),
        ("block_success", "block_success"),
    ]
    return _render_rows(args.format, cols, rows)


def cmd_simulate(args) -> str:
    g = make_geometry(args.n, args.k)
    schedule = Schedule(args.j1, args.j2, trailing_global=args.trailing)
    pairs: list[tuple[str, object]] = [
        ("n", args.n),
        ("k", args.k),
        ("engine", args.engine),
        ("j1", schedule.j1),
        ("j2", schedule.j2),
        ("trailing_global", schedule.trailing_global),
        ("queries", schedule.queries),
    ]
    if args.engine == "reduced":
        reduced = run_schedule(g, schedule)
    else:
        full = sv_run_schedule(g, args.target, schedule, cap=args.state_cap)
        reduced, coherence = sv_reduce(full)
        pairs.insert(3, ("target", args.target))
        pairs.append(("coherence_residual", coherence))
        if args.emit_state:
            save_state(full, args.emit_state)
    pairs.extend(
        [
            ("amp_target", reduced.amp_target),
            ("amp_ntt", reduced.amp_ntt),
            ("amp_nb", reduced.amp_nb),
            ("block_success", block_success_probability(reduced, g)),
            ("item_success", item_success_probability(reduced)),
        ]
    )
    if args.format == "json":
        return _dump_json(_jsonable(dict(pairs)))
    return _render_pairs(args.format, pairs)


def cmd_compare(args) -> str:
    rows = []
    for k in args.k:
        if math.isinf(k):
            raise BadKError("compare requires finite block counts")
        table_row = comparison_table(int(k), int(k))[0]
        rows.append(
            {
                "k": table_row.n_blocks,
                "s_coeff": table_row.s_coeff,
                "r_coeff": table_row.r_coeff,
                "p_interrupted": table_row.p_interrupted,
                "c": table_row.c,
                "note": table_row.note,
            }
        )
    if args.format == "json":
        return _dump_json([_jsonable(r) for r in rows])
    cols = [
        ("K", "k"),
        ("s_coeff", "s_coeff"),
        ("r_coeff", "r_coeff"),
        ("p_interrupted", "p_interrupted"),
        ("c", "c"),
        ("note", "note"),
    ]
    return _render_rows(args.format, cols, rows)


def cmd_bound(args) -> str:
    g = make_geometry(args.n, args.k)
    asymptotic_cost = partial_search_coefficient(args.k) * math.sqrt(args.n)
    rows = [
        {"variant": "basic", "queries": lower_bound_queries(g, "basic")},
        {"variant": "tighter", "queries": lower_bound_queries(g, "tighter")},
        {"variant": "alpha_exact", "queries": lower_bound_queries(g, "alpha_exact")},
        {"variant": "achieved", "queries": asymptotic_schedule(g).queries},
        {"variant": "achieved_asymptotic", "queries": asymptotic_cost},
    ]
    if args.format == "json":
        payload = {
            "n": args.n,
            "k": args.k,
            "bounds": {row["variant"]: row["queries"] for row in rows},
        }
        return _dump_json(payload)
    cols = [("variant", "variant"), ("queries", "queries")]
    return _render_rows(args.format, cols, rows)


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="report format (default: text, 6 significant digits)",
    )
    p.add_argument(
        "--output", metavar="PATH", default=None,
        help="write the report to PATH instead of stdout",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgsearch",
        description="Simulate and optimize blockwise (partial) Grover search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "optimize", help="closed-form optimal coefficients per block count"
    )
    p.add_argument(
        "--k", type=parse_k_spec, required=True, metavar="SPEC",
        help='block counts, e.g. "4", "2..5", "2..5,inf"',
    )
    _add_io_flags(p)
    p.set_defaults(handler=cmd_optimize)

    p = sub.add_parser(
        "schedule", help="integer iteration counts for a concrete database"
    )
    p.add_argument("--n", type=_positive_int, required=True, help="database size")
    p.add_argument("--k", type=_positive_int, required=True, help="block count")
    p.add_argument(
        "--exact", action="store_true",
        help="also brute-force the cheapest schedule meeting --threshold",
    )
    p.add_argument(
        "--threshold", type=float, default=0.99,
        help="block success required by --exact (default 0.99)",
    )
    _add_io_flags(p)
    p.set_defaults(handler=cmd_schedule)

    p = sub.add_parser("simulate", help="run one schedule and report amplitudes")
    p.add_argument("--n", type=_positive_int, required=True, help="database size")
    p.add_argument(
        "--k", type=_positive_int, default=2,
        help="block count (default 2)",
    )
    p.add_argument("--j1", type=_nonneg_int, default=0, help="global iterations")
    p.add_argument("--j2", type=_nonneg_int, default=0, help="local iterations")
    p.add_argument(
        "--trailing", action=argparse.BooleanOptionalAction, default=True,
        help="apply the final global iteration (default: yes)",
    )
    p.add_argument(
        "--engine", choices=("reduced", "full"), default="reduced",
        help="reduced 3-class dynamics or full state vector",
    )
    p.add_argument(
        "--target", type=_nonneg_int, default=0,
        help="target item index (full engine; default 0)",
    )
    p.add_argument(
        "--emit-state", metavar="PATH", default=None,
        help="write the final full state as a PGSV binary dump",
    )
    p.add_argument(
        "--state-cap", type=_positive_int, default=None,
        help="override the amplitude cap of the full engine (default 2**24)",
    )
    _add_io_flags(p)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser(
        "compare", help="cost table: blockwise search vs. random block pick"
    )
    p.add_argument(
        "--k", type=parse_k_spec, required=True, metavar="SPEC",
        help='block counts, e.g. "2..30"',
    )
    _add_io_flags(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser(
        "bound", help="query lower bounds vs. the achieved asymptotic cost"
    )
    p.add_argument("--n", type=_positive_int, required=True, help="database size")
    p.add_argument("--k", type=_positive_int, required=True, help="block count")
    _add_io_flags(p)
    p.set_defaults(handler=cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    thread_budget()  # parsed for the contract; output never depends on it
    if getattr(args, "emit_state", None) and args.engine != "full":
        parser.error("--emit-state requires --engine full")
    try:
        text = args.handler(args)
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (PartialSearchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0
