"""Command-line front end: predictors, single runs, worst-case search, table.

Every command renders the same values in three formats (``human``, ``csv``,
``json``); csv and json share field names and ordering, so the two are
interchangeable for scripting.  Exit codes: 0 success, 1 usage or input
error, 2 internal invariant violation (a run that learned a wrong order).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path

from . import complexity, harness
from .ordering import STRATEGIES, CostModel, GroundTruthOrder, OrderingError

FORMATS = ("human", "csv", "json")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2

# Fields too large for native JSON numbers are emitted as decimal strings.
_STRING_IN_JSON = frozenset({"naive"})


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through _UsageError
    # so all usage and input errors share exit code 1.
    def error(self, message):
        raise _UsageError(message)


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(rows[0].keys())
    for row in rows:
        writer.writerow(_cell(value) for value in row.values())
    return buffer.getvalue()


def _render_json(rows: list[dict], single: bool) -> str:
    def convert(row: dict) -> dict:
        return {
            key: str(value) if key in _STRING_IN_JSON and value is not None else value
            for key, value in row.items()
        }

    payload = convert(rows[0]) if single else [convert(row) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def _human_pairs(row: dict) -> str:
    lines = []
    for key, value in row.items():
        if key == "naive":
            value = complexity.scientific(value)
        lines.append(f"{key}: {_cell(value)}")
    return "\n".join(lines) + "\n"


def _emit(rows: list[dict], fmt: str, single: bool = True) -> None:
    if fmt == "csv":
        sys.stdout.write(_render_csv(rows))
    elif fmt == "json":
        sys.stdout.write(_render_json(rows, single))
    else:
        for row in rows:
            sys.stdout.write(_human_pairs(row))


def _dashed(values) -> str:
    return "-".join(str(v) for v in values)


# --------------------------------------------------------------------------
# argument helpers
# --------------------------------------------------------------------------

def _positive_n(args) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be a positive integer, got {args.n}")
    return args.n


def _parse_ranks(text: str, where: str) -> list[int]:
    ranks = []
    for token in text.split(","):
        token = token.strip()
        try:
            ranks.append(int(token))
        except ValueError:
            raise ValueError(f"{where}: {token!r} is not an integer") from None
    return ranks


def _load_permutation(value: str, n: int) -> GroundTruthOrder:
    """Ranks by rule id, either inline ("2,0,1") or from a one-line file."""
    path = Path(value)
    if path.is_file():
        lines = path.read_text().splitlines()
        significant = [(i, line) for i, line in enumerate(lines, 1) if line.strip()]
        if not significant:
            raise ValueError(f"{value}: no permutation line found")
        if len(significant) > 1:
            lineno = significant[1][0]
            raise ValueError(f"{value}: line {lineno}: expected a single line of ranks")
        lineno, text = significant[0]
        ranks = _parse_ranks(text, f"{value}: line {lineno}")
    elif "," in value or value.strip().lstrip("-").isdigit():
        ranks = _parse_ranks(value, "--permutation")
    else:
        raise ValueError(f"permutation file not found: {value}")
    if len(ranks) != n:
        raise ValueError(f"permutation has {len(ranks)} ranks, expected {n}")
    return GroundTruthOrder(tuple(ranks))


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _cmd_predict(args) -> int:
    rep = complexity.report(_positive_n(args))
    row = {
        "n": rep.n,
        "s_n": rep.s_n,
        "b_n": rep.b_n,
        "b_f_n": rep.b_f_n,
        "log_factorial": rep.log_factorial,
        "speedup": rep.speedup,
        "naive": rep.naive,
    }
    _emit([row], args.format)
    return EXIT_OK


def _cmd_learn(args) -> int:
    n = _positive_n(args)
    model = CostModel.parse(args.cost_model)
    presentation = list(range(n))
    if args.adversarial:
        ground_truth, presentation = harness.adversarial_ground_truth(n, args.strategy)
        source = "adversarial"
    elif args.seed is not None:
        ground_truth = GroundTruthOrder.shuffled(n, random.Random(args.seed))
        source = f"seed={args.seed}"
    else:
        ground_truth = _load_permutation(args.permutation, n)
        source = "permutation"

    result = harness.run_trial(n, args.strategy, ground_truth, presentation, model, source)
    row = {
        "strategy": result.strategy,
        "n": result.n,
        "queries": result.queries,
        "steps": result.steps,
        "correct": result.correct,
        "cost_model": result.cost_model,
        "source": result.source,
    }
    _emit([row], args.format)
    if not result.correct:
        print("error: learned order does not match the ground truth", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def _cmd_worst_case(args) -> int:
    n = _positive_n(args)
    model = CostModel.parse(args.cost_model)
    if args.mode == harness.MODE_EXHAUSTIVE:
        report = harness.exhaustive_worst_case(n, args.strategy, model)
    else:
        report = harness.adversarial_worst_case(n, args.strategy, model)
    row = {
        "strategy": report.strategy,
        "n": report.n,
        "mode": report.mode,
        "cost_model": report.cost_model,
        "max_steps": report.max_steps,
        "ground_truth": _dashed(report.ground_truth_ranks),
        "presentation": _dashed(report.presentation),
    }
    _emit([row], args.format)
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = [
        {
            "n": row.n,
            "naive": row.naive,
            "s_n": row.s_n,
            "b_n": row.b_n,
            "speedup": row.speedup,
            "block_years": row.block_years,
            "binary_years": row.binary_years,
        }
        for row in harness.comparison_table()
    ]
    if args.format == "human":
        header = ("n", "naive", "s_n", "b_n", "speedup", "block_years", "binary_years")
        rendered = [
            (
                str(row["n"]),
                complexity.scientific(row["naive"]),
                str(row["s_n"]),
                str(row["b_n"]),
                f"{row['speedup']:.3f}",
                f"{row['block_years']:.2f}",
                f"{row['binary_years']:.2f}",
            )
            for row in rows
        ]
        widths = [
            max(len(header[i]), *(len(r[i]) for r in rendered))
            for i in range(len(header))
        ]
        for line in (header, *rendered):
            sys.stdout.write(
                "  ".join(cell.rjust(widths[i]) for i, cell in enumerate(line)) + "\n"
            )
    else:
        _emit(rows, args.format, single=False)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(
        prog="ruleorder",
        description="Learn a hidden total order over rules by counted pairwise queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="human")

    p_predict = sub.add_parser("predict", help="closed-form step predictors for one n")
    p_predict.add_argument("--n", type=int, required=True)
    add_format(p_predict)
    p_predict.set_defaults(func=_cmd_predict)

    p_learn = sub.add_parser("learn", help="run one learning trial")
    p_learn.add_argument("--n", type=int, required=True)
    p_learn.add_argument("--strategy", choices=STRATEGIES, required=True)
    instance = p_learn.add_mutually_exclusive_group(required=True)
    instance.add_argument("--seed", type=int, help="random ground truth from this seed")
    instance.add_argument(
        "--permutation",
        help="ranks by rule id, inline (e.g. 2,0,1) or a path to a one-line file",
    )
    instance.add_argument(
        "--adversarial", action="store_true",
        help="use the instance attaining the strategy's worst case",
    )
    p_learn.add_argument(
        "--cost-model",
        choices=[m.value for m in CostModel],
        default=CostModel.COMPARISONS_ONLY.value,
    )
    add_format(p_learn)
    p_learn.set_defaults(func=_cmd_learn)

    p_worst = sub.add_parser("worst-case", help="maximum step count for one n")
    p_worst.add_argument("--n", type=int, required=True)
    p_worst.add_argument("--strategy", choices=STRATEGIES, required=True)
    p_worst.add_argument(
        "--mode",
        choices=(harness.MODE_EXHAUSTIVE, harness.MODE_ADVERSARIAL),
        required=True,
    )
    p_worst.add_argument(
        "--cost-model",
        choices=[m.value for m in CostModel],
        default=CostModel.COMPARISONS_ONLY.value,
    )
    add_format(p_worst)
    p_worst.set_defaults(func=_cmd_worst_case)

    p_table = sub.add_parser("table", help="predictor comparison for n = 27 and 1000")
    add_format(p_table)
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (OrderingError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
