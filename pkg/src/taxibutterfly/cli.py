"""Command-line front end.

Exit codes: 0 holds, 1 fails, 2 degenerate, 3 invalid input or file error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .butterfly import ButterflyTrace, DegenerateKind, Outcome, analyze
from .configfile import ConfigError, format_config, load_config
from .explorer import TABLE1_NOTES, SampleSpec, parse_mode, run_campaign, table1_corpus
from .figures import render_svg
from .numeric import format_rational

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_DEGENERATE = 2
EXIT_INVALID = 3

COUNTEREXAMPLE_OUTCOMES = (
    Outcome.FAILS_NO_HYPOTHESIS,
    Outcome.PAPER_HYPOTHESIS_BUT_FAILS,
    Outcome.HOLDS_UNEXPLAINED,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _verify(args, out) -> int:
    problem = load_config(args.file)
    result = analyze(problem)
    trace = result.trace
    if not isinstance(trace, ButterflyTrace) and trace.kind is DegenerateKind.VALIDATION_FAILURE:
        raise ConfigError(f"invalid configuration: {trace.detail}")
    lines = [("M", trace.M), ("B", trace.B), ("D", trace.D)]
    if isinstance(trace, ButterflyTrace):
        lines += [
            ("X", trace.X),
            ("Y", trace.Y),
            ("midXY", trace.midXY),
            ("deviation", format_rational(trace.deviation)),
            ("holds", _flag(trace.holds)),
        ]
    else:
        lines.append(("degenerate", trace.kind.value))
    report = result.report
    for key, attr in (
        ("primary_hypothesis", "primary_satisfied"),
        ("alternate_hypothesis", "alternate_satisfied"),
        ("full_symmetry", "fully_symmetric"),
    ):
        lines.append((key, "n/a" if report is None else _flag(getattr(report, attr))))
    lines.append(("classification", result.outcome.value))
    for key, value in lines:
        print(f"{key} = {value}", file=out)
    if not isinstance(trace, ButterflyTrace):
        return EXIT_DEGENERATE
    return EXIT_HOLDS if trace.holds else EXIT_FAILS


def _table1(args, out) -> int:
    all_fail = True
    for i, (problem, note) in enumerate(zip(table1_corpus(), TABLE1_NOTES), 1):
        result = analyze(problem)
        trace = result.trace
        if not isinstance(trace, ButterflyTrace):
            print(f"row {i}: degenerate = {trace}", file=out)
            all_fail = False
            continue
        all_fail &= not trace.holds
        print(
            f"row {i}: P = {problem.P}, Q = {problem.Q}, A = {problem.A}, C = {problem.C}, "
            f"deviation = {format_rational(trace.deviation)}, holds = {_flag(trace.holds)}, "
            f"classification = {result.outcome.value}  # {note}",
            file=out,
        )
    return 0 if all_fail else 1


def _search(args, out) -> int:
    try:
        mode, axis = parse_mode(args.mode)
        spec = SampleSpec(
            geometry=args.geometry,
            mode=mode,
            axis=axis,
            count=args.count,
            seed=args.seed,
            max_denominator=args.max_den,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    stats = run_campaign(spec, workers=args.workers)
    print(f"geometry = {spec.geometry}", file=out)
    print(f"mode = {spec.mode_label}", file=out)
    print(f"count = {spec.count}", file=out)
    print(f"seed = {spec.seed}", file=out)
    print(f"max_den = {spec.max_denominator}", file=out)
    for outcome in Outcome:
        print(f"{outcome.value} = {stats.counts[outcome]}", file=out)
    print(f"generation_failures = {len(stats.failures)}", file=out)
    if args.emit_counterexamples:
        os.makedirs(args.emit_counterexamples, exist_ok=True)
        written = 0
        for outcome in COUNTEREXAMPLE_OUTCOMES:
            for index, problem in stats.exemplars[outcome]:
                name = f"{outcome.value}-{index:06d}.cfg"
                comment = f"{outcome.value}: sample {index}, seed {spec.seed}, mode {spec.mode_label}"
                with open(os.path.join(args.emit_counterexamples, name), "w", encoding="utf-8") as fh:
                    fh.write(format_config(problem, comment))
                written += 1
        print(f"emitted = {written}", file=out)
    return 0


def _figure(args, out) -> int:
    problem = load_config(args.file)
    result = analyze(problem)
    if not isinstance(result.trace, ButterflyTrace) and result.trace.kind is DegenerateKind.VALIDATION_FAILURE:
        raise ConfigError(f"invalid configuration: {result.trace.detail}")
    svg = render_svg(problem, result.trace)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taxibutterfly", description="Butterfly configurations on taxicab and Euclidean circles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="trace one configuration file")
    p.add_argument("file")
    p.set_defaults(func=_verify)

    p = sub.add_parser("table1", help="rerun the five published failing configurations")
    p.set_defaults(func=_table1)

    p = sub.add_parser("search", help="seeded sampling campaign")
    p.add_argument("--geometry", choices=("taxicab", "euclid"), default="taxicab")
    p.add_argument("--mode", default="random",
                   help="random | center | axis_symmetric[:AXIS] | paper_hypothesis_only_diagonal[:AXIS]")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-den", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-counterexamples", metavar="DIR")
    p.set_defaults(func=_search)

    p = sub.add_parser("figure", help="draw a configuration as SVG")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_figure)
    return parser


def run_cli(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, ConfigError, OSError) as exc:
        print(f"error: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}", file=err)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
