"""Command line interface.

Subcommands: assess (run a dataset), validate (check a dataset), demo (run
the bundled case). Exit codes: 0 success, 1 validation failure, 2 I/O or
parse failure, 3 degenerate computation.
"""

from __future__ import annotations

import argparse
import sys

from . import io as gio
from ._meta import VERSION
from .incidence import ZeroingMode
from .model import ValidationError
from .pipeline import RunConfig, load_bundled_case, run_assessment
from .ranking import DegenerateAssessmentError

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_DEGENERATE = 3

_ZEROING_CHOICES = [m.value for m in ZeroingMode]


def _decimals(value: str) -> int:
    n = int(value)
    if not 0 <= n <= 12:
        raise argparse.ArgumentTypeError("must lie in [0, 12]")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greyrisk",
        description="Rank assessed areas by dynamic multi-criteria risk.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    assess = sub.add_parser("assess", help="run an assessment on a dataset")
    assess.add_argument("--input", required=True, help="dataset file or csv-bundle directory")
    assess.add_argument(
        "--input-format", choices=["json", "csv-bundle"], default=None,
        help="dataset format (default: csv-bundle for directories, json otherwise)",
    )
    assess.add_argument("--format", choices=["text", "json", "csv"], default="text",
                        help="report format (default: text)")
    assess.add_argument("--output", default=None, help="report destination (default: stdout)")
    assess.add_argument("--trace-dir", default=None,
                        help="directory for intermediate-matrix CSVs")
    assess.add_argument("--zeroing", choices=_ZEROING_CHOICES,
                        default=ZeroingMode.FIRST_COLUMN.value,
                        help="re-basing applied before volume computation")
    assess.add_argument("--decimals", type=_decimals, default=2,
                        help="decimals in the text report, 0-12 (default: 2)")

    validate = sub.add_parser("validate", help="check a dataset without running it")
    validate.add_argument("--input", required=True)
    validate.add_argument("--input-format", choices=["json", "csv-bundle"], default=None)

    demo = sub.add_parser("demo", help="run the bundled three-area case dataset")
    demo.add_argument("--trace-dir", default=None,
                      help="directory for intermediate-matrix CSVs")

    return parser


def _cmd_assess(args) -> int:
    inp = gio.load_input(args.input, args.input_format)
    config = RunConfig(
        zeroing_mode=ZeroingMode(args.zeroing),
        report_decimals=args.decimals,
        emit_trace=args.trace_dir is not None,
        output_format=args.format,
    )
    report = run_assessment(inp, config)
    gio.emit_report(report, config, args.output)
    if args.trace_dir is not None:
        gio.write_trace(report.result.trace, args.trace_dir)
    return EXIT_OK


def _cmd_validate(args) -> int:
    inp = gio.load_input(args.input, args.input_format)
    print(
        f"OK: {inp.num_areas} areas, {inp.num_indices} indices, "
        f"{inp.num_periods} periods"
    )
    return EXIT_OK


def _cmd_demo(args) -> int:
    config = RunConfig(emit_trace=args.trace_dir is not None)
    report = run_assessment(load_bundled_case(), config)
    gio.emit_report(report, config)
    if args.trace_dir is not None:
        gio.write_trace(report.result.trace, args.trace_dir)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"assess": _cmd_assess, "validate": _cmd_validate, "demo": _cmd_demo}
    try:
        return handlers[args.command](args)
    except ValidationError as exc:
        print("validation failed:", file=sys.stderr)
        for err in exc.errors:
            print(f"  - {err}", file=sys.stderr)
        return EXIT_VALIDATION
    except (gio.InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DegenerateAssessmentError as exc:
        print(f"degenerate computation: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:  # bad configuration values
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
