"""tlsecho command-line entry point

Parses the command line, configures logging, dispatches to the controller for the
requested command and writes its results.

Exit codes:
    0: success.
    1: user error (bad flags, invalid input values, malformed files).
    2: numerical failure (non-convergence, singular fits, failed pulse fits).

Usage:
    tlsecho model t2 --preset D3 --temp-k 0.09
"""
import logging
import sys
from typing import Optional, Sequence

from tlsecho.controller import COMMANDS, CommandResult
from tlsecho.model.errors import DomainError
from tlsecho.model.persistence import write_curve_csv, write_report, write_table_csv
from tlsecho.view import SummaryFormatter, build_parser

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

logger = logging.getLogger("tlsecho")


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def write_outputs(result: CommandResult, args) -> None:
    if args.out and not result.out_written:
        if args.format == "csv":
            if result.table is None:
                raise DomainError(f"'{result.command}' has no tabular result; use --format json.")
            result.files.append(write_table_csv(args.out, *result.table))
        else:
            result.files.append(write_report(args.out, result.command, result.payload))
    if args.emit_curve:
        if result.curve is None:
            raise DomainError(f"'{result.command}' produces no curve for --emit-curve.")
        result.files.append(write_curve_csv(args.emit_curve, *result.curve))


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits with 2 on usage errors; those are user errors here
        return 0 if exit_request.code in (0, None) else 1
    configure_logging(args.verbose, args.quiet)
    handler = COMMANDS[(args.group, args.leaf)]
    try:
        result = handler(args)
        write_outputs(result, args)
    except (ValueError, OSError) as error:
        logger.error("%s", error)
        return 1
    except RuntimeError as error:
        logger.error("Numerical failure: %s", error)
        return 2
    print(SummaryFormatter.format_result(result))
    return result.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
