"""Command-line application setup."""

import argparse
import sys
from collections.abc import Callable, Sequence
from typing import Optional

from credible_networks.cli.commands import report, score, solve
from credible_networks.cli.error_handler import handle_error
from credible_networks.cli.run_config import RunConfig
from credible_networks.config import settings
from credible_networks.domain.enums.data_format import DataFormat
from credible_networks.domain.enums.score_function import ScoreFunction
from credible_networks.logger import configure_logging, get_logger

logger = get_logger(__name__)

_COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "score": score.run,
    "solve": solve.run,
    "report": report.run,
}


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="input", required=True, help="input file")
    parser.add_argument(
        "--format",
        choices=[f.value for f in DataFormat],
        help="input format (default: from the file extension)",
    )
    parser.add_argument(
        "--fn",
        dest="function",
        choices=[f.value for f in ScoreFunction],
        default=ScoreFunction.BIC.value,
        help="scoring function (default: bic)",
    )
    parser.add_argument("--alpha", type=float, help="BDeu equivalent sample size")
    parser.add_argument("--epsilon", type=float, help="score window above OPT")
    parser.add_argument("--bf", type=float, help="score window as a Bayes factor (epsilon = ln BF)")
    parser.add_argument(
        "--rho", type=float, help="score window as a factor of OPT (epsilon = (rho - 1)|OPT|)"
    )
    parser.add_argument("--limit", type=int, help="counting limit on collected networks")
    parser.add_argument("--max-parents", type=int, help="parent-set cardinality cap")
    parser.add_argument("--out", help="output file (score) or directory (solve, report)")
    parser.add_argument("--jobs", type=int, help="worker threads for candidate generation")
    parser.add_argument("--seed", type=int, help="seed for randomised tooling")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        help="stderr log level",
    )


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser with the score, solve and report subcommands."""
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Enumerate every Bayesian network structure within epsilon of optimal.",
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_common_options(
        subparsers.add_parser("score", help="compute pruned local scores into a score file")
    )
    _add_common_options(
        subparsers.add_parser("solve", help="collect the credible set and its equivalence classes")
    )
    report_parser = subparsers.add_parser("report", help="deviation curve and Bayes factor sweep")
    _add_common_options(report_parser)
    report_parser.add_argument(
        "--sweep", type=float, nargs="*", default=[], metavar="BF", help="Bayes factors"
    )
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    options = {
        "input": args.input,
        "format": args.format,
        "function": args.function,
        "epsilon": args.epsilon,
        "bf": args.bf,
        "rho": args.rho,
        "max_parents": args.max_parents,
        "out": args.out,
        "seed": args.seed,
        "sweep": getattr(args, "sweep", []),
        "require_epsilon": args.command != "report",
    }
    # Unset flags fall back to settings defaults
    for name in ("alpha", "limit", "jobs"):
        value = getattr(args, name)
        if value is not None:
            options[name] = value
    return RunConfig(**options)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the command line.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.log_level:
        configure_logging(args.log_level)
    try:
        config = _run_config(args)
        logger.info("Command started", command=args.command, input=str(config.input))
        return _COMMANDS[args.command](config)
    except Exception as e:
        return handle_error(e)


if __name__ == "__main__":
    sys.exit(main())
