import argparse
import asyncio
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .config import SETTINGS, setup_environment
from .exceptions import InvalidInput, NumericFailure
from .graph.workflow import build_graph
from .models.run_config import Command, GridParameters, OutputFormat, RunConfig
from .models.state import PipelineState
from .models.statistics import Variant
from .utils.helpers import create_initial_state, print_results

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_INVALID = InvalidInput.exit_code
EXIT_NUMERIC = NumericFailure.exit_code


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=Path, default=Path("results"), help="Output directory")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value,
                        help="Table format; summaries are always JSON")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress at INFO level")


def _add_state(parser: argparse.ArgumentParser, default_stats: str) -> None:
    parser.add_argument("--stats", choices=[v.value for v in Variant], default=default_stats,
                        help="Exchange statistics")
    parser.add_argument("--alpha", type=float, default=0.0, help="Statistical parameter in [0, 1]")
    parser.add_argument("--asc", type=float, default=None, help="Scattering length (accepts inf and 0)")
    parser.add_argument("--kmax", type=float, default=None, help="Largest momentum tabulated")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(prog="anyon1d", description="Two-body anyons with zero-range interactions in 1D")
    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser(Command.BOUNDSTATE.value, help="Free-space bound state (a_sc > 0)")
    _add_state(bound, Variant.BOSONIC_ANYON.value)
    _add_common(bound)

    ho = commands.add_parser(Command.HO.value, help="Pair in a harmonic trap")
    _add_state(ho, Variant.BOSONIC_ANYON.value)
    ho.add_argument("--epsilon", type=float, default=None, help="Relative energy (instead of --asc)")
    ho.add_argument("--branch", type=int, default=0, help="Spectrum branch for --asc")
    ho.add_argument("--grid-coarse", type=int, default=SETTINGS["grid_coarse"], help="Coarse grid points")
    ho.add_argument("--grid-fine", type=int, default=SETTINGS["grid_fine"], help="Fine grid points near z = 0")
    ho.add_argument("--window", type=float, default=None, help="Half-width of the spatial grid")
    ho.add_argument("--sweep", action="store_true", help="Also tabulate Upsilon at k = kmax for alpha = 0.1..0.9")
    _add_common(ho)

    verify = commands.add_parser(Command.VERIFY.value, help="Run the property suite on the built-in corpus")
    verify.add_argument("--suite", action="append", default=[], choices=sorted(SETTINGS["tolerances"]),
                        help="Restrict to one property (repeatable)")
    verify.add_argument("--inject-sign-flip", action="store_true", help="Negative control for chiral_mirror")
    _add_common(verify)

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    fields = dict(
        command=command,
        output_dir=args.out,
        output_format=OutputFormat(args.format),
        verbose=args.verbose,
    )
    if command is Command.VERIFY:
        fields.update(suites=args.suite, inject_sign_flip=args.inject_sign_flip)
        return RunConfig(**fields)

    fields.update(statistics=Variant(args.stats), alpha=args.alpha, a_sc=args.asc, k_max=args.kmax)
    if command is Command.HO:
        fields.update(
            epsilon=args.epsilon,
            branch=args.branch,
            sweep=args.sweep,
            grid=GridParameters(window=args.window, n_coarse=args.grid_coarse, n_fine=args.grid_fine),
        )
    return RunConfig(**fields)


async def run_pipeline(config: RunConfig) -> PipelineState:
    """Run the graph for one command"""
    start_time = datetime.now()

    initial_state = create_initial_state(config)
    workflow = build_graph(config.command)
    final_state = await workflow.ainvoke(initial_state)

    final_state["processing_time"] = (datetime.now() - start_time).total_seconds()
    return final_state


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    try:
        setup_environment(args.verbose)
        config = build_config(args)
        results = asyncio.run(run_pipeline(config))
    except ValidationError as exc:
        print(f"anyon1d: invalid configuration\n{exc}", file=sys.stderr)
        return EXIT_INVALID
    except InvalidInput as exc:
        print(f"anyon1d: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericFailure as exc:
        logger.error("numeric failure", exc_info=True)
        print(f"anyon1d: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    print_results(results)
    return EXIT_PROPERTY_FAILURE if results["exit_code"] else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
