"""Command-line entry point: solve, generate, verify and bench"""
import argparse
import logging
import sys
from typing import List, Optional, TextIO

from ..domain.exceptions import SolverError
from ..domain.models import GeneratorConfig, SolveStatus, TreeShape
from ..infrastructure.repositories.instance_repository import InstanceFileRepository, serialize_instance
from ..infrastructure.services.instance_generator import generate_instance
from ..use_cases.run_benchmark import BenchmarkUseCase
from ..use_cases.solve_instance import SolveInstanceUseCase
from ..use_cases.verify_solvers import VerifySolversUseCase
from config import get_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


class CliUsageError(Exception):
    """Bad command-line arguments"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise CliUsageError(f"{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    settings = get_config()
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--verbose", action="store_true", default=argparse.SUPPRESS, help="log at DEBUG level to stderr"
    )

    parser = _ArgumentParser(
        prog="treeinv",
        description="Bottleneck Hamming inverse optimal value and interdiction solvers on rooted trees",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    for name, summary in (
        ("solve-riovspt", "restricted inverse optimal value of the shortest root-leaf path"),
        ("solve-mcspit", "minimum-cost shortest-path interdiction"),
        ("solve-mspit", "maximum shortest path for a fixed cost budget"),
    ):
        p = sub.add_parser(name, help=summary, parents=[common])
        p.add_argument("path", help="instance document, '-' for stdin")
        p.add_argument("--scale", type=int, help="decimal scale overriding the document")
        p.add_argument("--output", help="write the result document to this file")
        if name == "solve-mspit":
            p.add_argument("--budget", required=True, help="bottleneck cost budget M")

    p = sub.add_parser("gen", help="generate a seeded random instance", parents=[common])
    p.add_argument("--n", type=int, required=True, help="node count")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--shape", choices=[s.value for s in TreeShape], default=TreeShape.RANDOM_ATTACHMENT.value)
    p.add_argument("--weight-max", type=int, default=6)
    p.add_argument("--cost-max", type=int, default=10)
    p.add_argument("--scale", type=int, default=settings.DEFAULT_SCALE)
    p.add_argument("--output", help="write the instance document to this file")

    p = sub.add_parser("verify", help="compare the solvers with the brute-force oracles", parents=[common])
    p.add_argument("--count", type=int, default=settings.VERIFY_COUNT)
    p.add_argument("--max-n", type=int, default=settings.VERIFY_MAX_N)
    p.add_argument("--seed", type=int, default=settings.VERIFY_SEED)

    p = sub.add_parser("bench", help="time both solvers on random trees", parents=[common])
    p.add_argument("--sizes", type=int, nargs="+", default=list(settings.BENCH_SIZES))
    p.add_argument("--trials", type=int, default=settings.BENCH_TRIALS)
    p.add_argument("--seed", type=int, default=settings.BENCH_SEED)
    p.add_argument("--json", action="store_true", help="print JSON instead of the text table")
    p.add_argument("--output", default=settings.OUTPUT_DIR, help="directory for bench_results.json/.csv")
    return parser


def _configure_logging(verbose: bool, stream: TextIO) -> None:
    settings = get_config()
    level = logging.DEBUG if verbose else getattr(logging, str(settings.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(level=level, format=settings.LOG_FORMAT, stream=stream, force=True)


def _emit(text: str, output: Optional[str], stdout: TextIO) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        stdout.write(text)


def run_cli(
    argv: List[str],
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    """Run one subcommand; 0 on success, 2 on an infeasible instance, 1 on any error"""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = _build_parser().parse_args(argv)
    except CliUsageError as e:
        stderr.write(f"{e}\n")
        return EXIT_ERROR
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_ERROR

    _configure_logging(getattr(args, "verbose", False), stderr)
    repository = InstanceFileRepository(stdin=stdin)

    try:
        if args.command.startswith("solve-"):
            use_case = SolveInstanceUseCase(repository=repository)
            if args.command == "solve-riovspt":
                result = use_case.solve_riovspt(args.path, args.scale)
            elif args.command == "solve-mcspit":
                result = use_case.solve_mcspit(args.path, args.scale)
            else:
                result = use_case.solve_mspit(args.path, args.budget, args.scale)
            _emit(result.to_document(), args.output, stdout)
            return EXIT_INFEASIBLE if result.status == SolveStatus.INFEASIBLE.value else EXIT_OK

        if args.command == "gen":
            instance = generate_instance(GeneratorConfig(
                node_count=args.n,
                seed=args.seed,
                weight_range=(0, args.weight_max),
                cost_range=(1, args.cost_max),
                shape=TreeShape(args.shape),
                regime_weights=tuple(get_config().GENERATOR_REGIME_WEIGHTS),
                scale=args.scale,
            ))
            _emit(serialize_instance(instance), args.output, stdout)
            return EXIT_OK

        if args.command == "verify":
            outcome = VerifySolversUseCase().run(args.count, args.max_n, args.seed)
            if outcome.passed:
                stdout.write(f"verify: {outcome.agreed}/{outcome.checked} instances agree\n")
                return EXIT_OK
            stderr.write(f"verify: disagreement after {outcome.checked} instances: {outcome.details[-1]}\n")
            stdout.write(serialize_instance(outcome.counterexample))
            return EXIT_ERROR

        use_case = BenchmarkUseCase()
        records = use_case.run(args.sizes, args.trials, args.seed)
        stdout.write(use_case.to_json(records) if args.json else use_case.format_table(records))
        if args.output:
            use_case.write_results(records, args.output)
        return EXIT_OK

    except (SolverError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        stderr.write(f"error: {e}\n")
        return EXIT_ERROR
