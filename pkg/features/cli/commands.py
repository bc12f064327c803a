"""
Command Line
------------
argparse front end. Results go to stdout, diagnostics to stderr.

Exit codes:
    0  success, no counterexample
    1  counterexample found (reported before exiting) or internal logic error
    2  usage error
    3  arithmetic overflow
    4  invalid domain input
"""
import argparse
import logging
import sys
from typing import IO, List, Optional

from errors import InternalLogicError, MeasureViolation, NumberTheoryError, UsageError
from features.diophantus20 import DescentState, RefutationStage, refute
from features.numeric import make_rational
from features.propertySuite import SAMPLERS, run_properties
from features.pythagoras import Triple, circle_point, classify, enumerate_triples
from utils import configure_logging, load_yaml_config, parse_nat

from .parallel import run_verification
from .report import Task, emit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3
EXIT_DOMAIN = 4

FORMATS = ("json", "text")
VERIFY_TASKS = ("dio20", "flt4", "pq-square", "right-triangle")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
SEED_LIMIT = 2 ** 64


def load_config() -> dict:
    """Defaults from cli.yaml."""
    return load_yaml_config(__file__, 'cli.yaml')


def _nat(text: str) -> int:
    is_valid, error_message, value = parse_nat(text)
    if not is_valid:
        raise argparse.ArgumentTypeError(error_message)
    return value


def _seed(text: str) -> int:
    value = _nat(text)
    if value >= SEED_LIMIT:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {value}")
    return value


# ============================================================================
# SUBCOMMANDS
# ============================================================================

def _cmd_triples(args, config: dict, out: IO[str]) -> int:
    max_c = args.max_c if args.max_c is not None else config['triples']['max_c']
    triples = enumerate_triples(max_c, args.primitive, args.include_degenerate)
    emit([t._asdict() for t in triples], args.format, out)
    return EXIT_OK


def _cmd_classify(args, config: dict, out: IO[str]) -> int:
    triple = Triple(args.a, args.b, args.c)
    param = classify(triple)
    emit([{**triple._asdict(), **param.to_dict()}], args.format, out)
    return EXIT_OK


def _cmd_circle(args, config: dict, out: IO[str]) -> int:
    r = make_rational(args.num, args.den)
    pt = circle_point(r)
    emit([{"r": str(r), "x": str(pt.x), "y": str(pt.y)}], args.format, out)
    return EXIT_OK


def _cmd_descend(args, config: dict, out: IO[str]) -> int:
    trace = refute(DescentState(args.p, args.q))
    refutation = trace.terminal
    summary = {
        "p": args.p,
        "q": args.q,
        "stage": refutation.stage.value,
        "steps": len(trace),
        "measures": list(trace.measures),
    }
    if args.trace:
        summary["detail"] = refutation.detail
        summary["states"] = [state.to_dict() for state in trace.states]
        summary["records"] = [record.to_dict() for record in trace.records]

    emit([summary], args.format, out)
    if args.trace and args.format == "text":
        steps = [
            {**state.to_dict(), **record.to_dict()}
            for state, record in zip(trace.states, trace.records)
        ]
        emit(steps, args.format, out)

    if refutation.stage is RefutationStage.INTERNAL_ASSERTION_FAILED:
        print(f"error: internal assertion failed: {refutation.detail}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_verify(args, config: dict, out: IO[str]) -> int:
    task = Task.from_cli(args.task)
    bound = args.bound if args.bound is not None else config['verify'][task.value]['bound']
    jobs = args.jobs if args.jobs is not None else config['defaults']['jobs']

    report = run_verification(task, bound, jobs)
    emit([report.to_dict()], args.format, out)
    if args.format == "text" and report.counterexamples:
        emit(report.counterexamples, args.format, out)
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def _cmd_props(args, config: dict, out: IO[str]) -> int:
    trials = args.trials if args.trials is not None else config['props']['trials']
    seed = args.seed if args.seed is not None else config['props']['seed']

    results = run_properties(trials, seed, names=args.only)
    emit([result.to_dict() for result in results], args.format, out)
    return EXIT_COUNTEREXAMPLE if any(result.failures for result in results) else EXIT_OK


# ============================================================================
# PARSER
# ============================================================================

def build_parser(config: dict) -> argparse.ArgumentParser:
    """Parser for all subcommands; --format is accepted before or after the subcommand."""
    defaults = config['defaults']
    parser = argparse.ArgumentParser(
        prog="fermatdescent",
        description="Pythagorean triples, Fermat's infinite descent and bounded verification.",
    )
    parser.add_argument("--format", choices=FORMATS, default=defaults['format'])
    parser.add_argument("--log-level", choices=LOG_LEVELS, default=defaults['log_level'])

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    triples = sub.add_parser("triples", parents=[common], help="enumerate Pythagorean triples")
    triples.add_argument("--max-c", type=_nat, default=None)
    triples.add_argument("--primitive", action="store_true")
    triples.add_argument("--include-degenerate", action="store_true")
    triples.set_defaults(handler=_cmd_triples)

    classify_cmd = sub.add_parser("classify", parents=[common], help="parametrize a triple")
    for name in ("a", "b", "c"):
        classify_cmd.add_argument(name, type=_nat)
    classify_cmd.set_defaults(handler=_cmd_classify)

    circle = sub.add_parser("circle", parents=[common], help="unit circle point of slope NUM/DEN")
    circle.add_argument("num", type=_nat)
    circle.add_argument("den", type=_nat)
    circle.set_defaults(handler=_cmd_circle)

    descend = sub.add_parser("descend", parents=[common], help="run the descent from state (P, Q)")
    descend.add_argument("p", type=_nat)
    descend.add_argument("q", type=_nat)
    descend.add_argument("--trace", action="store_true")
    descend.set_defaults(handler=_cmd_descend)

    verify = sub.add_parser("verify", parents=[common], help="exhaustive bounded verification")
    verify.add_argument("task", choices=VERIFY_TASKS)
    verify.add_argument("--bound", type=_nat, default=None)
    verify.add_argument("--jobs", type=_nat, default=None)
    verify.set_defaults(handler=_cmd_verify)

    props = sub.add_parser("props", parents=[common], help="seeded randomized property suite")
    props.add_argument("--trials", type=_nat, default=None)
    props.add_argument("--seed", type=_seed, default=None)
    props.add_argument("--only", action="append", choices=sorted(SAMPLERS), default=None)
    props.set_defaults(handler=_cmd_props)

    return parser


def run_cli(argv: Optional[List[str]] = None, out: Optional[IO[str]] = None) -> int:
    """
    Parse argv, run the subcommand and return its exit code.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None
        out: Result stream; sys.stdout when None

    Returns:
        int: Exit code (see module docstring)
    """
    out = out if out is not None else sys.stdout
    config = load_config()
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    configure_logging(args.log_level, config['defaults']['log_format'])
    logger.debug("running %s", args.command)
    try:
        return args.handler(args, config, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as exc:
        print(f"arithmetic overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (InternalLogicError, MeasureViolation) as exc:
        logger.error("internal logic error in %s: %s", args.command, exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except NumberTheoryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
