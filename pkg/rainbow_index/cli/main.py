"""Command-line interface.

    rainbow-index value --t 13
    rainbow-index construct --t 9 | rainbow-index verify --stdin
    rainbow-index maxset --k 4 --jobs 4 -v

Result documents go to standard output, diagnostics to standard error.
Exit status: 0 success, 1 verification failed or bound not met, 2 invalid
input, 3 search refused by the budget or the exhaustive-search size limit.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from rainbow_index.construct import coloring_to_dot, construct_coloring, rx3_interval, rx3_value
from rainbow_index.core import VertexTriple, coloring_from_json, coloring_to_json
from rainbow_index.search import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    SearchRefusedError,
    beta_search,
    brute_force_rx3_search,
    max_acceptable_search,
    max_isolated_rooks_search,
)
from rainbow_index.verifier import has_rainbow_tree, verify_3rainbow

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class CliConfig:
    """One validated invocation: the subcommand, its options and the shared flags."""

    command: str
    options: dict = field(default_factory=dict)
    output_format: str = "json"
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    verbose: int = 0


def _read_coloring(config: CliConfig):
    if config.options.get("stdin"):
        text = sys.stdin.read()
    else:
        with open(config.options["file"]) as f:
            text = f.read()
    return coloring_from_json(text)


def _print_json(document):
    print(json.dumps(document))


def _value(config):
    print(rx3_value(config.options["t"]))
    return EXIT_OK


def _interval(config):
    interval = rx3_interval(config.options["k"])
    _print_json({"k": interval.k, "t_min": interval.t_min, "t_max": interval.t_max})
    return EXIT_OK


def _construct(config):
    coloring = construct_coloring(config.options["t"])
    print(coloring_to_dot(coloring) if config.output_format == "dot" else coloring_to_json(coloring))
    return EXIT_OK


def _verify(config):
    report = verify_3rainbow(_read_coloring(config), jobs=config.jobs)
    _print_json(report.to_document())
    return EXIT_OK if report.passed else EXIT_FAILED


def _witness(config):
    coloring = _read_coloring(config)
    triple = VertexTriple.from_labels(config.options["triple"], coloring.t)
    witness = has_rainbow_tree(coloring, triple)
    if config.output_format == "dot":
        print(coloring_to_dot(coloring, witness))
    else:
        edges = None if witness is None else [list(edge) for edge in witness.to_labels(coloring.t)]
        _print_json({"triple": triple.labels(), "witness": edges})
    return EXIT_FAILED if witness is None else EXIT_OK


def _print_record(record) -> int:
    """Print a search record; the status is a failure when the search found nothing."""
    logger.info("%s finished in %.1f ms", record.op, record.elapsed_ms)
    _print_json(record.to_document())
    return EXIT_OK if record.result else EXIT_FAILED


def _oracle(config):
    options = config.options
    record = brute_force_rx3_search(options["t"], options["k_max"], jobs=config.jobs, budget=config.budget)
    return _print_record(record)


def _beta(config):
    record = beta_search(config.options["b"], config.options["k_ambient"], jobs=config.jobs, budget=config.budget)
    return _print_record(record)


def _maxset(config):
    record = max_acceptable_search(
        config.options["k"],
        distinct_only=config.options["distinct_only"],
        t_cap=config.options["t_cap"],
        jobs=config.jobs,
        budget=config.budget,
    )
    return _print_record(record)


def _rooks(config):
    return _print_record(max_isolated_rooks_search(config.options["n"]))


def _table(config):
    t_min, t_max = config.options["t_min"], config.options["t_max"]
    if not 1 <= t_min <= t_max:
        raise ValueError(f"Need 1 <= t-min <= t-max, got {t_min}..{t_max}")
    status = EXIT_OK
    print(f"{'t':>5} {'k':>4} verified")
    for t in range(t_min, t_max + 1):
        passed = verify_3rainbow(construct_coloring(t), jobs=config.jobs).passed
        if not passed:
            status = EXIT_FAILED
        print(f"{t:>5} {rx3_value(t):>4} {'yes' if passed else 'no'}")
    return status


COMMANDS = {
    "value": _value,
    "interval": _interval,
    "construct": _construct,
    "verify": _verify,
    "witness": _witness,
    "oracle": _oracle,
    "beta": _beta,
    "maxset": _maxset,
    "rooks": _rooks,
    "table": _table,
}


def run(config: CliConfig) -> int:
    """Execute one invocation and return its exit status."""
    try:
        return COMMANDS[config.command](config)
    except BudgetExceededError as e:
        logger.error("%s (raise it with --budget)", e)
        return EXIT_BUDGET
    except SearchRefusedError as e:
        logger.error("%s", e)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        logger.error("%s", e)
        return EXIT_INVALID


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="Maximum raw search size")
    common.add_argument("--jobs", type=_positive, default=1, help="Worker processes")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug output")

    parser = argparse.ArgumentParser(prog="rainbow-index", description="3-rainbow colorings of K_2,t")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("value", parents=[common], help="rx3(K_2,t) from the closed form")
    sub.add_argument("--t", type=_positive, required=True)

    sub = commands.add_parser("interval", parents=[common], help="Range of t needing exactly k colors")
    sub.add_argument("--k", type=int, required=True)

    sub = commands.add_parser("construct", parents=[common], help="Optimal coloring of K_2,t")
    sub.add_argument("--t", type=_positive, required=True)
    sub.add_argument("--format", dest="output_format", choices=("json", "dot"), default="json")

    for name, help_text in (("verify", "Check a coloring document"), ("witness", "Rainbow tree for one triple")):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--file")
        source.add_argument("--stdin", action="store_true")
        if name == "witness":
            sub.add_argument("--triple", nargs=3, required=True, metavar="VERTEX", help="e.g. w1 w2 u1")
            sub.add_argument("--format", dest="output_format", choices=("json", "dot"), default="json")

    sub = commands.add_parser("oracle", parents=[common], help="rx3(K_2,t) by exhaustive search")
    sub.add_argument("--t", type=_positive, required=True)
    sub.add_argument("--k-max", type=_positive, default=5)

    sub = commands.add_parser("beta", parents=[common], help="Largest acceptable B-limited code multiset")
    sub.add_argument("--b", type=int, required=True)
    sub.add_argument("--k-ambient", type=_positive)

    sub = commands.add_parser("maxset", parents=[common], help="Largest acceptable code multiset over k colors")
    sub.add_argument("--k", type=_positive, required=True)
    sub.add_argument("--distinct-only", action="store_true")
    sub.add_argument("--t-cap", type=_positive)

    sub = commands.add_parser("rooks", parents=[common], help="Largest isolated rook placement on an n x n board")
    sub.add_argument("--n", type=int, required=True)

    sub = commands.add_parser("table", parents=[common], help="Closed form against verified constructions")
    sub.add_argument("--t-min", type=_positive, default=1)
    sub.add_argument("--t-max", type=_positive, required=True)
    sub.set_defaults(output_format="table")

    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    shared = {"command", "output_format", "budget", "jobs", "verbose"}
    options = {key: value for key, value in vars(args).items() if key not in shared}
    return CliConfig(
        command=args.command,
        options=options,
        output_format=getattr(args, "output_format", "json"),
        budget=args.budget,
        jobs=args.jobs,
        verbose=args.verbose,
    )


def main(argv=None) -> int:
    config = config_from_args(build_parser().parse_args(argv))
    logging.basicConfig(
        level={0: logging.WARNING, 1: logging.INFO}.get(config.verbose, logging.DEBUG),
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    logging.captureWarnings(True)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
