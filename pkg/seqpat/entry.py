"""
seqpat entry point

Command line interface for counting sequence patterns, computing their distances
and building sets of patterns at maximal distance.
"""

import argparse
import logging.config
import sys
from argparse import ArgumentParser
from collections.abc import Sequence
from textwrap import dedent
from typing import Optional

from seqpat import core
from seqpat._core import exceptions
from seqpat._core.general import load_global_config

logger: logging.Logger = logging.getLogger(__name__)

ALGORITHMS = ("clique", "brute", "hungarian", "auto")


def _common_flags() -> ArgumentParser:
    """Flags accepted by every subcommand"""
    parent = ArgumentParser(add_help=False)

    parent.add_argument(
        "--json", help="Print one line of JSON", action="store_true", default=False
    )
    parent.add_argument(
        "--verify",
        help="Cross check the result with an independent computation",
        action="store_true",
        default=False,
    )
    parent.add_argument(
        "--witness",
        help="Also print an optimal tuple of permutations in cycle notation",
        action="store_true",
        default=False,
    )
    parent.add_argument(
        "--algorithm",
        help="Pattern distance algorithm (default from settings, normally 'auto')",
        choices=ALGORITHMS,
    )
    parent.add_argument(
        "--settings",
        help="YAML settings file, can be given more than once (later files win)",
        action="append",
        default=[],
    )

    parent.add_argument(
        "--log-to-file",
        help="Log output to a file (seqpat.log if no argument is given)",
        nargs="?",
        const="seqpat.log",
    )
    parent.add_argument(
        "--stdout",
        help="Log output to the terminal (stderr, results stay on stdout)",
        action="store_true",
        default=False,
    )
    parent.add_argument(
        "--debug",
        help="Log debug information (only relevant if --stdout or --log-to-file is passed)",
        action="store_true",
        default=False,
    )

    return parent


class SeqpatArgParser(ArgumentParser):
    """Command line parser with one subcommand per operation"""

    def __init__(self) -> None:
        description = """Generalised Hamming distance of sequence patterns

        Sequence files start with a 'level: <l>' header followed by one sequence per line."""

        super().__init__(
            prog="seqpat",
            description=dedent(description),
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )

        common = _common_flags()
        commands = self.add_subparsers(
            dest="command", metavar="COMMAND", required=True, parser_class=ArgumentParser
        )

        count = commands.add_parser(
            "count", parents=[common], help="Number of patterns of a given length and level"
        )
        count.add_argument("--length", type=int, required=True, help="Sequence length n")
        count.add_argument("--level", type=int, required=True, help="Number of symbols l")

        distance = commands.add_parser(
            "distance", parents=[common], help="Distance of the sequences in a file"
        )
        distance.add_argument("in_file", help="Sequence file")
        distance.add_argument(
            "--mode",
            choices=("sequences", "patterns"),
            default="patterns",
            help="Compare the sequences as written, or the patterns they generate",
        )

        standardize = commands.add_parser(
            "standardize", parents=[common], help="Standard form of every sequence in a file"
        )
        standardize.add_argument("in_file", help="Sequence file")

        for name, text in (
            ("maxdist", "Largest possible distance of k patterns"),
            ("generate", "Write k sequences whose patterns are at maximal distance"),
        ):
            sub = commands.add_parser(name, parents=[common], help=text)
            sub.add_argument("length", type=int, help="Sequence length n")
            sub.add_argument("level", type=int, help="Number of symbols l")
            sub.add_argument("size", type=int, help="Number of patterns k")

        matrix = commands.add_parser(
            "matrix", parents=[common], help="Pairwise pattern distances of a file's rows"
        )
        matrix.add_argument("in_file", help="Sequence file")

        links = commands.add_parser(
            "links", parents=[common], help="Every link of cross sections of size k"
        )
        links.add_argument("--size", type=int, required=True, help="Cross section size k")
        links.add_argument("--level", type=int, required=True, help="Number of symbols l")

        relabel = commands.add_parser(
            "relabel", parents=[common], help="Apply a permutation to every sequence in a file"
        )
        relabel.add_argument("in_file", help="Sequence file")
        relabel.add_argument(
            "--perm", required=True, help="Permutation in cycle notation, eg '(123)' or '(1 10)'"
        )


def _configure_logging(debug: bool, log_loc: Optional[str], to_terminal: bool) -> None:
    log_level = "DEBUG" if debug else "INFO"

    # Basic logging config that will print out useful information
    log_cfg: dict = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {
                "format": "%(asctime)s [%(levelname)s]: (%(name)s:%(lineno)d) %(message)s",
                "style": "%",
            }
        },
        "handlers": {
            "to_stderr": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
            },
            "nothing": {"class": "logging.NullHandler"},
        },
        "loggers": {
            "seqpat": {"handlers": ["nothing"], "level": log_level, "propagate": False},
            "": {"handlers": ["nothing"], "level": log_level},
        },
    }

    if log_loc:
        log_cfg["handlers"].update(
            {
                "to_file": {
                    "class": "logging.FileHandler",
                    "filename": log_loc,
                    "formatter": "default",
                }
            }
        )

        log_cfg["loggers"]["seqpat"]["handlers"].append("to_file")

    if to_terminal:
        log_cfg["loggers"]["seqpat"]["handlers"].append("to_stderr")

    logging.config.dictConfig(log_cfg)


def _dispatch(vargs: dict, config: core.SeqpatConfig) -> int:
    command = vargs.pop("command")

    if command == "count":
        return core.run_command(core.run_count, vargs["length"], vargs["level"], config)
    if command == "distance":
        return core.run_command(core.run_distance, vargs["in_file"], vargs["mode"], config)
    if command == "standardize":
        return core.run_command(core.run_standardize, vargs["in_file"], config)
    if command == "maxdist":
        return core.run_command(
            core.run_maxdist, vargs["length"], vargs["level"], vargs["size"], config
        )
    if command == "generate":
        return core.run_command(
            core.run_generate, vargs["length"], vargs["level"], vargs["size"], config
        )
    if command == "matrix":
        return core.run_command(core.run_matrix, vargs["in_file"], config)
    if command == "links":
        return core.run_command(core.run_links, vargs["size"], vargs["level"], config)
    if command == "relabel":
        return core.run_command(core.run_relabel, vargs["in_file"], vargs["perm"], config)

    raise NotImplementedError(command)  # pragma: no cover


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Parse arguments, configure logging and run one subcommand

    Raises:
        SystemExit: always, with the command's exit code
    """
    args = SeqpatArgParser().parse_args(argv)
    vargs = vars(args)

    _configure_logging(
        debug=vargs.pop("debug"),
        log_loc=vargs.pop("log_to_file"),
        to_terminal=vargs.pop("stdout"),
    )

    try:
        settings = load_global_config(vargs.pop("settings"))
    except exceptions.SeqpatException as e:
        logger.error("bad settings: %s", e)
        sys.stderr.write(f"error: {e}\n")
        raise SystemExit(core.ExitCode.USAGE) from e

    config = core.SeqpatConfig(
        json_output=vargs.pop("json"),
        verify=vargs.pop("verify"),
        witness=vargs.pop("witness"),
        algorithm=vargs.pop("algorithm"),
        settings=settings,
    )

    raise SystemExit(_dispatch(vargs, config))
