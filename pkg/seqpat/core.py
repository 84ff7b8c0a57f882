"""
seqpat command runners

Each runner takes already parsed arguments, writes its report to a stream and returns
an exit code. Errors from the library are turned into exit codes here and nowhere
else: 2 for usage, parse, parameter and shape errors, 3 when a set has fewer than two
sequences (or too many for the chosen algorithm), 4 when independent computations
disagree.
"""

import dataclasses
import enum
import json
import logging
import sys
from collections.abc import Callable
from typing import Any, Optional, TextIO

from box import Box

from seqpat._core import exceptions
from seqpat._core.cycles import format_cycles, format_witness, parse_cycles
from seqpat._core.enumeration import (
    count_patterns_burnside,
    count_standard_stirling,
    enumerate_standard,
)
from seqpat._core.extremal import all_links, construct_Mn, extremal_params, max_distance
from seqpat._core.general import load_global_config
from seqpat._core.loader import dump_document, load_document
from seqpat._core.metric import distance_clique, distance_matrix, sequence_distance
from seqpat._core.plugins import solve_with_backend
from seqpat._core.schema.jsonschema import verify_jsonschema
from seqpat._core.sequence import apply_permutation, pattern_of, standardize

logger: logging.Logger = logging.getLogger(__name__)


class ExitCode(enum.IntEnum):
    OK = 0
    USAGE = 2
    DOMAIN = 3
    VERIFICATION = 4


@dataclasses.dataclass(frozen=True)
class SeqpatConfig:
    """Options shared by every command

    Attributes:
        json_output: print a single line of JSON instead of text
        verify: cross-check results with an independent computation
        witness: print an optimal relabelling with distances
        algorithm: distance algorithm, None to use the settings default
        settings: merged settings files
    """

    json_output: bool = False
    verify: bool = False
    witness: bool = False
    algorithm: Optional[str] = None
    settings: Box = dataclasses.field(default_factory=load_global_config)

    @property
    def chosen_algorithm(self) -> str:
        return self.algorithm or self.settings.distance.default_algorithm


def _write(text: str, out: Optional[TextIO]) -> None:
    # sys.stdout resolved per call
    (out or sys.stdout).write(text)


def _emit_json(document: dict, out: Optional[TextIO]) -> None:
    verify_jsonschema(document, "output")
    _write(json.dumps(document, sort_keys=True) + "\n", out)


def _emit_lines(lines: list[str], out: Optional[TextIO]) -> None:
    _write("".join(f"{line}\n" for line in lines), out)


def _as_row(elements) -> str:
    return " ".join(str(e) for e in elements)


def run_count(n: int, level: int, config: SeqpatConfig, out: Optional[TextIO] = None) -> int:
    """Number of length-n level-l patterns by both closed forms"""
    burnside = count_patterns_burnside(n, level)
    stirling = count_standard_stirling(n, level)
    results: dict[str, Any] = {"burnside": burnside, "stirling": stirling}

    if config.verify:
        limits = config.settings.verify
        if n <= limits.max_length and level <= limits.max_level:
            results["enumerated"] = sum(1 for _ in enumerate_standard(n, level))
        else:
            logger.warning(
                "not enumerating n=%d l=%d, above verify limits (%d, %d)",
                n,
                level,
                limits.max_length,
                limits.max_level,
            )

    agree = len(set(results.values())) == 1

    if config.json_output:
        _emit_json({"command": "count", "length": n, "level": level, "agree": agree, **results}, out)
    else:
        _emit_lines([str(burnside)] + [f"{k}: {v}" for k, v in results.items()], out)

    if not agree:
        raise exceptions.VerificationError(f"pattern counts disagree: {results}", results)
    return ExitCode.OK


def run_distance(
    filename: str, mode: str, config: SeqpatConfig, out: Optional[TextIO] = None
) -> int:
    """Distance of the sequences in a file, or of the patterns they generate"""
    Q = load_document(filename).sequence_set()

    if mode == "sequences":
        distance = sequence_distance(Q)
        witness = None
        algorithm = None
    else:
        algorithm = config.chosen_algorithm
        result = solve_with_backend(Q, algorithm, config.settings)
        distance, witness = result.distance, result.witness

        if config.verify and algorithm != "clique":
            check = distance_clique(Q)
            if check.distance != distance:
                raise exceptions.VerificationError(
                    f"{algorithm} gave {distance}, clique search gave {check.distance}"
                )

    logger.info("distance of %d %s: %d", Q.k, mode, distance)

    if config.json_output:
        _emit_json(
            {
                "command": "distance",
                "mode": mode,
                "algorithm": algorithm,
                "distance": distance,
                "constant_count": Q.length - distance,
                "length": Q.length,
                "witness": [format_cycles(phi) for phi in witness]
                if (witness and config.witness)
                else None,
            },
            out,
        )
    else:
        lines = [str(distance)]
        if config.witness and witness:
            lines.append(f"witness: {format_witness(witness)}")
        _emit_lines(lines, out)

    return ExitCode.OK


def run_maxdist(
    n: int, level: int, k: int, config: SeqpatConfig, out: Optional[TextIO] = None
) -> int:
    value = max_distance(n, level, k)

    if config.json_output:
        _emit_json(
            {"command": "maxdist", "length": n, "level": level, "size": k, "max_distance": value},
            out,
        )
    else:
        _emit_lines([str(value)], out)
    return ExitCode.OK


def run_generate(
    n: int, level: int, k: int, config: SeqpatConfig, out: Optional[TextIO] = None
) -> int:
    """Write a set of k sequences whose patterns are at maximal distance"""
    Q = construct_Mn(n, level, k)
    params = extremal_params(n, level, k)
    expected = max_distance(n, level, k)

    if config.verify:
        achieved = distance_clique(Q).distance
        if achieved != expected:
            raise exceptions.VerificationError(
                f"constructed set has distance {achieved}, expected {expected}"
            )

    if config.json_output:
        logger.warning("generate always writes a sequence file, ignoring --json")

    _write(
        dump_document(
            Q.sequences,
            level,
            comments=[
                f"n={n} level={level} k={k} m={params.m} r={params.r}",
                f"distance: {expected}",
            ],
        ),
        out,
    )
    return ExitCode.OK


def run_standardize(filename: str, config: SeqpatConfig, out: Optional[TextIO] = None) -> int:
    """Standard form of every sequence in a file"""
    document = load_document(filename)
    rows = [standardize(q) for q in document.rows]

    if config.json_output:
        _emit_json({"command": "standardize", "rows": [list(q.elements) for q in rows]}, out)
    else:
        _emit_lines([_as_row(q.elements) for q in rows], out)
    return ExitCode.OK


def run_relabel(
    filename: str, cycles: str, config: SeqpatConfig, out: Optional[TextIO] = None
) -> int:
    """Apply a permutation given in cycle notation to every sequence in a file"""
    document = load_document(filename)
    phi = parse_cycles(cycles, document.level)
    _write(
        dump_document((apply_permutation(q, phi) for q in document.rows), document.level), out
    )
    return ExitCode.OK


def run_matrix(filename: str, config: SeqpatConfig, out: Optional[TextIO] = None) -> int:
    """Pairwise pattern distances between every sequence in a file"""
    document = load_document(filename)
    matrix = distance_matrix([pattern_of(q) for q in document.rows])

    if config.json_output:
        _emit_json({"command": "matrix", "matrix": matrix}, out)
    else:
        _emit_lines([_as_row(row) for row in matrix], out)
    return ExitCode.OK


def run_links(k: int, level: int, config: SeqpatConfig, out: Optional[TextIO] = None) -> int:
    """Every link of cross sections of size k"""
    _emit_lines([" ".join(str(c) for c in orbit) for orbit in all_links(k, level)], out)
    return ExitCode.OK


def run_command(runner: Callable[..., int], *args, **kwargs) -> int:
    """Call a runner and map library errors onto exit codes"""
    try:
        return runner(*args, **kwargs)
    except exceptions.VerificationError:
        logger.exception("verification failed")
        return ExitCode.VERIFICATION
    except exceptions.ArityError as e:
        logger.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.DOMAIN
    except exceptions.SeqpatException as e:
        logger.error("%s", e)
        sys.stderr.write(f"error: {e}\n")
        return ExitCode.USAGE
