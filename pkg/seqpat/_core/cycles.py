"""Cycle notation for permutations, used only at the command line boundary"""

import logging
import re
from collections.abc import Sequence as _SequenceABC

from seqpat._core import exceptions
from seqpat._core.sequence import Permutation

logger: logging.Logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")


def _split_cycle(body: str) -> list[int]:
    body = body.strip()
    if not body:
        return []
    if re.search(r"[\s,]", body):
        parts = [p for p in re.split(r"[\s,]+", body) if p]
    else:
        # compact form like (123), only meaningful for single digit symbols
        parts = list(body)
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise exceptions.InvalidPermutation(f"bad cycle '({body})'") from e


def parse_cycles(text: str, level: int) -> Permutation:
    """Parse '(123)', '(1)(23)' or '(1 10)' into a permutation of order `level`

    Example:

        >>> parse_cycles("(123)", 3).images
        (2, 3, 1)
    """
    stripped = text.strip()
    if not stripped or _CYCLE.sub("", stripped).strip():
        raise exceptions.InvalidPermutation(f"'{text}' is not in cycle notation")

    images = list(range(1, level + 1))
    seen: set[int] = set()
    for body in _CYCLE.findall(stripped):
        cycle = _split_cycle(body)
        for symbol in cycle:
            if not 1 <= symbol <= level:
                raise exceptions.InvalidPermutation(f"symbol {symbol} outside 1..{level}")
            if symbol in seen:
                raise exceptions.InvalidPermutation(f"symbol {symbol} appears twice in '{text}'")
            seen.add(symbol)
        for source, target in zip(cycle, cycle[1:] + cycle[:1]):
            images[source - 1] = target

    return Permutation(tuple(images))


def format_cycles(phi: Permutation) -> str:
    """Disjoint cycles of length >= 2, or '(1)' for the identity

    Example:

        >>> format_cycles(Permutation((3, 2, 1)))
        '(13)'
    """
    separator = "" if phi.order < 10 else " "
    remaining = set(range(1, phi.order + 1))
    cycles = []
    for start in range(1, phi.order + 1):
        if start not in remaining:
            continue
        cycle = [start]
        remaining.discard(start)
        current = phi(start)
        while current != start:
            cycle.append(current)
            remaining.discard(current)
            current = phi(current)
        if len(cycle) > 1:
            cycles.append("(" + separator.join(str(s) for s in cycle) + ")")

    return "".join(cycles) or "(1)"


def format_witness(witness: _SequenceABC[Permutation]) -> str:
    return "[" + ",".join(format_cycles(phi) for phi in witness) + "]"
