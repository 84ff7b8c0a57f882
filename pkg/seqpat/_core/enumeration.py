"""
Counting length-n level-l sequence patterns

Three independent routes give the same number: orbit counting over S_l with
derangement subcounts, a sum of Stirling numbers of the second kind, and direct
generation of the standard sequences. All arithmetic is exact integer arithmetic;
the alternating factorial sums in the closed forms are never evaluated in floating
point.
"""

import functools
import logging
import math
from collections.abc import Iterator
from typing import NewType

from seqpat._core import exceptions
from seqpat._core.sequence import Sequence, all_permutations

logger: logging.Logger = logging.getLogger(__name__)

PatternCount = NewType("PatternCount", int)


def _check_params(n: int, level: int) -> None:
    if n < 1:
        raise exceptions.InvalidParameter(f"length must be >= 1, got {n}")
    if level < 1:
        raise exceptions.InvalidParameter(f"level must be >= 1, got {level}")


@functools.cache
def derangements(m: int) -> int:
    """Permutations of m symbols with no fixed point

    D_m = (m - 1)(D_{m-1} + D_{m-2}), D_0 = 1, D_1 = 0

    Example:

        >>> [derangements(m) for m in range(6)]
        [1, 0, 1, 2, 9, 44]
    """
    if m < 0:
        raise exceptions.InvalidParameter(f"m must be >= 0, got {m}")

    previous, current = 1, 0
    if m == 0:
        return previous
    for i in range(2, m + 1):
        previous, current = current, (i - 1) * (current + previous)
    return current


def count_derangers(level: int, m: int) -> int:
    """Number of permutations in S_level that move exactly m symbols"""
    if not 0 <= m <= level:
        raise exceptions.InvalidParameter(f"m must be in 0..{level}, got {m}")
    return math.comb(level, m) * derangements(m)


def count_fixed_sequences(n: int, level: int, m: int) -> int:
    """Sequences fixed by a permutation moving m symbols: those avoiding all of them"""
    _check_params(n, level)
    if not 0 <= m <= level:
        raise exceptions.InvalidParameter(f"m must be in 0..{level}, got {m}")
    return (level - m) ** n


def count_patterns_burnside(n: int, level: int) -> PatternCount:
    """Number of length-n level-l patterns by orbit counting

    Groups S_level by the number m of symbols each permutation moves. There are
    C(l, m) * D_m such permutations and each fixes (l - m)^n sequences, so

        |T| = (l^n + sum_{m=2}^{l} C(l, m) D_m (l - m)^n) / l!

    Example:

        >>> count_patterns_burnside(4, 2)
        8
    """
    _check_params(n, level)

    fixed_total = level**n
    for m in range(2, level + 1):
        fixed_total += count_derangers(level, m) * count_fixed_sequences(n, level, m)

    orbits, remainder = divmod(fixed_total, math.factorial(level))
    if remainder:
        # Not reachable for valid input
        raise exceptions.VerificationError(
            f"orbit count for n={n}, l={level} is not an integer ({fixed_total}/{level}!)"
        )

    logger.debug("burnside count n=%d l=%d -> %d", n, level, orbits)
    return PatternCount(orbits)


@functools.cache
def _stirling_row(n: int) -> tuple[int, ...]:
    row = [1]
    for i in range(1, n + 1):
        above = row + [0]
        row = [0] * (i + 1)
        for m in range(1, i + 1):
            row[m] = m * above[m] + above[m - 1]
    return tuple(row)


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind, S(n, m) = m S(n-1, m) + S(n-1, m-1)

    Example:

        >>> stirling2(5, 3)
        25
    """
    if n < 0 or m < 0:
        raise exceptions.InvalidParameter(f"n and m must be >= 0, got {n}, {m}")
    if m > n:
        return 0
    return _stirling_row(n)[m]


def count_standard_stirling(n: int, level: int) -> PatternCount:
    """Number of standard sequences: set partitions of n indices into at most l blocks"""
    _check_params(n, level)
    return PatternCount(sum(stirling2(n, m) for m in range(1, min(n, level) + 1)))


def bell(n: int) -> PatternCount:
    """n-th Bell number from the Bell triangle

    Example:

        >>> [bell(i) for i in range(7)]
        [1, 1, 2, 5, 15, 52, 203]
    """
    if n < 0:
        raise exceptions.InvalidParameter(f"n must be >= 0, got {n}")

    row = [1]
    for _ in range(n):
        next_row = [row[-1]]
        for value in row:
            next_row.append(next_row[-1] + value)
        row = next_row
    return PatternCount(row[0])


def enumerate_standard(n: int, level: int) -> Iterator[Sequence]:
    """Yield every standard sequence of length n and level l in lexicographic order

    Each next element is at most one more than the running maximum, capped at l.
    """
    _check_params(n, level)

    prefix = [1]
    maxima = [1]

    def _descend() -> Iterator[Sequence]:
        if len(prefix) == n:
            yield Sequence(tuple(prefix), level)
            return
        for symbol in range(1, min(maxima[-1] + 1, level) + 1):
            prefix.append(symbol)
            maxima.append(max(maxima[-1], symbol))
            yield from _descend()
            prefix.pop()
            maxima.pop()

    yield from _descend()


def count_patterns_orbit(n: int, level: int, budget: int = math.factorial(8)) -> PatternCount:
    """Orbit count by averaging fixed sequences over every permutation in S_l

    Raises:
        SearchSpaceTooLarge: l! exceeds budget
    """
    _check_params(n, level)
    size = math.factorial(level)
    if size > budget:
        raise exceptions.SearchSpaceTooLarge(size, budget)

    fixed_total = 0
    for phi in all_permutations(level):
        moved = sum(1 for s, image in enumerate(phi.images, start=1) if s != image)
        fixed_total += count_fixed_sequences(n, level, moved)
    return PatternCount(fixed_total // size)
