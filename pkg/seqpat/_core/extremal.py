"""
Maximal distance of k patterns and the sets that reach it

Cross sections starting with symbol 1 are listed in lexicographic order to form M, a
set of k sequences of length l^(k-1) in which every relabelling leaves exactly one
constant cross section. Stacking copies of M (and a prefix of it) gives a set of any
length n whose patterns are as far apart as possible, n - ceil(n / l^(k-1)).
"""

import dataclasses
import itertools
import logging

from seqpat._core import exceptions
from seqpat._core.metric import brute_search_size, iter_constant_counts
from seqpat._core.sequence import CrossSection, SequenceSet

logger: logging.Logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BUDGET = 100_000


@dataclasses.dataclass(frozen=True)
class ExtremalParams:
    """n = m * l^(k-1) + r with 0 <= r < l^(k-1)"""

    n: int
    level: int
    k: int
    m: int
    r: int

    @property
    def block(self) -> int:
        """Rows in one copy of M"""
        return self.level ** (self.k - 1)


def _check_params(n: int, level: int, k: int) -> None:
    if n < 1:
        raise exceptions.InvalidParameter(f"length must be >= 1, got {n}")
    if level < 1:
        raise exceptions.InvalidParameter(f"level must be >= 1, got {level}")
    if k < 2:
        raise exceptions.InvalidParameter(f"set size k must be >= 2, got {k}")


def extremal_params(n: int, level: int, k: int) -> ExtremalParams:
    _check_params(n, level, k)
    m, r = divmod(n, level ** (k - 1))
    return ExtremalParams(n=n, level=level, k=k, m=m, r=r)


def max_distance(n: int, level: int, k: int) -> int:
    """D_{n,l,k} = n - ceil(n / l^(k-1))

    Example:

        >>> max_distance(5, 3, 2)
        3
    """
    _check_params(n, level, k)
    return n - -(-n // level ** (k - 1))


def psi(c: CrossSection, level: int) -> CrossSection:
    """Cyclic shift (1 2 ... l) applied to every element"""
    return CrossSection(tuple(e % level + 1 for e in c.elements))


def is_linked(c: CrossSection, other: CrossSection, level: int) -> bool:
    return len(c) == len(other) and psi(c, level) == other


def link(c: CrossSection, level: int) -> list[CrossSection]:
    """The orbit c, psi(c), ..., psi^(l-1)(c) of a cross section starting with 1

    Raises:
        NotInFirstClass: c does not start with 1
    """
    if c[0] != 1:
        raise exceptions.NotInFirstClass(f"link generator {c} must start with 1")
    if any(e > level for e in c.elements):
        raise exceptions.SymbolOutOfRange(f"{c} has symbols outside 1..{level}")

    orbit = [c]
    for _ in range(level - 1):
        orbit.append(psi(orbit[-1], level))
    return orbit


def first_class(k: int, level: int, first: int = 1) -> list[CrossSection]:
    """Cross sections of size k whose first element is `first`, lexicographically"""
    if k < 2 or level < 1:
        raise exceptions.InvalidParameter(f"need k >= 2 and level >= 1, got {k}, {level}")
    if not 1 <= first <= level:
        raise exceptions.InvalidParameter(f"first element must be in 1..{level}")

    return [
        CrossSection((first, *rest))
        for rest in itertools.product(range(1, level + 1), repeat=k - 1)
    ]


def all_links(k: int, level: int) -> list[list[CrossSection]]:
    """The l^(k-1) links, which partition every cross section of size k"""
    return [link(c, level) for c in first_class(k, level)]


def construct_M(level: int, k: int) -> SequenceSet:
    """Every cross section starting with 1, in lexicographic order, as k sequences"""
    if level < 1 or k < 2:
        raise exceptions.InvalidParameter(f"need level >= 1 and k >= 2, got {level}, {k}")
    return SequenceSet.from_cross_sections(
        [c.elements for c in first_class(k, level)], level
    )


def construct_Mr(r: int, level: int, k: int) -> SequenceSet:
    """First r rows of M"""
    if level < 1 or k < 2:
        raise exceptions.InvalidParameter(f"need level >= 1 and k >= 2, got {level}, {k}")
    if not 1 <= r < level ** (k - 1):
        raise exceptions.InvalidParameter(f"r must be in 1..{level ** (k - 1) - 1}, got {r}")
    return SequenceSet.from_cross_sections(
        [c.elements for c in first_class(k, level)[:r]], level
    )


def construct_Mn(n: int, level: int, k: int) -> SequenceSet:
    """m copies of M stacked above the first r rows of M, where n = m l^(k-1) + r"""
    params = extremal_params(n, level, k)
    block = [c.elements for c in first_class(k, level)]

    rows = block * params.m + block[: params.r]
    logger.debug("M_n for n=%d l=%d k=%d: m=%d r=%d", n, level, k, params.m, params.r)
    return SequenceSet.from_cross_sections(rows, level)


def _constant_count_range(Q: SequenceSet, budget: int) -> tuple[int, int]:
    size = brute_search_size(Q.level, Q.k)
    if size > budget:
        raise exceptions.SearchSpaceTooLarge(size, budget)

    counts = {count for _, count in iter_constant_counts(Q)}
    return min(counts), max(counts)


def is_semi_complete(Q: SequenceSet, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Every relabelling leaves at most one constant cross section

    Raises:
        SearchSpaceTooLarge: (l!)^(k-1) > budget
    """
    _, most = _constant_count_range(Q, budget)
    return most <= 1


def is_complete(Q: SequenceSet, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Every relabelling leaves exactly one constant cross section

    Raises:
        SearchSpaceTooLarge: (l!)^(k-1) > budget
    """
    fewest, most = _constant_count_range(Q, budget)
    return fewest == most == 1

