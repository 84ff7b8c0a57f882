"""
Maximum-trace assignment on square count matrices

For two sequences the number of constant cross sections after relabelling the second
sequence by sigma is sum_a A[a][sigma(a)], where A is the confusion matrix of the pair.
Maximising that is a linear assignment problem, solved here exactly with the
Hungarian (Kuhn-Munkres) method in O(l^3) integer operations.
"""

import dataclasses
import logging
from collections.abc import Sequence as _SequenceABC

import numpy as np

from seqpat._core import exceptions
from seqpat._core.sequence import Permutation, SequenceSet, all_permutations

logger: logging.Logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ConfusionMatrix:
    """l x l symbol co-occurrence counts of two sequences

    ``counts[a - 1][b - 1]`` is the number of indices where the first sequence holds
    ``a`` and the second holds ``b``.
    """

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        counts = tuple(tuple(int(c) for c in row) for row in self.counts)
        object.__setattr__(self, "counts", counts)

        size = len(counts)
        if size < 1 or any(len(row) != size for row in counts):
            raise exceptions.ShapeMismatch("confusion matrix must be square and non-empty")
        if any(c < 0 for row in counts for c in row):
            raise exceptions.InvalidParameter("confusion matrix entries must be >= 0")

    @property
    def level(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def entry(self, a: int, b: int) -> int:
        """1-based access"""
        return self.counts[a - 1][b - 1]

    def trace_under(self, sigma: Permutation) -> int:
        return sum(self.counts[a][sigma.images[a] - 1] for a in range(self.level))

    def as_array(self) -> np.ndarray:
        return np.array(self.counts, dtype=np.int64)


def build_confusion(Q: SequenceSet) -> ConfusionMatrix:
    """Tally the cross sections of a pair of sequences

    Raises:
        ArityError: Q does not hold exactly two sequences
    """
    if Q.k != 2:
        raise exceptions.ArityError(f"confusion matrix needs exactly 2 sequences, got {Q.k}")

    first, second = Q.sequences
    counts = np.zeros((Q.level, Q.level), dtype=np.int64)
    np.add.at(
        counts,
        (np.array(first.elements) - 1, np.array(second.elements) - 1),
        1,
    )
    return ConfusionMatrix(tuple(tuple(row) for row in counts.tolist()))


class _HungarianSolver:
    """Shortest augmenting path Hungarian method with row/column potentials

    Minimises cost; rows are inserted one at a time in ascending order and columns
    are scanned in ascending order, so the returned assignment is deterministic.
    """

    def __init__(self, cost: _SequenceABC[_SequenceABC[int]]) -> None:
        self.cost = cost
        self.n = len(cost)
        largest = max((c for row in cost for c in row), default=0)
        # strictly above any reduced cost the potentials can produce
        self.unreached = (largest + 1) * (2 * self.n + 2) ** 2

        # 1-based with a virtual column 0, as in the classical formulation
        self.row_potential = [0] * (self.n + 1)
        self.col_potential = [0] * (self.n + 1)
        self.row_of_col = [0] * (self.n + 1)
        self.way = [0] * (self.n + 1)

    def _insert_row(self, row: int) -> None:
        n = self.n
        self.row_of_col[0] = row
        col = 0
        min_slack = [self.unreached] * (n + 1)
        used = [False] * (n + 1)

        while True:
            used[col] = True
            current_row = self.row_of_col[col]
            delta = self.unreached
            next_col = 0

            for j in range(1, n + 1):
                if used[j]:
                    continue
                reduced = (
                    self.cost[current_row - 1][j - 1]
                    - self.row_potential[current_row]
                    - self.col_potential[j]
                )
                if reduced < min_slack[j]:
                    min_slack[j] = reduced
                    self.way[j] = col
                if min_slack[j] < delta:
                    delta = min_slack[j]
                    next_col = j

            for j in range(n + 1):
                if used[j]:
                    self.row_potential[self.row_of_col[j]] += delta
                    self.col_potential[j] -= delta
                else:
                    min_slack[j] -= delta

            col = next_col
            if self.row_of_col[col] == 0:
                break

        # augment along the alternating path
        while col:
            previous = self.way[col]
            self.row_of_col[col] = self.row_of_col[previous]
            col = previous

    def solve(self) -> list[int]:
        """0-based column assigned to each row"""
        for row in range(1, self.n + 1):
            self._insert_row(row)

        assignment = [0] * self.n
        for j in range(1, self.n + 1):
            assignment[self.row_of_col[j] - 1] = j - 1
        return assignment


def solve_max_trace(A: ConfusionMatrix) -> tuple[int, Permutation]:
    """Maximum over sigma of sum_a A[a][sigma(a)], with one optimal sigma

    The maximisation is turned into minimisation by subtracting every entry from the
    largest entry.

    Example:

        >>> value, sigma = solve_max_trace(ConfusionMatrix(((0, 2), (3, 0))))
        >>> value, sigma.images
        (5, (2, 1))
    """
    counts = A.as_array()
    cost = (counts.max() - counts).tolist()

    assignment = _HungarianSolver(cost).solve()
    sigma = Permutation(tuple(col + 1 for col in assignment))
    value = A.trace_under(sigma)

    logger.debug("max trace %d with assignment %s", value, sigma.images)
    return value, sigma


def max_trace_brute(A: ConfusionMatrix) -> tuple[int, Permutation]:
    """Same as solve_max_trace by trying all l! permutations; for cross-checking"""
    best_value = -1
    best_sigma = None
    for sigma in all_permutations(A.level):
        value = A.trace_under(sigma)
        if value > best_value:
            best_value, best_sigma = value, sigma

    assert best_sigma is not None  # noqa: S101
    return best_value, best_sigma
