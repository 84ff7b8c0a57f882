"""Built in distance backends, registered in pyproject.toml"""

import logging

from box import Box

from seqpat._core import exceptions
from seqpat._core.metric import (
    DistanceResult,
    brute_search_size,
    distance_brute,
    distance_clique,
    distance_hungarian,
)
from seqpat._core.sequence import SequenceSet

logger: logging.Logger = logging.getLogger(__name__)


class CliqueBackend:
    """Heaviest clique of pairwise connected cross sections"""

    name = "clique"

    def supports(self, k: int) -> bool:
        return k >= 2

    def solve(self, Q: SequenceSet, settings: Box) -> DistanceResult:
        return distance_clique(Q)


class BruteBackend:
    """Every relabelling of all but the first sequence"""

    name = "brute"

    def supports(self, k: int) -> bool:
        return k >= 2

    def solve(self, Q: SequenceSet, settings: Box) -> DistanceResult:
        size = brute_search_size(Q.level, Q.k)
        budget = settings.completeness.search_budget
        if size > budget:
            raise exceptions.SearchSpaceTooLarge(size, budget)
        return distance_brute(Q)


class HungarianBackend:
    """Linear assignment on the confusion matrix, pairs only"""

    name = "hungarian"

    def supports(self, k: int) -> bool:
        return k == 2

    def solve(self, Q: SequenceSet, settings: Box) -> DistanceResult:
        return distance_hungarian(Q)
