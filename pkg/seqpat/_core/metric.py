"""
Generalised Hamming distance of sequences and sequence patterns

The distance of a set of k patterns is the smallest number of non-constant cross
sections over all independent relabellings of the k sequences. Two cross sections
can be made constant together exactly when they are connected (identical or differing
at every coordinate), so the largest number of simultaneously constant cross sections
is the heaviest clique of the connectivity graph. For k = 2 the same number is the
optimum of a linear assignment problem on the confusion matrix.
"""

import collections
import dataclasses
import enum
import itertools
import logging
import math
from collections.abc import Iterable, Iterator, Sequence as _SequenceABC
from typing import Optional

import networkx as nx

from seqpat._core import exceptions
from seqpat._core.assignment import build_confusion, solve_max_trace
from seqpat._core.sequence import (
    CrossSection,
    Pattern,
    Permutation,
    Sequence,
    SequenceSet,
    all_permutations,
    cross_sections,
    identity,
    is_constant,
)

logger: logging.Logger = logging.getLogger(__name__)

DEFAULT_AUTO_BRUTE_LIMIT = 10_000


class Algorithm(enum.Enum):
    """How to compute an exact pattern distance"""

    CLIQUE = "clique"
    BRUTE = "brute"
    HUNGARIAN = "hungarian"
    AUTO = "auto"


@dataclasses.dataclass(frozen=True)
class DistanceResult:
    """Distance of a set of patterns

    Attributes:
        distance: number of non-constant cross sections at the optimum
        constant_count: number of constant cross sections at the optimum
        witness: one optimal tuple of permutations, to be applied to the sequences
            the distance was computed on (canonical representatives for patterns)
    """

    distance: int
    constant_count: int
    witness: Optional[tuple[Permutation, ...]] = None

    @property
    def length(self) -> int:
        return self.distance + self.constant_count


def constant_count(Q: SequenceSet) -> int:
    """s(Q), the number of constant cross sections"""
    return sum(1 for c in cross_sections(Q) if is_constant(c))


def sequence_distance(Q: SequenceSet) -> int:
    """Number of indices at which the k sequences are not all identical"""
    return Q.length - constant_count(Q)


def sequence_distance_pair(q: Sequence, p: Sequence) -> int:
    """Plain Hamming distance"""
    return sequence_distance(SequenceSet((q, p)))


def connected(c: CrossSection, other: CrossSection) -> bool:
    """Identical or incompatible

    Raises:
        ShapeMismatch: different k
    """
    if len(c) != len(other):
        raise exceptions.ShapeMismatch(
            f"cross sections of size {len(c)} and {len(other)} cannot be compared"
        )

    matches = [a == b for a, b in zip(c.elements, other.elements)]
    return all(matches) or not any(matches)


def has_connected_pair(Q: SequenceSet) -> bool:
    """Whether two cross sections at different indices are connected"""
    sections = cross_sections(Q)
    return any(connected(a, b) for a, b in itertools.combinations(sections, 2))


@dataclasses.dataclass(frozen=True)
class ConnectivityGraph:
    """Distinct cross sections of Q weighted by multiplicity

    Identical cross sections are collapsed into one vertex, so an edge joins two
    vertices exactly when their cross sections are incompatible.

    Attributes:
        vertices: (cross section, multiplicity) in order of first occurrence in Q
        edges: unordered pairs of vertex indices
    """

    vertices: tuple[tuple[CrossSection, int], ...]
    edges: frozenset[frozenset[int]]

    @property
    def total_weight(self) -> int:
        return sum(weight for _, weight in self.vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self.edges

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for index, (section, weight) in enumerate(self.vertices):
            graph.add_node(index, weight=weight, section=section)
        graph.add_edges_from(tuple(edge) for edge in self.edges)
        return graph

    def max_weight_clique(self) -> tuple[list[int], int]:
        """Heaviest set of pairwise incompatible vertices, by branch and bound"""
        clique, weight = nx.max_weight_clique(self.to_networkx(), weight="weight")
        return sorted(clique), weight


def build_connectivity_graph(Q: SequenceSet) -> ConnectivityGraph:
    multiplicities = collections.Counter(cross_sections(Q))
    vertices = tuple(multiplicities.items())

    edges = frozenset(
        frozenset((u, v))
        for (u, (a, _)), (v, (b, _)) in itertools.combinations(enumerate(vertices), 2)
        if connected(a, b)
    )

    logger.debug(
        "connectivity graph: %d distinct cross sections, %d edges", len(vertices), len(edges)
    )
    return ConnectivityGraph(vertices, edges)


def constantize_witness(
    sections: Iterable[CrossSection], level: int
) -> tuple[Permutation, ...]:
    """Permutations under which every given cross section becomes constant

    The j-th permutation sends the j-th element of each distinct section to that
    section's first element. Symbols left unassigned are completed in ascending order.

    Raises:
        NotConnected: two sections are neither identical nor incompatible
        TooManySections: more distinct sections than symbols
        SymbolOutOfRange: a section uses a symbol above level
    """
    distinct = list(dict.fromkeys(sections))
    if not distinct:
        raise exceptions.ArityError("at least one cross section is needed")

    for c in distinct:
        if any(e > level for e in c.elements):
            raise exceptions.SymbolOutOfRange(f"{c} has symbols outside 1..{level}")

    for a, b in itertools.combinations(distinct, 2):
        if not connected(a, b):
            raise exceptions.NotConnected(a, b)

    if len(distinct) > level:
        raise exceptions.TooManySections(
            f"{len(distinct)} pairwise incompatible cross sections cannot all be constant with {level} symbols"
        )

    k = len(distinct[0])
    witness = []
    for j in range(k):
        images: dict[int, int] = {c[j]: c[0] for c in distinct}
        free_sources = [s for s in range(1, level + 1) if s not in images]
        free_targets = sorted(set(range(1, level + 1)) - set(images.values()))
        images.update(zip(free_sources, free_targets))
        witness.append(Permutation(tuple(images[s] for s in range(1, level + 1))))

    return tuple(witness)


def _check_patterns(T: _SequenceABC[Pattern]) -> SequenceSet:
    if len(T) < 2:
        raise exceptions.ArityError(f"distance needs k >= 2 patterns, got {len(T)}")
    return SequenceSet(tuple(t.canonical for t in T))


def _reduced_tuples(level: int, k: int) -> Iterator[tuple[Permutation, ...]]:
    """{identity} x S_l^(k-1)"""
    fixed = (identity(level),)
    for rest in itertools.product(tuple(all_permutations(level)), repeat=k - 1):
        yield fixed + rest


def _full_tuples(level: int, k: int) -> Iterator[tuple[Permutation, ...]]:
    yield from itertools.product(tuple(all_permutations(level)), repeat=k)


def iter_constant_counts(
    Q: SequenceSet, tuples: Optional[Iterable[tuple[Permutation, ...]]] = None
) -> Iterator[tuple[tuple[Permutation, ...], int]]:
    """s(Phi(Q)) for every Phi in tuples, {identity} x S_l^(k-1) by default"""
    if tuples is None:
        tuples = _reduced_tuples(Q.level, Q.k)

    # distinct cross sections, zero based, with their multiplicity
    weighted = [
        (tuple(x - 1 for x in c.elements), weight)
        for c, weight in collections.Counter(cross_sections(Q)).items()
    ]
    pairs = [(a, b, weight) for (a, b), weight in weighted] if Q.k == 2 else None

    for perms in tuples:
        tables = [perm.images for perm in perms]
        if pairs is not None:
            first, second = tables
            count = sum(weight for a, b, weight in pairs if first[a] == second[b])
        else:
            count = sum(
                weight
                for row, weight in weighted
                if len({table[x] for table, x in zip(tables, row)}) == 1
            )
        yield perms, count


def _best_over(
    Q: SequenceSet, tuples: Iterable[tuple[Permutation, ...]]
) -> DistanceResult:
    best_count = -1
    best_tuple: Optional[tuple[Permutation, ...]] = None
    for perms, count in iter_constant_counts(Q, tuples):
        if count > best_count:
            best_count, best_tuple = count, perms
            if count == Q.length:
                break

    return DistanceResult(Q.length - best_count, best_count, best_tuple)


def brute_search_size(level: int, k: int) -> int:
    """Number of permutation tuples the reduced brute force visits"""
    return math.factorial(level) ** (k - 1)


def distance_brute(Q: SequenceSet) -> DistanceResult:
    """Minimum of d(Phi(Q)) with the first permutation fixed to the identity"""
    return _best_over(Q, _reduced_tuples(Q.level, Q.k))


def distance_brute_full(Q: SequenceSet) -> DistanceResult:
    """Minimum of d(Phi(Q)) over all of S_l^k"""
    return _best_over(Q, _full_tuples(Q.level, Q.k))


def distance_clique(Q: SequenceSet) -> DistanceResult:
    graph = build_connectivity_graph(Q)
    clique, weight = graph.max_weight_clique()

    witness = constantize_witness((graph.vertices[v][0] for v in clique), Q.level)
    logger.debug("heaviest clique %s has weight %d", clique, weight)
    return DistanceResult(Q.length - weight, weight, witness)


def distance_hungarian(Q: SequenceSet) -> DistanceResult:
    """Exact distance of a pair via the maximum-trace assignment

    Raises:
        ArityError: Q does not hold exactly two sequences
    """
    value, sigma = solve_max_trace(build_confusion(Q))
    witness = (identity(Q.level), sigma.inverse())
    return DistanceResult(Q.length - value, value, witness)


def resolve_algorithm(
    algorithm: Algorithm | str, level: int, k: int, auto_brute_limit: int
) -> Algorithm:
    """Turn 'auto' into a concrete algorithm"""
    algorithm = Algorithm(algorithm)
    if algorithm is not Algorithm.AUTO:
        return algorithm

    if brute_search_size(level, k) <= auto_brute_limit:
        return Algorithm.BRUTE
    return Algorithm.CLIQUE


_SOLVERS = {
    Algorithm.CLIQUE: distance_clique,
    Algorithm.BRUTE: distance_brute,
    Algorithm.HUNGARIAN: distance_hungarian,
}


def sequence_set_distance(
    Q: SequenceSet,
    algorithm: Algorithm | str = Algorithm.AUTO,
    auto_brute_limit: int = DEFAULT_AUTO_BRUTE_LIMIT,
) -> DistanceResult:
    """Pattern distance of the patterns generated by the sequences in Q

    The witness applies to Q itself, not to canonical representatives.
    """
    chosen = resolve_algorithm(algorithm, Q.level, Q.k, auto_brute_limit)
    logger.debug("distance of k=%d n=%d l=%d using %s", Q.k, Q.length, Q.level, chosen.value)
    return _SOLVERS[chosen](Q)


def pattern_distance(
    T: _SequenceABC[Pattern],
    algorithm: Algorithm | str = Algorithm.AUTO,
    auto_brute_limit: int = DEFAULT_AUTO_BRUTE_LIMIT,
) -> DistanceResult:
    """Exact distance d(t_1, ..., t_k)

    Args:
        T: k >= 2 patterns of equal length and level
        algorithm: clique, brute, hungarian (k = 2 only) or auto, which uses brute
            force when (l!)^(k-1) <= auto_brute_limit and clique search otherwise
        auto_brute_limit: threshold for auto

    Raises:
        ArityError: fewer than two patterns, or hungarian with k > 2
        ShapeMismatch: patterns differ in length or level
    """
    return sequence_set_distance(_check_patterns(T), algorithm, auto_brute_limit)


def pattern_distance_pair(first: Pattern, second: Pattern) -> DistanceResult:
    """Distance of two patterns by linear assignment"""
    return distance_hungarian(SequenceSet((first.canonical, second.canonical)))


def check_triangle(first: Pattern, second: Pattern, third: Pattern) -> bool:
    """d(t1, t3) + d(t2, t3) >= d(t1, t2)"""
    return (
        pattern_distance_pair(first, third).distance
        + pattern_distance_pair(second, third).distance
        >= pattern_distance_pair(first, second).distance
    )


def distance_matrix(patterns: _SequenceABC[Pattern]) -> list[list[int]]:
    """All pairwise pattern distances; symmetric with a zero diagonal"""
    size = len(patterns)
    matrix = [[0] * size for _ in range(size)]
    for i, j in itertools.combinations(range(size), 2):
        d = pattern_distance_pair(patterns[i], patterns[j]).distance
        matrix[i][j] = matrix[j][i] = d
    return matrix
