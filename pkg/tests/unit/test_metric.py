import itertools
import random

import pytest

from seqpat._core import exceptions
from seqpat._core.cycles import format_witness
from seqpat._core.enumeration import enumerate_standard
from seqpat._core.metric import (
    Algorithm,
    DistanceResult,
    brute_search_size,
    build_connectivity_graph,
    check_triangle,
    connected,
    constant_count,
    constantize_witness,
    distance_brute,
    distance_brute_full,
    distance_clique,
    distance_hungarian,
    distance_matrix,
    has_connected_pair,
    pattern_distance,
    pattern_distance_pair,
    resolve_algorithm,
    sequence_distance,
    sequence_distance_pair,
    sequence_set_distance,
)
from seqpat._core.sequence import (
    CrossSection,
    Permutation,
    Sequence,
    SequenceSet,
    apply_permutation,
    identity,
    new_sequence,
    pattern_of,
)


def _patterns(*rows, level=3):
    return [pattern_of(new_sequence(row, level)) for row in rows]


def _achieved(Q: SequenceSet, result: DistanceResult) -> int:
    """Constant cross sections left after applying the witness"""
    return constant_count(Q.apply(result.witness))


class TestSequenceDistance:
    def test_three_sequences(self, three_sequences):
        assert sequence_distance(three_sequences) == 4
        assert constant_count(three_sequences) == 1

    def test_identical(self):
        q = new_sequence([1, 2, 3], 3)
        assert sequence_distance(SequenceSet((q, q, q))) == 0

    def test_relabelled(self, three_sequences):
        swap = Sequence((1, 1, 3, 2, 1), 3)
        first, _, third = three_sequences.sequences
        relabelled = SequenceSet((first, swap, third))
        assert sequence_distance(relabelled) == 1

    def test_pair_is_hamming(self):
        q = new_sequence([1, 2, 3, 1], 3)
        p = new_sequence([1, 3, 3, 2], 3)
        assert sequence_distance_pair(q, p) == 2

    def test_shape(self):
        with pytest.raises(exceptions.ShapeMismatch):
            sequence_distance_pair(new_sequence([1, 2], 3), new_sequence([1, 2, 3], 3))


class TestConnected:
    @pytest.mark.parametrize(
        "first, second, expected",
        (
            ((1, 3, 1), (1, 3, 1), True),
            ((1, 2), (2, 1), True),
            ((1, 2), (1, 3), False),
            ((3, 1, 2), (2, 2, 2), False),
            ((1, 3, 1), (2, 2, 2), True),
        ),
    )
    def test_connected(self, first, second, expected):
        assert connected(CrossSection(first), CrossSection(second)) == expected
        assert connected(CrossSection(second), CrossSection(first)) == expected

    def test_different_sizes(self):
        with pytest.raises(exceptions.ShapeMismatch):
            connected(CrossSection((1, 2)), CrossSection((1, 2, 3)))

    def test_has_connected_pair(self, three_sequences):
        assert has_connected_pair(three_sequences)

        m = SequenceSet.from_cross_sections([(1, 1), (1, 2)], 2)
        assert not has_connected_pair(m)

    @pytest.mark.parametrize("level", (2, 3))
    def test_no_connected_pair_iff_largest_distance(self, level):
        """A pair reaches distance n - 1 exactly when no two cross sections are connected"""
        outcomes = set()
        for n in range(1, 6):
            for first in enumerate_standard(n, level):
                for elements in itertools.product(range(1, level + 1), repeat=n):
                    second = Sequence(elements, level)
                    d = pattern_distance_pair(pattern_of(first), pattern_of(second)).distance
                    isolated = not has_connected_pair(SequenceSet((first, second)))

                    assert (d == n - 1) == isolated, (first, second)
                    outcomes.add(isolated)

        assert outcomes == {True, False}

    @pytest.mark.parametrize("k, level", itertools.product((2, 3), (2, 3)))
    def test_connected_iff_constant_together(self, k, level):
        """Two cross sections can both be made constant exactly when they are connected"""
        sections = list(itertools.product(range(1, level + 1), repeat=k))
        for c, d in itertools.product(sections, repeat=2):
            Q = SequenceSet.from_cross_sections([c, d], level)
            together = distance_brute_full(Q).constant_count == 2

            assert together == connected(CrossSection(c), CrossSection(d)), (c, d)


class TestConnectivityGraph:
    def test_three_sequences(self, three_sequences):
        graph = build_connectivity_graph(three_sequences)
        sections = [(c.elements, w) for c, w in graph.vertices]

        assert sections == [((1, 3, 1), 3), ((3, 1, 2), 1), ((2, 2, 2), 1)]
        assert graph.total_weight == 5
        assert graph.has_edge(0, 2)
        assert graph.has_edge(0, 1)
        assert not graph.has_edge(1, 2)

    def test_duplicated_sequence_is_complete(self):
        q = new_sequence([1, 2, 3, 1, 2], 3)
        graph = build_connectivity_graph(SequenceSet((q, q)))

        assert len(graph.vertices) == 3
        assert len(graph.edges) == 3
        assert graph.max_weight_clique()[1] == 5

    def test_single_index(self):
        Q = SequenceSet((new_sequence([2], 3), new_sequence([1], 3)))
        graph = build_connectivity_graph(Q)

        assert len(graph.vertices) == 1
        assert not graph.edges
        assert graph.max_weight_clique() == ([0], 1)

    def test_networkx_weights(self, three_sequences):
        nx_graph = build_connectivity_graph(three_sequences).to_networkx()
        assert [nx_graph.nodes[v]["weight"] for v in sorted(nx_graph)] == [3, 1, 1]


class TestConstantizeWitness:
    def test_relabelling_for_two_sections(self):
        witness = constantize_witness([CrossSection((1, 3, 1)), CrossSection((2, 2, 2))], 3)
        assert format_witness(witness) == "[(1),(13),(1)]"

    def test_single_section(self):
        c = CrossSection((2, 3, 1))
        phi = constantize_witness([c], 3)
        assert len({perm(x) for perm, x in zip(phi, c)}) == 1

    def test_full_link(self):
        witness = constantize_witness([CrossSection((1, 2)), CrossSection((2, 1))], 2)
        assert format_witness(witness) == "[(1),(12)]"

    def test_duplicates_ignored(self):
        sections = [CrossSection((1, 3, 1))] * 3 + [CrossSection((2, 2, 2))]
        assert constantize_witness(sections, 3) == constantize_witness(sections[2:], 3)

    def test_not_connected(self):
        with pytest.raises(exceptions.NotConnected) as err:
            constantize_witness([CrossSection((1, 2)), CrossSection((1, 3))], 3)
        assert err.value.pair == (CrossSection((1, 2)), CrossSection((1, 3)))

    def test_too_many(self):
        sections = [CrossSection((1, 2)), CrossSection((2, 3)), CrossSection((3, 1))]
        with pytest.raises(exceptions.TooManySections):
            constantize_witness(sections, 2)

    @pytest.mark.parametrize(
        "sections", ([CrossSection((1, 4))], [CrossSection((1, 2)), CrossSection((4, 3))])
    )
    def test_symbol_above_level(self, sections):
        with pytest.raises(exceptions.SymbolOutOfRange):
            constantize_witness(sections, 3)

    def test_random_cliques(self, random_set):
        """Every clique the graph search returns can be made constant at once"""
        rng = random.Random(7)
        for _ in range(100):
            Q = random_set(rng, rng.randint(1, 10), rng.randint(1, 4), rng.randint(2, 4))
            graph = build_connectivity_graph(Q)
            clique, weight = graph.max_weight_clique()
            witness = constantize_witness([graph.vertices[v][0] for v in clique], Q.level)

            assert constant_count(Q.apply(witness)) >= weight


class TestPatternDistance:
    def test_three_patterns(self, three_sequences):
        T = three_sequences.patterns()
        for algorithm in ("clique", "brute", "auto"):
            result = pattern_distance(T, algorithm)
            assert result.distance == 1
            assert result.constant_count == 4
            assert result.length == 5

    def test_witness_applies_to_sequences(self, three_sequences):
        for algorithm in (Algorithm.CLIQUE, Algorithm.BRUTE):
            result = sequence_set_distance(three_sequences, algorithm)
            assert _achieved(three_sequences, result) == 4

    def test_equivalent_pair(self):
        T = _patterns([1, 1, 3, 2, 1], [2, 2, 1, 3, 2])
        assert pattern_distance_pair(*T).distance == 0
        assert pattern_distance(T).distance == 0

    def test_pair(self):
        T = _patterns([1, 1, 3, 2, 1], [1, 1, 2, 2, 1])
        assert pattern_distance_pair(*T).distance == 1
        assert pattern_distance(T, "hungarian").distance == 1

    def test_copies(self):
        T = _patterns([1, 2, 2, 3], [1, 2, 2, 3], [1, 2, 2, 3], [1, 2, 2, 3])
        assert pattern_distance(T, "clique").distance == 0

    def test_stacked_construction(self):
        T = _patterns([1, 1, 1, 1, 1], [1, 2, 1, 2, 1], level=2)
        assert pattern_distance(T, "brute").distance == 2
        assert pattern_distance(T, "clique").distance == 2

    def test_needs_two(self):
        with pytest.raises(exceptions.ArityError):
            pattern_distance(_patterns([1, 2]))

    def test_shape(self):
        with pytest.raises(exceptions.ShapeMismatch):
            pattern_distance(_patterns([1, 2], [1, 2, 1]))

    def test_hungarian_needs_pair(self, three_sequences):
        with pytest.raises(exceptions.ArityError):
            pattern_distance(three_sequences.patterns(), "hungarian")

    def test_unknown_algorithm(self, three_sequences):
        with pytest.raises(ValueError):
            pattern_distance(three_sequences.patterns(), "simulated annealing")

    def test_upper_bound(self, random_set):
        rng = random.Random(11)
        for _ in range(100):
            Q = random_set(rng, rng.randint(1, 10), rng.randint(1, 4), rng.randint(2, 3))
            assert 0 <= sequence_set_distance(Q).distance <= Q.length - 1


class TestOracles:
    @pytest.mark.parametrize("seed", range(10))
    def test_pair_algorithms_agree(self, seed, random_set):
        """Assignment, clique search and brute force over every pair of relabellings"""
        rng = random.Random(seed)
        for _ in range(100):
            Q = random_set(rng, rng.randint(1, 20), rng.randint(1, 5), 2)
            hungarian = distance_hungarian(Q)
            clique = distance_clique(Q)
            brute = distance_brute_full(Q)
            first, second = Q.patterns()

            assert hungarian.distance == clique.distance == brute.distance
            assert pattern_distance_pair(first, second).distance == brute.distance
            assert _achieved(Q, hungarian) == hungarian.constant_count
            assert _achieved(Q, clique) == clique.constant_count

    @pytest.mark.parametrize("seed", range(5))
    def test_kway_clique_matches_brute(self, seed, random_set):
        rng = random.Random(1000 + seed)
        for _ in range(100):
            Q = random_set(rng, rng.randint(1, 10), rng.randint(1, 3), 3)
            clique = distance_clique(Q)
            brute = distance_brute(Q)

            assert clique.distance == brute.distance
            assert _achieved(Q, clique) == clique.constant_count

    @pytest.mark.parametrize("k, level", itertools.product((2, 3), (2, 3)))
    def test_reduced_brute_matches_full(self, k, level, random_set):
        rng = random.Random(2024 + 10 * k + level)
        for _ in range(50):
            Q = random_set(rng, rng.randint(1, 6), level, k)
            assert distance_brute(Q).distance == distance_brute_full(Q).distance

    def test_brute_first_permutation_fixed(self, three_sequences):
        assert distance_brute(three_sequences).witness[0] == identity(3)


class TestMetricAxioms:
    def test_identity_of_indiscernibles(self):
        patterns = list(enumerate_standard(4, 3))
        for first, second in itertools.product(patterns, repeat=2):
            d = pattern_distance_pair(pattern_of(first), pattern_of(second)).distance
            assert (d == 0) == (first == second)

    def test_symmetry_and_triangle(self):
        rng = random.Random(31337)
        for _ in range(1000):
            level = rng.randint(1, 4)
            n = rng.randint(1, 10)
            t1, t2, t3 = (
                pattern_of(Sequence(tuple(rng.randint(1, level) for _ in range(n)), level))
                for _ in range(3)
            )

            assert pattern_distance_pair(t1, t2).distance == pattern_distance_pair(t2, t1).distance
            assert check_triangle(t1, t2, t3)

    def test_triangle_with_equal_patterns(self):
        t1, t2, t3 = _patterns([1, 1, 3, 2, 1], [2, 2, 1, 3, 2], [1, 1, 2, 2, 1])
        assert check_triangle(t1, t2, t3)
        assert pattern_distance_pair(t1, t2).distance == 0

    def test_relabelling_invariance(self, random_set):
        """Relabelling the sequences does not change the pattern distance"""
        rng = random.Random(5)
        for _ in range(50):
            Q = random_set(rng, rng.randint(1, 8), 3, 3)
            perms = [Permutation(tuple(rng.sample(range(1, 4), 3))) for _ in range(Q.k)]

            moved = SequenceSet(tuple(apply_permutation(q, phi) for q, phi in zip(Q, perms)))
            assert distance_clique(moved).distance == distance_clique(Q).distance


class TestDistanceMatrix:
    def test_matrix(self):
        T = _patterns([1, 1, 3, 2, 1], [2, 2, 1, 3, 2], [1, 1, 2, 2, 1])
        assert distance_matrix(T) == [[0, 0, 1], [0, 0, 1], [1, 1, 0]]

    def test_empty(self):
        assert distance_matrix([]) == []


class TestResolveAlgorithm:
    def test_small_uses_brute(self):
        assert resolve_algorithm("auto", 3, 3, 10_000) is Algorithm.BRUTE

    def test_large_uses_clique(self):
        assert brute_search_size(8, 2) > 10_000
        assert resolve_algorithm("auto", 8, 2, 10_000) is Algorithm.CLIQUE

    def test_explicit(self):
        assert resolve_algorithm(Algorithm.HUNGARIAN, 8, 2, 1) is Algorithm.HUNGARIAN
