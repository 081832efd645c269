"""Module containing tests of the one-pass class recognizers."""

from itertools import combinations
from pytest import raises, mark
from unittest import TestCase
import networkx as nx
from engine.algorithms import FVST, CVD, SVD, TVD
from engine.errors.analysis import NotATournament
from engine.errors.user_input import InvalidParams
from engine.recognizers.obstructions import spec_for, find_obstruction, \
    obstructions, recognizer_for, ObstructionSpec
from engine.recognizers.recognizers import AcyclicTournamentRecognizer, \
    SplitRecognizer, ThresholdRecognizer, ClusterRecognizer, \
    is_split_sequence, is_threshold_sequence
from engine.stream.replay import replay
from engine.utils.randomness import rng_for
from . import stream_of, stream_of_graph, noisy_stream_of_graph, \
    small_graphs, two_k2


def _verdict(recognizer, stream):
    replay(stream, [recognizer], 1)
    return recognizer.verdict()


def _decide(problem, graph, seed=0):
    recognizer = recognizer_for(problem, graph, seed)
    return bool(_verdict(recognizer, stream_of_graph(graph, problem)))


def _tournament(order, flips=()):
    """Transitive tournament along `order` with some arcs reversed."""
    arcs = []

    for i, j in combinations(range(len(order)), 2):
        u, v = order[i], order[j]
        arcs.append((v, u) if (i, j) in flips else (u, v))

    return arcs


class TournamentTest(TestCase):
    """Test case for the acyclic tournament recognizer."""

    def test_transitive(self):
        stream = stream_of(_tournament([2, 0, 3, 1]), problem=FVST)
        verdict = _verdict(AcyclicTournamentRecognizer(range(4)), stream)
        assert verdict.in_class
        assert verdict.witness_stats["arcs"] == 6

    def test_directed_triangle(self):
        stream = stream_of([(0, 1), (1, 2), (2, 0)], problem=FVST)
        assert not _verdict(AcyclicTournamentRecognizer(range(3)), stream)

    def test_single_vertex(self):
        stream = stream_of([], n=1, problem=FVST)
        assert _verdict(AcyclicTournamentRecognizer([0]), stream)

    def test_induced_subset(self):
        # The triangle 0 -> 1 -> 2 -> 0 is cut by leaving out vertex 2.
        arcs = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
        stream = stream_of(arcs, problem=FVST)
        assert _verdict(AcyclicTournamentRecognizer([0, 1, 3]), stream)
        assert not _verdict(AcyclicTournamentRecognizer([0, 1, 2]), stream)

    def test_missing_pair(self):
        stream = stream_of([(0, 1)], n=3, problem=FVST)
        recognizer = AcyclicTournamentRecognizer(range(3), strict=True)
        replay(stream, [recognizer], 1)

        with raises(NotATournament):
            recognizer.verdict()

    def test_random_tournaments(self):
        rng = rng_for(5, "tournaments")

        for _ in range(200):
            n = int(rng.integers(1, 7))
            arcs = [(u, v) if rng.random() < 0.5 else (v, u)
                    for u, v in combinations(range(n), 2)]
            stream = stream_of(arcs, n=n, problem=FVST)
            digraph = nx.DiGraph()
            digraph.add_nodes_from(range(n))
            digraph.add_edges_from(arcs)
            expected = nx.is_directed_acyclic_graph(digraph)
            assert bool(_verdict(AcyclicTournamentRecognizer(range(n)),
                                 stream)) == expected


def test_split_examples():
    assert not _decide(SVD, nx.cycle_graph(4))
    assert _decide(SVD, nx.star_graph(4))
    assert not _decide(SVD, two_k2())
    assert not _decide(SVD, nx.cycle_graph(5))
    assert _decide(SVD, nx.complete_graph(5))


def test_threshold_examples():
    assert not _decide(TVD, nx.path_graph(4))
    assert _decide(TVD, nx.complete_graph(3))
    assert _decide(TVD, nx.empty_graph(4))
    assert _decide(TVD, nx.star_graph(3))


def test_cluster_examples():
    k3_k2 = nx.Graph([(0, 1), (1, 2), (0, 2), (3, 4)])
    assert _decide(CVD, k3_k2)
    assert not _decide(CVD, nx.path_graph(3))
    assert _decide(CVD, nx.empty_graph(3))


def test_cluster_turnstile():
    graph = nx.Graph([(0, 1), (1, 2), (0, 2), (3, 4), (5, 6)])
    stream = noisy_stream_of_graph(graph, 3, problem=CVD)
    assert _verdict(ClusterRecognizer(range(7), 11), stream)


def test_sequence_tests():
    # 2K2 and C4 share their degree sequence with no split realization.
    assert not is_split_sequence([1, 1, 1, 1])
    assert is_split_sequence([3, 1, 1, 1])
    assert not is_threshold_sequence([2, 2, 1, 1])
    assert is_threshold_sequence([2, 2, 2])
    assert is_threshold_sequence([])


def test_words_are_linear():
    assert SplitRecognizer(range(10)).words() == 20
    assert ThresholdRecognizer(range(10)).words() == 20


def test_spec_for():
    assert spec_for(CVD).d == 3
    assert spec_for(SVD).d == 5
    assert spec_for(TVD).d == 4
    assert spec_for(FVST).directed

    with raises(InvalidParams):
        spec_for("oct")

    with raises(InvalidParams):
        ObstructionSpec("empty", [])


def test_find_obstruction():
    spec = spec_for(CVD)
    assert find_obstruction(nx.path_graph(3), spec) == frozenset([0, 1, 2])
    assert find_obstruction(nx.complete_graph(4), spec) is None
    assert obstructions(nx.path_graph(4), spec) == \
        {frozenset([0, 1, 2]), frozenset([1, 2, 3])}


@mark.slow
def test_exhaustive_agreement():
    failures = 0
    graphs = small_graphs(7)

    for problem in (SVD, TVD, CVD):
        spec = spec_for(problem)

        for seed, graph in enumerate(graphs):
            expected = find_obstruction(graph, spec) is None
            decided = _decide(problem, graph, seed)

            if problem == CVD:
                failures += decided != expected
            else:
                assert decided == expected, (problem, sorted(graph.edges()))

    assert failures <= len(graphs) // 100
