"""Module containing tests of sparse recovery, connectivity and double cover sketches."""

from math import log2
from pytest import raises, mark
from unittest import TestCase
import networkx as nx
from engine.errors.analysis import SketchFailure
from engine.errors.user_input import InvalidParams
from engine.preprocessing.materialize import materialize
from engine.sketches.connectivity import ConnectivitySketch, \
    forest_components
from engine.sketches.double_cover import DoubleCoverSketch, \
    double_cover_edges, is_bipartite
from engine.sketches.sparse_recovery import SparseRecoveryState
from engine.stream.replay import replay
from engine.utils.config import Settings
from engine.utils.randomness import rng_for
from . import stream_of, stream_of_graph, noisy_stream_of_graph, small_graphs


def _random_trial(capacity, survivors, universe, seed):
    """Random turnstile sequence leaving `survivors` live items."""
    rng = rng_for(seed, capacity, survivors)
    items = [int(x) for x in rng.choice(universe, survivors + 20,
                                        replace=False)]
    state = SparseRecoveryState(capacity, universe)

    for item in items:
        state.update(item, 1)

    for item in items[survivors:]:
        state.update(item, -1)

    return state, set(items[:survivors])


class SparseRecoveryTest(TestCase):
    """Test case for the deterministic sparse recovery structure."""

    def test_insert_delete(self):
        state = SparseRecoveryState(4, 100)
        state.update(5, 1).update(9, 1).update(5, -1)
        assert state.recover() == {9}

    def test_over_capacity(self):
        state = SparseRecoveryState(3, 100)

        for item in range(4):
            state.update(item, 1)

        assert state.recover() is None

    def test_cancel_to_empty(self):
        state = SparseRecoveryState(2, 10)
        state.update(3, 1).update(3, -1)

        assert state.recover() == set()
        assert not any(state.syndromes)

    def test_empty(self):
        assert SparseRecoveryState(5, 10).recover() == set()

    def test_edge_encoding(self):
        n = 5
        state = SparseRecoveryState(4, n * n)
        state.update(0 * n + 1, 1).update(3 * n + 4, 1)
        assert {divmod(e, n) for e in state.recover()} == {(0, 1), (3, 4)}

    def test_forty_under_sixty_four(self):
        for seed in range(30):
            state, truth = _random_trial(64, 40, 5000, seed)
            assert state.recover() == truth

    def test_merge_and_counts(self):
        first = SparseRecoveryState(4, 50).update(7, 1).update(8, 1)
        second = SparseRecoveryState(4, 50).update(8, 1).update(9, -1)
        merged = first + second

        assert merged.recover_counts() == {7: 1, 8: 2, 9: -1}
        assert merged.recover() is None

    def test_merge_incompatible(self):
        with raises(InvalidParams):
            SparseRecoveryState(4, 50) + SparseRecoveryState(5, 50)

    def test_serialize(self):
        state = SparseRecoveryState(3, 40).update(11, 1).update(2, 1)
        parsed = SparseRecoveryState.parse(state.serialize())

        assert parsed == state
        assert parsed.recover() == {2, 11}

    @mark.slow
    def test_capacities(self):
        for capacity in (8, 32, 128):
            for trial in range(1000):
                state, truth = _random_trial(capacity, capacity, 10_000, trial)
                assert state.recover() == truth

                state, _ = _random_trial(capacity, capacity + 1 + trial % 7,
                                         10_000, trial)
                assert state.recover() is None


def _sketch_of(stream, seed=1, c=3, strict=False, vertices=None):
    sketch = ConnectivitySketch(range(stream.n) if vertices is None
                                else vertices, seed, c, strict)
    replay(stream, [sketch], 1)
    return sketch


def _partition(components):
    return sorted(sorted(c) for c in components)


class ConnectivitySketchTest(TestCase):
    """Test case for spanning forests extracted from linear sketches."""

    def test_path(self):
        stream = stream_of([(0, 1), (1, 2), (2, 3)])
        assert sorted(_sketch_of(stream).spanning_forest()) == \
            [(0, 1), (1, 2), (2, 3)]

    def test_triangle(self):
        sketch = _sketch_of(stream_of([(0, 1), (1, 2), (0, 2)]))

        assert len(sketch.spanning_forest()) == 2
        assert sketch.component_count() == 1

    def test_edgeless(self):
        sketch = _sketch_of(stream_of([], n=4))
        assert _partition(sketch.components()) == [[0], [1], [2], [3]]

    def test_subset(self):
        stream = stream_of([(0, 1), (1, 2), (2, 3), (3, 0)])
        sketch = _sketch_of(stream, vertices={0, 1, 3})

        assert _partition(sketch.components()) == [[0, 1, 3]]
        assert set(sketch.spanning_forest()) == {(0, 1), (0, 3)}

    def test_linearity(self):
        stream = noisy_stream_of_graph(nx.cycle_graph(8), seed=2)
        half = len(stream.events) // 2
        first, second = stream.events[:half], stream.events[half:]

        def sketch_of(events):
            sketch = ConnectivitySketch(range(8), 5)

            for event in events:
                sketch.on_event(event)

            return sketch

        assert sketch_of(first + second) == sketch_of(second + first)
        assert sketch_of(first + second) == \
            sketch_of(first) + sketch_of(second)

    def test_serialize_load(self):
        sketch = _sketch_of(stream_of([(0, 1), (2, 3)]))
        loaded = ConnectivitySketch(range(4), 1).load(sketch.serialize())

        assert loaded == sketch
        assert _partition(loaded.components()) == [[0, 1], [2, 3]]

    def test_invalid_parameter(self):
        with raises(InvalidParams):
            ConnectivitySketch(range(3), 0, c=0)

    def test_random_turnstile(self):
        matches = 0

        for trial in range(30):
            graph = nx.gnm_random_graph(64, 48, seed=trial)
            stream = noisy_stream_of_graph(graph, trial)
            forest = _sketch_of(stream, seed=trial).spanning_forest()

            assert not forest or nx.is_forest(nx.Graph(forest))
            assert all(graph.has_edge(u, v) for u, v in forest)

            matches += _partition(forest_components(range(64), forest)) == \
                _partition(nx.connected_components(graph))

        assert matches >= 29

    def test_words_scale(self):
        for exponent in range(8, 12):
            n = 2 ** exponent
            words = ConnectivitySketch(range(n), 0).words()
            assert words <= 12 * n * log2(n) ** 3

    @mark.slow
    def test_random_turnstile_many(self):
        matches = 0

        for trial in range(500):
            graph = nx.gnm_random_graph(64, 40 + trial % 50, seed=trial)
            stream = noisy_stream_of_graph(graph, trial)
            forest = _sketch_of(stream, seed=trial).spanning_forest()

            assert all(graph.has_edge(u, v) for u, v in forest)
            matches += _partition(forest_components(range(64), forest)) == \
                _partition(nx.connected_components(graph))

        assert matches >= 495


class StrictSketchTest(TestCase):
    """Test case for strict sketches that cannot finish."""

    def test_strict_failure(self):
        sketch = _sketch_of(stream_of([(0, 1), (1, 2)]), strict=True)
        sketch.cnt[:] = 0
        sketch.idsum[:] = 0
        sketch.fp[:, :, :, 0] = 1

        with raises(SketchFailure):
            sketch.spanning_forest()

        sketch.strict = False
        assert sketch.spanning_forest() == []

    def test_strict_by_default(self):
        sketch = ConnectivitySketch(range(3), 1)
        sketch.fp[:, :, :, 0] = 1

        with raises(SketchFailure):
            sketch.components()

        assert Settings().strict_sketches

    @mark.slow
    def test_weak_sketches_never_miscount(self):
        """With c = 1 a sketch may fail, but never reports wrong components."""
        failures = 0

        for trial in range(200):
            graph = nx.gnp_random_graph(64, 0.08, seed=trial)
            sketch = ConnectivitySketch(range(64), trial, c=1)
            replay(stream_of_graph(graph), [sketch], 1)

            try:
                components = sketch.components()
            except SketchFailure:
                failures += 1
                continue

            assert _partition(components) == \
                _partition(nx.connected_components(graph))
            assert sketch.component_count() == \
                nx.number_connected_components(graph)

        assert failures < 200


def test_double_cover_edges():
    assert double_cover_edges(1, 2, 5) == ((1, 7), (6, 2))


def _bipartite(stream):
    graph_sketch = _sketch_of(stream, seed=3)
    cover = DoubleCoverSketch(range(stream.n), stream.n, 4)
    replay(stream, [cover], 1)
    return is_bipartite(graph_sketch, cover)


def test_double_cover_examples():
    assert _bipartite(stream_of_graph(nx.cycle_graph(4)))
    assert not _bipartite(stream_of_graph(nx.cycle_graph(3)))
    assert _bipartite(stream_of([], n=5))


def test_projected_forest():
    stream = stream_of_graph(nx.path_graph(4))
    cover = DoubleCoverSketch(range(4), 4, 0)
    replay(stream, [cover], 1)

    assert cover.projected_forest() == {(0, 1), (1, 2), (2, 3)}


def test_double_cover_small_connected():
    for graph in small_graphs(6, 2):
        if nx.is_connected(graph):
            stream = stream_of_graph(graph)
            assert _bipartite(stream) == nx.is_bipartite(graph)


@mark.slow
def test_double_cover_random():
    agree = 0

    for trial in range(500):
        graph = nx.gnm_random_graph(64, 40 + trial % 60, seed=trial)
        agree += _bipartite(stream_of_graph(graph)) == nx.is_bipartite(graph)

    assert agree >= 495
