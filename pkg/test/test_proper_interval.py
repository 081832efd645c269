"""Module containing tests of proper interval reconstruction and the PIVD solver."""

from pytest import raises, mark
from unittest import TestCase
import networkx as nx
from engine.algorithms import PIVD
from engine.errors.analysis import NoInstance, ReconstructionFailure
from engine.errors.user_input import InvalidParams
from engine.proper_interval.consumers import verify_model
from engine.proper_interval.interval_order import IntervalOrder, \
    PartialOrder
from engine.proper_interval.middle import is_middle_vertex, inspect_middle
from engine.proper_interval.reconstruction import reconstruct_piv, _anchor, \
    piv_pass_bound
from engine.proper_interval.static import static_pivd, \
    find_piv_obstruction, w_set
from engine.solvers.classes import is_proper_interval, is_solution
from engine.solvers.oracle import brute_force_oracle
from engine.stream.replay import StreamRunner
from engine.utils.config import Settings
from engine.utils.randomness import rng_for
from . import stream_of, stream_of_graph, noisy_stream_of_graph, \
    small_graphs, net_graph, tent_graph, random_unit_model

P3_MODEL = "b0 b1 e0 b2 e1 e2"


def _reconstruct(graph, seed=0, stream=None):
    """Model and pass count of a run, the model being None on rejection."""
    runner = StreamRunner(stream or stream_of_graph(graph))

    try:
        model = runner.drive(reconstruct_piv(range(graph.number_of_nodes()),
                                             seed))
    except (NoInstance, ReconstructionFailure):
        return None, runner.passes

    return model, runner.passes


def _same(model, graph):
    return nx.utils.graphs_equal(model.to_graph(), graph)


class IntervalOrderTest(TestCase):
    """Test case for endpoint orders."""

    def test_adjacency(self):
        model = IntervalOrder.parse(P3_MODEL)

        assert model.adjacent(0, 1) and model.adjacent(2, 1)
        assert not model.adjacent(0, 2)
        assert not model.adjacent(1, 1)
        assert model.degrees() == {0: 1, 1: 2, 2: 1}
        assert _same(model, nx.path_graph(3))

    def test_serialize(self):
        assert IntervalOrder.parse(P3_MODEL).serialize() == P3_MODEL
        assert len(IntervalOrder.parse(P3_MODEL)) == 3

    def test_proper(self):
        assert IntervalOrder.parse(P3_MODEL).is_proper()

        nested = IntervalOrder.parse("b0 b1 e1 e0")
        assert nested.is_valid() and not nested.is_proper()
        assert not IntervalOrder.parse("e0 b0").is_valid()

    def test_malformed(self):
        for text in ["x1", "b", "bq", "b0 b0"]:
            with raises(ValueError):
                IntervalOrder.parse(text)

    def test_from_starts(self):
        model = IntervalOrder.from_starts({0: 0.0, 1: 0.5, 2: 1.2})
        assert model.serialize() == P3_MODEL

    def test_concat(self):
        model = IntervalOrder.concat([IntervalOrder.parse("b0 e0"),
                                      IntervalOrder.parse("b1 b2 e1 e2")])

        assert model.serialize() == "b0 e0 b1 b2 e1 e2"
        assert model.begins_before_end(1) == 3

    def test_degrees_match_graph(self):
        for seed in range(20):
            model = random_unit_model(12, seed)
            graph = model.to_graph()

            assert model.is_proper()
            assert model.degrees() == dict(graph.degree())


class PartialOrderTest(TestCase):
    """Test case for vertex partial orders."""

    def test_transitivity(self):
        order = PartialOrder([(0, 1), (1, 2)])

        assert order.less(0, 2)
        assert not order.less(2, 0)
        assert order.minimal([0, 1, 2]) == [0]
        assert order.maximal([0, 1, 2]) == [2]

    def test_linear_extension(self):
        assert PartialOrder([(2, 1)]).linear_extension([0, 1, 2, 3]) == \
            [0, 2, 1, 3]

    def test_conflict(self):
        order = PartialOrder([(0, 1), (1, 0)])

        with raises(NoInstance):
            order.closure()

        with raises(NoInstance):
            order.linear_extension([0, 1])

    def test_restricted(self):
        order = PartialOrder([(0, 5), (5, 2)]).restricted([0, 2])

        assert order.less(0, 2)
        assert order.pairs([0, 2]) == [(0, 2)]

    def test_refined(self):
        order = PartialOrder().refined([0, 1, 2], {0: 2, 1: 1, 2: 1}.get)

        assert order.less(1, 0) and order.less(2, 0)
        assert not order.less(1, 2) and not order.less(2, 1)


class VerifyModelTest(TestCase):
    """Test case for the one-pass model check."""

    def _verify(self, stream):
        return StreamRunner(stream).drive(
            verify_model(IntervalOrder.parse(P3_MODEL)))

    def test_exact(self):
        assert self._verify(stream_of_graph(nx.path_graph(3)))

    def test_foreign_edge(self):
        assert not self._verify(stream_of([(0, 1), (1, 2), (0, 2)]))

    def test_missing_edge(self):
        assert not self._verify(stream_of([(0, 1)], n=3))

    def test_turnstile(self):
        stream = noisy_stream_of_graph(nx.path_graph(3), seed=3)
        assert self._verify(stream)


class MiddleVertexTest(TestCase):
    """Test case for the middle-vertex test."""

    def test_examples(self):
        assert is_middle_vertex(nx.star_graph(5), 0)
        assert is_middle_vertex(nx.path_graph(20), 0)
        assert is_middle_vertex(nx.path_graph(21), 10)
        assert not is_middle_vertex(nx.path_graph(25), 0)

    def test_three_components(self):
        graph = nx.Graph([(0, 1), (1, 2), (1, 3), (1, 4)])

        with raises(NoInstance):
            is_middle_vertex(graph, 0)

    def test_inspect(self):
        runner = StreamRunner(stream_of_graph(nx.path_graph(21)))
        report = runner.drive(inspect_middle(range(21), 10, seed=1))

        assert report.neighborhood == {9, 10, 11}
        assert report.components == [set(range(9)), set(range(12, 21))]
        assert report.is_middle
        assert runner.passes == 2


class ReconstructionTest(TestCase):
    """Test case for the multi-pass proper interval reconstruction."""

    def test_path(self):
        model, _ = _reconstruct(nx.path_graph(4))

        assert model.is_proper()
        assert _same(model, nx.path_graph(4))

    def test_obstructions_rejected(self):
        for graph in [nx.star_graph(3), nx.cycle_graph(4), net_graph(),
                      tent_graph(), nx.cycle_graph(6)]:
            model, _ = _reconstruct(graph)
            assert model is None

    def test_empty(self):
        runner = StreamRunner(stream_of([], n=0))

        assert runner.drive(reconstruct_piv([])) == IntervalOrder([])
        assert runner.passes == 0

    def test_invalid_attempts(self):
        with raises(InvalidParams):
            StreamRunner(stream_of_graph(nx.path_graph(3))).drive(
                reconstruct_piv(range(3), attempts=0))

    def test_anchor_needs_right_end(self):
        middle = {0, 1, 2, 3}
        order = PartialOrder([(0, 1), (1, 2), (2, 3)])
        d_l = dict.fromkeys(middle, 0)
        d_m = {0: 1, 1: 2, 2: 2, 3: 1}
        runner = StreamRunner(stream_of([(0, 1), (1, 2), (2, 3)]))

        near = runner.drive(_anchor(middle, order, d_l, d_m,
                                    {0: 0, 1: 0, 2: 0, 3: 1}, True, True))
        assert near == {0, 1}

        # Only the order's last vertex 3 may end M, yet 2 has more R-neighbors.
        runner = StreamRunner(stream_of([(0, 1), (1, 2), (2, 3)]))

        with raises(NoInstance):
            runner.drive(_anchor(middle, order, d_l, d_m,
                                 {0: 0, 1: 0, 2: 1, 3: 0}, True, True))

    def test_disconnected(self):
        graph = nx.disjoint_union(nx.path_graph(3), nx.complete_graph(2))
        graph.add_node(5)
        model, _ = _reconstruct(graph)

        assert _same(model, graph)

    def test_random_unit_models(self):
        rng = rng_for(7, "piv-sizes")
        accepted = 0

        for trial in range(40):
            n = int(rng.integers(2, 9))
            graph = random_unit_model(n, trial).to_graph()
            model, passes = _reconstruct(graph, seed=trial)

            if model is None:
                continue

            accepted += 1
            assert _same(model, graph)
            assert passes <= piv_pass_bound(n, Settings().attempts_for(n))

        assert accepted >= 38

    def test_turnstile(self):
        graph = random_unit_model(14, 5).to_graph()
        model, _ = _reconstruct(graph, seed=5,
                                stream=noisy_stream_of_graph(graph, seed=5))

        assert _same(model, graph)

    def test_larger_models(self):
        accepted = 0

        for seed in range(10):
            graph = random_unit_model(40, seed, spread=12).to_graph()
            model, _ = _reconstruct(graph, seed=seed)
            accepted += model is not None and _same(model, graph)

        assert accepted >= 9

    def test_small_graphs(self):
        total = accepted = 0

        for graph in small_graphs(6):
            model, _ = _reconstruct(graph)

            if not is_proper_interval(graph):
                assert model is None
                continue

            total += 1
            accepted += model is not None and _same(model, graph)

        assert accepted >= 0.97 * total

    @mark.slow
    def test_all_small_graphs(self):
        total = accepted = 0

        for graph in small_graphs(7, 7):
            model, _ = _reconstruct(graph, seed=1)

            if not is_proper_interval(graph):
                assert model is None
                continue

            total += 1
            accepted += model is not None and _same(model, graph)

        assert accepted >= 0.97 * total


class StaticPivdTest(TestCase):
    """Test case for the static Proper Interval Vertex Deletion solver."""

    def test_obstructions(self):
        assert find_piv_obstruction(nx.path_graph(6)) is None
        assert find_piv_obstruction(nx.star_graph(3)) == [0, 1, 2, 3]
        assert find_piv_obstruction(nx.cycle_graph(5)) == [0, 1, 2, 3, 4]
        assert find_piv_obstruction(nx.cycle_graph(8)) is None

    def test_w_set(self):
        assert w_set(nx.cycle_graph(8), 0, 1) == {1}
        assert w_set(nx.cycle_graph(8), 1, 0) == {0}

    def test_long_cycle(self):
        graph = nx.cycle_graph(8)
        result = static_pivd(graph, 1)

        assert result.is_yes and len(result.solution) == 1
        assert is_solution(PIVD, graph, result.solution, 1)
        assert not static_pivd(graph, 0).is_yes

    def test_two_long_cycles(self):
        graph = nx.disjoint_union(nx.cycle_graph(8), nx.cycle_graph(9))

        assert not static_pivd(graph, 1).is_yes
        assert is_solution(PIVD, graph, static_pivd(graph, 2).solution, 2)

    def test_net(self):
        truth = brute_force_oracle(PIVD, net_graph(), 1)
        result = static_pivd(net_graph(), 1)

        assert result.is_yes == truth.is_yes
        assert is_solution(PIVD, net_graph(), result.solution, 1)

    def test_claw(self):
        assert not static_pivd(nx.star_graph(3), 0).is_yes
        assert static_pivd(nx.star_graph(3), 1).is_yes

    def test_proper_interval_input(self):
        result = static_pivd(random_unit_model(10, 2).to_graph(), 0)
        assert result.is_yes and result.solution == []

    def test_negative_budget(self):
        with raises(InvalidParams):
            static_pivd(nx.path_graph(3), -1)

    def test_against_oracle(self):
        for graph in small_graphs(6):
            for k in range(3):
                truth = brute_force_oracle(PIVD, graph, k)
                result = static_pivd(graph, k)

                assert result.is_yes == truth.is_yes

                if result.is_yes:
                    assert is_solution(PIVD, graph, result.solution, k)

    @mark.slow
    def test_against_oracle_larger(self):
        for graph in small_graphs(7, 7):
            for k in range(3):
                assert static_pivd(graph, k).is_yes == \
                    brute_force_oracle(PIVD, graph, k).is_yes

        for trial in range(40):
            graph = nx.gnp_random_graph(9, 0.4, seed=trial)

            for k in range(3):
                assert static_pivd(graph, k).is_yes == \
                    brute_force_oracle(PIVD, graph, k).is_yes
