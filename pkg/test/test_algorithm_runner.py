"""
Module containing tests of the algorithm runner.

The runner only dispatches to the pipelines and verifies their answers,
so these tests focus on dispatch, verification and the planted
instance generators feeding it.
"""

from pytest import raises, mark
from unittest import TestCase
import networkx as nx
from engine.errors.user_input import UserInputError, InvalidParams
from engine.algorithms import PROBLEMS, FVST, CVD, SVD, OCT, SFVS, MWC
from engine.algorithms.algorithm_runner import run_problem, verified, \
    compress_stream
from engine.algorithms.generators import generate
from engine.algorithms.verification import VALID, SIZE_EXCEEDED, \
    OUT_OF_RANGE, TERMINAL_DELETED, NOT_A_SOLUTION, solution_issue, \
    verify_solution
from engine.hitting.instance import HittingSetInstance
from engine.preprocessing.materialize import materialize
from engine.results import YES, NO, NO_CONFIDENCE
from engine.results.solve_result import SolveResult
from engine.utils.config import Settings
from . import stream_of, stream_of_graph


class AlgorithmRunnerTest(TestCase):
    """Test case for dispatch and verification of pipeline answers."""

    def test_cluster_path(self):
        stream = stream_of_graph(nx.path_graph(3), CVD)

        assert run_problem(stream, CVD, 0, Settings()).result.decision == NO

        report = run_problem(stream, CVD, 1, Settings())
        assert report.result.decision == YES
        assert len(report.result.solution) == 1
        assert report.passes >= 1

    def test_odd_cycle(self):
        stream = stream_of_graph(nx.cycle_graph(5), OCT)
        report = run_problem(stream, OCT, 1, Settings(seed=3))

        assert report.result.is_yes
        assert verify_solution(stream, OCT, report.result.solution, 1)[0]

    def test_report_lines(self):
        stream = stream_of_graph(nx.complete_graph(4), CVD)
        lines = run_problem(stream, CVD, 0, Settings(seed=7)).lines()

        assert lines[:5] == ["problem=cvd", "k=0", "decision=YES",
                             "solution=", "seed=7"]
        assert lines[5].startswith("passes=")
        assert lines[6].startswith("peak_words=")

    def test_unknown_problem(self):
        with raises(UserInputError):
            run_problem(stream_of([(0, 1)]), "XYZ", 1, Settings())

    def test_declared_problem_mismatch(self):
        stream = stream_of([(0, 1)], problem=SVD)

        with raises(InvalidParams):
            run_problem(stream, CVD, 1, Settings())

    def test_directed_problem_on_graph(self):
        with raises(InvalidParams):
            run_problem(stream_of([(0, 1), (1, 2)]), FVST, 1, Settings())

    def test_negative_budget(self):
        with raises(InvalidParams):
            run_problem(stream_of([(0, 1)]), CVD, -1, Settings())

    def test_invalid_yes_is_demoted(self):
        stream = stream_of_graph(nx.cycle_graph(5), OCT)
        result = verified(stream, OCT, 1, SolveResult(YES, []), Settings())

        assert result.decision == NO_CONFIDENCE
        assert result.solution is None
        assert result.stats["rejected_solution"] == []

    def test_valid_yes_is_kept(self):
        stream = stream_of_graph(nx.cycle_graph(5), OCT)
        result = SolveResult(YES, [2])

        assert verified(stream, OCT, 1, result, Settings()) is result

    def test_no_is_not_verified(self):
        stream = stream_of_graph(nx.cycle_graph(5), OCT)
        result = SolveResult(NO, None)

        assert verified(stream, OCT, 0, result, Settings()) is result

    def test_compress(self):
        stream = stream_of_graph(nx.path_graph(3), CVD)
        instance = compress_stream(stream, CVD, 1, Settings())

        assert isinstance(instance, HittingSetInstance)
        assert instance.k == 1
        assert not instance.trivially_no

    def test_compress_cut_problem(self):
        with raises(UserInputError):
            compress_stream(stream_of_graph(nx.cycle_graph(5), OCT), OCT, 1,
                            Settings())


class VerificationTest(TestCase):
    """Test case for the checks behind `verify`."""

    def setUp(self):
        self.cycle = materialize(stream_of_graph(nx.cycle_graph(5), OCT))

    def test_valid(self):
        assert solution_issue(self.cycle, OCT, [0], 1) == VALID

    def test_not_a_solution(self):
        assert solution_issue(self.cycle, OCT, [], 1) == NOT_A_SOLUTION

    def test_size(self):
        assert solution_issue(self.cycle, OCT, [0, 1], 1) == SIZE_EXCEEDED
        assert solution_issue(self.cycle, OCT, [0, 1]) == VALID

    def test_out_of_range(self):
        assert solution_issue(self.cycle, OCT, [7], 1) == OUT_OF_RANGE

    def test_protected_terminals(self):
        stream = stream_of([(0, 1), (1, 2)], problem=MWC, terminals=[0, 2])

        assert verify_solution(stream, MWC, [0], 1) == (True, VALID)
        assert verify_solution(stream, MWC, [0], 1, protect_terminals=True) \
            == (False, TERMINAL_DELETED)
        assert verify_solution(stream, MWC, [1], 1, protect_terminals=True) \
            == (True, VALID)


class GeneratorTest(TestCase):
    """Test case for planted instance generators."""

    def test_plant_is_solution(self):
        for problem in PROBLEMS:
            for seed in range(5):
                stream = generate(problem, 12, 2, seed)
                plant = stream.header.plant

                assert len(plant) == 2
                assert stream.header.problem == problem
                assert verify_solution(stream, problem, plant, 2) == \
                    (True, VALID), (problem, seed)

    def test_noise_keeps_final_graph(self):
        for problem in PROBLEMS:
            quiet = generate(problem, 10, 1, seed=4)
            noisy = generate(problem, 10, 1, seed=4, noise=0.5)

            assert len(noisy) >= len(quiet)
            assert verify_solution(noisy, problem, noisy.header.plant, 1)[0]

    def test_deterministic(self):
        first = generate(CVD, 15, 3, seed=11, noise=0.2)
        second = generate(CVD, 15, 3, seed=11, noise=0.2)

        assert first.events == second.events
        assert first.header.plant == second.header.plant

    def test_terminals(self):
        stream = generate(MWC, 9, 1, seed=2)
        assert len(stream.terminals) == 3
        assert not stream.terminals & set(stream.header.plant)

        assert len(generate(SFVS, 9, 1, seed=2).terminals) == 3

    def test_tournament(self):
        graph = materialize(generate(FVST, 6, 1, seed=0))
        assert graph.is_directed()
        assert graph.number_of_edges() == 15

    def test_no_plant(self):
        stream = generate(OCT, 8, 0, seed=1)
        assert stream.header.plant == []
        assert nx.is_bipartite(materialize(stream))

    def test_invalid(self):
        with raises(InvalidParams):
            generate("XYZ", 10, 1)

        with raises(InvalidParams):
            generate(CVD, 0, 0)

        with raises(InvalidParams):
            generate(CVD, 5, 6)

        with raises(InvalidParams):
            generate(MWC, 5, 4)

        with raises(InvalidParams):
            generate(CVD, 5, 1, noise=1.5)


@mark.slow
def test_planted_instances_are_solved():
    """Pipelines answer YES on planted instances at the planted budget."""
    for problem in (CVD, SVD, OCT, MWC):
        for seed in range(3):
            stream = generate(problem, 10, 1, seed, noise=0.2)
            report = run_problem(stream, problem, 1, Settings(seed=seed))

            assert report.result.is_yes, (problem, seed)
