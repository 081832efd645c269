"""Module used for pipeline abstraction by providing a common interface to every problem."""

from fastlog import log
from engine.cuts.pipelines import solve_cut
from engine.errors.analysis import VerificationFailed
from engine.errors.user_input import UserInputError, InvalidParams
from engine.hereditary.pipeline import solve_hereditary
from engine.hitting.pipeline import solve_vertex_deletion, compress_instance
from engine.preprocessing.materialize import materialize
from engine.results import NO_CONFIDENCE
from engine.results.run_report import RunReport
from engine.results.solve_result import SolveResult
from engine.stream.ledger import SpaceLedger
from engine.stream.replay import StreamRunner
from engine.utils.benchmark import time_snap, wall_time
from .verification import check_solution
from . import PROBLEMS, HITTING_PROBLEMS, DIRECTED_PROBLEMS, BVD, PIVD, \
    OCT, SFVS, MWC


def _check_problem(stream, problem):
    """
    Make sure the stream can be read as an instance of the problem.

    Raises:
        UserInputError -- If the problem is unknown or the stream
                          belongs to another problem.

    """
    if problem not in PROBLEMS:
        raise UserInputError(f"Invalid problem name: \"{problem}\"")

    declared = stream.header.problem

    if declared is not None and declared != problem:
        raise InvalidParams(f"Stream declares problem \"{declared}\", "
                            f"not \"{problem}\"")

    if stream.directed != (problem in DIRECTED_PROBLEMS):
        raise InvalidParams(f"Problem \"{problem}\" needs "
                            f"{'a directed' if not stream.directed else 'an undirected'}"
                            f" stream (declare it with \"prob {problem}\")")


def make_runner(stream, settings):
    """Stream runner honoring the pass cap, the space cap and the job count."""
    return StreamRunner(stream, SpaceLedger(settings.space_cap_words),
                        settings.passes_cap, settings.jobs)


def solve_stream(runner, problem, k, settings):
    """
    Run the pipeline of a problem, without verification.

    Arguments:
        runner {StreamRunner} -- Runner over the input stream.
        problem {string} -- Problem tag.
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Raises:
        UserInputError -- If the problem name is invalid.

    Returns:
        SolveResult -- Decision of the pipeline.

    """
    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    if problem in HITTING_PROBLEMS:
        return solve_vertex_deletion(runner, problem, k, settings)
    elif problem in (BVD, PIVD):
        return solve_hereditary(runner, problem, k, settings)
    elif problem in (OCT, SFVS, MWC):
        return solve_cut(runner, problem, k, settings)
    else:
        raise UserInputError(f"Invalid problem name: \"{problem}\"")


def verified(stream, problem, k, result, settings):
    """
    Check a YES result on the materialized graph.

    Returns:
        SolveResult -- The same result, or NO_CONFIDENCE when the
                       solution does not hold on the real input.

    """
    if not result.is_yes:
        return result

    try:
        check_solution(materialize(stream), problem, result.solution, k,
                       settings.protect_terminals)
    except VerificationFailed as ex:
        log.warning(f"Discarding solution: {ex.message}")
        stats = dict(result.stats, rejected_solution=result.solution)
        return SolveResult(NO_CONFIDENCE, None, stats)

    return result


def run_problem(stream, problem, k, settings):
    """
    Solve a stream instance and verify the answer.

    Arguments:
        stream {Stream} -- Parsed input stream.
        problem {string} -- Problem tag.
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Raises:
        UserInputError -- If the problem does not fit the stream.

    Returns:
        RunReport -- Verified decision with pass and space usage.

    """
    _check_problem(stream, problem)
    runner = make_runner(stream, settings)
    started = wall_time()

    log.info(f"Solving {problem} with k={k} on n={stream.n} "
             f"({len(stream)} events)")
    result = solve_stream(runner, problem, k, settings)
    time_snap("Pipeline finished")

    result = verified(stream, problem, k, result, settings)
    time_snap("Solution verified")

    return RunReport(problem, k, result, settings.seed, runner.passes,
                     runner.ledger, wall_time() - started)


def compress_stream(stream, problem, k, settings):
    """
    Build the d-Hitting Set instance of a finite-obstruction problem.

    Raises:
        UserInputError -- If the problem has no hitting set compression.

    Returns:
        HittingSetInstance -- Instance equivalent to (G, k).

    """
    _check_problem(stream, problem)

    if problem not in HITTING_PROBLEMS:
        raise UserInputError(f"Problem \"{problem}\" has no d-Hitting Set "
                             f"compression")

    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    return compress_instance(make_runner(stream, settings), problem, k,
                             settings)
