"""Module containing the check of deletion sets against the materialized input graph."""

from engine.errors.analysis import VerificationFailed
from engine.preprocessing.materialize import materialize
from engine.solvers.classes import is_solution
from . import MWC

# Reasons reported by `verify_solution`.
VALID = "ok"
SIZE_EXCEEDED = "SizeExceeded"
OUT_OF_RANGE = "VertexOutOfRange"
TERMINAL_DELETED = "TerminalDeleted"
NOT_A_SOLUTION = "NotASolution"


def solution_issue(graph, problem, solution, k=None, protect_terminals=False):
    """
    Reason why a deletion set fails on an explicit graph.

    Arguments:
        graph {networkx.Graph} -- Materialized input graph.
        problem {string} -- Problem tag.
        solution {iterable[int]} -- Deleted vertices.
        k {int} -- Budget (None to skip the size check).
        protect_terminals {bool} -- Forbid deleting terminals (Multiway Cut).

    Returns:
        string -- VALID or the name of the first failed check.

    """
    solution = set(solution)

    if k is not None and len(solution) > k:
        return SIZE_EXCEEDED

    if not solution <= set(graph):
        return OUT_OF_RANGE

    if protect_terminals and problem == MWC and \
            solution & graph.graph.get("terminals", frozenset()):
        return TERMINAL_DELETED

    if not is_solution(problem, graph, solution):
        return NOT_A_SOLUTION

    return VALID


def check_solution(graph, problem, solution, k=None, protect_terminals=False):
    """
    Make sure a deletion set is valid on an explicit graph.

    Raises:
        VerificationFailed -- If some check fails.

    """
    issue = solution_issue(graph, problem, solution, k, protect_terminals)

    if issue != VALID:
        raise VerificationFailed(f"{problem} solution {sorted(solution)} "
                                 f"rejected: {issue}")


def verify_solution(stream, problem, solution, k=None,
                    protect_terminals=False):
    """
    Verify a solution of a stream instance.

    Arguments:
        stream {Stream} -- Parsed input stream.
        problem {string} -- Problem tag.
        solution {list[int]} -- Deleted vertices.
        k {int} -- Budget (None to skip the size check).
        protect_terminals {bool} -- Forbid deleting terminals (Multiway Cut).

    Returns:
        tuple[bool, string] -- Validity and the reason (VALID if valid).

    """
    issue = solution_issue(materialize(stream), problem, solution, k,
                           protect_terminals)
    return issue == VALID, issue
