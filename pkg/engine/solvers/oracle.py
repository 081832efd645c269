"""Module containing the brute-force oracle used as ground truth by every acceptance check."""

from itertools import combinations
from engine.algorithms import MWC
from engine.errors.user_input import CapExceeded
from engine.results.solve_result import SolveResult
from .classes import is_solution

# Largest vertex count the oracle accepts by default.
ORACLE_CAP = 24


def brute_force_oracle(problem, graph, k, cap=ORACLE_CAP,
                       protect_terminals=False):
    """
    Decide an instance by trying every deletion set of size at most k.

    Sets are tried by increasing size, so a YES solution is minimum.

    Arguments:
        problem {string} -- Problem tag.
        graph {networkx.Graph} -- Explicit input graph.
        k {int} -- Budget.
        cap {int} -- Maximum number of vertices.
        protect_terminals {bool} -- Forbid deleting terminals (Multiway Cut).

    Raises:
        CapExceeded -- If the graph has more than `cap` vertices.

    Returns:
        SolveResult -- Exact decision.

    """
    n = graph.number_of_nodes()

    if n > cap:
        raise CapExceeded(f"Oracle refuses {n} vertices", cap, n)

    candidates = sorted(graph)

    if protect_terminals and problem == MWC:
        terminals = graph.graph.get("terminals", ())
        candidates = [v for v in candidates if v not in terminals]

    checked = 0

    for size in range(min(k, len(candidates)) + 1):
        for subset in combinations(candidates, size):
            checked += 1

            if is_solution(problem, graph, subset,
                           protect_terminals=protect_terminals):
                return SolveResult.yes(subset, checked=checked)

    return SolveResult.no(checked=checked)
