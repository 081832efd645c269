"""
Module containing exact bounded-enumeration solvers of Subset Feedback Vertex Set and Multiway Cut.

Only vertices that can appear in a minimal solution are enumerated:
vertices of blocks that carry a terminal cycle for Subset FVS, vertices
of components holding two terminals for Multiway Cut.
"""

from itertools import combinations
from math import comb
import networkx as nx
from engine.errors.analysis import InstanceTooLarge
from engine.errors.user_input import InvalidParams
from engine.results.solve_result import SolveResult
from .classes import has_terminal_cycle, has_connected_terminals

# Default number of candidate sets the solvers may try.
ENUMERATION_CAP = 3_000_000


def _enumerate(graph, candidates, k, cap, violated):
    """Try deletion sets over the candidates by increasing size."""
    candidates = sorted(candidates)
    required = sum(comb(len(candidates), i)
                   for i in range(min(k, len(candidates)) + 1))

    if required > cap:
        raise InstanceTooLarge(
            f"{required} candidate sets over {len(candidates)} vertices "
            f"exceed the cap of {cap}")

    checked = 0

    for size in range(min(k, len(candidates)) + 1):
        for subset in combinations(candidates, size):
            checked += 1
            remaining = graph.subgraph(set(graph) - set(subset))

            if not violated(remaining, set(subset)):
                return SolveResult.yes(subset, checked=checked,
                                       candidates=len(candidates))

    return SolveResult.no(checked=checked, candidates=len(candidates))


def solve_sfvs_static(graph, terminals, k, cap=ENUMERATION_CAP):
    """
    Decide Subset Feedback Vertex Set: hit every cycle through a terminal.

    Arguments:
        graph {networkx.Graph} -- Undirected graph.
        terminals {iterable[int]} -- Terminal vertices.
        k {int} -- Budget.
        cap {int} -- Maximum number of candidate sets.

    Raises:
        InstanceTooLarge -- If the enumeration would exceed the cap.

    Returns:
        SolveResult -- YES with a minimum solution, or NO.

    """
    terminals = set(terminals)
    candidates = set()

    for block in map(set, nx.biconnected_components(graph)):
        if len(block) >= 3 and block & terminals:
            candidates |= block

    return _enumerate(graph, candidates, k, cap,
                      lambda g, removed: has_terminal_cycle(
                          g, terminals - removed))


def solve_mwc_static(graph, terminals, k, cap=ENUMERATION_CAP,
                     protect_terminals=False):
    """
    Decide Multiway Cut: leave no two terminals in one component.

    Arguments:
        graph {networkx.Graph} -- Undirected graph.
        terminals {iterable[int]} -- Terminal vertices (at least two).
        k {int} -- Budget.
        cap {int} -- Maximum number of candidate sets.
        protect_terminals {bool} -- Forbid deleting terminals.

    Raises:
        InvalidParams -- If fewer than two terminals are given.
        InstanceTooLarge -- If the enumeration would exceed the cap.

    Returns:
        SolveResult -- YES with a minimum solution, or NO.

    """
    terminals = set(terminals)

    if len(terminals) < 2:
        raise InvalidParams("Multiway Cut needs at least two terminals")

    candidates = set()

    for component in map(set, nx.connected_components(graph)):
        if len(component & terminals) >= 2:
            candidates |= component

    if protect_terminals:
        candidates -= terminals

    return _enumerate(graph, candidates, k, cap,
                      lambda g, removed: has_connected_terminals(
                          g, terminals - removed))
