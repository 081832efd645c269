"""
Module containing the static solver of Proper Interval Vertex Deletion.

Stage one branches on induced claws, nets, tents and holes of length
4 to 7. A graph free of these is a proper circular-arc graph, and any
minimal deletion set of such a connected graph is W(v, x) for some ordered
pair (v, x), where W(v, x) holds the vertices u of N[v] & N[x] with
N[u] != N[v] and N[u] within N[v] | N[x]. Stage two repairs every
component with its smallest W(v, x) that leaves it proper interval.
"""

from itertools import permutations
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from fastlog import log
from engine.errors.user_input import InvalidParams
from engine.preprocessing.materialize import induced_copy
from engine.results.solve_result import SolveResult
from engine.solvers.classes import PIV_SMALL_OBSTRUCTIONS, is_proper_interval

# Claw first, then the holes and the six-vertex obstructions.
_OBSTRUCTIONS = [PIV_SMALL_OBSTRUCTIONS[0], nx.cycle_graph(4),
                 nx.cycle_graph(5), *PIV_SMALL_OBSTRUCTIONS[1:],
                 nx.cycle_graph(6), nx.cycle_graph(7)]


def find_piv_obstruction(graph):
    """
    Vertices of an induced claw, net, tent or hole of length 4 to 7.

    Returns:
        list[int] -- Sorted vertices of the first obstruction found, or None.

    """
    for pattern in _OBSTRUCTIONS:
        mapping = next(GraphMatcher(graph, pattern)
                       .subgraph_isomorphisms_iter(), None)

        if mapping is not None:
            return sorted(mapping)

    return None


def w_set(graph, v, x):
    """
    The candidate deletion set W(v, x).

    Arguments:
        graph {networkx.Graph} -- Proper circular-arc graph.
        v {int} -- Vertex kept by the deletion.
        x {int} -- Vertex expected inside the deletion set.

    Returns:
        set[int] -- Vertices u of N[v] & N[x] with N[u] != N[v] and
                    N[u] contained in N[v] | N[x].

    """
    closed_v = set(graph[v]) | {v}
    closed_x = set(graph[x]) | {x}
    union = closed_v | closed_x
    result = set()

    for u in closed_v & closed_x:
        closed_u = set(graph[u]) | {u}

        if closed_u != closed_v and closed_u <= union:
            result.add(u)

    return result


def _component_repair(graph, budget, stats):
    """Smallest W(v, x) within budget repairing a connected graph."""
    best = None

    for v, x in permutations(sorted(graph), 2):
        candidate = frozenset(w_set(graph, v, x))

        if not candidate or len(candidate) > budget or \
                (best is not None and len(candidate) >= len(best)):
            continue

        stats["candidates"] += 1

        if is_proper_interval(induced_copy(graph, candidate)):
            best = candidate

    return best


def _circular_arc_stage(graph, budget, stats):
    """
    Deletion set of an obstruction-free graph, repairing each component.

    A minimum deletion set is minimal, so the smallest repairing W(v, x)
    of a component is optimal for it.
    """
    solution = set()

    for component in sorted(nx.connected_components(graph), key=min):
        sub = graph.subgraph(component).copy()

        if is_proper_interval(sub):
            continue

        repair = _component_repair(sub, budget - len(solution), stats)

        if repair is None:
            return None

        solution |= repair

    return solution


def _branch(graph, budget, stats):
    """Depth-first branching on small obstructions."""
    stats["nodes"] += 1
    obstruction = find_piv_obstruction(graph)

    if obstruction is None:
        return _circular_arc_stage(graph, budget, stats)

    if budget == 0:
        return None

    for v in obstruction:
        found = _branch(induced_copy(graph, {v}), budget - 1, stats)

        if found is not None:
            return found | {v}

    return None


def static_pivd(graph, k):
    """
    Decide Proper Interval Vertex Deletion on an explicit graph.

    Arguments:
        graph {networkx.Graph} -- Input graph.
        k {int} -- Budget.

    Raises:
        InvalidParams -- If k < 0.

    Returns:
        SolveResult -- Exact decision with a solution of size at most k.

    """
    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    stats = {"nodes": 0, "candidates": 0}
    solution = _branch(graph, k, stats)

    if solution is None:
        log.debug(f"PIVD: no solution of size {k} ({stats['nodes']} nodes)")
        return SolveResult.no(**stats)

    return SolveResult.yes(solution, **stats)
