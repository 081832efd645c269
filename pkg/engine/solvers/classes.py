"""
Module containing membership checks of every target class on explicit graphs.

These checks are the ground truth used by oracles and by the
verification of every emitted solution.
"""

from itertools import combinations
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from engine.algorithms import FVST, CVD, SVD, TVD, BVD, PIVD, OCT, SFVS, MWC
from engine.errors.user_input import InvalidParams
from engine.preprocessing.materialize import induced_copy


def _claw():
    return nx.star_graph(3)


def _net():
    return nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def _tent():
    return nx.Graph([(0, 2), (2, 4), (0, 4), (0, 1), (1, 2), (2, 3),
                     (3, 4), (4, 5), (5, 0)])


# Small forbidden induced subgraphs of proper interval graphs.
PIV_SMALL_OBSTRUCTIONS = [_claw(), _net(), _tent()]


def is_clique(graph, vertices):
    """Whether the vertices are pairwise adjacent."""
    return all(graph.has_edge(u, v) for u, v in combinations(vertices, 2))


def is_cluster(graph):
    """Every connected component is a clique."""
    return all(is_clique(graph, c) for c in nx.connected_components(graph))


def is_split(graph):
    """Both the graph and its complement are chordal."""
    if graph.number_of_nodes() <= 3:
        return True

    return nx.is_chordal(graph) and nx.is_chordal(nx.complement(graph))


def is_threshold(graph):
    """Repeatedly removing isolated or dominating vertices empties the graph."""
    remaining = set(graph)

    while remaining:
        size = len(remaining)
        pick = next((v for v in remaining
                     if len(set(graph[v]) & remaining) in (0, size - 1)), None)

        if pick is None:
            return False

        remaining.discard(pick)

    return True


def is_block_graph(graph):
    """Every biconnected component is a clique."""
    return all(is_clique(graph, c)
               for c in nx.biconnected_components(graph))


def has_induced(graph, pattern):
    """Whether the graph contains an induced copy of the pattern."""
    return GraphMatcher(graph, pattern).subgraph_is_isomorphic()


def is_proper_interval(graph):
    """Chordal and free of induced claws, nets and tents."""
    if not nx.is_chordal(graph):
        return False

    return not any(has_induced(graph, p) for p in PIV_SMALL_OBSTRUCTIONS)


def has_terminal_cycle(graph, terminals):
    """Whether some cycle passes through a terminal."""
    return any(len(c) >= 3 and c & terminals
               for c in map(set, nx.biconnected_components(graph)))


def has_connected_terminals(graph, terminals):
    """Whether some connected component holds two terminals."""
    return any(len(c & terminals) >= 2
               for c in map(set, nx.connected_components(graph)))


def in_target_class(problem, graph):
    """
    Whether the graph (terminals in `graph.graph`) is a YES at k = 0.

    Raises:
        InvalidParams -- If the problem tag is unknown.

    """
    terminals = set(graph.graph.get("terminals", ()))

    if problem == FVST:
        return nx.is_directed_acyclic_graph(graph)
    elif problem == CVD:
        return is_cluster(graph)
    elif problem == SVD:
        return is_split(graph)
    elif problem == TVD:
        return is_threshold(graph)
    elif problem == BVD:
        return is_block_graph(graph)
    elif problem == PIVD:
        return is_proper_interval(graph)
    elif problem == OCT:
        return nx.is_bipartite(graph)
    elif problem == SFVS:
        return not has_terminal_cycle(graph, terminals)
    elif problem == MWC:
        return not has_connected_terminals(graph, terminals)
    else:
        raise InvalidParams(f"Unknown problem: \"{problem}\"")


def is_solution(problem, graph, solution, k=None, protect_terminals=False):
    """
    Check a deletion set on the explicit graph.

    Arguments:
        problem {string} -- Problem tag.
        graph {networkx.Graph} -- Input graph (terminals in `graph.graph`).
        solution {iterable[int]} -- Deleted vertices.
        k {int} -- Budget (None to skip the size check).
        protect_terminals {bool} -- Forbid deleting terminals (Multiway Cut).

    Returns:
        bool -- True iff the deletion set is valid.

    """
    solution = set(solution)

    if k is not None and len(solution) > k:
        return False

    if not solution <= set(graph):
        return False

    if protect_terminals and problem == MWC and \
            solution & set(graph.graph.get("terminals", ())):
        return False

    return in_target_class(problem, induced_copy(graph, solution))
