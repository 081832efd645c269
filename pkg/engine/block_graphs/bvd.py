"""
Module containing the randomized 17^k solver of Block Vertex Deletion.

Stage one branches on induced C4s and diamonds. Each leaf of that
search is {C4, D4}-free, and there a block vertex deletion set is a
feedback vertex set of the auxiliary graph within V(G). Every
randomized round reduces the graph, then repeatedly deletes a vertex
drawn with probability proportional to its degree in the auxiliary
graph. A round succeeds with probability at least 17^-k.
"""

from itertools import combinations
from math import ceil
from fastlog import log
from engine.errors.user_input import InvalidParams
from engine.preprocessing.materialize import induced_copy
from engine.results.solve_result import SolveResult
from engine.solvers.classes import is_block_graph
from engine.utils.randomness import rng_for
from .auxiliary import AuxGraphView, isolated_cycles
from .peel import peel_single_clique_vertices

# Failure probability of one round is at most 1 - 17^-k.
ROUND_BASE = 17


def find_c4_or_diamond(graph):
    """
    Vertices of an induced C4 or diamond, if any.

    Both contain two non-adjacent vertices with two common neighbors,
    and any such quadruple induces one of them.

    Returns:
        tuple[int] -- Four vertices, or None if the graph is {C4, D4}-free.

    """
    for u, v in combinations(sorted(graph), 2):
        if graph.has_edge(u, v):
            continue

        common = sorted(set(graph[u]) & set(graph[v]))

        if len(common) >= 2:
            return (u, v, common[0], common[1])

    return None


def _stage_one(graph, k, chosen):
    """Leaves (graph, budget, chosen) of the C4/D4 branching."""
    quad = find_c4_or_diamond(graph)

    if quad is None:
        yield graph, k, chosen
        return

    if k == 0:
        return

    for v in quad:
        reduced = graph.copy()
        reduced.remove_node(v)
        yield from _stage_one(reduced, k - 1, chosen | {v})


def _reduce(graph, solution):
    """
    Apply the isolated-cycle rule and peeling until neither applies.

    Every isolated cycle puts its smallest vertex into the solution.

    Returns:
        networkx.Graph -- Reduced copy of the graph.

    """
    graph = graph.copy()

    while True:
        cycles = isolated_cycles(graph)

        for cycle in cycles:
            solution.append(min(cycle))
            graph.remove_nodes_from(cycle)

        peeled = peel_single_clique_vertices(graph)

        if not cycles and peeled.number_of_nodes() == graph.number_of_nodes():
            return peeled

        graph = peeled


def _randomized_round(graph, budget, rng):
    """
    One randomized attempt on a reduced {C4, D4}-free graph.

    Returns:
        list[int] -- A deletion set of size at most budget, or None.

    """
    graph = graph.copy()
    solution = []

    while graph.number_of_nodes():
        if len(solution) >= budget:
            return None

        v = AuxGraphView(graph).sample(rng)

        if v is None:
            return None

        solution.append(v)
        graph.remove_node(v)
        graph = _reduce(graph, solution)

    return solution if len(solution) <= budget else None


def solve_bvd(graph, k, seed=0, repetitions=3):
    """
    Decide Block Vertex Deletion on an explicit graph.

    Arguments:
        graph {networkx.Graph} -- Input graph.
        k {int} -- Budget.
        seed {int} -- Seed of the randomized rounds.
        repetitions {float} -- Rounds per leaf are ceil(repetitions * 17^k').

    Raises:
        InvalidParams -- If k < 0.

    Returns:
        SolveResult -- YES with a verified solution, or NO once every
                       round of every leaf failed.

    """
    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    stats = {"leaves": 0, "rounds": 0}
    seen = set()

    for leaf, budget, chosen in _stage_one(graph, k, frozenset()):
        if chosen in seen:
            continue

        seen.add(chosen)
        stats["leaves"] += 1

        forced = []
        reduced = _reduce(leaf, forced)

        if len(forced) > budget:
            continue

        rng = rng_for(seed, stats["leaves"])
        rounds = 1 if reduced.number_of_nodes() == 0 \
            else ceil(repetitions * ROUND_BASE ** (budget - len(forced)))

        for _ in range(rounds):
            stats["rounds"] += 1
            found = _randomized_round(reduced, budget - len(forced), rng)

            if found is None:
                continue

            solution = set(chosen) | set(forced) | set(found)

            if is_block_graph(induced_copy(graph, solution)):
                log.debug(f"BVD solution after {stats['rounds']} round(s)")
                return SolveResult.yes(solution, **stats)

            log.warning(f"Discarding invalid BVD candidate {sorted(solution)}")

    return SolveResult.no(**stats)
