"""
Module containing generators of planted instances.

Every instance is a member of the target class on n - k vertices plus k
planted spoiler vertices, so deleting the plant is always a solution.
Vertex ids are shuffled and the plant is recorded in the stream header.
"""

from itertools import combinations
import networkx as nx
from fastlog import log
from engine.errors.user_input import InvalidParams
from engine.preprocessing.stream_parser import graph_events
from engine.proper_interval.interval_order import IntervalOrder
from engine.stream import INSERT, DELETE, TURNSTILE
from engine.stream.events import StreamEvent, StreamHeader, Stream
from engine.utils.randomness import rng_for
from . import PROBLEMS, FVST, CVD, SVD, TVD, BVD, PIVD, OCT, SFVS, MWC

# Largest instance the generators build.
GENERATOR_CAP = 10_000


def _cluster(m, rng):
    graph = nx.empty_graph(m)
    labels = rng.integers(0, max(1, m // 3), size=m)

    for u, v in combinations(range(m), 2):
        if labels[u] == labels[v]:
            graph.add_edge(u, v)

    return graph


def _split(m, rng):
    graph = nx.empty_graph(m)
    clique = int(rng.integers(0, m + 1))
    graph.add_edges_from(combinations(range(clique), 2))

    for v in range(clique, m):
        graph.add_edges_from((u, v) for u in range(clique)
                             if rng.random() < 0.5)

    return graph


def _threshold(m, rng):
    graph = nx.empty_graph(m)

    for v in range(1, m):
        if rng.random() < 0.5:
            graph.add_edges_from((u, v) for u in range(v))

    return graph


def _block(m, rng, max_block=4):
    graph = nx.empty_graph(min(m, 1))

    while graph.number_of_nodes() < m:
        first = graph.number_of_nodes()
        anchor = int(rng.integers(first))
        size = min(int(rng.integers(1, max_block)), m - first)
        graph.add_edges_from(combinations([anchor] +
                                          list(range(first, first + size)), 2))

    return graph


def _unit_interval(m, rng):
    model = IntervalOrder.from_starts({v: float(rng.uniform(0, max(m / 3, 1)))
                                      for v in range(m)})
    graph = nx.empty_graph(m)
    graph.add_edges_from(model.to_graph().edges())
    return graph


def _bipartite(m, rng):
    graph = nx.empty_graph(m)
    side = rng.random(m) < 0.5

    for u, v in combinations(range(m), 2):
        if side[u] != side[v] and rng.random() < 0.3:
            graph.add_edge(u, v)

    return graph


def _tree(vertices, rng):
    graph = nx.Graph()
    graph.add_nodes_from(vertices)

    for i in range(1, len(vertices)):
        graph.add_edge(vertices[i], vertices[int(rng.integers(i))])

    return graph


def _terminal_forest(m, rng):
    """Random tree with up to three terminals."""
    graph = _tree(list(range(m)), rng)
    graph.graph["terminals"] = {int(v) for v in rng.permutation(m)[:3]}
    return graph


def _separated_trees(m, rng):
    groups = min(3, m)
    labels = [v % groups for v in range(m)]
    graph = nx.empty_graph(m)

    for g in range(groups):
        graph = nx.compose(graph, _tree([v for v in range(m)
                                         if labels[v] == g], rng))

    graph.graph["terminals"] = set(range(groups))
    return graph


_CORES = {CVD: _cluster, SVD: _split, TVD: _threshold, BVD: _block,
          PIVD: _unit_interval, OCT: _bipartite, SFVS: _terminal_forest,
          MWC: _separated_trees}


def _tournament(n, plant, rng):
    """Tournament transitive outside of the plant, random at the plant."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))

    for u, v in combinations(range(n), 2):
        if (u in plant or v in plant) and rng.random() < 0.5:
            graph.add_edge(v, u)
        else:
            graph.add_edge(u, v)

    return graph


def _churn(graph, events, rng, noise):
    """Interleave canceling insert/delete pairs into insertion events."""
    result = []
    n = graph.number_of_nodes()

    for event in events:
        if not graph.is_directed() and n >= 2 and rng.random() < noise:
            u, v = (int(x) for x in rng.choice(n, 2, replace=False))

            if not graph.has_edge(u, v):
                result.append(StreamEvent(INSERT, u, v))
                result.append(StreamEvent(DELETE, u, v))

        result.append(event)

        if rng.random() < noise:
            result.append(StreamEvent(DELETE, event.u, event.v))
            result.append(StreamEvent(INSERT, event.u, event.v))

    return result


def generate(problem, n, k, seed=0, noise=0.0):
    """
    Generate a planted YES instance at budget k.

    Arguments:
        problem {string} -- Problem tag.
        n {int} -- Number of vertices.
        k {int} -- Number of planted spoiler vertices.
        seed {int} -- Seed of the instance.
        noise {float} -- Share of edges followed by a canceling
                         delete/insert pair (turnstile noise).

    Raises:
        InvalidParams -- If the parameters are out of range.

    Returns:
        Stream -- Instance with the plant in `header.plant`.

    """
    if problem not in PROBLEMS:
        raise InvalidParams(f"Unknown problem: \"{problem}\"")

    if not 1 <= n <= GENERATOR_CAP or not 0 <= k <= n:
        raise InvalidParams(f"Generator needs 1 <= n <= {GENERATOR_CAP} "
                            f"and 0 <= k <= n (n={n}, k={k})")

    if problem == MWC and n - k < 2:
        raise InvalidParams("Multiway Cut instances need two terminals "
                            "outside of the plant")

    if not 0 <= noise <= 1:
        raise InvalidParams(f"Noise must lie in [0, 1], got {noise}")

    rng = rng_for(seed, "generate", problem)
    m = n - k
    plant = set(range(m, n))

    if problem == FVST:
        graph = _tournament(n, plant, rng)
        terminals = set()
    else:
        graph = _CORES[problem](m, rng)
        terminals = set(graph.graph.get("terminals", ()))
        graph.add_nodes_from(plant)

        for s in sorted(plant) if m else ():
            degree = min(m, int(rng.integers(2, 5)))
            graph.add_edges_from((s, int(v)) for v in
                                 rng.choice(m, degree, replace=False))

    order = [int(v) for v in rng.permutation(n)]
    graph = nx.relabel_nodes(graph, dict(enumerate(order)))
    terminals = {order[v] for v in terminals}
    plant = sorted(order[v] for v in plant)

    events = _churn(graph, graph_events(graph), rng, noise)
    header = StreamHeader(n, k, problem, TURNSTILE, terminals, plant)
    log.debug(f"Generated {problem} instance: n={n}, k={k}, "
              f"{len(events)} events, plant {plant}")

    return Stream(header, events, terminals)
