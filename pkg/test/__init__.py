"""Package containing tests for all parts of this application (engine, interfaces)."""

from functools import lru_cache
from itertools import combinations
import networkx as nx
from engine.proper_interval.interval_order import IntervalOrder
from engine.stream import INSERT, DELETE, TURNSTILE
from engine.stream.events import StreamEvent, StreamHeader, Stream
from engine.utils.randomness import rng_for


def stream_of(edges, n=None, problem=None, k=0, terminals=(), mode=TURNSTILE):
    """
    Build an insertion stream from an edge list.

    Arguments:
        edges {iterable[tuple[int, int]]} -- Edges (arcs for directed problems).
        n {int} -- Vertex count (default: largest endpoint + 1).

    """
    edges = list(edges)

    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1

    header = StreamHeader(n, k, problem, mode, terminals)
    return Stream(header, [StreamEvent(INSERT, u, v) for u, v in edges])


def stream_of_graph(graph, problem=None, k=0, terminals=None):
    """Build an insertion stream from a networkx graph on 0..n-1."""
    if terminals is None:
        terminals = graph.graph.get("terminals", ())

    return stream_of(sorted(graph.edges()), graph.number_of_nodes(),
                     problem, k, terminals)


def noisy_stream_of_graph(graph, seed, noise=0.3, problem=None, k=0,
                          terminals=()):
    """
    Build a turnstile stream whose final graph is `graph`.

    Roughly `noise` times the edge count of extra non-edges are
    inserted and deleted again, and some real edges are deleted and
    re-inserted, all interleaved in random order.
    """
    rng = rng_for(seed, "noisy-stream")
    n = graph.number_of_nodes()
    edges = [tuple(e) for e in graph.edges()]
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if not graph.has_edge(u, v)]

    events = [StreamEvent(INSERT, u, v) for u, v in edges]
    extra = int(noise * max(len(edges), 1))

    for i in rng.permutation(len(non_edges))[:extra]:
        u, v = non_edges[i]
        events.append(StreamEvent(INSERT, u, v))

    order = list(rng.permutation(len(events)))
    events = [events[i] for i in order]
    result = []

    for event in events:
        result.append(event)

        if not graph.has_edge(event.u, event.v):
            result.append(StreamEvent(DELETE, event.u, event.v))
        elif rng.random() < noise:
            result.append(StreamEvent(DELETE, event.u, event.v))
            result.append(StreamEvent(INSERT, event.u, event.v))

    header = StreamHeader(n, k, problem, TURNSTILE, terminals)
    return Stream(header, result)


def net_graph():
    """Triangle 0-1-2 with pendant vertices 3, 4, 5."""
    return nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def tent_graph():
    """Triangle 0-2-4 with 1, 3, 5 adjacent to consecutive pairs."""
    return nx.Graph([(0, 2), (2, 4), (0, 4), (0, 1), (1, 2), (2, 3),
                     (3, 4), (4, 5), (5, 0)])


def two_k2():
    """Two disjoint edges."""
    return nx.Graph([(0, 1), (2, 3)])


def relabeled(graph):
    """Copy of the graph with vertices relabeled to 0..n-1."""
    return nx.convert_node_labels_to_integers(graph)


def small_graphs(max_nodes, min_nodes=1):
    """All graphs of the atlas with between min_nodes and max_nodes vertices."""
    return [g for g in nx.graph_atlas_g()
            if min_nodes <= g.number_of_nodes() <= max_nodes]


def _distinct(candidates):
    """Keep one graph per isomorphism class."""
    buckets = {}

    for graph in candidates:
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(graph),
                                    [])

        if not any(nx.is_isomorphic(graph, other) for other in bucket):
            bucket.append(graph)

    return tuple(g for bucket in buckets.values() for g in bucket)


@lru_cache(maxsize=None)
def eight_vertex_graphs():
    """
    All graphs on 8 vertices up to isomorphism.

    Every such graph is a 7-vertex atlas graph plus a vertex adjacent
    to some subset of it.
    """
    def extensions():
        for base in small_graphs(7, min_nodes=7):
            for mask in range(2 ** 7):
                graph = nx.Graph(base)
                graph.add_edges_from((v, 7) for v in range(7) if mask >> v & 1)
                graph.add_node(7)
                yield graph

    return _distinct(extensions())


@lru_cache(maxsize=None)
def tournaments(n):
    """All tournaments on 0..n-1 up to isomorphism, built vertex by vertex."""
    if n <= 1:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        return (graph,)

    def extensions():
        for base in tournaments(n - 1):
            for mask in range(2 ** (n - 1)):
                graph = nx.DiGraph(base)
                graph.add_edges_from((v, n - 1) if mask >> v & 1
                                     else (n - 1, v) for v in range(n - 1))
                yield graph

    return _distinct(extensions())


def random_block_graph(n, seed, max_block=4):
    """Random connected block graph on 0..n-1 grown by attaching cliques."""
    rng = rng_for(seed, "block-graph")
    graph = nx.Graph()
    graph.add_node(0)

    while graph.number_of_nodes() < n:
        first = graph.number_of_nodes()
        anchor = int(rng.integers(first))
        size = min(int(rng.integers(1, max_block)), n - first)
        block = [anchor] + list(range(first, first + size))
        graph.add_edges_from(combinations(block, 2))

    return graph


def random_unit_model(n, seed, spread=None):
    """Random unit interval model on 0..n-1 with starts in [0, spread)."""
    rng = rng_for(seed, "unit-model")
    spread = n / 3 if spread is None else spread
    return IntervalOrder.from_starts({v: float(rng.uniform(0, spread))
                                      for v in range(n)})
