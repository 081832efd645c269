"""
Module containing the materialization of a stream into an explicit graph.

Explicit graphs are only ever built for oracles, verification and
post-processing of already sparsified data, never by streaming consumers.
"""

import networkx as nx
from engine.stream import INSERT


def final_edges(events, directed=False):
    """
    Compute the edge set left after replaying all events.

    Arguments:
        events {list[StreamEvent]} -- Validated events.
        directed {bool} -- Keep arc orientation.

    Returns:
        set[tuple[int, int]] -- Final edges (arcs if directed,
                                (smaller, larger) pairs otherwise).

    """
    edges = set()

    for event in events:
        edge = (event.u, event.v) if directed else event.edge

        if event.op == INSERT:
            edges.add(edge)
        else:
            edges.discard(edge)

    return edges


def materialize(stream):
    """
    Build the final graph of a stream.

    Vertices are 0..n-1, isolated ones included. The terminal set
    is stored in the `terminals` graph attribute.

    Arguments:
        stream {Stream} -- Parsed stream.

    Returns:
        networkx.Graph|networkx.DiGraph -- Final graph of the stream.

    """
    graph = nx.DiGraph() if stream.directed else nx.Graph()
    graph.add_nodes_from(range(stream.n))
    graph.add_edges_from(final_edges(stream.events, stream.directed))
    graph.graph["terminals"] = frozenset(stream.terminals)

    return graph


def induced_copy(graph, removed):
    """
    Copy of the graph with the given vertices removed.

    Arguments:
        graph {networkx.Graph} -- Any graph.
        removed {iterable[int]} -- Vertices to delete.

    Returns:
        networkx.Graph -- Independent copy of G - removed.

    """
    removed = set(removed)
    copy = graph.subgraph(v for v in graph if v not in removed).copy()
    copy.graph["terminals"] = frozenset(
        graph.graph.get("terminals", ())) - removed

    return copy
