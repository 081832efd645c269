"""
Module containing the counting of maximal cliques through a vertex.

The clique under construction is only described by the bit-vector of
its common neighbors, so the recursion holds one bit-vector per level.
On {C4, D4}-free graphs every vertex lies in at most n maximal cliques
and the count takes polynomial time.
"""

from bitstring import BitArray


def _neighbor_rows(graph, order):
    """Neighborhood bit-vector of every vertex, indexed by position in order."""
    position = {v: i for i, v in enumerate(order)}
    rows = []

    for v in order:
        row = BitArray(length=len(order))
        positions = [position[w] for w in graph[v] if w != v]

        if positions:
            row.set(True, positions)

        rows.append(row)

    return rows


def _count_x_cliques(rows, common, last):
    """
    Maximal cliques extending the current clique X.

    Arguments:
        rows {list[BitArray]} -- Neighborhood bit-vectors.
        common {BitArray} -- Common neighbors of X.
        last {int} -- Largest position in X.

    """
    if not common.any(True):
        return 1

    total = 0

    for u in common.findall('0b1', start=last + 1):
        total += _count_x_cliques(rows, common & rows[u], u)

    return total


def count_cliques_containing(graph, v):
    """
    Number of maximal cliques of the graph that contain v.

    Vertices are ordered with v first, then cliques are grown by common
    neighbors of increasing position. A clique is counted when it has no
    common neighbor left, so every maximal clique is counted once, along
    its lexicographically ordered growth.

    Arguments:
        graph {networkx.Graph} -- Explicit graph.
        v {int} -- The vertex.

    Returns:
        int -- Number of maximal cliques containing v.

    """
    order = [v] + sorted(w for w in graph if w != v)
    rows = _neighbor_rows(graph, order)
    return _count_x_cliques(rows, rows[0], 0)


def clique_table(graph):
    """Number of maximal cliques containing each vertex."""
    return {v: count_cliques_containing(graph, v) for v in graph}
