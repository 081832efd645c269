"""
Module containing the implicit view of the vertex/maximal-clique incidence graph.

The auxiliary graph H has a node per vertex and per maximal clique of
G, and an edge for every incidence. A block vertex deletion set of G is
a feedback vertex set of H inside V(G). H is never built: only the
degrees d_H(v) of the vertices of G are stored.
"""

import networkx as nx
from .cliques import clique_table


def mark_table(graph):
    """
    Vertices of degree 2 whose two neighbors also have degree 2.

    Returns:
        set[int] -- The marked vertices.

    """
    return {v for v in graph
            if graph.degree(v) == 2 and
            all(graph.degree(w) == 2 for w in graph[v])}


def isolated_cycles(graph):
    """Connected components that are cycles of length at least 4."""
    return [component for component in nx.connected_components(graph)
            if len(component) >= 4 and
            all(graph.degree(v) == 2 for v in component)]


class AuxGraphView:
    """
    Degrees of V(G) in the auxiliary graph of a {C4, D4}-free graph.

    Attributes:
        graph {networkx.Graph} -- The underlying graph.
        degrees {dict[int: int]} -- Maximal cliques containing each vertex.
        marked {set[int]} -- Vertices excluded from sampling.
        edge_total {int} -- Sum of d_H(v) over unmarked vertices, the
                            number of edges of H with an unmarked end.

    """

    def __init__(self, graph):
        """
        Count cliques and mark vertices.

        Arguments:
            graph {networkx.Graph} -- Peeled {C4, D4}-free graph
                                      without isolated cycles.

        """
        self.graph = graph
        self.degrees = clique_table(graph)
        self.marked = mark_table(graph)
        self.edge_total = sum(d for v, d in self.degrees.items()
                              if v not in self.marked)

    def sample(self, rng):
        """
        Draw an unmarked vertex v with probability d_H(v) / edge_total.

        Returns:
            int -- The vertex, or None if no unmarked vertex remains.

        """
        if self.edge_total == 0:
            return None

        pick = int(rng.integers(self.edge_total))

        for v in sorted(self.degrees):
            if v in self.marked:
                continue

            pick -= self.degrees[v]

            if pick < 0:
                return v

        return None

    def words(self):
        return 2 * len(self.degrees) + len(self.marked) + 1
