"""
Module containing the bipartite double cover sketch.

The double cover of G has vertices v and v + n for every v and the two
edges (u, v + n), (u + n, v) for every edge (u, v). G is bipartite iff
its double cover has exactly twice as many connected components.
"""

from .connectivity import ConnectivitySketch


def double_cover_edges(u, v, n):
    """
    The two cover edges of the edge (u, v).

    Arguments:
        u {int} -- First endpoint.
        v {int} -- Second endpoint.
        n {int} -- Number of vertices of the source graph.

    Returns:
        tuple[tuple[int, int]] -- Edges (u, v + n) and (u + n, v).

    """
    return (u, v + n), (u + n, v)


class DoubleCoverSketch(ConnectivitySketch):
    """
    Connectivity sketch of the double cover of an induced subgraph.

    Attributes:
        n {int} -- Number of vertices of the source graph (copy offset).

    """

    def __init__(self, vertices, n, seed, c=3, strict=True):
        """
        Allocate an empty double cover sketch over G[vertices].

        See `ConnectivitySketch` for the remaining arguments.
        """
        vertices = sorted(vertices)
        super().__init__(vertices, seed, c, strict,
                         ids=vertices + [v + n for v in vertices])

        self.n = n

    def on_event(self, event):
        """Apply both cover edges of an event inside the subset."""
        if event.u in self.vertices and event.v in self.vertices:
            for a, b in double_cover_edges(event.u, event.v, self.n):
                self.update(a, b, event.sign)

    def projected_forest(self):
        """
        Forest edges of the cover mapped back onto the source graph.

        Returns:
            set[tuple[int, int]] -- Source edges (smaller, larger) used
                                    by the cover's spanning forest.

        """
        projected = set()

        for a, b in self.spanning_forest():
            u, v = a % self.n, b % self.n
            projected.add((min(u, v), max(u, v)))

        return projected


def is_bipartite(graph_sketch, cover_sketch):
    """
    Decide bipartiteness from a sketch of G and of its double cover.

    Raises:
        SketchFailure -- If a strict sketch fails.

    Returns:
        bool -- True iff the cover has twice as many components as G.

    """
    return cover_sketch.component_count() == \
        2 * graph_sketch.component_count()
