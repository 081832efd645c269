"""Module containing the one-pass reconstruction of t-block graphs (chordal t-flow graphs)."""

from itertools import combinations
import networkx as nx
from fastlog import log
from .tflow import reconstruct_tflow


def perfect_elimination_order(vertices, has_edge):
    """
    Greedily eliminate simplicial vertices of an implicit graph.

    Arguments:
        vertices {iterable[int]} -- Vertices of the graph.
        has_edge {callable} -- Symmetric edge predicate.

    Returns:
        list[int] -- Elimination order, or None if the graph is not chordal.

    """
    remaining = sorted(vertices)
    order = []

    while remaining:
        pick = None

        for v in remaining:
            neighbors = [w for w in remaining if w != v and has_edge(v, w)]

            if all(has_edge(a, b) for a, b in combinations(neighbors, 2)):
                pick = v
                break

        if pick is None:
            return None

        order.append(pick)
        remaining.remove(pick)

    return order


class TBlockReconstruction:
    """
    Reconstruction of a t-block graph.

    Attributes:
        flow {TFlowReconstruction} -- Underlying t-flow reconstruction.
        order {list[int]} -- Perfect elimination order (None if not chordal
                             or if the t-flow test failed).

    """

    def __init__(self, flow, order):
        self.flow = flow
        self.order = order

    @property
    def accepted(self):
        return self.flow.accepted and self.order is not None

    @property
    def vertices(self):
        return self.flow.vertices

    def has_edge(self, u, v):
        return self.flow.has_edge(u, v)

    def edges(self):
        return self.flow.edges()

    def to_graph(self):
        """Explicit copy of the reconstructed graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def words(self):
        return self.flow.words() + len(self.order or ())

    def dict(self):
        result = self.flow.dict()
        result.update(chordal=self.order is not None,
                      accepted=self.accepted)
        return result


def reconstruct_tblock(vertices, t=1, seed=0, c=3, strict=True):
    """
    Pass procedure reconstructing G[vertices] as a t-block graph.

    The graph is first reconstructed as a t-flow graph, then accepted
    only if the reconstruction has a perfect elimination order.
    With t = 1 this recognizes block graphs.

    Returns:
        generator -- One-pass procedure returning a TBlockReconstruction.

    """
    flow = yield from reconstruct_tflow(vertices, t, seed, c, strict)
    order = perfect_elimination_order(flow.vertices, flow.has_edge) \
        if flow.accepted else None

    if flow.accepted and order is None:
        log.debug(f"{t}-flow reconstruction of {len(flow.vertices)} "
                  f"vertices is not chordal")

    return TBlockReconstruction(flow, order)
