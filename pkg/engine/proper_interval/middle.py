"""
Module containing the middle-vertex test.

A vertex v of an n-vertex graph is a middle vertex iff every connected
component of G - N[v] has at most 9n/10 vertices. In a connected proper
interval graph G - N[v] never has more than two components.
"""

import networkx as nx
from fastlog import log
from engine.errors.analysis import NoInstance, SketchFailure
from engine.sketches.connectivity import ConnectivitySketch
from .consumers import NeighborhoodCollector


class MiddleVertexReport:
    """
    Outcome of probing one candidate middle vertex.

    Attributes:
        center {int} -- Inspected vertex.
        neighborhood {set[int]} -- Closed neighborhood N[center].
        components {list[set[int]]} -- Components of G - N[center].
        n {int} -- Number of vertices of the inspected graph.

    """

    def __init__(self, center, neighborhood, components, n):
        """
        Initialize a report.

        See class docstring for details on constructor arguments.

        Raises:
            NoInstance -- If G - N[center] has more than two components.

        """
        self.center = center
        self.neighborhood = set(neighborhood)
        self.components = sorted((set(c) for c in components), key=min)
        self.n = n

        if len(self.components) > 2:
            raise NoInstance(f"G - N[{center}] has {len(self.components)} "
                             "components")

    @property
    def is_middle(self):
        """Every component has at most 9n/10 vertices."""
        return all(10 * len(c) <= 9 * self.n for c in self.components)

    def dict(self):
        return {"center": self.center,
                "neighborhood": sorted(self.neighborhood),
                "components": [sorted(c) for c in self.components],
                "middle": self.is_middle}


def is_middle_vertex(graph, v):
    """
    Middle-vertex test on an explicit connected graph.

    Raises:
        NoInstance -- If G - N[v] has more than two components.

    Returns:
        bool -- Whether v is a middle vertex.

    """
    closed = set(graph[v]) | {v}
    rest = graph.subgraph(set(graph) - closed)
    report = MiddleVertexReport(v, closed, nx.connected_components(rest),
                                graph.number_of_nodes())
    return report.is_middle


def inspect_middle(vertices, center, seed, c=3, strict=False):
    """
    Two-pass procedure probing `center` inside G[vertices].

    The first pass collects N(center), the second one sketches the
    components of G[vertices] - N[center]. Unless `strict` is set, an
    unfinished sketch makes the inspection return None.

    Raises:
        SketchFailure -- If the sketch did not finish and `strict` is set.

    Returns:
        generator -- Procedure returning a MiddleVertexReport or None.

    """
    collector = NeighborhoodCollector(center, vertices)
    yield [collector]

    closed = collector.neighborhood() | {center}
    rest = set(vertices) - closed
    components = []

    if rest:
        sketch = ConnectivitySketch(rest, seed, c, strict=True)
        yield [sketch]

        try:
            components = sketch.components()
        except SketchFailure as ex:
            if strict:
                raise

            log.warning(f"Dropping inspection of {center}: {ex.message}")
            return None

    return MiddleVertexReport(center, closed, components, len(vertices))
