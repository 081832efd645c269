"""
Module containing the one-pass reconstruction of t-flow graphs.

A t-flow graph has at most t internally vertex-disjoint paths between
any two non-adjacent vertices. One pass stores the degree of every
vertex and a spanning forest of G[F] for every member F of a
separating family. The union G' of these forests is the only explicit
edge set; every other pair is decided on demand from the forests.
"""

from itertools import combinations
from fastlog import log
from engine.derand.separating import graph_separating
from engine.errors.user_input import InvalidParams
from engine.recognizers.degrees import DegreeTable
from engine.sketches.connectivity import ConnectivitySketch, \
    forest_components
from engine.solvers.hitting_set import solve_hitting_set
from engine.stream.replay import FanoutConsumer
from engine.utils.randomness import seed_for


def _pair(u, v):
    return (u, v) if u < v else (v, u)


class TFlowReconstruction:
    """
    Implicit reconstruction G~ of a graph read in one pass.

    A pair outside G' is an edge of G~ iff no set S of at most t other
    vertices avoids every member whose forest connects the pair.
    E(G) is always a subset of E(G~), and both are equal when the
    degrees agree.

    Attributes:
        vertices {list[int]} -- Reconstructed vertices, sorted.
        t {int} -- Separation parameter.
        members {list[frozenset[int]]} -- Members of the separating family.
        labels {list[dict[int: int]]} -- Component of every member vertex
                                         in that member's forest.
        forest {set[tuple[int, int]]} -- Edges of G', the union of forests.
        degrees {dict[int: int]} -- Degrees read from the stream.
        degree_match {bool} -- Whether G~ has the streamed degrees.
        accepted {bool} -- Whether the graph is a t-flow graph.

    """

    def __init__(self, vertices, t, members, forests, degrees):
        """
        Build the reconstruction from the data of the pass.

        See class docstring for details on constructor arguments.
        """
        self.vertices = sorted(vertices)
        self.t = t
        self.members = list(members)
        self.labels = []
        self.forest = set()
        self.degrees = dict(degrees)
        self._known = {}

        for member, forest in zip(self.members, forests):
            labels = {}

            for i, component in enumerate(forest_components(member, forest)):
                labels.update(dict.fromkeys(component, i))

            self.labels.append(labels)
            self.forest.update(_pair(u, v) for u, v in forest)

        self.degree_match = self.reconstructed_degrees() == self.degrees
        self.accepted = self.degree_match and self._separable()

    def _decide(self, x, y):
        """Whether a pair outside G' is an edge of G~."""
        sets = [member - {x, y}
                for member, labels in zip(self.members, self.labels)
                if x in labels and y in labels and labels[x] == labels[y]]

        if not sets:
            return False

        if not all(sets):
            return True

        universe = set(self.vertices) - {x, y}
        return not solve_hitting_set(universe, sets, self.t).is_yes

    def has_edge(self, u, v):
        """
        Edge query on G~.

        Verdicts of pairs outside G' are memoized.
        """
        if u == v:
            return False

        pair = _pair(u, v)

        if pair in self.forest:
            return True

        if pair not in self._known:
            self._known[pair] = self._decide(*pair)

        return self._known[pair]

    def neighbors(self, v, within=None):
        """Neighbors of v in G~, optionally restricted to a vertex set."""
        pool = self.vertices if within is None else within
        return [w for w in pool if self.has_edge(v, w)]

    def edges(self):
        """Every edge of G~ as (smaller, larger) pairs."""
        return [(u, v) for u, v in combinations(self.vertices, 2)
                if self.has_edge(u, v)]

    def reconstructed_degrees(self):
        """Degree of every vertex in G~."""
        degrees = dict.fromkeys(self.vertices, 0)

        for u, v in self.edges():
            degrees[u] += 1
            degrees[v] += 1

        return degrees

    def _connected_without(self, x, y, removed):
        """Whether x reaches y in G~ - removed."""
        seen = {x} | set(removed)
        frontier = [x]

        while frontier:
            u = frontier.pop()

            for w in self.vertices:
                if w not in seen and self.has_edge(u, w):
                    if w == y:
                        return True

                    seen.add(w)
                    frontier.append(w)

        return False

    def _separable(self):
        """Every non-adjacent pair of G~ is cut by at most t vertices."""
        for x, y in combinations(self.vertices, 2):
            if self.has_edge(x, y):
                continue

            others = [v for v in self.vertices if v != x and v != y]

            if not any(not self._connected_without(x, y, removed)
                       for size in range(min(self.t, len(others)) + 1)
                       for removed in combinations(others, size)):
                log.debug(f"Pair ({x}, {y}) needs more than {self.t} "
                          f"vertices to be separated")
                return False

        return True

    def words(self):
        """Words of the forests, member labels and degree table."""
        return 2 * len(self.forest) + \
            sum(2 * len(labels) for labels in self.labels) + \
            2 * len(self.degrees)

    def dict(self):
        return {"t": self.t, "vertices": len(self.vertices),
                "members": len(self.members), "forest": len(self.forest),
                "degree_match": self.degree_match,
                "accepted": self.accepted}


def reconstruct_tflow(vertices, t, seed=0, c=3, strict=True):
    """
    Pass procedure reconstructing G[vertices] as a t-flow graph.

    Members of the separating family are picked over the local indices
    of the vertex subset, so a family over n' = |vertices| covers every
    pair while avoiding any min(t, n' - 2) other vertices.

    Arguments:
        vertices {iterable[int]} -- Vertex subset to reconstruct.
        t {int} -- Separation parameter.
        seed {int} -- Seed of the connectivity sketches.
        c {int} -- Sketch failure parameter.
        strict {bool} -- Raise SketchFailure on an unfinished forest.

    Raises:
        InvalidParams -- If t < 1.

    Returns:
        generator -- One-pass procedure returning a TFlowReconstruction.

    """
    if t < 1:
        raise InvalidParams(f"t-flow reconstruction needs t >= 1, got {t}")

    vertices = sorted(vertices)

    if len(vertices) < 2:
        return TFlowReconstruction(vertices, t, [], [],
                                   dict.fromkeys(vertices, 0))

    family = graph_separating(len(vertices), min(t, len(vertices) - 2))
    members = [frozenset(vertices[i] for i in local)
               for local in family.members]
    sketches = [ConnectivitySketch(member, seed_for(seed, i), c, strict)
                for i, member in enumerate(members)]
    degrees = DegreeTable(vertices)

    yield [FanoutConsumer([degrees] + sketches)]

    reconstruction = TFlowReconstruction(
        vertices, t, members, [s.spanning_forest() for s in sketches],
        degrees.degrees)
    log.debug(f"{t}-flow reconstruction of {len(vertices)} vertices: "
              f"{len(members)} members, |E(G')|={len(reconstruction.forest)}, "
              f"accepted={reconstruction.accepted}")

    return reconstruction
