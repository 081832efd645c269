"""Module containing the stream consumers used by proper interval reconstruction."""

from collections import defaultdict
from engine.stream.replay import Consumer


class NeighborhoodCollector(Consumer):
    """
    Collects the neighbors of one vertex inside a vertex set.

    Multiplicities are kept so deleted edges cancel out.

    Attributes:
        center {int} -- Vertex whose neighborhood is collected.
        vertices {frozenset[int]} -- Allowed neighbors (and the center).

    """

    def __init__(self, center, vertices):
        super().__init__()

        self.center = center
        self.vertices = frozenset(vertices) | {center}
        self.counts = defaultdict(int)

    def on_event(self, event):
        if event.u == self.center and event.v in self.vertices:
            self.counts[event.v] += event.sign
        elif event.v == self.center and event.u in self.vertices:
            self.counts[event.u] += event.sign

    def neighborhood(self):
        """Open neighborhood of the center."""
        return {w for w, count in self.counts.items() if count > 0}

    def words(self):
        return 2 * len(self.counts)


class DegreeSplit(Consumer):
    """
    Counts the neighbors of every vertex in each part of a partition.

    Attributes:
        parts {dict[int: int]} -- Part index of every vertex.
        vertices {frozenset[int]} -- Partitioned vertices.
        counts {dict[int: list[int]]} -- Neighbors per part of every vertex.

    """

    def __init__(self, parts, size=3):
        super().__init__()

        self.parts = dict(parts)
        self.vertices = frozenset(self.parts)
        self.counts = {v: [0] * size for v in self.parts}

    def on_event(self, event):
        u, v = event.u, event.v

        if u in self.parts and v in self.parts:
            self.counts[u][self.parts[v]] += event.sign
            self.counts[v][self.parts[u]] += event.sign

    def degrees(self, part):
        """Neighbors of every vertex inside one part."""
        return {v: counts[part] for v, counts in self.counts.items()}

    def words(self):
        return sum(len(c) + 2 for c in self.counts.values())


class ModelVerifier(Consumer):
    """
    Checks that the graph induced by the model's vertices is the model's graph.

    Degrees inside the vertex set are counted and every stream edge the
    model does not contain moves a net counter. The check passes iff the
    counter ends at zero and all degrees match the model's degrees.

    Attributes:
        model {IntervalOrder} -- Candidate model.
        vertices {frozenset[int]} -- Vertices covered by the model.

    """

    def __init__(self, model):
        super().__init__()

        self.model = model
        self.vertices = frozenset(model.vertices)
        self.degrees = dict.fromkeys(self.vertices, 0)
        self.foreign = 0

    def on_event(self, event):
        u, v = event.u, event.v

        if u not in self.vertices or v not in self.vertices:
            return

        self.degrees[u] += event.sign
        self.degrees[v] += event.sign

        if not self.model.adjacent(u, v):
            self.foreign += event.sign

    def matches(self):
        """Whether the streamed subgraph equals the model's graph."""
        return self.foreign == 0 and self.degrees == self.model.degrees()

    def words(self):
        return self.model.words() + len(self.degrees) + 1


def verify_model(model):
    """
    One-pass procedure checking a model against the stream.

    Returns:
        generator -- Procedure returning True iff the model is exact.

    """
    verifier = ModelVerifier(model)

    if verifier.vertices:
        yield [verifier]

    return verifier.matches()
