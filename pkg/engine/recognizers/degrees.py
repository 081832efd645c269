"""Module containing degree-counting consumers restricted to induced vertex subsets."""

from engine.stream.replay import Consumer


class DegreeTable(Consumer):
    """
    Degrees of the subgraph induced by a vertex subset.

    Attributes:
        vertices {frozenset[int]} -- The subset.
        degrees {dict[int: int]} -- Degree of every subset vertex.

    """

    def __init__(self, vertices):
        """
        Initialize all degrees to zero.

        Arguments:
            vertices {iterable[int]} -- The subset.

        """
        super().__init__()

        self.vertices = frozenset(vertices)
        self.degrees = dict.fromkeys(self.vertices, 0)

    def on_event(self, event):
        """Count the edge if both endpoints are in the subset."""
        if event.u in self.degrees and event.v in self.degrees:
            self.degrees[event.u] += event.sign
            self.degrees[event.v] += event.sign

    def degree(self, v):
        """Degree of v in the induced subgraph."""
        return self.degrees[v]

    def sequence(self):
        """Degrees sorted in non-increasing order."""
        return sorted(self.degrees.values(), reverse=True)

    def words(self):
        return 2 * len(self.degrees)


class OutDegreeTable(Consumer):
    """
    Out-degrees (scores) of the subdigraph induced by a vertex subset.

    Attributes:
        vertices {frozenset[int]} -- The subset.
        scores {dict[int: int]} -- Out-degree of every subset vertex.
        arcs {int} -- Number of arcs inside the subset.

    """

    def __init__(self, vertices):
        """
        Initialize all scores to zero.

        Arguments:
            vertices {iterable[int]} -- The subset.

        """
        super().__init__()

        self.vertices = frozenset(vertices)
        self.scores = dict.fromkeys(self.vertices, 0)
        self.arcs = 0

    def on_event(self, event):
        """Count the arc u -> v if both endpoints are in the subset."""
        if event.u in self.scores and event.v in self.scores:
            self.scores[event.u] += event.sign
            self.arcs += event.sign

    def words(self):
        return 2 * len(self.scores) + 1
