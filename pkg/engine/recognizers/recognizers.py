"""
Module containing the recognizers of split, threshold, cluster graphs and acyclic tournaments.

Every recognizer is a one-pass stream consumer over an induced vertex
subset. Split and threshold graphs are decided from the degree sequence
alone, acyclic tournaments from the score sequence, and cluster graphs
from degrees plus spanning forests of connectivity sketches.
"""

from fastlog import log
from engine.errors.analysis import SketchFailure, NotATournament
from engine.sketches.connectivity import ConnectivitySketch, \
    forest_components
from engine.utils.randomness import seed_for
from .degrees import DegreeTable, OutDegreeTable


class RecognitionVerdict:
    """
    Outcome of a recognizer.

    Attributes:
        in_class {bool} -- Whether the induced subgraph belongs to the class.
        witness_stats {dict} -- Class-specific summary of the decision.

    """

    def __init__(self, in_class, witness_stats=None):
        self.in_class = in_class
        self.witness_stats = witness_stats or {}

    def __bool__(self):
        return self.in_class

    def dict(self):
        return {"in_class": self.in_class,
                "witness_stats": self.witness_stats}


def _split_index(degrees):
    """Largest (1-based) i with d_i >= i - 1 for a non-increasing sequence."""
    m = 0

    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i

    return m


def is_split_sequence(degrees):
    """
    Splittance test on a degree sequence.

    With d_1 >= ... >= d_n and m = max{i : d_i >= i - 1} the graph is
    split iff sum(d_i, i <= m) = m(m - 1) + sum(d_i, i > m).
    """
    degrees = sorted(degrees, reverse=True)
    m = _split_index(degrees)
    return sum(degrees[:m]) == m * (m - 1) + sum(degrees[m:])


def is_threshold_sequence(degrees):
    """
    Threshold test on a degree sequence.

    The graph is threshold iff every Erdos-Gallai inequality up to
    m = max{i : d_i >= i - 1} holds with equality.
    """
    degrees = sorted(degrees, reverse=True)
    m = _split_index(degrees)

    for k in range(1, m + 1):
        if sum(degrees[:k]) != \
                k * (k - 1) + sum(min(d, k) for d in degrees[k:]):
            return False

    return True


def is_transitive_score_sequence(scores):
    """A tournament is acyclic iff its scores are exactly 0, 1, ..., m - 1."""
    return sorted(scores) == list(range(len(scores)))


class SplitRecognizer(DegreeTable):
    """Recognizes split graphs from the induced degree sequence."""

    def verdict(self):
        sequence = self.sequence()
        return RecognitionVerdict(is_split_sequence(sequence),
                                  {"split_index": _split_index(sequence)})


class ThresholdRecognizer(DegreeTable):
    """Recognizes threshold graphs from the induced degree sequence."""

    def verdict(self):
        return RecognitionVerdict(is_threshold_sequence(self.sequence()),
                                  {"vertices": len(self.degrees)})


class AcyclicTournamentRecognizer(OutDegreeTable):
    """
    Recognizes acyclic (transitive) tournaments from the score sequence.

    Attributes:
        strict {bool} -- Raise NotATournament if some pair has no arc.

    """

    def __init__(self, vertices, strict=False):
        super().__init__(vertices)
        self.strict = strict

    def verdict(self):
        """
        Decide the subset.

        Raises:
            NotATournament -- If strict and the arc count is not m(m-1)/2.

        """
        m = len(self.scores)

        if self.strict and self.arcs != m * (m - 1) // 2:
            raise NotATournament(
                f"{self.arcs} arcs on {m} vertices, "
                f"expected {m * (m - 1) // 2}")

        return RecognitionVerdict(
            is_transitive_score_sequence(list(self.scores.values())),
            {"arcs": self.arcs})


class ClusterRecognizer(DegreeTable):
    """
    Recognizes cluster graphs: every vertex of a spanning tree T has degree |T| - 1.

    Several independent sketch copies vote, a copy whose forest
    extraction fails does not vote.

    Attributes:
        sketches {list[ConnectivitySketch]} -- Independent sketch copies.

    """

    def __init__(self, vertices, seed, c=3, copies=3):
        """
        Allocate degree counters and the sketch copies.

        Arguments:
            vertices {iterable[int]} -- The subset.
            seed {int} -- Seed of the sketches.
            c {int} -- Sketch failure parameter.
            copies {int} -- Number of voting sketch copies.

        """
        super().__init__(vertices)

        self.sketches = [ConnectivitySketch(self.vertices,
                                            seed_for(seed, copy), c,
                                            strict=True)
                         for copy in range(copies)]

    def on_event(self, event):
        """Update the degrees and every sketch copy."""
        if event.u in self.degrees and event.v in self.degrees:
            self.degrees[event.u] += event.sign
            self.degrees[event.v] += event.sign

            for sketch in self.sketches:
                sketch.update(event.u, event.v, event.sign)

    def _vote(self, sketch):
        """One copy's opinion (None if its sketch failed)."""
        try:
            forest = sketch.spanning_forest()
        except SketchFailure:
            return None

        for tree in forest_components(self.vertices, forest):
            if any(self.degrees[v] != len(tree) - 1 for v in tree):
                return False

        return True

    def verdict(self):
        """
        Majority vote of the sketch copies.

        Raises:
            SketchFailure -- If every copy failed.

        """
        votes = [v for v in (self._vote(s) for s in self.sketches)
                 if v is not None]

        if not votes:
            raise SketchFailure("every cluster sketch copy failed")

        if len(votes) < len(self.sketches):
            log.debug(f"{len(self.sketches) - len(votes)} cluster sketch "
                      f"copies failed")

        yes = sum(votes)
        return RecognitionVerdict(yes > len(votes) - yes,
                                  {"votes": votes})

    def words(self):
        return super().words() + sum(s.words() for s in self.sketches)
