"""Module containing the obstruction sets of the finite-obstruction problems and their recognizer factory."""

from itertools import combinations
import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher, DiGraphMatcher
from engine.algorithms import FVST, CVD, SVD, TVD
from engine.errors.user_input import InvalidParams
from .recognizers import SplitRecognizer, ThresholdRecognizer, \
    AcyclicTournamentRecognizer, ClusterRecognizer


class ObstructionSpec:
    """
    Forbidden induced subgraphs of a graph class.

    Attributes:
        name {string} -- Problem tag.
        graphs {list[networkx.Graph]} -- Forbidden induced subgraphs.
        directed {bool} -- Whether the graphs are digraphs.
        d {int} -- Largest vertex count among the forbidden graphs.

    """

    def __init__(self, name, graphs, directed=False):
        """
        Initialize a spec.

        Raises:
            InvalidParams -- If the list is empty or holds an empty graph.

        """
        if not graphs or any(g.number_of_nodes() == 0 for g in graphs):
            raise InvalidParams("Obstructions must be nonempty graphs")

        self.name = name
        self.graphs = list(graphs)
        self.directed = directed
        self.d = max(g.number_of_nodes() for g in self.graphs)

    def dict(self):
        return {"name": self.name, "d": self.d, "directed": self.directed,
                "graphs": [sorted(g.edges()) for g in self.graphs]}


def _two_k2():
    return nx.Graph([(0, 1), (2, 3)])


_SPECS = {
    CVD: lambda: ObstructionSpec(CVD, [nx.path_graph(3)]),
    SVD: lambda: ObstructionSpec(SVD, [_two_k2(), nx.cycle_graph(4),
                                       nx.cycle_graph(5)]),
    TVD: lambda: ObstructionSpec(TVD, [_two_k2(), nx.cycle_graph(4),
                                       nx.path_graph(4)]),
    FVST: lambda: ObstructionSpec(FVST, [nx.DiGraph([(0, 1), (1, 2), (2, 0)])],
                                  directed=True),
}


def spec_for(problem):
    """
    Obstruction spec of a finite-obstruction problem.

    Raises:
        InvalidParams -- If the problem has no finite obstruction set here.

    """
    if problem not in _SPECS:
        raise InvalidParams(f"No obstruction set for problem \"{problem}\"")

    return _SPECS[problem]()


def find_obstruction(graph, spec):
    """
    Search an induced copy of a forbidden graph (explicit graphs only).

    Returns:
        frozenset[int] -- Vertices of an obstruction, or None.

    """
    matcher_type = DiGraphMatcher if spec.directed else GraphMatcher

    for forbidden in spec.graphs:
        matcher = matcher_type(graph, forbidden)

        for mapping in matcher.subgraph_isomorphisms_iter():
            return frozenset(mapping)

    return None


def obstructions(graph, spec):
    """
    Every vertex set inducing a forbidden graph (explicit graphs only).

    Returns:
        set[frozenset[int]] -- Distinct obstruction vertex sets.

    """
    matcher_type = DiGraphMatcher if spec.directed else GraphMatcher
    found = set()

    for forbidden in spec.graphs:
        size = forbidden.number_of_nodes()

        for subset in combinations(sorted(graph), size):
            induced = graph.subgraph(subset)

            if matcher_type(induced, forbidden).is_isomorphic():
                found.add(frozenset(subset))

    return found


def recognizer_for(problem, vertices, seed, c=3):
    """
    One-pass recognizer of the problem's target class over G[vertices].

    Arguments:
        problem {string} -- Problem tag (fvst, cvd, svd or tvd).
        vertices {iterable[int]} -- Induced subset.
        seed {int} -- Seed for randomized recognizers.
        c {int} -- Sketch failure parameter.

    Raises:
        InvalidParams -- If the problem has no recognizer.

    """
    if problem == CVD:
        return ClusterRecognizer(vertices, seed, c)
    elif problem == SVD:
        return SplitRecognizer(vertices)
    elif problem == TVD:
        return ThresholdRecognizer(vertices)
    elif problem == FVST:
        return AcyclicTournamentRecognizer(vertices)
    else:
        raise InvalidParams(f"No recognizer for problem \"{problem}\"")
