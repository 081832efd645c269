"""
Module containing interval endpoint orders and partial orders on vertices.

An `IntervalOrder` is the left-to-right sequence of the begin and end
points of every interval of a model. Intervals are open and no two
endpoints coincide, so u and v are adjacent iff one interval begins
strictly inside the other.
"""

from itertools import permutations
import networkx as nx
from engine.errors.analysis import NoInstance
from . import BEGIN, END


class IntervalOrder:
    """
    Sequence of interval endpoints.

    Attributes:
        tokens {list[tuple[string, int]]} -- (BEGIN or END, vertex) pairs.

    """

    def __init__(self, tokens):
        """
        Index the endpoints of a token sequence.

        Arguments:
            tokens {iterable[tuple[string, int]]} -- Endpoints, left to right.

        Raises:
            ValueError -- If a token kind is unknown or an endpoint repeats.

        """
        self.tokens = list(tokens)
        self._begin = {}
        self._end = {}

        for i, (kind, v) in enumerate(self.tokens):
            if kind not in (BEGIN, END):
                raise ValueError(f"Unknown endpoint kind \"{kind}\"")

            positions = self._begin if kind == BEGIN else self._end

            if v in positions:
                raise ValueError(f"Repeated endpoint {kind}{v}")

            positions[v] = i

    @property
    def vertices(self):
        """Vertices with a begin point, sorted."""
        return sorted(self._begin)

    def is_valid(self):
        """Every vertex has one begin point followed by one end point."""
        return self._begin.keys() == self._end.keys() and \
            all(self._begin[v] < self._end[v] for v in self._begin)

    def adjacent(self, u, v):
        """Whether the intervals of u and v intersect (u != v)."""
        if u == v:
            return False

        bu, bv = self._begin[u], self._begin[v]
        return bu < bv < self._end[u] or bv < bu < self._end[v]

    def has_edge(self, u, v):
        """Whether u and v are both modeled and adjacent."""
        return u in self._begin and v in self._begin and self.adjacent(u, v)

    def begin_order(self):
        """Vertices by increasing begin point."""
        return sorted(self._begin, key=self._begin.get)

    def end_order(self):
        """Vertices by increasing end point."""
        return sorted(self._end, key=self._end.get)

    def is_proper(self):
        """No interval properly contains another."""
        return self.is_valid() and self.begin_order() == self.end_order()

    def begins_before_end(self, v):
        """Number of begin points placed before the end point of v."""
        end = self._end[v]
        return sum(1 for position in self._begin.values() if position < end)

    def degrees(self):
        """
        Degree of every vertex in the encoded graph.

        A vertex w intersects v iff w begins before v ends and does not
        end before v begins.
        """
        begins = ends = 0
        begins_before = {}
        ends_before = {}

        for kind, v in self.tokens:
            if kind == BEGIN:
                ends_before[v] = ends
                begins += 1
            else:
                begins_before[v] = begins
                ends += 1

        return {v: begins_before[v] - ends_before[v] - 1
                for v in self._begin}

    def to_graph(self):
        """
        The encoded interval graph.

        Returns:
            networkx.Graph -- Graph on the model's vertices.

        """
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        opened = []

        for kind, v in self.tokens:
            if kind == BEGIN:
                graph.add_edges_from((w, v) for w in opened)
                opened.append(v)
            else:
                opened.remove(v)

        return graph

    def words(self):
        return len(self.tokens)

    def serialize(self):
        """Whitespace separated `b<v>` / `e<v>` tokens."""
        return " ".join(f"{kind}{v}" for kind, v in self.tokens)

    @staticmethod
    def parse(text):
        """
        Rebuild an order from its `serialize()` text.

        Raises:
            ValueError -- If a token is malformed.

        """
        tokens = []

        for token in text.split():
            if token[:1] not in (BEGIN, END) or not token[1:].isdigit():
                raise ValueError(f"Malformed endpoint token \"{token}\"")

            tokens.append((token[0], int(token[1:])))

        return IntervalOrder(tokens)

    @staticmethod
    def from_starts(starts, length=1.0):
        """
        Order of a model given by interval start coordinates.

        Arguments:
            starts {dict[int: float]} -- Start of every vertex's interval.
            length {float} -- Common interval length.

        """
        points = [(s, 0, BEGIN, v) for v, s in starts.items()] + \
            [(s + length, 1, END, v) for v, s in starts.items()]
        return IntervalOrder((kind, v) for _, _, kind, v in sorted(points))

    @staticmethod
    def concat(orders):
        """Place several models one after another."""
        return IntervalOrder(token for order in orders
                             for token in order.tokens)

    def __len__(self):
        return len(self._begin)

    def __eq__(self, other):
        return isinstance(other, IntervalOrder) and self.tokens == other.tokens

    def __repr__(self):
        return self.serialize()


class PartialOrder:
    """
    Strict partial order on vertices given by generating pairs.

    Attributes:
        graph {networkx.DiGraph} -- Arc u -> w for every pair u < w.

    """

    def __init__(self, pairs=()):
        self.graph = nx.DiGraph()
        self.graph.add_edges_from(pairs)
        self._closure = None

    def add(self, u, w):
        """Require u < w."""
        self.graph.add_edge(u, w)
        self._closure = None

    def is_consistent(self):
        """Whether the pairs generate an acyclic order."""
        return nx.is_directed_acyclic_graph(self.graph)

    def closure(self):
        """
        Transitive closure of the order.

        Raises:
            NoInstance -- If the pairs contain a cycle.

        """
        if self._closure is None:
            if not self.is_consistent():
                raise NoInstance("Conflicting order constraints")

            self._closure = nx.transitive_closure_dag(self.graph)

        return self._closure

    def less(self, u, w):
        """Whether u < w holds (transitively)."""
        closure = self.closure()
        return u in closure and closure.has_edge(u, w)

    def pairs(self, vertices):
        """Every comparable pair (u, w), u < w, inside a vertex set."""
        vertices = set(vertices)
        return [(u, w) for u, w in self.closure().edges()
                if u in vertices and w in vertices]

    def restricted(self, vertices):
        """The order induced on a vertex set (transitivity kept)."""
        order = PartialOrder(self.pairs(vertices))
        order.graph.add_nodes_from(vertices)
        return order

    def refined(self, vertices, key):
        """
        The order induced on a vertex set, plus u < w whenever key(u) < key(w).
        """
        order = self.restricted(vertices)

        for u, w in permutations(vertices, 2):
            if key(u) < key(w):
                order.add(u, w)

        return order

    def minimal(self, vertices):
        """Vertices with no smaller vertex inside the set."""
        vertices = list(vertices)
        return [u for u in vertices
                if not any(self.less(w, u) for w in vertices if w != u)]

    def maximal(self, vertices):
        """Vertices with no larger vertex inside the set."""
        vertices = list(vertices)
        return [u for u in vertices
                if not any(self.less(u, w) for w in vertices if w != u)]

    def linear_extension(self, vertices):
        """
        Total order on the vertices compatible with the partial order.

        Incomparable vertices are taken by increasing id.

        Raises:
            NoInstance -- If the order has a cycle.

        """
        graph = self.graph.subgraph(vertices).copy()
        graph.add_nodes_from(vertices)

        if not nx.is_directed_acyclic_graph(graph):
            raise NoInstance("Conflicting order constraints")

        return list(nx.lexicographical_topological_sort(graph, key=int))

    def words(self):
        return 2 * self.graph.number_of_edges() + self.graph.number_of_nodes()
