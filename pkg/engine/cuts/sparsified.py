"""Module containing the sparsified graph and the terminal edge store built by the cut pipelines."""

import networkx as nx
from engine.errors.analysis import SketchFailure
from engine.sketches.sparse_recovery import SparseRecoveryState
from engine.stream.replay import Consumer

# Provenance label of edges recovered from the terminal edge store.
TERMINAL_EDGES = "X"


class SparsifiedGraph:
    """
    Union of the sparsified subgraphs, every edge tagged with where it came from.

    Attributes:
        n {int} -- Number of vertices.
        terminals {frozenset[int]} -- Terminal vertices (may be empty).
        provenance {dict[tuple[int, int]: list]} -- Labels of every edge:
                                                   subset indices or
                                                   TERMINAL_EDGES.

    """

    def __init__(self, n, terminals=()):
        self.n = n
        self.terminals = frozenset(terminals)
        self.provenance = {}

    def add(self, edges, label):
        """
        Add edges coming from one source.

        Arguments:
            edges {iterable[tuple[int, int]]} -- Edges of the source.
            label {int|string} -- Provenance label of the source.

        Returns:
            SparsifiedGraph -- The updated graph (self).

        """
        for u, v in edges:
            labels = self.provenance.setdefault((min(u, v), max(u, v)), [])

            if label not in labels:
                labels.append(label)

        return self

    def edges(self):
        """Sorted edge list."""
        return sorted(self.provenance)

    def part(self, label):
        """Edges contributed by one source."""
        return sorted(e for e, labels in self.provenance.items()
                      if label in labels)

    def to_graph(self):
        """
        Explicit graph on 0..n-1 with the terminals in `graph.graph`.

        Returns:
            networkx.Graph -- The sparsified graph.

        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.provenance)
        graph.graph["terminals"] = self.terminals
        return graph

    def __len__(self):
        return len(self.provenance)

    def words(self):
        """Two words per edge plus one per provenance label."""
        return sum(2 + len(labels) for labels in self.provenance.values())

    def dump(self):
        """
        Text dump: `n <n>`, then one `u v provenance` line per edge.

        Provenance labels are comma-separated.
        """
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v} " + ",".join(str(p) for p in labels)
                     for (u, v), labels in sorted(self.provenance.items()))
        return "\n".join(lines) + "\n"


class TerminalEdgeStore(Consumer):
    """
    Sparse recovery of every edge incident to a terminal.

    Edges are encoded as u * n + v with u < v.

    Attributes:
        n {int} -- Number of vertices.
        terminals {frozenset[int]} -- Terminal vertices.
        capacity {int} -- Number of edges recovered exactly.
        state {SparseRecoveryState} -- Recovery structure.
        counter {int} -- Net number of live terminal edges.

    """

    def __init__(self, n, terminals, capacity):
        """
        Initialize an empty store.

        See class docstring for details on constructor arguments.
        """
        super().__init__()

        self.n = n
        self.terminals = frozenset(terminals)
        self.capacity = capacity
        self.state = SparseRecoveryState(capacity, max(n * n, 1))
        self.counter = 0

    def on_event(self, event):
        """Record the event if it touches a terminal."""
        if event.u in self.terminals or event.v in self.terminals:
            u, v = event.edge
            self.state.update(u * self.n + v, event.sign)
            self.counter += event.sign

    @property
    def overflow(self):
        """Whether more terminal edges are live than can be recovered."""
        return self.counter > self.capacity

    def edges(self):
        """
        Recover the live terminal edges.

        Raises:
            SketchFailure -- If the store overflowed or cannot be decoded.

        Returns:
            list[tuple[int, int]] -- Sorted terminal edges.

        """
        items = None if self.overflow else self.state.recover()

        if items is None:
            raise SketchFailure(f"Terminal edge store with {self.counter} "
                                f"live edge(s) cannot be decoded")

        return sorted(divmod(item, self.n) for item in items)

    def words(self):
        """Words of the recovery state plus the counter."""
        return self.state.words() + 1
