"""
Module containing the succinct representation assembled from per-subset reconstructions.

Every member F_i of the separating family is either reconstructed
(G[F_i] is in the class and D_i answers its edge queries) or rejected.
A pair is an edge of the union graph iff some reconstructed member
covering it has the edge. A pair covered by no reconstructed member is
forced: every solution deletes one of its endpoints.
"""

from itertools import combinations
import networkx as nx
from bitstring import BitArray


class ReconstructionOutcome:
    """
    Result of reconstructing G[F_i].

    Attributes:
        in_class {bool} -- Whether G[F_i] was accepted.
        representation {object} -- Edge oracle of G[F_i] with a
                                   `has_edge(u, v)` method (None if rejected).

    """

    def __init__(self, in_class, representation=None):
        self.in_class = in_class
        self.representation = representation if in_class else None

    def has_edge(self, u, v):
        return self.in_class and self.representation.has_edge(u, v)

    def words(self):
        words = getattr(self.representation, "words", None)
        return 1 + (words() if callable(words) else 0)


class UnionRepresentation:
    """
    Edge oracle of the union graph G~ and of the forced-pair graph G'.

    Attributes:
        vertices {list[int]} -- Vertices of the input graph.
        members {list[frozenset[int]]} -- Family members F_i.
        outcomes {list[ReconstructionOutcome]} -- D_i for every member.
        covers {dict[int: BitArray]} -- Bit i of vertex v is set iff
                                        v lies in a reconstructed F_i.

    """

    def __init__(self, vertices, members, outcomes):
        """
        Index the reconstructed members of every vertex.

        See class docstring for details on constructor arguments.
        """
        self.vertices = sorted(vertices)
        self.members = [frozenset(m) for m in members]
        self.outcomes = list(outcomes)
        self.covers = {v: BitArray(length=len(self.members))
                       for v in self.vertices}

        for i, (member, outcome) in enumerate(zip(self.members,
                                                  self.outcomes)):
            if not outcome.in_class:
                continue

            for v in member:
                self.covers[v].set(True, i)

    @property
    def reconstructed(self):
        """Number of accepted members."""
        return sum(o.in_class for o in self.outcomes)

    def covering(self, u, v):
        """Indices of the reconstructed members containing u and v."""
        return list((self.covers[u] & self.covers[v]).findall('0b1'))

    def forced_pair(self, u, v):
        """Whether no reconstructed member contains both u and v."""
        return u != v and not (self.covers[u] & self.covers[v]).any(True)

    def edge_query(self, u, v):
        """Whether {u, v} is an edge of the union graph."""
        return any(self.outcomes[i].has_edge(u, v)
                   for i in self.covering(u, v))

    def graph(self, removed=()):
        """
        Explicit copy of G~ - removed.

        Returns:
            networkx.Graph -- The union graph without the removed vertices.

        """
        removed = set(removed)
        kept = [v for v in self.vertices if v not in removed]
        graph = nx.Graph()
        graph.add_nodes_from(kept)
        graph.add_edges_from((u, v) for u, v in combinations(kept, 2)
                             if self.edge_query(u, v))
        return graph

    def words(self):
        return sum(len(m) for m in self.members) + \
            sum(o.words() for o in self.outcomes) + \
            len(self.vertices) * (len(self.members) // 64 + 1)

    def dict(self):
        return {"members": len(self.members),
                "reconstructed": self.reconstructed}
