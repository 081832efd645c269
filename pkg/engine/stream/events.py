"""Module containing the `StreamEvent`, `StreamHeader` and `Stream` classes."""

from . import INSERT, TURNSTILE


class StreamEvent:
    """
    One edge update of a turnstile stream.

    For directed problems the pair (u, v) is the arc u -> v,
    otherwise the edge is unordered.

    Attributes:
        op {string} -- Either INSERT ("+") or DELETE ("-").
        u {int} -- First endpoint.
        v {int} -- Second endpoint.
        term_u {bool} -- Terminal flag of u (first insertion only).
        term_v {bool} -- Terminal flag of v (first insertion only).

    """

    __slots__ = ("op", "u", "v", "term_u", "term_v")

    def __init__(self, op, u, v, term_u=False, term_v=False):
        """
        Initialize a new stream event.

        Arguments:
            op {string} -- Either INSERT ("+") or DELETE ("-").
            u {int} -- First endpoint.
            v {int} -- Second endpoint.
            term_u {bool} -- Terminal flag of u.
            term_v {bool} -- Terminal flag of v.

        """
        self.op = op
        self.u = u
        self.v = v
        self.term_u = term_u
        self.term_v = term_v

    @property
    def sign(self):
        """+1 for insertions, -1 for deletions."""
        return 1 if self.op == INSERT else -1

    @property
    def edge(self):
        """Unordered edge as a (smaller, larger) tuple."""
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def __eq__(self, other):
        """Events are equal when all of their fields are."""
        return isinstance(other, StreamEvent) and \
            (self.op, self.u, self.v, self.term_u, self.term_v) == \
            (other.op, other.u, other.v, other.term_u, other.term_v)

    def __repr__(self):
        """Event in the stream file syntax."""
        text = f"{self.op} {self.u} {self.v}"

        if self.term_u or self.term_v:
            text += f" {int(self.term_u)} {int(self.term_v)}"

        return text


class StreamHeader:
    """
    Metadata of a stream, known before the first event.

    Attributes:
        n {int} -- Number of vertices (ids 0..n-1).
        k {int} -- Parameter (solution size budget).
        problem {string} -- Problem tag (None if not given).
        mode {string} -- INSERTION_ONLY or TURNSTILE.
        terminals {frozenset[int]} -- Terminals declared in the header.
        plant {list[int]} -- Planted solution annotation (None if absent).

    """

    def __init__(self, n, k=0, problem=None, mode=TURNSTILE,
                 terminals=(), plant=None):
        """
        Initialize a new stream header.

        See class docstring for details on constructor arguments.
        """
        self.n = n
        self.k = k
        self.problem = problem
        self.mode = mode
        self.terminals = frozenset(terminals)
        self.plant = list(plant) if plant is not None else None

    @property
    def directed(self):
        """Whether the stream describes a digraph (tournament problems)."""
        # Imported lazily, the problem tags live with the pipeline runner.
        from engine.algorithms import DIRECTED_PROBLEMS
        return self.problem in DIRECTED_PROBLEMS

    def dict(self):
        """Dictionary representation of the header."""
        return {"n": self.n, "k": self.k, "problem": self.problem,
                "mode": self.mode, "terminals": sorted(self.terminals),
                "plant": self.plant}


class Stream:
    """
    A parsed stream: header, validated events and terminal attributes.

    The event buffer belongs to the replay harness, consumers
    only ever see it through `replay`.

    Attributes:
        header {StreamHeader} -- Stream metadata.
        events {list[StreamEvent]} -- Ordered, validated events.
        terminals {frozenset[int]} -- Header terminals plus flagged vertices.

    """

    def __init__(self, header, events, terminals=None):
        """
        Initialize a new stream.

        Arguments:
            header {StreamHeader} -- Stream metadata.
            events {list[StreamEvent]} -- Ordered, validated events.
            terminals {iterable[int]} -- All terminals (defaults to header's).

        """
        self.header = header
        self.events = events
        self.terminals = frozenset(header.terminals if terminals is None
                                   else terminals)

    @property
    def n(self):
        """Number of vertices."""
        return self.header.n

    @property
    def directed(self):
        """Whether the stream describes a digraph."""
        return self.header.directed

    def __len__(self):
        """Number of events."""
        return len(self.events)
