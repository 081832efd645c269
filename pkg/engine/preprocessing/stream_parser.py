"""
Module containing the stream file parser and its inverse.

The format is line-oriented UTF-8 text. Header lines (`n`, `k`, `prob`,
`mode`, `terminals`, `plant`) come first, followed by edge events
`+ u v [tu tv]` and `- u v`. Empty lines and lines starting with `#`
are ignored.
"""

from engine.algorithms import PROBLEMS, TERMINAL_PROBLEMS
from engine.errors.stream import MalformedLine, DuplicateInsert, \
    DeleteAbsent, VertexOutOfRange, TerminalFlagOnLaterEdge
from engine.errors.user_input import UserInputError
from engine.stream import INSERT, DELETE, INSERTION_ONLY, TURNSTILE
from engine.stream.events import StreamEvent, StreamHeader, Stream

_HEADER_KEYS = ("n", "k", "prob", "mode", "terminals", "plant")


def _int(token, line):
    """Parse a non-negative integer token."""
    try:
        value = int(token)
    except ValueError:
        raise MalformedLine(f"expected an integer, got \"{token}\"", line)

    if value < 0:
        raise MalformedLine(f"negative value \"{token}\"", line)

    return value


def _vertex(token, n, line):
    """Parse a vertex id and check that it lies in [0, n)."""
    value = _int(token, line)

    if value >= n:
        raise VertexOutOfRange(f"vertex {value} outside of [0, {n})", line)

    return value


def _flag(token, line):
    """Parse a terminal flag (0 or 1)."""
    if token not in ("0", "1"):
        raise MalformedLine(f"terminal flag must be 0 or 1, got \"{token}\"",
                            line)

    return token == "1"


def _parse_header_line(key, values, fields, line):
    """Store one header line into the `fields` dictionary."""
    if key in fields:
        raise MalformedLine(f"repeated header line \"{key}\"", line)

    if key in ("n", "k", "prob", "mode") and len(values) != 1:
        raise MalformedLine(f"\"{key}\" takes exactly one value", line)

    if key in ("n", "k"):
        fields[key] = _int(values[0], line)

    elif key == "prob":
        if values[0] not in PROBLEMS:
            raise MalformedLine(f"unknown problem \"{values[0]}\"", line)

        fields[key] = values[0]

    elif key == "mode":
        if values[0] not in (INSERTION_ONLY, TURNSTILE):
            raise MalformedLine(f"unknown mode \"{values[0]}\"", line)

        fields[key] = values[0]

    else:
        fields[key] = [_int(v, line) for v in values]


def _make_header(fields, line):
    """Build the header once the first event (or the end) is reached."""
    if "n" not in fields:
        raise MalformedLine("\"n\" must precede the first event", line)

    n = fields["n"]

    for key in ("terminals", "plant"):
        for v in fields.get(key, ()):
            if v >= n:
                raise VertexOutOfRange(
                    f"{key} vertex {v} outside of [0, {n})", line)

    return StreamHeader(n, fields.get("k", 0), fields.get("prob"),
                        fields.get("mode", TURNSTILE),
                        fields.get("terminals", ()), fields.get("plant"))


def parse_stream(text):
    """
    Parse and validate a stream file.

    Events are validated against simple-graph turnstile rules:
    an edge may only be inserted while absent and deleted while present.
    Edges are keyed by their unordered vertex pair, for directed problems
    a deletion must name the arc in its stored orientation.

    Terminal flags are vertex attributes fixed by the first insertion
    incident to the vertex. A flag set on a later edge of an already
    seen non-terminal vertex is an error.

    Arguments:
        text {string|bytes} -- Contents of the stream file.

    Raises:
        MalformedLine -- If a line breaks the grammar.
        DuplicateInsert -- If a present edge is inserted again.
        DeleteAbsent -- If an absent edge is deleted.
        VertexOutOfRange -- If a vertex id is not in [0, n).
        TerminalFlagOnLaterEdge -- If a flag appears after first sight.

    Returns:
        Stream -- Header, ordered events and terminal set.

    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    fields = {}
    header = None
    events = []
    present = {}
    seen = set()
    terminals = set()

    for line, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()

        if not tokens or tokens[0].startswith("#"):
            continue

        key, values = tokens[0], tokens[1:]

        if key in _HEADER_KEYS:
            if header is not None:
                raise MalformedLine(
                    f"header line \"{key}\" after the first event", line)

            _parse_header_line(key, values, fields, line)
            continue

        if key not in (INSERT, DELETE):
            raise MalformedLine(f"unknown line type \"{key}\"", line)

        if header is None:
            header = _make_header(fields, line)
            terminals.update(header.terminals)

        if len(values) not in (2, 4) or (key == DELETE and len(values) != 2):
            raise MalformedLine("wrong number of fields", line)

        u = _vertex(values[0], header.n, line)
        v = _vertex(values[1], header.n, line)

        if u == v:
            raise MalformedLine(f"self-loop at vertex {u}", line)

        pair = (u, v) if u < v else (v, u)

        if key == DELETE:
            if header.mode == INSERTION_ONLY:
                raise MalformedLine("deletion in an insertion-only stream",
                                    line)

            if pair not in present or \
                    (header.directed and present[pair] != (u, v)):
                raise DeleteAbsent(f"edge ({u}, {v}) is not present", line)

            del present[pair]
            events.append(StreamEvent(DELETE, u, v))
            continue

        if pair in present:
            raise DuplicateInsert(f"edge ({u}, {v}) is already present", line)

        term_u = term_v = False

        if len(values) == 4:
            if header.problem not in TERMINAL_PROBLEMS:
                raise MalformedLine(
                    "terminal flags on a problem without terminals", line)

            term_u = _flag(values[2], line)
            term_v = _flag(values[3], line)

        for vertex, flagged in ((u, term_u), (v, term_v)):
            if vertex not in seen:
                seen.add(vertex)

                if flagged:
                    terminals.add(vertex)

            elif flagged and vertex not in terminals:
                raise TerminalFlagOnLaterEdge(
                    f"vertex {vertex} flagged after its first edge", line)

        present[pair] = (u, v)
        events.append(StreamEvent(INSERT, u, v, term_u, term_v))

    if header is None:
        header = _make_header(fields, None)
        terminals.update(header.terminals)

    return Stream(header, events, terminals)


def read_stream_file(path):
    """
    Read and parse a stream file from disk.

    Raises:
        UserInputError -- If the file cannot be read.

    """
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as ex:
        raise UserInputError(f"Unable to read stream file \"{path}\": {ex}")

    return parse_stream(data)


def dump_stream(header, events):
    """
    Convert a header and its events back into the stream file format.

    Arguments:
        header {StreamHeader} -- Stream metadata.
        events {list[StreamEvent]} -- Events to write.

    Returns:
        string -- Stream file contents.

    """
    lines = [f"n {header.n}", f"k {header.k}"]

    if header.problem is not None:
        lines.append(f"prob {header.problem}")

    lines.append(f"mode {header.mode}")

    if header.terminals:
        lines.append("terminals " +
                     " ".join(str(t) for t in sorted(header.terminals)))

    if header.plant is not None:
        lines.append("plant " + " ".join(str(v) for v in header.plant))

    lines.extend(repr(e) for e in events)
    return "\n".join(lines) + "\n"


def graph_events(graph):
    """
    Insertion events of an explicit graph, in sorted edge order.

    Arguments:
        graph {networkx.Graph} -- Graph on vertices 0..n-1.

    Returns:
        list[StreamEvent] -- One insertion per edge (per arc if directed).

    """
    if graph.is_directed():
        edges = sorted(graph.edges())
    else:
        edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())

    return [StreamEvent(INSERT, u, v) for u, v in edges]


def parse_solution(text):
    """
    Parse a solution file: whitespace-separated vertex ids, `#` comments.

    Raises:
        UserInputError -- If a token is not a vertex id.

    Returns:
        list[int] -- The listed vertices.

    """
    solution = []

    for raw in text.splitlines():
        for token in raw.split("#", 1)[0].split():
            if not token.isdigit():
                raise UserInputError(f"Invalid vertex in solution: \"{token}\"")

            solution.append(int(token))

    return solution
