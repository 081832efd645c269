"""Module containing the enumeration of minimal vertex covers of bounded size."""


def _first_uncovered(order, has_edge, cover):
    """Lowest-index edge with no endpoint in the cover."""
    for i, u in enumerate(order):
        if u in cover:
            continue

        for v in order[i + 1:]:
            if v not in cover and has_edge(u, v):
                return u, v

    return None


def _is_minimal(cover, order, has_edge):
    """Every cover vertex has a neighbor outside the cover."""
    return all(any(w not in cover and has_edge(x, w) for w in order)
               for x in cover)


def minimal_vertex_covers(vertices, has_edge, k):
    """
    Enumerate minimal vertex covers of an implicit graph.

    The edge set is only accessed through `has_edge`, so the graph can be
    dense and never materialized. The search branches on the lowest-index
    uncovered edge (u, v): either u joins the cover, or u stays out and
    all of its neighbors join.

    Arguments:
        vertices {iterable[int]} -- Vertices of the graph.
        has_edge {callable} -- Symmetric edge predicate.
        k {int} -- Maximum cover size.

    Returns:
        generator[frozenset[int]] -- Each minimal cover of size <= k, once.

    """
    order = sorted(vertices)
    seen = set()
    stack = [(frozenset(), frozenset())]

    while stack:
        cover, excluded = stack.pop()
        edge = _first_uncovered(order, has_edge, cover)

        if edge is None:
            if cover not in seen and _is_minimal(cover, order, has_edge):
                seen.add(cover)
                yield cover

            continue

        if len(cover) >= k:
            continue

        u = edge[0]
        neighbors = frozenset(w for w in order
                              if w != u and w not in cover and has_edge(u, w))

        if not neighbors & excluded and len(cover) + len(neighbors) <= k:
            stack.append((cover | neighbors, excluded | {u}))

        stack.append((cover | {u}, excluded))


def enumerate_min_vertex_covers(graph, k):
    """Minimal vertex covers of size <= k of an explicit networkx graph."""
    return minimal_vertex_covers(graph.nodes(), graph.has_edge, k)
