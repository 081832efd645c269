"""
Module containing the iterative compression solver of Odd Cycle Transversal.

Vertices are added one at a time while a transversal of the processed
prefix is maintained. When the transversal reaches size k + 1 it is
compressed: every split of it into deleted and kept vertices and every
2-coloring of the kept part reduces to a minimum vertex cut in the
bipartite remainder.
"""

from itertools import combinations, product
import networkx as nx
from fastlog import log
from engine.results.solve_result import SolveResult


def _separating_cut(remainder, keep, flip):
    """
    Minimum vertex set meeting every keep-flip path of the remainder.

    Terminals themselves may be cut, every vertex has capacity one.
    """
    if not keep or not flip:
        return set()

    network = nx.DiGraph()

    for x in remainder:
        network.add_edge(("in", x), ("out", x), capacity=1)

    for a, b in remainder.edges():
        network.add_edge(("out", a), ("in", b))
        network.add_edge(("out", b), ("in", a))

    for x in keep:
        network.add_edge("source", ("in", x))

    for x in flip:
        network.add_edge(("out", x), "sink")

    _, (reachable, _) = nx.minimum_cut(network, "source", "sink")
    return {x for x in remainder
            if ("in", x) in reachable and ("out", x) not in reachable}


def _colorings(graph, kept):
    """Proper 2-colorings of the subgraph induced by `kept`."""
    kept = sorted(kept)

    for colors in product((0, 1), repeat=len(kept)):
        coloring = dict(zip(kept, colors))

        if all(coloring[u] != coloring[v]
               for u, v in graph.subgraph(kept).edges()):
            yield coloring


def compress(graph, transversal, k):
    """
    Find a transversal of size <= k given one of size k + 1.

    Arguments:
        graph {networkx.Graph} -- The graph.
        transversal {set[int]} -- Odd cycle transversal of size k + 1.
        k {int} -- Target size.

    Returns:
        set[int] -- Transversal of size <= k, or None if there is none.

    """
    remainder = graph.subgraph(set(graph) - transversal)
    base = nx.bipartite.color(remainder)

    for size in range(min(k, len(transversal)) + 1):
        for deleted in combinations(sorted(transversal), size):
            kept = transversal - set(deleted)

            for coloring in _colorings(graph, kept):
                forced, keep, flip = set(), set(), set()

                for x in remainder:
                    required = {1 - coloring[y] for y in graph[x]
                                if y in coloring}

                    if len(required) == 2:
                        forced.add(x)
                    elif required:
                        (keep if required.pop() == base[x] else flip).add(x)

                if len(forced) > k - size:
                    continue

                cut = _separating_cut(remainder.subgraph(set(remainder) - forced),
                                      keep - forced, flip - forced)

                if len(forced) + len(cut) <= k - size:
                    return set(deleted) | forced | cut

    return None


def solve_oct_static(graph, k):
    """
    Decide whether deleting at most k vertices makes the graph bipartite.

    Arguments:
        graph {networkx.Graph} -- Undirected graph.
        k {int} -- Budget.

    Returns:
        SolveResult -- YES with a transversal of size <= k, or NO.

    """
    if nx.is_bipartite(graph):
        return SolveResult.yes([], compressions=0)

    transversal = set()
    processed = []
    compressions = 0

    for v in sorted(graph):
        processed.append(v)
        prefix = graph.subgraph(processed)

        if nx.is_bipartite(prefix.subgraph(set(processed) - transversal)):
            continue

        transversal.add(v)

        if len(transversal) <= k:
            continue

        compressions += 1
        transversal = compress(prefix, transversal, k)

        if transversal is None:
            log.debug(f"OCT compression failed after {compressions} step(s)")
            return SolveResult.no(compressions=compressions)

    return SolveResult.yes(transversal, compressions=compressions)
