"""
Module containing witness families and the check of the sampling event.

A witness is a subgraph given by its edges. The sampling event holds
when, for every set S of at most k vertices and every family, either S
meets every witness of the family or the union of the sampled
subgraphs avoiding S contains some witness of the family.
"""

from itertools import combinations
from math import comb
import networkx as nx
import numpy as np
from engine.errors.user_input import CapExceeded

# Default cap on the number of deletion sets the event check enumerates.
EVENT_CAP = 250_000


def _cycle_edges(cycle):
    return [(min(u, v), max(u, v))
            for u, v in zip(cycle, cycle[1:] + cycle[:1])]


def _cycles(graph, max_length):
    return [c for c in nx.simple_cycles(graph, length_bound=max_length)
            if len(c) >= 3]


def odd_cycle_witnesses(graph, max_length):
    """
    Odd cycles of length at most `max_length`.

    Returns:
        list[list[tuple[int, int]]] -- One edge list per cycle.

    """
    return [_cycle_edges(c) for c in _cycles(graph, max_length)
            if len(c) % 2]


def terminal_cycle_witnesses(graph, terminals, max_length):
    """
    Cycles of length at most `max_length` through some terminal.

    Returns:
        list[list[tuple[int, int]]] -- One edge list per cycle.

    """
    terminals = set(terminals)
    return [_cycle_edges(c) for c in _cycles(graph, max_length)
            if terminals.intersection(c)]


def _vertices(witness):
    return {v for edge in witness for v in edge}


def check_sampling_event(sample, k, families, cap=EVENT_CAP):
    """
    Check the sampling event for every deletion set of at most k vertices.

    Arguments:
        sample {SampleSpec} -- The sampled subsets.
        k {int} -- Largest deletion set size.
        families {list[list[list[tuple[int, int]]]]} -- Witness families.
        cap {int} -- Maximum number of deletion sets.

    Raises:
        CapExceeded -- If there are more than `cap` deletion sets.

    Returns:
        bool -- True iff the event holds.

    """
    n = sample.n
    required = sum(comb(n, size) for size in range(min(k, n) + 1))

    if required > cap:
        raise CapExceeded(f"Sampling event check needs {required} sets",
                          cap, required)

    families = [[(w, _vertices(w)) for w in family] for family in families]
    matrix = sample.membership()

    for size in range(min(k, n) + 1):
        for removed in combinations(range(n), size):
            removed = set(removed)
            kept = matrix[~matrix[:, sorted(removed)].any(axis=1)] \
                if removed else matrix

            for family in families:
                if all(vertices & removed for _, vertices in family):
                    continue

                if not any(_covered(kept, witness) for witness, _ in family):
                    return False

    return True


def _covered(kept, witness):
    """Whether every edge of a witness lies inside some kept subset."""
    edges = np.array(witness, dtype=np.int64).reshape(-1, 2)
    return bool((kept[:, edges[:, 0]] & kept[:, edges[:, 1]]).any(axis=0).all())
