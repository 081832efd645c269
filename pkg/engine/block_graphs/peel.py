"""Module containing the removal of vertices that lie in a single maximal clique."""

from .cliques import clique_table


def peel_single_clique_vertices(graph):
    """
    Repeatedly remove every vertex lying in exactly one maximal clique.

    Such a vertex is simplicial and stays simplicial while others are
    removed, so each round removes all of them at once. A set is a block
    vertex deletion set of the graph iff it is one of the peeled graph,
    and block graphs peel down to the empty graph.

    Arguments:
        graph {networkx.Graph} -- Explicit graph (left unchanged).

    Returns:
        networkx.Graph -- The peeled copy.

    """
    peeled = graph.copy()

    while peeled.number_of_nodes():
        single = [v for v, count in clique_table(peeled).items()
                  if count == 1]

        if not single:
            break

        peeled.remove_nodes_from(single)

    return peeled
