"""
Module containing the one-pass pipelines of Odd Cycle Transversal, Subset FVS and Multiway Cut.

Every pipeline samples vertex subsets, sketches one sparse certificate
of each induced subgraph G_i in a single pass and solves the union of
the certificates with a static solver:
    OCT -- the edges used by a spanning forest of the double cover of G_i.
    Subset FVS -- a spanning forest of G_i plus every terminal edge.
    Multiway Cut -- a spanning forest of G_i.
The union is a subgraph of G, so a NO answer is always correct.
"""

from fastlog import log
from engine.algorithms import OCT, SFVS, MWC
from engine.errors.user_input import InvalidParams
from engine.results.solve_result import SolveResult
from engine.sketches.connectivity import ConnectivitySketch, \
    forest_components
from engine.sketches.double_cover import DoubleCoverSketch, is_bipartite
from engine.solvers.classes import has_terminal_cycle
from engine.solvers.cuts import solve_sfvs_static, solve_mwc_static
from engine.solvers.oct import solve_oct_static
from engine.stream.replay import FanoutConsumer
from engine.utils.randomness import seed_for
from .sampling import sample_subsets
from .sparsified import SparsifiedGraph, TerminalEdgeStore, TERMINAL_EDGES


def _one_pass(consumers):
    """Pass procedure feeding every consumer in one shared pass."""
    yield [FanoutConsumer(consumers)]
    return consumers


def _sample(n, k, settings, label):
    sample = sample_subsets(n, k, settings.sampling_q,
                            seed_for(settings.seed, label), settings.l_max)
    return sample, sample.distinct()


def oct_sparsifier(n, k, settings):
    """
    Pass procedure sparsifying an OCT instance.

    Arguments:
        n {int} -- Number of vertices.
        k {int} -- Budget (at least 1).
        settings {Settings} -- Run configuration.

    Returns:
        generator -- Procedure returning (SampleSpec, SparsifiedGraph).

    """
    sample, distinct = _sample(n, k, settings, OCT)
    sketches = {i: DoubleCoverSketch(subset, n,
                                     seed_for(settings.seed, OCT, i),
                                     settings.sketch_c,
                                     settings.strict_sketches)
                for subset, i in distinct.items()}

    yield from _one_pass(list(sketches.values()))

    sparsified = SparsifiedGraph(n)

    for i, sketch in sketches.items():
        sparsified.add(sketch.projected_forest(), i)

    return sample, sparsified


def forest_sparsifier(n, k, settings, label, terminals=(), capacity=0):
    """
    Pass procedure keeping a spanning forest of every sampled G_i.

    With terminals, a terminal edge store of the given capacity runs
    in the same pass and its edges are added when it did not overflow.

    Arguments:
        n {int} -- Number of vertices.
        k {int} -- Budget the samples must withstand.
        settings {Settings} -- Run configuration.
        label {string} -- Problem tag (seeds the sample).
        terminals {iterable[int]} -- Terminals whose edges are stored
                                     (empty: no store).
        capacity {int} -- Capacity of the terminal edge store.

    Returns:
        generator -- Procedure returning (SampleSpec, SparsifiedGraph,
                     TerminalEdgeStore or None).

    """
    sample, distinct = _sample(n, k, settings, label)
    sketches = {i: ConnectivitySketch(subset,
                                      seed_for(settings.seed, label, i),
                                      settings.sketch_c,
                                      settings.strict_sketches)
                for subset, i in distinct.items()}
    store = TerminalEdgeStore(n, terminals, capacity) \
        if terminals else None

    consumers = list(sketches.values())

    if store is not None:
        consumers.append(store)

    yield from _one_pass(consumers)

    sparsified = SparsifiedGraph(n, terminals)

    for i, sketch in sketches.items():
        sparsified.add(sketch.spanning_forest(), i)

    if store is not None and not store.overflow:
        sparsified.add(store.edges(), TERMINAL_EDGES)

    return sample, sparsified, store


def _charge(runner, sample, sparsified):
    if runner.ledger is not None:
        runner.ledger.charge("SampleSpec", sample.words())
        runner.ledger.charge("SparsifiedGraph", sparsified.words())


def _stats(sample, sparsified):
    return {"subsets": sample.count,
            "sketched": len(sample.distinct()),
            "sparsified_edges": len(sparsified)}


def _bipartite_procedure(n, settings):
    """Pass procedure deciding bipartiteness of the whole graph."""
    graph_sketch = ConnectivitySketch(range(n), seed_for(settings.seed, OCT),
                                      settings.sketch_c,
                                      settings.strict_sketches)
    cover_sketch = DoubleCoverSketch(range(n), n,
                                     seed_for(settings.seed, OCT, "cover"),
                                     settings.sketch_c,
                                     settings.strict_sketches)
    yield from _one_pass([graph_sketch, cover_sketch])
    return is_bipartite(graph_sketch, cover_sketch)


def oct_pipeline(runner, k, settings):
    """
    Decide Odd Cycle Transversal in one pass.

    Arguments:
        runner {StreamRunner} -- Runner over an undirected stream.
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Raises:
        InvalidParams -- If k is negative.
        SketchFailure -- If a strict sketch fails.

    Returns:
        SolveResult -- YES with a solution, or NO.

    """
    n = runner.stream.n

    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    if k == 0:
        bipartite = runner.drive(_bipartite_procedure(n, settings))
        return SolveResult.yes([]) if bipartite else SolveResult.no()

    sample, sparsified = runner.drive(oct_sparsifier(n, k, settings))
    _charge(runner, sample, sparsified)
    log.debug(f"OCT: {len(sparsified)} edge(s) kept from "
              f"{sample.count} subsets")

    result = solve_oct_static(sparsified.to_graph(), k)
    result.stats.update(_stats(sample, sparsified))
    return result


def _terminal_cycle_procedure(n, terminals, settings):
    """
    Pass procedure deciding whether some cycle passes through a terminal.

    A spanning forest of G - T plus every terminal edge keeps a cycle
    through a terminal whenever G has one.
    """
    store = TerminalEdgeStore(n, terminals, n)
    sketch = ConnectivitySketch(set(range(n)) - set(terminals),
                                seed_for(settings.seed, SFVS),
                                settings.sketch_c, settings.strict_sketches)
    yield from _one_pass([store, sketch])

    if store.overflow:
        return True

    sparsified = SparsifiedGraph(n, terminals)
    sparsified.add(sketch.spanning_forest(), 0)
    sparsified.add(store.edges(), TERMINAL_EDGES)
    return has_terminal_cycle(sparsified.to_graph(), set(terminals))


def sfvs_pipeline(runner, k, settings):
    """
    Decide Subset Feedback Vertex Set in one pass.

    The subsets are sampled for budget k + 1. More than (k + 1) * n
    terminal edges rule out every solution of size k.

    Arguments:
        runner {StreamRunner} -- Runner over an undirected stream
                                 with terminals.
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Raises:
        InvalidParams -- If k is negative.
        SketchFailure -- If a strict sketch fails.

    Returns:
        SolveResult -- YES with a solution, or NO.

    """
    n = runner.stream.n
    terminals = frozenset(runner.stream.terminals)

    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    if not terminals:
        return SolveResult.yes([])

    if k == 0:
        cycle = runner.drive(_terminal_cycle_procedure(n, terminals,
                                                       settings))
        return SolveResult.no() if cycle else SolveResult.yes([])

    sample, sparsified, store = runner.drive(
        forest_sparsifier(n, k + 1, settings, SFVS, terminals, (k + 1) * n))

    if store.overflow:
        log.info(f"{store.counter} terminal edges exceed {store.capacity}")
        return SolveResult.no(terminal_edges=store.counter)

    _charge(runner, sample, sparsified)
    result = solve_sfvs_static(sparsified.to_graph(), terminals, k,
                               settings.enumeration_cap)
    result.stats.update(_stats(sample, sparsified),
                        terminal_edges=store.counter)
    return result


def _terminal_connectivity_procedure(n, terminals, settings):
    """Pass procedure deciding whether two terminals share a component."""
    sketch = ConnectivitySketch(range(n), seed_for(settings.seed, MWC),
                                settings.sketch_c, settings.strict_sketches)
    yield from _one_pass([sketch])

    components = forest_components(range(n), sketch.spanning_forest())
    return any(len(c & terminals) >= 2 for c in components)


def mwc_pipeline(runner, k, settings):
    """
    Decide Multiway Cut in one pass.

    Terminals may be deleted unless `settings.protect_terminals` is set.

    Arguments:
        runner {StreamRunner} -- Runner over an undirected stream
                                 with terminals.
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Raises:
        InvalidParams -- If k is negative or there are fewer than
                         two terminals.
        SketchFailure -- If a strict sketch fails.

    Returns:
        SolveResult -- YES with a solution, or NO.

    """
    n = runner.stream.n
    terminals = frozenset(runner.stream.terminals)

    if len(terminals) < 2:
        raise InvalidParams("Multiway Cut needs at least two terminals")

    if k < 0:
        raise InvalidParams(f"Budget must be non-negative, got {k}")

    if k == 0:
        connected = runner.drive(_terminal_connectivity_procedure(
            n, terminals, settings))
        return SolveResult.no() if connected else SolveResult.yes([])

    sample, sparsified, _ = runner.drive(
        forest_sparsifier(n, k, settings, MWC))
    sparsified.terminals = terminals
    _charge(runner, sample, sparsified)

    result = solve_mwc_static(sparsified.to_graph(), terminals, k,
                              settings.enumeration_cap,
                              settings.protect_terminals)
    result.stats.update(_stats(sample, sparsified))
    return result


PIPELINES = {OCT: oct_pipeline, SFVS: sfvs_pipeline, MWC: mwc_pipeline}


def solve_cut(runner, problem, k, settings):
    """
    Run the cut pipeline of a problem.

    Raises:
        InvalidParams -- If the problem is not a cut problem.

    """
    if problem not in PIPELINES:
        raise InvalidParams(f"Not a cut problem: \"{problem}\"")

    return PIPELINES[problem](runner, k, settings)
