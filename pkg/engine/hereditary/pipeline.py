"""
Module containing the stream phase and the post-processing of the hereditary engine.

Every member F_i of an (n, k, 2)-separating family is reconstructed in
shared passes. Every solution S is a vertex cover of the forced-pair
graph G', so the post-processing enumerates the minimal vertex covers X
of G' with |X| <= k and solves the class's problem on G~ - X with the
remaining budget.
"""

from fastlog import log
from engine.derand.separating import graph_separating
from engine.preprocessing.materialize import materialize
from engine.results.solve_result import SolveResult
from engine.solvers.oracle import brute_force_oracle
from engine.solvers.vertex_cover import minimal_vertex_covers
from engine.stream.replay import FanoutConsumer, run_parallel
from engine.utils.randomness import seed_for
from .adapters import adapter_for
from .representation import UnionRepresentation


def family_members(n, k):
    """
    Members of the family covering every pair while avoiding any k-set.

    For k = 0 the whole vertex set is the only member.
    """
    if k == 0:
        return [frozenset(range(n))]

    return graph_separating(n, k).members


def _shared(procedures):
    """Run procedures in shared passes, one fan-out consumer per pass."""
    procedure = run_parallel(*procedures)

    try:
        consumers = next(procedure)

        while True:
            yield [FanoutConsumer(consumers)]
            consumers = procedure.send(None)

    except StopIteration as stop:
        return stop.value


def stream_phase(vertices, members, adapter, seed=0):
    """
    Pass procedure reconstructing G[F_i] for every member.

    Arguments:
        vertices {iterable[int]} -- Vertices of the input graph.
        members {list[frozenset[int]]} -- Family members.
        adapter {ClassAdapter} -- Reconstruction of the class.
        seed {int} -- Run seed.

    Returns:
        generator -- Procedure returning a UnionRepresentation.

    """
    outcomes = yield from _shared(
        adapter.reconstruct(member, seed_for(seed, i))
        for i, member in enumerate(members))

    representation = UnionRepresentation(vertices, members, outcomes)
    log.debug(f"Reconstructed {representation.reconstructed} of "
              f"{len(members)} member(s)")

    return representation


def solve(representation, k, adapter, seed=0):
    """
    Post-processing over the minimal vertex covers of the forced-pair graph.

    Arguments:
        representation {UnionRepresentation} -- Outcome of the stream phase.
        k {int} -- Budget.
        adapter {ClassAdapter} -- Static solver of the class.
        seed {int} -- Seed of randomized static solvers.

    Returns:
        SolveResult -- YES with S~ | X for the first cover X that works, else NO.

    """
    covers = 0

    for cover in minimal_vertex_covers(representation.vertices,
                                       representation.forced_pair, k):
        covers += 1
        remainder = representation.graph(removed=cover)
        result = adapter.solve_static(remainder, k - len(cover),
                                      seed_for(seed, "static", covers))

        if result.is_yes:
            return SolveResult.yes(set(cover) | set(result.solution),
                                   covers=covers, **representation.dict())

    return SolveResult.no(covers=covers, **representation.dict())


def solve_hereditary(runner, problem, k, settings):
    """
    Solve vertex deletion to a hereditary class with a reconstruction.

    Arguments:
        runner {StreamRunner} -- Runner over the input stream.
        problem {string} -- Problem tag (bvd or pivd).
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Returns:
        SolveResult -- YES with a solution, or NO.

    """
    adapter = adapter_for(problem, settings)
    n = runner.stream.n

    if n < k + 2:
        log.info(f"Budget {k} is too large for n={n}, "
                 f"using the brute-force oracle")
        return brute_force_oracle(problem, materialize(runner.stream), k,
                                  settings.oracle_cap)

    members = family_members(n, k)

    if runner.ledger is not None:
        runner.ledger.charge("SeparatingFamily",
                             sum(len(m) for m in members))

    with runner.pass_limit(adapter.pass_bound(n)):
        representation = runner.drive(
            stream_phase(range(n), members, adapter, settings.seed))

    if runner.ledger is not None:
        runner.ledger.charge("UnionRepresentation", representation.words())

    return solve(representation, k, adapter, settings.seed)
