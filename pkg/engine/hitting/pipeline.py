"""
Module containing the stream phase and the post-processing of the finite-obstruction engine.

One pass feeds every recognizer of the plan. The verdict table then
yields the candidate set Z*, which every minimal solution of size at
most k lies in, and a d-Hitting Set instance over Z* equivalent to the
input instance.
"""

from collections import defaultdict
from fastlog import log
from engine.preprocessing.materialize import materialize
from engine.recognizers.obstructions import spec_for, recognizer_for
from engine.results.solve_result import SolveResult
from engine.solvers.hitting_set import solve_hitting_set
from engine.solvers.oracle import brute_force_oracle
from engine.stream.replay import FanoutConsumer
from engine.utils.randomness import seed_for
from .instance import HittingSetInstance
from .plan import plan as build_plan, mask_vertices


class CandidateSet:
    """
    Candidate vertices contributed per function of F1.

    Attributes:
        per_function {dict[int: set[int]]} -- Z_{f1} per function index.

    """

    def __init__(self, per_function):
        self.per_function = {a: set(z) for a, z in per_function.items()}

    @property
    def union(self):
        """Z*, the union of every Z_{f1}."""
        return set().union(*self.per_function.values())

    def mask(self):
        """Z* as a vertex bitmask."""
        mask = 0

        for v in self.union:
            mask |= 1 << v

        return mask

    def __len__(self):
        return len(self.union)


def stream_phase(plan, seed=0, c=3):
    """
    Pass procedure running one recognizer per distinct subset of the plan.

    Arguments:
        plan {EnginePlan} -- The plan.
        seed {int} -- Seed of randomized recognizers.
        c {int} -- Sketch failure parameter.

    Returns:
        generator -- Procedure returning the verdict table
                     (dict mapping a mask to True when in the class).

    """
    recognizers = [recognizer_for(plan.spec.name, mask_vertices(mask),
                                  seed_for(seed, i), c)
                   for i, mask in enumerate(plan.masks)]

    yield [FanoutConsumer(recognizers)]

    return {mask: bool(r.verdict())
            for mask, r in zip(plan.masks, recognizers)}


def _in_class(verdicts, mask):
    # Masks without a recognizer are smaller than every obstruction.
    return verdicts.get(mask, True)


def compute_candidates(plan, verdicts):
    """
    Collect the vertices contributed to every Z_{f1}.

    A vertex v of G_{f1,J} is contributed if G_{f1,J} is not in the
    class while, for every f2 of F2, removing the color class of v
    under f2 yields a graph in the class.

    Returns:
        CandidateSet -- Z_{f1} per function and their union Z*.

    """
    per_function = defaultdict(set)

    for a, mask in plan.first_level():
        if _in_class(verdicts, mask):
            continue

        for v in mask_vertices(mask):
            if v in per_function[a]:
                continue

            if all(_in_class(verdicts, plan.removal_mask(mask, b, v))
                   for b in range(plan.f2.t)):
                per_function[a].add(v)

    return CandidateSet(per_function)


def build_hitting_instance(plan, verdicts, candidates):
    """
    Build the d-Hitting Set instance over Z*.

    For every G_{f3,J} outside of the class, its intersection with Z*
    is a set to hit. Only inclusion-minimal sets are kept.

    Returns:
        HittingSetInstance -- Instance equivalent to (G, k).

    """
    z_mask = candidates.mask()
    sets = set()

    for mask in plan.third_level():
        if _in_class(verdicts, mask):
            continue

        hit = frozenset(mask_vertices(mask & z_mask))

        if len(hit) <= plan.d:
            sets.add(hit)

    minimal = [s for s in sets if not any(other < s for other in sets)]
    return HittingSetInstance(candidates.union, minimal, plan.k)


def solve(instance):
    """Solve the compressed instance with the branching solver."""
    if instance.trivially_no:
        return SolveResult.no(sets=len(instance.sets))

    return solve_hitting_set(instance.universe, instance.sets, instance.k)


def _whole_graph(problem, n, seed, c):
    """Pass procedure deciding whether G itself is in the class."""
    recognizer = recognizer_for(problem, range(n), seed, c)
    yield [recognizer]
    return bool(recognizer.verdict())


def compression_procedure(problem, n, k, settings, ledger=None):
    """
    Pass procedure building the d-Hitting Set instance of (G, k).

    The families and the mask table are pinned to the ledger, if given.

    Returns:
        generator -- Procedure returning (instance, stats).

    """
    spec = spec_for(problem)
    engine_plan = build_plan(n, k, spec, settings.plan_cap)

    if ledger is not None:
        ledger.charge("EnginePlan", engine_plan.words())

    verdicts = yield from stream_phase(engine_plan, settings.seed,
                                       settings.sketch_c)
    candidates = compute_candidates(engine_plan, verdicts)
    instance = build_hitting_instance(engine_plan, verdicts, candidates)

    stats = engine_plan.dict()
    stats.update(candidates=len(candidates), sets=len(instance.sets),
                 rejected=sum(not v for v in verdicts.values()))
    log.debug(f"Candidates: |Z*|={len(candidates)}, "
              f"{len(instance.sets)} set(s) to hit")

    return instance, stats


def _bypassed(n, k, d):
    return k >= n or d * k > n


def _trivial_instance(result, k):
    """Equivalent instance with no candidates: YES has no sets, NO an empty one."""
    return HittingSetInstance([], [] if result.is_yes else [frozenset()], k)


def compress_instance(runner, problem, k, settings):
    """
    Build the d-Hitting Set instance of the stream without solving it.

    Arguments:
        runner {StreamRunner} -- Runner over the input stream.
        problem {string} -- Problem tag (fvst, cvd, svd or tvd).
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Returns:
        HittingSetInstance -- Equivalent instance.

    """
    n = runner.stream.n
    d = spec_for(problem).d

    if k == 0 or _bypassed(n, k, d):
        return _trivial_instance(
            solve_vertex_deletion(runner, problem, k, settings), k)

    instance, _ = runner.drive(
        compression_procedure(problem, n, k, settings, runner.ledger))
    return instance


def solve_vertex_deletion(runner, problem, k, settings):
    """
    Solve vertex deletion to a class with a finite obstruction set.

    Arguments:
        runner {StreamRunner} -- Runner over the input stream.
        problem {string} -- Problem tag (fvst, cvd, svd or tvd).
        k {int} -- Budget.
        settings {Settings} -- Run configuration.

    Returns:
        SolveResult -- YES with a solution, or NO.

    """
    n = runner.stream.n
    spec = spec_for(problem)

    if k == 0:
        in_class = runner.drive(_whole_graph(problem, n, settings.seed,
                                             settings.sketch_c))
        return SolveResult.yes([]) if in_class else SolveResult.no()

    if _bypassed(n, k, spec.d):
        log.info(f"Budget {k} is too large for n={n}, "
                 f"using the brute-force oracle")
        graph = materialize(runner.stream)
        return brute_force_oracle(problem, graph, k, settings.oracle_cap)

    instance, stats = runner.drive(
        compression_procedure(problem, n, k, settings, runner.ledger))

    if runner.ledger is not None:
        runner.ledger.charge("HittingSetInstance", instance.words())

    result = solve(instance)
    result.stats.update(stats)
    return result
