"""
Module containing the class adapters plugged into the hereditary engine.

An adapter reconstructs G[F] for a vertex subset F as a pass procedure
and solves the class's deletion problem on an explicit graph.
"""

from fastlog import log
from engine.algorithms import BVD, PIVD
from engine.block_graphs.bvd import solve_bvd
from engine.block_graphs.tblock import reconstruct_tblock
from engine.errors.analysis import NoInstance, ReconstructionFailure
from engine.errors.user_input import InvalidParams
from engine.proper_interval.reconstruction import reconstruct_piv, \
    piv_pass_bound
from engine.proper_interval.static import static_pivd
from .representation import ReconstructionOutcome


class ClassAdapter:
    """
    Base class of the adapters.

    Attributes:
        settings {Settings} -- Run configuration.

    """

    problem = None

    def __init__(self, settings):
        self.settings = settings

    def reconstruct(self, vertices, seed):
        """
        Pass procedure reconstructing G[vertices].

        Returns:
            generator -- Procedure returning a ReconstructionOutcome.

        """
        raise NotImplementedError

    def pass_bound(self, n):
        """Maximum number of passes of `reconstruct` on n vertices."""
        raise NotImplementedError

    def solve_static(self, graph, k, seed):
        """Decide the deletion problem on an explicit graph."""
        raise NotImplementedError


class BlockGraphAdapter(ClassAdapter):
    """Block graphs, reconstructed as 1-block graphs in one pass."""

    problem = BVD

    def __init__(self, settings):
        super().__init__(settings)

        if settings.t != 1:
            raise InvalidParams(f"Block graphs are 1-block graphs, got t={settings.t}")

    def reconstruct(self, vertices, seed):
        reconstruction = yield from reconstruct_tblock(
            vertices, 1, seed, self.settings.sketch_c,
            self.settings.strict_sketches)
        return ReconstructionOutcome(reconstruction.accepted, reconstruction)

    def pass_bound(self, n):
        return 1

    def solve_static(self, graph, k, seed):
        return solve_bvd(graph, k, seed, self.settings.bvd_repetitions)


class ProperIntervalAdapter(ClassAdapter):
    """Proper interval graphs, reconstructed by the annotated recursion."""

    problem = PIVD

    def reconstruct(self, vertices, seed):
        vertices = sorted(vertices)

        # Unfinished sketches are retried, never read partially.
        try:
            model = yield from reconstruct_piv(
                vertices, seed, self.settings.attempts_for(len(vertices)),
                self.settings.sketch_c, strict=False)
        except NoInstance:
            return ReconstructionOutcome(False)
        except ReconstructionFailure as ex:
            log.warning(f"Treating {len(vertices)} vertices as rejected: "
                        f"{ex.message}")
            return ReconstructionOutcome(False)

        return ReconstructionOutcome(True, model)

    def pass_bound(self, n):
        return piv_pass_bound(n, self.settings.attempts_for(n))

    def solve_static(self, graph, k, seed):
        return static_pivd(graph, k)


ADAPTERS = {BVD: BlockGraphAdapter, PIVD: ProperIntervalAdapter}


def adapter_for(problem, settings):
    """
    Adapter of a problem tag.

    Raises:
        InvalidParams -- If the problem has no reconstruction adapter.

    """
    if problem not in ADAPTERS:
        raise InvalidParams(f"No reconstruction adapter for \"{problem}\"")

    return ADAPTERS[problem](settings)
