"""Module containing the `SolveResult` class returned by every solver and pipeline."""

from json import dumps as json_dumps
from . import YES, NO


class SolveResult:
    """
    Decision of a solver for a single instance.

    Attributes:
        decision {string} -- YES, NO or NO_CONFIDENCE.
        solution {list[int]} -- Sorted deleted vertices (YES only).
        stats {dict} -- Work statistics (branch nodes, candidates, ...).

    """

    def __init__(self, decision, solution=None, stats=None):
        """
        Initialize a new result.

        See class docstring for details on constructor arguments.
        """
        self.decision = decision
        self.solution = sorted(solution) if solution is not None else None
        self.stats = stats or {}

    @staticmethod
    def yes(solution, **stats):
        """YES result with the given solution."""
        return SolveResult(YES, solution, stats)

    @staticmethod
    def no(**stats):
        """NO result."""
        return SolveResult(NO, None, stats)

    @property
    def is_yes(self):
        return self.decision == YES

    def __repr__(self):
        if self.is_yes:
            return f"{self.decision} {self.solution}"

        return self.decision

    def dict(self):
        """Dictionary representation of the result."""
        return {"decision": self.decision,
                "solution": self.solution,
                "stats": self.stats}

    def json(self):
        """JSON representation of the result."""
        return json_dumps(self.dict(), sort_keys=True)
