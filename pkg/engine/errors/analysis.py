"""Module containing the `AnalysisError` exception class and its subclasses."""


class AnalysisError(Exception):
    """
    Exception representing an error while solving an instance.

    Attributes:
        message {string} -- Message explaining what went wrong.
        code {int} -- Exit code used by the CLI.

    """

    code = 3

    def __init__(self, message):
        """
        Initialize an analysis error instance.

        Arguments:
            message {string} -- Message explaining what went wrong.

        """
        super().__init__(message)

        self.message = message


class SketchFailure(AnalysisError):
    """Spanning forest extraction stalled before every component was closed."""


class NoInstance(AnalysisError):
    """A reconstruction proved that the input is not in the target class."""


class ReconstructionFailure(AnalysisError):
    """A randomized reconstruction ran out of attempts without an answer."""


class VerificationFailed(AnalysisError):
    """A solution produced by a pipeline is not valid on the real input."""


class InstanceTooLarge(AnalysisError):
    """A static solver refused an instance above its enumeration cap."""


class BudgetPlanExceedsMemoryCap(AnalysisError):
    """A hitting-engine plan would allocate more recognizers than allowed."""


class NotATournament(AnalysisError):
    """A digraph handed to a tournament recognizer misses or doubles a pair."""
