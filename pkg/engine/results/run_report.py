"""Module containing the `RunReport` class describing one CLI run."""

from json import dumps as json_dumps


class RunReport:
    """
    Everything a run produced: decision, solution and resource usage.

    Attributes:
        problem {string} -- Problem tag.
        k {int} -- Parameter.
        result {SolveResult} -- Decision and solution.
        seed {int} -- Run seed.
        passes {int} -- Physical passes over the stream.
        ledger {SpaceLedger} -- Space accounting.
        wall_time {float} -- Seconds spent (JSON report only).

    """

    def __init__(self, problem, k, result, seed, passes, ledger,
                 wall_time=None):
        """
        Initialize a new report.

        See class docstring for details on constructor arguments.
        """
        self.problem = problem
        self.k = k
        self.result = result
        self.seed = seed
        self.passes = passes
        self.ledger = ledger
        self.wall_time = wall_time

    def lines(self):
        """
        Line-oriented `key=value` report.

        Wall time is left out so that equal inputs and seeds
        give byte-identical reports.
        """
        solution = self.result.solution
        ledger = self.ledger.dict()

        return [f"problem={self.problem}",
                f"k={self.k}",
                f"decision={self.result.decision}",
                "solution=" + (",".join(str(v) for v in solution)
                               if solution is not None else ""),
                f"seed={self.seed}",
                f"passes={self.passes}",
                f"peak_words={ledger['peak_total']}"]

    def text(self):
        return "\n".join(self.lines()) + "\n"

    def dict(self):
        return {"problem": self.problem,
                "k": self.k,
                "result": self.result.dict(),
                "seed": self.seed,
                "passes": self.passes,
                "space": self.ledger.dict(),
                "wall_time": self.wall_time}

    def json(self):
        """Machine-readable variant of the report."""
        return json_dumps(self.dict(), sort_keys=True, indent=2)
