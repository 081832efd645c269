"""Module containing the `Settings` class holding every tunable knob."""

from math import ceil, log


class Settings:
    """
    Run-wide configuration.

    Every pipeline reads its knobs from one `Settings` instance, so a run
    is fully described by the stream file plus this object.

    Attributes:
        seed {int} -- Root seed of all randomness.
        sketch_c {int} -- Failure parameter c of connectivity sketches.
        strict_sketches {bool} -- Raise SketchFailure instead of using
                                  partial forests (default: on).
        sampling_q {int} -- Exponent q of the sampling primitive.
        l_max {int} -- Optional cap on the number of sampled subsets.
        verify_cap {int} -- Cap on exhaustive family verification.
        sampled_checks {int} -- Number of random subsets checked above the cap.
        plan_cap {int} -- Maximum number of recognizers of a hitting plan.
        oracle_cap {int} -- Maximum vertex count of the brute-force oracle.
        enumeration_cap {int} -- Maximum number of candidate sets the
                                 static cut solvers may enumerate.
        bvd_repetitions {float} -- Constant in front of 17^k.
        piv_attempts {int} -- Middle-vertex attempts s (None for default).
        t {int} -- Separation parameter of t-flow reconstruction.
        protect_terminals {bool} -- Forbid deleting terminals (Multiway Cut).
        passes_cap {int} -- Maximum number of physical passes (None: no cap).
        space_cap_words {int} -- Maximum peak space in words (None: no cap).
        jobs {int} -- Worker threads used for consumer fan-out.

    """

    def __init__(self, **overrides):
        """
        Initialize settings with defaults, replacing the given values.

        Arguments:
            overrides -- Attribute values replacing the defaults.

        Raises:
            TypeError -- If an unknown setting name is supplied.

        """
        self.seed = 0
        self.sketch_c = 3
        self.strict_sketches = True
        self.sampling_q = 2
        self.l_max = None
        self.verify_cap = 250_000
        self.sampled_checks = 100_000
        self.plan_cap = 400_000
        self.oracle_cap = 24
        self.enumeration_cap = 3_000_000
        self.bvd_repetitions = 3
        self.piv_attempts = None
        self.t = 1
        self.protect_terminals = False
        self.passes_cap = None
        self.space_cap_words = None
        self.jobs = 1

        for name, value in overrides.items():
            if not hasattr(self, name):
                raise TypeError(f"Unknown setting: \"{name}\"")

            setattr(self, name, value)

    def attempts_for(self, n):
        """
        Number of middle-vertex attempts s for an n-vertex graph.

        Defaults to ceil(log_5(n^2)), at least 1.
        """
        if self.piv_attempts is not None:
            return self.piv_attempts

        if n <= 1:
            return 1

        return max(1, ceil(log(n * n, 5)))

    @staticmethod
    def from_args(args):
        """
        Build settings from parsed command line arguments.

        Arguments:
            args {Namespace} -- Result of `parser.parse_args()`.

        Returns:
            Settings -- Settings with every known option applied.

        """
        names = ["seed", "passes_cap", "space_cap_words", "t",
                 "protect_terminals", "jobs", "l_max", "sketch_c"]

        return Settings(**{name: getattr(args, name) for name in names
                           if getattr(args, name, None) is not None})

    def dict(self):
        """Dictionary of all settings (used by reports)."""
        return dict(vars(self))
