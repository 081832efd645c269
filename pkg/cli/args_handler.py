"""Module containing functions for handling command-line arguments supplied by the user."""

from argparse import ArgumentParser, RawDescriptionHelpFormatter
from engine.algorithms import PROBLEMS


_PROBLEM_TAGS = """\
Problem tags:
  fvst - Feedback Vertex Set in Tournaments
  cvd  - Cluster Vertex Deletion
  svd  - Split Vertex Deletion
  tvd  - Threshold Vertex Deletion
  bvd  - Block Vertex Deletion
  pivd - Proper Interval Vertex Deletion
  oct  - Odd Cycle Transversal
  sfvs - Subset Feedback Vertex Set
  mwc  - Multiway Cut

Exit codes: 0 YES / valid, 1 NO / invalid, 2 bad input, 3 analysis failure."""

RUN = "run"
GEN = "gen"
VERIFY = "verify"
COMPRESS = "compress"

parser = ArgumentParser(prog="python3 -m cli",
                        description="Solve parameterized vertex deletion "
                        "problems on turnstile edge streams.",
                        epilog=_PROBLEM_TAGS,
                        formatter_class=RawDescriptionHelpFormatter)

_commands = parser.add_subparsers(dest="command", metavar="command")
_commands.required = True


def _add_problem(sub, required=False):
    sub.add_argument("-p", "--problem", choices=PROBLEMS, required=required,
                     help="Problem to solve (default: the stream's `prob` line)")


def _add_budget(sub):
    sub.add_argument("-k", type=int, default=None,
                     help="Solution size budget (default: the stream's `k` line)")


def _add_seed(sub):
    sub.add_argument("--seed", type=int, default=0,
                     help="Root seed of all randomness (default: 0)")


_run = _commands.add_parser(RUN, help="Run a pipeline on a stream file")
_run.add_argument("stream", help="Path to the stream file")
_add_problem(_run)
_add_budget(_run)
_add_seed(_run)
_run.add_argument("--passes-cap", type=int, default=None,
                  help="Maximum number of passes over the stream")
_run.add_argument("--space-cap-words", type=int, default=None,
                  help="Maximum peak space in words")
_run.add_argument("--t", type=int, default=None,
                  help="Separation parameter of t-flow reconstruction "
                  "(default: 1)")
_run.add_argument("--protect-terminals", action="store_true",
                  help="Forbid deleting terminals (Multiway Cut)")
_run.add_argument("--jobs", type=int, default=None,
                  help="Worker threads for consumer fan-out (default: 1)")
_run.add_argument("--l-max", type=int, default=None,
                  help="Cap on the number of sampled subsets")
_run.add_argument("--sketch-c", type=int, default=None,
                  help="Failure parameter of connectivity sketches "
                  "(default: 3)")
_run.add_argument("--report", default=None,
                  help="Write the JSON report to this path")

_gen = _commands.add_parser(GEN, help="Generate a planted YES instance")
_add_problem(_gen, required=True)
_gen.add_argument("-n", type=int, required=True, help="Number of vertices")
_gen.add_argument("-k", type=int, default=1,
                  help="Size of the planted solution (default: 1)")
_add_seed(_gen)
_gen.add_argument("--noise", type=float, default=0.0,
                  help="Share of edges followed by canceling updates "
                  "(default: 0)")
_gen.add_argument("output", help="Path of the stream file to write")

_verify = _commands.add_parser(VERIFY, help="Check a solution file")
_verify.add_argument("stream", help="Path to the stream file")
_verify.add_argument("solution", help="Path to the solution file")
_add_problem(_verify)
_add_budget(_verify)
_verify.add_argument("--protect-terminals", action="store_true",
                     help="Forbid deleting terminals (Multiway Cut)")

_compress = _commands.add_parser(COMPRESS,
                                 help="Dump the d-Hitting Set instance "
                                 "of a stream without solving it")
_compress.add_argument("stream", help="Path to the stream file")
_add_problem(_compress)
_add_budget(_compress)
_add_seed(_compress)
_compress.add_argument("output", help="Path of the instance dump to write")


def handle_cli_args(argv=None):
    """
    Parse the command line arguments.

    If there is any problem, an error message will be printed
    and the script will exit with a non-zero exit code.

    Arguments:
        argv {list[string]} -- Arguments to parse (default: `sys.argv`).

    Returns:
        Namespace -- Parsed arguments, `command` names the subcommand.

    """
    return parser.parse_args(argv)
