"""Module containing the CLI's core logic."""

import sys
from fastlog import log
from .args_handler import handle_cli_args, RUN, GEN, VERIFY, COMPRESS
from engine.algorithms.algorithm_runner import run_problem, compress_stream
from engine.algorithms.generators import generate
from engine.algorithms.verification import verify_solution
from engine.errors.analysis import AnalysisError
from engine.errors.stream import StreamError
from engine.errors.user_input import UserInputError
from engine.preprocessing.stream_parser import read_stream_file, \
    dump_stream, parse_solution
from engine.utils.benchmark import time_snap
from engine.utils.config import Settings

EXIT_YES = 0
EXIT_NO = 1


def _write(path, text):
    try:
        with open(path, "w") as f:
            f.write(text)
    except OSError as ex:
        raise UserInputError(f"Unable to write \"{path}\": {ex}")


def _read_text(path):
    try:
        with open(path, "r") as f:
            return f.read()
    except OSError as ex:
        raise UserInputError(f"Unable to read \"{path}\": {ex}")


def _instance(args):
    """
    Read the stream file and resolve the problem and the budget.

    Command line values win over the stream header.

    Returns:
        tuple[Stream, string, int] -- Stream, problem tag and budget.

    """
    stream = read_stream_file(args.stream)
    time_snap("Stream parsed")

    problem = args.problem or stream.header.problem
    k = args.k if args.k is not None else stream.header.k

    if problem is None:
        raise UserInputError("No problem given, use --problem or a "
                             "`prob` line in the stream file")

    return stream, problem, k


def run(args):
    """Solve the instance and print the `key=value` report."""
    stream, problem, k = _instance(args)
    report = run_problem(stream, problem, k, Settings.from_args(args))
    time_snap("Run completed")

    if report.result.is_yes:
        log.success(f"{problem} with k={k}: YES {report.result.solution}")
    else:
        log.info(f"{problem} with k={k}: {report.result.decision}")

    sys.stdout.write(report.text())

    if args.report is not None:
        _write(args.report, report.json())

    return EXIT_YES if report.result.is_yes else EXIT_NO


def gen(args):
    """Write a planted instance."""
    stream = generate(args.problem, args.n, args.k, args.seed, args.noise)
    _write(args.output, dump_stream(stream.header, stream.events))
    log.info(f"Generated {args.problem} instance with plant "
             f"{stream.header.plant}")
    return EXIT_YES


def verify(args):
    """Check a solution file against a stream file."""
    stream, problem, k = _instance(args)
    solution = parse_solution(_read_text(args.solution))
    valid, issue = verify_solution(stream, problem, solution, k,
                                   args.protect_terminals)

    if valid:
        log.success(f"Solution {sorted(set(solution))} is valid")
    else:
        log.warning(f"Solution rejected: {issue}")

    sys.stdout.write(f"valid={str(valid).lower()}\nissue={issue}\n")
    return EXIT_YES if valid else EXIT_NO


def compress(args):
    """Write the d-Hitting Set instance of the stream."""
    stream, problem, k = _instance(args)
    instance = compress_stream(stream, problem, k, Settings.from_args(args))
    time_snap("Compression completed")

    _write(args.output, instance.serialize())
    log.info(f"Hitting set instance: {len(instance.universe)} candidates, "
             f"{len(instance.sets)} sets")
    return EXIT_YES


_COMMANDS = {RUN: run, GEN: gen, VERIFY: verify, COMPRESS: compress}


def main(argv=None):
    """Entry point of the application."""
    try:
        args = handle_cli_args(argv)
        time_snap("Arguments handled")

        code = _COMMANDS[args.command](args)

    except (UserInputError, StreamError, AnalysisError) as ex:
        if ex.message:
            log.error(ex.message)

        sys.exit(ex.code)

    sys.exit(code)
