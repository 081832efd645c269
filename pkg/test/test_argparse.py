"""Module contaning tests for the CLI argument parsing logic."""

from pytest import raises
from argparse import Namespace
from cli.args_handler import parser
from engine.algorithms import CVD, OCT, MWC
from engine.utils.config import Settings


def test_no_args():
    """Check if supplying no arguments throws an exceptions."""
    with raises(SystemExit) as ex:
        parser.parse_args([])

    assert ex.value.code != 0


def test_help_short():
    """Check if `-h` immediately exits successfully."""
    with raises(SystemExit) as ex:
        parser.parse_args(["-h"])

    assert ex.value.code == 0


def test_help_long():
    """Check if `--help` immediately exits successfully."""
    with raises(SystemExit) as ex:
        parser.parse_args(["--help"])

    assert ex.value.code == 0


def test_run_defaults():
    """Check if a bare `run` leaves every knob to the settings defaults."""
    args = parser.parse_args(["run", "p3.stream"])

    assert isinstance(args, Namespace)
    assert vars(args) == {"command": "run", "stream": "p3.stream",
                          "problem": None, "k": None, "seed": 0,
                          "passes_cap": None, "space_cap_words": None,
                          "t": None, "protect_terminals": False,
                          "jobs": None, "l_max": None, "sketch_c": None,
                          "report": None}


def test_run_flags():
    """Check if all `run` flags end up in the settings."""
    args = parser.parse_args(["run", "--problem", MWC, "-k", "2",
                              "--seed", "7", "--passes-cap", "40",
                              "--space-cap-words", "100000", "--t", "2",
                              "--protect-terminals", "--jobs", "4",
                              "--l-max", "50", "--sketch-c", "5",
                              "--report", "out.json", "g.stream"])

    assert args.problem == MWC
    assert args.k == 2
    assert args.report == "out.json"

    settings = Settings.from_args(args)
    assert (settings.seed, settings.passes_cap, settings.space_cap_words,
            settings.t, settings.protect_terminals, settings.jobs,
            settings.l_max, settings.sketch_c) == \
        (7, 40, 100000, 2, True, 4, 50, 5)
    assert settings.sampling_q == 2


def test_unknown_problem():
    """Check if problem tags are validated."""
    with raises(SystemExit) as ex:
        parser.parse_args(["run", "--problem", "vc", "g.stream"])

    assert ex.value.code == 2


def test_gen():
    """Check if generator arguments are parsed correctly."""
    args = parser.parse_args(["gen", "--problem", OCT, "-n", "10",
                              "-k", "1", "--seed", "3", "oct.stream"])

    assert vars(args) == {"command": "gen", "problem": OCT, "n": 10, "k": 1,
                          "seed": 3, "noise": 0.0, "output": "oct.stream"}


def test_gen_needs_problem():
    """Check if `gen` refuses to guess the problem."""
    with raises(SystemExit):
        parser.parse_args(["gen", "-n", "10", "out.stream"])


def test_verify():
    """Check if verification arguments are parsed correctly."""
    args = parser.parse_args(["verify", "g.stream", "g.sol", "-p", CVD])

    assert vars(args) == {"command": "verify", "stream": "g.stream",
                          "solution": "g.sol", "problem": CVD, "k": None,
                          "protect_terminals": False}


def test_compress():
    """Check if compression arguments are parsed correctly."""
    args = parser.parse_args(["compress", "g.stream", "g.hs", "-k", "3"])

    assert (args.command, args.stream, args.output, args.k) == \
        ("compress", "g.stream", "g.hs", 3)
