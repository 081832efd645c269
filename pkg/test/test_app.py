"""Module containing end-to-end tests of the CLI subcommands."""

from json import loads as json_loads
from pytest import raises, mark
from cli.app import main
from engine.algorithms import PROBLEMS
from engine.hitting.instance import HittingSetInstance
from engine.preprocessing.stream_parser import read_stream_file

P3 = "n 3\nk 1\nprob cvd\nmode turn\n+ 0 1\n+ 1 2\n"
P4 = "n 4\nprob cvd\n+ 0 1\n+ 1 2\n+ 2 3\n"
C4 = "n 4\nprob oct\n+ 0 1\n+ 1 2\n+ 2 3\n+ 3 0\n"
C5 = "n 5\nk 1\nprob oct\n+ 0 1\n+ 1 2\n+ 2 3\n+ 3 4\n+ 4 0\n"
EDGE_TERMINALS = "n 2\nk 0\nprob mwc\nterminals 0 1\n+ 0 1\n"


def _file(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _exit_code(argv):
    with raises(SystemExit) as ex:
        main(argv)

    return ex.value.code


def test_run_yes(tmp_path, capsys):
    """Cluster deletion on P3 removes a single vertex."""
    stream = _file(tmp_path, "p3.stream", P3)

    assert _exit_code(["run", "--problem", "cvd", "-k", "1", "--seed", "7",
                       stream]) == 0

    out = capsys.readouterr().out
    assert "decision=YES\n" in out
    assert len([line for line in out.splitlines()
                if line.startswith("solution=")][0].split(",")) == 1
    assert "seed=7\n" in out


def test_run_budget_from_header(tmp_path, capsys):
    """Problem and budget default to the header lines."""
    assert _exit_code(["run", _file(tmp_path, "p3.stream", P3)]) == 0
    assert "k=1\n" in capsys.readouterr().out


def test_run_bipartite(tmp_path, capsys):
    assert _exit_code(["run", "-k", "0", _file(tmp_path, "c4.stream", C4)]) \
        == 0
    assert "solution=\n" in capsys.readouterr().out


def test_run_no(tmp_path, capsys):
    """Adjacent terminals cannot be separated without deletions."""
    stream = _file(tmp_path, "mwc.stream", EDGE_TERMINALS)

    assert _exit_code(["run", "--problem", "mwc", "-k", "0", stream]) == 1
    assert "decision=NO\n" in capsys.readouterr().out


def test_report_file(tmp_path):
    stream = _file(tmp_path, "p3.stream", P3)
    report = str(tmp_path / "report.json")

    assert _exit_code(["run", "--report", report, stream]) == 0

    with open(report) as f:
        data = json_loads(f.read())

    assert data["result"]["decision"] == "YES"
    assert data["problem"] == "cvd"
    assert data["passes"] >= 1


def test_reports_are_reproducible(tmp_path, capsys):
    stream = _file(tmp_path, "c5.stream", C5)
    outputs = []

    for _ in range(2):
        assert _exit_code(["run", "-k", "1", "--seed", "5", stream]) == 0
        outputs.append(capsys.readouterr().out)

    assert outputs[0] == outputs[1]


def test_malformed_stream(tmp_path):
    stream = _file(tmp_path, "bad.stream", "n 3\n+ 0 7\n")
    assert _exit_code(["run", "--problem", "cvd", "-k", "1", stream]) == 2


def test_missing_stream(tmp_path):
    assert _exit_code(["run", "--problem", "cvd",
                       str(tmp_path / "missing.stream")]) == 2


def test_missing_problem(tmp_path):
    stream = _file(tmp_path, "plain.stream", "n 2\n+ 0 1\n")
    assert _exit_code(["run", "-k", "0", stream]) == 2


def test_pass_cap(tmp_path):
    stream = _file(tmp_path, "p4.stream", P4)
    assert _exit_code(["run", "-k", "1", "--passes-cap", "0", stream]) == 3


def test_space_cap(tmp_path):
    stream = _file(tmp_path, "c5.stream", C5)
    assert _exit_code(["run", "-k", "1", "--space-cap-words", "1",
                       stream]) == 3


def test_verify(tmp_path, capsys):
    stream = _file(tmp_path, "c5.stream", C5)

    assert _exit_code(["verify", stream,
                       _file(tmp_path, "ok.sol", "3\n")]) == 0
    assert "valid=true\n" in capsys.readouterr().out

    assert _exit_code(["verify", stream,
                       _file(tmp_path, "empty.sol", "# nothing\n")]) == 1
    assert "issue=NotASolution\n" in capsys.readouterr().out

    assert _exit_code(["verify", "-k", "1", stream,
                       _file(tmp_path, "big.sol", "0 2\n")]) == 1
    assert "issue=SizeExceeded\n" in capsys.readouterr().out


def test_verify_malformed_solution(tmp_path):
    stream = _file(tmp_path, "c5.stream", C5)
    assert _exit_code(["verify", stream,
                       _file(tmp_path, "bad.sol", "zero\n")]) == 2


def test_gen(tmp_path):
    output = str(tmp_path / "cvd.stream")

    assert _exit_code(["gen", "--problem", "cvd", "-n", "12", "-k", "2",
                       "--seed", "4", output]) == 0

    stream = read_stream_file(output)
    assert stream.n == 12
    assert stream.header.problem == "cvd"
    assert len(stream.header.plant) == 2


def test_gen_invalid(tmp_path):
    assert _exit_code(["gen", "--problem", "cvd", "-n", "3", "-k", "5",
                       str(tmp_path / "x.stream")]) == 2


def test_compress(tmp_path):
    stream = _file(tmp_path, "p4.stream", P4)
    output = str(tmp_path / "p4.hs")

    assert _exit_code(["compress", "-k", "1", stream, output]) == 0

    with open(output) as f:
        instance = HittingSetInstance.parse(f.read())

    assert instance.k == 1
    assert all(len(s) <= 3 for s in instance.sets)


def test_compress_cut_problem(tmp_path):
    stream = _file(tmp_path, "c5.stream", C5)
    assert _exit_code(["compress", "-k", "1", stream,
                       str(tmp_path / "c5.hs")]) == 2


@mark.slow
def test_round_trip(tmp_path):
    """Planted instances: gen, then run, then verify the answer."""
    for problem in PROBLEMS:
        for seed in range(3):
            stream = str(tmp_path / f"{problem}-{seed}.stream")
            report = str(tmp_path / f"{problem}-{seed}.json")
            solution = str(tmp_path / f"{problem}-{seed}.sol")

            assert _exit_code(["gen", "--problem", problem, "-n", "9",
                               "-k", "1", "--seed", str(seed), stream]) == 0

            plant = read_stream_file(stream).header.plant
            with open(solution, "w") as f:
                f.write(" ".join(str(v) for v in plant) + "\n")

            assert _exit_code(["verify", stream, solution]) == 0

            code = _exit_code(["run", "--seed", str(seed), "--report", report,
                               stream])
            assert code in (0, 1)

            if code == 0:
                with open(report) as f:
                    found = json_loads(f.read())["result"]["solution"]

                with open(solution, "w") as f:
                    f.write(" ".join(str(v) for v in found) + "\n")

                assert _exit_code(["verify", stream, solution]) == 0
