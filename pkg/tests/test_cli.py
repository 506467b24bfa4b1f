import subprocess
import sys

import pytest

from gjlinalg.cli import main


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rank_gf2(write, capsys):
    f = write("m.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n")
    assert run(capsys, "rank", "--field", "gf2", "--input", f)[:2] == (0, "3\n")


def test_det_rat(write, capsys):
    f = write("m.txt", "2 2\n1 2\n3 4\n")
    assert run(capsys, "det", "--field", "rat", "--input", f)[:2] == (0, "-2\n")


def test_inverse_singular(write, capsys):
    f = write("s.txt", "2 2\n1 2\n2 4\n")
    assert run(capsys, "inverse", "--field", "rat", "--input", f)[:2] == (1, "SINGULAR\n")


def test_inverse(write, capsys):
    f = write("m.txt", "2 2\n1 2\n3 4\n")
    assert run(capsys, "inverse", "--field", "rat", "--input", f)[:2] == (0, "2 2\n-2 1\n3/2 -1/2\n")


def test_solve_inconsistent_exits_zero(write, capsys):
    a = write("a.txt", "2 1\n1\n1\n")
    b = write("b.txt", "2 1\n1\n2\n")
    assert run(capsys, "solve", "--field", "rat", "--input", a, "--rhs", b)[:2] == (0, "INCONSISTENT\n")


def test_solve_infinite(write, capsys):
    a = write("a.txt", "1 2\n1 1\n")
    b = write("b.txt", "1 1\n2\n")
    code, out, _ = run(capsys, "solve", "--field", "rat", "--input", a, "--rhs", b)
    assert code == 0 and out == "INFINITE\n2 0\nBASIS 1 2\n-1 1\n"


def test_rref_track_and_count_ops(write, capsys):
    f = write("m.txt", "2 2\n0 1\n1 0\n")
    code, out, _ = run(capsys, "rref", "--field", "rat", "--input", f, "--track", "--count-ops")
    assert code == 0
    assert out.startswith("# P\n2 2\n0 1\n1 0\n# rref (rank 2)\n2 2\n1 0\n0 1\n")
    assert "# ops interchanges=1" in out


def test_bases(write, capsys):
    f = write("m.txt", "2 2\n1 2\n2 4\n")
    code, out, _ = run(capsys, "bases", "--field", "rat", "--input", f)
    assert code == 0
    assert out == ("# row space\nBASIS 1 2\n1 2\n# column space\nBASIS 1 2\n1 2\n"
                   "# null space\nBASIS 1 2\n-2 1\n# left null space\nBASIS 1 2\n-2 1\n")


def test_real_output_marked_approximate(write, capsys):
    f = write("m.txt", "2 2\n1 2\n2 4\n")
    code, out, _ = run(capsys, "bases", "--field", "real", "--eps", "1e-9", "--input", f)
    assert code == 0 and out.startswith("# approximate (eps=1e-09)\n")


def test_verify(write, capsys):
    a = write("a.txt", "3 3\n1 2 3\n4 5 6\n7 8 10\n")
    b = write("b.txt", "3 1\n1\n2\n3\n")
    code, out, _ = run(capsys, "verify", "--field", "rat", "--input", a, "--rhs", b)
    assert code == 0
    assert "FAIL" not in out and "PASS solve.residual" in out


def test_output_file(write, capsys, tmp_path):
    f = write("m.txt", "1 1\n5\n")
    o = tmp_path / "out.txt"
    code, out, _ = run(capsys, "det", "--field", "rat", "--input", f, "--output", str(o))
    assert code == 0 and out == "" and o.read_text() == "5\n"


@pytest.mark.parametrize("argv", [
    [],
    ["rank"],
    ["rank", "--field", "gf3", "--input", "x"],
    ["frobnicate", "--field", "rat"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_malformed_input(write, capsys):
    f = write("bad.txt", "2 2\n1 0\n0\n")
    code, out, err = run(capsys, "rank", "--field", "rat", "--input", f)
    assert code == 2 and out == ""
    assert "row 2: expected 2 tokens, got 1" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "rank", "--field", "rat", "--input", str(tmp_path / "nope"))
    assert code == 2 and err


def test_non_square_det(write, capsys):
    f = write("m.txt", "1 2\n1 2\n")
    assert run(capsys, "det", "--field", "rat", "--input", f)[0] == 2


def test_byte_identical_runs(write, capsys):
    f = write("m.txt", "3 3\n1/2 2 3\n4 5 6\n7 8 -9\n")
    outs = {run(capsys, "bases", "--field", "rat", "--input", f)[1] for _ in range(3)}
    assert len(outs) == 1


def test_bench_subcommand(tmp_path, capsys):
    csv = tmp_path / "b.csv"
    code, _, _ = run(capsys, "bench", "--op", "rref", "--field", "gf2", "--sizes", "8,16",
                     "--reps", "2", "--seed", "3", "--csv", str(csv))
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "operation,field,n,median_seconds,op_count"
    assert [l.split(",")[2] for l in lines[1:]] == ["8", "16"]


def test_bench_rejects_bad_sizes(capsys):
    assert main(["bench", "--op", "rref", "--field", "gf2", "--sizes", "16,8"]) == 2


def test_module_entry_point(write):
    f = write("m.txt", "2 2\n1 1\n1 1\n")
    proc = subprocess.run([sys.executable, "-m", "gjlinalg", "rank", "--field", "gf2", "--input", f],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
