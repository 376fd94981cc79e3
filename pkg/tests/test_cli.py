import subprocess
import sys

import pytest

from parbridges.cli import main
from parbridges.graph import parse_edge_list, serialize_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_find_path(write, capsys):
    path = write("p3.txt", "3 2\n0 1\n1 2\n")
    assert main(["find", "--input", path, "--machines", "1"]) == 0
    assert capsys.readouterr().out == "0 1 0\n1 2 1\n"


@pytest.mark.parametrize("mode", ["seq", "sim", "par"])
def test_find_triangle_empty(write, capsys, mode):
    path = write("tri.txt", "3 3\n0 1\n1 2\n2 0\n")
    assert main(["find", "--input", path, "--machines", "3", "--mode", mode]) == 0
    assert capsys.readouterr().out == ""


def test_find_check_ok(write, capsys):
    path = write("g.txt", "6 7\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n")
    assert main(["find", "--input", path, "--machines", "4", "--mode", "sim", "--check"]) == 0
    out = capsys.readouterr()
    assert out.out == "2 3 6\n"
    assert "check ok" in out.err


def test_find_check_mismatch(write, capsys, monkeypatch):
    import parbridges.cli as cli
    from parbridges.bridges import BridgeReport

    monkeypatch.setattr(cli, "find_bridges_dfs", lambda g: BridgeReport.from_edges([]))
    path = write("p3.txt", "3 2\n0 1\n1 2\n")
    assert main(["find", "--input", path, "--mode", "seq", "--check"]) == 1
    assert "FAILED" in capsys.readouterr().err


def test_find_gen(capsys):
    assert main(["find", "--gen", "30", "0.1", "4", "--machines", "3", "--mode", "sim", "--check"]) == 0


@pytest.mark.parametrize(
    "args",
    [
        ["find", "--input", "/nonexistent/file"],
        ["find", "--gen", "5", "x", "1"],
        ["find", "--gen", "5", "2.0", "1"],
        ["find", "--gen", "5", "0.5", "1", "--machines", "0"],
        ["bench", "--bench", "M="],
        ["bench", "--bench", "M=1,2;V=10"],
        ["gen", "5", "0.5", "1", "--out", "/nonexistent/dir/x.txt"],
    ],
)
def test_usage_errors(args):
    assert main(args) == 2


def test_parse_error_exit_code(write, capsys):
    path = write("bad.txt", "3 2\n0 1\n0 5\n")
    assert main(["find", "--input", path]) == 2
    assert "line 3" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as err:
        main(["find"])
    assert err.value.code == 2


def test_gen_headers(tmp_path):
    full, empty = tmp_path / "full.txt", tmp_path / "empty.txt"
    assert main(["gen", "5", "1.0", "3", "--out", str(full)]) == 0
    assert main(["gen", "5", "0.0", "3", "--out", str(empty)]) == 0
    assert full.read_text().splitlines()[0] == "5 10"
    assert empty.read_text() == "5 0\n"


def test_gen_deterministic_and_roundtrips(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    main(["gen", "1000", "0.5", "7", "--out", str(a)])
    main(["gen", "1000", "0.5", "7", "--out", str(b)])
    data = a.read_bytes()
    assert data == b.read_bytes()
    assert serialize_edge_list(parse_edge_list(data)).encode() == data


def test_bench_to_file(tmp_path):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--bench", "M=1,2,4;V=100;E=1500", "--mode", "sim", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("n,m,machines,mode,")


def test_module_entry_point(write):
    path = write("p3.txt", "3 2\n0 1\n1 2\n")
    res = subprocess.run([sys.executable, "-m", "parbridges", "find", "--input", path],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "0 1 0\n1 2 1\n"
