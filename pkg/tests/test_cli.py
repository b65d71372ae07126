import io
import subprocess
import sys

import pytest

from cpgen import canon
from cpgen.cli import EXIT_IO, EXIT_OK, EXIT_UNSUPPORTED, EXIT_USAGE, run
from cpgen.graph import decode_graph6, encode_graph6, petersen


def gen_lines(tmp_path, *args):
    out = tmp_path / "out.g6"
    assert run(["gen", *map(str, args), "-o", str(out)]) == EXIT_OK
    return [l for l in out.read_bytes().splitlines() if l]


def test_gen_counts(tmp_path, capsys):
    assert len(gen_lines(tmp_path, 16)) == 123
    assert capsys.readouterr().err.strip() == "16\tall\t123"
    assert len(gen_lines(tmp_path, 16, "--girth", 5)) == 11


def test_gen_orderly_raw_and_dedup(tmp_path, capsys):
    assert len(gen_lines(tmp_path, 16, "--algorithm", "orderly")) == 127
    assert "16\tall,raw\t127" in capsys.readouterr().err
    assert len(gen_lines(tmp_path, 16, "--algorithm", "orderly", "--dedup")) == 123
    err = capsys.readouterr().err.splitlines()
    assert err == ["16\tall\t123", "16\tall,raw\t127"]


def test_gen_split_and_jobs_match(tmp_path):
    whole = gen_lines(tmp_path, 14)
    parts = []
    for res in range(3):
        parts += gen_lines(tmp_path, 14, "--res", res, "--mod", 3)
    assert sorted(parts) == sorted(whole)
    assert gen_lines(tmp_path, 14, "--jobs", 2) == gen_lines(tmp_path, 14, "--mod", 2, "--res", 0) + \
        gen_lines(tmp_path, 14, "--mod", 2, "--res", 1)


def test_gen_snarks(tmp_path, capsys):
    lines = gen_lines(tmp_path, 18, "--snarks-only")
    assert len(lines) == 2
    assert "18\tnonham,snark\t2" in capsys.readouterr().err


def test_gen_count_only(capsys):
    assert run(["gen", "12", "--count-only"]) == EXIT_OK
    cap = capsys.readouterr()
    assert cap.out == "" and cap.err.strip() == "12\tall\t10"


@pytest.mark.parametrize("argv", [["gen", "15"], ["gen", "4"], ["gen", "12", "--res", "3", "--mod", "3"],
                                  ["gen", "12", "--jobs", "0"], ["frobnicate"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == EXIT_USAGE


def test_unwritable_output(tmp_path):
    assert run(["gen", "10", "-o", str(tmp_path / "missing" / "x.g6")]) == EXIT_IO


def test_filter_and_classify(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_bytes(b"".join(encode_graph6(g) + b"\n" for g in [petersen()]))
    plot = tmp_path / "counts.png"
    assert run(["classify", "-i", str(src), "--plot", str(plot)]) == EXIT_OK
    cap = capsys.readouterr()
    rows = cap.out.splitlines()
    assert rows[0].startswith("line\torder") and rows[1] == "1\t10\t1\t-\t5\t0\t0\t1"
    assert cap.err.strip() == "10\tcpg,g=5,nonham,snark,lc>=5\t1"
    assert plot.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_filter_malformed_line(tmp_path, capsys):
    src = tmp_path / "in.g6"
    src.write_bytes(encode_graph6(petersen()) + b"\n??\n")
    assert run(["filter", "-i", str(src), "--enumerate-factors"]) == EXIT_IO
    cap = capsys.readouterr()
    assert cap.out.splitlines()[1] == "1\t10\t1\t6\t-\t-\t-\t-"
    assert "line 2" in cap.err


def test_filter_missing_input(tmp_path):
    assert run(["filter", "-i", str(tmp_path / "nope")]) == EXIT_IO


def test_construct(tmp_path, capsys):
    out = tmp_path / "c.g6"
    assert run(["construct", "26", "-o", str(out)]) == EXIT_OK
    g = decode_graph6(out.read_bytes().strip())
    assert g.n == 26 and g.is_cubic()
    assert run(["construct", "20"]) == EXIT_UNSUPPORTED


def test_oracle_cmd(tmp_path, capsys):
    out = tmp_path / "o.g6"
    assert run(["oracle", "10", "--non-hamiltonian", "-o", str(out)]) == EXIT_OK
    (line,) = out.read_bytes().split()
    assert canon.cert(decode_graph6(line)) == canon.cert(petersen())
    assert run(["oracle", "20"]) == EXIT_USAGE


def test_pipeline_through_console_script():
    gen = subprocess.run([sys.executable, "-m", "cpgen.cli", "gen", "10"], capture_output=True, check=True)
    res = subprocess.run([sys.executable, "-m", "cpgen.cli", "classify"], input=gen.stdout, capture_output=True)
    assert res.returncode == 0
    lines = res.stderr.decode().splitlines()
    assert sum(int(l.split("\t")[2]) for l in lines) == 4
    assert "10\tcpg,g=5,nonham,snark,lc>=5\t1" in lines
