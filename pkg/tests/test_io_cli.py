import json

import pytest

from socode.cli import main
from socode.gf2 import BitMatrix
from socode.io import (
    BUNDLED,
    Config,
    MatrixFormatError,
    bundled_path,
    format_matrix,
    parse_matrix,
    parse_matrix_text,
    read_bounds,
    read_jsonl,
    write_jsonl,
    write_matrix,
)


def test_parse_basic_and_whitespace():
    mf = parse_matrix_text("# demo\n2 3\n 1 0 1 \n\n011\n")
    assert (mf.k, mf.n) == (2, 3)
    assert mf.matrix.to_strings() == ["101", "011"]


def test_parse_errors_name_the_line():
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix_text("2 4\n1010\n101\n")
    assert exc.value.line == 3
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix_text("2 3\n102\n000\n")
    assert exc.value.line == 2
    with pytest.raises(MatrixFormatError, match="header"):
        parse_matrix_text("# only a comment\n")
    with pytest.raises(MatrixFormatError, match="expected 2 rows"):
        parse_matrix_text("2 3\n101\n")
    with pytest.raises(MatrixFormatError):
        parse_matrix_text("x 3\n101\n")


def test_roundtrip(tmp_path):
    m = BitMatrix.from_strings(["1100", "0011"])
    p = tmp_path / "m.mtx"
    write_matrix(p, m, comment="two\nlines")
    assert parse_matrix(p).matrix == m
    assert format_matrix(m).splitlines() == ["2 4", "1100", "0011"]


def test_bundled_all_parse():
    for name in BUNDLED:
        assert parse_matrix(bundled_path(name)).matrix.rows >= 3
    with pytest.raises(KeyError):
        bundled_path("nope")


def test_bounds_csv(tmp_path):
    p = tmp_path / "b.csv"
    p.write_text("n,k,d\n45,5,22\n46,5,22\n45,5,21\n")
    assert read_bounds(p) == {(45, 5): 21, (46, 5): 22}
    p.write_text("n,d\n1,2\n")
    with pytest.raises(ValueError):
        read_bounds(p)
    p.write_text("n,k,d\n1,x,2\n")
    with pytest.raises(ValueError):
        read_bounds(p)


def test_jsonl(tmp_path):
    p = tmp_path / "r.jsonl"
    write_jsonl(p, [{"b": 1, "a": 2}, {"c": 3}])
    assert p.read_text().splitlines()[0] == '{"a": 2, "b": 1}'
    assert read_jsonl(p) == [{"a": 2, "b": 1}, {"c": 3}]


def test_config_validation():
    with pytest.raises(ValueError):
        Config(max_k=0)
    with pytest.raises(ValueError):
        Config(output_format="xml")
    assert Config(max_table_k=7).allow_k7


# ------------------------------------------------------------------ cli


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_check(capsys):
    code, out, _ = run(capsys, "check", "-i", str(bundled_path("g8_3")))
    assert code == 0
    assert "not self-orthogonal" in out and "0110000" in out and "001001" in out
    code, out, _ = run(capsys, "--format", "json", "check", "-i", str(bundled_path("g10_3")))
    data = json.loads(out)
    assert data["self_orthogonal"] is True and data["syndrome"] == "000000"


def test_cli_embed(capsys, tmp_path):
    out_path, rep = tmp_path / "o.mtx", tmp_path / "r.json"
    code, out, _ = run(
        capsys, "embed", "-i", str(bundled_path("g11_4")), "-o", str(out_path), "--report", str(rep), "--no-cache"
    )
    assert code == 0
    assert parse_matrix(out_path).matrix == parse_matrix(bundled_path("g14_4")).matrix
    assert json.loads(rep.read_text())["leader_support"] == [6, 10, 15]
    assert "6 10 15" in out


def test_cli_small_commands(capsys, tmp_path):
    assert run(capsys, "griesmer", "-n", "53", "-k", "5")[1].strip() == "26"
    assert run(capsys, "mindist", "-i", str(bundled_path("so45_5")))[1].strip() == "22"
    assert run(capsys, "quantum", "-i", str(bundled_path("rm16_5")))[1].strip() == "[[16,6,4]]"
    assert run(capsys, "covrad", "-k", "4", "--cache-dir", str(tmp_path))[1].strip() == "5"
    assert (tmp_path / "soct1_k4.bin").exists()
    code, out, _ = run(capsys, "--format", "json", "so-matrix", "-k", "2")
    assert json.loads(out)["rows"] == ["011", "101", "001"]
    assert run(capsys, "rm", "-r", "0", "-m", "2")[1].strip() == "1111"


def test_cli_search(capsys, tmp_path):
    out_path = tmp_path / "s.jsonl"
    code, out, _ = run(
        capsys, "search", "-i", str(bundled_path("g11_4")), "--max-puncture", "1", "-o", str(out_path), "--no-cache"
    )
    assert code == 0
    recs = read_jsonl(out_path)
    assert recs and all(r["d"] % 2 == 0 for r in recs)


def test_cli_json_is_stable(capsys):
    a = run(capsys, "--format", "json", "check", "-i", str(bundled_path("g11_4")))[1]
    b = run(capsys, "check", "-i", str(bundled_path("g11_4")), "--format", "json")[1]
    assert a == b


def test_cli_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.mtx"
    bad.write_text("2 3\n101\n")
    assert run(capsys, "check", "-i", str(bad))[0] == 1
    assert run(capsys, "check", "-i", str(tmp_path / "missing.mtx"))[0] == 1
    assert run(capsys, "covrad", "-k", "7", "--no-cache")[0] == 1
    assert run(capsys, "griesmer", "-n", "3", "-k", "5")[0] == 1
    assert run(capsys, "quantum", "-i", str(bundled_path("g8_3")))[0] == 1
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "--max-k", "0", "griesmer", "-n", "3", "-k", "1")[0] == 2
