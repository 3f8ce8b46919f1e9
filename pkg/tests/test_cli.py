"""CLI smoke tests: argument handling, formats, determinism."""

import json

from torusloop.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_bezout_table_text(capsys):
    code, out = run_cli(capsys, "bezout", "--p", "3", "--pq", "4",
                        "--h", "0", "--v", "0", "--table")
    assert code == 0
    assert "1,7" in out and "21,3" in out


def test_bezout_json(capsys):
    code, out = run_cli(capsys, "bezout", "--p", "4", "--pq", "5", "--h", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["conjugator"] == 29
    assert obj["P"] == 40


def test_series_json_exact_strings(capsys):
    code, out = run_cli(capsys, "series", "--p", "1", "--pq", "2",
                        "--h", "0", "--v", "0", "--form", "u1", "--cutoff", "3")
    assert code == 0
    rows = json.loads(out)
    assert rows[0] == {"coeff": "1/1", "qbarexp": "-1/24", "qexp": "-1/24"}
    assert all("/" in row["coeff"] for row in rows)


def test_series_forms_agree(capsys):
    outs = []
    for form in ("direct", "u1", "bezout"):
        code, out = run_cli(capsys, "series", "--p", "2", "--pq", "3",
                            "--h", "1", "--v", "1", "--form", form,
                            "--cutoff", "4")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_enumerate_csv(capsys):
    code, out = run_cli(capsys, "enumerate", "--kind", "dense", "--p", "2",
                        "--pq", "3", "--M", "2", "--N", "2", "--with-z")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("count,n_beta")
    assert sum(int(line.split(",")[0]) for line in lines[1:-1]) == 16
    assert lines[-1].startswith("# Z = ")


def test_enumerate_deterministic(capsys):
    _, out1 = run_cli(capsys, "enumerate", "--kind", "dilute", "--p", "1",
                      "--pq", "2", "--M", "2", "--N", "2")
    _, out2 = run_cli(capsys, "enumerate", "--kind", "dilute", "--p", "1",
                      "--pq", "2", "--M", "2", "--N", "2")
    assert out1 == out2


def test_transfer_json(capsys):
    code, out = run_cli(capsys, "transfer", "--kind", "dilute", "--p", "2",
                        "--pq", "3", "--M", "2", "--N", "2", "--alpha", "0.6")
    assert code == 0
    obj = json.loads(out)
    assert set(obj) == {"C", "Z"}
    assert set(obj["Z"]) == {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}


def test_identity_subcommand(capsys):
    code, out = run_cli(capsys, "identity", "--check", "master",
                        "--amax", "4", "--lmax", "10")
    assert code == 0
    assert "master" in out and "ok" in out


def test_appendixc_text(capsys):
    code, out = run_cli(capsys, "appendixc", "--p", "1", "--pq", "2",
                        "--h", "1", "--v", "0")
    assert code == 0
    assert "k[2,1/2](q) k[2,1/2](q~)" in out


def test_bad_arguments_exit_2(capsys):
    assert main(["series", "--p", "2", "--pq", "4", "--h", "0", "--v", "0"]) == 2
    assert main(["nonsense"]) == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "table.txt"
    code = main(["bezout", "--p", "3", "--pq", "5", "--h", "0", "--v", "0",
                 "--table", "--out", str(path)])
    assert code == 0
    assert "19" in path.read_text() or "5,5" in path.read_text()
