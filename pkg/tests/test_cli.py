import io
import json
import math
import subprocess
import sys

import pytest

from ggindex.cli import CliError, main, parse_n_values
from ggindex.families import construct, ngg_closed, parse_spec
from ggindex.graphs import canonical_form, from_graph6, to_graph6
from ggindex.indices import ngg_index


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def p4_file(tmp_path):
    f = tmp_path / "p4.g6"
    f.write_text("Ch\n")
    return str(f)


def test_index_text(capsys, p4_file):
    code, out, err = run(capsys, "index", p4_file)
    assert code == 0
    assert out.startswith(f"{p4_file}:1  n=4 m=3")
    assert "ngg 1.6547" in out
    assert "gg 2.3401" in out


def test_index_which_subset_and_splits_text(capsys, p4_file):
    code, out, _ = run(capsys, "index", p4_file, "--which", "ngg", "--splits")
    assert code == 0
    assert "gg" not in out.split("ngg", 1)[0]
    assert "edge 0-1: n_u=1 n_v=3" in out
    assert "edge 1-2: n_u=2 n_v=2" in out


def test_index_json(capsys, tmp_path):
    f = tmp_path / "p4.edges"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "index", str(f), "--format", "json", "--splits")
    assert code == 0
    payload = json.loads(out)
    rec = payload["records"][0]
    assert rec["n"] == 4 and rec["m"] == 3
    assert rec["ngg"] == pytest.approx(ngg_index(from_graph6("Ch")), abs=1e-9)
    assert [1, 3] in [s[2:] for s in rec["splits"]]


def test_index_csv(capsys, p4_file):
    code, out, _ = run(capsys, "index", p4_file, "--format", "csv")
    assert code == 0
    header, row = out.splitlines()[:2]
    assert header == "source,line,n,m,gg,ngg,abc"
    assert row.split(",")[2:4] == ["4", "3"]


def test_index_splits_csv_rejected(capsys, p4_file):
    code, _, err = run(capsys, "index", p4_file, "--format", "csv", "--splits")
    assert code == 2
    assert "error:" in err and "csv" in err


def test_index_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("Ch\nDhc\n"))
    code, out, _ = run(capsys, "index", "-")
    assert code == 0
    assert out.count("<stdin>") == 2


def test_index_bad_graph6_names_line(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("Ch\n!!!!\n")
    code, _, err = run(capsys, "index", str(f))
    assert code == 2
    assert "bad.g6:2" in err


def test_index_disconnected_rejected(capsys, tmp_path):
    f = tmp_path / "pair.edges"
    f.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "index", str(f))
    assert code == 2
    assert "connected" in err


def test_family_text(capsys):
    code, out, _ = run(capsys, "family", "CH:9")
    assert code == 0
    assert "spec CH:9" in out and "n 9" in out and "m 10" in out
    assert "ngg-closed 2.2361" in out


def test_family_json_and_out(capsys, tmp_path):
    dest = tmp_path / "cp9.g6"
    code, out, _ = run(capsys, "family", "CP:9", "--format", "json", "--out", str(dest))
    assert code == 0
    payload = json.loads(out)
    assert payload["spec"] == "CP:9"
    # json floats are serialized at 10 significant digits
    assert payload["ngg_closed"] == pytest.approx(
        ngg_closed(parse_spec("CP:9")), abs=1e-8
    )
    line = dest.read_text().strip()
    assert canonical_form(from_graph6(line)) == canonical_form(
        construct(parse_spec("CP:9"))
    )


def test_family_no_closed_form_is_null(capsys):
    code, out, _ = run(capsys, "family", "TH:4,2,2", "--format", "json")
    assert code == 0
    assert json.loads(out)["ngg_closed"] is None


def test_family_bad_spec(capsys):
    code, _, err = run(capsys, "family", "CP:4")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "family", "Z:4")
    assert code == 2 and "known codes" in err


def test_enumerate_text(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 112
    assert lines == sorted(lines)
    assert "count 112" in err


def test_enumerate_trees(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "7", "--trees")
    assert code == 0
    assert len(out.splitlines()) == 11


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--bipartite", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 5
    assert len(payload["graphs"]) == 5
    assert payload["constraints"]["bipartite"] is True


def test_enumerate_out_file(capsys, tmp_path):
    dest = tmp_path / "t8.g6"
    code, out, _ = run(
        capsys, "enumerate", "--n", "8", "--trees", "--format", "json", "--out", str(dest)
    )
    assert code == 0
    assert json.loads(out)["out"] == str(dest)
    assert len(dest.read_text().splitlines()) == 23


def test_enumerate_bound_refusal(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "11")
    assert code == 2
    assert "--max-n" in err


def test_enumerate_env_bound_and_override(capsys, monkeypatch):
    monkeypatch.setenv("GGINDEX_MAX_N", "5")
    code, _, err = run(capsys, "enumerate", "--n", "6")
    assert code == 2 and "n <= 5" in err
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--max-n", "6")
    assert code == 0
    assert len(out.splitlines()) == 112


def test_verify_max_bipartite(capsys):
    code, out, err = run(capsys, "verify", "max-bipartite", "--n", "4..6")
    assert code == 0
    assert out.startswith("claim max-bipartite: pass")
    assert "verify max-bipartite:" in err  # timing goes to stderr only


def test_verify_crossover(capsys):
    code, out, _ = run(capsys, "verify", "crossover", "--n", "5..31")
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln.strip().startswith("n=")]
    assert len(rows) == 14
    equal_rows = [ln for ln in rows if ln.endswith("equal")]
    assert len(equal_rows) == 1 and "n=15" in equal_rows[0]


def test_verify_crossover_needs_odd(capsys):
    code, _, err = run(capsys, "verify", "crossover", "--n", "6")
    assert code == 2 and "odd" in err


def test_verify_asymptote(capsys):
    code, out, _ = run(capsys, "verify", "asymptote", "--n", "100,1000,10000")
    assert code == 0
    assert out.startswith("claim asymptote: pass")


def test_verify_conjecture2_reports_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "conjecture2", "--n", "6")
    assert code == 1
    assert out.startswith("claim conjecture2: FAIL")
    assert "counterexample found" in out


def test_verify_json_deterministic_across_runs_and_workers(capsys):
    args = ["verify", "max-bipartite", "--n", "4..7", "--format", "json"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args, "--workers", "2")
    code3, out3, _ = run(capsys, *args)
    assert code1 == code2 == code3 == 0
    payload1 = json.loads(out1)
    # runtime would differ between runs, so determinism means it stays out of
    # the payload entirely
    assert "runtime" not in out1
    assert out1 == out2 == out3
    assert payload1["passed"] is True


def test_round_trip_family_graph6_index(capsys, tmp_path):
    # construct -> encode -> decode -> recompute, checked against the closed form
    for spec_text in ("P:400", "C:400", "S:400", "CP:399", "CH:399", "KB:20,20"):
        spec = parse_spec(spec_text)
        g = construct(spec)
        back = from_graph6(to_graph6(g))
        assert abs(ngg_index(back) - ngg_closed(spec)) <= 1e-10, spec_text
    for spec_text in ("TH:12,9,4", "AD:41,3"):
        spec = parse_spec(spec_text)
        g = construct(spec)
        back = from_graph6(to_graph6(g))
        assert ngg_index(back) == pytest.approx(ngg_index(g), abs=1e-12)


def test_parse_n_values():
    assert parse_n_values("8") == [8]
    assert parse_n_values("4..7") == [4, 5, 6, 7]
    assert parse_n_values("5,7,9") == [5, 7, 9]
    assert parse_n_values("4..5,9") == [4, 5, 9]
    for bad in ("", "x", "7..4", "1..x"):
        with pytest.raises(CliError):
            parse_n_values(bad)


def test_bad_flags_exit_via_argparse(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "not-a-claim"])
    with pytest.raises(SystemExit):
        main(["verify", "trees", "--epsilon", "0"])
    with pytest.raises(SystemExit):
        main(["enumerate", "--n", "5", "--workers", "0"])
    capsys.readouterr()


def test_module_entry_point(tmp_path):
    f = tmp_path / "c5.g6"
    f.write_text("Dhc\n")
    proc = subprocess.run(
        [sys.executable, "-m", "ggindex", "index", str(f)],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "n=5 m=5" in proc.stdout


def test_console_script_help():
    proc = subprocess.run(
        ["ggindex", "--help"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    for word in ("index", "family", "enumerate", "verify"):
        assert word in proc.stdout
