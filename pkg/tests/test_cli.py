import csv
import json

import pytest

from hyperjac import algebra, verify
from hyperjac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_ss_test_supersingular_example(capsys):
    code, rep, _ = run_json(capsys, "ss-test", "--field", "3", "--poly", "1,0,0,1,0,1")
    assert code == 0
    assert rep["classification"] == "supersingular_not_superspecial"
    assert rep["matrix"] == [["0", "0"], ["1", "0"]]
    assert rep["zeta"]["agreement"] is True
    assert rep["zeta"]["l_poly"] == [1, 0, 0, 0, 9]


def test_ss_test_ordinary_example(capsys):
    code, rep, _ = run_json(capsys, "ss-test", "--field", "3", "--poly", "0,1,0,0,0,1")
    assert code == 0 and rep["classification"] == "not_supersingular"
    assert rep["zeta"]["supersingular"] is False


def test_ss_test_inseparable_names_the_gcd(capsys):
    code, out, err = run(capsys, "ss-test", "--field", "3", "--poly", "1,0,0,0,0,0,1")
    assert code == 2 and out == ""
    assert "inseparable" in err and "gcd(f, f') = x^6 + 1" in err


@pytest.mark.parametrize("argv", [
    ["ss-test", "--field", "6", "--poly", "1,0,0,1,0,1"],
    ["ss-test", "--field", "3", "--poly", "1,zz"],
    ["ss-test", "--field", "3", "--poly", "0,1,0,1"],           # genus 1
    ["cm", "--field", "3", "--poly", "1,1"],
    ["heart"],
    ["heart", "--group", "Q8"],
    ["chartab", "--group", "gl2", "--q", "5"],
    ["lemma-sl2", "--q", "11", "--p", "3"],
    ["scan", "--field", "3", "--template", "*,*"],
    ["zeta", "--field", "3^8", "--poly", "1,2,0,0,0,1"],        # N_2 exceeds the guard
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_cm_with_even_degree_reduction(capsys):
    # (x - 1)(x^5 + x^3 + 2), separable over F_9
    sextic = "1,2,0,2,1,2,1"
    code, rep, _ = run_json(capsys, "cm", "--field", "9", "--poly", sextic, "--alpha", "1")
    assert code == 0 and len(rep["reduced_f"]) == 6 and rep["genus"] == 2
    code, _, err = run(capsys, "cm", "--field", "9", "--poly", sextic, "--alpha", "0")
    assert code == 2 and "not a root" in err


def test_zeta_and_plot(capsys, tmp_path):
    fig = tmp_path / "np.png"
    code, rep, _ = run_json(capsys, "zeta", "--field", "3", "--poly", "0,1,0,1",
                            "--plot", str(fig))
    assert code == 0
    assert rep["counts"] == [4] and rep["l_poly"] == [1, 0, 3]
    assert rep["slopes"] == ["1/2", "1/2"] and rep["supersingular"] is True
    assert fig.stat().st_size > 1000


def test_disc_galois_morse(capsys):
    _, rep, _ = run_json(capsys, "disc", "--field", "3", "--poly", "1,0,0,1,0,1")
    assert rep["discriminant"] == "2" and rep["is_square"] is False
    _, rep, _ = run_json(capsys, "galois-an", "--field", "9", "--poly", "1,0,0,1,0,1")
    assert rep["in_alternating"] is True
    _, rep, _ = run_json(capsys, "galois-an", "--field", "3", "--poly", "1,0,0,1,0,1")
    assert rep["in_alternating"] is False
    _, rep, _ = run_json(capsys, "morse", "--field", "3", "--poly", "0,2,0,0,0,1")
    assert rep["morse"] is True


def test_heart(capsys):
    _, rep, _ = run_json(capsys, "heart", "--group", "A5")
    assert rep["order"] == 60 and rep["two_transitive"] and rep["heart_dim"] == 4
    assert rep["end_dim"] == 1
    _, rep, _ = run_json(capsys, "heart", "--gens", "(0 1 2 3 4)", "--basis")
    assert rep["end_dim"] == 4 and len(rep["end_basis"]) == 4
    _, rep, _ = run_json(capsys, "heart", "--group", "PSL2(5)")
    assert rep["end_dim"] is None and rep["two_transitive"]


def test_chartab_and_lemma(capsys):
    _, rep, _ = run_json(capsys, "chartab", "--group", "sl2", "--q", "5")
    assert sorted(rep["degrees"]) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert len(rep["classes"]) == 9
    _, rep, _ = run_json(capsys, "lemma-sl2", "--q", "5", "--p", "3")
    assert rep["possible"] is True and rep["ramification"] == "cited, not computed"
    _, rep, _ = run_json(capsys, "lemma-sl2", "--q", "7", "--p", "3")
    assert rep["possible"] is False


def test_scan_jsonl(capsys, tmp_path):
    out = tmp_path / "scan.jsonl"
    code, rep, _ = run_json(capsys, "scan", "--field", "9", "--template", "1,0,0,*,0,1",
                            "--out", str(out))
    assert code == 0
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert len(lines) == rep["summary"]["separable"] == 9
    assert {l["classification"] for l in lines} == {"supersingular_not_superspecial"}
    assert rep["summary"]["disagreements"] == 0


def test_scan_ss_iff_over_F3(capsys, tmp_path):
    out = tmp_path / "scan.csv"
    code, rep, _ = run_json(capsys, "scan", "--field", "3", "--template", "*,*,*,*,0,1",
                            "--out", str(out), "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert len(rows) == rep["summary"]["separable"]
    for row in rows:
        a0, a1, a2 = row["f"].split()[:3]
        ss = row["classification"] != "not_supersingular"
        assert ss == (a1 == "0" and a2 == "0")
        assert row["agreement"] == "true"


def test_scan_empty_family(capsys):
    # x^5 + b x^4 over F_3: always a repeated root at 0
    code, rep, _ = run_json(capsys, "scan", "--field", "3", "--template", "0,0,0,0,*,1")
    assert code == 0
    assert rep["summary"]["total"] == 3 and rep["summary"]["separable"] == 0


def test_scan_is_deterministic(capsys, tmp_path):
    texts = []
    for i in range(2):
        out = tmp_path / f"s{i}.jsonl"
        run(capsys, "scan", "--field", "9", "--template", "*,1,0,*,0,1", "--out", str(out))
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_verify_paper_fails_on_discriminant_sign_bug(capsys, monkeypatch):
    real = algebra.discriminant
    monkeypatch.setattr(algebra, "discriminant", lambda f: -real(f))
    rep = verify.report()
    failed = {c["name"] for c in rep["checks"] if not c["passed"]}
    assert "lemma-ssS-ii-discriminant" in failed
    assert rep["all_passed"] is False


def test_verify_paper_exit_code_on_failure(capsys, monkeypatch):
    real = algebra.discriminant
    monkeypatch.setattr(algebra, "discriminant", lambda f: -real(f))
    monkeypatch.setattr(verify, "CHECKS", [c for c in verify.CHECKS
                                           if c[0] == "lemma-ssS-ii-discriminant"])
    code, rep, _ = run_json(capsys, "verify-paper")
    assert code == 1 and rep["failed"] == 1
