import io
import json

import pytest

from superpatalan.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_seq_plain():
    assert run("seq", "--kind", "patalan", "--p", "2", "--count", "5", "--format", "plain") == (0, "1 1 2 5 14\n")


def test_seq_leading_one():
    assert run("seq", "--kind", "patalan", "--p", "3", "--count", "3", "--leading-one") == (0, "1 1 3\n")


def test_seq_pq():
    assert run("seq", "--kind", "pq-patalan", "--p", "3", "--q", "2", "--count", "2") == (0, "2 3\n")


def test_seq_json_uses_strings():
    code, text = run("seq", "--kind", "patalan", "--p", "7", "--count", "40", "--format", "json")
    doc = json.loads(text)
    assert code == 0
    assert doc["kind"] == "patalan" and doc["p"] == 7
    assert all(isinstance(v, str) for v in doc["values"])
    assert int(doc["values"][-1]) > 2**64
    assert "e+" not in text


def test_seq_super_catalan_row_csv():
    code, text = run("seq", "--kind", "super-catalan-row", "--row", "1", "--count", "4", "--format", "csv")
    assert code == 0
    assert text == "index,value\n0,2\n1,2\n2,4\n3,10\n"


def test_seq_bad_params():
    assert run("seq", "--kind", "pq-patalan", "--p", "3", "--q", "3")[0] == 2
    assert run("seq", "--kind", "patalan", "--p", "1")[0] == 2
    assert run("seq", "--bogus")[0] == 2


def test_table_csv():
    assert run("table", "--p", "3", "--q", "1", "--rows", "2", "--cols", "2", "--format", "csv") == (0, "1,3\n6,9\n")


def test_table_plain_and_trivial():
    assert run("table", "--p", "2", "--q", "1", "--rows", "1", "--cols", "4") == (0, "1 2 6 20\n")
    assert run("table", "--rows", "1", "--cols", "1") == (0, "1\n")


def test_table_json_and_limits():
    code, text = run("table", "--p", "5", "--q", "2", "--rows", "2", "--cols", "3", "--format", "json")
    assert json.loads(text) == {"kind": "super-patalan", "p": 5, "q": 2, "values": [["1", "10", "175"], ["15", "75", "875"]]}
    assert run("table", "--rows", "65")[0] == 2
    assert run("table", "--rows", "65", "--cols", "1", "--allow-large")[0] == 0


def test_verify_involution():
    code, text = run("verify", "--suite", "involution", "--p", "3", "--q", "1", "--size", "32")
    assert code == 0
    assert text == "CHECK involution p=3 q=1 size=32 PASS\n"


def test_verify_hadamard_prints_inverse():
    code, text = run("verify", "--suite", "hadamard", "--p", "3", "--q", "1", "--size", "2")
    assert code == 0
    assert "PASS" in text and "[[2,-6],[-3,18]]" in text


def test_verify_all_super_catalan_deterministic():
    first = run("verify", "--suite", "all", "--p", "2", "--q", "1", "--size", "12")
    second = run("verify", "--suite", "all", "--p", "2", "--q", "1", "--size", "12")
    assert first == second
    code, text = first
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 9
    assert all(line.startswith("CHECK ") and " PASS" in line for line in lines)


def test_verify_failure_exit_code(monkeypatch):
    import superpatalan.cli as cli
    from superpatalan.checks import CheckResult

    monkeypatch.setattr(
        cli.sequences, "twisted_transpose_check",
        lambda params, size: CheckResult("transpose", params.p, params.q, size, False, "forced"),
    )
    code, text = run("verify", "--suite", "transpose", "--p", "3")
    assert code == 1
    assert text == "CHECK transpose p=3 q=1 size=12 FAIL forced\n"


def test_verify_usage_errors():
    assert run("verify", "--suite", "nonsense")[0] == 2
    assert run("verify", "--suite", "involution", "--size", "33")[0] == 2
    assert run("verify", "--suite", "involution", "--p", "4", "--q", "4")[0] == 2


def test_bfile_emit(tmp_path):
    target = tmp_path / "b.txt"
    code, _ = run("bfile", "emit", "--kind", "patalan", "--p", "3", "--count", "5", "--file", str(target))
    assert code == 0
    assert target.read_text() == "0 1\n1 3\n2 15\n3 90\n4 594\n"
    assert run("bfile", "emit", "--kind", "patalan", "--p", "2", "--count", "3") == (0, "0 1\n1 1\n2 2\n")


def test_bfile_check_match_and_mismatch(tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("# A025748 style\n1 1\n2 1\n3 3\n4 15\n5 90\n6 594\n")
    code, text = run("bfile", "check", "--file", str(good), "--kind", "patalan", "--p", "3", "--prefix-skip", "1")
    assert code == 0 and text.startswith("MATCH 5")

    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 3\n2 15\n3 91\n4 594\n")
    code, text = run("bfile", "check", "--file", str(bad), "--kind", "patalan", "--p", "3")
    assert code == 1
    assert "index 3" in text and "91" in text and "90" in text


def test_bfile_check_with_anumber(tmp_path):
    ref = tmp_path / "b025748.txt"
    ref.write_text("1 1\n2 1\n3 3\n4 15\n5 90\n")
    assert run("bfile", "check", "--file", str(ref), "--anumber", "A025748")[0] == 0
    assert run("bfile", "check", "--file", str(ref), "--anumber", "A248324")[0] == 2


def test_bfile_check_super_patalan_table(tmp_path):
    code, text = run("table", "--p", "3", "--q", "1", "--rows", "5", "--cols", "5", "--format", "bfile")
    ref = tmp_path / "t.txt"
    ref.write_text(text)
    code, out = run("bfile", "check", "--file", str(ref), "--kind", "super-patalan", "--p", "3")
    assert code == 0, out


def test_bfile_io_errors(tmp_path):
    assert run("bfile", "check", "--file", str(tmp_path / "missing.txt"))[0] == 3
    broken = tmp_path / "broken.txt"
    broken.write_text("0 1\nnot a line\n")
    assert run("bfile", "check", "--file", str(broken))[0] == 3
    assert run("bfile", "emit", "--file", str(tmp_path / "no" / "dir" / "x.txt"))[0] == 3


def test_bfile_usage_errors():
    assert run("bfile", "check")[0] == 2
    assert run("bfile", "frobnicate")[0] == 2
    assert run("bfile", "check", "--file", "x", "--prefix-skip", "-1")[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "superpatalan", "seq", "--p", "3", "--count", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 3 15 90 594\n"
