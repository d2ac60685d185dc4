import io
import json
import subprocess
import sys

import pytest

from skeinpres.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_eval_text_lists_four_terms():
    code, out, _ = run("eval", "t12*t23")
    assert code == 0
    assert out.splitlines() == [
        "(q^-1) * t(1,3)",
        "(1) * t(1)*t(3)",
        "(q) * t(1,2,3,-2)",
        "(1) * t(2)*t(1,2,3)",
    ]


def test_eval_json():
    code, out, _ = run("eval", "t1*t2", "--json")
    assert code == 0
    assert out.strip() == '{"terms":[{"mc":[[1],[2]],"coeff":[[0,1]]}]}'


def test_eval_other_puncture_count():
    code, out, _ = run("eval", "t15*t2", "--n", "5", "--json")
    assert code == 0 and json.loads(out)["terms"]


def test_json_output_is_byte_stable():
    assert run("eval", "t13*t24", "--json")[1] == run("eval", "t13*t24", "--json")[1]


@pytest.mark.parametrize("src", ["t21", "t5", "t", "t12^x", "t12 +"])
def test_parse_errors_exit_1(src):
    code, _, err = run("eval", src)
    assert code == 1 and "error" in err


def test_usage_errors_exit_1():
    assert run()[0] == 1
    assert run("eval")[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("table", "--row", "R99")[0] == 1
    assert run("verify", "no-such-relation")[0] == 1


def test_verify_all():
    code, out, _ = run("verify")
    assert code == 0
    assert out.startswith("all ") and out.strip().endswith("relations verified")


def test_verify_printed_fails_with_exit_2():
    code, out, _ = run("verify", "--printed", "red:t123*t134", "[2,2]-1")
    assert code == 2 and "FAILED red:t123*t134" in out


def test_verify_json_records():
    code, out, _ = run("verify", "[2,2]-1", "central:t1|t12", "--json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and [r["name"] for r in recs] == ["[2,2]-1", "central:t1|t12"]
    assert all(set(r) == {"name", "zero", "residual", "ms"} for r in recs)


def test_nf_checked():
    code, out, _ = run("nf", "t23*t12", "--checked")
    assert code == 0 and "t12*t23" in out


def test_nf_irreducible_exit_3():
    code, out, _ = run("nf", "t12*t34*t34*t234", "--printed")
    assert code == 3 and "irreducible" in out


def test_nf_json():
    code, out, _ = run("nf", "t13*t24", "--json")
    data = json.loads(out)
    assert code == 0 and data["irreducible"] == [] and len(data["result"]) == 12


def test_table_row():
    code, out, _ = run("table", "--row", "r2")
    assert code == 0 and out.startswith("R2 (1, 1, 1, 2) ok")


def test_table_printed_row_fails():
    code, out, _ = run("table", "--row", "R11", "--printed", "--json")
    assert code == 2 and json.loads(out)["ok"] is False


def test_table_parallel_order_fixed():
    code, out, _ = run("table", "--jobs", "2")
    labels = [line.split()[0] for line in out.splitlines() if line.startswith("R")]
    assert code == 0 and labels == [f"R{i}" for i in range(1, 25)]


def test_catalog_dump():
    code, out, _ = run("catalog", "--json")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 135
    assert json.loads(lines[0])["name"] == "[2,2]-1"


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "skeinpres.cli", "eval", "t1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "(1) * t(1)"
