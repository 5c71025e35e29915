import io
import json

import pytest

from qg2.cli import main
from qg2.suites import SUITES, Options, UsageError, run_suite


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class TestParam:
    def test_dprime(self):
        assert run(["param", "dprime"]) == (0, "q^12 / (q^6 - 1)\n")

    def test_unknown(self, capsys):
        code, _ = run(["param", "nosuch"])
        assert code == 2
        assert "unknown parameter" in capsys.readouterr().err


class TestReduce:
    def test_central_relation(self):
        expr = "e1*e3*e5 + a*e1*e4 + a*e2*e5 + aprime*e3^2"
        assert run(["reduce", expr, "--alpha", "q", "--beta", "1"]) == (0, "q\n")

    def test_unit(self):
        assert run(["reduce", "1", "--alpha", "1", "--beta", "1"]) == (0, "1\n")

    def test_square(self):
        code, out = run(["reduce", "e3*e3", "--alpha", "1", "--beta", "1"])
        assert code == 0
        assert out.strip().endswith("*e1*e3*e5")
        assert "e2*e5" in out and "e1*e4" in out

    def test_oracle(self):
        code, out = run(["reduce", "e6", "--alpha", "1", "--beta", "1", "--oracle"])
        assert code == 0 and "torus image: t6" in out

    def test_parse_error_position(self, capsys):
        code, _ = run(["reduce", "e1 e2", "--alpha", "1", "--beta", "1"])
        assert code == 2
        assert "position 2" in capsys.readouterr().err

    def test_zero_params(self):
        assert run(["reduce", "e1", "--alpha", "0", "--beta", "0"])[0] == 2


class TestVerify:
    def test_serre(self):
        code, out = run(["verify", "serre"])
        assert code == 0 and "serre: PASS" in out

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as info:
            run(["verify", "nosuch"])
        assert info.value.code == 2

    def test_missing_params(self):
        assert run(["verify", "derivations"])[0] == 2

    def test_bad_flag_value(self):
        with pytest.raises(SystemExit) as info:
            run(["verify", "serre", "--samples", "-3"])
        assert info.value.code == 2

    def test_failing_suite_exit_code(self):
        # the fourth square identity does not hold as printed
        code, out = run(["verify", "quotient", "--alpha", "1", "--beta", "0", "--samples", "3"])
        assert code == 1
        assert "square identity 4" in out

    def test_json_schema(self, tmp_path):
        path = tmp_path / "r.json"
        code, _ = run(["verify", "center", "--json", str(path)])
        assert code == 0
        data = json.loads(path.read_text())
        assert list(data) == ["suite", "params", "seed", "checks", "duration_ms"]
        assert data["suite"] == "center" and data["seed"] == 0
        assert isinstance(data["duration_ms"], int)
        names = [c["name"] for c in data["checks"]]
        assert names == sorted(names)
        for c in data["checks"]:
            assert set(c) == {"name", "status", "detail", "anchor"}
            assert c["status"] in {"pass", "fail", "skipped"}

    def test_json_deterministic(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "pbw-consistency", "--samples", "5", "--seed", "7", "--no-timing"]
        run(args + ["--json", str(a)])
        run(args + ["--json", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_fast_mode_detail(self):
        code, out = run(["verify", "pbw-consistency", "--samples", "5", "--fast"])
        assert code == 0 and "probabilistic pass" in out

    def test_json_stdout(self):
        code, out = run(["verify", "serre", "--json", "-"])
        assert code == 0 and json.loads(out)["suite"] == "serre"


def test_all_suites_known():
    assert set(SUITES) >= {"serre", "pbw-consistency", "center", "dda", "quotient",
                           "basis-growth", "classical-limit", "derivations", "all"}


def test_run_suite_usage_errors():
    with pytest.raises(UsageError):
        run_suite("nosuch")
    with pytest.raises(UsageError):
        run_suite("quotient", Options(alpha="0", beta="0"))
    with pytest.raises(UsageError):
        run_suite("quotient", Options(alpha="q +", beta="1"))


def test_report_pass_rule():
    r = run_suite("serre")
    r.checks[0].status = "skipped"
    assert r.passed
    r.checks[1].status = "fail"
    assert not r.passed
