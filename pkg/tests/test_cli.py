"""Command-line interface tests: flags, formats, exit codes, byte
stability."""

import json

import pytest

from besselseries.cli import EX_DOMAIN, EX_NOCONV, EX_OK, EX_USAGE, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_trivial_value(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--family", "C", "--n", "0",
                               "--b", "1", "--x", "0")
        assert code == EX_OK
        assert "value = 1.0" in out

    def test_divergent_family_a_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--family", "A", "--n", "0",
                               "--b", "1", "--x", "1")
        assert code == EX_DOMAIN
        assert "diverges" in err

    def test_check_against_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--family", "C", "--n", "1",
                               "--b", "1", "--x", "2", "--check", "--format", "json")
        assert code == EX_OK
        payload = json.loads(out)
        assert payload["bessel_value"] == pytest.approx(0.5767248077568734, abs=1e-7)
        assert payload["abs_error"] < 1e-7

    def test_no_convergence_exits_1(self, capsys):
        code, out, err = run_cli(capsys, "eval", "--family", "C", "--n", "0",
                                 "--b", "1", "--x", "5", "--max-terms", "40",
                                 "--tol", "1e-12")
        assert code == EX_NOCONV
        assert "converged = false" in out
        assert "did not converge" in err

    def test_fixed_k(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--family", "b1", "--n", "1",
                               "--x", "1", "--K", "10000", "--check",
                               "--format", "json")
        assert code == EX_OK
        payload = json.loads(out)
        assert payload["terms_used"] == 10000
        assert payload["abs_error"] < 1e-6

    def test_j0var(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--family", "j0var", "--x", "1",
                               "--K", "100000", "--check", "--format", "json")
        assert code == EX_OK
        payload = json.loads(out)
        assert payload["abs_error"] < 1e-4

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--family", "C", "--n", "0",
                               "--b", "0.5", "--x", "1", "--format", "csv")
        assert code == EX_OK
        header, row = out.strip().splitlines()
        assert header.startswith("family,n,b,x,value")
        assert row.startswith("C,0,0.5,1.0,")


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--family", "C", "--x", "1", "--bogus"])
        assert exc.value.code == EX_USAGE

    def test_missing_required(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--family", "C"])
        assert exc.value.code == EX_USAGE

    def test_bad_family_choice(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--family", "Q", "--x", "1"])
        assert exc.value.code == EX_USAGE

    def test_help_exits_zero(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--help"])
        assert exc.value.code == 0
        out = capsys.readouterr().out
        assert "eval" in out and "verify" in out


class TestTable:
    def test_columns_and_rows(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--families", "C",
                               "--n-list", "0,1", "--b-list", "1.0",
                               "--x-list", "1.0", "--K", "2000")
        assert code == EX_OK
        lines = out.strip().splitlines()
        assert lines[0] == ("family,n,b,x,K,value,bessel_value,oracle,"
                            "abs_error,tail_bound,terms_used,converged")
        assert len(lines) == 3
        assert lines[1].startswith("C,0,1.0,1.0,2000,")

    def test_invalid_combinations_skipped(self, capsys):
        code, out, err = run_cli(capsys, "table", "--families", "A,B",
                                 "--n-list", "0", "--b-list", "1.0",
                                 "--x-list", "1.0", "--K", "100")
        assert code == EX_OK
        assert len(out.strip().splitlines()) == 1  # header only
        assert "skipping" in err

    def test_byte_stability(self, capsys):
        args = ["table", "--families", "A,C", "--n-list", "1,2",
                "--b-list", "0.5,1.0", "--x-list", "2.0", "--K", "500"]
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2


class TestBench:
    def test_terms_to_tolerance_table(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--families", "C",
                               "--n-list", "0", "--x-list", "1.0",
                               "--tol-list", "1e-6,1e-8")
        assert code == EX_OK
        lines = out.strip().splitlines()
        assert lines[0] == "family,n,b,x,tol,terms_to_tolerance"
        assert len(lines) == 3
        k6 = int(lines[1].rsplit(",", 1)[1])
        k8 = int(lines[2].rsplit(",", 1)[1])
        assert k6 < k8

    def test_not_applicable_marked(self, capsys):
        code, out, err = run_cli(capsys, "bench", "--families", "C",
                                 "--n-list", "0", "--x-list", "1.0",
                                 "--tol-list", "1e-6", "--b", "0.5")
        assert code == EX_OK
        assert out.strip().splitlines()[1].endswith("NA")


class TestTrig:
    def test_cos(self, capsys):
        code, out, _ = run_cli(capsys, "trig", "--which", "cos", "--x", "1",
                               "--K", "10000")
        assert code == EX_OK
        values = dict(line.split(" = ") for line in out.strip().splitlines())
        assert float(values["abs_error"]) < 1e-4

    def test_sin2_beats_sin1(self, capsys):
        _, out1, _ = run_cli(capsys, "trig", "--which", "sin1", "--x", "5", "--K", "1000")
        _, out2, _ = run_cli(capsys, "trig", "--which", "sin2", "--x", "5", "--K", "1000")
        e1 = float(dict(l.split(" = ") for l in out1.strip().splitlines())["abs_error"])
        e2 = float(dict(l.split(" = ") for l in out2.strip().splitlines())["abs_error"])
        assert e2 < e1


class TestVerifyCommand:
    def test_decay_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "decay")
        assert code == EX_OK
        assert "suite decay: PASS" in out

    def test_identity_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "identity")
        assert code == EX_OK
        assert "suite identity: PASS" in out
