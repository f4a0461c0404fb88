import json

import pytest

from padicqm.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestKernelCommand:
    def test_free_particle_row(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["kernel", "--system", "free", "--place", "3", "--T", "1",
             "--q0", "0", "--q1", "1"],
        )
        assert code == 0
        payload = json.loads(out)
        row = payload["rows"][0]
        assert row["modulus_sq"] == "1"
        assert row["phase"] == "0"
        assert abs(row["re"] - 1.0) < 1e-12

    def test_const_field_at_zero_equals_free(self, capsys):
        code, out_const, _ = run_cli(
            capsys,
            ["kernel", "--system", "const-field", "--a", "0", "--place", "inf",
             "--T", "1,2", "--q0", "0", "--q1", "1"],
        )
        assert code == 0
        code, out_free, _ = run_cli(
            capsys,
            ["kernel", "--system", "free", "--place", "inf",
             "--T", "1,2", "--q0", "0", "--q1", "1"],
        )
        assert code == 0
        rows_c = json.loads(out_const)["rows"]
        rows_f = json.loads(out_free)["rows"]
        for rc, rf in zip(rows_c, rows_f):
            assert rc["modulus_sq"] == rf["modulus_sq"]
            assert rc["phase"] == rf["phase"]

    def test_malformed_rational_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["kernel", "--system", "free", "--place", "3", "--T", "1/0"])
        assert exc.value.code == 2

    def test_degenerate_interval_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys,
            ["kernel", "--system", "free", "--place", "3", "--T", "0"],
        )
        assert code == 2
        assert "error" in err

    def test_csv_columns(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["kernel", "--system", "desitter", "--lam", "1", "--place", "3,5",
             "--T", "1", "--q0", "0", "--q1", "1", "--format", "csv"],
        )
        assert code == 0
        header = out.splitlines()[0]
        assert header.startswith("place,system,")
        for column in ("modulus_sq", "phase", "re", "im"):
            assert column in header
        assert len(out.splitlines()) == 3

    def test_oscillator_padic(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["kernel", "--system", "osc", "--place", "3",
             "--x0", "1", "--x1", "2", "--gamma0", "0", "--gamma1", "3",
             "--dgamma0", "1", "--dgamma1", "1", "--s0", "1", "--s1", "1",
             "--ds0", "0", "--ds1", "0", "--precision", "20"],
        )
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["sqrt_branch"] == "canonical"
        assert row["modulus_sq"] == "3"

    def test_oscillator_real_is_float_only(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["kernel", "--system", "osc", "--place", "inf",
             "--x0", "1/2", "--x1", "1/3", "--gamma0", "1/10", "--gamma1", "7/10",
             "--dgamma0", "2", "--dgamma1", "2", "--s0", "1", "--s1", "2",
             "--ds0", "1/5", "--ds1", "1/7"],
        )
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["modulus_sq"] == ""
        assert isinstance(row["re"], float)

    def test_oscillator_missing_params(self, capsys):
        code, _, err = run_cli(
            capsys, ["kernel", "--system", "osc", "--place", "3", "--x0", "1"]
        )
        assert code == 2


class TestGaussCommand:
    def test_real_fresnel_row(self, capsys):
        code, out, _ = run_cli(capsys, ["gauss", "--place", "inf", "--a", "1"])
        assert code == 0
        row = json.loads(out)["rows"][0]
        assert row["modulus_sq"] == "1/2"
        assert row["phase"] == "7/8"

    def test_degenerate_exits_2(self, capsys):
        code, _, err = run_cli(capsys, ["gauss", "--place", "3", "--a", "0"])
        assert code == 2


class TestBallIntegralCommand:
    def test_examples(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["ball-integral", "--p", "3", "--alpha", "0", "--beta", "1", "--N", "0"],
        )
        assert code == 0
        assert json.loads(out)["rows"][0]["modulus_sq"] == "1"

        code, out, _ = run_cli(
            capsys,
            ["ball-integral", "--p", "3", "--alpha", "0", "--beta", "1/9", "--N", "0"],
        )
        assert code == 0
        assert json.loads(out)["rows"][0]["modulus_sq"] == "0"

    def test_stabilized_matches_gauss(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["ball-integral", "--p", "3", "--alpha", "1", "--beta", "0", "--N", "2"],
        )
        assert code == 0
        row = json.loads(out)["rows"][0]
        code, out, _ = run_cli(capsys, ["gauss", "--place", "3", "--a", "1"])
        full = json.loads(out)["rows"][0]
        assert (row["modulus_sq"], row["phase"]) == (full["modulus_sq"], full["phase"])

    def test_cap_exit_3(self, capsys, monkeypatch):
        monkeypatch.setenv("PADICQM_COSET_CAP", "10")
        code, _, err = run_cli(
            capsys,
            ["ball-integral", "--p", "3", "--alpha", "1/81", "--beta", "0", "--N", "3"],
        )
        assert code == 3
        assert "resource" in err


class TestVerifyCommand:
    def test_lambda_pass(self, capsys):
        code, out, _ = run_cli(
            capsys, ["verify", "--check", "lambda", "--trials", "50", "--seed", "7"]
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["status"] == "pass"
        assert payload["failures"] == []

    def test_composition_pass(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["verify", "--check", "composition", "--trials", "2", "--seed", "1",
             "--place", "3,inf"],
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_gauss_with_place_restriction(self, capsys):
        code, out, _ = run_cli(
            capsys,
            ["verify", "--check", "gauss", "--trials", "4", "--seed", "2",
             "--place", "3"],
        )
        assert code == 0
        assert json.loads(out)["status"] == "pass"

    def test_determinism(self, capsys):
        argv = ["verify", "--check", "semigroup", "--trials", "5", "--seed", "9"]
        _, out1, _ = run_cli(capsys, argv)
        _, out2, _ = run_cli(capsys, argv)
        assert out1 == out2

    def test_unknown_check_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--check", "bogus"])
        assert exc.value.code == 2

    def test_failures_reported_with_witness_and_exit_1(self, capsys, monkeypatch):
        import padicqm.cli as cli_mod

        def failing_check(seed=0, **kwargs):
            return [{"check": "stub", "witness": "3/4"}]

        monkeypatch.setitem(cli_mod.CHECKS, "lambda", failing_check)
        code, out, _ = run_cli(capsys, ["verify", "--check", "lambda", "--seed", "1"])
        assert code == 1
        payload = json.loads(out)
        assert payload["status"] == "fail"
        assert payload["failures"][0]["witness"] == "3/4"
