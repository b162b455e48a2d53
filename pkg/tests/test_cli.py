import json
import subprocess
import sys

import pytest

from szeta.cli import main

CMD = [sys.executable, "-m", "szeta.cli"]


def run_cli(*args):
    return subprocess.run(CMD + list(args), capture_output=True,
                          text=True)


class TestExitCodes:
    def test_missing_required_flag_is_usage_error(self):
        r = run_cli("extremal", "poisson", "--delta", "1", "--l1")
        assert r.returncode == 2

    def test_unknown_subcommand(self):
        r = run_cli("frobnicate")
        assert r.returncode == 2

    def test_region_violation_exit3_names_inequality(self):
        r = run_cli("bound", "--n", "1", "--alpha", "0.95",
                    "--t", "1e30", "--c", "1")
        assert r.returncode == 3
        assert "log log t" in r.stderr

    def test_missing_zeros_exit4(self):
        r = run_cli("verify", "gw", "--kernel", "poisson",
                    "--delta", "1", "--t", "50",
                    "--zeros", "/no/such/file.txt")
        assert r.returncode == 4

    def test_verify_ok_exit0(self):
        r = run_cli("verify", "rep", "--n", "1", "--alpha", "0.6",
                    "--t", "100")
        assert r.returncode == 0
        out = json.loads(r.stdout)
        assert out["within_band"] is True

    def test_envelope_report_only_exit0(self):
        r = run_cli("verify", "envelope", "--n", "0", "--alpha",
                    "0.75", "--t", "500")
        assert r.returncode == 0
        out = json.loads(r.stdout)
        assert out["region_ok"] is False


class TestDeterminism:
    def test_byte_identical_json(self):
        args = ("extremal", "odd", "--m", "0", "--alpha", "0.6",
                "--delta", "1", "--ft", "0.25", "--l1")
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_float_format(self):
        r = run_cli("extremal", "poisson", "--beta", "0.25",
                    "--delta", "1", "--l1")
        out = json.loads(r.stdout)
        # 15 significant digits, scientific notation
        assert '"l1_majorant": 1.64892339699122e+00' in r.stdout
        assert out["beta"] == 0.25


class TestExtremal:
    def test_poisson_values_match_library(self):
        from szeta.poisson_extremal import PoissonExtremalPair
        r = run_cli("extremal", "poisson", "--beta", "0.25",
                    "--delta", "1", "--l1", "--ft", "0.5",
                    "--eval", "0.3")
        out = json.loads(r.stdout)
        p = PoissonExtremalPair(beta=0.25, delta=1.0)
        assert out["l1_majorant"] == pytest.approx(p.l1_gap("+"))
        assert out["ft_minorant"] == pytest.approx(p.ft_m("-", 0.5))
        assert out["majorant"] == pytest.approx(
            float(p.m_real("+", 0.3)))

    def test_odd_ft_at_zero(self):
        r = run_cli("extremal", "odd", "--m", "0", "--alpha", "0.5",
                    "--delta", "1", "--ft", "0")
        out = json.loads(r.stdout)
        assert out["ft_majorant"] > out["ft_minorant"] > 0


class TestBound:
    def test_json_point(self):
        r = run_cli("bound", "--n", "1", "--alpha", "0.75",
                    "--t", "1e30", "--c", "0.25")
        out = json.loads(r.stdout)
        assert out["lower_main"] < 0 < out["upper_main"]

    def test_sweep_monotone_alpha_column(self):
        r = run_cli("bound", "--n", "1", "--t", "1e30", "--c", "0.1",
                    "--sweep", "alpha:0.6:0.8:0.05")
        lines = r.stdout.strip().splitlines()
        assert lines[0].startswith("n,alpha,t,")
        alphas = [float(l.split(",")[1]) for l in lines[1:]]
        assert alphas == sorted(alphas)
        assert len(alphas) == 5


class TestConfigFile:
    def test_zeros_path_from_config(self, tmp_path, zeros):
        import numpy as np
        p = tmp_path / "z.txt"
        np.savetxt(p, zeros.ordinates[:300])
        cfg = tmp_path / "szeta.cfg"
        cfg.write_text(f"zeros_path={p}\n")
        r = run_cli("verify", "rep", "--n", "0", "--alpha", "0.6",
                    "--t", "70", "--config", str(cfg))
        assert r.returncode == 0

    def test_flag_beats_config(self, tmp_path):
        cfg = tmp_path / "szeta.cfg"
        cfg.write_text("zeros_path=/no/such/file.txt\n")
        # explicit flag pointing at a second missing file still exits 4,
        # proving the flag (not the config default) was used
        r = run_cli("verify", "gw", "--kernel", "poisson",
                    "--delta", "1", "--t", "50", "--config", str(cfg),
                    "--zeros", "/also/missing.txt")
        assert r.returncode == 4
        assert "/also/missing.txt" in r.stderr


def test_main_callable_in_process(capsys):
    rc = main(["extremal", "poisson", "--beta", "0.2", "--delta",
               "1.5", "--l1"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["delta"] == 1.5
