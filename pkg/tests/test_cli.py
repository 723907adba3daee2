import json
import math

import pandas as pd
import pytest

from anyon1d.cli import EXIT_INVALID, EXIT_NUMERIC, EXIT_OK, EXIT_PROPERTY_FAILURE, build_config, main, parse_arguments
from anyon1d.models.run_config import Command


def _read_json(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


class TestArguments:
    def test_boundstate_config(self, tmp_path):
        config = build_config(parse_arguments(["boundstate", "--alpha", "0.5", "--asc", "2", "--out", str(tmp_path)]))
        assert config.command is Command.BOUNDSTATE
        assert config.kind.label == "ba(alpha=0.5)"
        assert config.resolved_k_max == 20.0

    def test_ho_accepts_infinite_scattering_length(self):
        config = build_config(parse_arguments(["ho", "--asc", "inf"]))
        assert math.isinf(config.a_sc)
        assert config.resolved_k_max == 100.0

    def test_unknown_suite_is_an_argument_error(self):
        with pytest.raises(SystemExit) as excinfo:
            parse_arguments(["verify", "--suite", "parity"])
        assert excinfo.value.code == 2


class TestBoundstate:
    def test_writes_summary_and_tables(self, tmp_path):
        code = main(["boundstate", "--stats", "ba", "--alpha", "0.5", "--asc", "1", "--out", str(tmp_path)])
        assert code == EXIT_OK

        summary = _read_json(tmp_path / "summary.json")
        assert summary["energy"] == pytest.approx(-0.5)
        assert summary["contact"] == pytest.approx(2.0)
        assert summary["normalization"] == pytest.approx(2.0, abs=1e-8)
        assert summary["extrema"][0]["which"] == "global_max"

        nk = pd.read_csv(tmp_path / "nk.csv")
        assert list(nk.columns) == ["asc_k", "n_over_asc"]
        peak = nk.iloc[(nk["asc_k"] - math.tan(math.pi / 8)).abs().argmin()]
        assert peak["asc_k"] == pytest.approx(math.tan(math.pi / 8), rel=1e-11)
        assert peak["n_over_asc"] == pytest.approx(5.82842712475, rel=1e-10)

        obdm = pd.read_csv(tmp_path / "obdm.csv")
        assert list(obdm.columns) == ["z1", "re_rho", "im_rho"]
        assert len(obdm) == 201

    def test_csv_is_reproducible(self, tmp_path):
        args = ["boundstate", "--stats", "fa", "--alpha", "0.25", "--asc", "1.5"]
        assert main([*args, "--out", str(tmp_path / "a")]) == EXIT_OK
        assert main([*args, "--out", str(tmp_path / "b")]) == EXIT_OK
        for name in ("nk.csv", "obdm.csv", "summary.json"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_json_tables(self, tmp_path):
        code = main(["boundstate", "--asc", "1", "--format", "json", "--out", str(tmp_path)])
        assert code == EXIT_OK
        rows = _read_json(tmp_path / "nk.json")
        assert set(rows[0]) == {"asc_k", "n_over_asc"}
        assert not (tmp_path / "nk.csv").exists()

    @pytest.mark.parametrize("argv", [
        ["boundstate", "--asc", "-1"],
        ["boundstate", "--asc", "inf"],
        ["boundstate", "--stats", "boson", "--alpha", "0.3", "--asc", "1"],
        ["boundstate", "--alpha", "1.5", "--asc", "1"],
        ["ho", "--asc", "1", "--epsilon", "0.5"],
        ["ho"],
        ["ho", "--asc", "1", "--branch", "99"],
    ])
    def test_invalid_requests(self, tmp_path, argv, capsys):
        assert main([*argv, "--out", str(tmp_path)]) == EXIT_INVALID
        assert "anyon1d:" in capsys.readouterr().err
        assert not any(tmp_path.iterdir())


class TestHarmonicTrap:
    def test_noninteracting_pair(self, tmp_path):
        code = main(["ho", "--epsilon", "0.5", "--kmax", "40", "--out", str(tmp_path)])
        assert code == EXIT_OK

        spectrum = _read_json(tmp_path / "spectrum.json")
        assert spectrum["a_sc"] == "inf"
        assert spectrum["branch"] is None
        assert spectrum["energy"] == pytest.approx(1.0)
        assert spectrum["contact"] == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-8)
        assert spectrum["k2_is_ratio"] is True
        assert spectrum["norm_check"] == pytest.approx(2.0, abs=1e-3)

        tails = pd.read_csv(tmp_path / "tails.csv")
        assert list(tails.columns) == [
            "aho_k", "theta", "xi", "upsilon", "theta_analytic", "xi_analytic", "upsilon_analytic",
        ]
        assert tails["aho_k"].min() == pytest.approx(4.0)
        nk = pd.read_csv(tmp_path / "nk.csv")
        assert list(nk.columns) == ["aho_k", "n"]

    def test_scattering_length_resolves_epsilon(self, tmp_path):
        code = main(["ho", "--asc", "inf", "--kmax", "20", "--out", str(tmp_path)])
        assert code == EXIT_OK
        spectrum = _read_json(tmp_path / "spectrum.json")
        assert spectrum["epsilon"] == pytest.approx(0.5)
        assert spectrum["branch"] == 0

    def test_window_too_small(self, tmp_path, capsys):
        code = main(["ho", "--epsilon", "0.5", "--kmax", "20", "--window", "3", "--out", str(tmp_path)])
        assert code == EXIT_NUMERIC
        assert "WindowTooSmall" in capsys.readouterr().err

    def test_tiny_scattering_length_is_a_numeric_failure(self, tmp_path, capsys):
        code = main(["ho", "--asc", "0.03", "--kmax", "20", "--out", str(tmp_path)])
        assert code == EXIT_NUMERIC
        err = capsys.readouterr().err
        assert "anyon1d: NumericFailure" in err
        assert "radial profile" in err


class TestVerify:
    def test_single_suite(self, tmp_path):
        code = main(["verify", "--suite", "exchange", "--out", str(tmp_path)])
        assert code == EXIT_OK
        report = _read_json(tmp_path / "report.json")
        assert report["passed"] is True
        assert report["inject_sign_flip"] is False
        assert [entry["name"] for entry in report["reports"]] == ["exchange"]

    @pytest.mark.slow
    def test_sign_flip_fails_the_mirror_check(self, tmp_path):
        code = main(["verify", "--suite", "chiral_mirror", "--inject-sign-flip", "--out", str(tmp_path)])
        assert code == EXIT_PROPERTY_FAILURE
        report = _read_json(tmp_path / "report.json")
        assert report["passed"] is False
        assert report["reports"][0]["passed"] is False
