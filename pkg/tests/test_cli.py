"""Tests for the command line interface."""

import json

import pytest

from cuspbound import __version__, cli
from cuspbound.cli import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, _parse_sections, main
from cuspbound.errors import (
    IndeterminateComparisonError,
    NonSummableTailError,
    UnsupportedParameterError,
)


class TestExpand:
    """Test the expand subcommand."""

    def test_psi_to_stdout(self, capsys):
        """Test psi is written as n,coefficient lines."""
        assert main(["expand", "--form", "psi", "--terms", "3"]) == EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert lines == ["-1,1", "0,-24", "1,276", "2,-2048", "3,11202"]

    def test_to_file(self, tmp_path):
        """Test --out writes the same format to a file."""
        out = tmp_path / "delta.csv"
        args = ["expand", "--form", "delta", "--terms", "3", "--out", str(out)]
        assert main(args) == EXIT_PASS
        assert out.read_text().splitlines() == ["1,1", "2,-24", "3,252"]

    def test_row_count(self, capsys):
        """Test one row per exponent from the valuation up to --terms."""
        assert main(["expand", "--form", "psi", "--terms", "50"]) == EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 52
        assert lines[0] == "-1,1"

    def test_unknown_form(self, capsys):
        """Test an unknown form name is a usage error."""
        assert main(["expand", "--form", "theta"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_missing_argument(self):
        """Test argparse errors map to exit code 2."""
        assert main(["expand"]) == EXIT_USAGE

    def test_invalid_environment(self, monkeypatch):
        """Test a malformed THREADS variable is a usage error."""
        monkeypatch.setenv("THREADS", "many")
        assert main(["expand", "--form", "psi", "--terms", "2"]) == EXIT_USAGE


class TestCertify:
    """Test the certify subcommand."""

    def test_delta8(self, tmp_path, coefficient_file):
        """Test the weight 8 newform certifies and the document is written."""
        out = tmp_path / "report.json"
        code = main(
            [
                "certify",
                "--weight", "8",
                "--coeffs", str(coefficient_file(["1"])),
                "--nmax", "30",
                "--json", str(out),
            ]
        )  # fmt: skip
        assert code == EXIT_PASS
        document = json.loads(out.read_text())
        assert document["status"] == "pass"
        assert document["command"] == "certify"
        assert document["tool_version"] == __version__

    def test_level_one(self, capsys, coefficient_file):
        """Test Delta against the level one bound, document on stdout."""
        path = coefficient_file(["1"])
        code = main(
            ["certify", "--weight", "12", "--coeffs", str(path), "--level", "1",
             "--nmax", "30"]
        )  # fmt: skip
        assert code == EXIT_PASS
        assert json.loads(capsys.readouterr().out)["status"] == "pass"

    def test_wrong_length(self, coefficient_file):
        """Test a vector of the wrong length is a usage error."""
        path = coefficient_file(["1"])
        assert main(["certify", "--weight", "12", "--coeffs", str(path)]) == EXIT_USAGE

    def test_odd_weight(self, coefficient_file):
        """Test weights must be even and at least 8."""
        path = coefficient_file(["1"])
        assert main(["certify", "--weight", "7", "--coeffs", str(path)]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        """Test an unreadable coefficient file is a usage error."""
        path = tmp_path / "absent.txt"
        assert main(["certify", "--weight", "8", "--coeffs", str(path)]) == EXIT_USAGE


class TestOtherCommands:
    """Test the remaining subcommands and their argument handling."""

    def test_version(self, capsys):
        """Test --version prints the version and exits cleanly."""
        assert main(["--version"]) == EXIT_PASS
        assert __version__ in capsys.readouterr().out

    def test_basis(self, tmp_path):
        """Test the basis files and checks for weight 8."""
        out_dir = tmp_path / "basis"
        code = main(
            ["basis", "--weight", "8", "--terms", "20", "--out-dir", str(out_dir),
             "--json", str(tmp_path / "basis.json")]
        )  # fmt: skip
        assert code == EXIT_PASS
        assert (out_dir / "F8_1.csv").exists()

    def test_lfunc_residue(self, capsys):
        """Test the residue identity at a single point."""
        assert main(["lfunc", "--residue", "2"]) == EXIT_PASS
        reports = json.loads(capsys.readouterr().out)["reports"]
        assert len(reports) == 1

    def test_bounds_b_of_k_agreement(self, capsys):
        """Test --b-of-k reports the printed B(k) against its recomputation."""
        assert main(["bounds", "--b-of-k", "8"]) == EXIT_FAIL
        captured = capsys.readouterr()
        claims = [r["claim"] for r in json.loads(captured.out)["reports"]]
        assert claims[-1].startswith("recomputed B(8)")
        assert "FAIL: recomputed B(8)" in captured.err
        assert main(["bounds", "--b-of-k", "20"]) == EXIT_PASS

    def test_rigor_needs_an_option(self):
        """Test rigor without --suite or --transform-check is a usage error."""
        assert main(["rigor"]) == EXIT_USAGE

    def test_bad_sections(self):
        """Test unknown sections are a usage error."""
        assert main(["reproduce-paper", "--sections", "2,7"]) == EXIT_USAGE

    def test_parse_sections(self):
        """Test section lists are deduplicated and sorted."""
        assert _parse_sections("5, 3,5") == ["3", "5"]
        with pytest.raises(UnsupportedParameterError):
            _parse_sections(" , ")

    @pytest.mark.parametrize(
        "error", [IndeterminateComparisonError, NonSummableTailError]
    )
    def test_undecided_check_fails(self, monkeypatch, capsys, error):
        """Test an undecidable certified comparison exits as a failed check."""

        def undecided(args, config):
            raise error("comparison stayed ambiguous")

        monkeypatch.setattr(cli, "cmd_expand", undecided)
        assert main(["expand", "--form", "psi", "--terms", "2"]) == EXIT_FAIL
        assert "ambiguous" in capsys.readouterr().err
