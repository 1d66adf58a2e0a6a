"""
Integration tests for the pw1 command line.
"""

import json
import shutil

import pytest

from cli.main import main, parse_generator, parse_schedule
from config.settings import settings
from core.exceptions import InvalidInputError
from data_io.fixtures import dump_series, dump_space
from data_io.records import SpaceFixture
from eisenstein.lvalues import compute_L0
from eisenstein.series import eisenstein_series
from fourier.series import WeightPair, divide, power, truncate


@pytest.fixture
def workdir(tmp_path, fixtures_dir):
    """A scratch directory holding copies of the shipped fixtures."""
    for name in ("chi_mod7.txt", "table1_newform.txt"):
        shutil.copy(fixtures_dir / name, tmp_path)
    return tmp_path


def last_json_line(text: str) -> dict:
    return json.loads([line for line in text.splitlines() if line.strip()][-1])


class TestUsage:
    """Test exit codes for usage errors."""

    def test_no_command(self, capsys):
        assert main([]) == 2
        assert "usage" in capsys.readouterr().err

    def test_missing_required_option(self):
        assert main(["table1"]) == 2

    @pytest.mark.parametrize("text,half", [("7", (14, 0)), ("5,1", (5, 1)), ("2", (4, 0))])
    def test_generators(self, text, half):
        assert parse_generator(text, 5).half_coords() == half

    def test_bad_generator(self):
        with pytest.raises(InvalidInputError):
            parse_generator("x", 5)


class TestNewformCommands:
    """Test commands reading a newform fixture."""

    def test_table1(self, workdir, capsys):
        assert main(["table1", "--newform", str(workdir / "table1_newform.txt")]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].split() == ["report", "table1"]
        assert any(line.split() == ["2", "4", "-4+4√-3"] for line in out.splitlines())

    def test_check_ramanujan_structured(self, workdir, capsys):
        code = main(
            ["check-ramanujan", "--newform", str(workdir / "table1_newform.txt"), "--norm-bound", "10", "--format", "structured"]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert [e["status"] for e in data["entries"]] == ["skipped", "pass", "pass"]

    def test_cm_test(self, workdir, capsys):
        code = main(["cm-test", "--newform", str(workdir / "table1_newform.txt"), "--prime-bound", "5", "--format", "structured"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert [r["status"] for r in data["results"]] == ["NotCM"]
        assert data["results"][0]["witness"] == "((5+√5)/2)"

    def test_cm_test_level_defaults_to_the_record(self, workdir, capsys):
        """Should give the same report with --level 14 as with the record's own level."""
        args = ["cm-test", "--newform", str(workdir / "table1_newform.txt"), "--prime-bound", "5", "--format", "structured"]
        assert main(args) == 0
        default = json.loads(capsys.readouterr().out)
        assert main(args + ["--level", "14"]) == 0
        assert json.loads(capsys.readouterr().out) == default

    def test_cm_test_bad_level(self, workdir, capsys):
        code = main(["cm-test", "--newform", str(workdir / "table1_newform.txt"), "--prime-bound", "5", "--level", "x"])
        assert code == 1
        assert last_json_line(capsys.readouterr().err)["error"] == "INVALID_INPUT"

    def test_reconstruct(self, workdir, capsys):
        assert main(["reconstruct", "--newform", str(workdir / "table1_newform.txt"), "--bound", "3,3"]) == 0
        assert capsys.readouterr().out.startswith("pw1 series 1\n")

    def test_unknown_label(self, workdir, capsys):
        assert main(["table1", "--newform", str(workdir / "table1_newform.txt"), "--label", "nope"]) == 1
        assert last_json_line(capsys.readouterr().err)["error"] == "INVALID_INPUT"

    def test_missing_file(self, tmp_path, capsys):
        """Should exit 1 with a JSON error on stderr and nothing on stdout."""
        assert main(["table1", "--newform", str(tmp_path / "absent.txt")]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        error = last_json_line(captured.err)
        assert error["error"] == "PARSE_ERROR"
        assert error["context"]["line"] == "0"

    def test_file_that_is_not_utf8(self, tmp_path, capsys):
        """Should exit 1 with a located parse error on undecodable bytes."""
        bad = tmp_path / "bad.txt"
        bad.write_bytes(b"\xff\xfe")
        assert main(["table1", "--newform", str(bad)]) == 1
        error = last_json_line(capsys.readouterr().err)
        assert error["error"] == "PARSE_ERROR"
        assert error["context"]["field"] == "encoding"

    def test_output_file(self, workdir, capsys):
        """Should write the report to --output and keep stdout empty."""
        target = workdir / "table1.json"
        code = main(
            ["table1", "--newform", str(workdir / "table1_newform.txt"), "--format", "structured", "--output", str(target)]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text(encoding="utf-8"))["kind"] == "table1"


class TestEisensteinCommand:
    """Test E_{1,ψ} from the command line."""

    def test_eisenstein_without_check(self, workdir, capsys):
        code = main(["eisenstein", "--char", str(workdir / "chi_mod7.txt"), "--bound", "3,3", "--no-check"])
        assert code == 0
        assert capsys.readouterr().out.startswith("pw1 series 1\n")

    def test_eisenstein_structured(self, workdir, capsys, chi):
        code = main(["eisenstein", "--char", str(workdir / "chi_mod7.txt"), "--bound", "3,3", "--format", "structured"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "eisenstein"
        assert data["l_value"] == str(compute_L0(chi, check=False).value)
        assert data["root_number"] is not None


class TestSearchCommands:
    """Test search and verify on fixture files written to a scratch directory."""

    def test_search(self, workdir, capsys, eisenstein_product_space):
        (workdir / "space7.txt").write_text(dump_space(eisenstein_product_space), encoding="utf-8")
        code = main(
            [
                "search",
                "--level", "7",
                "--char", str(workdir / "chi_mod7.txt"),
                "--weight", "1,1",
                "--bounds", "3,3;4,4",
                "--fixtures", str(workdir),
                "--format", "structured",
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert (data["dim_V"], data["dim_V2"], data["cm_bound"], data["candidates"]) == (1, 1, 0, 1)
        assert [d["cm_bound"] for d in data["diagnostics"]] == [1, 0]
        assert data["hecke_primes"] == ["(2)"]
        assert data["eigen"]["prime"] == "(2)"
        assert len(data["eigen"]["eigenvalues"]) == 1

    def test_search_uses_configured_schedule(self, workdir, capsys, monkeypatch, eisenstein_product_space):
        """Should take the schedule from PW1_BOUND_SCHEDULE when --bounds is omitted."""
        monkeypatch.setattr(settings, "BOUND_SCHEDULE", "3,3; 4,4")
        (workdir / "space7.txt").write_text(dump_space(eisenstein_product_space), encoding="utf-8")
        code = main(
            [
                "search",
                "--level", "7",
                "--char", str(workdir / "chi_mod7.txt"),
                "--weight", "1,1",
                "--fixtures", str(workdir),
                "--format", "structured",
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert [d["cm_bound"] for d in data["diagnostics"]] == [1, 0]

    @pytest.mark.parametrize("text,count", [("3,3;4,4", 2), (" bn:4 ; ", 1), (None, 3)])
    def test_parse_schedule(self, text, count):
        """Should split --bounds, or fall back to the default schedule."""
        assert len(parse_schedule(text, 5)) == count

    def test_search_without_fixture(self, workdir, capsys):
        code = main(["search", "--level", "7", "--char", str(workdir / "chi_mod7.txt"), "--weight", "1,1", "--fixtures", str(workdir)])
        assert code == 1
        assert last_json_line(capsys.readouterr().err)["context"]["invariant"] == "space-fixture"

    def test_verify(self, workdir, capsys, mocker, chi, chi_cubed, level7, q_sqrt_m3, box):
        """Should certify E_{1,χ} against the auxiliary form E_{1,χ}³ / E_{1,χ³}."""
        mocker.patch("search.certify._aux_spot_check")
        source = eisenstein_series(chi, box(6), lvalue=compute_L0(chi, check=False))
        cube = power(source, 3)
        quotient = divide(cube, eisenstein_series(chi_cubed, box(6), q_sqrt_m3))

        def space(series, weight):
            return SpaceFixture(
                d=5, level=level7, weight=weight, coeff_field=q_sqrt_m3, provenance="synthetic", basis=(series,), dimension=1
            )

        (workdir / "f.txt").write_text(dump_series(truncate(source, box(3)), "E_1,chi"), encoding="utf-8")
        (workdir / "high.txt").write_text(dump_space(space(cube, WeightPair(3, 3))), encoding="utf-8")
        (workdir / "aux.txt").write_text(dump_space(space(quotient, WeightPair(2, 2))), encoding="utf-8")
        code = main(
            [
                "verify",
                "--candidate", str(workdir / "f.txt"),
                "--power", "3",
                "--high-space", str(workdir / "high.txt"),
                "--aux-space", str(workdir / "aux.txt"),
                "--hecke-prime", "2",
                "--format", "structured",
            ]
        )
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "Certified"
        assert data["power"] == 3
