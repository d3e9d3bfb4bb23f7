import io
import json

import pytest

from matrixcube.cli import (EXIT_DATA, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, main)
from matrixcube.gallery import example_322, three_ellipse_problem
from matrixcube.problemdoc import serialize_problem


@pytest.fixture()
def ellipse_file(tmp_path):
    path = tmp_path / "3ellipse.json"
    path.write_text(serialize_problem(three_ellipse_problem()))
    return str(path)


@pytest.fixture()
def example_file(tmp_path):
    path = tmp_path / "example.json"
    path.write_text(serialize_problem(example_322()))
    return str(path)


class TestBuild:
    def test_prints_coefficients(self, ellipse_file, capsys):
        assert main(["build", ellipse_file]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dim: 8" in out and "mode: exact" in out
        assert "coefficient of x2:" in out

    def test_stdin_dash(self, monkeypatch, capsys):
        monkeypatch.setattr("sys.stdin",
                            io.StringIO(serialize_problem(example_322())))
        assert main(["build", "-"]) == EXIT_OK
        assert "dim: 8" in capsys.readouterr().out

    def test_missing_file_is_data_error(self, capsys):
        assert main(["build", "/no/such/file.json"]) == EXIT_DATA
        assert "data error" in capsys.readouterr().err

    def test_malformed_json_is_data_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        assert main(["build", str(path)]) == EXIT_DATA


class TestCheck:
    def test_member(self, ellipse_file, capsys):
        assert main(["check", ellipse_file, "--point", "0,0", "--d", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "lmi: member" in out and "vertex: member" in out
        assert "oracles agree: True" in out

    def test_non_member_reports_witness(self, ellipse_file, capsys):
        assert main(["check", ellipse_file, "--point", "0,0", "--d", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "non-member" in out and "at vertex" in out

    def test_bad_point_is_usage_error(self, ellipse_file, capsys):
        assert main(["check", ellipse_file, "--point", "zero", "--d", "1"]) == EXIT_USAGE
        assert "usage error" in capsys.readouterr().err


class TestMinD:
    def test_origin(self, ellipse_file, capsys):
        assert main(["min-d", ellipse_file, "--point", "0,0"]) == EXIT_OK
        assert float(capsys.readouterr().out.strip()) == pytest.approx(2.0, abs=1e-5)

    def test_unbounded_is_numeric_error(self, tmp_path, capsys):
        raw = {"schema_version": "1", "n": 1, "m": 1, "N0": 1,
               "A": [[[0]], [[0]]], "B": [[[[0]], [[1]]]]}
        path = tmp_path / "flat.json"
        path.write_text(json.dumps(raw))
        assert main(["min-d", str(path), "--point", "1"]) == EXIT_NUMERIC
        assert "numeric error" in capsys.readouterr().err


class TestOptimize:
    def test_slice_minimization(self, ellipse_file, capsys):
        code = main(["optimize", ellipse_file, "--c", "0,-1", "--d", "2",
                     "--box=-2:2,-2:2"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "status: optimal" in out

    def test_bad_box_is_usage_error(self, ellipse_file, capsys):
        code = main(["optimize", ellipse_file, "--c", "0,-1", "--d", "2",
                     "--box", "2,2"])
        assert code == EXIT_USAGE


class TestDegree:
    def test_example_322(self, example_file, capsys):
        assert main(["degree", example_file]) == EXIT_OK
        assert "degree: 8" in capsys.readouterr().out

    def test_float_entries_are_data_error(self, tmp_path, capsys):
        raw = json.loads(serialize_problem(three_ellipse_problem()))
        raw["A"][0][0][0] = 1.0
        path = tmp_path / "float.json"
        path.write_text(json.dumps(raw))
        assert main(["degree", str(path)]) == EXIT_DATA


class TestRzCheck:
    def test_example_322(self, example_file, capsys):
        code = main(["rz-check", example_file, "--interior", "0,0,5",
                     "--lines", "10"])
        assert code == EXIT_OK
        assert "all_real: True" in capsys.readouterr().out

    def test_non_interior_is_numeric_error(self, ellipse_file, capsys):
        code = main(["rz-check", ellipse_file, "--interior", "0,0,1",
                     "--lines", "1"])
        assert code == EXIT_NUMERIC


class TestTrace:
    def test_csv_output(self, tmp_path, capsys):
        assert main(["gallery", "disk"]) == EXIT_OK
        doc_text = capsys.readouterr().out
        path = tmp_path / "disk.json"
        path.write_text(doc_text)
        code = main(["trace", str(path), "--d", "1", "--center", "0,0",
                     "--rays", "8"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "theta,x1,x2"
        assert len(lines) == 9
        theta, x1, x2 = (float(v) for v in lines[1].split(","))
        assert (x1 * x1 + x2 * x2) == pytest.approx(1.0, abs=1e-5)


class TestGallery:
    def test_known_names(self, capsys):
        for name in ("3ellipse", "2ellipse", "disk", "example-322",
                     "diagonal", "tilde"):
            assert main(["gallery", name]) == EXIT_OK
            doc = json.loads(capsys.readouterr().out)
            assert doc["schema_version"] == "1"

    def test_m_ellipse_options(self, capsys):
        code = main(["gallery", "m-ellipse", "--foci", "0,0;2,0",
                     "--weights", "1,3"])
        assert code == EXIT_OK
        doc = json.loads(capsys.readouterr().out)
        assert doc["m"] == 2 and doc["A"][2][0][0] == 3

    def test_unknown_name_is_data_error(self, capsys):
        assert main(["gallery", "nope"]) == EXIT_DATA

    def test_pipes_into_build(self, monkeypatch, capsys):
        assert main(["gallery", "example-322"]) == EXIT_OK
        doc_text = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(doc_text))
        assert main(["build", "-"]) == EXIT_OK
        assert "dim: 8" in capsys.readouterr().out


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_missing_required_option(self, ellipse_file, capsys):
        assert main(["check", ellipse_file]) == EXIT_USAGE
