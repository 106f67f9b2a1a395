import json
import subprocess
import sys

import pytest

from reesdual.cli import main

EXAMPLE = {
    "kind": "ideal",
    "d": 2,
    "m": 3,
    "field": "Q",
    "f": "x1^3",
    "psi": [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]],
}

LINEAR_TYPE = {
    "kind": "ideal",
    "d": 2,
    "m": 2,
    "field": "Q",
    "f": "x1^2",
    "psi": [["x1"], ["x2"]],
}

MODULE_RANK_ONE = {
    "kind": "module",
    "d": 2,
    "m": 3,
    "e": 1,
    "field": "Q",
    "f": "x1^3",
    "psi": [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]],
}


@pytest.fixture
def write_file(tmp_path):
    def _write(doc, name="instance.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return _write


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out.strip() else None
    return code, report, captured.err


class TestHypothesesCommand:
    def test_example_passes(self, write_file, capsys):
        code, report, _ = run_cli(
            ["hypotheses", write_file(EXAMPLE)], capsys
        )
        assert code == 0
        assert report["hypotheses"]["overall"] is True

    def test_linear_type_reported_nonzero_exit(self, write_file, capsys):
        code, report, _ = run_cli(
            ["hypotheses", write_file(LINEAR_TYPE)], capsys
        )
        assert code == 1
        details = " ".join(
            c["detail"] for c in report["hypotheses"]["conditions"]
        )
        assert "linear type" in details

    def test_malformed_polynomial_exit_2(self, write_file, capsys):
        bad = dict(EXAMPLE, f="x1^^3")
        code, report, err = run_cli(["hypotheses", write_file(bad)], capsys)
        assert code == 2
        assert report is None
        assert "position" in err

    def test_malformed_json_exit_2(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run_cli(["hypotheses", str(path)], capsys)
        assert code == 2

    def test_bad_shape_exit_2(self, write_file, capsys):
        bad = dict(EXAMPLE, psi=[["x1", "x3"], ["x2", "x1"]])
        code, _, err = run_cli(["hypotheses", write_file(bad)], capsys)
        assert code == 2


class TestIterateCommand:
    def test_mjd_generators_and_fiber(self, write_file, capsys):
        code, report, _ = run_cli(["iterate", write_file(EXAMPLE)], capsys)
        assert code == 0
        gens = [g["poly"] for g in report["generators"]]
        assert len(gens) == 6
        assert gens[2] == "x1^3"
        assert report["fiber"]["degree"] == 6
        assert [g["bidegree"] for g in report["generators"]] == [
            [1, 1],
            [1, 1],
            [3, 0],
            [2, 2],
            [1, 4],
            [0, 6],
        ]

    def test_matrix_method_agrees_when_verified(self, write_file, capsys):
        code, report, _ = run_cli(
            ["iterate", write_file(EXAMPLE), "--method", "matrix", "--verify"],
            capsys,
        )
        assert code == 0
        assert report["oracle"]["equal"] is True
        assert report["oracle"]["saturation_index"] == 3

    def test_euler_mode_flags_units(self, write_file, capsys):
        code, report, _ = run_cli(
            ["iterate", write_file(EXAMPLE), "--mode", "euler"], capsys
        )
        assert code == 0
        flags = report["euler_unit_flags"]
        assert [f["flagged"] for f in flags] == [False, False, False]

    def test_diffop_on_small_characteristic_refused(self, write_file, capsys):
        doc = dict(EXAMPLE, field="Fp:2")
        code, _, err = run_cli(
            ["iterate", write_file(doc), "--method", "diffop"], capsys
        )
        assert code == 1
        assert "characteristic" in err

    def test_hypothesis_failure_exit_1(self, write_file, capsys):
        code, report, _ = run_cli(["iterate", write_file(LINEAR_TYPE)], capsys)
        assert code == 1


class TestVerifyCommand:
    def test_example_verified(self, write_file, capsys):
        code, report, _ = run_cli(["verify", write_file(EXAMPLE)], capsys)
        assert code == 0
        oracle = report["oracle"]
        assert oracle["equal"] is True
        assert oracle["saturation_index"] == 3
        assert oracle["index_equals_m"] is True
        assert oracle["index_bound"] == 3
        assert oracle["index_within_bound"] is True

    def test_injected_corruption_detected(self, write_file, capsys):
        code, report, _ = run_cli(
            ["verify", write_file(EXAMPLE), "--inject"], capsys
        )
        assert code == 4
        assert report["oracle"]["equal"] is False

    def test_byte_identical_reports(self, write_file, capsys):
        path = write_file(EXAMPLE)
        _, _, _ = run_cli(["verify", path], capsys)
        first = main(["verify", path])
        out1 = capsys.readouterr().out
        second = main(["verify", path])
        out2 = capsys.readouterr().out
        assert first == second == 0
        assert out1 == out2


class TestBourbakiCommand:
    def test_rank_one_module(self, write_file, capsys):
        code, report, _ = run_cli(
            ["bourbaki", write_file(MODULE_RANK_ONE), "--seed", "7"], capsys
        )
        assert code == 0
        assert report["cross_check"] is True
        assert report["fiber"]["degree"] == 6
        assert report["reduction"]["y_forms"] == []

    def test_rank_two_module(self, write_file, capsys):
        from reesdual import random_module_instance

        inst = random_module_instance(2, 1, 2, seed=11)
        doc = {
            "kind": "module",
            "d": 2,
            "m": 1,
            "e": 2,
            "field": "Q",
            "f": str(inst.f),
            "psi": inst.psi.to_strings(),
        }
        code, report, _ = run_cli(
            ["bourbaki", write_file(doc), "--seed", "11"], capsys
        )
        assert code == 0
        assert report["cross_check"] is True
        assert len(report["reduction"]["y_forms"]) == 1

    def test_seed_reproducibility(self, write_file, capsys):
        path = write_file(MODULE_RANK_ONE)
        main(["bourbaki", path, "--seed", "3"])
        out1 = capsys.readouterr().out
        main(["bourbaki", path, "--seed", "3"])
        out2 = capsys.readouterr().out
        assert out1 == out2

    def test_requires_module_file(self, write_file, capsys):
        code, _, err = run_cli(
            ["bourbaki", write_file(EXAMPLE), "--seed", "1"], capsys
        )
        assert code == 2


class TestRandomCommand:
    def test_emits_deterministic_instance_file(self, capsys):
        code = main(["random", "--d", "2", "--m", "2", "--seed", "5"])
        out1 = capsys.readouterr().out
        assert code == 0
        doc = json.loads(out1)
        assert doc["kind"] == "ideal"
        assert len(doc["psi"]) == 3
        code = main(["random", "--d", "2", "--m", "2", "--seed", "5"])
        out2 = capsys.readouterr().out
        assert out1 == out2

    def test_generated_file_feeds_pipeline(self, tmp_path, capsys):
        main(["random", "--d", "2", "--m", "1", "--seed", "8"])
        doc = capsys.readouterr().out
        path = tmp_path / "gen.json"
        path.write_text(doc, encoding="utf-8")
        code, report, _ = run_cli(["verify", str(path)], capsys)
        assert code == 0
        assert report["oracle"]["equal"] is True


def test_console_entry_point(tmp_path):
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(EXAMPLE), encoding="utf-8")
    proc = subprocess.run(
        [sys.executable, "-m", "reesdual.cli", "hypotheses", str(path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["hypotheses"]["overall"] is True
    assert "elapsed" in proc.stderr
