import json
import subprocess
import sys
from pathlib import Path

import pytest

from relci.cli import main

WORKED = {
    "bundle": {"rank": 4, "degree": 4, "base_genus": 0, "split": [1, 1, 1, 1]},
    "ci": {"k": [3, 3], "y": [1, 2]},
}


@pytest.fixture
def worked_file(tmp_path):
    path = tmp_path / "worked.json"
    path.write_text(json.dumps(WORKED), encoding="utf-8")
    return str(path)


def run_main(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestInvariantsCommand:
    def test_worked_instance_h2(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "invariants", "-i", worked_file, "-h", "2")
        assert code == 0
        rep = json.loads(out)
        res = rep["result"]
        assert res["h_top"] == "27"
        assert res["fibre_deg"] == "9"
        assert res["rank"] == "10"
        assert res["deg"] == "20"
        assert res["e_cleared"] == "360"
        assert res["alpha"] == "36"
        assert res["kf_top"] == "144"
        assert res["sign"] == "positive"
        assert rep["tool"] == {"name": "relci", "version": "0.1.0"}

    def test_h_defaults_to_one(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "invariants", "-i", worked_file)
        assert code == 0
        assert json.loads(out)["result"]["e_cleared"] == "36"

    def test_no_floats_anywhere(self, capsys, worked_file):
        _, out, _ = run_main(capsys, "invariants", "-i", worked_file, "-h", "3")

        def walk(node):
            assert not isinstance(node, float)
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)

        walk(json.loads(out))

    def test_malformed_ci_exits_2(self, capsys, tmp_path):
        bad = dict(WORKED, ci={"k": [3, 3], "y": [1]})
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad), encoding="utf-8")
        code, _, err = run_main(capsys, "invariants", "-i", str(path))
        assert code == 2
        assert "invalid input" in err

    def test_unreadable_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run_main(capsys, "invariants", "-i", str(tmp_path / "missing.json"))
        assert code == 2

    def test_not_json_exits_2(self, capsys, tmp_path):
        path = tmp_path / "nope.json"
        path.write_text("{", encoding="utf-8")
        code, _, _ = run_main(capsys, "invariants", "-i", str(path))
        assert code == 2

    def test_split_inconsistent_exits_2(self, capsys, tmp_path):
        bad = dict(WORKED, bundle={"rank": 4, "degree": 5, "split": [1, 1, 1, 1]})
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(bad), encoding="utf-8")
        code, _, err = run_main(capsys, "invariants", "-i", str(path))
        assert code == 2
        assert "split" in err


class TestVerdictCommand:
    def test_worked_report(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "verdict", "-i", worked_file)
        assert code == 0
        res = json.loads(out)["result"]
        assert res["small_h"]["conclusion"] == "FPositiveAllSmallH"
        assert res["slope"]["conclusion"] == "SlopeHolds"
        assert res["instability"]["conclusion"] == "NoConclusion"
        assert res["cone"]["class"] == {"p": "9", "q": "-9"}
        # ratio 1 is below the common threshold 2 of the coincident cones
        assert res["cone"]["region"] == "InsideNef"

    def test_unstable_variant(self, capsys, tmp_path):
        inst = dict(WORKED, ci={"k": [3, 3], "y": [5, 5]})
        path = tmp_path / "unstable.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        code, out, _ = run_main(capsys, "verdict", "-i", str(path))
        assert code == 0
        rep = json.loads(out)
        res = rep["result"]
        assert res["instability"]["conclusion"] == "ChowUnstableFibres"
        assert res["instability"]["witnesses"]["unstable_dualizing"] is True
        assert rep["warnings"]  # effectivity violations flagged

    def test_without_hn_reports_bridge_only(self, capsys, tmp_path):
        inst = {"bundle": {"rank": 5, "degree": 7}, "ci": {"k": [2, 3], "y": [1, -2]}}
        path = tmp_path / "nohn.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        code, out, _ = run_main(capsys, "verdict", "-i", str(path))
        assert code == 0
        cone = json.loads(out)["result"]["cone"]
        assert "region" not in cone
        assert cone["bridge_membership"] == "Inside"
        assert "virtual slopes unavailable" in cone["note"]

    def test_round_trip(self, capsys, worked_file):
        _, out, _ = run_main(capsys, "verdict", "-i", worked_file)
        assert json.loads(out)["command"] == "verdict"

    def test_determinism_three_runs(self, worked_file):
        outs = set()
        for _ in range(3):
            proc = subprocess.run(
                [sys.executable, "-m", "relci.cli", "verdict", "-i", worked_file],
                capture_output=True,
            )
            assert proc.returncode == 0
            outs.add(proc.stdout)
        assert len(outs) == 1


class TestConesCommand:
    def test_split_rays_and_svg(self, capsys, tmp_path):
        inst = {
            "bundle": {"rank": 3, "degree": 3, "split": [2, 1, 0]},
            "ci": {"k": [2], "y": [1]},
        }
        path = tmp_path / "split.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        svg = tmp_path / "cones.svg"
        code, out, _ = run_main(
            capsys, "cones", "-i", str(path), "-c", "2", "--svg", str(svg)
        )
        assert code == 0
        res = json.loads(out)["result"]
        got = {c["label"]: c["threshold"] for c in res["cones"]}
        assert got == {"Pseff": "3", "Bridge": "2", "Nef": "1"}
        text = svg.read_text(encoding="utf-8")
        assert 'data-slope="3"' in text and 'data-slope="1"' in text
        assert text.startswith("<svg")

    def test_semistable_coincide(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "cones", "-i", worked_file, "-c", "2")
        assert code == 0
        res = json.loads(out)["result"]
        assert res["coincide"] is True
        assert {c["threshold"] for c in res["cones"]} == {"2"}

    def test_missing_hn_exits_2(self, capsys, tmp_path):
        inst = {"bundle": {"rank": 5, "degree": 7}, "ci": {"k": [2, 3], "y": [1, -2]}}
        path = tmp_path / "nohn.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        code, _, _ = run_main(capsys, "cones", "-i", str(path), "-c", "2")
        assert code == 2

    def test_codim_out_of_range_exits_2(self, capsys, worked_file):
        code, _, _ = run_main(capsys, "cones", "-i", worked_file, "-c", "4")
        assert code == 2


class TestSweepCommand:
    def test_margins_and_stable_data(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "sweep", "-i", worked_file, "--h-max", "4")
        assert code == 0
        res = json.loads(out)["result"]
        cleared = [m["e_cleared"] for m in res["margins"]]
        assert cleared == ["36", "360", "1296", "3024"]
        assert res["stable_poly_coeffs"] == ["-540", "324"]
        assert res["eventual_sign"] == "positive"

    def test_c1_constant_sign_column(self, capsys, tmp_path):
        inst = {"bundle": {"rank": 4, "degree": -3}, "ci": {"k": [3], "y": [2]}}
        path = tmp_path / "c1.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        code, out, _ = run_main(capsys, "sweep", "-i", str(path), "--h-max", "10")
        assert code == 0
        res = json.loads(out)["result"]
        assert {m["sign"] for m in res["margins"]} == {"negative"}
        assert res["eventual_sign"] == "negative"


class TestOracleCommand:
    def test_all_suites_pass(self, capsys, worked_file):
        code, out, _ = run_main(capsys, "oracle", "-i", worked_file, "--h-max", "8")
        assert code == 0
        res = json.loads(out)["result"]
        assert res["status"] == "all 4 oracle suites passed"
        assert res["mismatches"] == []

    def test_requires_split(self, capsys, tmp_path):
        inst = {
            "bundle": {"rank": 4, "degree": 4, "hn": [{"rank": 4, "degree": 4}]},
            "ci": {"k": [3, 3], "y": [1, 2]},
        }
        path = tmp_path / "hn_only.json"
        path.write_text(json.dumps(inst), encoding="utf-8")
        code, _, err = run_main(capsys, "oracle", "-i", str(path))
        assert code == 2
        assert "split" in err


class TestContactCommand:
    def test_report(self, capsys, tmp_path):
        payload = {
            "weights": ["1", "1", "1", "1"],
            "y": {"dim": 1, "deg": 2, "e_f": "4"},
            "z": {"dim": 2, "deg": 3, "e_f": "6"},
        }
        path = tmp_path / "contact.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, out, _ = run_main(capsys, "contact", "-i", str(path))
        assert code == 0
        res = json.loads(out)["result"]
        assert res["y_status"] == "Semistable"
        assert res["intersection"]["deg"] == "6"

    def test_rejects_floats(self, capsys, tmp_path):
        payload = {
            "weights": [1.5, 1, 1, 1],
            "y": {"dim": 1, "deg": 2, "e_f": "4"},
            "z": {"dim": 2, "deg": 3, "e_f": "6"},
        }
        path = tmp_path / "contact.json"
        path.write_text(json.dumps(payload), encoding="utf-8")
        code, _, _ = run_main(capsys, "contact", "-i", str(path))
        assert code == 2


class TestExampleCommand:
    def test_as_written_diagnosis(self, capsys):
        code, out, _ = run_main(
            capsys, "example", "--a", "1", "--r", "4", "--c", "2", "--m", "2",
            "--orientation", "as-written",
        )
        assert code == 0
        verdict = json.loads(out)["result"]["verdict"]
        assert verdict["hypotheses"]["effective"] is False
        assert verdict["conclusion"] == "Undetermined"

    def test_swapped_diagnosis(self, capsys):
        code, out, _ = run_main(
            capsys, "example", "--a", "1", "--r", "4", "--c", "2", "--m", "2",
            "--orientation", "swapped",
        )
        assert code == 0
        verdict = json.loads(out)["result"]["verdict"]
        assert verdict["hypotheses"]["instability_excess"] is False
