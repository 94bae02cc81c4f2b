"""CLI tests, run in-process through cli.main."""

import json

import pytest

from isofloer import cli
from isofloer.catalog import munzner_betti_N, validate_family
from isofloer.criteria import STATUSES
from isofloer.homology import profile_to_json


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_profile(tmp_path, name, family):
    path = tmp_path / name
    payload = profile_to_json(munzner_betti_N(family))
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestClassify:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "4", "--m1", "2", "--m2", "2"])
        assert code == 0
        assert "g=4 m1=2 m2=2 n=8: NonDisplaceable" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, ["classify", "--g", "3", "--m1", "2", "--m2", "2", "--format", "json"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "Wide"
        assert report["family"] == {"g": 3, "m1": 2, "m2": 2, "n": 6}
        assert report["intersects_real_form"] is True
        assert report["volume_lower_bound"] == pytest.approx(16.536681, rel=1e-5)

    def test_invalid_family_exits_1(self, capsys):
        code, _, err = run(capsys, ["classify", "--g", "5", "--m1", "1", "--m2", "1"])
        assert code == 1
        assert "error" in err

    def test_verbose_prints_witness_chain(self, capsys):
        code, out, _ = run(
            capsys, ["classify", "--g", "4", "--m1", "2", "--m2", "2", "--verbose"]
        )
        assert code == 0
        assert "Contradiction at slot 4" in out
        assert "page 1:" in out


class TestClassifyAll:
    def test_bound_2_table(self, capsys):
        code, out, _ = run(capsys, ["classify-all", "--bound", "2"])
        assert code == 0
        lines = out.strip().splitlines()
        rows = [line.split() for line in lines[1:-1]]
        assert [(r[0], r[2], r[3], r[4]) for r in rows] == [
            ("1", "1", "1", "Wide"),
            ("2", "1", "1", "Wide"),
            ("3", "1", "1", "Unresolved"),
            ("4", "1", "1", "Unresolved"),
            ("6", "1", "1", "Unresolved"),
        ]
        assert lines[-1] == "unresolved: (3,1,1), (4,1,1), (6,1,1)"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, ["classify-all", "--bound", "4", "--format", "json"])
        assert code == 0
        reports = json.loads(out)
        assert len(reports) > 0
        for report in reports:
            assert set(report) == {
                "family", "status", "justification", "intersects_real_form", "volume_lower_bound",
            }
            assert report["status"] in STATUSES
            assert len(report["justification"]) >= 1

    def test_bound_below_2_exits_1(self, capsys):
        code, _, err = run(capsys, ["classify-all", "--bound", "1"])
        assert code == 1
        assert "bound" in err

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, ["classify-all", "--bound", "10", "--format", "json"])
        _, second, _ = run(capsys, ["classify-all", "--bound", "10", "--format", "json"])
        assert first == second


class TestNarrowCheck:
    def test_contradiction_text(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_22.json", validate_family(4, 2, 2))
        code, out, _ = run(capsys, ["narrow-check", "--profile", path, "--maslov", "4"])
        assert code == 0
        assert "Contradiction at slot 4" in out

    def test_json_envelope(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_22.json", validate_family(4, 2, 2))
        code, out, _ = run(
            capsys, ["narrow-check", "--profile", path, "--maslov", "4", "--format", "json"]
        )
        assert code == 0
        envelope = json.loads(out)
        assert set(envelope) == {"profile", "maslov", "n", "nu", "verdict", "oracle"}
        assert envelope["nu"] == 2            # default floor((8+1)/4)
        assert envelope["verdict"]["kind"] == "Contradiction"
        assert envelope["verdict"]["slot"] == 4
        assert envelope["oracle"] is None

    def test_oracle_flag(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_12.json", validate_family(4, 1, 2))
        code, out, _ = run(
            capsys,
            ["narrow-check", "--profile", path, "--maslov", "3", "--oracle", "--format", "json"],
        )
        assert code == 0
        envelope = json.loads(out)
        assert envelope["verdict"]["kind"] == "NoContradiction"
        assert envelope["oracle"]["kind"] == "Feasible"

    def test_oracle_refusal_still_exits_0(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g6.json", validate_family(6, 2, 2))
        code, out, _ = run(
            capsys, ["narrow-check", "--profile", path, "--maslov", "4", "--oracle"]
        )
        assert code == 0
        assert "oracle skipped" in out

    def test_explicit_nu_overrides(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_22.json", validate_family(4, 2, 2))
        code, out, _ = run(
            capsys,
            ["narrow-check", "--profile", path, "--maslov", "4", "--nu", "0", "--format", "json"],
        )
        assert code == 0
        assert json.loads(out)["nu"] == 0

    def test_low_maslov_exits_1(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_22.json", validate_family(4, 2, 2))
        code, _, err = run(capsys, ["narrow-check", "--profile", path, "--maslov", "2"])
        assert code == 1
        assert "Maslov" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, ["narrow-check", "--profile", "/no/such.json", "--maslov", "4"])
        assert code == 2
        assert "cannot read" in err

    def test_unparseable_file_exits_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = run(capsys, ["narrow-check", "--profile", str(path), "--maslov", "4"])
        assert code == 2
        assert "not valid JSON" in err

    def test_wrong_schema_exits_2(self, capsys, tmp_path):
        path = tmp_path / "wrong.json"
        path.write_text(json.dumps({"degrees": [1, 2]}), encoding="utf-8")
        code, _, err = run(capsys, ["narrow-check", "--profile", str(path), "--maslov", "4"])
        assert code == 2


class TestWideCheck:
    def test_sphere_profile_is_wide(self, capsys, tmp_path):
        path = tmp_path / "sphere.json"
        path.write_text(
            json.dumps({"n": 6, "known": [[0, 1], [6, 1]], "cap": 2}), encoding="utf-8"
        )
        code, out, _ = run(
            capsys, ["wide-check", "--profile", str(path), "--maslov", "4", "--format", "json"]
        )
        assert code == 0
        assert json.loads(out) == {"wide": True, "maslov": 4, "tested_degrees": [3]}

    def test_obstructed_profile_is_not_wide(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g4_12.json", validate_family(4, 1, 2))
        code, out, _ = run(capsys, ["wide-check", "--profile", path, "--maslov", "3"])
        assert code == 0
        assert "wide: no" in out

    def test_unknown_tested_degree_exits_1(self, capsys, tmp_path):
        path = write_profile(tmp_path, "g6.json", validate_family(6, 2, 2))
        code, _, err = run(capsys, ["wide-check", "--profile", path, "--maslov", "4"])
        assert code == 1
        assert "unknown" in err


class TestReplay:
    def make_witness(self, capsys, tmp_path, family, maslov, extra=()):
        path = write_profile(tmp_path, "profile.json", family)
        code, out, _ = run(
            capsys,
            ["narrow-check", "--profile", path, "--maslov", str(maslov), "--format", "json",
             *extra],
        )
        assert code == 0
        witness = tmp_path / "witness.json"
        witness.write_text(out, encoding="utf-8")
        return witness

    def test_stored_contradiction_replays(self, capsys, tmp_path):
        witness = self.make_witness(capsys, tmp_path, validate_family(4, 2, 2), 4)
        code, out, _ = run(capsys, ["replay", str(witness)])
        assert code == 0
        assert "ok" in out

    def test_stored_oracle_witness_replays(self, capsys, tmp_path):
        witness = self.make_witness(
            capsys, tmp_path, validate_family(4, 1, 2), 3, extra=["--oracle"]
        )
        code, out, _ = run(capsys, ["replay", str(witness), "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"replayed": True, "verdicts": 2}

    def test_tampered_witness_exits_1(self, capsys, tmp_path):
        witness = self.make_witness(capsys, tmp_path, validate_family(4, 2, 2), 4)
        payload = json.loads(witness.read_text(encoding="utf-8"))
        payload["verdict"]["witness"]["bound"] = 7
        payload["verdict"]["bound"] = 7
        witness.write_text(json.dumps(payload), encoding="utf-8")
        code, out, _ = run(capsys, ["replay", str(witness)])
        assert code == 1
        assert "MISMATCH" in out

    def test_structurally_broken_witness_exits_2(self, capsys, tmp_path):
        witness = self.make_witness(capsys, tmp_path, validate_family(4, 2, 2), 4)
        payload = json.loads(witness.read_text(encoding="utf-8"))
        del payload["verdict"]["witness"]["chain"]
        witness.write_text(json.dumps(payload), encoding="utf-8")
        code, _, err = run(capsys, ["replay", str(witness)])
        assert code == 2
        assert "malformed" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, _ = run(capsys, ["replay", "/no/such/witness.json"])
        assert code == 2


class TestCatalog:
    def test_text_table(self, capsys):
        code, out, _ = run(capsys, ["catalog", "--bound", "2"])
        assert code == 0
        assert len(out.strip().splitlines()) == 6  # header + 5 families

    def test_json_records(self, capsys):
        code, out, _ = run(capsys, ["catalog", "--bound", "2", "--format", "json"])
        assert code == 0
        records = json.loads(out)
        assert len(records) == 5
        by_family = {tuple(r["family"][k] for k in ("g", "m1", "m2")): r for r in records}
        assert by_family[(6, 1, 1)]["betti_N"] is None
        assert by_family[(4, 1, 1)]["betti_N"]["known"] == [[0, 1], [1, 2], [2, 2], [3, 2], [4, 1]]
        assert by_family[(3, 1, 1)]["betti_L"]["known"] == [[0, 1], [1, 0], [2, 0], [3, 1]]


class TestDispatch:
    def test_help_exits_0(self, capsys):
        code, out, _ = run(capsys, ["--help"])
        assert code == 0
        assert "classify-all" in out

    def test_no_arguments_exits_1(self, capsys):
        assert run(capsys, [])[0] == 1

    def test_unknown_subcommand_exits_1(self, capsys):
        assert run(capsys, ["frobnicate"])[0] == 1

    def test_unknown_flag_exits_1(self, capsys):
        assert run(capsys, ["classify", "--g", "4", "--m1", "1", "--m2", "1", "--frob"])[0] == 1
