import json
import subprocess
import sys

from tetrascreen.cli import main

RUN = [sys.executable, "-m", "tetrascreen.cli"]


def run_cli(args, **kw):
    return subprocess.run(RUN + args, capture_output=True, text=True, **kw)


class TestGen:
    def test_generates_valid_instances(self, tmp_path):
        out = tmp_path / "gen.json"
        assert main(["gen", "--family", "isosceles", "-n", "3", "--seed", "5",
                     "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert len(data) == 3
        for obj in data:
            assert obj["a"] == obj["b"]

    def test_orthocentric_satisfies_condition(self, tmp_path, capsys):
        assert main(["gen", "--family", "orthocentric", "-n", "2", "--seed", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        from tetrascreen.tetrahedron import EdgeLengths, TetraFamily, family_predicate

        for obj in data:
            inst = EdgeLengths.from_json_dict(obj)
            assert family_predicate(inst, TetraFamily.ORTHOCENTRIC)

    def test_invalid_family_usage_error(self):
        result = run_cli(["gen", "--family", "nonsense", "-n", "1"])
        assert result.returncode != 0


class TestScreen:
    def test_round_trip_gen_to_screen(self, tmp_path):
        gen_out = tmp_path / "instances.json"
        assert main(["gen", "--family", "circumscriptible", "-n", "4", "--seed", "9",
                     "--out", str(gen_out)]) == 0
        rep_a = tmp_path / "a.json"
        rep_b = tmp_path / "b.json"
        assert main(["screen", "--family", "circumscriptible", "--centers", "X7",
                     "--properties", "1", "-n", "4", "--seed", "9",
                     "--out", str(rep_a)]) == 0
        assert main(["screen", "--family", "circumscriptible", "--centers", "X7",
                     "--properties", "1", "--instances", str(gen_out), "--seed", "9",
                     "--out", str(rep_b)]) == 0
        assert rep_a.read_text() == rep_b.read_text()

    def test_property_failures_exit_zero(self, tmp_path):
        out = tmp_path / "r.json"
        assert main(["screen", "--family", "general", "--centers", "X7",
                     "--properties", "1", "-n", "3", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["cells"][0]["summary"].startswith("fails")

    def test_bad_center_exits_nonzero(self, tmp_path):
        assert main(["screen", "--family", "general", "--centers", "NOPE",
                     "--properties", "1", "-n", "2"]) == 2

    def test_formats(self, tmp_path):
        for fmt, probe in (("json", '"plan"'), ("csv", "center,P1"), ("md", "| center |")):
            out = tmp_path / f"r.{fmt}"
            assert main(["screen", "--family", "isosceles", "--centers", "X2",
                         "--properties", "1", "-n", "2", "--format", fmt,
                         "--out", str(out)]) == 0
            assert probe in out.read_text()

    def test_jobs_flag_gives_identical_report(self, tmp_path):
        serial = tmp_path / "serial.json"
        parallel = tmp_path / "parallel.json"
        args = ["screen", "--family", "isosceles", "--centers", "X2,X7,X9",
                "--properties", "1,13", "-n", "3", "--seed", "4"]
        assert main(args + ["--out", str(serial)]) == 0
        assert main(args + ["--jobs", "2", "--out", str(parallel)]) == 0
        assert serial.read_text() == parallel.read_text()

    def test_custom_catalog(self, tmp_path):
        cat = tmp_path / "extra.txt"
        cat.write_text("MINE | areal | (b+c-a)^r | yes\n")
        out = tmp_path / "r.json"
        assert main(["screen", "--family", "circumscriptible", "--centers", "MINE:2",
                     "--properties", "1", "-n", "3", "--catalog", str(cat),
                     "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["cells"][0]["summary"].startswith("confirmed (exact")


class TestVerify:
    def test_single_case(self, capsys):
        assert main(["verify", "T5.1b", "-n", "3"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out and "T5.1b" in out

    def test_unknown_case(self):
        assert main(["verify", "T99.9"]) == 2

    def test_expected_fail_does_not_break_exit(self, capsys):
        assert main(["verify", "T8.1e", "-n", "2"]) == 0
        assert "XFAIL" in capsys.readouterr().out

    def test_report_out(self, tmp_path, capsys):
        out = tmp_path / "verify.json"
        assert main(["verify", "T5.1b", "T7a", "-n", "2", "--out", str(out)]) == 0
        capsys.readouterr()
        data = json.loads(out.read_text())
        assert {c["id"] for c in data["cases"]} == {"T5.1b", "T7a"}


class TestHunt:
    def test_hunt_writes_report(self, tmp_path):
        out = tmp_path / "hunt.json"
        assert main(["hunt", "centroid-uniqueness", "--budget", "4",
                     "--seed", "2", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["claim_supported"] is True
