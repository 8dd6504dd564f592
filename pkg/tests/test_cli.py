import json

import pytest

from spinnet.cli import main, verify_grid
from spinnet.errors import CeilingExceeded


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSixj:
    def test_regular_symbol(self, capsys):
        code, out, _ = run(capsys, "sixj", "1", "1", "1", "1", "1", "1")
        assert code == 0
        assert out == "1/6*sqrt(1/1)\n"

    def test_twice_mode(self, capsys):
        code, out, _ = run(capsys, "sixj", "--twice", "2", "2", "2",
                           "2", "2", "2")
        assert out == "1/6*sqrt(1/1)\n"

    def test_half_integers(self, capsys):
        code, out, _ = run(capsys, "sixj", "1/2", "1/2", "1",
                           "1/2", "1/2", "1")
        assert code == 0 and out == "1/6*sqrt(1/1)\n"

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "sixj", "--format", "json",
                           "2", "1", "2", "1", "2", "2")
        data = json.loads(out)
        assert code == 0
        assert data["entries"] == ["2", "1", "2", "1", "2", "2"]
        assert data["value"].endswith("*sqrt(1/1)") or "sqrt" in data["value"]

    def test_invalid_symbol_is_usage_error(self, capsys):
        code, _, err = run(capsys, "sixj", "1", "0", "0", "0", "0", "0")
        assert code == 2 and "triads" in err

    def test_bad_spin_string(self, capsys):
        code, _, err = run(capsys, "sixj", "[offset]", "0", "0", "0", "0", "0")
        assert code == 2

    def test_deterministic_bytes(self, capsys):
        _, out1, _ = run(capsys, "sixj", "--format", "json",
                         "1", "1", "1", "1", "1", "1")
        _, out2, _ = run(capsys, "sixj", "--format", "json",
                         "1", "1", "1", "1", "1", "1")
        assert out1 == out2


class TestOrbit:
    def test_fixed_point(self, capsys):
        code, out, _ = run(capsys, "orbit", "--format", "json",
                           "1", "1", "1", "1", "1", "1")
        data = json.loads(out)
        assert code == 0 and data["orbit_size"] == 1

    def test_text(self, capsys):
        code, out, _ = run(capsys, "orbit", "2", "1", "1", "1", "1", "1")
        assert code == 0 and out.startswith("orbit size ")


class TestVerify:
    def test_be_grid_passes(self, capsys):
        code, out, _ = run(capsys, "verify-be", "--all", "--max-twice", "2")
        assert code == 0
        assert "0 failures" in out

    def test_be_literal_form_fails(self, capsys):
        code, out, _ = run(capsys, "verify-be", "--all", "--max-twice", "2",
                           "--literal-paper-form")
        assert code == 1
        assert "0 failures" not in out

    def test_be_single_instance(self, capsys):
        code, out, _ = run(capsys, "verify-be", *(["1"] * 9))
        assert code == 0 and "holds" in out

    def test_orth_grid_json_records(self, capsys):
        code, out, _ = run(capsys, "verify-orth", "--all", "--max-twice", "1",
                           "--format", "json", "--sorted")
        lines = out.strip().split("\n")
        summary = json.loads(lines[-1])
        assert code == 0
        assert summary["failures"] == 0
        assert summary["instances"] == len(lines) - 1
        record = json.loads(lines[0])
        assert set(record) >= {"instance", "lhs", "rhs", "equal", "form"}

    def test_orth_single(self, capsys):
        code, out, _ = run(capsys, "verify-orth", "1", "1", "1", "1", "1", "1")
        assert code == 0

    def test_pachner_23(self, capsys):
        code, out, _ = run(capsys, "verify-pachner", "--move", "23",
                           *(["1"] * 9))
        assert code == 0

    def test_pachner_14(self, capsys):
        code, out, _ = run(capsys, "verify-pachner", "--move", "14",
                           "--p-prime", "1", *(["1"] * 9))
        assert code == 0

    def test_pachner_14_needs_p_prime(self, capsys):
        code, _, err = run(capsys, "verify-pachner", "--move", "14",
                           *(["1"] * 9))
        assert code == 2

    def test_ceiling(self, capsys):
        code, _, err = run(capsys, "verify-orth", "--all",
                           "--max-twice", "9")
        assert code == 2 and "ceiling" in err

    def test_verify_grid_api(self):
        records, summary = verify_grid(1, "be")
        assert summary["failures"] == 0
        assert summary["instances"] == len(records)
        with pytest.raises(CeilingExceeded):
            verify_grid(7, "be")

    def test_verify_grid_degenerate(self):
        records, summary = verify_grid(0, "be")
        assert summary == {"instances": 1, "failures": 0, "which": "be"}

    def test_verify_grid_pachner_14(self):
        records, summary = verify_grid(1, "pachner-14")
        assert summary["failures"] == 0 and summary["instances"] > 0


class TestStructures:
    def test_build_desargues_json(self, capsys):
        code, out, _ = run(capsys, "build-desargues", "--format", "json")
        data = json.loads(out)
        assert len(data["points"]) == 10 and len(data["lines"]) == 10
        assert len(data["incidence"]) == 30

    def test_build_desargues_json_roundtrips(self, capsys):
        from spinnet.projective import (
            ConfigurationSignature, IncidenceStructure, build_desargues,
            isomorphic, validate_configuration)
        _, out, _ = run(capsys, "build-desargues", "--format", "json")
        rebuilt = IncidenceStructure.from_json_dict(json.loads(out))
        assert validate_configuration(rebuilt,
                                      ConfigurationSignature(10, 3, 10, 3))
        assert isomorphic(rebuilt, build_desargues())

    def test_build_desargues_dot(self, capsys):
        code, out, _ = run(capsys, "build-desargues", "--format", "dot")
        assert out.startswith("graph incidence {")

    def test_space_dual(self, capsys):
        code, out, _ = run(capsys, "space-dual")
        data = json.loads(out)
        assert [len(data[k]) for k in
                ("vertices", "edges", "triangles", "tetrahedra")] == \
            [5, 10, 10, 5]

    def test_cross_section(self, capsys):
        code, out, _ = run(capsys, "cross-section")
        data = json.loads(out)
        assert data["validates_10_3"] and data["isomorphic_to_original"]

    def test_export_quadrilateral(self, capsys):
        code, out, _ = run(capsys, "export", "quadrilateral")
        data = json.loads(out)
        assert len(data["points"]) == 6 and len(data["lines"]) == 4

    def test_export_dot_cliques(self, capsys):
        code, out, _ = run(capsys, "export", "desargues", "--format", "dot",
                           "--cliques")
        assert "shape=box" not in out

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "d.json"
        code, out, _ = run(capsys, "build-desargues", "-o", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["points"]


class TestLabelAmplitude:
    SPINS = ",".join(f"{s}=1" for s in
                     ("a", "b", "c", "d", "e", "f", "p", "q", "r", "x"))

    def test_label_valid(self, capsys):
        code, out, _ = run(capsys, "label", "--spins", self.SPINS,
                           "--transfer")
        data = json.loads(out)
        assert code == 0 and data["valid"]
        assert data["tetrahedra"]["T1"] == "{1 1 1; 1 1 1}"

    def test_label_violation_exit_1(self, capsys):
        bad = self.SPINS.replace("x=1", "x=0").replace("a=1", "a=0")
        code, out, _ = run(capsys, "label", "--spins", bad)
        data = json.loads(out)
        assert code == 1 and not data["valid"]
        assert data["violations"]

    def test_amplitude(self, capsys):
        code, out, _ = run(capsys, "amplitude", "--spins", self.SPINS)
        assert code == 0 and out == "1/7776*sqrt(1/1)\n"

    def test_regularize(self, capsys):
        code, out, _ = run(capsys, "regularize", "1", "1", "1", "1")
        data = json.loads(out)
        assert data["report"] == {"rsym3_holds": True, "max_r": 4,
                                  "kappa_twice": 2, "rsym5_holds": False}
        assert data["running_range"]["x_max"] == "2"

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", "1", "1", "1", "1",
                           "--others", "e=1,f=1,p=1,q=1,r=1")
        data = json.loads(out)
        assert code == 0 and data["states"] == 3
