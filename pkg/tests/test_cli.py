"""
End-to-end tests for the command line
"""
import csv
import json
from pathlib import Path

import pytest

from main import RunConfig, build_parser, config_from_args, main

CONFIGS = Path(__file__).resolve().parents[1] / "configs"
TWO_QUBIT = str(CONFIGS / "two_qubit_cell.json")


def read_csv(path):
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    comments = [line for line in lines if line.startswith("#")]
    rows = list(csv.reader(line for line in lines if not line.startswith("#")))
    return comments, rows[0], rows[1:]


def read_json(path):
    return json.loads(Path(path).read_text(encoding="utf-8"))


class TestSpectrumCommands:
    def test_sweep_phase(self, tmp_path):
        prefix = tmp_path / "phase"
        code = main(["sweep-phase", "--cluster", TWO_QUBIT, "--pair", "0", "1",
                     "--points", "64", "--output", str(prefix), "--quiet"])
        assert code == 0
        comments, header, rows = read_csv(f"{prefix}.csv")
        assert header == ["phi_d_rad", "zeta_MHz", "label_ok"]
        assert len(rows) == 64
        assert comments[0].startswith("# config: ")

    def test_effective_config_is_embedded(self, tmp_path):
        prefix = tmp_path / "zz"
        assert main(["zz", "--preset", "two-qubit", "--output", str(prefix), "--quiet"]) == 0
        document = read_json(f"{prefix}.json")
        assert document["config"]["run"]["command"] == "zz"
        assert document["config"]["run"]["params"]["pair"] == [0, 1]
        assert document["config"]["cluster"]["couplings"][0]["J_GHz"] == 0.08
        assert document["zeta_drive_MHz"] == 0.0

    def test_missing_drives_are_filled_in(self, tmp_path, capsys):
        prefix = tmp_path / "phase"
        code = main(["sweep-phase", "--preset", "two-qubit", "--points", "4", "--output", str(prefix)])
        assert code == 0
        assert "⚠️ No drive on" in capsys.readouterr().out
        applied = read_json(f"{prefix}.json")["config"]["defaults_applied"]
        assert any(key.startswith("drive_") for key in applied)

    def test_truncation(self, tmp_path):
        prefix = tmp_path / "trunc"
        assert main(["truncation", "--preset", "two-qubit", "--output", str(prefix), "--quiet"]) == 0
        _, header, rows = read_csv(f"{prefix}.csv")
        assert header == ["levels", "zeta_MHz", "relative_difference"]
        assert [row[0] for row in rows] == ["3", "4"]

    def test_pair_matrix_drives_above_qubit_band(self, tmp_path):
        prefix = tmp_path / "pairs"
        code = main(["pair-matrix", "--preset", "four-qubit", "--points", "4",
                     "--output", str(prefix), "--quiet"])
        assert code == 0
        applied = read_json(f"{prefix}.json")["config"]["defaults_applied"]
        assert {key for key in applied if key.startswith("drive_")} == {"drive_q0", "drive_q1", "drive_q2", "drive_q3"}
        for drive in (applied[f"drive_q{i}"] for i in range(4)):
            assert drive["omega_d_GHz"] == pytest.approx(5.58 + 0.1)
        _, header, rows = read_csv(f"{prefix}.csv")
        assert header == ["p", "q", "peak_abs_zeta_MHz"]
        assert [(row[0], row[1]) for row in rows] == [("0", "1"), ("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"), ("2", "3")]

    @pytest.mark.slow
    def test_pair_matrix_shipped_cell_has_every_pair(self, tmp_path):
        prefix = tmp_path / "pairs"
        code = main(["pair-matrix", "--cluster", str(CONFIGS / "four_qubit_cell.json"), "--points", "16",
                     "--output", str(prefix), "--quiet"])
        assert code == 0
        _, _, rows = read_csv(f"{prefix}.csv")
        peaks = [float(row[2]) for row in rows]
        assert len(peaks) == 6
        assert len({round(p, 3) for p in peaks}) > 1

    def test_pair_out_of_range(self, capsys):
        code = main(["zz", "--preset", "two-qubit", "--pair", "0", "5", "--quiet"])
        assert code == 1
        assert capsys.readouterr().err.startswith("ERROR:1:")


class TestStarkCommand:
    def test_cancellation(self, tmp_path):
        prefix = tmp_path / "stark"
        code = main(["stark", "--eps0", "20", "--eps1", "10", "--epst", "-15", "--delta", "1000",
                     "--output", str(prefix), "--quiet"])
        assert code == 0
        assert read_json(f"{prefix}.json")["zeta_eq4"] == pytest.approx(0.0, abs=1e-12)

    def test_resonant_drive_exits_2(self, capsys):
        code = main(["stark", "--eps0", "20", "--eps1", "10", "--delta", "0", "--quiet"])
        assert code == 2
        assert capsys.readouterr().err.startswith("ERROR:2:ResonantDriveError")

    def test_strong_drive_is_rejected(self, capsys):
        code = main(["stark", "--eps0", "600", "--eps1", "10", "--delta", "1000", "--quiet"])
        assert code == 1
        assert "ERROR:1:" in capsys.readouterr().err


class TestLatticeCommands:
    def test_bench_grover(self, tmp_path):
        prefix = tmp_path / "bench"
        code = main(["bench-grover", "--n", "2..3", "--seeds", "2", "--output", str(prefix), "--quiet"])
        assert code == 0
        comments, header, rows = read_csv(f"{prefix}.csv")
        assert header[:3] == ["n", "topology", "seed"]
        assert len(rows) == 2 * 2 * 2
        assert "# measurements excluded from depth" in comments
        assert "2" in read_json(f"{prefix}.json")["reduction_pct"]

    def test_gen_map_grid(self, tmp_path):
        prefix = tmp_path / "map"
        assert main(["gen-map", "--grid", "3", "3", "--output", str(prefix), "--quiet"]) == 0
        _, header, rows = read_csv(f"{prefix}.csv")
        assert header == ["u", "v", "cluster"]
        assert len(rows) == 20
        assert read_json(f"{prefix}.json")["max_degree"] == 8

    def test_verify_circuit_file(self, tmp_path):
        circuit = {"n": 3, "gates": [
            {"kind": "H", "qubits": [0]},
            {"kind": "MCX", "qubits": [0, 1, 2]},
            {"kind": "RZ", "qubits": [2], "theta": 0.4},
        ]}
        path = tmp_path / "circuit.json"
        path.write_text(json.dumps(circuit), encoding="utf-8")
        prefix = tmp_path / "verify"
        code = main(["verify", "--circuit", str(path), "--topology", "heavyhex",
                     "--output", str(prefix), "--quiet"])
        assert code == 0
        assert read_json(f"{prefix}.json")["verification"]["passed"] is True

    def test_verify_grover(self, tmp_path):
        prefix = tmp_path / "verify"
        assert main(["verify", "--n", "4", "--seed", "2", "--output", str(prefix), "--quiet"]) == 0

    def test_malformed_circuit(self, tmp_path, capsys):
        path = tmp_path / "circuit.json"
        path.write_text('{"n": 2, "gates": [{"kind": "CX", "qubits": [0]}]}', encoding="utf-8")
        assert main(["verify", "--circuit", str(path), "--quiet"]) == 1
        assert "ERROR:1:ConfigurationError" in capsys.readouterr().err


class TestArgumentHandling:
    def test_cluster_required(self, capsys):
        assert main(["sweep-phase", "--quiet"]) == 1
        assert capsys.readouterr().err.startswith("ERROR:1:ConfigurationError")

    def test_missing_cluster_file(self, tmp_path, capsys):
        assert main(["zz", "--cluster", str(tmp_path / "absent.json")]) == 1
        assert "not found" in capsys.readouterr().err

    def test_negative_seed(self):
        assert main(["gen-map", "--seed", "-1", "--quiet"]) == 1

    def test_unknown_command(self, capsys):
        assert main(["sweep-everything"]) == 1
        assert capsys.readouterr().err.startswith("ERROR:1:")

    def test_default_output_prefix(self):
        args = build_parser().parse_args(["gen-map"])
        config = config_from_args(args)
        assert isinstance(config, RunConfig)
        assert Path(config.output) == Path("results") / "gen-map"
        assert config.param("topology") == "hybrid"
