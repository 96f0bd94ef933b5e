"""
Tests for ZZ rates: nulls, symmetries, truncation and the independent oracle
"""
from pathlib import Path

import numpy as np
import pytest

from spectrum.cluster import ClusterSpec, CouplerSpec, TransmonSpec
from spectrum.presets import four_qubit_cell, two_qubit_cell
from spectrum.zz import static_and_driven_zz, truncation_stability, zz_rate
from utils.cluster_config import load_cluster_config
from utils.errors import ConfigurationError

from tests.oracles import random_dispersive_spec, reference_zz

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def _driven(name):
    spec, _ = load_cluster_config(CONFIGS / name)
    return spec


class TestZZRate:
    def test_uncoupled_null(self):
        spec = ClusterSpec(
            qubits=(TransmonSpec(omega=5.24, eta=-0.215), TransmonSpec(omega=5.02, eta=-0.209)),
            coupler=CouplerSpec(omega_c=6.0)
        )
        assert abs(zz_rate(spec, (0, 1))) < 1e-9

    def test_uncoupled_four_qubit_null(self):
        spec = four_qubit_cell()
        spec = ClusterSpec(qubits=spec.qubits, coupler=spec.coupler)
        for pair in [(0, 1), (0, 3), (1, 2), (2, 3)]:
            assert abs(zz_rate(spec, pair)) < 1e-9

    def test_reference_cell_is_negative_and_matches_oracle(self):
        spec = two_qubit_cell()
        zeta = zz_rate(spec, (0, 1))
        assert zeta < 0
        assert zeta == pytest.approx(reference_zz(spec, (0, 1)), abs=1e-6)

    def test_lower_coupler_strengthens_zz(self):
        low = zz_rate(two_qubit_cell(omega_c=5.7), (0, 1))
        high = zz_rate(two_qubit_cell(omega_c=6.4), (0, 1))
        assert abs(low) > abs(high)

    def test_exchange_symmetry(self):
        for spec in (two_qubit_cell(), _driven("two_qubit_cell.json")):
            assert zz_rate(spec, (0, 1)) == zz_rate(spec, (1, 0))

    def test_frame_invariance(self):
        spec = two_qubit_cell()
        shifted = spec.shifted(0.37)
        assert zz_rate(shifted, (0, 1)) == pytest.approx(zz_rate(spec, (0, 1)), abs=1e-9)

    def test_driven_matches_oracle(self):
        spec = _driven("two_qubit_cell.json")
        assert zz_rate(spec, (0, 1)) == pytest.approx(reference_zz(spec, (0, 1)), abs=1e-6)

    @pytest.mark.slow
    def test_four_qubit_driven_matches_oracle(self):
        spec = _driven("four_qubit_cell.json")
        for pair in [(0, 1), (1, 3)]:
            assert zz_rate(spec, pair) == pytest.approx(reference_zz(spec, pair), abs=1e-6)

    @pytest.mark.parametrize("pair", [(0, 2), (-1, 0)])
    def test_pair_out_of_range(self, pair):
        with pytest.raises(IndexError):
            zz_rate(two_qubit_cell(), pair)

    def test_pair_must_be_distinct(self):
        with pytest.raises(ConfigurationError):
            zz_rate(two_qubit_cell(), (1, 1))


@pytest.mark.parametrize("seed", range(12))
def test_random_two_qubit_specs_match_oracle(seed):
    spec = random_dispersive_spec(np.random.default_rng(seed), n_qubits=2)
    assert zz_rate(spec, (0, 1)) == pytest.approx(reference_zz(spec, (0, 1)), abs=1e-6)


@pytest.mark.parametrize("seed", range(8))
def test_random_three_qubit_specs_match_oracle(seed):
    spec = random_dispersive_spec(np.random.default_rng(100 + seed), n_qubits=3)
    for pair in [(0, 1), (0, 2), (1, 2)]:
        assert zz_rate(spec, pair) == pytest.approx(reference_zz(spec, pair), abs=1e-6)


class TestStaticAndDriven:
    def test_split(self):
        values = static_and_driven_zz(_driven("two_qubit_cell.json"), (0, 1))
        assert values["zeta_drive_MHz"] == pytest.approx(values["zeta_driven_MHz"] - values["zeta_static_MHz"])
        assert values["zeta_static_MHz"] == pytest.approx(zz_rate(two_qubit_cell(), (0, 1)), abs=1e-9)

    def test_undriven_has_no_drive_part(self):
        values = static_and_driven_zz(two_qubit_cell(), (0, 1))
        assert values["zeta_drive_MHz"] == 0.0


class TestTruncationStability:
    def test_undriven_truncations_agree(self):
        report = truncation_stability(two_qubit_cell(), (0, 1))
        assert report["relative_difference"]["3"] < 1e-6
        assert not report["untrustworthy"]

    def test_driven_reference_cell_is_trustworthy(self):
        report = truncation_stability(_driven("two_qubit_cell.json"), (0, 1))
        assert report["relative_difference"]["3"] < 0.1
        assert not report["untrustworthy"]

    def test_needs_two_truncations(self):
        with pytest.raises(ConfigurationError):
            truncation_stability(two_qubit_cell(), (0, 1), levels=(3,))
