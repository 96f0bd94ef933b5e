"""
Tests for ladder operators and tensor-product embedding
"""
import numpy as np
import pytest

from spectrum.operators import annihilation_op, bare_digits, bare_index, embed_op, kerr_op, number_op
from utils.errors import ConfigurationError, InvalidTruncationError


class TestAnnihilationOp:
    def test_qubit_limit(self):
        np.testing.assert_array_equal(annihilation_op(2), np.array([[0, 1], [0, 0]]))

    def test_three_levels(self):
        a = annihilation_op(3)
        assert a[0, 1] == pytest.approx(1.0)
        assert a[1, 2] == pytest.approx(np.sqrt(2))
        assert np.count_nonzero(a) == 2

    def test_number_operator(self):
        np.testing.assert_allclose(number_op(3), np.diag([0, 1, 2]), atol=1e-15)

    def test_kerr_operator(self):
        np.testing.assert_allclose(kerr_op(4), np.diag([0, 0, 2, 6]), atol=1e-12)

    @pytest.mark.parametrize("levels", [0, 1])
    def test_rejects_short_truncation(self, levels):
        with pytest.raises(InvalidTruncationError):
            annihilation_op(levels)


class TestEmbedOp:
    def test_first_site_is_most_significant(self):
        big = embed_op(annihilation_op(3), 0, 2, 3)
        # row |0,0> -> 0, column |1,0> -> 3
        assert big[0, 3] == pytest.approx(1.0)
        assert big.shape == (9, 9)

    @pytest.mark.parametrize("site", [0, 1, 2])
    def test_identity_embedding(self, site):
        np.testing.assert_array_equal(embed_op(np.eye(3), site, 3, 3), np.eye(27))

    def test_distinct_sites_commute(self):
        a = annihilation_op(3)
        left = embed_op(a, 0, 2, 3)
        right = embed_op(a.conj().T, 1, 2, 3)
        np.testing.assert_allclose(left @ right, right @ left, atol=1e-14)

    def test_same_site_commutator(self):
        a0 = embed_op(annihilation_op(4), 0, 2, 4)
        comm = a0 @ a0.conj().T - a0.conj().T @ a0
        # [a, a+] = 1 except on the truncated top level
        diag = np.real(np.diag(comm)).reshape(4, 4)
        np.testing.assert_allclose(diag[:3, :], 1.0, atol=1e-12)
        np.testing.assert_allclose(diag[3, :], -3.0, atol=1e-12)

    @pytest.mark.parametrize("site", [-1, 2])
    def test_site_out_of_range(self, site):
        with pytest.raises(IndexError):
            embed_op(np.eye(3), site, 2, 3)

    def test_shape_mismatch(self):
        with pytest.raises(ConfigurationError):
            embed_op(np.eye(2), 0, 2, 3)


class TestBareIndexing:
    def test_digits_round_trip(self):
        for index in range(27):
            assert bare_index(bare_digits(index, 3, 3), 3) == index

    def test_known_index(self):
        assert bare_index((1, 0, 0), 3) == 9
        assert bare_digits(5, 3, 3) == (0, 1, 2)
