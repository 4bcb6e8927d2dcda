"""Hypercube signings, orthogonal zero-diagonal matrices, zeta sums."""

import math

import numpy as np
import pytest

from spectracert.exact import ExactMatrix, kronecker
from spectracert.graphs import tensor_product, complete_graph
from spectracert.hamming import (LemmaViolation, OmzdNonexistent,
                                 OmzdUnavailable, clique_boundary_pair,
                                 hamming_graph, hypercube_signing, omzd,
                                 paley_conference, tensor_signing,
                                 verify_omzd, zeta)


class TestHypercubeSigning:
    @pytest.mark.parametrize("d", range(1, 9))
    def test_square_and_trace(self, d):
        M = hypercube_signing(d)
        assert M @ M == ExactMatrix.identity(2 ** d).scale(d)
        assert M.trace() == 0

    def test_support_is_hypercube(self):
        M = hypercube_signing(3)
        G = hamming_graph(3, 2)
        assert (M.offdiag_support() == G.adjacency_int()).all()


class TestCliqueBoundary:
    @pytest.mark.parametrize("d", range(1, 7))
    def test_ef_symmetric_difference(self, d):
        E, F = clique_boundary_pair(d)
        I = ExactMatrix.identity(2 ** d).scale(d)
        M = hypercube_signing(d)
        assert E.T @ E - I == M
        assert F.T @ F - I == -M


class TestOmzd:
    def test_order_two(self):
        entry = omzd(2)
        assert verify_omzd(entry.matrix) == 1

    @pytest.mark.parametrize("n", [6, 10, 14, 18, 30])
    def test_paley_orders(self, n):
        entry = omzd(n)
        assert verify_omzd(entry.matrix) == n - 1

    def test_conference_matrix_properties(self):
        C = paley_conference(5)
        n = C.rows
        assert (C @ C.T) == ExactMatrix.identity(n).scale(n - 1)

    @pytest.mark.parametrize("n", [3, 4, 5, 7])
    def test_nonexistent(self, n):
        with pytest.raises(OmzdNonexistent):
            omzd(n)

    def test_unavailable_without_data(self, tmp_path):
        with pytest.raises(OmzdUnavailable):
            omzd(8, data_dir=str(tmp_path))

    def test_loaded_file_is_verified(self, tmp_path):
        # a valid order-2 entry round-trips through the ingest path
        M = ExactMatrix(np.array([[0, 1], [1, 0]], dtype=np.int64))
        (tmp_path / "omzd_2.json").write_text(M.to_json())
        entry = omzd(2, data_dir=str(tmp_path))
        assert verify_omzd(entry.matrix) == 1
        bad = ExactMatrix(np.array(
            [[0, 1, 1], [1, 0, 0], [1, 0, 0]], dtype=np.int64))
        (tmp_path / "omzd_8.json").write_text(bad.to_json())
        with pytest.raises(Exception):
            omzd(8, data_dir=str(tmp_path))


class TestTensor:
    def test_c6_tensor_c6(self):
        cert = tensor_signing([6, 6])
        B = cert.matrix
        assert B @ B == ExactMatrix.identity(36).scale(25)
        want = tensor_product(complete_graph(6), complete_graph(6))
        assert (B.offdiag_support() == want.adjacency_int()).all()
        # this support is the distance-2 graph of H(2,6)
        H = hamming_graph(2, 6, 2)
        assert (B.offdiag_support() == H.adjacency_int()).all()

    def test_mixed_orders(self):
        cert = tensor_signing([2, 6])
        assert cert.weight == 5
        want = tensor_product(complete_graph(2), complete_graph(6))
        assert (cert.matrix.offdiag_support() == want.adjacency_int()).all()


class TestZeta:
    def test_all_identities_small(self):
        count = 0
        for d in range(3, 13):
            for j in range(d + 1):
                for t in range(3):
                    zeta(d, j, t)
                    count += 1
        assert count == sum(3 * (d + 1) for d in range(3, 13))

    def test_zero_cases(self):
        # odd j in the top residue class vanishes
        for d in (4, 7, 10):
            s = {0: 0, 1: -2, 2: 2}[d % 3]
            # find the t with the doubled closed form and odd j
            for j in range(1, d + 1, 2):
                for t in range(3):
                    z = zeta(d, j, t)
                    assert isinstance(z.value, int)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            zeta(2, 0, 0)
        with pytest.raises(ValueError):
            zeta(5, 6, 0)
        with pytest.raises(ValueError):
            zeta(5, 2, 3)
