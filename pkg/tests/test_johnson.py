"""Signed Johnson algebra: word order, boundary chain, spectra, frames."""

import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from spectracert.exact import ExactMatrix, annihilator_check, rank_rational
from spectracert.graphs import is_forcing_set, zero_forcing_closure
from spectracert.johnson import (boundary_W, boundary_W_block,
                                 combination_matrix_M, degree_profile,
                                 forcing_candidate, frame_vectors, gap_sizes,
                                 johnson_graph, laplacian_pair,
                                 ones_positions, projector_P_block,
                                 psd_witness_R, r_value, signed_adjacency_A,
                                 signed_adjacency_block, weighing_check,
                                 word_index, word_list)

nd_pairs = [(n, d) for n in range(2, 9) for d in range(1, n)]


class TestWords:
    def test_b42_order(self):
        assert ["".join(map(str, w)) for w in word_list(4, 2)] == \
            ["0011", "0101", "1001", "0110", "1010", "1100"]

    def test_recursive_split(self):
        # words ending in 1 come first and biject with B_{n-1,d-1}
        for n, d in [(5, 2), (6, 3), (7, 3)]:
            words = word_list(n, d)
            k = math.comb(n - 1, d - 1)
            assert all(w[-1] == 1 for w in words[:k])
            assert all(w[-1] == 0 for w in words[k:])
            assert [w[:-1] for w in words[:k]] == list(word_list(n - 1, d - 1))
            assert [w[:-1] for w in words[k:]] == list(word_list(n - 1, d))

    @given(st.sampled_from(nd_pairs))
    def test_index_inverse(self, nd):
        n, d = nd
        idx = word_index(n, d)
        for i, w in enumerate(word_list(n, d)):
            assert idx[w] == i

    def test_gap_and_r(self):
        w = (1, 0, 1, 1, 0, 0)
        assert ones_positions(w) == [1, 3, 4]
        assert sum(gap_sizes(w)) == 3  # zeros split across d+1 gaps
        assert r_value(w) >= 0


class TestBoundaryAlgebra:
    @given(st.sampled_from([(n, d) for n, d in nd_pairs if d <= n - 2]))
    def test_chain_and_rank(self, nd):
        n, d = nd
        W1 = boundary_W(n, d)
        if d >= 1:
            W0 = boundary_W(n, d - 1)
            assert (W0 @ W1).is_zero()
        assert rank_rational(W1) == math.comb(n - 1, d)

    @given(st.sampled_from([(n, d) for n, d in nd_pairs
                            if 1 <= d <= n - 2 and math.comb(n, d) <= 60]))
    def test_block_recursions(self, nd):
        n, d = nd
        assert boundary_W_block(n, d) == boundary_W(n, d)
        assert signed_adjacency_block(n, d) == signed_adjacency_A(n, d)
        Q, P = laplacian_pair(n, d)
        assert projector_P_block(n, d) == P

    @given(st.sampled_from([(n, d) for n, d in nd_pairs if d <= n - 1]))
    def test_two_eigenvalue_structure(self, nd):
        n, d = nd
        A = signed_adjacency_A(n, d)
        N = A.rows
        ident = ExactMatrix.identity(N)
        left = A + ident.scale(d)
        right = A - ident.scale(n - d)
        assert (left @ right).is_zero()
        assert rank_rational(left) == math.comb(n - 1, d - 1)

    def test_laplacian_pair_identities(self):
        for n, d in [(4, 2), (5, 2), (6, 3)]:
            Q, P = laplacian_pair(n, d)
            N = Q.rows
            nI = ExactMatrix.identity(N).scale(n)
            assert Q + P == nI
            assert P @ P == P.scale(n)
            W = boundary_W(n, d - 1) if d >= 1 else None
            A = signed_adjacency_A(n, d)
            # eigenvector columns: A W^T = (n-d) W^T at the top level
            if W is not None:
                assert A @ W.T == W.T.scale(n - d)

    def test_aw_eigen_relation(self):
        for n, d in [(5, 2), (6, 3)]:
            A = signed_adjacency_A(n, d)
            W = boundary_W(n, d)
            assert A @ W == W.scale(-d)


class TestSpectralOracle:
    @pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (6, 3)])
    def test_eigenvalues_via_sympy(self, n, d):
        A = sympy.Matrix(signed_adjacency_A(n, d).num)
        vals = set(A.eigenvals())
        assert vals == {sympy.Integer(n - d), sympy.Integer(-d)}


class TestMinimumRank:
    @pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (6, 2), (6, 3)])
    def test_psd_witness(self, n, d):
        wit = psd_witness_R(n, d)
        assert wit.rank == math.comb(n - 2, d - 1)
        assert annihilator_check(wit.R, [0, n * (n - 1)])
        # support matches J(n,d) adjacency off the diagonal
        G = johnson_graph(n, d)
        assert (wit.R.offdiag_support() == G.adjacency_int()).all()

    @pytest.mark.parametrize("n,d", [(5, 2), (6, 2), (6, 3)])
    def test_forcing_candidate_closes(self, n, d):
        G = johnson_graph(n, d)
        cand = forcing_candidate(n, d)
        assert len(cand) == math.comb(n, d) - math.comb(n - 2, d - 1)
        assert is_forcing_set(G, cand)


class TestProfilesWeighingFrames:
    def test_degree_profile_j63(self):
        profs = {(degree_profile(6, 3, w).k_plus,
                  degree_profile(6, 3, w).k_minus) for w in word_list(6, 3)}
        assert profs == {(6, 3)}

    @given(st.sampled_from([(n, d) for n, d in nd_pairs
                            if math.comb(n, d) <= 40]))
    def test_profile_matches_row_count(self, nd):
        n, d = nd
        A = np.array(signed_adjacency_A(n, d).num)
        for i, w in enumerate(word_list(n, d)):
            prof = degree_profile(n, d, w)
            assert prof.k_plus == int((A[i] > 0).sum())
            assert prof.k_minus == int((A[i] < 0).sum())

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_weighing(self, d):
        cert = weighing_check(d)
        assert cert.order == math.comb(2 * d, d)
        assert cert.weight == d * d

    def test_frames(self):
        cert = frame_vectors(6, 3)
        assert cert.tight
        assert cert.frame_rank == math.comb(4, 2)
