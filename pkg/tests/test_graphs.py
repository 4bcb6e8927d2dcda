"""Graph core: formats, distances, products, folds, zero forcing."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectracert.exact import (ExactMatrix, charpoly_int,
                               minimal_polynomial_degree, poly_mul)
from spectracert.graphs import (Graph, Graph6Error, GraphError, SignedGraph,
                                antipodal_fold, cartesian_product, complement,
                                complete_graph, complete_multipartite,
                                cycle_graph, distance_data,
                                intersection_array, is_bipartite,
                                is_connected, is_forcing_set,
                                is_triangle_free, load_graph6, path_graph,
                                save_graph6, tensor_product,
                                zero_forcing_closure,
                                zero_forcing_number_exhaustive)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs \
        else []
    return Graph(n, sorted(chosen))


class TestFormats:
    @given(graphs())
    def test_graph6_roundtrip_preserves_edge_ids(self, G):
        H = load_graph6(save_graph6(G))
        assert H.n == G.n and H.edges == G.edges

    def test_graph6_error_offset(self):
        with pytest.raises(Graph6Error):
            load_graph6(b"\x01\x02")

    @given(graphs())
    def test_json_roundtrip(self, G):
        H = Graph.from_json(G.to_json())
        assert H.n == G.n and H.edges == G.edges

    def test_edge_ids_sorted_and_stable(self):
        G = cycle_graph(5)
        assert G.edges == sorted(G.edges)
        for i, e in enumerate(G.edges):
            assert G.edge_id(*e) == i


class TestDistances:
    def test_distance_oracle_cycle(self):
        dd = distance_data(cycle_graph(8))
        assert dd.diameter == 4
        assert dd.dist[0][4] == 4 and dd.dist[0][7] == 1

    def test_disconnected_raises(self):
        with pytest.raises(GraphError):
            distance_data(Graph(4, [(0, 1), (2, 3)]))

    @given(graphs())
    def test_distance_symmetry(self, G):
        if not is_connected(G):
            return
        dd = distance_data(G)
        assert (dd.dist == dd.dist.T).all()

    def test_intersection_arrays(self):
        assert intersection_array(cycle_graph(6)).as_tuple() == \
            ((2, 1, 1), (1, 1, 2))
        assert intersection_array(complete_graph(5)).as_tuple() == ((4,), (1,))
        # path is not distance-regular
        assert intersection_array(path_graph(4)) is None

    def test_drg_has_d_plus_1_eigenvalues(self):
        for G in (cycle_graph(6), complete_graph(4),
                  complete_multipartite([2, 2, 2])):
            ia = intersection_array(G)
            assert ia is not None
            deg = minimal_polynomial_degree(
                ExactMatrix.from_int_array(G.adjacency_int()))
            assert deg == ia.d + 1


class TestProducts:
    def test_cartesian_is_hamming(self):
        G = cartesian_product(complete_graph(3), complete_graph(3))
        ia = intersection_array(G)
        assert ia is not None and ia.as_tuple() == ((4, 2), (1, 2))

    def test_tensor_product_order_and_degree(self):
        G = tensor_product(cycle_graph(6), cycle_graph(6))
        assert G.n == 36
        assert all(G.degree(v) == 4 for v in range(36))

    def test_complement_involution(self):
        G = cycle_graph(7)
        assert complement(complement(G)).edges == G.edges


class TestFold:
    def test_c6_folds_to_c3(self):
        fold = antipodal_fold(cycle_graph(6))
        assert fold is not None
        folded, signed = fold
        assert intersection_array(folded).as_tuple() == ((2,), (1,))
        cover_cp = charpoly_int(
            ExactMatrix.from_int_array(cycle_graph(6).adjacency_int()))
        fold_cp = charpoly_int(
            ExactMatrix.from_int_array(folded.adjacency_int()))
        signed_cp = charpoly_int(signed.signed_adjacency())
        assert poly_mul(fold_cp, signed_cp) == cover_cp

    def test_non_antipodal_returns_none(self):
        assert antipodal_fold(path_graph(4)) is None


class TestZeroForcing:
    def test_path_forces_from_one_end(self):
        G = path_graph(5)
        assert is_forcing_set(G, [0])
        assert zero_forcing_number_exhaustive(G) == 1

    def test_cycle_needs_two(self):
        assert zero_forcing_number_exhaustive(cycle_graph(6)) == 2

    @given(graphs(max_n=7), st.data())
    @settings(max_examples=20)
    def test_closure_monotone(self, G, data):
        S = data.draw(st.sets(st.integers(0, G.n - 1)))
        T = S | data.draw(st.sets(st.integers(0, G.n - 1)))
        assert zero_forcing_closure(G, S) <= zero_forcing_closure(G, T)


class TestPredicates:
    def test_triangle_free_and_bipartite(self):
        assert is_triangle_free(cycle_graph(5))
        assert not is_bipartite(cycle_graph(5))
        assert is_bipartite(cycle_graph(6))
        assert not is_triangle_free(complete_graph(3))

    def test_signed_adjacency_support(self):
        G = cycle_graph(4)
        sg = SignedGraph(G, {0: 1, 1: -1, 2: 1, 3: -1})
        S = sg.signed_adjacency()
        assert (np.abs(np.array(S.num)) == G.adjacency_int()).all()
