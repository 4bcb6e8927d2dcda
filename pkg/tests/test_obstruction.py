"""Shortest-path polynomial systems and the four unsolvability rules."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectracert import data as bundle
from spectracert.graphs import (Graph, complete_graph, cycle_graph,
                                distance_data, intersection_array, path_graph)
from spectracert.hamming import hamming_graph
from spectracert.johnson import johnson_graph
from spectracert.obstruction import (ObstructionCertificate,
                                     hamming_embedding_system,
                                     parity_certificate, parity_trace_rule,
                                     phi, sign_exhaust, unique_path_rule,
                                     verify_parity_family)


@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=2, max_value=max_n))
    edges = {(i - 1, i) for i in range(1, n)}  # spanning path
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True)))
    return Graph(n, sorted(edges))


class TestPhi:
    def test_path_counts_vs_matrix_powers(self):
        # monomial count per pair equals the (u,v) entry of A^j restricted
        # to shortest paths
        for G in (cycle_graph(7), hamming_graph(2, 3), johnson_graph(5, 2)):
            dd = distance_data(G)
            A = G.adjacency_int().astype(object)
            for j in range(2, dd.diameter + 1):
                sysj = phi(G, j)
                powers = np.linalg.matrix_power(A, j)
                for p in sysj.polynomials:
                    u, v = p.pair
                    # A^j counts walks; for shortest paths walks = paths
                    assert len(p.monomials) == powers[u, v]

    def test_drg_monomial_count(self):
        for G in (cycle_graph(8), johnson_graph(6, 3), hamming_graph(2, 3)):
            ia = intersection_array(G)
            assert ia is not None
            for j in range(2, ia.d + 1):
                sysj = phi(G, j)
                want = math.prod(ia.c[:j])
                assert all(len(p.monomials) == want
                           for p in sysj.polynomials)

    def test_monomials_are_sorted_edge_tuples(self):
        sysj = phi(johnson_graph(5, 2), 2)
        for p in sysj.polynomials:
            for m in p.monomials:
                assert list(m) == sorted(m)

    def test_bad_j_rejected(self):
        with pytest.raises(ValueError):
            phi(cycle_graph(5), 3)


class TestUniquePath:
    def test_path_graph(self):
        cert = unique_path_rule(path_graph(5))
        assert cert is not None and cert.bound == 5

    def test_odd_cycle(self):
        cert = unique_path_rule(cycle_graph(7))
        assert cert is not None and cert.bound == 4

    def test_even_cycle_stops_early(self):
        # antipodal pairs have two shortest paths
        cert = unique_path_rule(cycle_graph(8))
        assert cert is not None and cert.bound == 4

    @given(connected_graphs())
    @settings(max_examples=20)
    def test_bound_within_diameter(self, G):
        cert = unique_path_rule(G)
        if cert is not None:
            assert cert.bound <= distance_data(G).diameter + 1


class TestParity:
    def test_h23_certificate(self):
        cert = parity_certificate(phi(hamming_graph(2, 3), 2))
        assert cert is not None and cert.bound == 3
        assert cert.witness["family_size"] % 2 == 1

    def test_fixture_verification_rejects_bad_family(self):
        sysj = phi(hamming_graph(2, 3), 2)
        good = bundle.load_json("parity_h23_j2.json")["family"]
        cert = verify_parity_family(sysj, good)
        assert cert.witness["family_size"] == 9
        with pytest.raises(AssertionError):
            verify_parity_family(sysj, good[:-1])  # even size

    def test_no_certificate_on_tree(self):
        assert parity_certificate(phi(path_graph(4), 2)) is None


class TestSignExhaust:
    def test_heawood_unsat(self):
        G = bundle.load_bundled_graph("heawood")
        cert = sign_exhaust(phi(G, 3))
        assert cert.stats["unsat"] and cert.bound == 4
        assert cert.stats["assignments_tried"] == 2 ** 21

    def test_parallel_width_invariance(self):
        sysj = phi(cycle_graph(8), 3)
        outs = [sign_exhaust(sysj, parallel_width=w) for w in (1, 3, 8)]
        assert len({(o.stats["unsat"],
                     None if o.witness is None else
                     o.witness["assignment_bits"]) for o in outs}) == 1

    def test_sat_witness_is_smallest(self):
        sysj = phi(cycle_graph(6), 2)
        cert = sign_exhaust(sysj, parallel_width=2)
        if not cert.stats["unsat"]:
            bits = cert.witness["assignment_bits"]
            # nothing smaller survives: re-run sequentially and compare
            again = sign_exhaust(sysj, parallel_width=1)
            assert again.witness["assignment_bits"] == bits

    def test_variable_cap(self):
        with pytest.raises(ValueError):
            sign_exhaust(phi(johnson_graph(7, 3), 2))


class TestParityTrace:
    def test_fires_on_odd_cycles_and_m22(self):
        assert parity_trace_rule(cycle_graph(5)) is not None
        assert parity_trace_rule(cycle_graph(7)) is not None
        m22 = bundle.load_bundled_graph("m22")
        cert = parity_trace_rule(m22)
        assert cert is not None and cert.bound == 3

    def test_does_not_fire_on_heawood_or_bipartite(self):
        assert parity_trace_rule(bundle.load_bundled_graph("heawood")) is None
        assert parity_trace_rule(cycle_graph(6)) is None
        assert parity_trace_rule(path_graph(7)) is None
        # triangle kills it too
        assert parity_trace_rule(complete_graph(3)) is None


class TestEmbedding:
    def test_hypercube_into_hamming(self):
        sysj = hamming_embedding_system(2, 2, 3)
        assert sysj is not None
