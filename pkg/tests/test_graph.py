import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

import oracles
from periscope.constructions import complete, cycle, path, rhombic_dodecahedron, spider
from periscope.graph import (
    DisconnectedGraphError,
    GraphError,
    bipartition,
    cartesian_product,
    degree_sequence,
    diameter,
    distance_matrix,
    from_adjacency_matrix,
    from_edge_list,
    from_json,
    has_nontrivial_automorphism,
    is_connected,
    parse_graph6,
    relabel,
    to_graph6,
    to_json,
)
from strategies import graphs


class TestFromEdgeList:
    def test_path(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.edges() == [(0, 1), (1, 2)]
        assert g.edge_count == 2

    def test_cycle(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert degree_sequence(g) == [2, 2, 2, 2]
        assert g.edge_count == 4

    def test_duplicates_collapse(self):
        assert from_edge_list(2, [(0, 1), (1, 0), (0, 1)]).edge_count == 1

    def test_self_loop(self):
        with pytest.raises(GraphError, match="self-loop"):
            from_edge_list(2, [(0, 0)])

    def test_out_of_range(self):
        with pytest.raises(GraphError, match="out of range"):
            from_edge_list(2, [(0, 2)])

    @given(graphs(max_n=12))
    def test_invariants(self, g):
        for u in range(g.n):
            assert not g.adj[u] >> u & 1
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
        assert g.edge_count == sum(degree_sequence(g)) // 2

    def test_asymmetric_rows_rejected(self):
        from periscope.graph import Graph

        with pytest.raises(GraphError):
            Graph(2, (0b10, 0), 1)


class TestGraph6:
    def test_k3(self):
        assert to_graph6(complete(3)) == "Bw"
        assert nx.to_graph6_bytes(nx.complete_graph(3), header=False).strip() == b"Bw"

    def test_round_trip_example(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert to_graph6(g) == "D?{"

    def test_empty_string(self):
        with pytest.raises(GraphError):
            parse_graph6("")

    def test_bad_header(self):
        with pytest.raises(GraphError):
            parse_graph6("~")

    def test_wrong_length(self):
        with pytest.raises(GraphError):
            parse_graph6("D?")

    def test_nonzero_padding(self):
        # K3 needs 3 bits; "Bx" sets a padding bit
        with pytest.raises(GraphError, match="padding"):
            parse_graph6("Bx")

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<Bw") == complete(3)

    def test_round_trip_seeded(self):
        rng = random.Random(20230618)
        for _ in range(1000):
            n = rng.randint(0, 32)
            p = rng.random()
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            g = from_edge_list(n, edges)
            s = to_graph6(g)
            assert parse_graph6(s) == g

    def test_cross_check_networkx(self):
        rng = random.Random(7)
        for n in (1, 5, 13, 40, 63, 70):
            h = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10**6))
            expected = nx.to_graph6_bytes(h, header=False).strip().decode()
            g = from_edge_list(n, h.edges())
            assert to_graph6(g) == expected
            back = nx.from_graph6_bytes(to_graph6(g).encode())
            assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


class TestJson:
    def test_round_trip(self):
        g = spider([1, 2, 3])
        assert from_json(to_json(g)) == g

    def test_malformed(self):
        with pytest.raises(GraphError):
            from_json('{"n": 2}')


class TestDistances:
    def test_p3(self):
        assert distance_matrix(path(3))[0, 2] == 2

    def test_k4(self):
        d = distance_matrix(complete(4)).dist
        assert (d[~np.eye(4, dtype=bool)] == 1).all()

    def test_c4(self):
        d = distance_matrix(cycle(4)).dist
        assert d[0, 2] == 2 and d[1, 3] == 2

    def test_unreachable_sentinel(self):
        dm = distance_matrix(from_edge_list(3, [(0, 1)]))
        assert dm[0, 2] == dm.UNREACHABLE > 2
        assert not dm.connected

    def test_floyd_warshall_all_connected_upto7(self, connected_upto7):
        for g in connected_upto7:
            fw = oracles.floyd_warshall(g)
            assert distance_matrix(g).dist.tolist() == fw

    @settings(max_examples=150)
    @given(graphs(max_n=7))
    def test_floyd_warshall_including_disconnected(self, g):
        fw = oracles.floyd_warshall(g)
        dm = distance_matrix(g)
        for u in range(g.n):
            for v in range(g.n):
                expected = fw[u][v] if fw[u][v] != oracles.INF else dm.UNREACHABLE
                assert dm[u, v] == expected

    def test_large_graph_path(self):
        g = path(150)
        d = distance_matrix(g).dist
        assert d[0, 149] == 149
        assert d[20, 10] == 10

    @given(graphs(min_n=2, max_n=9, connected=True))
    def test_metric_properties(self, g):
        d = distance_matrix(g).dist.astype(int)
        assert (np.diag(d) == 0).all()
        assert (d == d.T).all()
        assert ((d == 1) == (g.adjacency_matrix == 1)).all()
        for k in range(g.n):
            assert (d <= d[:, [k]] + d[[k], :]).all()


class TestStructure:
    def test_diameter(self):
        assert diameter(path(4)) == 3
        assert diameter(from_edge_list(6, [(i, 3 + j) for i in range(3) for j in range(3)])) == 2

    def test_disconnected(self):
        g = from_edge_list(2, [])
        assert not is_connected(g)
        with pytest.raises(DisconnectedGraphError):
            diameter(g)

    def test_degree_sequence_sorted(self):
        assert degree_sequence(spider([1, 1, 2])) == [3, 2, 1, 1, 1]

    def test_bipartition_c4(self):
        bp = bipartition(cycle(4))
        assert bp.sides() == ([0, 2], [1, 3])

    def test_bipartition_k3(self):
        assert bipartition(complete(3)) is None

    def test_bipartition_rd(self):
        a, b = bipartition(rhombic_dodecahedron()).sides()
        assert sorted((len(a), len(b))) == [6, 8]

    @given(graphs(max_n=10))
    def test_bipartition_valid(self, g):
        bp = bipartition(g)
        assert (bp is None) == (not nx.is_bipartite(nx.Graph(g.edges())) if g.edge_count else False)
        if bp is not None:
            assert bp.side_a & bp.side_b == 0
            assert bp.side_a | bp.side_b == (1 << g.n) - 1
            for u, v in g.edges():
                assert (bp.side_a >> u & 1) != (bp.side_a >> v & 1)


class TestCartesianProduct:
    def test_k2_k2_is_c4(self):
        g = cartesian_product(complete(2), complete(2))
        assert nx.is_isomorphic(nx.Graph(g.edges()), nx.cycle_graph(4))

    def test_grid(self):
        g = cartesian_product(path(2), path(3))
        assert g.n == 6 and g.edge_count == 7

    def test_labeling(self):
        g = cartesian_product(path(2), path(3))
        # (i, j) -> 3i + j
        assert g.has_edge(0, 1) and g.has_edge(0, 3) and not g.has_edge(0, 4)

    def test_distance_additivity_p3_c5(self):
        g, h = path(3), cycle(5)
        dg, dh = distance_matrix(g).dist, distance_matrix(h).dist
        dp = distance_matrix(cartesian_product(g, h)).dist
        m = h.n
        for i in range(g.n):
            for j in range(m):
                for ii in range(g.n):
                    for jj in range(m):
                        assert dp[i * m + j, ii * m + jj] == dg[i, ii] + dh[j, jj]

    @given(graphs(max_n=4), graphs(max_n=4))
    def test_vertex_count(self, g, h):
        assert cartesian_product(g, h).n == g.n * h.n


class TestAutomorphism:
    def test_p3(self):
        assert has_nontrivial_automorphism(path(3))

    def test_asymmetric_spider(self):
        assert not has_nontrivial_automorphism(spider([1, 2, 4]))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete(self, n):
        assert has_nontrivial_automorphism(complete(n))

    def test_single_vertex(self):
        assert not has_nontrivial_automorphism(path(1))

    def test_matches_permutation_oracle_upto6(self, connected_upto6):
        for g in connected_upto6:
            assert has_nontrivial_automorphism(g) == oracles.has_nontrivial_automorphism(g)

    def test_matches_oracle_disconnected_n6(self):
        rng = random.Random(3)
        for _ in range(200):
            edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if rng.random() < 0.35]
            g = from_edge_list(6, edges)
            assert has_nontrivial_automorphism(g) == oracles.has_nontrivial_automorphism(g)

    @given(graphs(max_n=8))
    def test_relabel_invariant(self, g):
        order = list(range(g.n))[::-1]
        assert has_nontrivial_automorphism(relabel(g, order)) == has_nontrivial_automorphism(g)


def test_from_adjacency_matrix_round_trip():
    g = spider([2, 3, 1])
    assert from_adjacency_matrix(g.adjacency_matrix) == g
    big = path(70)
    assert from_adjacency_matrix(big.adjacency_matrix) == big
    with pytest.raises(GraphError):
        from_adjacency_matrix(np.array([[0, 1], [0, 0]]))
