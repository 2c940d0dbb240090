import random
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph, to_networkx
from indpoly.families import complete, cycle, edgeless, path, q_triangles, random_tree
from indpoly.graph import (
    CapacityError,
    Graph,
    Graph6Error,
    GraphError,
    closed_neighborhood,
    components,
    cyclomatic_number,
    delete_vertices,
    disjoint_union,
    enumerate_labeled_graphs,
    find_cycle,
    format_edge_list,
    from_edge_list,
    is_acyclic,
    mask_of,
    members,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    survivor_labels,
    to_graph6,
)


class TestConstruction:
    def test_triangle(self):
        g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_single_vertex(self):
        g = from_edge_list(1, [])
        assert (g.n, g.m) == (1, 0)

    def test_duplicate_edges_collapse(self):
        g = from_edge_list(4, [(0, 1), (0, 1), (1, 2), (2, 3)])
        assert g == path(4)
        assert g.m == 3

    @pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)]])
    def test_out_of_range_endpoint(self, edges):
        with pytest.raises(GraphError):
            from_edge_list(3, edges)

    def test_loop_rejected(self):
        with pytest.raises(GraphError, match="loop"):
            from_edge_list(3, [(1, 1)])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            from_edge_list(65, [])

    def test_raw_constructor_checks_symmetry(self):
        with pytest.raises(GraphError, match="asymmetric"):
            Graph(2, (0b10, 0))
        with pytest.raises(GraphError, match="loop"):
            Graph(1, (1,))

    def test_empty_graph_is_legal(self):
        g = from_edge_list(0, [])
        assert g.n == 0 and g.m == 0 and components(g) == []


class TestGraph6:
    # hand-decoded: header n+63, then x(0,1) x(0,2) x(1,2) ... six bits per byte + 63
    @pytest.mark.parametrize(
        "text, n, edges",
        [
            ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),  # 'w' = 63 + 0b111000
            ("A_", 2, [(0, 1)]),  # '_' = 63 + 0b100000
            ("D??", 5, []),
            ("?", 0, []),
        ],
    )
    def test_fixtures(self, text, n, edges):
        g = parse_graph6(text)
        assert g == from_edge_list(n, edges)
        assert to_graph6(g) == text

    def test_header_prefix_and_whitespace(self):
        assert parse_graph6(">>graph6<<Bw\n") == complete(3)

    def test_matches_networkx_encoder(self):
        rng = random.Random(7)
        for _ in range(50):
            g = random_graph(rng, rng.randrange(0, 30))
            expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
            assert to_graph6(g) == expected

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("B", 1),  # too short
            ("Bww", 2),  # too long
            ("B\x20", 1),  # character below 63
            ("Bx", 1),  # padding bits set: 'x' = 63 + 0b111001
            ("~?@B", 0),  # long form
        ],
    )
    def test_malformed(self, text, offset):
        with pytest.raises(Graph6Error) as info:
            parse_graph6(text)
        assert info.value.offset == offset

    def test_too_large_to_encode(self):
        with pytest.raises(CapacityError):
            to_graph6(edgeless(63))

    @settings(max_examples=200)
    @given(graphs(max_n=62))
    def test_roundtrip(self, g):
        assert parse_graph6(to_graph6(g)) == g


class TestEdgeListText:
    def test_roundtrip_with_comments(self):
        text = "# a path\n4 3\n0 1\n1 2  # middle\n2 3\n"
        g = parse_edge_list(text)
        assert g == path(4)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_edge_count_mismatch(self):
        with pytest.raises(GraphError, match="announces"):
            parse_edge_list("3 2\n0 1\n")

    def test_bad_header(self):
        with pytest.raises(GraphError, match="line 1"):
            parse_edge_list("three\n")


class TestNeighbourhoods:
    def test_triangle(self):
        g = complete(3)
        assert members(neighborhood(g, 0)) == [1, 2]
        assert members(closed_neighborhood(g, 0)) == [0, 1, 2]

    def test_isolated(self):
        g = edgeless(3)
        assert neighborhood(g, 1) == 0
        assert members(closed_neighborhood(g, 1)) == [1]

    def test_path_middle(self):
        assert members(neighborhood(path(3), 1)) == [0, 2]

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            neighborhood(path(3), 3)


class TestDeletion:
    def test_triangle_minus_vertex(self):
        assert delete_vertices(complete(3), 0b001) == complete(2)

    def test_remove_nothing(self):
        g = cycle(5)
        assert delete_vertices(g, 0) == g

    def test_path_minus_inner(self):
        g = delete_vertices(path(4), mask_of([1]))
        assert g == from_edge_list(3, [(1, 2)])
        assert survivor_labels(path(4), mask_of([1])) == (0, 2, 3)

    @settings(max_examples=100)
    @given(graphs(max_n=10))
    def test_composition(self, g):
        rng = random.Random(g.n * 1000 + g.m)
        w1 = rng.getrandbits(g.n) if g.n else 0
        first = delete_vertices(g, w1)
        w2_new = rng.getrandbits(first.n) if first.n else 0
        labels = survivor_labels(g, w1)
        w2_old = mask_of(labels[v] for v in members(w2_new))
        assert delete_vertices(first, w2_new) == delete_vertices(g, w1 | w2_old)


class TestStructure:
    def test_two_triangles(self):
        comps = components(q_triangles(2))
        assert [members(c) for c in comps] == [[0, 1, 2], [3, 4, 5]]
        assert cyclomatic_number(q_triangles(2)) == 2

    def test_connected(self):
        assert components(cycle(5)) == [0b11111]

    def test_k4_cyclomatic(self):
        assert cyclomatic_number(complete(4)) == 3

    def test_forest_cyclomatic(self):
        assert cyclomatic_number(random_tree(12, seed=1)) == 0
        assert cyclomatic_number(disjoint_union(path(3), path(4))) == 0

    def test_tree_has_no_cycle(self):
        g = random_tree(10, seed=4)
        assert is_acyclic(g)
        assert find_cycle(g) is None

    def test_cycle_found(self):
        c = find_cycle(cycle(5))
        assert sorted(c) == [0, 1, 2, 3, 4]

    def test_k4_gives_triangle(self):
        c = find_cycle(complete(4))
        assert len(c) == 3

    @settings(max_examples=200)
    @given(graphs(max_n=9))
    def test_against_networkx(self, g):
        h = to_networkx(g)
        comps = components(g)
        assert sum(c.bit_count() for c in comps) == g.n
        assert sorted(members(c) for c in comps) == sorted(sorted(c) for c in nx.connected_components(h))
        assert is_acyclic(g) == (g.n == 0 or nx.is_forest(h))
        assert (cyclomatic_number(g) == 0) == is_acyclic(g)

    @settings(max_examples=150)
    @given(graphs(max_n=7))
    def test_shortest_cycle_against_brute_force(self, g):
        c = find_cycle(g)
        girth = _brute_girth(g)
        if girth is None:
            assert c is None
            return
        assert len(c) == girth
        assert len(set(c)) == len(c)
        assert all(g.has_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


def _brute_girth(g):
    for length in range(3, g.n + 1):
        for seq in permutations(range(g.n), length):
            if seq[0] == min(seq) and all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return length
    return None


class TestEnumeration:
    @pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (3, 8), (5, 1024)])
    def test_counts(self, n, count):
        seen = {to_graph6(g) for g in enumerate_labeled_graphs(n)}
        assert len(seen) == count

    def test_order_is_by_edge_mask(self):
        gs = list(enumerate_labeled_graphs(3))
        assert gs[0] == edgeless(3)
        assert gs[1] == from_edge_list(3, [(0, 1)])
        assert gs[2] == from_edge_list(3, [(0, 2)])
        assert gs[-1] == complete(3)

    def test_cap(self):
        with pytest.raises(CapacityError):
            next(enumerate_labeled_graphs(8))
