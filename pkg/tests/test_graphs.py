import pytest

from eideal.graphs import (
    Graph,
    GraphError,
    GraphParseError,
    bipartition,
    components_and_diameters,
    cycle_graph,
    induced_subgraph,
    odd_closed_walk,
    parse_graph,
    path_graph,
    relabel,
    serialize_graph,
)
from eideal.glue import circ
from tests.conftest import load_fixture


class TestParse:
    def test_single_edge(self):
        g = parse_graph("v a\nv b\ne a b")
        assert g.vertices == ("a", "b")
        assert g.edges == frozenset({("a", "b")})

    def test_loop_rejected(self):
        with pytest.raises(GraphParseError, match="loop"):
            parse_graph("v a\ne a a")

    def test_duplicate_vertex(self):
        with pytest.raises(GraphParseError, match="duplicate vertex"):
            parse_graph("v a\nv a")

    def test_duplicate_edge(self):
        with pytest.raises(GraphParseError, match="duplicate edge"):
            parse_graph("v a\nv b\ne a b\ne b a")

    def test_undeclared_vertex(self):
        with pytest.raises(GraphParseError, match="undeclared"):
            parse_graph("v a\ne a b")

    def test_line_number_reported(self):
        with pytest.raises(GraphParseError, match="line 3"):
            parse_graph("v a\nv b\ne a a")

    def test_comments_and_blanks(self):
        g = parse_graph("# hi\n\nv a\n v b \ne a b\n")
        assert g.n_edges == 1

    def test_unknown_directive(self):
        with pytest.raises(GraphParseError, match="unknown directive"):
            parse_graph("w a")

    def test_fig4_g2_fixture(self):
        g = load_fixture("fig4_g2.graph")
        assert g.n_vertices == 6
        assert g.n_edges == 5
        assert g.edges == frozenset(
            {
                ("x21", "y21"),
                ("v2", "x21"),
                ("x22", "y22"),
                ("v2", "x22"),
                ("u2", "v2"),
            }
        )

    def test_roundtrip(self):
        g = load_fixture("fig3_g1.graph")
        again = parse_graph(serialize_graph(g))
        assert again == g
        assert serialize_graph(again) == serialize_graph(g)


class TestGraphInvariants:
    def test_loop_forbidden_in_constructor(self):
        with pytest.raises(GraphError):
            Graph(("a",), frozenset({("a", "a")}))

    def test_edge_endpoint_must_exist(self):
        with pytest.raises(GraphError):
            Graph(("a",), frozenset({("a", "b")}))

    def test_isolated_vertices_allowed(self):
        g = Graph(("a", "b"), frozenset())
        assert g.degree("a") == 0


class TestBipartition:
    def test_path(self):
        g = path_graph(4, prefix="")  # 1-2-3-4
        bip = bipartition(g)
        assert bip is not None
        assert {frozenset(bip.part_x), frozenset(bip.part_y)} == {
            frozenset({"1", "3"}),
            frozenset({"2", "4"}),
        }
        assert bip.is_valid_for(g)

    def test_odd_cycle_absent(self):
        assert bipartition(cycle_graph(3)) is None

    def test_witness_is_odd_closed_walk(self):
        for n in (3, 5, 7):
            g = cycle_graph(n)
            walk = odd_closed_walk(g)
            assert walk is not None
            assert walk[0] == walk[-1]
            assert (len(walk) - 1) % 2 == 1
            for a, b in zip(walk, walk[1:]):
                assert g.has_edge(a, b)

    def test_no_witness_when_bipartite(self):
        assert odd_closed_walk(path_graph(5)) is None

    def test_figure4_composite_parts(self):
        g1 = load_fixture("fig4_g1.graph")
        g2 = load_fixture("fig4_g2.graph")
        g2 = relabel(g2, {v: f"b.{v}" for v in g2.vertices})
        comp = circ(g1, "u1", g2, "b.u2", v_name="vv")
        assert comp.n_vertices == 7
        bip = bipartition(comp)
        assert sorted((len(bip.part_x), len(bip.part_y))) == [3, 4]


class TestInducedSubgraph:
    def test_path_subset(self):
        g = parse_graph("v a\nv b\nv c\nv d\ne a b\ne b c\ne c d")
        h = induced_subgraph(g, {"a", "b", "d"})
        assert h.vertices == ("a", "b", "d")
        assert h.edges == frozenset({("a", "b")})

    def test_identity(self):
        g = load_fixture("fig3_g1.graph")
        assert induced_subgraph(g, g.vertices) == g

    def test_idempotent(self):
        g = load_fixture("fig4_g2.graph")
        keep = {"x21", "y21", "v2"}
        once = induced_subgraph(g, keep)
        assert induced_subgraph(once, keep) == once

    def test_unknown_vertex(self):
        with pytest.raises(GraphError, match="unknown"):
            induced_subgraph(path_graph(3), {"zzz"})

    def test_fig3_leaf_removed(self):
        g = load_fixture("fig3_g1.graph")
        h = induced_subgraph(g, set(g.vertices) - {"u1"})
        assert h.n_vertices == 5
        assert h.n_edges == 3


class TestComponents:
    def test_p5(self):
        comps = components_and_diameters(path_graph(5))
        assert len(comps) == 1
        assert comps[0][1] == 4

    def test_two_edges(self):
        g = parse_graph("v a\nv b\nv c\nv d\ne a b\ne c d")
        comps = components_and_diameters(g)
        assert [d for _, d in comps] == [1, 1]

    def test_ordered_by_least_vertex(self):
        g = parse_graph("v z\nv a\ne z a\n" + "v m\nv n\ne m n")
        comps = components_and_diameters(g)
        assert min(comps[0][0]) < min(comps[1][0])

    def test_figure3_composite(self):
        g1 = load_fixture("fig3_g1.graph")
        p2 = load_fixture("p2.graph")
        comp = circ(g1, "u1", p2, "a", v_name="vv")
        comps = components_and_diameters(comp)
        sizes = sorted((len(c), d) for c, d in comps)
        assert sizes == [(1, 0), (4, 3)]
