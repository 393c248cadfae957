import pytest

from eideal.cm import random_cm_graph
from eideal.glue import (
    LeafSite,
    circ,
    clique_sum_p2,
    delete_leaf,
    leaf_sites,
    p2_operand_warnings,
    star_glue,
)
from eideal.graphs import (
    GraphError,
    bipartition,
    components_and_diameters,
    cycle_graph,
    parse_graph,
    path_graph,
    relabel,
)
from eideal.oracle import hochster_betti


def _is_path(g, n):
    comps = components_and_diameters(g)
    return (
        g.n_vertices == n
        and g.n_edges == n - 1
        and len(comps) == 1
        and comps[0][1] == n - 1
    )


class TestLeafSites:
    def test_p2_both_ends(self, p2):
        assert leaf_sites(p2) == [LeafSite("a", "b"), LeafSite("b", "a")]

    def test_c4_none(self, c4):
        assert leaf_sites(c4) == []

    def test_fig4_g2(self, fig4_g2):
        assert leaf_sites(fig4_g2) == [
            LeafSite("u2", "v2"),
            LeafSite("y21", "x21"),
            LeafSite("y22", "x22"),
        ]


class TestDeleteLeaf:
    def test_p2(self, p2):
        g = delete_leaf(p2, "a")
        assert g.n_vertices == 1 and g.n_edges == 0

    def test_p4(self, p4):
        g = delete_leaf(p4, "a")
        assert _is_path(g, 3)

    def test_fig4_g2(self, fig4_g2):
        g = delete_leaf(fig4_g2, "u2")
        assert g.n_vertices == 5 and g.n_edges == 4

    def test_non_leaf_rejected(self, p4):
        with pytest.raises(GraphError, match="not a leaf"):
            delete_leaf(p4, "b")


class TestCirc:
    def test_figure3(self, fig3_g1, p2):
        g = circ(fig3_g1, "u1", p2, "a", v_name="vv")
        comps = components_and_diameters(g)
        assert sorted((len(c), d) for c, d in comps) == [(1, 0), (4, 3)]

    def test_figure4(self, fig4_g1, fig4_g2):
        g2 = relabel(fig4_g2, {v: f"b.{v}" for v in fig4_g2.vertices})
        g = circ(fig4_g1, "u1", g2, "b.u2", v_name="vv")
        assert g.n_vertices == 7 and g.n_edges == 6
        assert g.degree("vv") == 3

    def test_two_p3_gives_p3(self):
        a = path_graph(3, prefix="a")  # a1-a2-a3, leaf a1 with support a2
        b = path_graph(3, prefix="b")
        g = circ(a, "a1", b, "b1", v_name="vv")
        assert _is_path(g, 3)

    def test_count_identities(self):
        for sa in range(3):
            a = random_cm_graph(3, 0.5, sa)
            a = relabel(a, {v: f"a.{v}" for v in a.vertices})
            b = random_cm_graph(2, 0.5, sa + 100)
            b = relabel(b, {v: f"b.{v}" for v in b.vertices})
            ua = leaf_sites(a)[0].leaf
            ub = leaf_sites(b)[0].leaf
            g = circ(a, ua, b, ub, v_name="vv")
            assert g.n_vertices == a.n_vertices + b.n_vertices - 3
            assert g.n_edges == a.n_edges + b.n_edges - 2
            assert bipartition(g) is not None

    def test_name_collision_rejected(self, p4):
        with pytest.raises(GraphError, match="collide"):
            circ(p4, "a", p4, "a", v_name="vv")

    def test_symmetric_up_to_isomorphism(self, fig4_g1, fig4_g2):
        g2 = relabel(fig4_g2, {v: f"b.{v}" for v in fig4_g2.vertices})
        ab = circ(fig4_g1, "u1", g2, "b.u2", v_name="vv")
        ba = circ(g2, "b.u2", fig4_g1, "u1", v_name="vv")
        assert sorted(ab.degree(v) for v in ab.vertices) == sorted(
            ba.degree(v) for v in ba.vertices
        )
        # Betti tables are isomorphism invariants
        assert hochster_betti(ab).entries == hochster_betti(ba).entries


class TestStarGlue:
    def test_p2_star_p2(self):
        a = path_graph(2, prefix="a")
        b = path_graph(2, prefix="b")
        g = star_glue(a, "a1", b, "b1", u_name="uu")
        assert _is_path(g, 3)

    def test_p3_star_p3(self):
        g = star_glue(path_graph(3, "a"), "a1", path_graph(3, "b"), "b1", "uu")
        assert _is_path(g, 5)

    def test_p4_star_p4(self):
        g = star_glue(path_graph(4, "a"), "a1", path_graph(4, "b"), "b1", "uu")
        assert _is_path(g, 7)

    def test_count_identities_and_degree(self, fig3_g1, fig4_g2):
        g = star_glue(fig3_g1, "u1", fig4_g2, "u2", u_name="uu")
        assert g.n_vertices == fig3_g1.n_vertices + fig4_g2.n_vertices - 1
        # both pendant edges survive, rooted at the merged vertex
        assert g.n_edges == fig3_g1.n_edges + fig4_g2.n_edges
        assert g.degree("uu") == 2
        assert bipartition(g) is not None

    def test_symmetric_up_to_isomorphism(self, fig3_g1, fig4_g2):
        ab = star_glue(fig3_g1, "u1", fig4_g2, "u2", "uu")
        ba = star_glue(fig4_g2, "u2", fig3_g1, "u1", "uu")
        assert hochster_betti(ab).entries == hochster_betti(ba).entries


class TestCliqueSumP2:
    def test_p2_pendant(self, p2):
        g = clique_sum_p2(p2, "a", "z")
        assert _is_path(g, 3)

    def test_star_from_p3_center(self):
        g = clique_sum_p2(path_graph(3), "p2", "z")
        assert g.n_vertices == 4
        assert g.degree("p2") == 3

    def test_fig4_g2_pendant(self, fig4_g2):
        g = clique_sum_p2(fig4_g2, "u2", "z")
        assert g.n_vertices == 7 and g.n_edges == 6

    def test_errors(self, p2):
        with pytest.raises(GraphError, match="unknown"):
            clique_sum_p2(p2, "zzz", "w")
        with pytest.raises(GraphError, match="not fresh"):
            clique_sum_p2(p2, "a", "b")


class TestWarnings:
    def test_degree_one_support_flagged(self, fig3_g1, p2):
        warns = p2_operand_warnings(fig3_g1, "u1", p2, "a")
        assert any("g1" in w for w in warns)  # v1 has degree 1 in fig3_g1
        assert any("single edge" in w for w in warns)

    def test_clean_sites_produce_no_warnings(self, fig4_g1, fig4_g2):
        g2 = relabel(fig4_g2, {v: f"b.{v}" for v in fig4_g2.vertices})
        assert p2_operand_warnings(fig4_g1, "u1", g2, "b.u2") == []
