"""Graph surgeries: leaf deletion, the two gluing operations, pendant edges.

All operations are pure functions over immutable graphs.  Vertex-name
disjointness of the two operands is the caller's burden; the CLI prefixes
names with "g1." / "g2." before gluing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, delete_vertices


@dataclass(frozen=True)
class LeafSite:
    leaf: str
    support: str  # the unique neighbor of the leaf


def leaf_sites(g: Graph) -> list[LeafSite]:
    """All degree-1 vertices with their supports, sorted by leaf name."""
    sites = []
    for v in sorted(g.vertices):
        ns = g.neighbors(v)
        if len(ns) == 1:
            sites.append(LeafSite(v, next(iter(ns))))
    return sites


def _require_leaf(g: Graph, u: str) -> str:
    ns = g.neighbors(u)
    if len(ns) != 1:
        raise GraphError(f"{u!r} is not a leaf (degree {len(ns)})")
    return next(iter(ns))


def delete_leaf(g: Graph, u: str) -> Graph:
    """Remove a leaf; its support stays (possibly becoming isolated)."""
    _require_leaf(g, u)
    return delete_vertices(g, [u])


def _check_disjoint(g1: Graph, g2: Graph):
    overlap = set(g1.vertices) & set(g2.vertices)
    if overlap:
        raise GraphError(f"operand vertex names collide: {sorted(overlap)}")


def circ(g1: Graph, u1: str, g2: Graph, u2: str, v_name: str = "v") -> Graph:
    """Delete the leaves u1, u2 and identify their supports into v_name."""
    v1 = _require_leaf(g1, u1)
    v2 = _require_leaf(g2, u2)
    _check_disjoint(g1, g2)
    if v_name in g1.vertices or v_name in g2.vertices:
        raise GraphError(f"merged vertex name {v_name!r} is not fresh")
    vertices = (
        [v for v in g1.vertices if v not in (u1, v1)]
        + [v_name]
        + [v for v in g2.vertices if v not in (u2, v2)]
    )
    edges = set()
    for a, b in g1.edges | g2.edges:
        if u1 in (a, b) or u2 in (a, b):
            continue
        a2 = v_name if a in (v1, v2) else a
        b2 = v_name if b in (v1, v2) else b
        edges.add(tuple(sorted((a2, b2))))
    return Graph(tuple(vertices), frozenset(edges))


def star_glue(g1: Graph, u1: str, g2: Graph, u2: str, u_name: str = "u") -> Graph:
    """Identify the leaves u1 and u2 into a single degree-2 vertex."""
    v1 = _require_leaf(g1, u1)
    v2 = _require_leaf(g2, u2)
    _check_disjoint(g1, g2)
    if u_name in g1.vertices or u_name in g2.vertices:
        raise GraphError(f"merged vertex name {u_name!r} is not fresh")
    vertices = (
        [v for v in g1.vertices if v != u1]
        + [u_name]
        + [v for v in g2.vertices if v != u2]
    )
    edges = {e for e in g1.edges | g2.edges if u1 not in e and u2 not in e}
    edges.add(tuple(sorted((u_name, v1))))
    edges.add(tuple(sorted((u_name, v2))))
    return Graph(tuple(vertices), frozenset(edges))


def clique_sum_p2(g1: Graph, u: str, new_vertex: str = "p") -> Graph:
    """Attach a pendant edge {u, new_vertex}."""
    if u not in g1.vertices:
        raise GraphError(f"unknown vertex {u!r}")
    if new_vertex in g1.vertices:
        raise GraphError(f"vertex name {new_vertex!r} is not fresh")
    return Graph(
        g1.vertices + (new_vertex,),
        g1.edges | {tuple(sorted((u, new_vertex)))},
    )


def p2_operand_warnings(g1: Graph, u1: str, g2: Graph, u2: str) -> list[str]:
    """Flags for gluing sites the operation definition nominally excludes.

    The definition asks for supports of degree >= 2 and non-P2 operands, but
    the depth/regularity statements handle (and the worked examples use) the
    degree-1 case, so the operations accept it and report it here instead.
    """
    warnings = []
    for tag, (g, u) in (("g1", (g1, u1)), ("g2", (g2, u2))):
        v = _require_leaf(g, u)
        if g.degree(v) == 1:
            warnings.append(f"{tag}: support {v!r} has degree 1")
        if g.n_vertices == 2:
            warnings.append(f"{tag}: operand is a single edge")
    return warnings
