"""Closed-form depth and regularity evaluators.

Each evaluator states its hypothesis explicitly and re-verifies it by
default (``trusted=True`` skips the re-check for batch runs).  Conventions
that make the operators total:

* the polynomial ring has one variable per vertex, isolated vertices
  included; each isolated vertex adds 1 to depth and 0 to regularity;
* an edgeless graph has depth equal to its vertex count and regularity 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cm import is_cm_bipartite
from .glue import _require_leaf
from .graphs import Graph, delete_vertices
from .invariants import induced_matching_number


class HypothesisError(ValueError):
    """The graph does not satisfy the evaluator's hypothesis."""


@dataclass(frozen=True)
class AlgebraicValues:
    depth: int
    reg: int
    provenance: str


def _check_cm(g: Graph, trusted: bool, who: str):
    if not trusted and not is_cm_bipartite(g):
        raise HypothesisError(f"{who}: graph is not Cohen-Macaulay bipartite")


def cm_values(g: Graph, trusted: bool = False) -> AlgebraicValues:
    """depth = |V|/2 and reg = induced matching number, for C-M bipartite g."""
    _check_cm(g, trusted, "cm_values")
    return AlgebraicValues(
        depth=g.n_vertices // 2,
        reg=induced_matching_number(g),
        provenance="cm-bipartite",
    )


def path_values(n: int) -> AlgebraicValues:
    """Closed form for the path on n >= 2 vertices."""
    if n < 2:
        raise HypothesisError("path formula needs n >= 2")
    return AlgebraicValues(
        depth=math.ceil(n / 3),
        reg=(n + 1) // 3,
        provenance="path",
    )


def leaf_delete_values(g: Graph, u: str, trusted: bool = False) -> AlgebraicValues:
    """Values for G minus a leaf u of a C-M bipartite graph G.

    Depth drops by 1 exactly when the support has degree >= 2; regularity
    drops by 1 exactly when deleting the support lowers the induced matching
    number.
    """
    _check_cm(g, trusted, "leaf_delete_values")
    v = _require_leaf(g, u)
    depth = g.n_vertices // 2
    if g.degree(v) >= 2:
        depth -= 1
    reg = induced_matching_number(g)
    if induced_matching_number(delete_vertices(g, [v])) != reg:
        reg -= 1
    return AlgebraicValues(depth=depth, reg=reg, provenance="leaf-deletion")


def _support_drop_count(g1: Graph, u1: str, g2: Graph, u2: str) -> int:
    """t = number of operands whose theta drops when the support is deleted."""
    t = 0
    for g, u in ((g1, u1), (g2, u2)):
        v = _require_leaf(g, u)
        if induced_matching_number(delete_vertices(g, [v])) != induced_matching_number(g):
            t += 1
    return t


def circ_values(
    g1: Graph, u1: str, g2: Graph, u2: str, trusted: bool = False
) -> AlgebraicValues:
    """Values for the support-identifying gluing of two C-M bipartite graphs."""
    _check_cm(g1, trusted, "circ_values(g1)")
    _check_cm(g2, trusted, "circ_values(g2)")
    v1 = _require_leaf(g1, u1)
    v2 = _require_leaf(g2, u2)
    s = 1 if (g1.degree(v1) == 1 and g2.degree(v2) == 1) else 2
    t = _support_drop_count(g1, u1, g2, u2)
    return AlgebraicValues(
        depth=g1.n_vertices // 2 + g2.n_vertices // 2 - s,
        reg=induced_matching_number(g1) + induced_matching_number(g2) - t,
        provenance="circ",
    )


def star_values(
    g1: Graph, u1: str, g2: Graph, u2: str, trusted: bool = False
) -> AlgebraicValues:
    """Values for the leaf-identifying gluing of two C-M bipartite graphs."""
    _check_cm(g1, trusted, "star_values(g1)")
    _check_cm(g2, trusted, "star_values(g2)")
    _require_leaf(g1, u1)
    _require_leaf(g2, u2)
    t = _support_drop_count(g1, u1, g2, u2)
    s = 1 if t == 2 else 0
    return AlgebraicValues(
        depth=g1.n_vertices // 2 + g2.n_vertices // 2 - 1,
        reg=induced_matching_number(g1) + induced_matching_number(g2) - s,
        provenance="star",
    )


def clique_sum_p2_depth(g1: Graph, u: str, trusted: bool = False) -> int:
    """Depth is unchanged by attaching a pendant edge at a leaf."""
    _check_cm(g1, trusted, "clique_sum_p2_depth")
    _require_leaf(g1, u)
    return g1.n_vertices // 2
