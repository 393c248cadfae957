"""Exact combinatorial graph invariants.

Everything here is exact: bipartite matching uses augmenting paths, the rest
are pruned exhaustive searches over bitmask-encoded vertex/edge sets.  The
intended scale is graphs with at most ~24 vertices.  Search orderings break
ties lexicographically by vertex name so results are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, bipartition, components_and_diameters, is_connected


@dataclass(frozen=True)
class InvariantReport:
    alpha: int  # matching number
    beta: int  # minimum maximal matching number
    theta: int  # induced matching number
    gamma: int  # star packing number
    indep: int  # independence number
    cover: int  # minimum vertex cover size


def _bit_encode(g: Graph) -> tuple[list[str], list[int]]:
    """Vertices in lexicographic order plus adjacency bitmasks."""
    names = sorted(g.vertices)
    index = {v: i for i, v in enumerate(names)}
    adj = [0] * len(names)
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    return names, adj


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _sorted_edges(g: Graph) -> list[tuple[str, str]]:
    return sorted(g.edges)


def matching_number(g: Graph) -> int:
    """alpha(G): size of a maximum matching."""
    bip = bipartition(g)
    if bip is not None:
        return _bipartite_matching(g, sorted(bip.part_x))
    return _matching_bnb(g)


def _bipartite_matching(g: Graph, left: list[str]) -> int:
    match: dict[str, str] = {}  # right vertex -> left vertex

    def augment(u: str, visited: set[str]) -> bool:
        for w in sorted(g.neighbors(u)):
            if w in visited:
                continue
            visited.add(w)
            if w not in match or augment(match[w], visited):
                match[w] = u
                return True
        return False

    size = 0
    for u in left:
        if augment(u, set()):
            size += 1
    return size


def _matching_bnb(g: Graph) -> int:
    names, _ = _bit_encode(g)
    index = {v: i for i, v in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in _sorted_edges(g)]
    best = 0

    def rec(i: int, used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (len(edges) - i) <= best:
            return
        for k in range(i, len(edges)):
            a, b = edges[k]
            bit = (1 << a) | (1 << b)
            if used & bit:
                continue
            rec(k + 1, used | bit, size + 1)

    rec(0, 0, 0)
    return best


def min_maximal_matching_number(g: Graph) -> int:
    """beta(G): smallest inclusion-maximal matching.

    The empty edge set gives beta = 0 (the empty matching is vacuously
    maximal).
    """
    names, _ = _bit_encode(g)
    index = {v: i for i, v in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in _sorted_edges(g)]
    bits = [(1 << a) | (1 << b) for a, b in edges]
    best = len(edges)

    if not edges:
        return 0

    def rec(i: int, used: int, size: int):
        nonlocal best
        if size >= best:
            return
        if i == len(edges):
            # maximal iff every edge touches a matched vertex
            if all(used & eb for eb in bits):
                best = size
            return
        eb = bits[i]
        if used & eb:
            rec(i + 1, used, size)
            return
        rec(i + 1, used | eb, size + 1)
        rec(i + 1, used, size)

    rec(0, 0, 0)
    return best


def induced_matching_number(g: Graph) -> int:
    """theta(G): largest matching whose vertex set induces no extra edges."""
    names, adj = _bit_encode(g)
    index = {v: i for i, v in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in _sorted_edges(g)]
    # an edge may join an induced matching iff both closed neighborhoods
    # avoid the vertices already picked
    closed = [
        (1 << a) | (1 << b) | adj[a] | adj[b] for a, b in edges
    ]
    ends = [(1 << a) | (1 << b) for a, b in edges]
    best = 0

    def rec(i: int, picked: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (len(edges) - i) <= best:
            return
        for k in range(i, len(edges)):
            if closed[k] & picked:
                continue
            rec(k + 1, picked | ends[k], size + 1)

    rec(0, 0, 0)
    return best


def star_packing_number(g: Graph) -> int:
    """gamma(G): max number of centers with pairwise disjoint N[x]."""
    names, adj = _bit_encode(g)
    n = len(names)
    closed = [adj[i] | (1 << i) for i in range(n)]
    best = 0

    def rec(i: int, used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (n - i) <= best:
            return
        for k in range(i, n):
            if closed[k] & used:
                continue
            rec(k + 1, used | closed[k], size + 1)

    rec(0, 0, 0)
    return best


def independence_number(g: Graph) -> int:
    names, adj = _bit_encode(g)
    n = len(names)

    def mis(mask: int) -> int:
        if mask == 0:
            return 0
        # peel isolated vertices; they always join the independent set
        free = 0
        for v in _bits(mask):
            if adj[v] & mask == 0:
                free += 1
                mask &= ~(1 << v)
        if mask == 0:
            return free
        v = max(_bits(mask), key=lambda x: (bin(adj[x] & mask).count("1"), -x))
        without = mis(mask & ~(1 << v))
        with_v = 1 + mis(mask & ~(adj[v] | (1 << v)))
        return free + max(without, with_v)

    return mis((1 << n) - 1)


def independence_and_cover(g: Graph) -> tuple[int, int]:
    indep = independence_number(g)
    return indep, g.n_vertices - indep


def depth_bounds(g: Graph) -> tuple[int, int, int | None]:
    """(star packing bound, diameter bound, bipartite upper bound).

    lower_star = gamma(G); lower_diam = sum of ceil((d_i + 1) / 3) over
    components; upper is floor(n/2) for connected bipartite graphs, else None.
    """
    lower_star = star_packing_number(g)
    comps = components_and_diameters(g)
    lower_diam = sum(math.ceil((d + 1) / 3) for _, d in comps)
    upper = None
    if g.n_vertices and is_connected(g) and bipartition(g) is not None:
        upper = g.n_vertices // 2
    return lower_star, lower_diam, upper


def invariant_report(g: Graph) -> InvariantReport:
    indep, cover = independence_and_cover(g)
    return InvariantReport(
        alpha=matching_number(g),
        beta=min_maximal_matching_number(g),
        theta=induced_matching_number(g),
        gamma=star_packing_number(g),
        indep=indep,
        cover=cover,
    )
