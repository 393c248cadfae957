"""Finite simple graphs with named vertices.

Graphs are immutable values: every operation returns a new graph.  Vertex
names are opaque strings; all tie-breaking is lexicographic on names so that
results are reproducible across runs and platforms.  Isolated vertices are
allowed (the gluing constructions produce them routinely).
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

_NAME_RE = re.compile(r"^[A-Za-z0-9_.]+$")


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class GraphParseError(GraphError):
    """Syntax or consistency error in a graph file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: ordered vertex names plus unordered edges."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]  # each edge stored as a sorted pair

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        for e in self.edges:
            a, b = e
            if a == b:
                raise GraphError(f"loop at {a!r}")
            if (a, b) != tuple(sorted(e)):
                raise GraphError(f"edge {e!r} not stored as sorted pair")
            if a not in seen or b not in seen:
                raise GraphError(f"edge {e!r} references undeclared vertex")

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        norm = frozenset(tuple(sorted(e)) for e in edges)
        return cls(tuple(vertices), norm)

    @cached_property
    def _adjacency(self) -> dict[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def closed_neighborhood(self, v: str) -> frozenset[str]:
        return self.neighbors(v) | {v}

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: str, b: str) -> bool:
        return tuple(sorted((a, b))) in self.edges

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Bipartition:
    """A two-coloring certificate of a bipartite graph."""

    part_x: frozenset[str]
    part_y: frozenset[str]

    def is_valid_for(self, g: Graph) -> bool:
        if self.part_x & self.part_y:
            return False
        if self.part_x | self.part_y != set(g.vertices):
            return False
        return all(
            (a in self.part_x) != (b in self.part_x) for a, b in g.edges
        )


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph file format.

    Lines: ``# comment``, blank, ``v <name>``, ``e <name> <name>``.  All
    ``v`` lines must precede the ``e`` lines that reference them.
    """
    vertices: list[str] = []
    vset: set[str] = set()
    edges: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 2:
                raise GraphParseError("expected 'v <name>'", lineno)
            name = parts[1]
            if not _NAME_RE.match(name):
                raise GraphParseError(f"bad vertex name {name!r}", lineno)
            if name in vset:
                raise GraphParseError(f"duplicate vertex {name!r}", lineno)
            vertices.append(name)
            vset.add(name)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphParseError("expected 'e <name> <name>'", lineno)
            a, b = parts[1], parts[2]
            if a == b:
                raise GraphParseError(f"loop at {a!r}", lineno)
            for name in (a, b):
                if name not in vset:
                    raise GraphParseError(f"edge references undeclared vertex {name!r}", lineno)
            e = tuple(sorted((a, b)))
            if e in edges:
                raise GraphParseError(f"duplicate edge {a!r} {b!r}", lineno)
            edges.add(e)
        else:
            raise GraphParseError(f"unknown directive {parts[0]!r}", lineno)
    return Graph(tuple(vertices), frozenset(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical text form: v lines in vertex order, then sorted e lines."""
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {a} {b}" for a, b in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-color by BFS per component; None if any component has an odd cycle.

    The lexicographically-first vertex of each component lands in part_x.
    """
    color: dict[str, int] = {}
    for root in sorted(g.vertices):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    part_x = frozenset(v for v, c in color.items() if c == 0)
    part_y = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(part_x, part_y)


def odd_closed_walk(g: Graph) -> Optional[list[str]]:
    """A witness odd closed walk when g is not bipartite, else None."""
    color: dict[str, int] = {}
    parent: dict[str, Optional[str]] = {}
    for root in sorted(g.vertices):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    up, wp = [], []
                    a: Optional[str] = u
                    while a is not None:
                        up.append(a)
                        a = parent[a]
                    a = w
                    while a is not None:
                        wp.append(a)
                        a = parent[a]
                    # u -> root -> w -> u; drop the duplicated root when
                    # joining the two tree paths.  Equal colors mean equal
                    # depth parity, so the edge count is odd.
                    return up + wp[::-1][1:] + [u]
    return None


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep_set = set(keep)
    unknown = keep_set - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    vertices = tuple(v for v in g.vertices if v in keep_set)
    edges = frozenset(e for e in g.edges if e[0] in keep_set and e[1] in keep_set)
    return Graph(vertices, edges)


def delete_vertices(g: Graph, drop: Iterable[str]) -> Graph:
    drop_set = set(drop)
    return induced_subgraph(g, [v for v in g.vertices if v not in drop_set])


def components_and_diameters(g: Graph) -> list[tuple[frozenset[str], int]]:
    """Connected components with diameters, ordered by least vertex.

    An isolated vertex has diameter 0.
    """
    seen: set[str] = set()
    comps: list[set[str]] = []
    for root in sorted(g.vertices):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        seen.add(root)
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    out = []
    for comp in sorted(comps, key=min):
        diam = 0
        for src in comp:
            dist = {src: 0}
            queue = deque([src])
            while queue:
                u = queue.popleft()
                for w in g.neighbors(u):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            diam = max(diam, max(dist.values()))
        out.append((frozenset(comp), diam))
    return out


def is_connected(g: Graph) -> bool:
    return len(components_and_diameters(g)) <= 1


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    overlap = set(g1.vertices) & set(g2.vertices)
    if overlap:
        raise GraphError(f"vertex names shared between operands: {sorted(overlap)}")
    return Graph(g1.vertices + g2.vertices, g1.edges | g2.edges)


def relabel(g: Graph, mapping: dict[str, str]) -> Graph:
    """Rename vertices; mapping must be injective on V(g)."""
    new_names = [mapping.get(v, v) for v in g.vertices]
    if len(set(new_names)) != len(new_names):
        raise GraphError("relabeling is not injective")
    for name in new_names:
        if not _NAME_RE.match(name):
            raise GraphError(f"bad vertex name {name!r}")
    edges = frozenset(
        tuple(sorted((mapping.get(a, a), mapping.get(b, b)))) for a, b in g.edges
    )
    return Graph(tuple(new_names), edges)


def path_graph(n: int, prefix: str = "p") -> Graph:
    """The path on n vertices p1 - p2 - ... - pn."""
    if n < 1:
        raise GraphError("path needs at least one vertex")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[i + 1]) for i in range(n - 1)]
    return Graph.build(names, edges)


def cycle_graph(n: int, prefix: str = "c") -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(names[i], names[(i + 1) % n]) for i in range(n)]
    return Graph.build(names, edges)
