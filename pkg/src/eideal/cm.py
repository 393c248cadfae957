"""Cohen-Macaulay bipartite graphs via the poset-labeling characterization.

A bipartite graph without isolated vertices is C-M exactly when its parts
have equal size n and the vertices can be labeled x_1..x_n, y_1..y_n so that
(1) {x_i, y_i} is an edge for every i, (2) edges only go upward (i <= j),
and (3) the edge relation is transitive.  Equivalently: some perfect
matching pairs the sides so that the "x_p sees y_q" relation on pairs is a
partial order.  Recognition enumerates perfect matchings exhaustively; the
intended scale is small and correctness is immediate.

Random generation goes the other way: a random DAG, its reflexive-transitive
closure, and the bipartite graph of the resulting poset.  The generator is
Python's ``random.Random`` (Mersenne Twister), so corpora are reproducible
from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bipartition


@dataclass(frozen=True)
class CMLabeling:
    """Certificate: matched pairs in label order plus the edge relation."""

    pairs: tuple[tuple[str, str], ...]  # (x_i, y_i), 1-based by position
    order_relation: frozenset[tuple[int, int]]  # (i, j) <=> edge {x_i, y_j}

    def check(self, g: Graph) -> bool:
        n = len(self.pairs)
        rel = self.order_relation
        for i in range(1, n + 1):
            if (i, i) not in rel:
                return False
        for i, j in rel:
            if not (1 <= i <= j <= n):
                return False
            if not g.has_edge(self.pairs[i - 1][0], self.pairs[j - 1][1]):
                return False
        # relation covers every edge
        edge_count = sum(1 for _ in rel)
        if edge_count != g.n_edges:
            return False
        for i, j in rel:
            for j2, k in rel:
                if j2 == j and i < j < k and (i, k) not in rel:
                    return False
        return True


def _perfect_matchings(g: Graph, xs: list[str], ys: list[str]):
    """Yield perfect matchings as dicts x -> y, in lexicographic order."""
    n = len(xs)

    def rec(i: int, taken: set[str], current: dict[str, str]):
        if i == n:
            yield dict(current)
            return
        x = xs[i]
        for y in sorted(g.neighbors(x)):
            if y in taken:
                continue
            taken.add(y)
            current[x] = y
            yield from rec(i + 1, taken, current)
            del current[x]
            taken.discard(y)

    yield from rec(0, set(), {})


def find_cm_labeling(g: Graph) -> Optional[CMLabeling]:
    """A certificate labeling if g is C-M bipartite, else None."""
    if g.n_vertices == 0:
        return None
    if any(g.degree(v) == 0 for v in g.vertices):
        return None
    bip = bipartition(g)
    if bip is None:
        return None
    xs, ys = sorted(bip.part_x), sorted(bip.part_y)
    if len(xs) != len(ys):
        return None
    n = len(xs)
    for matching in _perfect_matchings(g, xs, ys):
        partner = {y: x for x, y in matching.items()}
        # relation on pairs, indexed by position of x in xs
        rel = set()
        ok = True
        for p, x in enumerate(xs):
            for y in g.neighbors(x):
                rel.add((p, xs.index(partner[y])))
        # antisymmetry
        for p, q in rel:
            if p != q and (q, p) in rel:
                ok = False
                break
        if ok:
            # transitivity
            for p, q in rel:
                if not ok:
                    break
                for q2, r in rel:
                    if q2 == q and (p, r) not in rel:
                        ok = False
                        break
        if not ok:
            continue
        order = _lex_topological_order(n, rel, xs)
        pos = {old: new for new, old in enumerate(order)}
        pairs = tuple((xs[old], matching[xs[old]]) for old in order)
        relation = frozenset((pos[p] + 1, pos[q] + 1) for p, q in rel)
        return CMLabeling(pairs, relation)
    return None


def _lex_topological_order(n: int, rel: set[tuple[int, int]], xs: list[str]) -> list[int]:
    """Linear extension choosing the lex-least available x-vertex each step."""
    preds: dict[int, set[int]] = {i: set() for i in range(n)}
    for p, q in rel:
        if p != q:
            preds[q].add(p)
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        ready = [i for i in range(n) if i not in placed and preds[i] <= placed]
        pick = min(ready, key=lambda i: xs[i])
        order.append(pick)
        placed.add(pick)
    return order


def is_cm_bipartite(g: Graph) -> bool:
    return find_cm_labeling(g) is not None


class PosetError(ValueError):
    """The supplied relation is not a partial order."""


def poset_to_graph(order_relation: set[tuple[int, int]], n: int | None = None) -> Graph:
    """Bipartite graph of a poset on [n]: edge {x_i, y_j} iff i <= j in it.

    The relation is validated (reflexive closure is taken automatically,
    antisymmetry and transitivity are required) and the elements are
    relabeled by a topological order, so the output always carries a valid
    upward labeling.
    """
    if n is None:
        n = max((max(i, j) for i, j in order_relation), default=0)
    if n < 1:
        raise PosetError("poset must have at least one element")
    rel = {(i, j) for i, j in order_relation}
    for i, j in rel:
        if not (1 <= i <= n and 1 <= j <= n):
            raise PosetError(f"element out of range: {(i, j)}")
    rel |= {(i, i) for i in range(1, n + 1)}
    for i, j in rel:
        if i != j and (j, i) in rel:
            raise PosetError(f"antisymmetry violated by {(i, j)}")
    for i, j in rel:
        for j2, k in rel:
            if j2 == j and (i, k) not in rel:
                raise PosetError(f"transitivity violated: {(i, j)} and {(j, k)}")
    # topological relabeling so that (i, j) in the relation implies i <= j
    preds: dict[int, set[int]] = {i: set() for i in range(1, n + 1)}
    for i, j in rel:
        if i != j:
            preds[j].add(i)
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < n:
        pick = min(i for i in range(1, n + 1) if i not in placed and preds[i] <= placed)
        order.append(pick)
        placed.add(pick)
    pos = {old: new + 1 for new, old in enumerate(order)}
    width = len(str(n))
    xs = [f"x{str(i).zfill(width)}" for i in range(1, n + 1)]
    ys = [f"y{str(i).zfill(width)}" for i in range(1, n + 1)]
    edges = [(xs[pos[i] - 1], ys[pos[j] - 1]) for i, j in rel]
    return Graph.build(xs + ys, edges)


def random_cm_graph(n_pairs: int, density: float, seed: int) -> Graph:
    """A random C-M bipartite graph with n_pairs matched pairs.

    Each forward pair (i, j) with i < j joins a random DAG with probability
    ``density``; the reflexive-transitive closure of that DAG is the poset
    fed to :func:`poset_to_graph`.  Deterministic for a fixed seed.
    """
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    rel = {(i, i) for i in range(1, n_pairs + 1)}
    for i in range(1, n_pairs + 1):
        for j in range(i + 1, n_pairs + 1):
            if rng.random() < density:
                rel.add((i, j))
    # transitive closure (relation is acyclic by construction)
    changed = True
    while changed:
        changed = False
        for i, j in list(rel):
            for j2, k in list(rel):
                if j2 == j and (i, k) not in rel:
                    rel.add((i, k))
                    changed = True
    return poset_to_graph(rel, n_pairs)
