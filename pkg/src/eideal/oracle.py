"""Ground-truth Betti tables of S/I_G via the independence complex.

The graded Betti number beta_{i,j}(S/I_G) is the sum, over vertex subsets W
of size j, of the rank of reduced homology in degree j - i - 1 of the
independence complex restricted to W.  Projective dimension, depth (through
the Auslander-Buchsbaum relation depth = n - pd) and regularity
(max j - i over nonzero entries) all fall out of the table, independently
of every closed-form formula in this package.

Coefficients are rational, realized through exact integer rank computation;
there is no floating point anywhere.  Subsets whose induced graph has an
isolated vertex are skipped: their independence complex is a cone, hence
has no reduced homology.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Optional

from .graphs import Graph
from .invariants import independence_number
from .linalg import matrix_rank

DEFAULT_CAP = 16
_CAP_ENV = "EIDEAL_MAX_VERTICES"


class OracleCapError(RuntimeError):
    """Vertex count exceeds the configured oracle cap (a resource refusal)."""


def oracle_cap(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(_CAP_ENV)
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension; the empty face is always present."""

    vertices: tuple[str, ...]
    faces: dict[int, tuple[tuple[str, ...], ...]]  # dim -> sorted faces
    has_empty_face: bool = True

    def face_count(self, dim: int) -> int:
        return len(self.faces.get(dim, ()))

    @property
    def top_dimension(self) -> int:
        return max(self.faces, default=-1)


def independence_complex(g: Graph, cap: Optional[int] = None) -> SimplicialComplex:
    """All independent sets of g as a simplicial complex."""
    limit = oracle_cap(cap)
    if g.n_vertices > limit:
        raise OracleCapError(
            f"{g.n_vertices} vertices exceeds the oracle cap {limit}"
        )
    names = sorted(g.vertices)
    n = len(names)
    index = {v: i for i, v in enumerate(names)}
    adj = [0] * n
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    masks = _independent_set_masks(adj, n)
    faces: dict[int, list[tuple[str, ...]]] = {}
    for m in masks:
        face = tuple(names[i] for i in _bits(m))
        faces.setdefault(len(face) - 1, []).append(face)
    return SimplicialComplex(
        tuple(names),
        {d: tuple(sorted(fs)) for d, fs in faces.items()},
    )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _independent_set_masks(adj: list[int], n: int) -> list[int]:
    """Nonempty independent sets as bitmasks."""
    out: list[int] = []

    def rec(start: int, mask: int):
        for v in range(start, n):
            if adj[v] & mask:
                continue
            new = mask | (1 << v)
            out.append(new)
            rec(v + 1, new)

    rec(0, 0)
    return out


def _boundary_rank(lower: list[int], upper: list[int]) -> int:
    """Rank of the boundary map from dimension-d faces to (d-1)-faces."""
    if not lower or not upper:
        return 0
    row_of = {m: r for r, m in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, m in enumerate(upper):
        for k, v in enumerate(_bits(m)):
            rows[row_of[m ^ (1 << v)]][c] = -1 if k & 1 else 1
    return matrix_rank(rows)


def _reduced_ranks(faces_by_dim: dict[int, list[int]]) -> list[int]:
    """Reduced homology ranks [h_{-1}, h_0, h_1, ...] from bitmask faces.

    rank H~_d = f_d - rank d_d - rank d_{d+1}; the boundary of a vertex is
    the empty face, so d_0 has rank 1 whenever a vertex exists.
    """
    if not faces_by_dim.get(0):
        return [1]  # the complex {empty face}
    top = max(faces_by_dim)
    counts = [len(faces_by_dim.get(d, [])) for d in range(top + 1)]
    bd = [0] * (top + 2)
    bd[0] = 1  # augmentation
    for d in range(1, top + 1):
        bd[d] = _boundary_rank(
            faces_by_dim.get(d - 1, []), faces_by_dim.get(d, [])
        )
    ranks = [0]  # h_{-1} = 0 for a nonempty complex
    for d in range(top + 1):
        ranks.append(counts[d] - bd[d] - bd[d + 1])
    return ranks


def reduced_homology_ranks(c: SimplicialComplex) -> list[int]:
    """Ranks of reduced rational homology in degrees -1, 0, 1, ..."""
    index = {v: i for i, v in enumerate(c.vertices)}
    faces_by_dim = {
        d: sorted(sum(1 << index[v] for v in face) for face in fs)
        for d, fs in c.faces.items()
    }
    return _reduced_ranks(faces_by_dim)


def euler_consistent(c: SimplicialComplex, ranks: Optional[list[int]] = None) -> bool:
    """Alternating face-count sum equals alternating homology-rank sum."""
    if ranks is None:
        ranks = reduced_homology_ranks(c)
    chi_faces = sum((-1) ** d * c.face_count(d) for d in range(c.top_dimension + 1))
    h_minus1 = ranks[0]
    chi_hom = sum((-1) ** d * r for d, r in enumerate(ranks[1:]))
    return chi_faces == chi_hom + (1 - h_minus1)


@dataclass(frozen=True)
class BettiTable:
    entries: dict[tuple[int, int], int]
    n: int  # number of ring variables

    @property
    def projective_dimension(self) -> int:
        return max((i for (i, _), b in self.entries.items() if b), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), b in self.entries.items() if b), default=0)

    def to_triples(self) -> list[list[int]]:
        return [[i, j, b] for (i, j), b in sorted(self.entries.items()) if b]


def hochster_betti(g: Graph, cap: Optional[int] = None) -> BettiTable:
    """Graded Betti table of S/I_G by the subset-homology scan."""
    limit = oracle_cap(cap)
    n = g.n_vertices
    if n > limit:
        raise OracleCapError(f"{n} vertices exceeds the oracle cap {limit}")
    names = sorted(g.vertices)
    index = {v: i for i, v in enumerate(names)}
    adj = [0] * n
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    ind_masks = _independent_set_masks(adj, n)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for w in range(1, 1 << n):
        # a vertex isolated inside W cones the restricted complex
        if any(adj[v] & w == 0 for v in _bits(w)):
            continue
        faces_by_dim: dict[int, list[int]] = {}
        for m in ind_masks:
            if m & w == m:
                faces_by_dim.setdefault(m.bit_count() - 1, []).append(m)
        ranks = _reduced_ranks(faces_by_dim)
        j = w.bit_count()
        for d, r in enumerate(ranks[1:]):
            if r:
                key = (j - d - 1, j)
                entries[key] = entries.get(key, 0) + r
    return BettiTable(entries, n)


@dataclass(frozen=True)
class OracleValues:
    depth: int
    reg: int
    pd: int
    dim: int
    betti: BettiTable = field(compare=False)


def oracle_values(g: Graph, cap: Optional[int] = None) -> OracleValues:
    """depth, regularity, projective dimension and Krull dimension of S/I_G."""
    table = hochster_betti(g, cap)
    pd = table.projective_dimension
    return OracleValues(
        depth=g.n_vertices - pd,
        reg=table.regularity,
        pd=pd,
        dim=independence_number(g),
        betti=table,
    )
