"""Edge-coloured McKay graphs.

Vertices are the irreducible characters in canonical table order.  An SU(2)
group has one colour (``dim_w == 2``); a subgroup of SU(2) x SU(2) gets colour
1 from ``W1`` and colour 2 from ``W2`` (``dim_w == 4``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .characters import CharacterError, CharacterTable, natural_character, snap
from .groups import SU2, FiniteSubgroup


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Vertex:
    id: int
    dim: int
    parity: int | None
    trivial: bool


@dataclass(eq=False)
class McKayGraph:
    vertices: list[Vertex]
    dim_w: int
    colors: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.vertices)
        for k, m in self.colors.items():
            m = np.asarray(m, dtype=np.int64)
            if m.shape != (n, n):
                raise GraphError(f"colour {k} matrix has shape {m.shape}, expected {(n, n)}")
            if not np.array_equal(m, m.T):
                raise GraphError(f"colour {k} multiplicities are not symmetric")
            if np.any(m < 0):
                raise GraphError("negative multiplicity")
            m.setflags(write=False)
            self.colors[k] = m

    def __len__(self):
        return len(self.vertices)

    @property
    def dims(self) -> np.ndarray:
        return np.array([v.dim for v in self.vertices], dtype=np.int64)

    def adjacency(self, color: int | None = None) -> np.ndarray:
        """Multiplicity matrix of one colour, or of all colours summed."""
        n = len(self.vertices)
        if color is not None:
            return self.colors.get(color, np.zeros((n, n), dtype=np.int64))
        total = np.zeros((n, n), dtype=np.int64)
        for m in self.colors.values():
            total = total + m
        return total

    def edges(self):
        """(u, v, color, mult) with u <= v, sorted."""
        out = []
        for k in sorted(self.colors):
            m = self.colors[k]
            u, v = np.nonzero(np.triu(m))
            out.extend((int(a), int(b), k, int(m[a, b])) for a, b in zip(u, v))
        return sorted(out)

    @property
    def trivial_vertices(self) -> list[int]:
        return [i for i, v in enumerate(self.vertices) if v.trivial]

    def induced(self, keep) -> "McKayGraph":
        keep = [int(i) for i in keep]
        verts = [Vertex(new, self.vertices[old].dim, self.vertices[old].parity, self.vertices[old].trivial) for new, old in enumerate(keep)]
        cols = {k: m[np.ix_(keep, keep)] for k, m in self.colors.items()}
        return McKayGraph(verts, self.dim_w, cols)


def mckay_graph(g: FiniteSubgroup, table: CharacterTable) -> McKayGraph:
    """Multiplicities n_ij^k = <chi_i, chi_Wk chi_j>, snapped to integers."""
    part = table.partition
    x = table.values
    w = table.class_sizes / table.order
    if g.ambient == SU2:
        factors = {1: natural_character(g, part, 1)}
    else:
        factors = {1: natural_character(g, part, 1), 2: natural_character(g, part, 2)}
    colors = {}
    for k, chi_w in factors.items():
        raw = (x.conj() * w) @ (chi_w[:, None] * x.T)
        try:
            colors[k] = snap(raw)
        except CharacterError as exc:
            raise CharacterError(f"colour {k} multiplicities: {exc}") from exc
        if not np.array_equal(colors[k], colors[k].T):
            raise GraphError(f"colour {k} multiplicities are not symmetric")
    parities = table.parities
    verts = [
        Vertex(i, int(table.degrees[i]), None if parities is None else int(parities[i]), i == table.trivial_row)
        for i in range(len(table))
    ]
    return McKayGraph(verts, 2 if g.ambient == SU2 else 4, colors)


def reduced(graph: McKayGraph) -> McKayGraph:
    """Drop the trivial vertex and its edges."""
    triv = graph.trivial_vertices
    if len(triv) != 1:
        raise GraphError(f"expected one trivial vertex, found {len(triv)}")
    return graph.induced([i for i in range(len(graph)) if i != triv[0]])


def color_subgraph(graph: McKayGraph, k: int) -> McKayGraph:
    """All vertices with only the colour-k edges."""
    if graph.dim_w != 4:
        raise GraphError("colour subgraphs need an SU(2) x SU(2) graph")
    if k not in (1, 2):
        raise GraphError(f"unknown colour {k}")
    return McKayGraph(list(graph.vertices), graph.dim_w, {k: graph.colors[k]})


def parity_bipartition(graph: McKayGraph) -> tuple[set[int], set[int]]:
    """Vertices split by chi(-1) sign; every edge must cross."""
    if any(v.parity is None for v in graph.vertices):
        raise GraphError("parity is undefined (-1 not in the group)")
    plus = {v.id for v in graph.vertices if v.parity == 1}
    minus = {v.id for v in graph.vertices if v.parity == -1}
    for u, v, _, _ in graph.edges():
        if (u in plus) == (v in plus):
            raise GraphError(f"edge {u}-{v} joins equal parities")
    return plus, minus
