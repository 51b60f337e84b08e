"""Simply-laced Dynkin and Euclidean diagrams.

Graphs are symmetric non-negative integer matrices of edge multiplicities
(diagonal entries are loops).  This module holds the catalog, Cartan
matrices, definiteness tests, spectral helpers and the structural detectors
for product and doubled edge-coloured diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.sparse.csgraph import connected_components

from .characters import CharacterError, snap

EIGEN_TOL = 1e-9
RESIDUAL_TOL = 1e-8
RANK_TOL = 1e-6
MAX_POWER_ITERATIONS = 100_000

_MIN_RANK = {"A": 1, "D": 4, "E": 6, "ExtA": 1, "ExtD": 4, "ExtE": 6}


class DiagramError(ValueError):
    pass


class Definiteness(str, Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    INDEFINITE = "indefinite"


@dataclass(frozen=True, order=True)
class DiagramType:
    kind: str
    rank: int = 0

    def __post_init__(self):
        if self.kind == "Other":
            return
        if self.kind not in _MIN_RANK:
            raise DiagramError(f"unknown diagram kind {self.kind!r}")
        if self.rank < _MIN_RANK[self.kind] or (self.kind in ("E", "ExtE") and self.rank > 8):
            raise DiagramError(f"{self.kind}({self.rank}) is out of range")

    def __str__(self):
        return "Other" if self.kind == "Other" else f"{self.kind}({self.rank})"

    @classmethod
    def parse(cls, text: str) -> "DiagramType":
        text = text.strip()
        if text == "Other":
            return OTHER
        kind, _, rest = text.partition("(")
        return cls(kind, int(rest.rstrip(")")))

    @property
    def is_dynkin(self) -> bool:
        return self.kind in ("A", "D", "E")

    @property
    def is_extended(self) -> bool:
        return self.kind.startswith("Ext")

    @property
    def finite_type(self) -> "DiagramType":
        """The Dynkin type left after deleting an extending vertex."""
        if not self.is_extended:
            raise DiagramError(f"{self} is not extended")
        return DiagramType(self.kind[3:], self.rank)

    @property
    def n_vertices(self) -> int:
        return self.rank + 1 if self.is_extended else self.rank


OTHER = DiagramType("Other")


def _graph(n: int, chain_length: int, extra=()) -> np.ndarray:
    """A path on vertices 0..chain_length-1 plus extra edges, on n vertices."""
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(chain_length - 1):
        a[i, i + 1] = a[i + 1, i] = 1
    for u, v in extra:
        a[u, v] += 1
        a[v, u] += 1
    return a


def catalog_graph(t: DiagramType) -> np.ndarray:
    """Adjacency matrix of a catalog diagram in the vertex order used by its null vector."""
    n = t.n_vertices
    kind = t.kind
    if kind == "A":
        return _graph(n, n)
    if kind == "ExtA":
        if t.rank == 1:
            return np.array([[0, 2], [2, 0]], dtype=np.int64)
        return _graph(n, n, [(0, n - 1)])
    if kind == "D":
        # path 0..n-2 with vertex n-1 hanging off n-3
        return _graph(n, n - 1, [(n - 3, n - 1)])
    if kind == "ExtD":
        # leaves 0, 1 | path 2..n-3 | leaves n-2, n-1
        chain = list(range(2, n - 2))
        extra = list(zip(chain, chain[1:])) + [(0, 2), (1, 2), (n - 3, n - 2), (n - 3, n - 1)]
        return _graph(n, 0, extra)
    if kind == "E":
        return _graph(n, n - 1, [(2, n - 1)])
    if t.rank == 6:
        return _graph(n, 5, [(2, 5), (5, 6)])
    if t.rank == 7:
        return _graph(n, 7, [(3, 7)])
    return _graph(n, 8, [(2, 8)])


_NULL_E = {
    6: (1, 2, 3, 2, 1, 2, 1),
    7: (1, 2, 3, 4, 3, 2, 1, 2),
    8: (2, 4, 6, 5, 4, 3, 2, 1, 3),
}


def catalog(max_vertices: int = 12):
    """Every catalog type with at most ``max_vertices`` vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        out.append(DiagramType("A", n))
        if n >= 4:
            out.append(DiagramType("D", n))
    for n in range(1, max_vertices):
        out.append(DiagramType("ExtA", n))
        if n >= 4:
            out.append(DiagramType("ExtD", n))
    out += [DiagramType("E", k) for k in (6, 7, 8) if k <= max_vertices]
    out += [DiagramType("ExtE", k) for k in (6, 7, 8) if k + 1 <= max_vertices]
    return out


def canonical_null_vector(t: DiagramType, adjacency=None) -> np.ndarray:
    """Positive integer null vector (minimum 1) of an extended diagram's Cartan matrix.

    Entries follow the catalog vertex order, or the vertex order of
    ``adjacency`` when given (transported along an isomorphism).
    """
    if not t.is_extended:
        raise DiagramError(f"{t} is not an extended diagram")
    n = t.n_vertices
    if t.kind == "ExtA":
        vec = np.ones(n, dtype=np.int64)
    elif t.kind == "ExtD":
        vec = np.array([1, 1] + [2] * (n - 4) + [1, 1], dtype=np.int64)
    else:
        vec = np.array(_NULL_E[t.rank], dtype=np.int64)
    if adjacency is None:
        return vec
    iso = isomorphism(catalog_graph(t), np.asarray(adjacency))
    if iso is None:
        raise DiagramError(f"graph is not of type {t}")
    out = np.empty(n, dtype=np.int64)
    out[iso] = vec
    return out


def cartan(adjacency) -> np.ndarray:
    """2 I - A for a loop-free multigraph."""
    a = np.asarray(adjacency, dtype=np.int64)
    if np.any(np.diag(a) != 0):
        raise DiagramError("Cartan matrix needs a loop-free graph")
    return 2 * np.eye(len(a), dtype=np.int64) - a


@dataclass(frozen=True)
class EigenResult:
    eigenvalue: float
    vector: np.ndarray


def perron_vector(adjacency) -> EigenResult:
    """Dominant eigenpair of a connected graph, vector scaled to minimum entry 1.

    Power iteration on A + I (the shift removes the -rho eigenvalue of
    bipartite graphs), accelerated by repeated squaring.
    """
    a = np.asarray(adjacency, dtype=float)
    n = len(a)
    if n == 0:
        raise DiagramError("empty graph")
    b = a + np.eye(n)
    p = b / b.max()
    for _ in range(40):
        q = p @ p
        q /= q.max()
        done = np.abs(q - p).max() < 1e-15
        p = q
        if done:
            break
    x = p @ np.ones(n)
    for _ in range(MAX_POWER_ITERATIONS):
        x = x / x.max()
        ax = a @ x
        lam = float(x @ ax / (x @ x))
        if np.abs(ax - lam * x).max() < RESIDUAL_TOL * 1e-2:
            break
        x = b @ x
    else:
        raise DiagramError("power iteration did not converge")
    if np.any(x <= 0):
        raise DiagramError("dominant eigenvector is not positive (graph disconnected?)")
    x = x / x.min()
    if np.abs(a @ x - lam * x).max() >= RESIDUAL_TOL:
        raise DiagramError("dominant eigenpair residual too large")
    return EigenResult(lam, x)


def definiteness_by_eigenvalues(c, tol: float = EIGEN_TOL) -> Definiteness:
    low = float(np.linalg.eigvalsh(np.asarray(c, dtype=float)).min())
    if low > tol:
        return Definiteness.POSITIVE_DEFINITE
    if low >= -tol:
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.INDEFINITE


def definiteness_by_vector(c, tol: float = RESIDUAL_TOL) -> Definiteness:
    """Test the positive witness x (Perron vector of 2I - c): Cx > 0 or Cx = 0."""
    c = np.asarray(c, dtype=np.int64)
    x = perron_vector(2 * np.eye(len(c), dtype=np.int64) - c).vector
    ratio = (c @ x) / x
    if ratio.min() > tol:
        return Definiteness.POSITIVE_DEFINITE
    if np.abs(ratio).max() <= tol:
        return Definiteness.POSITIVE_SEMIDEFINITE
    return Definiteness.INDEFINITE


def definiteness(c) -> Definiteness:
    """Definiteness of a connected Cartan matrix, by eigenvalue signs and by a positive witness."""
    by_eig = definiteness_by_eigenvalues(c)
    by_vec = definiteness_by_vector(c)
    if by_eig != by_vec:
        raise DiagramError(f"definiteness methods disagree: {by_eig.value} vs {by_vec.value}")
    return by_eig


def components(adjacency) -> list[np.ndarray]:
    """Vertex index arrays of connected components, ordered by smallest vertex."""
    a = np.asarray(adjacency)
    n = len(a)
    if n == 0:
        return []
    _, labels = connected_components(a != 0, directed=False)
    _, first = np.unique(labels, return_index=True)
    return [np.flatnonzero(labels == labels[f]) for f in sorted(first)]


def is_connected(adjacency) -> bool:
    return len(components(adjacency)) == 1


def _tree_arms(a: np.ndarray, center: int) -> list[int]:
    arms = []
    for start in np.flatnonzero(a[center]):
        prev, cur, length = center, int(start), 1
        while True:
            nxt = [int(v) for v in np.flatnonzero(a[cur]) if v != prev]
            if len(nxt) != 1:
                break
            prev, cur, length = cur, nxt[0], length + 1
        arms.append(length)
    return sorted(arms)


def _structural_type(a: np.ndarray) -> DiagramType:
    n = len(a)
    if n == 2 and a[0, 1] == 2:
        return DiagramType("ExtA", 1)
    if a.max(initial=0) > 1:
        return OTHER
    deg = a.sum(axis=1)
    m = int(a.sum()) // 2
    if m == n:
        return DiagramType("ExtA", n - 1) if np.all(deg == 2) else OTHER
    if m != n - 1:
        return OTHER
    branch = np.flatnonzero(deg >= 3)
    if len(branch) == 0:
        return DiagramType("A", n)
    if deg.max() > 4:
        return OTHER
    if len(branch) == 1:
        c = int(branch[0])
        if deg[c] == 4:
            return DiagramType("ExtD", 4) if n == 5 else OTHER
        arms = _tree_arms(a, c)
        if arms[:2] == [1, 1]:
            return DiagramType("D", n)
        named = {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7), (1, 2, 4): ("E", 8),
                 (2, 2, 2): ("ExtE", 6), (1, 3, 3): ("ExtE", 7), (1, 2, 5): ("ExtE", 8)}
        hit = named.get(tuple(arms))
        return DiagramType(*hit) if hit else OTHER
    if len(branch) == 2 and np.all(deg[branch] == 3):
        leaves = [sum(1 for v in np.flatnonzero(a[b]) if deg[v] == 1) for b in branch]
        if leaves == [2, 2]:
            return DiagramType("ExtD", n - 1)
    return OTHER


def classify(adjacency) -> DiagramType:
    """Catalog type of a connected multigraph, cross-checked against definiteness.

    Graphs with loops are classified as Other.
    """
    a = np.asarray(adjacency, dtype=np.int64)
    if len(a) == 0:
        return OTHER
    if not np.array_equal(a, a.T):
        raise DiagramError("adjacency matrix is not symmetric")
    if not is_connected(a):
        raise DiagramError("classify needs a connected graph")
    if np.any(np.diag(a) != 0):
        return OTHER
    t = _structural_type(a)
    d = definiteness(cartan(a))
    expected = (
        Definiteness.POSITIVE_DEFINITE if t.is_dynkin
        else Definiteness.POSITIVE_SEMIDEFINITE if t.is_extended
        else Definiteness.INDEFINITE
    )
    if d != expected:
        raise DiagramError(f"structural type {t} but Cartan matrix is {d.value}")
    return t


def classify_components(adjacency) -> list[tuple[np.ndarray, DiagramType]]:
    a = np.asarray(adjacency)
    return [(comp, classify(a[np.ix_(comp, comp)])) for comp in components(a)]


def isomorphism(a, b) -> np.ndarray | None:
    """Vertex map f with b[f[i], f[j]] == a[i, j], by pruned backtracking; None if none exists."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    n = len(a)
    if b.shape != a.shape:
        return None
    sig_a = [(int(a[i].sum()), int(a[i, i]), tuple(sorted(a[i]))) for i in range(n)]
    sig_b = [(int(b[i].sum()), int(b[i, i]), tuple(sorted(b[i]))) for i in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    # visit a's vertices in BFS order from the rarest signature
    counts = {s: sig_a.count(s) for s in sig_a}
    order, seen = [], set()
    for root in sorted(range(n), key=lambda i: (counts[sig_a[i]], i)):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in np.flatnonzero(a[v]):
                if int(w) not in seen:
                    seen.add(int(w))
                    queue.append(int(w))
    f = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        mapped = order[:pos]
        for w in range(n):
            if used[w] or sig_b[w] != sig_a[v]:
                continue
            if any(b[w, f[u]] != a[v, u] for u in mapped):
                continue
            f[v] = w
            used[w] = True
            if extend(pos + 1):
                return True
            used[w] = False
        f[v] = -1
        return False

    return f if extend(0) else None


def eigenspace_dim(adjacency, lam: float, tol: float | None = None) -> int:
    """Number of singular values of A - lam I below ``tol``."""
    tol = RANK_TOL if tol is None else tol
    a = np.asarray(adjacency, dtype=float)
    if len(a) == 0:
        return 0
    s = np.linalg.svd(a - lam * np.eye(len(a)), compute_uv=False)
    return int(np.sum(s < tol))


def positive_eigenvector(adjacency, lam: float, tol: float | None = None) -> np.ndarray:
    """The positive eigenvector at ``lam`` (one-dimensional eigenspace), minimum entry 1."""
    tol = RANK_TOL if tol is None else tol
    a = np.asarray(adjacency, dtype=float)
    _, s, vt = np.linalg.svd(a - lam * np.eye(len(a)))
    if int(np.sum(s < tol)) != 1:
        raise DiagramError(f"eigenspace at {lam} is not one-dimensional")
    x = vt[-1]
    x = x if x.sum() > 0 else -x
    if np.any(x <= 0):
        raise DiagramError(f"eigenvector at {lam} is not positive")
    return x / x.min()


def order_from_diagram(adjacency, dim_w: int, tol: float | None = None) -> int:
    """Sum of squares of the integer eigenvector at dim_w scaled to minimum 1."""
    tol = RANK_TOL if tol is None else tol
    x = positive_eigenvector(adjacency, dim_w, tol)
    try:
        labels = snap(x, tol)
    except CharacterError as exc:
        raise DiagramError(f"eigenvector labels are not integral: {exc}") from exc
    return int((labels**2).sum())


def bipartition(adjacency) -> tuple[list[int], list[int]] | None:
    """A proper 2-colouring as (side 0, side 1), or None if an odd cycle exists."""
    a = np.asarray(adjacency)
    n = len(a)
    color = np.full(n, -1)
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in np.flatnonzero(a[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(int(w))
                elif color[w] == color[v]:
                    return None
    return [int(i) for i in np.flatnonzero(color == 0)], [int(i) for i in np.flatnonzero(color == 1)]


@dataclass(frozen=True)
class ProductDecomposition:
    first: DiagramType
    second: DiagramType
    first_vertices: list[int]
    second_vertices: list[int]
    bijection: dict[int, tuple[int, int]]


def _labels(adjacency) -> np.ndarray:
    _, labels = connected_components(np.asarray(adjacency) != 0, directed=False)
    return labels


def detect_product(graph) -> ProductDecomposition | None:
    """Factor an edge-coloured graph as D1 x D2 with colour 1 from D1 and colour 2 from D2.

    The colour-1 and colour-2 components must meet in exactly one vertex
    pairwise; the reference factors are the components through vertex 0.
    """
    if graph.dim_w != 4:
        raise DiagramError("detect_product needs an SU(2) x SU(2) graph")
    n = len(graph)
    n1, n2 = graph.adjacency(1), graph.adjacency(2)
    lab1, lab2 = _labels(n1), _labels(n2)
    k1, k2 = lab1.max() + 1, lab2.max() + 1
    meet = np.zeros((k1, k2), dtype=np.int64)
    np.add.at(meet, (lab1, lab2), 1)
    if np.any(meet != 1):
        return None
    ref1 = np.flatnonzero(lab1 == lab1[0])
    ref2 = np.flatnonzero(lab2 == lab2[0])
    if len(ref1) * len(ref2) != n:
        return None
    # vertex v <-> (a, b): a in ref1 shares v's colour-2 component, b in ref2 shares its colour-1 component
    a_of = {int(lab2[a]): int(a) for a in ref1}
    b_of = {int(lab1[b]): int(b) for b in ref2}
    coords = np.array([(a_of[lab2[v]], b_of[lab1[v]]) for v in range(n)])
    a, b = coords[:, 0], coords[:, 1]
    same_b = b[:, None] == b[None, :]
    same_a = a[:, None] == a[None, :]
    if not np.array_equal(n1, np.where(same_b, n1[np.ix_(a, a)], 0)):
        return None
    if not np.array_equal(n2, np.where(same_a, n2[np.ix_(b, b)], 0)):
        return None
    t1 = classify(n1[np.ix_(ref1, ref1)])
    t2 = classify(n2[np.ix_(ref2, ref2)])
    if not (t1.is_extended and t2.is_extended):
        return None
    return ProductDecomposition(
        t1, t2, [int(v) for v in ref1], [int(v) for v in ref2],
        {v: (int(a[v]), int(b[v])) for v in range(n)},
    )


def detect_doubled(graph) -> DiagramType | None:
    """The Euclidean type when both colours carry the same connected diagram."""
    if graph.dim_w != 4:
        raise DiagramError("detect_doubled needs an SU(2) x SU(2) graph")
    n1, n2 = graph.adjacency(1), graph.adjacency(2)
    if not np.array_equal(n1, n2) or not is_connected(n1):
        return None
    t = classify(n1)
    return t if t.is_extended else None
