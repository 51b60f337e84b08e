"""Finite subgroups of SU(2) and SU(2) x SU(2) as explicit element sets.

Every group is stored as an ``(N, 8)`` array of quaternion pairs.  SU(2)
groups use the pair ``(q, 1)`` so that one code path serves both ambients.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from . import quat

MATCH_TOL = 1e-6
MIN_SEPARATION = 1e-3
MAX_CYCLIC = 1024
MAX_DIHEDRAL = 256
ORDER_CAP = 20000

SU2 = "SU2"
SU2xSU2 = "SU2xSU2"

PHI = (1.0 + np.sqrt(5.0)) / 2.0


class GroupError(ValueError):
    pass


class ElementIndex:
    """Vectorized nearest-element lookup with a hashed grid and a k-d tree fallback."""

    def __init__(self, elements: np.ndarray, grid: float = MATCH_TOL):
        self.elements = np.ascontiguousarray(elements, dtype=float)
        self.grid = grid
        rng = np.random.default_rng(0x5EED)
        self._mix = rng.integers(1, 2**63 - 1, size=self.elements.shape[1], dtype=np.int64).astype(np.uint64) | np.uint64(1)
        h = self._hash(self.elements)
        self._order = np.argsort(h, kind="stable")
        self._sorted = h[self._order]
        self._tree = None

    def _hash(self, x: np.ndarray) -> np.ndarray:
        cells = np.floor(x / self.grid + 0.5).astype(np.int64).astype(np.uint64)
        with np.errstate(over="ignore"):
            return (cells * self._mix).sum(axis=-1, dtype=np.uint64)

    def lookup(self, x: np.ndarray, tol: float = MATCH_TOL) -> np.ndarray:
        """Indices of the stored elements matching rows of ``x``; -1 where none is within ``tol``."""
        x = np.asarray(x, dtype=float)
        shape = x.shape[:-1]
        x = x.reshape(-1, self.elements.shape[1])
        pos = np.searchsorted(self._sorted, self._hash(x))
        pos = np.minimum(pos, len(self._sorted) - 1)
        cand = self._order[pos]
        ok = np.max(np.abs(self.elements[cand] - x), axis=1) < tol
        out = np.where(ok, cand, -1)
        miss = np.flatnonzero(~ok)
        if miss.size:
            if self._tree is None:
                self._tree = cKDTree(self.elements)
            dist, idx = self._tree.query(x[miss], k=1, p=np.inf, distance_upper_bound=tol)
            out[miss] = np.where(np.isfinite(dist), idx, -1)
        return out.reshape(shape)


@dataclass(eq=False)
class FiniteSubgroup:
    elements: np.ndarray
    generator_indices: list[int]
    ambient: str
    name: str = ""
    index: ElementIndex = field(init=False, repr=False)

    def __post_init__(self):
        self.elements = np.ascontiguousarray(self.elements, dtype=float)
        self.elements.setflags(write=False)
        self.index = ElementIndex(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return int(self.lookup(quat.embed(quat.ONE))[()])

    @property
    def minus_one_index(self) -> int | None:
        """Index of the central -1: (-1, -1), or (-1, 1) for an SU(2) group."""
        second = 1.0 if self.ambient == SU2 else -1.0
        i = int(self.lookup(np.array([-1.0, 0, 0, 0, second, 0, 0, 0]))[()])
        return None if i < 0 else i

    @property
    def generators(self) -> np.ndarray:
        return self.elements[self.generator_indices]

    def lookup(self, x) -> np.ndarray:
        return self.index.lookup(np.asarray(x, dtype=float))

    def mul(self, i, j) -> np.ndarray:
        """Indices of products ``elements[i] * elements[j]`` (broadcasting)."""
        idx = self.lookup(quat.pair_mul(self.elements[i], self.elements[j]))
        if np.any(idx < 0):
            raise GroupError(f"{self.name}: product left the group")
        return idx

    def inverse(self) -> np.ndarray:
        idx = self.lookup(quat.pair_inv(self.elements))
        if np.any(idx < 0):
            raise GroupError(f"{self.name}: inverse missing")
        return idx


def central_minus_one(g: FiniteSubgroup) -> int | None:
    """Index of the central -1 (the pair (-1, -1) in SU(2) x SU(2)), or None."""
    return g.minus_one_index


def check_separation(elements: np.ndarray, min_sep: float = MIN_SEPARATION) -> None:
    pairs = cKDTree(elements).query_pairs(min_sep, p=np.inf)
    if pairs:
        i, j = min(pairs)
        raise GroupError(f"elements {i} and {j} are closer than {min_sep}")


def check_closure(g: FiniteSubgroup, seed: int = 0) -> None:
    """Exhaustive closure check up to order 500, 10|G| random pairs above."""
    n = g.order
    if n <= 500:
        i, j = np.divmod(np.arange(n * n), n)
    else:
        rng = np.random.default_rng(seed)
        i = rng.integers(0, n, size=10 * n)
        j = rng.integers(0, n, size=10 * n)
    prod = g.lookup(quat.pair_mul(g.elements[i], g.elements[j]))
    if np.any(prod < 0):
        raise GroupError(f"{g.name}: element set is not closed")
    if np.any(g.lookup(quat.pair_inv(g.elements)) < 0):
        raise GroupError(f"{g.name}: element set is not closed under inverses")


def _closure(gens: np.ndarray, cap: int) -> np.ndarray:
    identity = quat.embed(quat.ONE)
    elements = [identity]
    seen = {quat.canonical_key(identity): 0}
    queue = deque([0])
    while queue:
        x = elements[queue.popleft()]
        if len(gens) == 0:
            break
        for y in quat.pair_mul(x[None, :], gens):
            keys = quat.probe_keys(y)
            if any(k in seen for k in keys):
                continue
            if len(elements) >= cap:
                raise GroupError(f"closure exceeded cap {cap}")
            seen[keys[0]] = len(elements)
            elements.append(y)
            queue.append(len(elements) - 1)
    return np.array(elements)


def _generator_indices(g_elements: np.ndarray, gens: np.ndarray) -> list[int]:
    idx = ElementIndex(g_elements).lookup(gens)
    return [int(i) for i in idx]


def from_generators(gens, cap: int = ORDER_CAP, name: str = "") -> FiniteSubgroup:
    """Breadth-first closure of ``gens`` (quaternion pairs) under multiplication."""
    if cap > ORDER_CAP:
        raise GroupError(f"cap must be at most {ORDER_CAP}")
    gens = np.asarray(gens, dtype=float).reshape(-1, 8)
    if not quat.is_unit(gens[:, :4], 1e-6) or not quat.is_unit(gens[:, 4:], 1e-6):
        raise GroupError("generators must be unit quaternion pairs")
    gens = np.concatenate([quat.normalize(gens[:, :4]), quat.normalize(gens[:, 4:])], axis=1)
    elements = _closure(gens, cap)
    check_separation(elements)
    second_trivial = np.max(np.abs(elements[:, 4:] - np.array(quat.ONE))) < MATCH_TOL
    ambient = SU2 if second_trivial else SU2xSU2
    return FiniteSubgroup(elements, _generator_indices(elements, gens), ambient, name)


def _su2_group(quats, gen_quats, name: str) -> FiniteSubgroup:
    elements = quat.embed(np.asarray(quats, dtype=float))
    check_separation(elements)
    g = FiniteSubgroup(elements, _generator_indices(elements, quat.embed(np.asarray(gen_quats, dtype=float))), SU2, name)
    check_closure(g)
    return g


def cyclic(n: int) -> FiniteSubgroup:
    """C_n generated by cos(2pi/n) + i sin(2pi/n)."""
    if not 1 <= n <= MAX_CYCLIC:
        raise GroupError(f"cyclic order must be in [1, {MAX_CYCLIC}]")
    quats = np.array([quat.from_angle(2 * np.pi * k / n) for k in range(n)])
    return _su2_group(quats, quats[1:2], f"C{n}")


def binary_dihedral(n: int) -> FiniteSubgroup:
    """Binary dihedral group of order 4n, generated by cos(pi/n) + i sin(pi/n) and j."""
    if not 1 <= n <= MAX_DIHEDRAL:
        raise GroupError(f"binary dihedral parameter must be in [1, {MAX_DIHEDRAL}]")
    rot = np.array([quat.from_angle(np.pi * k / n) for k in range(2 * n)])
    j = np.array([0.0, 0.0, 1.0, 0.0])
    quats = np.concatenate([rot, quat.qmul(rot, j)])
    return _su2_group(quats, [rot[1], j], f"D{n}")


def _hurwitz_units() -> list[tuple[float, ...]]:
    units = []
    for pos in range(4):
        for s in (1.0, -1.0):
            v = [0.0] * 4
            v[pos] = s
            units.append(tuple(v))
    units.sort(key=lambda v: (v != (1.0, 0.0, 0.0, 0.0), v != (-1.0, 0.0, 0.0, 0.0)))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        units.append(signs)
    return units


def binary_tetrahedral() -> FiniteSubgroup:
    """The 24 Hurwitz units."""
    units = _hurwitz_units()
    gens = [(0.0, 1.0, 0.0, 0.0), (0.5, 0.5, 0.5, 0.5)]
    return _su2_group(units, gens, "2T")


def binary_octahedral() -> FiniteSubgroup:
    units = _hurwitz_units()
    s = 1.0 / np.sqrt(2.0)
    for p, q in itertools.combinations(range(4), 2):
        for sp, sq in itertools.product((s, -s), repeat=2):
            v = [0.0] * 4
            v[p], v[q] = sp, sq
            units.append(tuple(v))
    gens = [(s, s, 0.0, 0.0), (0.5, 0.5, 0.5, 0.5)]
    return _su2_group(units, gens, "2O")


def _even_permutations(n: int):
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[a] > perm[b] for a in range(n) for b in range(a + 1, n))
        if inversions % 2 == 0:
            yield perm


def binary_icosahedral() -> FiniteSubgroup:
    """The 120 icosians: 2T plus even permutations of (+-phi, +-1, +-1/phi, 0)/2."""
    units = _hurwitz_units()
    base = (PHI / 2, 0.5, 1 / (2 * PHI), 0.0)
    for signs in itertools.product((1.0, -1.0), repeat=3):
        signed = (signs[0] * base[0], signs[1] * base[1], signs[2] * base[2], 0.0)
        for perm in _even_permutations(4):
            v = [0.0] * 4
            for src, dst in enumerate(perm):
                v[dst] = signed[src]
            units.append(tuple(v))
    gens = [(0.5, 0.5, 0.5, 0.5), base]
    return _su2_group(units, gens, "2I")


def product(g1: FiniteSubgroup, g2: FiniteSubgroup) -> FiniteSubgroup:
    """All pairs (a, b); element a_i x b_j sits at index i*|G2| + j."""
    if g1.ambient != SU2 or g2.ambient != SU2:
        raise GroupError("product factors must be SU(2) groups")
    n1, n2 = g1.order, g2.order
    if n1 * n2 > ORDER_CAP:
        raise GroupError(f"product order {n1 * n2} exceeds cap {ORDER_CAP}")
    a = np.repeat(g1.elements[:, :4], n2, axis=0)
    b = np.tile(g2.elements[:, :4], (n1, 1))
    elements = np.concatenate([a, b], axis=1)
    e1, e2 = g1.identity_index, g2.identity_index
    gens = [i * n2 + e2 for i in g1.generator_indices] + [e1 * n2 + j for j in g2.generator_indices]
    g = FiniteSubgroup(elements, gens, SU2xSU2, f"prod({g1.name},{g2.name})")
    check_closure(g)
    return g


def diagonal(g: FiniteSubgroup) -> FiniteSubgroup:
    """The diagonal copy {(q, q)} of an SU(2) group."""
    if g.ambient != SU2:
        raise GroupError("diagonal needs an SU(2) group")
    q = g.elements[:, :4]
    d = FiniteSubgroup(np.concatenate([q, q], axis=1), list(g.generator_indices), SU2xSU2, f"diag({g.name})")
    check_closure(d)
    return d


@dataclass(eq=False)
class ConjugacyPartition:
    classes: list[np.ndarray]
    class_of: np.ndarray

    @property
    def representatives(self) -> list[int]:
        return [int(c[0]) for c in self.classes]

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes])

    def __len__(self):
        return len(self.classes)


def conjugacy_classes(g: FiniteSubgroup) -> ConjugacyPartition:
    """Orbits of conjugation by the generators; classes ordered by smallest element index."""
    n = g.order
    src, dst = [np.arange(n)], [np.arange(n)]
    for s in g.generators:
        conj = quat.pair_mul(quat.pair_mul(np.broadcast_to(s, g.elements.shape), g.elements), quat.pair_inv(s))
        idx = g.lookup(conj)
        if np.any(idx < 0):
            raise GroupError(f"{g.name}: conjugate left the group")
        src.append(np.arange(n))
        dst.append(idx)
    src, dst = np.concatenate(src), np.concatenate(dst)
    adj = coo_matrix((np.ones(len(src)), (src, dst)), shape=(n, n))
    _, labels = connected_components(adj, directed=True, connection="weak")
    # relabel by first occurrence so the identity class comes first
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    relabel = np.empty_like(order)
    relabel[order] = np.arange(len(order))
    class_of = relabel[labels]
    classes = [np.flatnonzero(class_of == c) for c in range(len(order))]
    return ConjugacyPartition(classes, class_of)
