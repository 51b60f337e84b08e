"""Character tables by the Burnside class-algebra method.

The class sums span the centre of the group algebra; their structure
constants ``a[C, D, E] = #{x in C : x^-1 z in D}`` (``z`` fixed in ``E``)
give commuting matrices whose common eigenvectors are the central
characters ``omega_i(C) = |C| chi_i(C) / chi_i(1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse

from . import quat
from .groups import SU2, ConjugacyPartition, FiniteSubgroup, conjugacy_classes

RESIDUAL_TOL = 1e-6
SNAP_TOL = 1e-6
ORTHO_TOL = 1e-6
MAX_RETRIES = 32
RESIDUAL_PROBES = 4


class CharacterError(ArithmeticError):
    pass


def snap(x, tol: float | None = None) -> np.ndarray:
    """Round to the nearest integers, failing if any entry is further than ``tol`` (default SNAP_TOL)."""
    tol = SNAP_TOL if tol is None else tol
    x = np.asarray(x)
    if np.iscomplexobj(x):
        if np.max(np.abs(x.imag), initial=0.0) >= tol:
            raise CharacterError("imaginary part too large to snap")
        x = x.real
    r = np.rint(x)
    err = np.max(np.abs(x - r), initial=0.0)
    if err >= tol:
        raise CharacterError(f"value is {err:.3g} away from an integer")
    return r.astype(np.int64)


@dataclass(eq=False)
class CharacterTable:
    values: np.ndarray
    degrees: np.ndarray
    class_sizes: np.ndarray
    partition: ConjugacyPartition
    order: int
    parities: np.ndarray | None = None
    trivial_row: int = 0

    def __len__(self):
        return len(self.degrees)

    def inner_product(self, x, y, snap_result: bool = False):
        return inner_product(x, y, self.class_sizes, snap_result)


def structure_constants(g: FiniteSubgroup, part: ConjugacyPartition) -> sparse.csr_matrix:
    """Sparse matrix with rows ``C*r + D`` and columns ``E`` holding ``a[C, D, E]``."""
    r = len(part)
    inv = g.inverse()
    reps = np.array(part.representatives)
    rows, cols = [], []
    chunk = max(1, 2_000_000 // g.order)
    for start in range(0, r, chunk):
        e = np.arange(start, min(r, start + chunk))
        x = np.arange(g.order)
        prod = g.mul(inv[x][None, :], reps[e][:, None])
        c = np.broadcast_to(part.class_of[x][None, :], prod.shape)
        d = part.class_of[prod]
        rows.append((c * r + d).ravel())
        cols.append(np.broadcast_to(e[:, None], prod.shape).ravel())
    rows, cols = np.concatenate(rows), np.concatenate(cols)
    t = sparse.coo_matrix((np.ones(len(rows), dtype=np.int64), (rows, cols)), shape=(r * r, r))
    return t.tocsr()


def _central_characters(t: sparse.csr_matrix, sizes: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Columns are central characters, normalised to 1 on the identity class."""
    r = len(sizes)
    coo = t.tocoo()
    # conjugating by diag(sqrt|C|) makes the class matrices normal
    s = np.sqrt(sizes)
    scale = s[coo.row % r] / s[coo.col]
    for _ in range(MAX_RETRIES):
        coeffs = rng.standard_normal(r)
        weights = coeffs[coo.row // r] * scale
        m = sparse.coo_matrix((coo.data * weights, (coo.row % r, coo.col)), shape=(r, r)).toarray()
        w, v = np.linalg.eig(m)
        v = v / s[:, None]
        gaps = np.abs(w[:, None] - w[None, :])
        np.fill_diagonal(gaps, np.inf)
        if r > 1 and gaps.min() < RESIDUAL_TOL:
            continue
        return v / v[0]
    raise CharacterError("no separating linear combination found")


def _combination(t: sparse.csr_matrix, coeffs: np.ndarray) -> np.ndarray:
    """Dense ``sum_C coeffs[C] A_C`` with ``A_C[D, E] = a[C, D, E]``."""
    r = len(coeffs)
    coo = t.tocoo()
    return sparse.coo_matrix((coo.data * coeffs[coo.row // r], (coo.row % r, coo.col)), shape=(r, r)).toarray()


def _check_residual(t: sparse.csr_matrix, omega: np.ndarray, rng: np.random.Generator, tol: float | None = None) -> float:
    """Largest residual of ``omega`` as simultaneous eigenvectors, tested on fresh random combinations.

    For each combination ``c`` the defect ``(sum c_C A_C) v - (sum c_C v_C) v`` is
    compared in max(|re|, |im|) form, relative to ``sum |c_C|`` times max(1, |v|^2).
    A vector that fails any single class equation fails a random combination
    with probability one.
    """
    tol = RESIDUAL_TOL if tol is None else tol
    r = omega.shape[0]
    worst = 0.0
    for _ in range(RESIDUAL_PROBES):
        c = rng.standard_normal(r)
        res = _combination(t, c) @ omega
        res -= (c @ omega)[None, :] * omega
        err = np.maximum(np.abs(res.real), np.abs(res.imag)).max(axis=0)
        scale = np.abs(c).sum() * np.maximum(1.0, np.abs(omega).max(axis=0) ** 2)
        worst = max(worst, float((err / scale).max()))
    if worst >= tol:
        raise CharacterError(f"eigen residual {worst:.3g} exceeds {tol}")
    return worst


def _row_order(values: np.ndarray, degrees: np.ndarray, parities: np.ndarray | None) -> np.ndarray:
    """Stable order by degree, then parity (+1 first), then rounded values (re, im per class) descending."""
    rounded = np.round(values, 6) + 0.0
    flat = np.stack([rounded.real, rounded.imag], axis=2).reshape(len(values), -1)
    par = np.zeros(len(values)) if parities is None else parities
    keys = np.column_stack([degrees, -par, -flat])
    return np.lexsort(keys.T[::-1])


def character_table(g: FiniteSubgroup, part: ConjugacyPartition | None = None, seed: int = 0) -> CharacterTable:
    """Irreducible characters of ``g`` with rows in canonical order.

    Rows are sorted by degree, then parity (+1 first) when -1 is in the
    group, then by rounded class values in descending order, which puts the
    trivial character first.
    """
    if part is None:
        part = conjugacy_classes(g)
    r = len(part)
    sizes = part.sizes
    t = structure_constants(g, part)
    rng = np.random.default_rng(seed)
    omega = _central_characters(t, sizes, rng)
    _check_residual(t, omega, rng)

    norm = (np.abs(omega) ** 2 / sizes[:, None]).sum(axis=0)
    degrees = snap(np.sqrt(g.order / norm))
    if np.any(degrees <= 0):
        raise CharacterError("non-positive degree")
    values = (degrees[None, :] * omega / sizes[:, None]).T

    parities = None
    m1 = g.minus_one_index
    if m1 is not None:
        parities = np.array([_parity(values[i, part.class_of[m1]], degrees[i]) for i in range(r)])
    order = _row_order(values, degrees, parities)
    table = CharacterTable(
        values=values[order],
        degrees=degrees[order],
        class_sizes=sizes,
        partition=part,
        order=g.order,
        parities=None if parities is None else parities[order],
        trivial_row=0,
    )
    if int((table.degrees**2).sum()) != g.order:
        raise CharacterError("sum of squared degrees differs from the group order")
    if not np.allclose(table.values[0], 1.0, atol=SNAP_TOL):
        raise CharacterError("first row is not the trivial character")
    errs = orthogonality_errors(table)
    if max(errs) >= ORTHO_TOL:
        raise CharacterError(f"orthogonality error {max(errs):.3g}")
    return table


def orthogonality_errors(table: CharacterTable) -> tuple[float, float]:
    """(row, column) orthogonality defects."""
    x = table.values
    sizes = table.class_sizes
    rows = (x * sizes) @ x.conj().T / table.order
    row_err = float(np.abs(rows - np.eye(len(x))).max())
    cols = x.conj().T @ x
    col_err = float(np.abs(cols - np.diag(table.order / sizes)).max())
    return row_err, col_err


def inner_product(x, y, class_sizes, snap_result: bool = False):
    """(1/|G|) sum_C |C| x(C) conj(y(C))."""
    class_sizes = np.asarray(class_sizes)
    val = complex(np.sum(class_sizes * np.asarray(x) * np.conj(np.asarray(y))) / class_sizes.sum())
    if snap_result:
        return int(snap(val))
    return val


def natural_character(g: FiniteSubgroup, part: ConjugacyPartition, factor="both") -> np.ndarray:
    """Character of W1, W2 or W = W1 + W2 on class representatives."""
    reps = g.elements[part.representatives]
    if g.ambient == SU2:
        if factor == 2:
            raise ValueError("factor 2 is undefined for an SU(2) group")
        return quat.su2_trace(reps[:, :4]).astype(complex)
    if factor == 1:
        return quat.su2_trace(reps[:, :4]).astype(complex)
    if factor == 2:
        return quat.su2_trace(reps[:, 4:]).astype(complex)
    if factor == "both":
        return (quat.su2_trace(reps[:, :4]) + quat.su2_trace(reps[:, 4:])).astype(complex)
    raise ValueError(f"unknown factor {factor!r}")


def _parity(value_at_minus_one, degree) -> int:
    ratio = value_at_minus_one / degree
    for eps in (1, -1):
        if abs(ratio - eps) < SNAP_TOL:
            return eps
    raise CharacterError(f"chi(-1)/chi(1) = {ratio} is not +-1")


def minus_one_parity(row, g: FiniteSubgroup, part: ConjugacyPartition, table: CharacterTable | None = None) -> int:
    """Sign e with chi(-1) = e chi(1); ``row`` is a table row index or a class-function array."""
    m1 = g.minus_one_index
    if m1 is None:
        raise CharacterError("-1 is not in the group")
    if table is not None and np.ndim(row) == 0:
        chi = table.values[row]
    else:
        chi = np.asarray(row)
    c1 = part.class_of[m1]
    return _parity(chi[c1], chi[0].real)
