"""Linear codes over GF(q), their Galois duals and hulls.

A :class:`LinearCode` always stores the RREF of its generator, so two
codes are equal exactly when their stored generators are identical.

For a level ``ell`` the form is ``<x, y>_ell = sum x_i y_i^(p^ell)``.
The dual at level ``ell`` is ``sigma^(e-ell)`` applied to the Euclidean
dual, and the hull is the intersection of a code with that dual.  Its
dimension is ``k - rank(G sigma^ell(G^T))`` for any generator ``G``;
:func:`hull` checks that identity on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from galhull.errors import ConsistencyError, GalHullError
from galhull.field import FieldSpec
from galhull.matrix import Matrix, vstack

WEIGHT_BUDGET = 1 << 20


@dataclass(frozen=True)
class LinearCode:
    field: FieldSpec
    n: int
    gen: Matrix

    @property
    def k(self) -> int:
        return self.gen.nrows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}), gen={self.gen.tolist()})"

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.n:
            return False
        return vstack(self.gen, Matrix(self.field, [v])).rank() == self.k

    def gram(self, ell: int) -> Matrix:
        return self.gen.gram(ell)


def code_from_rows(field: FieldSpec, rows: Matrix | Sequence[Sequence[int]], n: int | None = None) -> LinearCode:
    """Canonical code spanned by ``rows``; dependent rows are dropped."""
    if not isinstance(rows, Matrix):
        rows = Matrix(field, rows, n)
    elif rows.field != field:
        raise GalHullError("generator rows are over a different field", "E_FIELD_MISMATCH")
    if rows.ncols < 1:
        raise GalHullError("code length must be at least 1", "E_DIMENSION")
    return LinearCode(field, rows.ncols, rows.row_space_basis())


def zero_code(field: FieldSpec, n: int) -> LinearCode:
    return code_from_rows(field, Matrix(field, [], n))


def full_code(field: FieldSpec, n: int) -> LinearCode:
    return code_from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)])


def parity_check(C: LinearCode) -> Matrix:
    """Canonical Euclidean kernel basis ``H`` with ``gen @ H^T = 0``."""
    return C.gen.right_kernel()


def dual_galois(C: LinearCode, ell: int) -> LinearCode:
    ell = C.field.check_level(ell)
    H = parity_check(C)
    return code_from_rows(C.field, H.frobenius((C.field.e - ell) % C.field.e))


def intersect(C: LinearCode, D: LinearCode) -> LinearCode:
    """``C ∩ D`` from the left kernel of the stacked bases."""
    if C.field != D.field or C.n != D.n:
        raise GalHullError("codes differ in field or length", "E_DIMENSION")
    F = C.field
    if C.k == 0 or D.k == 0:
        return zero_code(F, C.n)
    S = vstack(C.gen, D.gen)
    # (a, b) with a G_C + b G_D = 0  <=>  a G_C lies in both codes
    K = S.T.right_kernel()
    coeffs = K.submatrix(cols=range(C.k))
    return code_from_rows(F, coeffs @ C.gen if K.nrows else Matrix(F, [], C.n))


@dataclass(frozen=True)
class HullReport:
    ell: int
    hull: LinearCode
    h: int
    r: int
    gram: Matrix
    structured_gen: Matrix


def hull(C: LinearCode, ell: int) -> HullReport:
    F = C.field
    ell = F.check_level(ell)
    H = intersect(C, dual_galois(C, ell))
    gram = C.gram(ell)
    r = gram.rank()
    if H.k != C.k - r:
        raise ConsistencyError(
            f"hull dimension {H.k} != k - rank(gram) = {C.k} - {r} for {C!r} at level {ell}")
    return HullReport(ell, H, H.k, r, gram, _extend_basis(H.gen, C.gen))


def _extend_basis(sub: Matrix, full: Matrix) -> Matrix:
    # greedy: append rows of `full` that raise the rank
    rows = list(sub.rows)
    rank = len(rows)
    for row in full.rows:
        if rank == full.nrows:
            break
        cand = Matrix._raw(full.field, tuple(rows) + (row,), full.ncols)
        if cand.rank() > rank:
            rows.append(row)
            rank += 1
    return Matrix._raw(full.field, tuple(rows), full.ncols)


def hull_dimension(C: LinearCode, ell: int) -> int:
    """``k - rank(gram)``: the cheap route to ``dim h_ell(C)``."""
    return C.k - C.gram(C.field.check_level(ell)).rank()


def is_lcd(C: LinearCode, ell: int) -> bool:
    """Trivial hull, i.e. the Gram matrix is nonsingular. True for k = 0."""
    return C.gram(C.field.check_level(ell)).rank() == C.k


def is_self_orthogonal(C: LinearCode, ell: int) -> bool:
    return C.gram(C.field.check_level(ell)).is_zero()


def is_self_dual(C: LinearCode, ell: int) -> bool:
    F = C.field
    ell = F.check_level(ell)
    by_equality = dual_galois(C, ell) == C
    H = parity_check(C)
    two_sided = (C.gram(ell).is_zero()
                 and H.gram((F.e - ell) % F.e).is_zero()
                 and 2 * C.k == C.n)
    if by_equality != two_sided:
        raise ConsistencyError(f"self-duality criteria disagree for {C!r} at level {ell}")
    return by_equality


# -- monomial maps ---------------------------------------------------------


@dataclass(frozen=True)
class MonomialTransform:
    """``x -> x M`` with ``M = P D``: coordinate ``j`` of the image is
    ``diag[j] * x[perm[j]]``.  Indices are 0-based.
    """

    perm: tuple[int, ...]
    diag: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise GalHullError(f"{list(self.perm)} is not a permutation of 0..{n - 1}", "E_TRANSFORM")
        if len(self.diag) != n:
            raise GalHullError("permutation and diagonal differ in length", "E_TRANSFORM")
        if any(d == 0 for d in self.diag):
            raise GalHullError("diagonal entries must be nonzero", "E_TRANSFORM")

    @classmethod
    def identity(cls, n: int) -> "MonomialTransform":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply_vector(self, F: FieldSpec, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(F.mul(d, x[p]) for p, d in zip(self.perm, self.diag))

    def apply_matrix(self, G: Matrix) -> Matrix:
        F = G.field
        if G.ncols != self.n:
            raise GalHullError(f"transform of size {self.n} on length {G.ncols}", "E_TRANSFORM")
        for d in self.diag:
            F.element(d)
        scalers = [F.scaler(d) for d in self.diag]
        rows = tuple(tuple(f(r[p]) for p, f in zip(self.perm, scalers)) for r in G.rows)
        return Matrix._raw(F, rows, G.ncols)


def apply_monomial(C: LinearCode, t: MonomialTransform) -> LinearCode:
    return code_from_rows(C.field, t.apply_matrix(C.gen))


def standard_form(C: LinearCode) -> tuple[Matrix, tuple[int, ...]]:
    """``(B, perm)`` such that ``gen`` with columns ordered by ``perm`` is ``(I_k | B)``."""
    if C.k == 0:
        raise GalHullError("standard form of the zero code", "E_DIMENSION")
    _, pivots, _ = C.gen.rref()
    pivset = set(pivots)
    perm = tuple(pivots) + tuple(j for j in range(C.n) if j not in pivset)
    G = C.gen.permute_columns(perm)
    return G.submatrix(cols=range(C.k, C.n)), perm


# -- enumeration -----------------------------------------------------------


def codewords(C: LinearCode, budget: int = WEIGHT_BUDGET) -> np.ndarray:
    """All ``q^k`` codewords as rows of an integer array."""
    F = C.field
    if F.q ** C.k > budget:
        raise GalHullError(f"{F.q}^{C.k} codewords exceed the budget {budget}", "E_BUDGET")
    ar = F.np
    words = np.zeros((1, C.n), dtype=np.int64)
    for row in reversed(C.gen.rows):
        g = np.asarray(row, dtype=np.int64)
        multiples = np.stack([ar.scale(a, g) for a in range(F.q)])
        words = ar.add(multiples[:, None, :], words[None, :, :]).reshape(-1, C.n)
    return words


def _projective_codewords(C: LinearCode) -> np.ndarray:
    # one representative per scalar class: leading coefficient 1
    F = C.field
    ar = F.np
    words = np.zeros((1, C.n), dtype=np.int64)
    reps = []
    for i in range(C.k - 1, -1, -1):
        g = np.asarray(C.gen.rows[i], dtype=np.int64)
        reps.append(ar.add(g[None, :], words))
        if i:
            multiples = np.stack([ar.scale(a, g) for a in range(F.q)])
            words = ar.add(multiples[:, None, :], words[None, :, :]).reshape(-1, C.n)
    return np.concatenate(reps)


def weight_distribution(C: LinearCode, budget: int = WEIGHT_BUDGET) -> list[int]:
    """``A_w`` for ``w = 0..n`` by enumerating the code."""
    F = C.field
    if F.q ** C.k > budget:
        raise GalHullError(f"{F.q}^{C.k} codewords exceed the budget {budget}", "E_BUDGET")
    dist = [0] * (C.n + 1)
    dist[0] = 1
    if C.k == 0:
        return dist
    reps = _projective_codewords(C)
    counts = np.bincount(np.count_nonzero(reps, axis=1), minlength=C.n + 1)
    for w in range(1, C.n + 1):
        dist[w] = int(counts[w]) * (F.q - 1)
    return dist
