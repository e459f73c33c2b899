"""Matrix product codes ``[C_1, ..., C_M] . A``.

Codewords are rows: ``[c_1, ..., c_M] (A ⊗ I_n)``, so column block ``j``
of a codeword is ``sum_i a_ij c_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from galhull.code import LinearCode, code_from_rows, hull, hull_dimension
from galhull.errors import ConsistencyError, GalHullError
from galhull.matrix import Matrix, vstack, hstack


@dataclass(frozen=True)
class MatrixProductSpec:
    codes: tuple[LinearCode, ...]
    A: Matrix

    def __post_init__(self):
        codes = tuple(self.codes)
        object.__setattr__(self, "codes", codes)
        if not codes:
            raise GalHullError("at least one constituent code is required", "E_DIMENSION")
        F, n = codes[0].field, codes[0].n
        if any(c.field != F or c.n != n for c in codes):
            raise GalHullError("constituent codes differ in field or length", "E_DIMENSION")
        if self.A.field != F:
            raise GalHullError("outer matrix is over a different field", "E_FIELD_MISMATCH")
        if self.A.nrows != len(codes):
            raise GalHullError(
                f"outer matrix has {self.A.nrows} rows for {len(codes)} codes", "E_DIMENSION")

    @property
    def field(self):
        return self.A.field

    @property
    def n(self) -> int:
        return self.codes[0].n

    def outer_gram(self, ell: int) -> Matrix:
        return self.A.gram(ell)

    def diagonal(self, ell: int) -> tuple[int, ...] | None:
        """The diagonal of ``A sigma^ell(A^T)`` if that matrix is diagonal."""
        B = self.outer_gram(ell)
        if any(B[i, j] for i in range(B.nrows) for j in range(B.ncols) if i != j):
            return None
        return tuple(B[i, i] for i in range(B.nrows))


def _require_right_nonsingular(spec: MatrixProductSpec) -> None:
    if spec.A.right_inverse() is None:
        raise GalHullError("outer matrix is not right non-singular", "E_SINGULAR_OUTER")


def mpc_generator(spec: MatrixProductSpec) -> Matrix:
    _require_right_nonsingular(spec)
    F, n = spec.field, spec.n
    blocks = []
    for i, C in enumerate(spec.codes):
        if C.k:
            blocks.append(hstack(*(C.gen.scale(a) for a in spec.A.rows[i])))
    if not blocks:
        return Matrix(F, [], spec.A.ncols * n)
    return vstack(*blocks)


def mpc_construct(spec: MatrixProductSpec) -> LinearCode:
    G = mpc_generator(spec)
    C = code_from_rows(spec.field, G)
    expected = sum(c.k for c in spec.codes)
    if C.k != expected:
        raise ConsistencyError(f"matrix product code has dimension {C.k}, expected {expected}")
    return C


def mpc_hull(spec: MatrixProductSpec, ell: int) -> LinearCode:
    """Hull from the constituents when ``A sigma^ell(A^T)`` is diagonal.

    Slot ``i`` keeps all of ``C_i`` when ``lambda_i = 0`` and only its hull
    otherwise.  The result is checked against the hull computed directly.
    """
    ell = spec.field.check_level(ell)
    lam = spec.diagonal(ell)
    if lam is None:
        raise GalHullError("A sigma^ell(A^T) is not diagonal", "E_NONDIAGONAL_GRAM")
    parts = tuple(C if li == 0 else hull(C, ell).hull for C, li in zip(spec.codes, lam))
    formula = mpc_construct(MatrixProductSpec(parts, spec.A))
    direct = hull(mpc_construct(spec), ell).hull
    if formula != direct:
        raise ConsistencyError("matrix product hull formula disagrees with the direct hull")
    return formula


class HullBounds(NamedTuple):
    lower: int
    upper: int
    triangular: bool


def _triangular(B: Matrix) -> bool:
    m = B.nrows
    upper = all(B[i, j] == 0 for i in range(m) for j in range(i))
    lower = all(B[i, j] == 0 for i in range(m) for j in range(i + 1, m))
    return upper or lower


def mpc_hull_dim_bounds(spec: MatrixProductSpec, ell: int) -> HullBounds:
    """Bounds on ``dim h_ell`` of the matrix product code.

    When ``A sigma^ell(A^T)`` is triangular with a nonzero diagonal the
    hull dimension is at most the sum of the constituent hull dimensions,
    with equality when it is diagonal.  Otherwise only ``(0, sum k_i)``
    is claimed.
    """
    ell = spec.field.check_level(ell)
    _require_right_nonsingular(spec)
    B = spec.outer_gram(ell)
    tri = _triangular(B)
    total = sum(C.k for C in spec.codes)
    if not tri or any(B[i, i] == 0 for i in range(B.nrows)):
        return HullBounds(0, total, tri)
    upper = sum(hull_dimension(C, ell) for C in spec.codes)
    if spec.diagonal(ell) is not None:
        return HullBounds(upper, upper, True)
    return HullBounds(0, upper, True)


def block_triangular_rank_bound(blocks: Sequence[Matrix], full: Matrix) -> bool:
    """``rank(full) >= sum rank(block)`` for a block triangular ``full``."""
    sizes = [b.nrows for b in blocks]
    if any(b.nrows != b.ncols for b in blocks):
        raise GalHullError("diagonal blocks must be square", "E_DIMENSION")
    if full.nrows != full.ncols or full.nrows != sum(sizes):
        raise GalHullError("block sizes do not tile the full matrix", "E_DIMENSION")
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    t = len(blocks)
    for i, b in enumerate(blocks):
        if full.submatrix(range(offs[i], offs[i + 1]), range(offs[i], offs[i + 1])) != b:
            raise GalHullError(f"block {i} does not match the diagonal of the full matrix", "E_DIMENSION")

    def block_zero(i, j):
        return full.submatrix(range(offs[i], offs[i + 1]), range(offs[j], offs[j + 1])).is_zero()

    upper = all(block_zero(i, j) for i in range(t) for j in range(i))
    lower = all(block_zero(i, j) for i in range(t) for j in range(i + 1, t))
    if not (upper or lower):
        raise GalHullError("matrix is not block triangular for the given blocks", "E_DIMENSION")
    return full.rank() >= sum(b.rank() for b in blocks)
