"""Dense exact matrices over a :class:`~galhull.field.FieldSpec`.

A :class:`Matrix` stores its rows as a tuple of tuples of element
encodings.  All operations return new matrices.  Pivoting is always
"first nonzero entry, top to bottom, in the leftmost unsettled column",
so every result here is deterministic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from galhull.errors import GalHullError
from galhull.field import FieldSpec


class Matrix:
    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise GalHullError("ncols is required for a matrix with no rows", "E_DIMENSION")
            ncols = len(rows[0])
        q = field.q
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise GalHullError(f"row {i} has length {len(r)}, expected {ncols}", "E_DIMENSION")
            for x in r:
                if not 0 <= x < q:
                    raise GalHullError(f"entry {x} is not an element of GF({q})", "E_ELEMENT")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def _raw(cls, field, rows, ncols):
        # trusted constructor: rows already tuples of valid encodings
        m = object.__new__(cls)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", ncols)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __repr__(self) -> str:
        return f"Matrix(GF({self.field.q}), {[list(r) for r in self.rows]}, ncols={self.ncols})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.field, self.ncols, self.rows))

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def _same_field(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise GalHullError(
                f"field mismatch: GF({self.field.q}) vs GF({other.field.q})", "E_FIELD_MISMATCH")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise GalHullError(f"cannot add {self.shape} and {other.shape}", "E_DIMENSION")
        add = self.field.add
        rows = tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._raw(self.field, rows, self.ncols)

    def __neg__(self) -> "Matrix":
        neg = self.field._neg
        return Matrix._raw(self.field, tuple(tuple(neg[a] for a in r) for r in self.rows), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: int) -> "Matrix":
        f = self.field.scaler(self.field.element(c))
        return Matrix._raw(self.field, tuple(tuple(f(a) for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.ncols != other.nrows:
            raise GalHullError(f"cannot multiply {self.shape} by {other.shape}", "E_DIMENSION")
        F = self.field
        add, exp, log = F.add, F._exp, F._log
        cols = other.T.rows
        out = []
        for r in self.rows:
            nz = [(log[a], t) for t, a in enumerate(r) if a]
            row = []
            for c in cols:
                acc = 0
                for la, t in nz:
                    b = c[t]
                    if b:
                        acc = add(acc, exp[la + log[b]])
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(F, tuple(out), other.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.field, tuple(zip(*self.rows)) if self.nrows else
                           tuple(() for _ in range(self.ncols)), self.nrows)

    def transpose(self) -> "Matrix":
        return self.T

    def frobenius(self, ell: int) -> "Matrix":
        """Apply ``a -> a^(p^ell)`` entrywise; ``ell`` is reduced mod ``e``."""
        tab = self.field.frobenius_table(ell)
        return Matrix._raw(self.field, tuple(tuple(tab[a] for a in r) for r in self.rows), self.ncols)

    def gram(self, ell: int) -> "Matrix":
        """``self @ sigma^ell(self^T)``: entry (i, j) is <row_i, row_j>_ell."""
        self.field.check_level(ell)
        return self @ self.frobenius(ell).T

    # -- slicing and stacking ------------------------------------------------

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "Matrix":
        rsel = range(self.nrows) if rows is None else rows
        if cols is None:
            return Matrix._raw(self.field, tuple(self.rows[i] for i in rsel), self.ncols)
        return Matrix._raw(self.field, tuple(tuple(self.rows[i][j] for j in cols) for i in rsel),
                           len(cols))

    def permute_columns(self, perm: Sequence[int]) -> "Matrix":
        """Column ``j`` of the result is column ``perm[j]`` of ``self``."""
        return self.submatrix(cols=perm)

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int], int]:
        """Reduced row echelon form, pivot columns and rank."""
        F = self.field
        rows = [list(r) for r in self.rows]
        m, n = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = next((i for i in range(r, m) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            lead = rows[r][c]
            if lead != 1:
                f = F.scaler(F.inv(lead))
                rows[r] = [f(a) for a in rows[r]]
            prow = rows[r]
            for i in range(m):
                if i != r and rows[i][c]:
                    _eliminate(F, rows, i, prow, rows[i][c], c)
            pivots.append(c)
            r += 1
        R = Matrix._raw(F, tuple(tuple(x) for x in rows), n)
        return R, pivots, r

    def rank(self) -> int:
        return self.rref()[2]

    def row_space_basis(self) -> "Matrix":
        """Nonzero rows of the RREF: the canonical basis of the row space."""
        R, _, rk = self.rref()
        return R.submatrix(rows=range(rk))

    def right_kernel(self) -> "Matrix":
        """Basis of ``{x : self @ x^T = 0}``, one row per free column.

        Each basis vector has a 1 in its free column and zeros in the
        other free columns.
        """
        F = self.field
        R, pivots, rk = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        neg = F._neg
        out = []
        for j in free:
            v = [0] * self.ncols
            v[j] = 1
            for i, pc in enumerate(pivots):
                v[pc] = neg[R.rows[i][j]]
            out.append(tuple(v))
        return Matrix._raw(F, tuple(out), self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise GalHullError(f"determinant of non-square {self.shape} matrix", "E_DIMENSION")
        F = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = F.neg(d)
            lead = rows[c][c]
            d = F.mul(d, lead)
            inv_lead = F.inv(lead)
            prow = rows[c]
            for i in range(c + 1, n):
                if rows[i][c]:
                    _eliminate(F, rows, i, prow, F.mul(rows[i][c], inv_lead), c)
        return d

    def right_inverse(self) -> "Matrix | None":
        """``B`` with ``self @ B == I`` or ``None`` when rank < nrows.

        Free variables are set to zero, giving one canonical solution.
        """
        F = self.field
        m, n = self.shape
        aug = hstack(self, identity(F, m))
        R, pivots, rk = aug.rref()
        if rk < m or (pivots and pivots[-1] >= n):
            return None
        out = [[0] * m for _ in range(n)]
        for i, pc in enumerate(pivots):
            out[pc] = list(R.rows[i][n:])
        return Matrix(F, out, m)

    def inverse(self) -> "Matrix | None":
        if self.nrows != self.ncols:
            raise GalHullError(f"inverse of non-square {self.shape} matrix", "E_DIMENSION")
        return self.right_inverse()


def _eliminate(F: FieldSpec, rows: list[list[int]], i: int, prow: list[int], factor: int, start: int) -> None:
    # rows[i] -= factor * prow, columns >= start
    row = rows[i]
    sub = F.sub
    f = F.scaler(factor)
    for t in range(start, len(row)):
        b = prow[t]
        if b:
            row[t] = sub(row[t], f(b))


def identity(F: FieldSpec, n: int) -> Matrix:
    return Matrix._raw(F, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)


def zeros(F: FieldSpec, m: int, n: int) -> Matrix:
    return Matrix._raw(F, tuple((0,) * n for _ in range(m)), n)


def diagonal(F: FieldSpec, values: Sequence[int]) -> Matrix:
    n = len(values)
    return Matrix(F, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)


def vstack(*mats: Matrix) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        first._same_field(m)
        if m.ncols != first.ncols:
            raise GalHullError("vstack: column counts differ", "E_DIMENSION")
    return Matrix._raw(first.field, tuple(r for m in mats for r in m.rows), first.ncols)


def hstack(*mats: Matrix) -> Matrix:
    first = mats[0]
    for m in mats[1:]:
        first._same_field(m)
        if m.nrows != first.nrows:
            raise GalHullError("hstack: row counts differ", "E_DIMENSION")
    rows = tuple(tuple(x for m in mats for x in m.rows[i]) for i in range(first.nrows))
    return Matrix._raw(first.field, rows, sum(m.ncols for m in mats))


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    """Block matrix whose (i, j) block is ``A[i, j] * B``."""
    A._same_field(B)
    F = A.field
    rows = []
    for ra in A.rows:
        scaled = [F.scaler(a) for a in ra]
        for rb in B.rows:
            rows.append(tuple(f(b) for f in scaled for b in rb))
    return Matrix._raw(F, tuple(rows), A.ncols * B.ncols)


def same_row_space(A: Matrix, B: Matrix) -> bool:
    """Subspace equality: the canonical RREF bases coincide."""
    A._same_field(B)
    if A.ncols != B.ncols:
        return False
    return A.row_space_basis() == B.row_space_basis()
