"""Random instances and brute-force oracles shared by the test modules."""

from __future__ import annotations

import itertools
import random

import numpy as np

from galhull.code import LinearCode, code_from_rows, codewords
from galhull.field import FieldSpec
from galhull.matrix import Matrix


def random_matrix(F: FieldSpec, m: int, n: int, rng: random.Random) -> Matrix:
    return Matrix(F, [[rng.randrange(F.q) for _ in range(n)] for _ in range(m)], n)


def random_full_rank(F: FieldSpec, m: int, n: int, rng: random.Random) -> Matrix:
    while True:
        M = random_matrix(F, m, n, rng)
        if M.rank() == m:
            return M


def random_code(F: FieldSpec, n: int, k: int, rng: random.Random) -> LinearCode:
    if k == 0:
        return code_from_rows(F, Matrix(F, [], n))
    return code_from_rows(F, random_full_rank(F, k, n, rng))


def random_invertible(F: FieldSpec, k: int, rng: random.Random) -> Matrix:
    return random_full_rank(F, k, k, rng)


def brute_span(F: FieldSpec, rows) -> set[tuple[int, ...]]:
    """Every linear combination of ``rows``, by plain enumeration."""
    rows = [tuple(r) for r in rows]
    n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(F.q), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coeffs, rows):
            for j in range(n):
                v[j] = F.add(v[j], F.mul(c, r[j]))
        out.add(tuple(v))
    return out


def brute_hull(C: LinearCode, ell: int) -> set[tuple[int, ...]]:
    """Codewords of ``C`` that are ell-orthogonal to every generator row."""
    F = C.field
    words = codewords(C)
    if C.k == 0:
        return {tuple(words[0])}
    ar = F.np
    conj = ar.frobenius(words, ell)
    ok = np.ones(len(words), dtype=bool)
    for row in C.gen.rows:
        g = np.asarray(row, dtype=np.int64)
        ok &= ar.sum(ar.mul(g[None, :], conj), axis=1) == 0
    return {tuple(int(x) for x in w) for w in words[ok]}


def _random_vector_in(F: FieldSpec, basis: Matrix, rng: random.Random) -> list[int]:
    v = [0] * basis.ncols
    for row in basis.rows:
        c = rng.randrange(F.q)
        v = [F.add(a, F.mul(c, b)) for a, b in zip(v, row)]
    return v


def random_outer(F: FieldSpec, M: int, N: int, ell: int, rng: random.Random,
                 shape: str = "diagonal", nonzero_diag: bool = True, tries: int = 2000) -> Matrix:
    """Right non-singular ``A`` whose ``A sigma^ell(A^T)`` is diagonal or triangular.

    Row ``i`` is drawn from the subspace cut out by the vanishing Gram
    entries it takes part in, so no rejection on the zero pattern is needed.
    """
    for _ in range(tries):
        rows: list[list[int]] = []
        for _i in range(M):
            cons = []
            for a in rows:
                # entry (i, j) = <a_i, a_j>_ell is linear in a_i
                cons.append([F.frobenius(x, ell) for x in a])
                if shape == "diagonal":
                    # entry (j, i) = <a_j, a_i>_ell vanishes iff a_i is in sigma^(e-ell) of ker(a_j)
                    cons.append([F.frobenius(x, (F.e - ell) % F.e) for x in a])
            space = Matrix(F, cons, N).right_kernel() if cons else Matrix(
                F, [[int(i == j) for j in range(N)] for i in range(N)])
            rows.append(_random_vector_in(F, space, rng))
        A = Matrix(F, rows, N)
        if A.rank() < M:
            continue
        if nonzero_diag and any(F.galois_inner(r, r, ell) == 0 for r in rows):
            continue
        if shape == "lower":
            A = Matrix(F, rows[::-1], N)
        return A
    raise RuntimeError("no outer matrix found")
