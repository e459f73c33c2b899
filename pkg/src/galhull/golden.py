"""Worked examples with known answers, run by ``galhull verify-examples``."""

from __future__ import annotations

from typing import Callable, NamedTuple

from galhull.code import (
    LinearCode,
    MonomialTransform,
    apply_monomial,
    code_from_rows,
    hull,
    is_lcd,
    is_self_dual,
    is_self_orthogonal,
)
from galhull.field import field_new
from galhull.lcd import LcdSearchConfig, lcd_equivalent_search, verify_lcd_equivalence
from galhull.matrix import Matrix, same_row_space
from galhull.mpc import MatrixProductSpec, mpc_generator, mpc_hull, mpc_hull_dim_bounds

# F_8 = F_2[w], w^3 + w + 1 = 0
F8 = field_new(2, 3, [1, 1, 0, 1])
F8_GEN = [[1, 1, 3, 3], [0, 5, 1, 0]]        # rows (1, 1, w+1, w+1), (0, w^2+1, 1, 0)
F8_GRAM_LEVEL1 = [[0, 4], [0, 7]]            # [[0, w^2], [0, w^2+w+1]]

# F_4 = F_2[w], w^2 + w + 1 = 0
F4 = field_new(2, 2, [1, 1, 1])

F3 = field_new(3, 1)
F3_G1 = [[1, 0, 1, 1], [0, 1, 1, 2]]
F3_G2 = [[1, 1, 1, 1]]
F3_A = [[1, 1], [2, 1]]
F3_MPC_GEN = [
    [1, 0, 1, 1, 1, 0, 1, 1],
    [0, 1, 1, 2, 0, 1, 1, 2],
    [2, 2, 2, 2, 1, 1, 1, 1],
]
F3_MPC_GRAM = [[0, 0, 0], [0, 0, 0], [0, 0, 2]]
F3_MPC_HULL = F3_MPC_GEN[:2]


def f8_code() -> LinearCode:
    return code_from_rows(F8, F8_GEN)


def f4_code() -> LinearCode:
    return code_from_rows(F4, [[1, 1]])


def f3_mpc_spec() -> MatrixProductSpec:
    return MatrixProductSpec(
        (code_from_rows(F3, F3_G1), code_from_rows(F3, F3_G2)), Matrix(F3, F3_A))


class Check(NamedTuple):
    name: str
    run: Callable[[], bool]


def _f8_structured_block():
    rep = hull(f8_code(), 1)
    S = rep.structured_gen.gram(1)
    h = rep.h
    # zero columns under the hull rows, nonzero block to their right
    left_zero = all(S[i, j] == 0 for i in range(S.nrows) for j in range(h))
    return left_zero and any(S[i, j] for i in range(h) for j in range(h, S.ncols))


def _f4_scalings_never_lcd():
    C = f4_code()
    return all(not is_lcd(apply_monomial(C, MonomialTransform((0, 1), (a, b))), 1)
               for a in range(1, 4) for b in range(1, 4))


def _f4_search_exhausts():
    res = lcd_equivalent_search(f4_code(), 1, LcdSearchConfig("exhaustive-units"))
    return (not res.found) and res.exhausted and res.evaluations == 3


def _f8_search_finds():
    res = lcd_equivalent_search(f8_code(), 1)
    return res.found and verify_lcd_equivalence(res, f8_code(), 1)


def _f3_constituent_hulls():
    spec = f3_mpc_spec()
    C1, C2 = spec.codes
    # the first constituent is self-orthogonal, the second is LCD
    return (hull(C1, 0).h == 2 and is_self_orthogonal(C1, 0)
            and hull(C2, 0).h == 0 and is_lcd(C2, 0))


CHECKS = [
    Check("f8-level1-gram", lambda: Matrix(F8, F8_GEN).gram(1).tolist() == F8_GRAM_LEVEL1),
    Check("f8-level1-hull-dim", lambda: hull(f8_code(), 1).h == 1),
    Check("f8-level1-offdiagonal-block-nonzero", _f8_structured_block),
    Check("f8-level1-lcd-equivalent-found", _f8_search_finds),
    Check("f4-hermitian-self-orthogonal", lambda: is_self_orthogonal(f4_code(), 1)),
    Check("f4-hermitian-self-dual", lambda: is_self_dual(f4_code(), 1)),
    Check("f4-hermitian-no-scaling-is-lcd", _f4_scalings_never_lcd),
    Check("f4-hermitian-search-exhausts", _f4_search_exhausts),
    Check("f3-mpc-generator", lambda: same_row_space(mpc_generator(f3_mpc_spec()), Matrix(F3, F3_MPC_GEN))),
    Check("f3-mpc-gram", lambda: Matrix(F3, F3_MPC_GEN).gram(0).tolist() == F3_MPC_GRAM
          and Matrix(F3, F3_MPC_GRAM).rank() == 1),
    Check("f3-mpc-outer-gram", lambda: f3_mpc_spec().diagonal(0) == (2, 2)),
    Check("f3-mpc-constituent-hulls", _f3_constituent_hulls),
    Check("f3-mpc-hull", lambda: same_row_space(mpc_hull(f3_mpc_spec(), 0).gen, Matrix(F3, F3_MPC_HULL))),
    Check("f3-mpc-hull-bounds", lambda: mpc_hull_dim_bounds(f3_mpc_spec(), 0) == (2, 2, True)),
]


def run_checks() -> list[tuple[str, bool]]:
    results = []
    for check in CHECKS:
        try:
            ok = bool(check.run())
        except Exception:  # a crash is a failure, not an abort of the suite
            ok = False
        results.append((check.name, ok))
    return results
