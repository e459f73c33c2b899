"""Monomially equivalent LCD codes.

Write a code in standard form ``(I_k | B)`` and scale its first ``k``
coordinates by ``x = (x_1, ..., x_k)``.  The Gram matrix of the scaled
generator is ``diag(x_i^(1+p^ell)) + B sigma^ell(B^T)``, so the scaled code
is LCD exactly when

    f(x) = det(diag(x_1^(1+p^ell), ..., x_k^(1+p^ell)) + B sigma^ell(B^T))

is nonzero.  ``f`` has degree ``1 + p^ell`` in each variable, which is
below ``q - 1`` once ``q > 4``, so a nonvanishing point among the nonzero
vectors always exists there.  The search evaluates ``f`` pointwise.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from galhull.code import (
    LinearCode,
    MonomialTransform,
    apply_monomial,
    is_lcd,
    standard_form,
    weight_distribution,
    WEIGHT_BUDGET,
)
from galhull.errors import ConsistencyError, GalHullError
from galhull.field import FieldSpec
from galhull.matrix import Matrix

STRATEGIES = ("exhaustive-units", "restricted-subfield-complement", "seeded-random")


@dataclass(frozen=True)
class LcdSearchConfig:
    strategy: str = "exhaustive-units"
    m: int | None = None
    budget: int = 10_000
    seed: int = 0

    def validate(self, F: FieldSpec, ell: int) -> None:
        if self.strategy not in STRATEGIES:
            raise GalHullError(f"unknown strategy {self.strategy!r}", "E_CONFIG")
        if self.strategy == "seeded-random" and self.budget < 1:
            raise GalHullError("random search needs a positive budget", "E_CONFIG")
        if self.strategy == "restricted-subfield-complement":
            m = self.m
            if m is None or not 1 <= m <= F.e - 1 or F.e % m:
                raise GalHullError(
                    f"subfield degree m={m} must satisfy 1 <= m <= {F.e - 1} and m | {F.e}",
                    "E_CONFIG")
            if F.q - F.p**ell - F.p**m < 2:
                raise GalHullError(
                    f"p^e - p^ell - p^m = {F.q - F.p**ell - F.p**m} < 2", "E_CONFIG")


@dataclass(frozen=True)
class LcdSearchResult:
    found: bool
    x: tuple[int, ...] | None
    transform: MonomialTransform | None
    code: LinearCode | None
    evaluations: int
    exhausted: bool


def f_eval(B: Matrix, x: Sequence[int], ell: int) -> int:
    F = B.field
    ell = F.check_level(ell)
    if len(x) != B.nrows:
        raise GalHullError(f"x has {len(x)} entries, B has {B.nrows} rows", "E_DIMENSION")
    return _f_with_gram(F, B.gram(ell), x, 1 + F.p**ell)


def _f_with_gram(F: FieldSpec, BB: Matrix, x: Sequence[int], power: int) -> int:
    rows = [list(r) for r in BB.rows]
    for i, xi in enumerate(x):
        rows[i][i] = F.add(rows[i][i], F.pow(xi, power))
    return Matrix._raw(F, tuple(map(tuple, rows)), BB.ncols).det()


def _candidates(F: FieldSpec, k: int, cfg: LcdSearchConfig) -> Iterator[tuple[int, ...]]:
    if cfg.strategy == "exhaustive-units":
        return itertools.product(range(1, F.q), repeat=k)
    if cfg.strategy == "restricted-subfield-complement":
        outside = [a for a in range(F.q) if not F.in_subfield(a, cfg.m)]
        return itertools.product(outside, repeat=k)
    rng = random.Random(cfg.seed)
    return (tuple(rng.randrange(1, F.q) for _ in range(k)) for _ in range(cfg.budget))


def lcd_equivalent_search(C: LinearCode, ell: int, cfg: LcdSearchConfig | None = None) -> LcdSearchResult:
    """First ``x`` in the strategy's order making the scaled code LCD."""
    cfg = cfg or LcdSearchConfig()
    F = C.field
    ell = F.check_level(ell)
    cfg.validate(F, ell)
    if C.k == 0:
        raise GalHullError("search needs a code of dimension >= 1", "E_DIMENSION")
    power = 1 + F.p**ell
    if F.q > 4 and power > F.q - 2:
        raise ConsistencyError(f"1 + p^ell = {power} > q - 2 = {F.q - 2}")

    B, perm = standard_form(C)
    BB = B.gram(ell)
    evaluations = 0
    for x in _candidates(F, C.k, cfg):
        evaluations += 1
        if _f_with_gram(F, BB, x, power):
            t = MonomialTransform(perm, tuple(x) + (1,) * (C.n - C.k))
            code = apply_monomial(C, t)
            if not is_lcd(code, ell):
                raise ConsistencyError(f"f(x) != 0 but scaled code is not LCD, x={x}")
            return LcdSearchResult(True, tuple(x), t, code, evaluations, False)

    exhausted = cfg.strategy != "seeded-random"
    guaranteed = ((cfg.strategy == "exhaustive-units" and F.q > 4)
                  or cfg.strategy == "restricted-subfield-complement")
    if guaranteed:
        raise ConsistencyError(
            f"{cfg.strategy} search exhausted over GF({F.q}) at level {ell}; a solution must exist")
    return LcdSearchResult(False, None, None, None, evaluations, exhausted)


def verify_lcd_equivalence(result: LcdSearchResult, original: LinearCode, ell: int) -> bool:
    """Recheck a found result: same code under the transform, LCD, same weights.

    Weights are compared only when the code is small enough to enumerate;
    equality under a monomial map already forces them to agree.
    """
    if not result.found or result.transform is None or result.code is None:
        return False
    try:
        image = apply_monomial(original, result.transform)
    except GalHullError:
        return False
    if image != result.code or not is_lcd(result.code, ell):
        return False
    if original.field.q ** original.k <= WEIGHT_BUDGET:
        return weight_distribution(original) == weight_distribution(result.code)
    return True
