"""Galois duals, hulls, LCD codes and matrix product codes over GF(p^e)."""

from galhull.code import (
    HullReport,
    LinearCode,
    MonomialTransform,
    apply_monomial,
    code_from_rows,
    codewords,
    dual_galois,
    full_code,
    hull,
    hull_dimension,
    intersect,
    is_lcd,
    is_self_dual,
    is_self_orthogonal,
    parity_check,
    standard_form,
    weight_distribution,
    zero_code,
)
from galhull.codefile import parse_code_file, read_code_file, serialize_code_file
from galhull.errors import ConsistencyError, GalHullError, ParseError
from galhull.field import FieldSpec, field_new
from galhull.lcd import LcdSearchConfig, LcdSearchResult, f_eval, lcd_equivalent_search, verify_lcd_equivalence
from galhull.matrix import Matrix, identity, kronecker, same_row_space
from galhull.mpc import (
    MatrixProductSpec,
    block_triangular_rank_bound,
    mpc_construct,
    mpc_generator,
    mpc_hull,
    mpc_hull_dim_bounds,
)

__version__ = "0.1.0"
