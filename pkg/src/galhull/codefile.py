"""Plain-text code files.

::

    # comments start with '#'
    field 2 3 1,1,0,1
    rows 2 4
    1 1 3 3
    0 5 1 0

The header gives ``p``, ``e`` and the modulus coefficients constant term
first (``0,1`` for a prime field).  Body entries are element encodings.
Outer matrices for matrix product codes use the same format.
"""

from __future__ import annotations

from galhull.errors import GalHullError, ParseError
from galhull.field import FieldSpec, field_new
from galhull.matrix import Matrix


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"{what} must be integers, got {' '.join(tokens)!r}", lineno) from None


def parse_code_file(text: str) -> tuple[FieldSpec, Matrix]:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty file")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "field":
        raise ParseError("expected 'field <p> <e> <c0,c1,...,ce>'", lineno)
    p, e = _ints(parts[1:3], lineno, "p and e")
    modulus = _ints(parts[3].split(","), lineno, "modulus coefficients")
    try:
        F = field_new(p, e, modulus)
    except GalHullError as exc:
        raise ParseError(str(exc), lineno) from None

    if len(lines) < 2:
        raise ParseError("missing 'rows <k> <n>' line", lineno)
    lineno, dims = lines[1]
    parts = dims.split()
    if len(parts) != 3 or parts[0] != "rows":
        raise ParseError("expected 'rows <k> <n>'", lineno)
    k, n = _ints(parts[1:], lineno, "row and column counts")
    if k < 0 or n < 0:
        raise ParseError("row and column counts must be non-negative", lineno)

    body = lines[2:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {k} matrix rows, found {len(body)}", where)
    rows = []
    for lineno, ln in body:
        vals = _ints(ln.split(), lineno, "entries")
        if len(vals) != n:
            raise ParseError(f"row has {len(vals)} entries, expected {n}", lineno)
        for v in vals:
            if not 0 <= v < F.q:
                raise ParseError(f"entry {v} is not in [0, {F.q})", lineno)
        rows.append(vals)
    return F, Matrix(F, rows, n)


def serialize_code_file(F: FieldSpec, M: Matrix) -> str:
    out = [f"field {F.p} {F.e} {','.join(map(str, F.modulus))}", f"rows {M.nrows} {M.ncols}"]
    out += [" ".join(map(str, r)) for r in M.rows]
    return "\n".join(out) + "\n"


def read_code_file(path) -> tuple[FieldSpec, Matrix]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GalHullError(f"cannot read {path}: {exc.strerror}", "E_IO") from None
    try:
        return parse_code_file(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.args[0]}") from None
