"""Arithmetic in GF(p^e) with Frobenius powers and the Galois forms.

Elements are plain integers in ``[0, q)``.  The base-``p`` digits of an
element, least significant first, are the coefficients of its
representative polynomial ``d_0 + d_1 a + ... + d_{e-1} a^{e-1}`` where
``a`` is a root of the field modulus.  So in ``F_8 = F_2[w]`` the element
``w^2 + 1`` is ``0b101 = 5``.

Multiplication and inversion go through discrete log / exp tables built
once per field.  Addition is XOR in characteristic 2, integer addition
mod ``p`` in prime fields, a full addition table for small odd extension
fields and Zech logarithms otherwise.  The slow polynomial routines
(:meth:`FieldSpec.mul_poly`, :meth:`FieldSpec.inv_poly`) define the
semantics and are kept for cross-checking the tables.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, Sequence

import numpy as np

from galhull.errors import GalHullError

MAX_ORDER = 1 << 16
_ADD_TABLE_MAX = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists constant term first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    m = _trim(list(m))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a, m, p):
    a = _trim(list(a))
    m = _trim(list(m))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    quot = [0] * max(len(a) - dm, 0)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        quot[shift] = c
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return _trim(quot), a


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim(list(poly))
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e``.

    Coefficient tuples are compared constant term first.
    """
    for low in itertools.product(range(p), repeat=e):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- the field ----------------------------------------------------------------


class FieldSpec:
    """The finite field GF(p^e) defined by a monic irreducible modulus.

    Instances are immutable and compare equal when ``p``, ``e`` and the
    modulus agree.  Use :func:`field_new` (cached) rather than calling the
    constructor directly.
    """

    __slots__ = (
        "p", "e", "q", "modulus", "_pw", "_exp", "_log", "_neg", "_addtab",
        "_zech", "_frob", "_np", "add", "primitive",
    )

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise GalHullError(f"characteristic {p} is not prime", "E_FIELD")
        if not isinstance(e, int) or e < 1:
            raise GalHullError(f"extension degree {e} must be >= 1", "E_FIELD")
        if p**e > MAX_ORDER:
            raise GalHullError(f"field order {p}^{e} exceeds {MAX_ORDER}", "E_FIELD")
        if modulus is None:
            modulus = smallest_irreducible(p, e)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != e + 1 or any(not 0 <= c < p for c in modulus):
            raise GalHullError(
                f"modulus must have {e + 1} coefficients in [0, {p})", "E_FIELD")
        if modulus[-1] != 1:
            raise GalHullError("modulus is not monic", "E_FIELD")
        if not is_irreducible(modulus, p):
            raise GalHullError(f"modulus {list(modulus)} is reducible over GF({p})", "E_FIELD")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._pw = [p**i for i in range(e)]
        self._build_tables()
        self._frob: dict[int, list[int]] = {0: list(range(self.q))}
        self._np = None

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __setattr__(self, name, value):
        if hasattr(self, "_np") and name not in ("_np",):
            raise AttributeError("FieldSpec is immutable")
        object.__setattr__(self, name, value)

    def __reduce__(self):
        return (field_new, (self.p, self.e, self.modulus))

    # -- encoding ----------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        return [(a // w) % self.p for w in self._pw]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.e:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pw))

    def element(self, a: int) -> int:
        """Validate an encoding."""
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise GalHullError(f"{a!r} is not an element of GF({self.q})", "E_ELEMENT")
        return int(a)

    def elements(self) -> range:
        return range(self.q)

    # -- reference polynomial arithmetic -----------------------------------

    def mul_poly(self, a: int, b: int) -> int:
        prod = _poly_mul(_trim(self.to_coeffs(a)), _trim(self.to_coeffs(b)), self.p)
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def inv_poly(self, a: int) -> int:
        """Inverse by the extended Euclidean algorithm on polynomials."""
        if a == 0:
            raise GalHullError("inverse of zero", "E_ZERO_INVERSE")
        p = self.p
        r0, r1 = list(self.modulus), _trim(self.to_coeffs(a))
        s0, s1 = [], [1]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1, p), p)
        c = pow(r1[0], p - 2, p)
        return self.from_coeffs([x * c % p for x in s1])

    def _pow_poly(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return result

    def _mul_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            # carry-less multiply with interleaved reduction
            mod = self.from_coeffs(self.modulus[:-1]) | (1 << self.e)
            top = 1 << self.e
            out = 0
            while b:
                if b & 1:
                    out ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return out
        return self.mul_poly(a, b)

    # -- tables --------------------------------------------------------------

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        order = q - 1
        factors = _prime_factors(order)
        gen = 1
        if q > 2:
            for cand in range(2, q):
                if all(self._pow_poly(cand, order // r) != 1 for r in factors):
                    gen = cand
                    break
        self.primitive = gen
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp = exp
        self._log = log

        if e == 1:
            self._neg = [(-a) % p for a in range(q)]
        else:
            self._neg = [self.from_coeffs([-c for c in self.to_coeffs(a)]) for a in range(q)]

        self._addtab = None
        self._zech = None
        if p == 2:
            self.add = int.__xor__
        elif e == 1:
            self.add = lambda a, b: (a + b) % p
        elif q <= _ADD_TABLE_MAX:
            tab = [self.from_coeffs([x + y for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))])
                   for a in range(q) for b in range(q)]
            self._addtab = tab
            self.add = lambda a, b: tab[a * q + b]
        else:
            zech = [-1] * order
            for n in range(order):
                v = exp[n]
                w = v - v % p + (v % p + 1) % p
                zech[n] = log[w] if w else -1
            self._zech = zech

            def add(a, b):
                if a == 0:
                    return b
                if b == 0:
                    return a
                la = log[a]
                z = zech[(log[b] - la) % order]
                return 0 if z < 0 else exp[la + z]

            self.add = add

    # -- arithmetic ---------------------------------------------------------

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise GalHullError("inverse of zero", "E_ZERO_INVERSE")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise GalHullError("inverse of zero", "E_ZERO_INVERSE")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def scaler(self, c: int):
        """Return a function ``t -> c*t``; cheaper than repeated :meth:`mul`."""
        if c == 0:
            return lambda t: 0
        if c == 1:
            return lambda t: t
        exp, log, lc = self._exp, self._log, self._log[c]
        return lambda t: exp[lc + log[t]] if t else 0

    def sum(self, values) -> int:
        add = self.add
        acc = 0
        for v in values:
            acc = add(acc, v)
        return acc

    # -- Frobenius -------------------------------------------------------------

    def check_level(self, ell: int) -> int:
        if not isinstance(ell, (int, np.integer)) or not 0 <= ell < self.e:
            raise GalHullError(
                f"Galois level {ell} outside [0, {self.e - 1}] for GF({self.q})", "E_LEVEL")
        return int(ell)

    def frobenius_table(self, ell: int) -> list[int]:
        """Lookup table of ``a -> a^(p^ell)``, with ``ell`` taken mod ``e``."""
        ell %= self.e
        tab = self._frob.get(ell)
        if tab is None:
            prev = self.frobenius_table(ell - 1)
            p = self.p
            # one more p-th power on top of level ell-1
            tab = [self.pow(v, p) for v in prev]
            self._frob[ell] = tab
        return tab

    def frobenius(self, a: int, ell: int) -> int:
        return self.frobenius_table(self.check_level(ell))[a]

    def in_subfield(self, a: int, m: int) -> bool:
        """True when ``a`` lies in GF(p^m), i.e. ``a^(p^m) == a``."""
        return self.frobenius_table(m)[a] == a

    # -- vectors --------------------------------------------------------------

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != len(y):
            raise GalHullError(f"length mismatch {len(x)} != {len(y)}", "E_DIMENSION")
        mul, add = self.mul, self.add
        acc = 0
        for a, b in zip(x, y):
            if a and b:
                acc = add(acc, mul(a, b))
        return acc

    def galois_inner(self, x: Sequence[int], y: Sequence[int], ell: int) -> int:
        """``sum_i x_i * y_i^(p^ell)``."""
        frob = self.frobenius_table(self.check_level(ell))
        if len(x) != len(y):
            raise GalHullError(f"length mismatch {len(x)} != {len(y)}", "E_DIMENSION")
        return self.dot(x, [frob[b] for b in y])

    # -- numpy views ------------------------------------------------------------

    @property
    def np(self) -> "NumpyArith":
        if self._np is None:
            self._np = NumpyArith(self)
        return self._np


class NumpyArith:
    """Vectorised elementwise arithmetic on integer arrays of encodings."""

    def __init__(self, F: FieldSpec):
        self.F = F
        self.q = F.q
        self.exp = np.array(F._exp + F._exp[:1], dtype=np.int64)
        self.log = np.array(F._log, dtype=np.int64)
        self.order = F.q - 1
        if F._addtab is not None:
            self.addtab = np.array(F._addtab, dtype=np.int64).reshape(F.q, F.q)
        else:
            self.addtab = None
        self.zech = None if F._zech is None else np.array(F._zech, dtype=np.int64)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        F = self.F
        if F.p == 2:
            return np.bitwise_xor(a, b)
        if F.e == 1:
            return (a + b) % F.p
        if self.addtab is not None:
            return self.addtab[a, b]
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = np.where(a == 0, b, a).astype(np.int64)
        both = (a != 0) & (b != 0)
        la = self.log[a[both]]
        z = self.zech[(self.log[b[both]] - la) % self.order]
        out[both] = np.where(z < 0, 0, self.exp[(la + np.maximum(z, 0)) % self.order])
        return out

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        res = self.exp[(self.log[a] + self.log[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, res)

    def scale(self, c: int, a: np.ndarray) -> np.ndarray:
        if c == 0:
            return np.zeros_like(a)
        res = self.exp[(self.log[a] + self.F._log[c]) % self.order]
        return np.where(a == 0, 0, res)

    def frobenius(self, a: np.ndarray, ell: int) -> np.ndarray:
        return np.asarray(self.F.frobenius_table(ell), dtype=np.int64)[a]

    def sum(self, a: np.ndarray, axis: int = -1) -> np.ndarray:
        a = np.moveaxis(np.asarray(a), axis, 0)
        acc = np.zeros(a.shape[1:], dtype=np.int64)
        for row in a:
            acc = self.add(acc, row)
        return acc


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, e, modulus)


def field_new(p: int, e: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build (or fetch the cached) GF(p^e).

    Without ``modulus`` the lexicographically smallest monic irreducible
    polynomial of degree ``e`` is used, compared constant term first.
    """
    key = None if modulus is None else tuple(int(c) for c in modulus)
    return _cached_field(p, e, key)


def iter_vectors(F: FieldSpec, n: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(F.q), repeat=n)
