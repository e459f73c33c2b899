import itertools

import pytest
from hypothesis import given, settings, strategies as st

from galhull.errors import GalHullError
from galhull.field import field_new, is_irreducible, smallest_irreducible

F8 = field_new(2, 3, [1, 1, 0, 1])
SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5), (7, 2), (2, 6)]


def small_fields():
    return [field_new(p, e) for p, e in SMALL]


@pytest.mark.parametrize("modulus, expected", [
    ([1, 1, 0, 1], 8),
    ([1, 1, 1], 4),
])
def test_field_new_explicit_moduli(modulus, expected):
    F = field_new(2, len(modulus) - 1, modulus)
    assert F.q == expected
    assert F.modulus == tuple(modulus)


def test_prime_field_default_modulus_is_x():
    F = field_new(3, 1)
    assert F.modulus == (0, 1)
    assert F.q == 3


def test_default_modulus_is_lexicographically_smallest():
    # brute force: first irreducible in constant-term-first lexicographic order
    for p, e in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]:
        cands = [list(c) + [1] for c in itertools.product(range(p), repeat=e)]
        first = next(c for c in cands if is_irreducible(c, p))
        assert field_new(p, e).modulus == tuple(first) == smallest_irreducible(p, e)
    assert field_new(2, 3).modulus == (1, 0, 1, 1)      # x^3 + x^2 + 1
    assert field_new(3, 2).modulus == (1, 0, 1)         # x^2 + 1


@pytest.mark.parametrize("p, e, modulus", [
    (4, 1, None),                # not prime
    (2, 0, None),
    (2, 17, None),               # q > 2^16
    (2, 2, [1, 0, 1]),           # x^2 + 1 = (x + 1)^2
    (2, 3, [1, 1, 0, 0]),        # not monic
    (3, 2, [1, 3, 1]),           # coefficient out of range
    (2, 3, [1, 1, 1]),           # wrong degree
])
def test_field_new_rejects(p, e, modulus):
    with pytest.raises(GalHullError) as exc:
        field_new(p, e, modulus)
    assert exc.value.code == "E_FIELD"


def test_largest_supported_field():
    F = field_new(2, 16)
    assert F.q == 65536
    a = 12345
    assert F.mul(a, F.inv(a)) == 1
    assert F.mul(a, 777) == F.mul_poly(a, 777)


def test_f8_arithmetic_examples():
    assert F8.mul(2, 2) == 4
    assert F8.mul(4, 2) == 3           # w^3 = w + 1
    F3 = field_new(3, 1)
    assert F3.add(2, 2) == 1


@pytest.mark.parametrize("F", small_fields(), ids=lambda F: f"GF{F.q}")
def test_tables_match_polynomial_arithmetic(F):
    if F.q > 64:
        pytest.skip("exhaustive check limited to q <= 64")
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == F.mul_poly(a, b)
            ca, cb = F.to_coeffs(a), F.to_coeffs(b)
            assert F.add(a, b) == F.from_coeffs([x + y for x, y in zip(ca, cb)])
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.inv(a) == F.inv_poly(a)
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("F", small_fields(), ids=lambda F: f"GF{F.q}")
def test_field_axioms_exhaustive(F):
    if F.q > 16:
        elems = range(0, F.q, max(1, F.q // 16))
    else:
        elems = range(F.q)
    for a, b, c in itertools.product(elems, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)


def test_zech_addition_matches_digits():
    F = field_new(3, 6)    # 729 > table limit, uses Zech logarithms
    assert F._zech is not None
    for a in range(0, F.q, 7):
        for b in range(0, F.q, 11):
            assert F.add(a, b) == F.from_coeffs([x + y for x, y in zip(F.to_coeffs(a), F.to_coeffs(b))])


def test_inverse_of_zero():
    with pytest.raises(GalHullError) as exc:
        F8.inv(0)
    assert exc.value.code == "E_ZERO_INVERSE"


def test_frobenius_examples():
    assert F8.frobenius(2, 1) == 4
    assert F8.frobenius(5, 1) == 7     # (w^2 + 1)^2 = w^2 + w + 1
    for F in small_fields():
        for ell in range(F.e):
            assert F.frobenius(1, ell) == 1


def test_frobenius_rejects_bad_level():
    with pytest.raises(GalHullError) as exc:
        F8.frobenius(3, 3)
    assert exc.value.code == "E_LEVEL"
    with pytest.raises(GalHullError):
        F8.frobenius(3, -1)


@pytest.mark.parametrize("F", [f for f in small_fields() if f.q <= 64], ids=lambda F: f"GF{F.q}")
def test_frobenius_is_automorphism(F):
    for ell in range(F.e):
        for a in range(F.q):
            # repeated p-th powers via the polynomial route
            ref = a
            for _ in range(ell):
                ref = F._pow_poly(ref, F.p)
            assert F.frobenius(a, ell) == ref
            for b in range(F.q):
                assert F.frobenius(F.add(a, b), ell) == F.add(F.frobenius(a, ell), F.frobenius(b, ell))
                assert F.frobenius(F.mul(a, b), ell) == F.mul(F.frobenius(a, ell), F.frobenius(b, ell))
    # sigma^e is the identity
    tab = F.frobenius_table(F.e)
    assert tab == list(range(F.q))
    assert all(F._pow_poly(a, F.q) == a for a in range(F.q))


def test_galois_inner_examples():
    assert F8.galois_inner([1, 1, 3, 3], [0, 5, 1, 0], 1) == 4
    assert F8.galois_inner([0, 0, 0], [3, 6, 7], 2) == 0
    F3 = field_new(3, 1)
    x = [2, 2, 2, 2, 1, 1, 1, 1]
    assert F3.galois_inner(x, x, 0) == 2


def test_galois_inner_length_mismatch():
    with pytest.raises(GalHullError) as exc:
        F8.galois_inner([1, 2], [1], 0)
    assert exc.value.code == "E_DIMENSION"


def test_element_validation():
    with pytest.raises(GalHullError):
        F8.element(8)
    assert F8.element(7) == 7


vec_fields = [field_new(2, 2), field_new(3, 2), field_new(2, 4), field_new(2, 3), field_new(5, 2)]


@st.composite
def vector_pair(draw, fields=vec_fields):
    F = draw(st.sampled_from(fields))
    n = draw(st.integers(1, 8))
    elem = st.integers(0, F.q - 1)
    x = draw(st.lists(elem, min_size=n, max_size=n))
    y = draw(st.lists(elem, min_size=n, max_size=n))
    return F, x, y


@settings(max_examples=200, deadline=None)
@given(vector_pair())
def test_level_zero_is_dot_product(case):
    F, x, y = case
    expected = 0
    for a, b in zip(x, y):
        expected = F.add(expected, F.mul_poly(a, b))
    assert F.galois_inner(x, y, 0) == expected


@settings(max_examples=200, deadline=None)
@given(vector_pair([field_new(2, 2), field_new(3, 2), field_new(2, 4)]))
def test_hermitian_form_is_conjugate_symmetric(case):
    F, x, y = case
    half = F.e // 2
    assert F.galois_inner(x, y, half) == F.frobenius(F.galois_inner(y, x, half), half)


@settings(max_examples=200, deadline=None)
@given(vector_pair(), st.integers(0, 5))
def test_galois_inner_is_dot_with_conjugate(case, ell):
    F, x, y = case
    ell %= F.e
    conj = [F.frobenius(b, ell) for b in y]
    assert F.galois_inner(x, y, ell) == F.dot(x, conj)


def test_fields_are_value_objects():
    assert field_new(2, 3) == field_new(2, 3, [1, 0, 1, 1])
    assert field_new(2, 3) != F8
    with pytest.raises(AttributeError):
        F8.p = 3
