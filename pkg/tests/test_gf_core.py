import itertools
import pickle
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_hartley.errors import (
    DegreeMismatch,
    EvenCharacteristic,
    FieldMismatch,
    NoSuchOrder,
    NotPrime,
    OutOfRangeCoefficient,
    ParseError,
    ReducibleModulus,
    ZeroElement,
    ZeroInverse,
)
from galois_hartley.gf_core import (
    element_order,
    factorize,
    find_element_of_order,
    format_poly,
    inv,
    is_irreducible,
    is_primitive_modulus,
    is_quadratic_residue,
    make_field,
    parse_poly,
)

from _oracles import (
    first_of_order_by_scan,
    irreducible_by_search,
    mul_by_division,
    order_by_iteration,
    squares,
)

SMALL_FIELDS = [(7, 1, None), (3, 2, None), (3, 3, None), (7, 2, "x^2+1"), (3, 5, "x^5+x^4+x^2+1")]


def field_ids(spec):
    return f"{spec[0]}^{spec[1]}"


# -- construction ------------------------------------------------------------


def test_prime_field_has_trivial_modulus():
    F = make_field(7, 1)
    assert (F.p, F.r, F.q) == (7, 1, 7)
    assert F.modulus == (0, 1)
    assert format_poly(F.modulus) == "x"


def test_quintic_modulus_accepted(gf243):
    assert gf243.modulus == (1, 0, 1, 0, 1, 1)
    assert gf243.q == 243


def test_x2_plus_1_over_gf7_is_accepted():
    # oracle: no root by exhaustive search, degree 2 so irreducible
    assert all((x * x + 1) % 7 for x in range(7))
    F = make_field(7, 2, "x^2+1")
    assert F.modulus == (1, 0, 1)


@pytest.mark.parametrize(
    "args, err",
    [
        ((9, 1), NotPrime),
        ((1, 1), NotPrime),
        ((2, 3), EvenCharacteristic),
        ((7, 0), DegreeMismatch),
        ((7, 2, "x^3+1"), DegreeMismatch),
        ((5, 2, "x^2+1"), ReducibleModulus),  # 2^2 = -1 mod 5
        ((3, 2, "x^2+2"), ReducibleModulus),  # x^2 - 1
        ((7, 2, "2x^2+1"), OutOfRangeCoefficient),
        ((7, 2, "x^2+8"), OutOfRangeCoefficient),
    ],
)
def test_make_field_errors(args, err):
    with pytest.raises(err):
        make_field(*args)


@pytest.mark.parametrize("p, r", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (7, 3), (11, 2)])
def test_generated_modulus_is_first_irreducible(p, r):
    spec = make_field(p, r)
    # oracle: enumerate candidates x^r + (c_{r-1}, ..., c_0) with the constant term varying fastest
    for high_first in itertools.product(range(p), repeat=r):
        cand = list(reversed(high_first)) + [1]
        if irreducible_by_search(cand, p):
            break
    assert list(spec.modulus) == cand


def test_make_field_is_deterministic():
    assert make_field(3, 5) == make_field(3, 5)
    assert make_field(3, 5).modulus == make_field(3, 5).modulus
    assert hash(make_field(7, 2)) == hash(make_field(7, 2, "x^2+1"))


@pytest.mark.parametrize("p, r", [(3, 2), (3, 3), (5, 2), (3, 4), (7, 2)])
def test_rabin_matches_exhaustive_factor_search(p, r):
    for low in itertools.product(range(p), repeat=r):
        cand = list(low) + [1]
        assert is_irreducible(cand, p) == irreducible_by_search(cand, p), cand


def test_quintic_modulus_is_primitive(gf243):
    assert is_primitive_modulus(gf243)
    assert not is_primitive_modulus(make_field(7, 2, "x^2+1"))  # x has order 4


def test_factorize():
    assert factorize(242) == {2: 1, 11: 2}
    assert factorize(1) == {}
    assert factorize(2 ** 10 * 3 ** 4 * 1009) == {2: 10, 3: 4, 1009: 1}


# -- arithmetic ----------------------------------------------------------------


def test_gf7_worked_values(gf7):
    assert gf7(3) + gf7(5) == gf7(1)
    assert -gf7(3) == gf7(4)
    assert gf7(3) * gf7(5) == gf7(1)
    assert gf7(3) * gf7(3) == gf7(2)
    assert inv(gf7(2)) == gf7(4)
    assert gf7(3) ** -2 == gf7(4)
    assert gf7(3) - gf7(5) == gf7(5)


def test_gf243_worked_values(gf243):
    x = gf243.generator
    assert x + gf243.parse("x^4+2x") == gf243.parse("x^4")
    # x^5 = -x^4 - x^2 - 1 = 2x^4 + 2x^2 + 2
    assert x ** 4 * x == gf243.parse("2x^4+2x^2+2")
    assert mul_by_division(x ** 4, x) == gf243.parse("2x^4+2x^2+2")


def test_field_mismatch(gf7, gf243):
    with pytest.raises(FieldMismatch):
        gf7(1) + gf243(1)
    with pytest.raises(FieldMismatch):
        gf7(1) * make_field(11)(1)


def test_zero_has_no_inverse(gf7, gf243):
    with pytest.raises(ZeroInverse):
        inv(gf7.zero)
    with pytest.raises(ZeroInverse):
        gf243.zero ** -1


def test_pow_zero_is_one(gf243):
    for x in (gf243.zero, gf243.one, gf243.generator):
        assert x ** 0 == gf243.one


def test_field_axioms_exhaustive_gf7(gf7):
    els = list(gf7.elements())
    zero, one = gf7.zero, gf7.one
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a in els:
        assert a + zero == a and a * one == a and a + (-a) == zero
        if a:
            assert a * inv(a) == one


def test_field_axioms_randomized_gf243(gf243):
    rng = random.Random(243)
    zero, one = gf243.zero, gf243.one
    for _ in range(10_000):
        a, b, c = (gf243.random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a + zero == a and a * one == a and a - a == zero
        if a:
            assert a * inv(a) == one


def test_mul_matches_long_division(gf243):
    rng = random.Random(5)
    for _ in range(2000):
        a, b = gf243.random_element(rng), gf243.random_element(rng)
        assert a * b == mul_by_division(a, b)


@pytest.mark.parametrize("spec", SMALL_FIELDS, ids=field_ids)
def test_fermat_and_order_divides(spec):
    F = make_field(*spec)
    for x in F.elements():
        if x:
            assert x ** (F.q - 1) == F.one
            assert (F.q - 1) % element_order(x) == 0


@pytest.mark.parametrize("spec", SMALL_FIELDS, ids=field_ids)
def test_order_matches_iteration(spec):
    F = make_field(*spec)
    for x in F.elements():
        if x:
            assert element_order(x) == order_by_iteration(x)


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(1, 242))
def test_pow_is_additive(a, b, idx):
    F = make_field(3, 5, "x^5+x^4+x^2+1")
    x = F.from_index(idx)
    assert x ** (a + b) == x ** a * x ** b


@pytest.mark.parametrize("spec", SMALL_FIELDS, ids=field_ids)
def test_linear_frobenius_matches_pow(spec):
    F = make_field(*spec)
    for x in F.elements():
        for s in range(2 * F.r + 1):
            assert x.frobenius(s) == x ** (F.p ** s)


def test_order_examples(gf7, gf243):
    assert element_order(gf7(3)) == 6
    assert element_order(gf7.one) == 1
    alpha = gf243.generator
    assert element_order(alpha ** 22) == 11
    with pytest.raises(ZeroElement):
        element_order(gf7.zero)


@pytest.mark.parametrize("spec", [(7, 1, None), (19, 1, None), (3, 5, "x^5+x^4+x^2+1"), (7, 2, "x^2+1")], ids=field_ids)
def test_find_element_of_order_matches_scan(spec):
    F = make_field(*spec)
    for n in factorize_divisors(F.q - 1):
        assert find_element_of_order(F, n) == first_of_order_by_scan(F, n)


def factorize_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_find_element_of_order_examples(gf7, gf243):
    assert find_element_of_order(gf7, 6) == gf7(3)
    with pytest.raises(NoSuchOrder):
        find_element_of_order(gf7, 5)
    e = find_element_of_order(gf243, 11)
    assert e ** 11 == gf243.one and e != gf243.one


def test_quadratic_residue_examples(gf7):
    assert not is_quadratic_residue(gf7(-1))
    assert is_quadratic_residue(gf7(2))
    assert is_quadratic_residue(gf7.one)
    with pytest.raises(ZeroElement):
        is_quadratic_residue(gf7.zero)


@pytest.mark.parametrize("spec", SMALL_FIELDS, ids=field_ids)
def test_quadratic_residue_matches_squares(spec):
    F = make_field(*spec)
    sq = squares(F)
    for x in F.elements():
        if x:
            assert is_quadratic_residue(x) == (x in sq)


@settings(max_examples=300)
@given(st.integers(1, 242), st.integers(1, 242))
def test_residue_character_is_multiplicative(i, k):
    F = make_field(3, 5, "x^5+x^4+x^2+1")
    x, y = F.from_index(i), F.from_index(k)
    assert is_quadratic_residue(x * y) == (is_quadratic_residue(x) == is_quadratic_residue(y))


def test_minus_one_residue_iff_q_is_1_mod_4():
    for p, r in [(3, 1), (3, 2), (3, 3), (5, 1), (7, 1), (7, 2), (11, 1), (13, 1), (19, 1)]:
        F = make_field(p, r)
        assert is_quadratic_residue(-F.one) == (F.q % 4 == 1)


# -- text format ---------------------------------------------------------------


def test_parse_poly():
    assert parse_poly("x^5+x^4+x^2+1") == {5: 1, 4: 1, 2: 1, 0: 1}
    assert parse_poly(" 2x^3 + 2*x + 7 ") == {3: 2, 1: 2, 0: 7}
    assert parse_poly("x") == {1: 1}


@pytest.mark.parametrize("text", ["", "x^", "x+", "+x", "x-1", "x+x", "2*", "y"])
def test_parse_poly_rejects(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as exc:
        parse_poly("x^2+1-3")
    assert exc.value.position == 5


def test_element_text(gf7, gf243):
    assert str(gf7(5)) == "5"
    assert gf243.parse("x^4+2x").coeffs == (0, 2, 0, 0, 1)
    assert str(gf243.parse("x^4+2x")) == "x^4+2x"
    assert str(gf243.zero) == "0"
    with pytest.raises(OutOfRangeCoefficient):
        gf243.parse("x^5")
    with pytest.raises(OutOfRangeCoefficient):
        gf7.parse("7")
    with pytest.raises(OutOfRangeCoefficient):
        gf7.parse("x")


@given(st.integers(0, 242))
def test_element_text_round_trip(idx):
    F = make_field(3, 5, "x^5+x^4+x^2+1")
    x = F.from_index(idx)
    assert F.parse(str(x)) == x
    assert x.index == idx


def test_elements_are_immutable_and_picklable(gf243):
    x = gf243.generator
    with pytest.raises(AttributeError):
        x.coeffs = (1,)
    assert pickle.loads(pickle.dumps(x)) == x
