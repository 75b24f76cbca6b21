import itertools
import random

import pytest

from nongrs.fields import (
    DEFAULT_GF2_POLYS,
    binary_field,
    field_from_spec,
    gf2_is_irreducible,
    is_prime,
    prime_field,
    smallest_irreducible,
)


def test_prime_field_enumeration_is_canonical():
    f = prime_field(17)
    elems = f.elements()
    assert len(elems) == 17
    assert [e.value for e in elems] == list(range(17))


def test_binary_field_size():
    f = binary_field(3, 0b1011)
    assert f.q == 8
    assert [e.value for e in f.elements()] == list(range(8))


def test_nonprime_modulus_rejected():
    with pytest.raises(ValueError):
        prime_field(15)


def test_reducible_polynomial_rejected():
    # x^3 + 1 = (x + 1)(x^2 + x + 1)
    with pytest.raises(ValueError):
        binary_field(3, 0b1001)


def test_wrong_degree_polynomial_rejected():
    with pytest.raises(ValueError):
        binary_field(3, 0b111)


def test_oversized_prime_rejected():
    with pytest.raises(ValueError):
        prime_field((1 << 64) + 13)


def test_invert_f17():
    f = prime_field(17)
    nine = f.element(2).inverse()
    assert nine.value == 9
    assert (f.element(2) * nine).value == 1
    assert f.element(1).inverse().value == 1


def test_invert_zero_rejected():
    f = prime_field(17)
    with pytest.raises(ZeroDivisionError):
        f.element(0).inverse()


def test_invert_f8_against_exhaustive_search():
    f = binary_field(3, 0b1011)
    x = f.element(0b010)
    # oracle: the unique nonzero partner with product one
    partner = [y for y in f.elements() if y.value and (x * y).value == 1]
    assert len(partner) == 1
    assert partner[0].value == 0b101  # x^2 + 1
    assert x.inverse() == partner[0]


def test_power_examples():
    f17 = prime_field(17)
    assert (f17.element(5) ** 3).value == 6  # 125 mod 17
    for a in f17.elements():
        assert (a ** 0).value == 1
    f8 = binary_field(3, 0b1011)
    assert (f8.element(0b010) ** 7).value == 1


def test_power_of_zero():
    f = prime_field(7)
    assert f.pow(0, 0) == 1
    assert f.pow(0, 5) == 0


def test_power_reduces_huge_exponents():
    f = prime_field(17)
    e = 10 ** 30
    for a in range(1, 17):
        assert f.pow(a, e) == f.pow(a, e % 16)
    with pytest.raises(ValueError):
        f.pow(3, -1)


def test_multiplicative_group_order():
    for f in (prime_field(13), binary_field(4), binary_field(5)):
        for a in f.elements():
            if a.value:
                assert f.pow(a.value, f.q - 1) == 1


@pytest.mark.parametrize(
    "field",
    [prime_field(2), prime_field(5), prime_field(7), binary_field(3), binary_field(4)],
    ids=["F2", "F5", "F7", "F8", "F16"],
)
def test_field_axioms_exhaustive_small(field):
    f = field
    vals = range(f.q)
    for a, b, c in itertools.product(vals, repeat=3):
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    for a, b in itertools.product(vals, repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
    for a in vals:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1


def test_field_axioms_exhaustive_f64():
    f = binary_field(6)
    vals = range(64)
    mul = f.mul
    for a, b, c in itertools.product(vals, repeat=3):
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, b ^ c) == mul(a, b) ^ mul(a, c)
    for a in vals:
        if a:
            assert mul(a, f.inv(a)) == 1


def test_field_axioms_randomized_large():
    rng = random.Random(20250810)
    for f in (prime_field(10007), prime_field((1 << 61) - 1)):
        for _ in range(2000):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.add(a, f.neg(a)) == 0
            if a:
                assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_frobenius_is_additive(m):
    f = binary_field(m)
    for a, b in itertools.product(range(f.q), repeat=2):
        lhs = f.mul(f.add(a, b), f.add(a, b))
        rhs = f.add(f.mul(a, a), f.mul(b, b))
        assert lhs == rhs


def test_default_polynomials_are_smallest_irreducible():
    for m in range(1, 9):
        assert gf2_is_irreducible(DEFAULT_GF2_POLYS[m])
        assert DEFAULT_GF2_POLYS[m] == smallest_irreducible(m)


def test_cross_field_arithmetic_rejected():
    a = prime_field(17).element(3)
    b = prime_field(19).element(3)
    with pytest.raises(ValueError):
        a + b
    c = binary_field(3, 0b1011).element(3)
    d = binary_field(3, 0b1101).element(3)
    with pytest.raises(ValueError):
        c * d


def test_equal_specs_interoperate():
    a = prime_field(17).element(5)
    b = prime_field(17).element(14)
    assert (a + b).value == 2


def test_spec_json_round_trip():
    for f in (prime_field(17), binary_field(3, 0b1011), binary_field(5)):
        assert field_from_spec(f.spec_dict()) == f
    assert field_from_spec({"kind": "prime", "p": 17}).q == 17
    assert field_from_spec({"kind": "gf2m", "m": 3, "poly": 11}).q == 8
    with pytest.raises(ValueError):
        field_from_spec({"kind": "rational"})


def test_is_prime_against_trial_division():
    def trial(n):
        if n < 2:
            return False
        return all(n % d for d in range(2, int(n ** 0.5) + 1))

    for n in range(2000):
        assert is_prime(n) == trial(n)
