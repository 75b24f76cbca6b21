import itertools
import random

import pytest

from nongrs.fields import binary_field, prime_field
from nongrs.symfunc import (
    EvalSet,
    complete_homogeneous,
    complete_values,
    dual_weight_values,
    dual_weights,
    elementary_symmetric,
    elementary_values,
    parity_weight,
    parity_weight_values,
)

F7 = prime_field(7)
F17 = prime_field(17)


def complete_by_enumeration(field, vals, t):
    """Direct monomial-sum oracle for the complete symmetric function."""
    if t < 0:
        return 0
    acc = 0
    for combo in itertools.combinations_with_replacement(vals, t):
        prod = 1
        for v in combo:
            prod = field.mul(prod, v)
        acc = field.add(acc, prod)
    return acc


def elementary_by_enumeration(field, vals, t):
    if t > len(vals):
        return 0
    acc = 0
    for combo in itertools.combinations(vals, t):
        prod = 1
        for v in combo:
            prod = field.mul(prod, v)
        acc = field.add(acc, prod)
    return acc


class TestEvalSet:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            EvalSet(F7, [1, 2, 1])

    def test_rejects_too_many_points(self):
        with pytest.raises(ValueError):
            EvalSet(F7, list(range(7)) + [0])
        with pytest.raises(ValueError):
            EvalSet(F7, [])

    def test_preserves_order(self):
        es = EvalSet(F17, [0, 1, 5, 3, 8, 6])
        assert es.values == (0, 1, 5, 3, 8, 6)

    def test_json_round_trip(self):
        es = EvalSet(binary_field(3), [1, 4, 7])
        assert EvalSet.from_dict(es.to_dict()) == es


def test_elementary_conventions():
    es = EvalSet(F17, [2, 5, 11])
    assert elementary_symmetric(0, es).value == 1
    assert elementary_symmetric(4, es).value == 0  # t > n


def test_elementary_example():
    es = EvalSet(F17, [0, 1, 5])
    assert elementary_symmetric(2, es).value == 5


def test_complete_conventions():
    es = EvalSet(F7, [1, 2])
    assert complete_homogeneous(0, es).value == 1
    assert complete_homogeneous(-3, es).value == 0


def test_complete_examples():
    assert complete_homogeneous(2, EvalSet(F7, [1, 2])).value == 0  # 1+2+4
    assert complete_homogeneous(2, EvalSet(F17, [1, 2, 3])).value == 8  # 25 mod 17


def test_complete_recurrence_matches_enumeration():
    rng = random.Random(41)
    fields = [F7, F17, binary_field(3), binary_field(4)]
    for _ in range(60):
        f = rng.choice(fields)
        n = rng.randint(1, 4)
        vals = tuple(rng.sample(range(f.q), n))
        for t in range(6):
            assert complete_values(f, vals, t) == complete_by_enumeration(f, vals, t)


def test_elementary_matches_enumeration():
    rng = random.Random(42)
    for _ in range(40):
        f = rng.choice([F7, F17, binary_field(4)])
        n = rng.randint(1, 5)
        vals = tuple(rng.sample(range(f.q), n))
        for t in range(n + 2):
            assert elementary_values(f, vals, t) == elementary_by_enumeration(f, vals, t)


def test_alternating_relation():
    # sum_{t=0..N} (-1)^t e_t h_{N-t} = 0 for N >= 1
    rng = random.Random(43)
    for q in (7, 11, 13, 17):
        f = prime_field(q)
        for _ in range(30):
            n = rng.randint(1, 6)
            vals = tuple(rng.sample(range(q), n))
            for big_n in range(1, 9):
                acc = 0
                for t in range(big_n + 1):
                    term = f.mul(
                        elementary_values(f, vals, t),
                        complete_values(f, vals, big_n - t),
                    )
                    acc = f.sub(acc, term) if t % 2 else f.add(acc, term)
                assert acc == 0


def test_symmetry_under_permutation():
    rng = random.Random(44)
    for _ in range(20):
        f = rng.choice([F17, binary_field(4)])
        vals = rng.sample(range(f.q), 4)
        shuffled = vals[:]
        rng.shuffle(shuffled)
        for t in range(5):
            assert elementary_values(f, vals, t) == elementary_values(f, shuffled, t)
            assert complete_values(f, vals, t) == complete_values(f, shuffled, t)


def test_dual_weights_example():
    es = EvalSet(F7, [1, 2, 3])
    assert [u.value for u in dual_weights(es)] == [4, 6, 4]


def test_dual_weights_binary_pair():
    f2 = prime_field(2)
    assert [u.value for u in dual_weights(EvalSet(f2, [0, 1]))] == [1, 1]


def test_dual_weights_need_two_points():
    with pytest.raises(ValueError):
        dual_weights(EvalSet(F7, [3]))


def test_dual_weights_nonzero_and_sum_zero():
    rng = random.Random(45)
    for _ in range(25):
        f = rng.choice([F7, F17, binary_field(3)])
        n = rng.randint(2, min(6, f.q))
        vals = rng.sample(range(f.q), n)
        u = dual_weight_values(f, vals)
        assert all(u)
        acc = 0
        for x in u:
            acc = f.add(acc, x)
        assert acc == 0


def test_dual_weight_power_sums():
    # sum u_i a_i^h vanishes for h <= n-2 and equals h_(h-n+1) above
    rng = random.Random(46)
    for q in (7, 11, 13, 17):
        f = prime_field(q)
        for _ in range(15):
            n = rng.randint(2, 6)
            vals = rng.sample(range(q), n)
            u = dual_weight_values(f, vals)
            for h in range(0, n + 5):
                acc = 0
                for ui, a in zip(u, vals):
                    acc = f.add(acc, f.mul(ui, f.pow(a, h)))
                if h <= n - 2:
                    assert acc == 0
                else:
                    assert acc == complete_values(f, vals, h - n + 1)


def test_parity_weight_small_example():
    # n=4, k=2, r=1 on points 1..4 over F7: first weight is a^2 - e_1*a = 5
    es = EvalSet(F7, [1, 2, 3, 4])
    assert parity_weight(1, 0, es, 2).value == 5


def test_parity_weight_against_direct_expansion():
    f = F17
    es = EvalSet(f, [0, 1, 5, 3, 8, 6])
    n, k, r = 6, 3, 2
    got = parity_weight_values(f, es.values, r, k)
    for i, a in enumerate(es.values):
        acc = 0
        for j in range(r + 1):
            sig = elementary_by_enumeration(f, es.values, j)
            term = f.mul(sig, f.pow(a, (n - k) + (r - 1) - j))
            acc = f.sub(acc, term) if j % 2 else f.add(acc, term)
        assert got[i] == acc


def test_parity_weight_rejects_negative_exponents():
    es = EvalSet(F7, [1, 2, 3])
    with pytest.raises(ValueError):
        parity_weight_values(F7, es.values, 1, 3)  # n = k makes n-k-1 < 0


def test_parity_weight_index_range():
    es = EvalSet(F7, [1, 2, 3])
    with pytest.raises(ValueError):
        parity_weight(1, 5, es, 2)
