import itertools
import random

import pytest

from nongrs.codes import (
    INFINITY,
    MAX_COSET_WORK,
    Certificate,
    GuardError,
    LinearCode,
    grs_generator,
)
from nongrs.fields import binary_field, prime_field
from nongrs.linalg import Matrix, row_space_equal

F5 = prime_field(5)
F7 = prime_field(7)
F17 = prime_field(17)

# [7,3] gap code over F17 on points (0,1,5,3,8,6) with the unit column
SEVEN_THREE_ROWS = [
    [1, 1, 1, 1, 1, 1, 0],
    [0, 1, 8, 9, 13, 2, 0],
    [0, 1, 6, 10, 2, 12, 1],
]
# its length-6 base (same rows without the extra column)
SIX_THREE_ROWS = [r[:6] for r in SEVEN_THREE_ROWS]


def seven_three_code():
    return LinearCode(Matrix(F17, SEVEN_THREE_ROWS))


def random_code(rng, field, n, k):
    while True:
        rows = [[rng.randrange(field.q) for _ in range(n)] for _ in range(k)]
        try:
            return LinearCode(Matrix(field, rows))
        except ValueError:
            continue


def test_rank_deficient_generator_rejected():
    with pytest.raises(ValueError):
        LinearCode(Matrix(F7, [[1, 2, 3], [2, 4, 6]]))


def test_min_distance_of_seven_three_code():
    assert seven_three_code().min_distance() == 5


def test_min_distance_full_space():
    c = LinearCode(Matrix.identity(F5, 3))
    assert c.min_distance() == 1


def test_min_distance_rs_five_two():
    gen = grs_generator(F5, [F5.element(i) for i in range(5)], [1] * 5, 2)
    assert LinearCode(gen).min_distance() == 4


def test_is_mds_both_methods_on_known_code():
    c = seven_three_code()
    assert c.is_mds("minors").verdict == "pass"
    assert c.is_mds("distance").verdict == "pass"


def test_is_mds_zero_column_witness():
    gen = grs_generator(F7, [F7.element(i) for i in range(5)], [1] * 5, 2)
    rows = [list(r) for r in gen.data]
    for r in rows:
        r[3] = 0
    cert = LinearCode(Matrix(F7, rows)).is_mds("minors")
    assert cert.verdict == "fail"
    assert 3 in cert.witness["columns"]


def test_is_mds_distance_witness_has_low_weight():
    rows = [[1, 1, 0, 0], [0, 0, 1, 1]]
    c = LinearCode(Matrix(F7, rows))
    cert = c.is_mds("distance")
    assert cert.verdict == "fail"
    w = cert.witness
    assert w["weight"] <= c.n - c.k
    assert sum(1 for x in w["codeword"] if x) == w["weight"]


def test_mds_methods_agree_random_sweep():
    rng = random.Random(90)
    for _ in range(60):
        q = rng.choice([2, 3, 5, 7, 11, 13, 17])
        f = prime_field(q)
        n = rng.randint(2, 8)
        k = rng.randint(1, min(4, n))
        c = random_code(rng, f, n, k)
        assert c.is_mds("minors").verdict == c.is_mds("distance").verdict


def test_singleton_bound_random_sweep():
    rng = random.Random(91)
    for _ in range(40):
        f = prime_field(rng.choice([3, 5, 7, 11]))
        n = rng.randint(2, 7)
        k = rng.randint(1, min(4, n))
        c = random_code(rng, f, n, k)
        d = c.min_distance()
        assert d <= c.n - c.k + 1
        assert (d == c.n - c.k + 1) == c.is_mds("minors").passed


def test_parity_check_of_padded_identity():
    gen = Matrix(F7, [[1, 0, 0, 0], [0, 1, 0, 0]])
    h = LinearCode(gen).parity_check()
    assert h.rows == 2
    assert row_space_equal(h, Matrix(F7, [[0, 0, 1, 0], [0, 0, 0, 1]]))


def test_parity_check_orthogonality():
    rng = random.Random(92)
    for _ in range(20):
        f = rng.choice([F7, F17, binary_field(3)])
        c = random_code(rng, f, rng.randint(2, 7), rng.randint(1, 3))
        h = c.parity_check()
        assert h.rows == c.n - c.k
        if h.rows:
            assert h.rank() == h.rows
            for row in c.generator.data:
                assert all(int(x) == 0 for x in h.vec_mul(row))


def test_extend_with_unit_vector_duplicates_coordinate():
    c = seven_three_code()
    ext = c.extend([1, 0, 0, 0, 0, 0, 0])
    for row in ext.generator.data:
        assert row[-1] == row[0]


def test_extend_then_puncture_recovers():
    c = seven_three_code()
    w = [3, 1, 4, 1, 5, 9, 2]
    ext = c.extend(w)
    assert ext.n == c.n + 1 and ext.k == c.k
    assert ext.puncture(ext.n - 1).generator == c.generator


def test_extend_rejects_zero_vector():
    with pytest.raises(ValueError):
        seven_three_code().extend([0] * 7)


def test_extended_parity_block_form():
    rng = random.Random(93)
    for _ in range(10):
        f = rng.choice([F7, F17])
        c = random_code(rng, f, rng.randint(3, 6), rng.randint(1, 2))
        w = [rng.randrange(f.q) for _ in range(c.n)]
        if not any(w):
            w[0] = 1
        ext = c.extend(w)
        h = c.parity_check()
        block_rows = [list(r) + [0] for r in h.data]
        block_rows.append(list(w) + [f.neg(1)])
        block = Matrix(f, block_rows)
        assert row_space_equal(block, ext.parity_check())


def test_schur_square_of_single_row():
    c = LinearCode(Matrix(F7, [[1, 2, 3]]))
    assert c.schur_square_dim() == 1


def test_schur_square_of_grs_is_2k_minus_1():
    gen = grs_generator(F17, [F17.element(i) for i in range(7)], [1] * 7, 3)
    assert LinearCode(gen).schur_square_dim() == 5


def test_schur_square_of_gap_extension_exceeds_bound():
    assert seven_three_code().schur_square_dim() == 6


def test_schur_square_invariant_under_row_operations():
    c = seven_three_code()
    rows = [list(r) for r in c.generator.data]
    mixed = [
        [(a + 3 * b) % 17 for a, b in zip(rows[0], rows[1])],
        [(5 * b) % 17 for b in rows[1]],
        [(a + b + c) % 17 for a, b, c in zip(*rows)],
    ]
    c2 = LinearCode(Matrix(F17, mixed))
    assert c2.schur_square_dim() == c.schur_square_dim()


def test_schur_square_invariant_under_monomial_equivalence():
    rng = random.Random(94)
    c = seven_three_code()
    base = c.schur_square_dim()
    for _ in range(5):
        perm = list(range(c.n))
        rng.shuffle(perm)
        scales = [rng.randrange(1, 17) for _ in range(c.n)]
        rows = [
            [r[p] * s % 17 for p, s in zip(perm, scales)]
            for r in c.generator.data
        ]
        assert LinearCode(Matrix(F17, rows)).schur_square_dim() == base


def test_non_grs_certificate_passes_on_gap_extension():
    cert = seven_three_code().non_grs_certificate()
    assert cert.verdict == "pass"
    assert cert.params["product_span_dim"] == 6
    assert cert.params["grs_bound"] == 5


def test_non_grs_certificate_inconclusive_on_grs():
    gen = grs_generator(F17, [F17.element(i) for i in range(7)], [1] * 7, 3)
    cert = LinearCode(gen).non_grs_certificate()
    assert cert.verdict == "inconclusive"
    assert cert.params["product_span_dim"] == 5


def test_non_grs_certificate_out_of_range():
    gen = grs_generator(F17, [F17.element(i) for i in range(5)], [1] * 5, 3)
    cert = LinearCode(gen).non_grs_certificate()
    assert cert.verdict == "inconclusive"
    assert "2k" in cert.params["reason"]


def test_non_grs_certificate_requires_mds():
    rows = [[1, 1, 0, 0, 0], [0, 0, 1, 1, 0]]
    cert = LinearCode(Matrix(F7, rows)).non_grs_certificate()
    assert cert.verdict == "inconclusive"
    assert cert.params["reason"] == "code is not MDS"


def test_grs_generator_standard_points():
    gen = grs_generator(F5, [F5.element(i) for i in range(5)], [1] * 5, 2)
    assert gen.data == ((1, 1, 1, 1, 1), (0, 1, 2, 3, 4))


def test_grs_generator_infinity_column():
    gen = grs_generator(F5, [F5.element(0), F5.element(1), INFINITY], [1, 1, 1], 2)
    assert gen.column(2) == (0, 1)


def test_grs_generator_validation():
    pts = [F5.element(0), F5.element(0)]
    with pytest.raises(ValueError):
        grs_generator(F5, pts, [1, 1], 2)
    with pytest.raises(ValueError):
        grs_generator(F5, [F5.element(0), INFINITY, INFINITY], [1, 1, 1], 2)
    with pytest.raises(ValueError):
        grs_generator(F5, [F5.element(0), F5.element(1)], [1, 0], 2)
    with pytest.raises(ValueError):
        grs_generator(F5, [F5.element(i) for i in range(5)] + [INFINITY, INFINITY], [1] * 7, 2)


def test_grs_codes_are_always_mds():
    rng = random.Random(95)
    for _ in range(25):
        q = rng.choice([5, 7, 11, 13])
        f = prime_field(q)
        n = rng.randint(2, min(8, q + 1))
        k = rng.randint(1, n)
        use_inf = rng.random() < 0.4 and n <= q
        finite = rng.sample(range(q), n - 1 if use_inf else n)
        pts = [f.element(v) for v in finite] + ([INFINITY] if use_inf else [])
        mults = [rng.randrange(1, q) for _ in range(n)]
        code = LinearCode(grs_generator(f, pts, mults, k))
        assert code.is_mds("minors").passed


def test_covering_radius_of_full_space():
    c = LinearCode(Matrix.identity(F5, 3))
    assert c.covering_radius() == 0


def test_covering_radius_binary_repetition():
    c = LinearCode(Matrix(prime_field(2), [[1, 1, 1]]))
    assert c.covering_radius() == 1


def test_covering_radius_of_dual_of_gap_code():
    dual = LinearCode(Matrix(F17, SIX_THREE_ROWS)).dual()
    assert dual.covering_radius() == 3


def test_deep_hole_certificates():
    dual = LinearCode(Matrix(F17, SIX_THREE_ROWS)).dual()
    w = [9, 15, 3, 7, 0, 0]  # support on the first four points
    cert = dual.is_deep_hole(w)
    assert cert.verdict == "pass"
    assert cert.params["covering_radius"] == 3

    # a codeword is never a deep hole of a code with positive radius
    member = list(dual.generator.data[0])
    in_code = dual.is_deep_hole(member)
    assert in_code.verdict == "fail"
    assert in_code.params["distance"] == 0

    # a vector one step short of the radius fails with a distance witness
    near = next(
        v
        for a in range(1, 17)
        for b in range(1, 17)
        for v in [[a, b, 0, 0, 0, 0]]
        if dual.distance_from(v) == 2
    )
    near_cert = dual.is_deep_hole(near)
    assert near_cert.verdict == "fail"
    assert near_cert.witness == {"distance": 2, "covering_radius": 3}


def test_dual_of_full_space_rejected():
    with pytest.raises(ValueError):
        LinearCode(Matrix.identity(F5, 3)).dual()


def test_contains():
    c = seven_three_code()
    row = list(c.generator.data[1])
    assert c.contains(row)
    row[0] = (row[0] + 1) % 17
    assert not c.contains(row)


def test_distance_guard():
    f = prime_field((1 << 31) - 1)
    c = LinearCode(Matrix(f, [[1, 1]]))
    with pytest.raises(GuardError):
        c.min_distance()


def test_minors_guard():
    f2 = prime_field(2)
    eye = Matrix.identity(f2, 32)
    gen = Matrix(f2, [list(r) + list(r) for r in eye.data])
    with pytest.raises(GuardError):
        LinearCode(gen).is_mds("minors")


def test_coset_guard():
    c = LinearCode(Matrix(F17, [[1] * 8]))
    assert 17 ** 8 > MAX_COSET_WORK
    with pytest.raises(GuardError):
        c.covering_radius()


def test_certificate_requires_witness_on_fail():
    with pytest.raises(ValueError):
        Certificate("fail", "mds")


def test_certificate_json_round_trip():
    cert = Certificate("fail", "mds", {"columns": [0, 1, 2]}, {"n": 7, "k": 3})
    again = Certificate.from_dict(cert.to_dict())
    assert again == cert


def test_code_json_round_trip():
    c = seven_three_code()
    assert LinearCode.from_dict(c.to_dict()).generator == c.generator
