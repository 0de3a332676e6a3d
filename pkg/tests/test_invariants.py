import pytest
from hypothesis import given, strategies as st

from citopo.invariants import (
    InvariantProfile,
    canonicalize,
    chern_coefficient,
    euler_characteristic,
    pontrjagin_coefficient,
    power_sums,
    profile,
    total_degree,
)

from util import (
    check_hypersurface_euler,
    check_integrality_sweep,
    check_padding_invariance,
    check_projective_space_euler,
    check_specialized_agreement,
)

TWELVE_PART_A = (116, 114, 96, 78, 59, 55, 50, 40, 32, 22, 13, 9)
TWELVE_PART_B = (118, 110, 100, 72, 64, 57, 48, 39, 29, 26, 11, 10)


def test_canonicalize_sorts_and_strips_ones():
    assert canonicalize([1, 5, 3, 6]) == (6, 5, 3)
    assert canonicalize([]) == ()
    assert canonicalize([2, 2, 9, 2]) == (9, 2, 2, 2)


def test_canonicalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        canonicalize([0, 3])
    with pytest.raises(ValueError):
        canonicalize([-2])


@given(st.lists(st.integers(min_value=1, max_value=50)))
def test_canonicalize_is_multiset_canonical(raw):
    md = canonicalize(raw)
    assert list(md) == sorted(md, reverse=True)
    assert all(v >= 2 for v in md)
    assert sorted(md) == sorted(v for v in raw if v > 1)


def test_total_degree():
    assert total_degree((6, 5, 3)) == 90
    assert total_degree((20, 20, 11, 7, 4)) == 123200
    assert total_degree(()) == 1


def test_power_sums():
    assert power_sums((6, 5, 3), 3) == [14, 70, 368]
    assert power_sums((), 5) == [0, 0, 0, 0, 0]
    assert power_sums(TWELVE_PART_A, 7) == [
        684, 54116, 5008824, 503305604, 52970710824,
        5730100991396, 630552267588024,
    ]


def test_chern_coefficient():
    assert chern_coefficient(2, (6, 5, 3), 1) == -8
    assert chern_coefficient(3, (70, 16, 16, 14, 7, 6), 1) == -119
    assert chern_coefficient(3, (56, 49, 8, 6, 5, 4, 4), 1) == -121
    for n in range(2, 8):
        assert chern_coefficient(n, (), 1) == n + 1


def test_chern_coefficient_range():
    with pytest.raises(ValueError):
        chern_coefficient(3, (2,), 4)
    with pytest.raises(ValueError):
        chern_coefficient(3, (2,), 0)


def test_pontrjagin_coefficient():
    assert pontrjagin_coefficient(3, (20, 20, 11, 7, 4), 1) == -977
    assert pontrjagin_coefficient(4, (36, 33, 30, 20, 14, 7, 7), 2) == 9807916
    assert pontrjagin_coefficient(5, (52, 50, 30, 27, 23, 18, 6, 5, 4), 2) == 37660770


def test_pontrjagin_range():
    with pytest.raises(ValueError):
        pontrjagin_coefficient(3, (2,), 2)


def test_euler_characteristic():
    assert euler_characteristic(2, (6, 5, 3)) == 5760
    assert euler_characteristic(3, (20, 20, 11, 7, 4)) == -6974721600
    assert euler_characteristic(2, (4,)) == 24


def test_projective_space_euler():
    check_projective_space_euler()


def test_hypersurface_euler_oracle():
    check_hypersurface_euler()


def test_profile_table_row():
    pr = profile(4, (66, 63, 29, 23, 6, 4))
    assert pr.d == 66561264
    assert pr.p == (-9736, 65253028)
    assert pr.e == 11837353833553248


def test_profile_equal_for_equal_power_sums():
    # pairs sharing d and s_1..s_n must produce identical profiles
    pairs = [
        (5, (54, 48, 30, 30, 13, 11, 11, 4), (55, 44, 39, 18, 18, 16, 6, 5)),
        (5, (112, 93, 91, 50, 45, 20, 18), (108, 105, 78, 62, 35, 25, 16)),
        (7, TWELVE_PART_A, TWELVE_PART_B),
        (6, TWELVE_PART_A, TWELVE_PART_B),
    ]
    for n, a, b in pairs:
        assert total_degree(a) == total_degree(b)
        assert power_sums(a, n) == power_sums(b, n)
        assert len(a) == len(b)
        assert profile(n, a) == profile(n, b)


def test_fifteen_part_profiles_match():
    a = (596, 592, 556, 520, 480, 450, 438, 423, 408, 404, 381, 369, 327, 312, 300)
    b = (600, 584, 564, 508, 492, 447, 436, 417, 416, 400, 390, 360, 333, 306, 303)
    assert profile(7, a) == profile(7, b)


def test_profile_record_round_trip():
    pr = profile(5, (52, 50, 30, 27, 23, 18, 6, 5, 4), with_chern=True)
    rec = pr.to_record()
    assert all(isinstance(rec[k], str) for k in ("d", "c1", "e"))
    assert InvariantProfile.from_record(rec) == pr


def test_d_p1_composite():
    pr = profile(2, (6, 5, 3))
    assert pr.d_p1 == -5760


def test_degree_one_padding_invariance():
    check_padding_invariance(200)


def test_integrality_sweep():
    check_integrality_sweep()


def test_specialized_formulas_agree():
    check_specialized_agreement(500)
