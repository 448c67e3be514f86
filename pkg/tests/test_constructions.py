import math

import pytest

from davenport.constructions import ball3_s, box2_s, box3_s, disk_s1, disk_s2
from davenport.kernel import analyze, ell_of
from davenport.lattice import contains
from davenport.sequences import is_minimal_zero_sum, sequence_sum


def test_disk_s1_m5():
    vc = disk_s1(5)
    assert vc.valid
    assert vc.sequence.mults == (18, 15, 20)
    assert vc.claimed_length == 53
    assert sequence_sum(vc.sequence) == (0, 0)


def test_disk_s1_m9_reduces_to_m5():
    vc9 = disk_s1(9)
    vc5 = disk_s1(5)
    assert vc9.valid
    assert vc9.params["m_prime"] == 5
    assert vc9.sequence == vc5.sequence
    assert vc9.ground.m == 9


def test_disk_s1_length_lower_bound_formula():
    for m in range(5, 61):
        vc = disk_s1(m)
        assert vc.valid
        mp = vc.params["m_prime"]
        assert vc.claimed_length >= 64 / 25 * mp * mp - 12 / 5 * mp + 1 - 1e-9


def test_disk_s1_rejects_small_m():
    with pytest.raises(ValueError):
        disk_s1(4)


def test_disk_s2_m10():
    vc = disk_s2(10)
    assert vc.valid
    assert vc.params == {"p": 13, "a": 7, "b": 3}
    assert vc.sequence.mults == (39, 60, 70)
    assert vc.claimed_length == 169
    # norm check: 49 + 9 <= 100
    assert 7 * 7 + 3 * 3 <= 100


def test_disk_s2_asymptotic_trend():
    ratios = [disk_s2(m).claimed_length / (m * m)
              for m in range(50, 201, 50) if disk_s2(m).valid]
    target = 1.5 * math.sqrt(3)
    assert all(abs(r - target) < 0.25 for r in ratios)
    assert abs(ratios[-1] - target) < 0.1


def test_box2_examples():
    vc2 = box2_s(2)
    assert vc2.valid and vc2.sequence.mults == (5, 6, 2)
    assert vc2.claimed_length == 13
    vc3 = box2_s(3)
    assert vc3.valid and vc3.sequence.mults == (7, 15, 12)
    assert vc3.claimed_length == 34
    vc4 = box2_s(4)
    assert vc4.valid and vc4.sequence.mults == (13, 28, 20)
    assert vc4.claimed_length == 61


def test_ball3_m30():
    vc = ball3_s(30)
    assert vc.valid
    assert vc.params == {"n": 29, "c": 7, "p": 23, "q": 13, "r": 19}
    assert vc.claimed_length == 47952
    assert (19, -13, -7) in vc.sequence.support
    assert 19 * 19 + 13 * 13 + 7 * 7 <= 900


def test_ball3_length_scale():
    # length/m^3 sits below the limiting constant 16/(3 sqrt 3) ~ 3.079 and
    # approaches it slowly (every prime lags its threshold by its gap)
    target = 16 / (3 * math.sqrt(3))
    vals = []
    for m in (40, 60, 90):
        vc = ball3_s(m)
        if vc.valid:
            vals.append(vc.claimed_length / m ** 3)
    assert vals and all(1.8 < v < target + 0.05 for v in vals)


def test_box3_examples():
    vc3 = box3_s(3)
    assert vc3.valid
    assert vc3.sequence.mults == (49, 96, 93, 78)
    assert vc3.claimed_length == 316
    vc2 = box3_s(2)
    assert vc2.valid
    assert vc2.sequence.mults == (15, 20, 26, 18)
    assert vc2.claimed_length == 79


def test_box3_length_formulas():
    for m in range(2, 31):
        vc = box3_s(m)
        assert vc.valid
        if m % 2:
            assert vc.claimed_length == 16 * m ** 3 - 16 * m ** 2 + 10 * m - 2
        else:
            assert vc.claimed_length == 16 * m ** 3 - 16 * m ** 2 + 8 * m - 1


def test_all_valid_constructions_reverify():
    cases = [disk_s1(7), disk_s2(12), box2_s(5), box3_s(4), ball3_s(25)]
    for vc in cases:
        assert vc.valid, vc.summary()
        seq = vc.sequence
        assert all(contains(vc.ground, v) for v in seq.support)
        ok, cert = is_minimal_zero_sum(seq, "auto")
        assert ok and cert.method == "kernel"
        assert ell_of(analyze(seq.support)) == vc.claimed_length == seq.length


def test_invalid_is_named_not_raised():
    vc = disk_s2(2)      # p = 2 is even: no integral a exists
    assert not vc.valid
    assert vc.failing
