import random

import pytest

from davenport.kernel import POSITIVELY_DEPENDENT, analyze
from davenport.sequences import (Undecided, ZsSequence,
                                 is_minimal_zero_sum, recheck_certificate,
                                 seq_from_file, seq_to_file, sequence_sum)


def test_sequence_sum_examples():
    assert sequence_sum(ZsSequence(((1, 0), (-1, 0)), (1, 1))) == (0, 0)
    s3 = ZsSequence(((3, 3), (1, -3), (-3, 2)), (7, 15, 12))
    assert sequence_sum(s3) == (0, 0)
    assert sequence_sum(ZsSequence(((2, 1),), (4,))) == (8, 4)


def test_sequence_validation():
    with pytest.raises(ValueError):
        ZsSequence(((1, 0), (1, 0)), (1, 1))        # repeated support
    with pytest.raises(ValueError):
        ZsSequence(((1, 0),), (0,))                 # nonpositive multiplicity


def test_minimal_u_minus_u():
    seq = ZsSequence(((2, 1), (-2, -1)), (1, 1))
    ok, cert = is_minimal_zero_sum(seq, strategy="exhaustive")
    assert ok and recheck_certificate(seq, cert)


def test_nonminimal_pair_doubled():
    seq = ZsSequence(((1, 0), (-1, 0)), (2, 2))
    ok, cert = is_minimal_zero_sum(seq, strategy="exhaustive")
    assert not ok
    assert recheck_certificate(seq, cert)
    ok2, cert2 = is_minimal_zero_sum(seq, strategy="lattice")
    assert not ok2 and recheck_certificate(seq, cert2)


def test_disk_sequence_kernel_certificate():
    seq = ZsSequence(((0, 5), (-4, -2), (3, -3)), (18, 15, 20))
    ok, cert = is_minimal_zero_sum(seq, strategy="kernel")
    assert ok and cert.method == "kernel"
    assert seq.length == 53
    assert recheck_certificate(seq, cert)


def test_kernel_rejects_multiple_of_primitive():
    seq = ZsSequence(((1, 0), (0, 1), (-1, -1)), (2, 2, 2))
    ok, cert = is_minimal_zero_sum(seq, strategy="kernel")
    assert not ok
    assert cert.violation == (1, 1, 1)
    assert recheck_certificate(seq, cert)


def test_strategies_agree_randomized():
    rng = random.Random(11)
    checked = 0
    while checked < 120:
        d = rng.choice((2, 3))
        cols = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(d + 1)]
        if len(set(cols)) != d + 1 or any(not any(c) for c in cols):
            continue
        sm = analyze(cols)
        if sm.classification != POSITIVELY_DEPENDENT:
            continue
        mults = sm.mults
        if sum(mults) > 22:
            continue
        t = rng.choice((1, 1, 2))
        seq = ZsSequence(cols, tuple(t * x for x in mults))
        if seq.length > 24:
            continue
        k, _ = is_minimal_zero_sum(seq, strategy="kernel")
        e, _ = is_minimal_zero_sum(seq, strategy="exhaustive")
        l, _ = is_minimal_zero_sum(seq, strategy="lattice")
        assert k == e == l == (t == 1)
        checked += 1


def test_auto_picks_kernel_for_full_support():
    seq = ZsSequence(((3, 3), (1, -3), (-3, 2)), (7, 15, 12))
    ok, cert = is_minimal_zero_sum(seq, strategy="auto")
    assert ok and cert.method == "kernel"


def test_lattice_strategy_on_rank_deficient_support():
    # four coplanar vectors in Z^3: kernel dimension 2
    seq = ZsSequence(((1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)),
                     (1, 2, 3, 1))
    ok, cert = is_minimal_zero_sum(seq, strategy="lattice")
    assert not ok and recheck_certificate(seq, cert)
    seq2 = ZsSequence(((1, 0, 0), (-1, 1, 0), (0, -1, 0)), (1, 1, 1))
    ok2, cert2 = is_minimal_zero_sum(seq2, strategy="lattice")
    assert ok2


def test_lattice_budget_undecided():
    seq = ZsSequence(((1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)),
                     (500, 750, 1000, 250))
    assert sequence_sum(seq) == (0, 0, 0)
    with pytest.raises(Undecided):
        is_minimal_zero_sum(seq, strategy="lattice", lattice_budget=1000)


def test_file_round_trip(tmp_path):
    seq = ZsSequence(((0, 5), (-4, -2), (3, -3)), (18, 15, 20))
    path = tmp_path / "seq.txt"
    seq_to_file(seq, str(path))
    back = seq_from_file(str(path))
    assert back == seq
    text = path.read_text().splitlines()
    assert text[0] == "2 3"


def test_auto_raises_undecided_on_large_degenerate_instance():
    seq = ZsSequence(((1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)),
                     (500, 750, 1000, 250))
    with pytest.raises(Undecided):
        is_minimal_zero_sum(seq, strategy="auto", lattice_budget=1000)
