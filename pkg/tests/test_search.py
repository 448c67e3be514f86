import itertools
import random

import pytest

from davenport.lattice import apply_signed_perm, ball, box, enumerate_points, explicit, group
from davenport.search import (Budget, BudgetExceeded, bounded_zero_solutions,
                              count_scaled_ball, davenport_exact,
                              davenport_support_k_small, steinitz_cap)
from davenport.sequences import ZsSequence, is_minimal_zero_sum, sequence_sum


def test_count_scaled_ball():
    assert count_scaled_ball(2, 5 * 4, 4) == 21       # ||x||^2 <= 5
    assert count_scaled_ball(2, 10, 1) == 37          # ||x||^2 <= 10
    assert count_scaled_ball(1, 9, 1) == 7
    assert count_scaled_ball(3, 5, 1) == 57


def test_exact_box12():
    res = davenport_exact(box(1, 2))
    assert res.value == 4 and res.exact
    ok, _ = is_minimal_zero_sum(res.witness, "exhaustive")
    assert ok


def test_exact_unit_balls():
    for d in (1, 2, 3):
        res = davenport_exact(ball(1, d))
        assert res.value == 2 and res.exact


def test_exact_one_dimensional_intervals():
    for m in range(2, 11):
        res = davenport_exact(box(m, 1))
        assert res.value == 2 * m - 1 and res.exact
        assert sequence_sum(res.witness) == (0,)
    assert davenport_exact(box(1, 1)).value == 2


def _all_minimal_bruteforce(points, cap):
    """Oracle: scan every multiset over `points` of length <= cap."""
    best = 0
    n = len(points)
    d = len(points[0])
    for total in range(1, cap + 1):
        for combo in itertools.combinations_with_replacement(range(n), total):
            mults = {}
            for i in combo:
                mults[i] = mults.get(i, 0) + 1
            support = tuple(points[i] for i in mults)
            mm = tuple(mults[i] for i in mults)
            if any(not any(v) for v in support):
                # zero vector: minimal only as the singleton
                if total == 1:
                    best = max(best, 1)
                continue
            seq = ZsSequence(support, mm)
            if sequence_sum(seq) != tuple([0] * d):
                continue
            ok, _ = is_minimal_zero_sum(seq, "exhaustive")
            if ok:
                best = max(best, total)
    return best


def test_dfs_matches_bruteforce_on_tiny_grounds():
    # subsets of the unit box have D <= 4 by monotonicity, so a length-6
    # multiset scan is a complete oracle
    rng = random.Random(23)
    universe = [p for p in enumerate_points(box(1, 2))]
    for _ in range(8):
        pts = rng.sample(universe, 5)
        g = explicit(pts)
        res = davenport_exact(g)
        oracle = _all_minimal_bruteforce(g.points, 6)
        assert res.value == oracle


def test_exact_invariant_under_symmetry():
    base = box(1, 2)
    val = davenport_exact(base).value
    for elem in group(2)[:4]:
        pts = [apply_signed_perm(elem, p) for p in enumerate_points(base)]
        assert davenport_exact(explicit(pts)).value == val


def test_supk_examples():
    assert davenport_support_k_small(box(2, 2), 3).value == 13
    assert davenport_support_k_small(box(1, 2), 2).value == 2
    assert davenport_support_k_small(box(1, 2), 3).value == 4
    assert davenport_support_k_small(box(1, 2), 1).value == 1


def test_exact_dominates_supk():
    g = box(1, 2)
    full = davenport_exact(g).value
    for k in (1, 2, 3, 4):
        assert davenport_support_k_small(g, k).value <= full


def test_supk_witness_verifies():
    res = davenport_support_k_small(box(2, 2), 3)
    ok, _ = is_minimal_zero_sum(res.witness, "exhaustive")
    assert ok
    assert len(res.witness.support) == 3


def test_bounded_zero_solutions_ray():
    sols = bounded_zero_solutions([(1, 0), (0, 1), (-1, -1)], 5)
    assert sols == [(1, 1, 1), (2, 2, 2), (3, 3, 3), (4, 4, 4), (5, 5, 5)]


def test_bounded_zero_solutions_rank_deficient():
    sols = bounded_zero_solutions([(1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)], 3)
    as_set = set(sols)
    # spot checks: (1,1,1,0) and (0,1,2,1)... verify all returned are solutions
    for y in as_set:
        cols = [(1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)]
        for c in range(3):
            assert sum(y[i] * cols[i][c] for i in range(4)) == 0
    assert (1, 1, 1, 0) in as_set
    # completeness against direct product scan
    ref = set()
    cols = [(1, 0, 0), (-1, 1, 0), (0, -1, 0), (1, 1, 0)]
    for y in itertools.product(range(4), repeat=4):
        if any(y) and all(sum(y[i] * cols[i][c] for i in range(4)) == 0
                          for c in range(3)):
            ref.add(y)
    assert as_set == ref


def test_bounded_zero_solutions_injective_support():
    assert bounded_zero_solutions([(1, 0), (0, 1)], 10) == []


def test_budget_exceeded_reports_lower_bound():
    with pytest.raises(BudgetExceeded) as exc:
        davenport_exact(box(2, 2), Budget(max_nodes=50))
    assert exc.value.partial.value >= 0
    assert not exc.value.partial.exact


def test_steinitz_cap_values():
    assert steinitz_cap([(1,), (-1,)], 1) == 2
    assert steinitz_cap([(10,), (-9,)], 1) == 19
    assert steinitz_cap(enumerate_points(box(1, 2)), 2) == 9
    assert steinitz_cap([(0, 0, 1)], 3) == count_scaled_ball(3, 49, 9)
