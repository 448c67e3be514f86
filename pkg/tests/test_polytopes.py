import math
import random
from fractions import Fraction

import numpy as np
import pytest

from davenport.constructions import box2_s, box3_s
from davenport.kernel import POSITIVELY_DEPENDENT, analyze
from davenport.polytopes import (ZonotopePolytope, cayley_menger_Vd,
                                 greedy_reorder, simplex_vertices, tiling_check,
                                 verify_reorder, volume_float)
from davenport.sequences import ZsSequence

HEX = [(1, 0), (0, 1), (-1, -1)]


def test_membership_examples():
    P = ZonotopePolytope(HEX)
    assert P.membership((0, 0))
    assert P.membership((1, 1))
    assert not P.membership((2, 0))
    assert P.membership((Fraction(1, 2), Fraction(1, 2)))


def test_constructor_rejects_mixed_signs():
    with pytest.raises(ValueError):
        ZonotopePolytope([(1, 0), (0, 1), (1, 1)])


def test_lattice_counts():
    P = ZonotopePolytope(HEX)
    assert P.lattice_count() == 7
    assert P.dilate(2).lattice_count() == 19


def test_lattice_count_matches_plain_scan_3d():
    gens = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    P = ZonotopePolytope(gens)
    fast = P.lattice_count()
    lo, hi = P.bounding_box()
    slow = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if P.membership((x, y, z)):
                    slow += 1
    assert fast == slow


def test_volume_examples():
    assert ZonotopePolytope(HEX).volume() == 3
    m = 7
    gens = [(m, 0), (0, m), (-m, -m)]
    assert ZonotopePolytope(gens).volume() == 3 * m * m


def test_volume_regular_hexagon_and_dodecahedron():
    # unit vectors at mutual angle 2 pi / 3 scaled by m
    m = 10.0
    a = 2 * math.pi / 3
    gens = [(m, 0.0), (m * math.cos(a), m * math.sin(a)),
            (m * math.cos(2 * a), m * math.sin(2 * a))]
    assert abs(volume_float(gens) - 1.5 * math.sqrt(3) * m * m) < 1e-9
    fam = simplex_vertices(3)
    assert abs(volume_float(m * fam.vertices) - 16 / (3 * math.sqrt(3)) * m ** 3) < 1e-6


def test_dilate_count_approaches_volume():
    P = ZonotopePolytope(HEX)
    t = 50
    Pt = P.dilate(t)
    ratio = Pt.lattice_count() / float(Pt.volume())
    assert abs(ratio - 1.0) < 0.05


def test_tiling_check_hexagon():
    rep = tiling_check(ZonotopePolytope(HEX), samples=10_000, seed=1)
    assert rep.coverage_ok and rep.cones_ok and rep.volume_ok


def test_tiling_check_random_3d():
    rng = random.Random(2)
    done = 0
    while done < 20:
        gens = [tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(4)]
        sm = analyze(gens)
        if sm.classification != POSITIVELY_DEPENDENT:
            continue
        rep = tiling_check(ZonotopePolytope(gens), samples=500, seed=done)
        assert rep.coverage_ok and rep.cones_ok, gens
        done += 1


def test_greedy_reorder_tiny():
    seq = ZsSequence(tuple(HEX), (1, 1, 1))
    cert = greedy_reorder(seq)
    ver = verify_reorder(seq, cert, with_count=True)
    assert ver.ok and cert.length == 3 <= ver.lattice_count


def test_greedy_reorder_s2_and_box3():
    for vc, expect in ((box2_s(2), 13), (box3_s(2), 79)):
        cert = greedy_reorder(vc.sequence, force_python=True)
        assert cert.length == expect
        ver = verify_reorder(vc.sequence, cert, with_count=True)
        assert ver.ok
        assert cert.length <= ver.lattice_count


def test_greedy_jit_equals_python():
    vc = box3_s(5)
    fast = greedy_reorder(vc.sequence)
    slow = greedy_reorder(vc.sequence, force_python=True)
    assert fast.runs == slow.runs


def test_greedy_requires_zero_sum():
    with pytest.raises(ValueError):
        greedy_reorder(ZsSequence(tuple(HEX), (1, 1, 2)))


def test_simplex_vertices_low_dims():
    f1 = simplex_vertices(1)
    assert np.allclose(f1.vertices, [[-1.0], [1.0]])
    assert f1.delta == 2.0
    f2 = simplex_vertices(2)
    expected = np.array([[-0.5, -math.sqrt(3) / 2],
                         [-0.5, math.sqrt(3) / 2],
                         [1.0, 0.0]])
    assert np.allclose(f2.vertices, expected, atol=1e-12)
    assert abs(f2.delta - math.sqrt(3)) < 1e-15
    f3 = simplex_vertices(3)
    assert abs(f3.delta - 2 * math.sqrt(2) / math.sqrt(3)) < 1e-15


def test_delta_recursion():
    for d in range(2, 65):
        dd = math.sqrt(2 * (d + 1) / d)
        prev = math.sqrt(2 * d / (d - 1))
        assert abs(dd - math.sqrt(1 - 1 / d ** 2) * prev) < 1e-12


def test_cayley_menger_pipeline():
    for d in range(1, 9):
        rep = cayley_menger_Vd(d)
        assert rep.ok, rep
    assert abs(2 * cayley_menger_Vd(2).closed_form - 1.5 * math.sqrt(3)) < 1e-12
    assert abs(6 * cayley_menger_Vd(3).closed_form - 16 / (3 * math.sqrt(3))) < 1e-12
    assert cayley_menger_Vd(1).closed_form == 2.0


def test_volume_of_simplex_body_matches_dfact_vd():
    for d in range(2, 9):
        fam = simplex_vertices(d)
        vd = cayley_menger_Vd(d).closed_form
        assert abs(volume_float(fam.vertices) - math.factorial(d) * vd) < 1e-9
