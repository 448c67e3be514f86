import math
import random

from davenport.optimize import (DODECA_FULL, DODECA_REDUCED, HEXAGON,
                                dodeca_full, dodeca_reduced, dodeca_vectors,
                                hexagon_area, maximize,
                                simplex_local_max_evidence)
from davenport.polytopes import volume_float

TARGET_HEX = 1.5 * math.sqrt(3)
TARGET_DODECA = 16 / (3 * math.sqrt(3))


def test_hexagon_values():
    assert abs(hexagon_area(2 * math.pi / 3, 2 * math.pi / 3) - TARGET_HEX) < 1e-12
    assert abs(hexagon_area(math.pi / 2, math.pi / 2) - 2.0) < 1e-12
    assert abs(hexagon_area(math.pi / 3, math.pi / 3) - math.sqrt(3) / 2) < 1e-12


def test_hexagon_symmetry():
    rng = random.Random(1)
    for _ in range(100):
        a = rng.uniform(0.01, math.pi - 0.01)
        b = rng.uniform(0.01, math.pi - 0.01)
        assert hexagon_area(a, b) == hexagon_area(b, a)


def test_dodeca_reduced_values():
    th = math.acos(-1 / 3)
    t1 = math.acos(1 / math.sqrt(3))
    assert abs(dodeca_reduced(th, t1) - TARGET_DODECA) < 1e-12
    assert abs(dodeca_reduced(math.pi / 2, math.pi / 4) - 2 * math.sqrt(2)) < 1e-12


def test_maximize_hexagon():
    res = maximize(HEXAGON, grid_n=256)
    t = 2 * math.pi / 3
    assert abs(res.point[0] - t) < 1e-6 and abs(res.point[1] - t) < 1e-6
    assert abs(res.value - TARGET_HEX) < 1e-9
    assert res.grad_inf < 1e-5


def test_maximize_dodeca_reduced():
    res = maximize(DODECA_REDUCED, grid_n=64)
    assert abs(math.cos(res.point[0]) + 1 / 3) < 1e-6
    assert abs(res.value - TARGET_DODECA) < 1e-6
    assert res.grad_inf < 1e-5


def test_maximize_dodeca_full_and_critical_relations():
    res = maximize(DODECA_FULL, grid_n=9, seed=0)
    assert res.value >= TARGET_DODECA - 1e-5
    th, t1, t2, p1, p2 = res.point
    assert abs(p1 - p2) < 1e-4
    assert abs(t1 + t2) < 1e-4
    assert abs(p1 - (th / 2 + math.pi)) < 1e-4


def test_full_volume_matches_generator_volume():
    rng = random.Random(7)
    for _ in range(200):
        th = rng.uniform(0.05, math.pi - 0.05)
        t1 = rng.uniform(0.05, math.pi / 2 - 0.01)
        t2 = rng.uniform(-math.pi / 2 + 0.01, -0.05)
        p1 = rng.uniform(math.pi, 2 * math.pi)
        p2 = rng.uniform(math.pi, 2 * math.pi)
        v1 = float(dodeca_full(th, t1, t2, p1, p2))
        v2 = volume_float(dodeca_vectors(th, t1, t2, p1, p2))
        assert abs(v1 - v2) < 1e-9


def test_maximize_deterministic():
    a = maximize(DODECA_FULL, grid_n=9, seed=3)
    b = maximize(DODECA_FULL, grid_n=9, seed=3)
    assert a.point == b.point and a.value == b.value


def test_simplex_evidence():
    for d in (2, 3, 4):
        rep = simplex_local_max_evidence(d, trials=300, eps=1e-3, seed=0)
        assert rep.ok
        assert rep.proved_dimension == (d <= 3)
        target = math.sqrt((d + 1) ** (d + 1) / d ** d)   # d! * V_d
        assert abs(rep.base_volume - target) < 1e-9
