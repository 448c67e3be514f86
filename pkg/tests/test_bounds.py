import math

from davenport.bounds import (JSON_SCHEMA, ball3_steinitz_count,
                              conjecture_evidence, disk_steinitz_count,
                              evaluate_bounds, rows_from_csv, rows_from_json,
                              rows_to_csv, rows_to_json, validate_rows)


def test_disk_count_m2():
    assert disk_steinitz_count(2) == 21     # points with x^2 + y^2 <= 5


def test_box2_bound_cells_m4():
    rows = evaluate_bounds("box", 2, [4])
    by_name = {r["bound_name"]: r["value"] for r in rows}
    assert by_name["support3_lower"] == 61
    assert by_name["old_upper"] == 153
    assert abs(by_name["ball_route_area_upper"]
               - math.pi * (math.sqrt(5) * 6 / 2 + 2) ** 2) < 1e-9
    assert 238.0 < by_name["ball_route_area_upper"] < 238.5


def test_ball3_bounds_m30():
    rows = evaluate_bounds("ball", 3, [30])
    by_name = {r["bound_name"]: r["value"] for r in rows}
    assert by_name["construction_lower"] == 47952
    assert abs(by_name["steinitz_volume_upper"]
               - 4 / 3 * math.pi * 70 ** 3) < 1e-6


def test_rows_consistent():
    rows = []
    rows += evaluate_bounds("ball", 2, range(2, 31))
    rows += evaluate_bounds("box", 2, range(2, 31))
    rows += evaluate_bounds("ball", 3, range(6, 41))
    rows += evaluate_bounds("box", 3, range(2, 31))
    rows += evaluate_bounds("ball", 4, range(3, 10))
    assert validate_rows(rows) == []


def test_asymptotic_rows_not_asserted():
    rows = evaluate_bounds("ball", 2, [5])
    asym = [r for r in rows if r["exactness"] == "asymptotic"]
    assert asym
    # the asymptotic lower exceeds the honest constructions at small m;
    # validate_rows must ignore it
    assert validate_rows(rows) == []


def test_csv_round_trip():
    rows = evaluate_bounds("ball", 2, range(2, 12))
    text = rows_to_csv(rows)
    assert rows_to_csv(rows_from_csv(text)) == text
    assert text.splitlines()[0] == "shape,d,m,bound_name,kind,exactness,value"


def test_json_round_trip():
    rows = evaluate_bounds("box", 3, range(2, 8))
    text = rows_to_json(rows)
    assert rows_from_json(text) == rows
    assert f'"{JSON_SCHEMA}"' in text


def test_counts_match_scaled_ball_definition():
    # spot check the 3d count against a direct scan
    m = 3
    r = 0
    count = 0
    lim = 7 * m // 3 + 1
    for x in range(-lim, lim + 1):
        for y in range(-lim, lim + 1):
            for z in range(-lim, lim + 1):
                if 9 * (x * x + y * y + z * z) <= 49 * m * m:
                    count += 1
    assert ball3_steinitz_count(m) == count


def test_conjecture_evidence_small():
    rep = conjecture_evidence(max_m_box2=3, max_m_disk=6)
    assert rep["box2"][0]["m"] == 1 and rep["box2"][0]["enumerated"] == 4
    for row in rep["box2"][1:]:
        assert row["match"] is True
    for row in rep["disk"]:
        assert 0 < row["ratio_m2"] < row["asymptote"]
