"""Closed-form bound evaluation across m and d, comparison tables combining
formulas, exact lattice-point counts, and construction lengths; CSV/JSON
emission with a fixed schema.

Row schema (long format, one row per bound value):

    shape,d,m,bound_name,kind,exactness,value

kind is "lower" or "upper" (or "exact" for enumerated exact values);
exactness is "exact" for pointwise-valid claims and "asymptotic" for
formula cells that are only asymptotically meaningful and are never used
in inequality assertions.
"""

from __future__ import annotations

import csv
import io
import json
import math

from . import constructions, primes
from .search import count_scaled_ball

CSV_HEADER = ["shape", "d", "m", "bound_name", "kind", "exactness", "value"]
JSON_SCHEMA = "davenport-bounds/1"


def row(shape, d, m, name, kind, exactness, value):
    return {"shape": shape, "d": d, "m": m, "bound_name": name,
            "kind": kind, "exactness": exactness, "value": value}


def disk_steinitz_count(m: int) -> int:
    """#{(x, y) : 4(x^2 + y^2) <= 5 m^2}: the exact lattice-point count of
    the disk of radius sqrt(5)m/2 that upper-bounds reordered partial sums."""
    return count_scaled_ball(2, 5 * m * m, 4)


def ball3_steinitz_count(m: int) -> int:
    """#{x in Z^3 : 9 ||x||^2 <= 49 m^2}."""
    return count_scaled_ball(3, 49 * m * m, 9)


def _rows_ball2(m: int) -> list:
    out = []
    out.append(row("ball", 2, m, "steinitz_count_upper", "upper", "exact",
                   disk_steinitz_count(m)))
    out.append(row("ball", 2, m, "area_upper", "upper", "exact",
                   math.pi * (math.sqrt(5) * m / 2 + 2) ** 2))
    if m >= 5:
        out.append(row("ball", 2, m, "thm_explicit_lower", "lower", "exact",
                       64 * m * m / 25 - 23 * m + 51))
        s1 = constructions.disk_s1(m)
        if s1.valid:
            out.append(row("ball", 2, m, "construction_s1_lower", "lower",
                           "exact", s1.claimed_length))
            mp = s1.params["m_prime"]
            out.append(row("ball", 2, m, "intermediate_lower", "lower", "exact",
                           64 * mp * mp / 25 - 12 * mp / 5 + 1))
    s2 = constructions.disk_s2(m)
    if s2.valid:
        out.append(row("ball", 2, m, "construction_s2_lower", "lower", "exact",
                       s2.claimed_length))
    out.append(row("ball", 2, m, "asym_lower_3sqrt3_2", "lower", "asymptotic",
                   1.5 * math.sqrt(3) * m * m))
    out.append(row("ball", 2, m, "asym_upper_5pi_4", "upper", "asymptotic",
                   1.25 * math.pi * m * m))
    return out


def _rows_box2(m: int) -> list:
    out = []
    q = primes.q_of(m)
    out.append(row("box", 2, m, "support3_lower", "lower", "exact",
                   4 * m * m - q))
    out.append(row("box", 2, m, "old_lower", "lower", "exact",
                   (2 * m - 1) ** 2))
    out.append(row("box", 2, m, "old_upper", "upper", "exact",
                   (2 * m + 1) * (4 * m + 1)))
    # route through the covering ball of radius ceil(sqrt(2) m)
    rc = math.isqrt(2 * m * m)
    if rc * rc < 2 * m * m:
        rc += 1
    out.append(row("box", 2, m, "ball_route_count_upper", "upper", "exact",
                   disk_steinitz_count(rc)))
    out.append(row("box", 2, m, "ball_route_area_upper", "upper", "exact",
                   math.pi * (math.sqrt(5) * rc / 2 + 2) ** 2))
    out.append(row("box", 2, m, "asym_upper_5pi_2", "upper", "asymptotic",
                   2.5 * math.pi * m * m))
    return out


def _rows_ball3(m: int) -> list:
    out = []
    out.append(row("ball", 3, m, "steinitz_volume_upper", "upper", "exact",
                   4.0 / 3.0 * math.pi * (7 * m / 3) ** 3))
    if m >= 6:
        s = constructions.ball3_s(m)
        if s.valid:
            out.append(row("ball", 3, m, "construction_lower", "lower", "exact",
                           s.claimed_length))
    out.append(row("ball", 3, m, "asym_lower_16_3sqrt3", "lower", "asymptotic",
                   16 / (3 * math.sqrt(3)) * m ** 3))
    return out


def _rows_box3(m: int) -> list:
    out = []
    s = constructions.box3_s(m)
    if s.valid:
        out.append(row("box", 3, m, "support4_lower", "lower", "exact",
                       s.claimed_length))
    out.append(row("box", 3, m, "old_lower", "lower", "exact",
                   (2 * m - 1) ** 3))
    out.append(row("box", 3, m, "old_upper", "upper", "exact",
                   (14 * m / 3 + 1) ** 3))
    out.append(row("box", 3, m, "asym_16m3", "lower", "asymptotic",
                   16 * m ** 3))
    return out


def _rows_generic(shape: str, d: int, m: int) -> list:
    """d >= 4: only the general sandwich is available."""
    out = []
    upper = (2 * (d + 1 / d - 1) * m + 1) ** d
    if shape == "ball":
        t = math.isqrt((m * m) // d)
        out.append(row("ball", d, m, "generic_lower", "lower", "exact",
                       max(0, 2 * t - 1) ** d))
    else:
        out.append(row("box", d, m, "generic_lower", "lower", "exact",
                       (2 * m - 1) ** d))
    out.append(row(shape, d, m, "generic_upper", "upper", "exact", upper))
    return out


def evaluate_bounds(shape: str, d: int, m_values) -> list:
    """All named bounds for the requested shape/dimension across m."""
    if shape not in ("box", "ball"):
        raise ValueError("shape must be 'box' or 'ball'")
    out = []
    for m in m_values:
        if d == 2 and shape == "ball":
            out.extend(_rows_ball2(m))
        elif d == 2 and shape == "box":
            out.extend(_rows_box2(m))
        elif d == 3 and shape == "ball":
            out.extend(_rows_ball3(m))
        elif d == 3 and shape == "box":
            out.extend(_rows_box3(m))
        elif d == 1:
            out.append(row(shape, 1, m, "interval_exact", "lower", "exact",
                           2 if m == 1 else 2 * m - 1))
            out.append(row(shape, 1, m, "interval_exact_upper", "upper",
                           "exact", 2 if m == 1 else 2 * m - 1))
        else:
            out.extend(_rows_generic(shape, d, m))
    return out


def validate_rows(rows: list) -> list:
    """Check every exact lower <= every exact upper per (shape, d, m);
    returns the list of violations (empty when consistent)."""
    groups = {}
    for r in rows:
        if r["exactness"] != "exact":
            continue
        groups.setdefault((r["shape"], r["d"], r["m"]), []).append(r)
    bad = []
    for key, rs in groups.items():
        lowers = [r for r in rs if r["kind"] == "lower"]
        uppers = [r for r in rs if r["kind"] == "upper"]
        for lo in lowers:
            for hi in uppers:
                if lo["value"] > hi["value"]:
                    bad.append((key, lo["bound_name"], hi["bound_name"],
                                lo["value"], hi["value"]))
    return bad


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _fmt_value(v):
    if isinstance(v, bool):
        raise TypeError("boolean bound value")
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def rows_to_csv(rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r["shape"], r["d"], r["m"], r["bound_name"], r["kind"],
                    r["exactness"], _fmt_value(r["value"])])
    return buf.getvalue()


def rows_from_csv(text: str) -> list:
    rd = csv.reader(io.StringIO(text))
    header = next(rd)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header}")
    out = []
    for rec in rd:
        if not rec:
            continue
        shape, d, m, name, kind, exactness, value = rec
        try:
            val = int(value)
        except ValueError:
            val = float(value)
        out.append(row(shape, int(d), int(m), name, kind, exactness, val))
    return out


def rows_to_json(rows: list) -> str:
    return json.dumps({"schema": JSON_SCHEMA, "rows": rows}, indent=1)


def rows_from_json(text: str) -> list:
    doc = json.loads(text)
    if doc.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unexpected schema {doc.get('schema')!r}")
    return doc["rows"]


# ---------------------------------------------------------------------------
# conjecture evidence tables
# ---------------------------------------------------------------------------

def conjecture_evidence(max_m_box2: int = 8, max_m_disk: int = 12,
                        workers: int = 1) -> dict:
    """Evidence tables comparing enumerated support-(d+1) values with the
    closed forms and the conjectured asymptote.  Rows are labeled
    conjectural where the claim is unproven."""
    from . import kernel as kernelmod
    from . import lattice
    from .search import davenport_exact

    box_rows = []
    d_box1 = davenport_exact(lattice.box(1, 2))
    box_rows.append({"m": 1, "enumerated": d_box1.value, "formula": None,
                     "match": None,
                     "note": "full Davenport constant, support unrestricted"})
    for m in range(2, max_m_box2 + 1):
        res = kernelmod.davenport_support_dp1(lattice.box(m, 2), workers=workers)
        formula = 4 * m * m - primes.q_of(m)
        box_rows.append({"m": m, "enumerated": res.value, "formula": formula,
                         "match": res.value == formula,
                         "note": "support-3 value; equality with D is conjectural"})

    disk_rows = []
    target = 1.5 * math.sqrt(3)
    for m in range(5, max_m_disk + 1):
        res = kernelmod.davenport_support_dp1(lattice.ball(m, 2), workers=workers)
        disk_rows.append({"m": m, "enumerated": res.value,
                          "ratio_m2": res.value / (m * m),
                          "asymptote": target,
                          "note": "support-3 value; asymptote is a limit claim"})
    return {"box2": box_rows, "disk": disk_rows}
