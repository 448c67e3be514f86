"""Zonotope-like bodies spanned by d+1 positively dependent generators:
exact membership, lattice-point counting, volume, the two parallelepiped
decompositions, the greedy partial-sum reordering, and the regular-simplex
volume pipeline.

The body of generators w_1..w_{d+1} is the convex hull of all sums of 1..d
distinct generators (a hexagon for d=2, a rhombic dodecahedron for d=3).
It equals the union of the d+1 parallelepipeds

    L_i = { sum_{j != i} a_j w_j : 0 <= a_j <= 1 }

and also the union of their translates w_i + L_i.  Membership in L_i is one
exact d x d linear solve.  The volume is sum_i |det(B_i)| with B_i the
basis omitting w_i.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernel as kernelmod
from .sequences import ZsSequence

try:
    from numba import njit as _njit
    _HAVE_NUMBA = True
except Exception:                                    # pragma: no cover
    _HAVE_NUMBA = False


class StuckStep(RuntimeError):
    """The greedy reordering found no admissible parallelepiped; impossible
    for zero-sum sequences over a positively dependent support."""


def _det_bareiss(rows):
    """Fraction-free Bareiss determinant; independent of the cofactor route
    used by the support-matrix module."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _adjugate_int(rows):
    n = len(rows)
    det = kernelmod.det_exact(rows)
    if n == 1:
        return [[1]], det
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * kernelmod.det_exact(minor)
    return adj, det


class ZonotopePolytope:
    """Body of d+1 positively dependent generators with exact queries."""

    def __init__(self, generators):
        gens = [tuple(g) for g in generators]
        d = len(gens[0])
        if len(gens) != d + 1:
            raise ValueError(f"need d+1 = {d + 1} generators, got {len(gens)}")
        self.d = d
        self.generators = tuple(gens)
        self.integral = all(isinstance(c, int) for g in gens for c in g)
        sm = kernelmod.analyze(gens)
        if sm.classification != kernelmod.POSITIVELY_DEPENDENT:
            raise ValueError(
                f"generators must be positively dependent (got {sm.classification})")
        self.support_matrix = sm
        self._bases = []
        for i in range(d + 1):
            cols = [g for j, g in enumerate(gens) if j != i]
            rows = [[cols[j][r] for j in range(d)] for r in range(d)]
            self._bases.append(rows)
        if self.integral:
            self._adj = []
            self._det = []
            for rows in self._bases:
                adj, det = _adjugate_int(rows)
                self._adj.append(adj)
                self._det.append(det)

    def dilate(self, t: int) -> "ZonotopePolytope":
        return ZonotopePolytope([tuple(t * c for c in g) for g in self.generators])

    # -- membership -------------------------------------------------------

    def coords_in_basis(self, i: int, x):
        """Coordinates of x in the basis omitting generator i (exact)."""
        if self.integral and all(isinstance(c, int) for c in x):
            det = self._det[i]
            adj = self._adj[i]
            return [Fraction(sum(adj[r][c] * x[c] for c in range(self.d)), det)
                    for r in range(self.d)]
        # general exact solve
        rows = [[Fraction(v) for v in row] for row in self._bases[i]]
        rhs = [Fraction(c) for c in x]
        n = self.d
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if piv is None:
                raise ArithmeticError("singular basis")
            rows[col], rows[piv] = rows[piv], rows[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            for r in range(n):
                if r != col and rows[r][col] != 0:
                    f = rows[r][col] / rows[col][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
                    rhs[r] = rhs[r] - f * rhs[col]
        return [rhs[r] / rows[r][r] for r in range(n)]

    def in_piece(self, i: int, x) -> bool:
        return all(0 <= a <= 1 for a in self.coords_in_basis(i, x))

    def membership(self, x) -> bool:
        """Exact: x lies in some parallelepiped L_i."""
        return any(self.in_piece(i, x) for i in range(self.d + 1))

    def membership_translated(self, x) -> bool:
        """Exact: x lies in some translate w_i + L_i."""
        for i in range(self.d + 1):
            shifted = tuple(a - b for a, b in zip(x, self.generators[i]))
            if self.in_piece(i, shifted):
                return True
        return False

    # -- volume and counting ----------------------------------------------

    def volume(self) -> Fraction:
        """sum_i |det(basis omitting w_i)|, exact."""
        total = Fraction(0)
        for rows in self._bases:
            total += abs(_det_bareiss(rows))
        return total

    def bounding_box(self):
        lo, hi = [], []
        for c in range(self.d):
            lo.append(sum(min(0, g[c]) for g in self.generators))
            hi.append(sum(max(0, g[c]) for g in self.generators))
        return lo, hi

    def _int64_safe(self, extent) -> bool:
        amax = max(abs(a) for adj in self._adj for row in adj for a in row)
        return self.d * amax * (extent + 1) < 2 ** 62

    def lattice_count(self, chunk: int = 1 << 19) -> int:
        """Exact number of integer points in the body (bounding-box scan
        with exact membership; vectorized when int64-safe)."""
        if not self.integral:
            raise ValueError("lattice_count requires integer generators")
        lo, hi = self.bounding_box()
        extent = max(abs(v) for v in lo + hi)
        sizes = [hi[c] - lo[c] + 1 for c in range(self.d)]
        total_pts = math.prod(sizes)
        if not self._int64_safe(extent):
            return sum(1 for p in itertools.product(
                *[range(lo[c], hi[c] + 1) for c in range(self.d)])
                if self.membership(p))
        axes = [np.arange(lo[c], hi[c] + 1, dtype=np.int64) for c in range(self.d)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, self.d)
        count = 0
        adjs = [np.asarray(a, dtype=np.int64) for a in self._adj]
        dets = self._det
        for s in range(0, total_pts, chunk):
            block = grid[s: s + chunk]
            keep = np.zeros(len(block), dtype=bool)
            for i in range(self.d + 1):
                nums = block @ adjs[i].T
                det = dets[i]
                if det > 0:
                    ok = ((nums >= 0) & (nums <= det)).all(axis=1)
                else:
                    ok = ((nums <= 0) & (nums >= det)).all(axis=1)
                keep |= ok
            count += int(keep.sum())
        return count


def volume_float(generators) -> float:
    """Float volume sum_i |det| for real-valued generators (no positivity
    or integrality requirement; used by the optimizer cross-checks)."""
    gens = np.asarray(generators, dtype=float)
    k, d = gens.shape
    total = 0.0
    for i in range(k):
        rows = np.delete(gens, i, axis=0)
        total += abs(np.linalg.det(rows.T))
    return total


# ---------------------------------------------------------------------------
# tiling / covering property checks
# ---------------------------------------------------------------------------

@dataclass
class TilingReport:
    d: int
    samples: int
    coverage_ok: bool           # sampled hull points in some L_i and w_i+L_i
    cones_ok: bool              # sampled R^d points in some positive cone
    volume_exact: float
    volume_mc: float
    volume_z: float             # binomial z-score of the MC estimate
    volume_ok: bool             # |z| <= 3
    failures: int

    @property
    def ok(self) -> bool:
        return self.coverage_ok and self.cones_ok and self.volume_ok


def tiling_check(P: ZonotopePolytope, samples: int = 1000, seed: int = 0,
                 box_samples: int | None = None, eps: float = 1e-9) -> TilingReport:
    """Sampled evidence for the two decompositions and the cone covering.

    (1) Monte-Carlo volume of the union of the L_i matches sum_i |det|
        within a 3-sigma binomial band; (2) random hull points lie in some
        L_i and in some w_i + L_i; (3) random points of R^d lie in some
        positive cone spanned by d of the generators.
    """
    rng = np.random.default_rng(seed)
    d = P.d
    gens = np.asarray([[float(c) for c in g] for g in P.generators])
    k = d + 1
    binv = []
    for i in range(k):
        rows = np.asarray([[float(v) for v in row] for row in P._bases[i]])
        binv.append(np.linalg.inv(rows))

    def in_union(points, shift_by=None):
        """points: (n, d); membership in union of (shifted) pieces."""
        inside = np.zeros(len(points), dtype=bool)
        for i in range(k):
            q = points if shift_by is None else points - gens[i]
            alpha = q @ binv[i].T
            inside |= ((alpha >= -eps) & (alpha <= 1 + eps)).all(axis=1)
        return inside

    # hull points: random convex combinations of the vertex candidates
    verts = [np.zeros(d)]
    for r in range(1, d + 1):
        for combo in itertools.combinations(range(k), r):
            verts.append(gens[list(combo)].sum(axis=0))
    verts = np.asarray(verts)
    w = rng.dirichlet(np.ones(len(verts)), size=samples)
    hull_pts = w @ verts
    cov1 = in_union(hull_pts)
    cov2 = in_union(hull_pts, shift_by=True)
    coverage_ok = bool(cov1.all() and cov2.all())
    failures = int((~cov1).sum() + (~cov2).sum())

    # cone covering of R^d
    scale = np.abs(gens).max() + 1.0
    z = rng.standard_normal((samples, d)) * scale
    in_cone = np.zeros(len(z), dtype=bool)
    for i in range(k):
        alpha = z @ binv[i].T
        in_cone |= (alpha >= -eps).all(axis=1)
    cones_ok = bool(in_cone.all())
    failures += int((~in_cone).sum())

    # Monte-Carlo volume of the union vs the exact minor sum
    n_box = box_samples or max(2048, samples)
    lo, hi = P.bounding_box()
    lo = np.asarray([float(v) for v in lo])
    hi = np.asarray([float(v) for v in hi])
    box_vol = float(np.prod(hi - lo))
    u = rng.random((n_box, d)) * (hi - lo) + lo
    phat = in_union(u).mean()
    vol_mc = phat * box_vol
    vol_exact = float(P.volume())
    sigma = box_vol * math.sqrt(max(phat * (1 - phat), 1.0 / n_box) / n_box)
    zscore = (vol_mc - vol_exact) / sigma if sigma > 0 else 0.0
    return TilingReport(d, samples, coverage_ok, cones_ok, vol_exact,
                        vol_mc, zscore, abs(zscore) <= 3.0, failures)


# ---------------------------------------------------------------------------
# greedy partial-sum reordering
# ---------------------------------------------------------------------------

@dataclass
class ReorderCertificate:
    generators: tuple
    runs: list                  # [(generator index, repeat count), ...]
    length: int

    def index_array(self) -> np.ndarray:
        out = np.empty(self.length, dtype=np.int8)
        pos = 0
        for idx, cnt in self.runs:
            out[pos: pos + cnt] = idx
            pos += cnt
        return out


if _HAVE_NUMBA:
    @_njit(cache=True)
    def _walk_jit(gens, adjs, dets, counts, out_idx):     # pragma: no cover
        k, d = gens.shape
        total = out_idx.shape[0]
        s = np.zeros(d, np.int64)
        remaining = counts.copy()
        for step in range(total):
            chosen = -1
            for j in range(k):
                det = dets[j]
                ok = True
                for r in range(d):
                    num = 0
                    for c in range(d):
                        num += adjs[j, r, c] * s[c]
                    if det > 0:
                        if num < 0 or num > det:
                            ok = False
                            break
                    else:
                        if num > 0 or num < det:
                            ok = False
                            break
                if ok:
                    chosen = j
                    break
            if chosen < 0 or remaining[chosen] <= 0:
                return step
            out_idx[step] = chosen
            remaining[chosen] -= 1
            for c in range(d):
                s[c] += gens[chosen, c]
        return total


def _walk_py(P: ZonotopePolytope, mults):
    d = P.d
    k = d + 1
    s = [0] * d
    remaining = list(mults)
    idx_seq = []
    total = sum(mults)
    adj = P._adj
    det = P._det
    for _ in range(total):
        chosen = -1
        for j in range(k):
            dj = det[j]
            ok = True
            for r in range(d):
                num = sum(adj[j][r][c] * s[c] for c in range(d))
                if dj > 0:
                    if num < 0 or num > dj:
                        ok = False
                        break
                else:
                    if num > 0 or num < dj:
                        ok = False
                        break
            if ok:
                chosen = j
                break
        if chosen < 0 or remaining[chosen] <= 0:
            return idx_seq, False
        idx_seq.append(chosen)
        remaining[chosen] -= 1
        g = P.generators[chosen]
        for c in range(d):
            s[c] += g[c]
    return idx_seq, True


def greedy_reorder(seq: ZsSequence, force_python: bool = False) -> ReorderCertificate:
    """Order the multiset so every partial sum stays inside the body of its
    support: repeatedly emit the lowest-index generator whose parallelepiped
    contains the running sum.  Exact integer arithmetic throughout."""
    P = ZonotopePolytope(seq.support)
    if not P.integral:
        raise ValueError("greedy reordering requires integer support")
    from .sequences import sequence_sum
    if any(sequence_sum(seq)):
        raise ValueError("sequence must be zero-sum")
    total = seq.length
    lo, hi = P.bounding_box()
    extent = max(abs(v) for v in lo + hi) + max(
        abs(c) for g in seq.support for c in g)
    use_jit = _HAVE_NUMBA and not force_python and total > 4096 \
        and P._int64_safe(extent)
    if use_jit:
        gens = np.asarray(seq.support, dtype=np.int64)
        adjs = np.asarray(P._adj, dtype=np.int64)
        dets = np.asarray(P._det, dtype=np.int64)
        counts = np.asarray(seq.mults, dtype=np.int64)
        out_idx = np.empty(total, dtype=np.int8)
        done = _walk_jit(gens, adjs, dets, counts, out_idx)
        if done != total:
            raise StuckStep(f"no admissible piece at step {done}")
        idx_arr = out_idx
    else:
        idx_seq, ok = _walk_py(P, seq.mults)
        if not ok:
            raise StuckStep(f"no admissible piece at step {len(idx_seq)}")
        idx_arr = np.asarray(idx_seq, dtype=np.int8)
    # run-length encode
    runs = []
    if total:
        change = np.nonzero(np.diff(idx_arr))[0]
        starts = np.concatenate(([0], change + 1))
        ends = np.concatenate((change + 1, [total]))
        runs = [(int(idx_arr[s]), int(e - s)) for s, e in zip(starts, ends)]
    used = [0] * len(seq.support)
    for i, c in runs:
        used[i] += c
    if tuple(used) != seq.mults:
        raise StuckStep("walk did not consume the exact multiplicities")
    return ReorderCertificate(seq.support, runs, total)


@dataclass
class ReorderVerification:
    length: int
    sums_inside: bool
    sums_distinct: bool
    final_zero: bool
    lattice_count: int | None = None

    @property
    def ok(self) -> bool:
        return self.sums_inside and self.sums_distinct and self.final_zero


def verify_reorder(seq: ZsSequence, cert: ReorderCertificate,
                   with_count: bool = False,
                   chunk: int = 1 << 19) -> ReorderVerification:
    """Re-check a reorder certificate: all partial sums in the body, all
    distinct, final sum zero; optionally compare against the lattice count."""
    P = ZonotopePolytope(seq.support)
    d = P.d
    idx = cert.index_array()
    gens = np.asarray(seq.support, dtype=np.int64)
    steps = gens[idx.astype(np.int64)]
    sums = np.cumsum(steps, axis=0)
    final_zero = bool((sums[-1] == 0).all())

    lo, hi = P.bounding_box()
    extent = max(abs(v) for v in lo + hi)
    if not P._int64_safe(extent):
        # exact fallback (small instances only)
        seen = set()
        inside = True
        for row in sums:
            t = tuple(int(v) for v in row)
            seen.add(t)
            if not P.membership(t):
                inside = False
                break
        report = ReorderVerification(cert.length, inside,
                                     len(seen) == cert.length, final_zero)
    else:
        adjs = [np.asarray(a, dtype=np.int64) for a in P._adj]
        dets = P._det
        inside = True
        for s in range(0, len(sums), chunk):
            block = sums[s: s + chunk]
            keep = np.zeros(len(block), dtype=bool)
            for i in range(d + 1):
                nums = block @ adjs[i].T
                det = dets[i]
                if det > 0:
                    ok = ((nums >= 0) & (nums <= det)).all(axis=1)
                else:
                    ok = ((nums <= 0) & (nums >= det)).all(axis=1)
                keep |= ok
            if not keep.all():
                inside = False
                break
        spans = [int(hi[c] - lo[c] + 1) for c in range(d)]
        packed = np.zeros(len(sums), dtype=np.int64)
        for c in range(d):
            packed = packed * spans[c] + (sums[:, c] - lo[c])
        distinct = len(np.unique(packed)) == cert.length
        report = ReorderVerification(cert.length, inside, distinct, final_zero)
    if with_count:
        report.lattice_count = P.lattice_count()
    return report


# ---------------------------------------------------------------------------
# regular simplex vertices and volume
# ---------------------------------------------------------------------------

@dataclass
class SimplexFamily:
    d: int
    vertices: np.ndarray        # (d+1, d)
    delta: float                # common pairwise distance sqrt(2(d+1)/d)


def simplex_vertices(d: int, tol: float = 1e-12) -> SimplexFamily:
    """d+1 unit vectors pairwise at distance sqrt(2(d+1)/d), built by the
    recursion sigma_i^(d) = (-1/d, sqrt(1-1/d^2) sigma_i^(d-1)), with the
    last vertex (1, 0, ..., 0)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    verts = np.array([[-1.0], [1.0]])
    for dd in range(2, d + 1):
        prev = verts
        scale = math.sqrt(1.0 - 1.0 / dd ** 2)
        block = np.hstack([np.full((dd, 1), -1.0 / dd), scale * prev])
        last = np.zeros((1, dd))
        last[0, 0] = 1.0
        verts = np.vstack([block, last])
    delta = math.sqrt(2.0 * (d + 1) / d)
    norms = np.linalg.norm(verts, axis=1)
    if not np.allclose(norms, 1.0, atol=tol):
        raise AssertionError("simplex vertices not on the unit sphere")
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            dist = float(np.linalg.norm(verts[i] - verts[j]))
            if abs(dist - delta) > tol:
                raise AssertionError("simplex vertices not equidistant")
    return SimplexFamily(d, verts, delta)


@dataclass
class VdReport:
    d: int
    closed_form: float
    cayley_menger: float
    edge_det: float
    det_ud: int                 # det of (ones + I), must be d+1
    max_spread: float

    @property
    def ok(self) -> bool:
        return self.max_spread <= 1e-9 and self.det_ud == self.d + 1


def cayley_menger_Vd(d: int) -> VdReport:
    """Volume of the regular unit-sphere d-simplex three ways: closed form
    (1/d!) sqrt((d+1)^{d+1} / d^d), the Cayley-Menger determinant on the
    common squared distance 2(d+1)/d, and the edge-vector determinant of the
    explicit vertices."""
    closed = math.sqrt((d + 1) ** (d + 1) / d ** d) / math.factorial(d)

    n = d + 1
    delta2 = Fraction(2 * (d + 1), d)
    cm = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for j in range(1, n + 1):
        cm[0][j] = Fraction(1)
        cm[j][0] = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cm[i][j] = Fraction(0) if i == j else delta2
    det_cm = _det_bareiss(cm)
    v2 = Fraction((-1) ** (d + 1), 2 ** d * math.factorial(d) ** 2) * det_cm
    cayley = math.sqrt(float(v2))

    fam = simplex_vertices(d)
    edges = fam.vertices[:d] - fam.vertices[d]
    edge_vol = abs(float(np.linalg.det(edges))) / math.factorial(d)

    ud = [[2 if i == j else 1 for j in range(d)] for i in range(d)]
    det_ud = int(kernelmod.det_exact(ud))

    vals = [closed, cayley, edge_vol]
    spread = max(vals) - min(vals)
    return VdReport(d, closed, cayley, edge_vol, det_ud, spread)
