"""Support-matrix calculus for supports of size d+1 in Z^d.

For a d x (d+1) integer matrix A with columns w_1..w_{d+1}:

    minor_i  = det(A_i), A_i = A with column i deleted (0-indexed here)
    Delta(A) = gcd(|minor_0|, ..., |minor_d|)
    kernel   = primitive integer vector r with A r = 0; by Cramer
               r_i = (-1)^i det(A_i) / Delta(A) up to a global sign
    ell(A)   = sum_i |det(A_i)| / Delta(A)

When the kernel is one-signed (the columns are positively dependent), |r| is
the multiplicity vector of the unique minimal zero-sum sequence with that
full support, and ell(A) is its length.  Maximizing ell over all full
supports of size d+1 drawn from a ground set computes the support-(d+1)
Davenport constant.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import lattice
from .lattice import GroundSet, enumerate_points, canonical_decorated

POSITIVELY_DEPENDENT = "positively_dependent"
MIXED_SIGNS = "mixed_signs"
RANK_DEFICIENT = "rank_deficient"
MINOR_ZERO = "minor_zero"


def det_exact(rows):
    """Exact determinant of a square matrix of ints or Fractions."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    # fraction-free Bareiss
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num // prev if isinstance(num, int) else num / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SupportMatrix:
    d: int
    columns: tuple          # d+1 vectors
    minors: tuple           # det(A_i), i = 0..d
    delta: int              # gcd of |minors| (0 if all minors vanish)
    kernel: tuple | None    # primitive kernel vector, first nonzero > 0
    classification: str

    @property
    def positively_dependent(self) -> bool:
        return self.classification == POSITIVELY_DEPENDENT

    @property
    def mults(self) -> tuple:
        """|kernel| as multiplicities (positively dependent supports only)."""
        if not self.positively_dependent:
            raise ValueError("multiplicities require a positively dependent support")
        return tuple(abs(x) for x in self.kernel)


def analyze(columns) -> SupportMatrix:
    """Minors, Delta, primitive kernel and sign classification of a support."""
    cols = [tuple(c) for c in columns]
    d = len(cols[0])
    if len(cols) != d + 1:
        raise ValueError(f"need d+1 = {d + 1} columns, got {len(cols)}")
    if any(len(c) != d for c in cols):
        raise lattice.DimensionMismatch("columns of mixed dimension")
    minors = []
    for i in range(d + 1):
        sub = [c for j, c in enumerate(cols) if j != i]
        # det of the matrix whose COLUMNS are `sub`: transpose to rows
        minors.append(det_exact([[sub[j][r] for j in range(d)] for r in range(d)]))
    minors = tuple(minors)
    if all(x == 0 for x in minors):
        return SupportMatrix(d, tuple(cols), minors, 0, None, RANK_DEFICIENT)
    delta = 0
    for x in minors:
        delta = math.gcd(delta, abs(int(x))) if isinstance(x, int) else delta
    if not all(isinstance(x, int) for x in minors):
        delta = 1  # rational generators: primitivity is meaningless, keep raw
    raw = tuple((x if i % 2 == 0 else -x) for i, x in enumerate(minors))
    if delta > 1:
        raw = tuple(x // delta for x in raw)
    elif delta == 0:
        delta = 1
    first = next(x for x in raw if x != 0)
    kernel = raw if first > 0 else tuple(-x for x in raw)
    if any(x == 0 for x in minors):
        return SupportMatrix(d, tuple(cols), minors, delta, kernel, MINOR_ZERO)
    cls = POSITIVELY_DEPENDENT if all(x > 0 for x in kernel) else MIXED_SIGNS
    return SupportMatrix(d, tuple(cols), minors, delta, kernel, cls)


def ell_of(sm: SupportMatrix) -> int:
    """sum_i |det(A_i)| / Delta; defined for rank-d supports with all minors
    nonzero (the length of the kernel sequence when positively dependent)."""
    if sm.classification in (RANK_DEFICIENT, MINOR_ZERO):
        raise ValueError("ell is undefined for degenerate supports")
    total = sum(abs(int(x)) for x in sm.minors)
    return total // sm.delta


class EnumerationBudgetError(RuntimeError):
    pass


@dataclass
class Dp1Result:
    ground: GroundSet
    value: int
    orbits: list            # canonical decorated supports, deduplicated
    witnesses: list         # raw (support, mults) pairs, one per orbit
    n_points: int
    n_degenerate_skipped: int
    lowdim_bound: int


def _scan_pairs_2d(pts_arr, i_range):
    """Max ell and argmax triples over all (i < j < k) with i in i_range.

    Vectorized over k for each pair (i, j).  Returns (best, [(i,j,k), ...]).
    """
    X = pts_arr[:, 0]
    Y = pts_arr[:, 1]
    n = len(pts_arr)
    best = 0
    hits = []
    for i in i_range:
        xi, yi = int(X[i]), int(Y[i])
        for j in range(i + 1, n - 1):
            xj, yj = int(X[j]), int(Y[j])
            m2 = xi * yj - yi * xj          # det(w_i, w_j), minor of column k
            if m2 == 0:
                continue
            xc = X[j + 1:]
            yc = Y[j + 1:]
            m0 = xj * yc - yj * xc          # det(w_j, w_k)
            m1 = xi * yc - yi * xc          # det(w_i, w_k)
            # kernel = (m0, -m1, m2): one-signed and nowhere zero
            if m2 > 0:
                good = (m0 > 0) & (m1 < 0)
            else:
                good = (m0 < 0) & (m1 > 0)
            if not good.any():
                continue
            a0 = np.abs(m0[good])
            a1 = np.abs(m1[good])
            delta = np.gcd(np.gcd(a0, a1), abs(m2))
            ell = (a0 + a1 + abs(m2)) // delta
            top = int(ell.max())
            if top < best:
                continue
            if top > best:
                best = top
                hits = []
            ks = np.nonzero(good)[0][ell == top] + j + 1
            hits.extend((i, j, int(k)) for k in ks)
    return best, hits


def _scan_pairs_2d_star(args):
    pts_list, i_range = args
    return _scan_pairs_2d(np.asarray(pts_list, dtype=np.int64), i_range)


def davenport_support_dp1(g: GroundSet, workers: int = 1,
                          max_subsets: int = 3_000_000_000) -> Dp1Result:
    """Exact support-(d+1) Davenport constant of a finite ground set by
    enumeration of all (d+1)-subsets, keeping positively dependent supports
    whose kernel multiplicities are all >= 1.

    Degenerate supports (rank < d, or some minor zero) are skipped: a
    zero-sum sequence fully using such a support lives in a proper subspace
    and its length is at most the one-dimensional bound 2*max|coord| - 1,
    which is asserted to be below the achieved maximum before returning.
    """
    pts = [p for p in enumerate_points(g) if any(c != 0 for c in p)]
    d = g.d
    n = len(pts)
    if n < d + 1:
        return Dp1Result(g, 0, [], [], n, 0, 0)
    n_subsets = math.comb(n, d + 1)
    if n_subsets > max_subsets:
        raise EnumerationBudgetError(
            f"{n_subsets} subsets of size {d + 1} exceeds budget {max_subsets}")

    if d == 2:
        arr = np.asarray(pts, dtype=np.int64)
        if workers > 1:
            chunks = [list(range(s, n - 2, workers)) for s in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(_scan_pairs_2d_star,
                                    [(pts, c) for c in chunks]))
            best = max(b for b, _ in parts)
            triples = [t for b, h in parts if b == best for t in h]
        else:
            best, triples = _scan_pairs_2d(arr, range(n - 2))
        degenerate = 0  # collinear pairs/triples were skipped inline
        maximizers = []
        for (i, j, k) in triples:
            sm = analyze([pts[i], pts[j], pts[k]])
            assert sm.positively_dependent and ell_of(sm) == best
            maximizers.append((sm.columns, sm.mults))
    else:
        best = 0
        maximizers = []
        degenerate = 0
        for combo in itertools.combinations(range(n), d + 1):
            sm = analyze([pts[i] for i in combo])
            if not sm.positively_dependent:
                if sm.classification in (RANK_DEFICIENT, MINOR_ZERO):
                    degenerate += 1
                continue
            val = ell_of(sm)
            if val > best:
                best = val
                maximizers = [(sm.columns, sm.mults)]
            elif val == best:
                maximizers.append((sm.columns, sm.mults))

    lowdim = max(2, 2 * g.max_infnorm - 1)
    if best <= lowdim:
        raise EnumerationBudgetError(
            "degenerate supports could dominate the maximum on this ground set "
            f"(best={best}, low-dimensional bound={lowdim})")

    orbits = []
    witnesses = []
    seen = set()
    for support, mults in maximizers:
        canon = canonical_decorated(support, mults)
        if canon not in seen:
            seen.add(canon)
            orbits.append(canon)
            witnesses.append((support, mults))
    orbits_sorted = sorted(range(len(orbits)), key=lambda t: orbits[t])
    orbits = [orbits[t] for t in orbits_sorted]
    witnesses = [witnesses[t] for t in orbits_sorted]
    return Dp1Result(g, best, orbits, witnesses, n, degenerate, lowdim)


@dataclass
class UniquenessReport:
    m: int
    value: int
    expected_value: int
    n_orbits: int
    matches_reference: bool
    ok: bool


def unique_maximizer_check(m: int, workers: int = 1,
                              dp1: Dp1Result | None = None) -> UniquenessReport:
    """Check that Box(m, 2) has a unique maximizing support-3 orbit equal to
    the reference sequence (support and multiplicities)."""
    from .constructions import box2_s   # local import to avoid a cycle

    if dp1 is None:
        dp1 = davenport_support_dp1(lattice.box(m, 2), workers=workers)
    ref = box2_s(m)
    ref_canon = canonical_decorated(ref.sequence.support, ref.sequence.mults)
    expected = ref.claimed_length
    matches = len(dp1.orbits) == 1 and dp1.orbits[0] == ref_canon
    ok = matches and dp1.value == expected
    return UniquenessReport(m, dp1.value, expected, len(dp1.orbits), matches, ok)
