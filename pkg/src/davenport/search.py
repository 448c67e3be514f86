"""Exact brute-force Davenport searches for small ground sets.

D(X) is computed through the reformulation

    D(X) = 1 + max{ ||T|| : T zero-sum-free over X, -sum(T) in X },

valid because appending -sum(T) to a zero-sum-free T yields a minimal
zero-sum sequence, and deleting one element of a minimal zero-sum sequence
yields such a T.  The DFS enumerates zero-sum-free multisets in canonical
(non-decreasing lexicographic) element order, maintaining the set of
achievable nonempty sub-multiset sums: appending v keeps the multiset
zero-sum-free iff -v is not currently achievable.

Termination and exactness come from a certified length cap obtained by
counting lattice points reachable by reordered partial sums (Steinitz):
any minimal zero-sum sequence over points of Euclidean norm <= R admits an
ordering with all partial sums in the ball of radius c_d * R, and those
sums are distinct lattice points.  The published constants c_1 = 1 (with
the sharper interval count 2R-1), c_2 = sqrt(5)/2 and c_3 = 7/3 are used
as data.  A branch is also abandoned when some +-coordinate functional is
nonnegative on every still-addable element yet already exceeds its range
over X on the running sum (no extension can ever close).
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from . import kernel as kernelmod
from .lattice import (GroundSet, contains, enumerate_points, infnorm, norm2,
                      orbit_representatives, vadd, vneg)
from .sequences import ZsSequence


@dataclass
class Budget:
    max_nodes: int = 20_000_000
    max_seconds: float = 300.0
    max_len: int | None = None      # explicit cap; required for d > 3


@dataclass
class SearchResult:
    value: int
    witness: ZsSequence | None
    exact: bool
    status: str                     # "exact" | "budget" | "seed-cap"
    nodes: int = 0
    cap: int | None = None

    def __iter__(self):             # allow tuple-style unpacking
        yield self.value
        yield self.witness


class BudgetExceeded(RuntimeError):
    def __init__(self, partial: SearchResult):
        super().__init__(f"search budget exceeded; verified lower bound {partial.value}")
        self.partial = partial


def count_scaled_ball(d: int, num: int, den: int) -> int:
    """#{x in Z^d : den * ||x||^2 <= num}, exact integer arithmetic."""
    if num < 0:
        return 0
    r = math.isqrt(num // den)
    while den * (r + 1) * (r + 1) <= num:
        r += 1
    if d == 1:
        return 2 * r + 1
    total = 0
    for x in range(-r, r + 1):
        total += count_scaled_ball(d - 1, num - den * x * x, den)
    return total


def steinitz_cap(points, d: int) -> int | None:
    """Certified upper bound on the length of any minimal zero-sum sequence
    over `points` (d <= 3), from reordered-partial-sum lattice counts."""
    if not points:
        return 0
    if d == 1:
        m = max(abs(v[0]) for v in points)
        return max(2, 2 * m - 1)
    r2 = max(norm2(v) for v in points)
    if d == 2:
        return count_scaled_ball(2, 5 * r2, 4)
    if d == 3:
        return count_scaled_ball(3, 49 * r2, 9)
    return None


def _pair_seed(points, ground: GroundSet):
    """Best minimal zero-sum using one or two support points (antiparallel
    rays u = a*g, v = -b*g give length (a+b)/gcd(a,b))."""
    best = 0
    witness = None
    pts = set(points)
    for u in points:
        nu = vneg(u)
        if nu in pts and nu > u:
            best = max(best, 2)
            if best == 2 and witness is None:
                witness = ZsSequence((u, nu), (1, 1))
    for u, v in itertools.combinations(points, 2):
        # collinear with opposite directions?
        d = len(u)
        if any(u[i] * v[j] != u[j] * v[i] for i in range(d) for j in range(i + 1, d)):
            continue
        c = next(i for i in range(d) if u[i] != 0)
        if v[c] == 0 or (u[c] > 0) == (v[c] > 0):
            continue
        a, b = abs(u[c]), abs(v[c])
        g = math.gcd(a, b)
        length = (a + b) // g
        if length > best:
            best = length
            witness = ZsSequence((u, v), (b // g, a // g))
    return best, witness


def _coordinate_ranges(points, d):
    lo = [min(p[c] for p in points) for c in range(d)]
    hi = [max(p[c] for p in points) for c in range(d)]
    return lo, hi


class _Done(Exception):
    pass


def _dfs_engine(g: GroundSet, budget: Budget, support_size: int | None,
                seed_value: int = 0, seed_witness=None) -> SearchResult:
    d = g.d
    all_pts = enumerate_points(g)
    zero = tuple([0] * d)
    has_zero = zero in set(all_pts)
    pts = sorted(p for p in all_pts if p != zero)
    n = len(pts)

    base = 0
    base_wit = None
    if has_zero and (support_size is None or support_size == 1):
        base, base_wit = 1, ZsSequence((zero,), (1,))

    if n == 0:
        return SearchResult(base, base_wit, True, "exact", 0, base)

    cap = steinitz_cap(pts, d)
    if cap is None:
        if budget.max_len is None:
            raise ValueError("no certified cap for d > 3; set budget.max_len")
        cap = budget.max_len
    elif budget.max_len is not None:
        cap = min(cap, budget.max_len)

    best = max(base, seed_value if support_size is None else 0)
    best_witness = seed_witness if best == seed_value and seed_value > 0 else base_wit
    if best >= cap and best > 0:
        return SearchResult(best, best_witness, True, "seed-cap", 0, cap)

    ground_has = (lambda v: v in set(g.points)) if g.kind == "explicit" \
        else (lambda v: contains(g, v))
    lo_c, hi_c = _coordinate_ranges(pts + ([zero] if has_zero else []), d)

    if g.kind in ("box", "ball"):
        first_level = set(orbit_representatives(pts, d))
    else:
        first_level = set(pts)

    reached: set = set()
    stack: list = []                 # (index, count) pairs for the witness
    nodes = 0
    t0 = time.time()
    state = {"best": best, "witness": best_witness, "exact": True}

    def try_close(sigma, length, supp_count, supp_set):
        w = vneg(sigma)
        if w == zero or not ground_has(w):
            return
        if support_size is not None:
            size = supp_count + (0 if w in supp_set else 1)
            if size != support_size:
                return
        if length + 1 > state["best"]:
            state["best"] = length + 1
            support = {}
            for idx, cnt in stack:
                support[pts[idx]] = support.get(pts[idx], 0) + cnt
            support[w] = support.get(w, 0) + 1
            items = sorted(support.items())
            state["witness"] = ZsSequence(tuple(v for v, _ in items),
                                          tuple(c for _, c in items))
            if state["best"] >= cap:
                raise _Done

    def cone_prune(pos, sigma) -> bool:
        alive = [pts[p] for p in range(pos, n) if vneg(pts[p]) not in reached]
        if not alive:
            return True
        for c in range(d):
            if sigma[c] > -lo_c[c] and all(u[c] >= 0 for u in alive):
                return True
            if -sigma[c] > hi_c[c] and all(u[c] <= 0 for u in alive):
                return True
        return False

    def descend(pos, sigma, length, supp_count, supp_set):
        nonlocal nodes
        nodes += 1
        if nodes > budget.max_nodes:
            state["exact"] = False
            raise _Done
        if nodes % 4096 == 0 and time.time() - t0 > budget.max_seconds:
            state["exact"] = False
            raise _Done
        try_close(sigma, length, supp_count, supp_set)
        if length + 2 > cap:
            return
        if cone_prune(pos, sigma):
            return
        for p in range(pos, n):
            v = pts[p]
            if length == 0 and v not in first_level:
                continue
            if vneg(v) in reached:
                continue
            new_in_support = v not in supp_set
            if support_size is not None and new_in_support \
                    and supp_count + 1 > support_size:
                continue
            added = [u for u in ([vadd(t, v) for t in reached] + [v])
                     if u not in reached]
            added = list(dict.fromkeys(added))
            reached.update(added)
            if stack and stack[-1][0] == p:
                stack[-1] = (p, stack[-1][1] + 1)
                fresh_entry = False
            else:
                stack.append((p, 1))
                fresh_entry = True
            if new_in_support:
                supp_set.add(v)
            descend(p, vadd(sigma, v), length + 1,
                    supp_count + (1 if new_in_support else 0), supp_set)
            if new_in_support:
                supp_set.discard(v)
            if fresh_entry:
                stack.pop()
            else:
                stack[-1] = (p, stack[-1][1] - 1)
            reached.difference_update(added)

    try:
        descend(0, zero, 0, 0, set())
    except _Done:
        pass

    exact = state["exact"]
    status = "exact" if exact else "budget"
    result = SearchResult(state["best"], state["witness"], exact, status,
                          nodes, cap)
    if not exact:
        raise BudgetExceeded(result)
    return result


def davenport_exact(g: GroundSet, budget: Budget | None = None) -> SearchResult:
    """Exact D(X) for a small finite ground set, with witness."""
    budget = budget or Budget()
    all_pts = enumerate_points(g)
    zero = tuple([0] * g.d)
    pts = [p for p in all_pts if p != zero]
    seed, seed_wit = _pair_seed(pts, g) if pts else (0, None)
    return _dfs_engine(g, budget, None, seed, seed_wit)


# ---------------------------------------------------------------------------
# Support-size-restricted search: per-support bounded enumeration
# ---------------------------------------------------------------------------

def _rank_int(cols, d):
    """Rank of the d x k integer matrix with the given columns."""
    rows = [[c[r] for c in cols] for r in range(d)]
    rank = 0
    ncols = len(cols)
    for j in range(ncols):
        piv = None
        for r in range(rank, d):
            if rows[r][j] != 0:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, d):
            if rows[r][j] != 0:
                a, b = pr[j], rows[r][j]
                rows[r] = [a * rows[r][t] - b * pr[t] for t in range(ncols)]
        rank += 1
        if rank == d:
            break
    return rank


def _adjugate(rows):
    """Integer adjugate of a small square integer matrix (adj @ M = det I)."""
    n = len(rows)
    if n == 1:
        return [[1]], rows[0][0]
    det = kernelmod.det_exact(rows)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != i]
                     for r in range(n) if r != j]
            adj[i][j] = (-1) ** (i + j) * (kernelmod.det_exact(minor) if minor else 1)
    return adj, det


def _max_pivot(cols, k, d):
    """Largest invertible square submatrix: (rank, row idx, col idx, rows)."""
    for r in range(min(d, k), 0, -1):
        for rows_idx in itertools.combinations(range(d), r):
            for cols_idx in itertools.combinations(range(k), r):
                sub = [[cols[c][ri] for c in cols_idx] for ri in rows_idx]
                if kernelmod.det_exact(sub) != 0:
                    return r, rows_idx, cols_idx, sub
    return 0, (), (), []


def bounded_zero_solutions(cols, bound: int):
    """All y in [0, bound]^k, y != 0, with sum_i y_i cols[i] = 0.

    A maximal invertible pivot submatrix reduces the system to k - rank
    free columns; free assignments are enumerated over [0, bound], the
    pivot components solved exactly, and the non-pivot coordinates
    verified.  The single-free-column case (full-rank support of size d+1)
    walks only the multiples of the divisibility step.
    """
    cols = [tuple(c) for c in cols]
    k = len(cols)
    d = len(cols[0])
    out = []
    rank, rows_idx, cols_idx, sub = _max_pivot(cols, k, d)
    if rank == k:
        return out        # injective: only the trivial solution
    adj, det = _adjugate(sub)
    free = [j for j in range(k) if j not in cols_idx]
    other_rows = [c for c in range(d) if c not in rows_idx]

    if rank == d and len(free) == 1:
        f = free[0]
        aw = [sum(adj[i][t] * cols[f][rows_idx[t]] for t in range(rank))
              for i in range(rank)]
        # y_piv(t) = -t * aw / det must be a nonnegative integer vector
        if any(a != 0 and (a > 0) == (det > 0) for a in aw):
            return out    # some pivot coordinate < 0 for every t > 0
        step = 1
        for a in aw:
            if a:
                la = abs(det) // math.gcd(abs(det), abs(a))
                step = step * la // math.gcd(step, la)
        for t in range(step, bound + 1, step):
            y = [0] * k
            ok = True
            for i, jcol in enumerate(cols_idx):
                q, r = divmod(-t * aw[i], det)
                if r != 0 or q < 0 or q > bound:
                    ok = False
                    break
                y[jcol] = q
            if ok:
                y[f] = t
                out.append(tuple(y))
        return out

    for assign in itertools.product(range(bound + 1), repeat=len(free)):
        rhs = [0] * rank
        for t, f in zip(assign, free):
            if t:
                for i, ri in enumerate(rows_idx):
                    rhs[i] -= t * cols[f][ri]
        y = [0] * k
        ok = True
        for i, jcol in enumerate(cols_idx):
            q, r = divmod(sum(adj[i][t] * rhs[t] for t in range(rank)), det)
            if r != 0 or q < 0 or q > bound:
                ok = False
                break
            y[jcol] = q
        if not ok:
            continue
        for t, f in zip(assign, free):
            y[f] = t
        if not any(y):
            continue
        if all(sum(y[j] * cols[j][c] for j in range(k)) == 0 for c in other_rows):
            out.append(tuple(y))
    return out


def _support_cap(cols, d: int) -> int:
    """Support-specific certified cap, sharpened by the support's rank."""
    rank = _rank_int(cols, d)
    r2 = max(norm2(v) for v in cols)
    if rank <= 1:
        c = max(infnorm(v) for v in cols)
        # scalar coordinates along the primitive direction are at most
        # max|coord|, so the interval argument caps at 2c-1
        return max(2, 2 * c - 1)
    if rank == 2:
        return count_scaled_ball(d, 5 * r2, 4)
    if rank == 3:
        return count_scaled_ball(d, 49 * r2, 9)
    return steinitz_cap(list(cols), d)


def davenport_support_k_small(g: GroundSet, k: int,
                              budget: Budget | None = None) -> SearchResult:
    """Exact D^(k)(X): maximum length of a minimal zero-sum sequence whose
    support has size exactly k, by exhaustive per-support enumeration.

    For each k-subset, all bounded solutions of W y = 0 are enumerated and a
    full-support solution is minimal iff no smaller nonzero solution sits
    below it componentwise.  Bounds come from support-specific certified
    caps, so the result is exact (never a guess).
    """
    budget = budget or Budget()
    if k < 1:
        raise ValueError("support size must be >= 1")
    d = g.d
    zero = tuple([0] * d)
    all_pts = enumerate_points(g)
    if k == 1:
        if zero in set(all_pts):
            return SearchResult(1, ZsSequence((zero,), (1,)), True, "exact")
        return SearchResult(0, None, True, "exact")
    pts = sorted(p for p in all_pts if p != zero)
    n_supports = math.comb(len(pts), k)
    if n_supports > budget.max_nodes:
        raise BudgetExceeded(SearchResult(0, None, False, "budget", 0, None))
    if d > 3 and budget.max_len is None:
        raise ValueError("no certified cap for d > 3; set budget.max_len")

    t0 = time.time()
    best = 0
    witnesses: list[ZsSequence] = []
    for idx, combo in enumerate(itertools.combinations(pts, k)):
        if idx % 2048 == 0 and time.time() - t0 > budget.max_seconds:
            raise BudgetExceeded(SearchResult(
                best, witnesses[0] if witnesses else None, False, "budget", idx))
        cap = _support_cap(combo, d) if d <= 3 else budget.max_len
        if cap < best:
            continue
        sols = bounded_zero_solutions(combo, cap)
        if not sols:
            continue
        full = [y for y in sols if min(y) >= 1 and sum(y) <= cap]
        if not full:
            continue
        others = sols
        for y in full:
            total = sum(y)
            if total < best:
                continue
            dominated = False
            for z in others:
                if z != y and all(a <= b for a, b in zip(z, y)):
                    dominated = True
                    break
            if dominated:
                continue
            seq = ZsSequence(combo, y)
            if total > best:
                best = total
                witnesses = [seq]
            elif total == best:
                witnesses.append(seq)
    return SearchResult(best, witnesses[0] if witnesses else None, True,
                        "exact", n_supports)
