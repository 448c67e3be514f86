"""Zero-sum sequences over Z^d: multiset representation, exact sums, and
minimality verification with re-checkable certificates.

A sequence is stored as (support, mults): distinct vectors with positive
multiplicities.  It is a minimal zero-sum sequence iff it sums to zero and
no proper nonempty sub-multiset sums to zero.

Three verification strategies:

  kernel      support of size d+1 with rank d: the integer kernel of the
              support matrix is one-dimensional, so the sequence is minimal
              iff its multiplicity vector equals the primitive one-signed
              kernel generator.
  exhaustive  incremental sub-multiset sum closure; sound for any shape,
              feasible for total length up to ~24.
  lattice     bounded enumeration of the multiplicity box for supports whose
              kernel has dimension >= 2 (small boxes only).

`auto` picks kernel when applicable, then exhaustive, then lattice, and
raises Undecided rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernel as kernelmod
from .lattice import vadd


class Undecided(RuntimeError):
    """Minimality could not be decided within budget; never guessed."""


@dataclass(frozen=True)
class ZsSequence:
    support: tuple          # distinct vectors
    mults: tuple            # positive ints, same length

    def __post_init__(self):
        sup = tuple(tuple(int(c) for c in v) for v in self.support)
        mu = tuple(int(x) for x in self.mults)
        if len(sup) != len(mu):
            raise ValueError("support and multiplicities differ in length")
        if len(set(sup)) != len(sup):
            raise ValueError("support vectors must be pairwise distinct")
        if any(x <= 0 for x in mu):
            raise ValueError("multiplicities must be positive")
        d = len(sup[0]) if sup else 0
        if any(len(v) != d for v in sup):
            raise ValueError("support vectors of mixed dimension")
        object.__setattr__(self, "support", sup)
        object.__setattr__(self, "mults", mu)

    @property
    def d(self) -> int:
        return len(self.support[0])

    @property
    def length(self) -> int:
        return sum(self.mults)

    def elements(self):
        """Iterate the multiset (support order, copies consecutive)."""
        for v, mu in zip(self.support, self.mults):
            for _ in range(mu):
                yield v

    def __str__(self):
        body = ", ".join(f"{v}x{mu}" for v, mu in zip(self.support, self.mults))
        return f"[{body}]"


def sequence_sum(s: ZsSequence) -> tuple:
    """Exact sum of the multiset."""
    total = [0] * s.d
    for v, mu in zip(s.support, s.mults):
        for i in range(s.d):
            total[i] += mu * v[i]
    return tuple(total)


def seq_from_file(path: str) -> ZsSequence:
    """Text format: first line `d k`, then k lines `c1 c2 ... cd : mult`."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    d, k = (int(t) for t in lines[0].split())
    support, mults = [], []
    for ln in lines[1:1 + k]:
        lhs, rhs = ln.split(":")
        v = tuple(int(t) for t in lhs.split())
        if len(v) != d:
            raise ValueError(f"point {v} does not have dimension {d}")
        support.append(v)
        mults.append(int(rhs))
    return ZsSequence(tuple(support), tuple(mults))


def seq_to_file(s: ZsSequence, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{s.d} {len(s.support)}\n")
        for v, mu in zip(s.support, s.mults):
            fh.write(" ".join(str(c) for c in v) + f" : {mu}\n")


@dataclass(frozen=True)
class MinimalityCertificate:
    method: str                     # "kernel" | "exhaustive" | "lattice"
    minimal: bool
    kernel_vector: tuple | None = None
    violation: tuple | None = None  # sub-multiplicity vector summing to 0
    transcript: dict = field(default_factory=dict)


def recheck_certificate(s: ZsSequence, cert: MinimalityCertificate) -> bool:
    """Re-validate a certificate with arithmetic independent of the search
    that produced it."""
    if not cert.minimal:
        y = cert.violation
        if y is None:
            return False
        if len(y) != len(s.support):
            return False
        proper = any(a < b for a, b in zip(y, s.mults)) or sum(y) < s.length
        in_range = all(0 <= a <= b for a, b in zip(y, s.mults))
        nonzero = any(y)
        total = [0] * s.d
        for v, a in zip(s.support, y):
            for i in range(s.d):
                total[i] += a * v[i]
        zero_sum_whole = sequence_sum(s) == tuple([0] * s.d)
        # a non-minimality witness is either a proper zero subsum, or the
        # whole sequence failing to sum to zero (violation = mults marker)
        if not zero_sum_whole and tuple(y) == s.mults:
            return True
        return proper and in_range and nonzero and all(t == 0 for t in total)
    if cert.method == "kernel":
        r = cert.kernel_vector
        if r is None or len(r) != len(s.support):
            return False
        total = [0] * s.d
        for v, a in zip(s.support, r):
            for i in range(s.d):
                total[i] += a * v[i]
        if any(total):
            return False
        import math
        g = 0
        for a in r:
            g = math.gcd(g, abs(a))
        return g == 1 and tuple(abs(a) for a in r) == s.mults
    # exhaustive / lattice: deterministic re-run must agree
    redo = is_minimal_zero_sum(s, strategy=cert.method)[0]
    return redo == cert.minimal


def _proper_zero_subsum_exhaustive(s: ZsSequence) -> tuple | None:
    """Find a proper nonempty sub-multiset summing to zero, or None.

    Adds one element copy at a time, tracking all achievable nonempty
    subsums; any zero reached before the final copy comes from a proper
    sub-multiset (if a proper zero subsum exists, either it or its
    complement avoids the final copy)."""
    d = s.d
    zero = tuple([0] * d)
    reached: dict = {}          # sum -> multiplicity vector achieving it
    k = len(s.support)
    counts = [0] * k
    total = s.length
    done = 0
    for idx, (v, mu) in enumerate(zip(s.support, s.mults)):
        for _ in range(mu):
            done += 1
            last = done == total
            new = {}
            for t, way in reached.items():
                u = vadd(t, v)
                if u not in reached and u not in new:
                    w = list(way)
                    w[idx] += 1
                    new[u] = tuple(w)
            if v not in reached and v not in new:
                w = [0] * k
                w[idx] = 1
                new[v] = tuple(w)
            if zero in new and not last:
                return new[zero]
            reached.update(new)
    return None


def _bounded_kernel_violation(s: ZsSequence, budget: int) -> tuple | None:
    """Search 0 <= y <= mults, y != 0, y != mults with W y = 0 by direct
    enumeration of the multiplicity box (interval-pruned DFS)."""
    sup = s.support
    mu = s.mults
    k = len(sup)
    d = s.d
    size = 1
    for x in mu:
        size *= x + 1
        if size > budget:
            raise Undecided(
                f"multiplicity box of size > {budget} for kernel dimension >= 2")
    # per-coordinate min/max of the remaining suffix contribution
    suf_min = [[0] * d for _ in range(k + 1)]
    suf_max = [[0] * d for _ in range(k + 1)]
    for i in range(k - 1, -1, -1):
        for c in range(d):
            w = sup[i][c] * mu[i]
            suf_min[i][c] = suf_min[i + 1][c] + min(0, w)
            suf_max[i][c] = suf_max[i + 1][c] + max(0, w)

    y = [0] * k

    def dfs(i, partial):
        if i == k:
            if all(x == 0 for x in partial) and any(y) and tuple(y) != mu:
                return tuple(y)
            return None
        for c in range(d):
            lo = partial[c] + suf_min[i][c]
            hi = partial[c] + suf_max[i][c]
            if lo > 0 or hi < 0:
                return None
        v = sup[i]
        for a in range(mu[i] + 1):
            y[i] = a
            got = dfs(i + 1, [partial[c] + a * v[c] for c in range(d)])
            if got is not None:
                return got
        y[i] = 0
        return None

    return dfs(0, [0] * d)


def is_minimal_zero_sum(s: ZsSequence, strategy: str = "auto",
                        lattice_budget: int = 2_000_000):
    """Decide minimality; returns (bool, MinimalityCertificate).

    Raises Undecided when no strategy can settle the instance within budget.
    """
    zero = tuple([0] * s.d)
    is_zero_sum = sequence_sum(s) == zero

    if strategy == "auto":
        if len(s.support) == s.d + 1:
            sm = kernelmod.analyze(s.support)
            if sm.classification in (kernelmod.POSITIVELY_DEPENDENT,
                                     kernelmod.MIXED_SIGNS):
                strategy = "kernel"
        if strategy == "auto":
            strategy = "exhaustive" if s.length <= 24 else "lattice"

    if strategy == "kernel":
        sm = kernelmod.analyze(s.support)
        if sm.classification in (kernelmod.RANK_DEFICIENT, kernelmod.MINOR_ZERO):
            raise ValueError("kernel strategy requires rank d and nonzero minors")
        r = sm.kernel
        ok = is_zero_sum and tuple(abs(x) for x in r) == s.mults \
            and sm.positively_dependent
        if ok:
            return True, MinimalityCertificate("kernel", True, kernel_vector=r)
        if not is_zero_sum:
            return False, MinimalityCertificate("kernel", False, kernel_vector=r,
                                                violation=s.mults)
        # zero-sum but mults = t * |r| with t >= 2: |r| is the violation
        return False, MinimalityCertificate("kernel", False, kernel_vector=r,
                                            violation=tuple(abs(x) for x in r))

    if strategy == "exhaustive":
        if not is_zero_sum:
            return False, MinimalityCertificate("exhaustive", False,
                                                violation=s.mults)
        viol = _proper_zero_subsum_exhaustive(s)
        if viol is not None:
            return False, MinimalityCertificate("exhaustive", False, violation=viol)
        return True, MinimalityCertificate(
            "exhaustive", True,
            transcript={"length": s.length, "support": len(s.support)})

    if strategy == "lattice":
        if not is_zero_sum:
            return False, MinimalityCertificate("lattice", False, violation=s.mults)
        viol = _bounded_kernel_violation(s, lattice_budget)
        if viol is not None:
            return False, MinimalityCertificate("lattice", False, violation=viol)
        return True, MinimalityCertificate(
            "lattice", True, transcript={"box": s.mults})

    raise ValueError(f"unknown strategy {strategy!r}")
