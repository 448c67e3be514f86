"""Prime utilities: q(m) = the smallest prime not dividing m, largest prime
below a bound, and the empirical check of the bound q(m) <= 1 + 4 log m.

A sieve covers the small range (largest_prime_leq may reach ~2m for the
constructions); q(m) itself only ever needs primes up to 1 + 4 log m, so a
short static prime list serves it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class PrimeCache:
    """Sieve of Eratosthenes up to `limit`, trial division beyond."""

    def __init__(self, limit: int = 2_000_000):
        self.limit = limit
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p:: p] = bytearray(len(sieve[p * p:: p]))
        self._sieve = bytes(sieve)
        self._small_primes = tuple(p for p in range(2, 80) if sieve[p])

    def is_prime(self, n: int) -> bool:
        if n <= self.limit:
            return bool(self._sieve[n]) if n >= 0 else False
        if n % 2 == 0:
            return False
        for f in range(3, math.isqrt(n) + 1, 2):
            if n % f == 0:
                return False
        return True

    def q_of(self, m: int) -> int:
        """Least prime p with p not dividing m.  Requires m >= 2."""
        if m < 2:
            raise ValueError("q(m) requires m >= 2")
        for p in self._small_primes:
            if m % p:
                return p
        # q(m) <= 1 + 4 log m < 80 needs m > e^19; scan onward just in case
        p = self._small_primes[-1]
        while True:
            p += 1
            if self.is_prime(p) and m % p:
                return p

    def largest_prime_leq(self, x: int) -> int:
        if x < 2:
            raise ValueError("no prime <= {}".format(x))
        n = int(x)
        while n >= 2:
            if self.is_prime(n):
                return n
            n -= 1
        raise AssertionError("unreachable")

    def primes_leq(self, x: int):
        return [p for p in range(2, x + 1) if self._sieve[p]] if x <= self.limit \
            else [p for p in range(2, x + 1) if self.is_prime(p)]


_default_cache = None


def default_cache() -> PrimeCache:
    global _default_cache
    if _default_cache is None:
        _default_cache = PrimeCache()
    return _default_cache


def q_of(m: int) -> int:
    return default_cache().q_of(m)


def largest_prime_leq(x: int) -> int:
    return default_cache().largest_prime_leq(x)


def is_prime(n: int) -> bool:
    return default_cache().is_prime(n)


@dataclass
class QGrowthReport:
    m_max: int
    checked: int
    ok: bool
    first_violation: int | None
    max_ratio: float        # max over m of q(m) / (1 + 4 ln m)


def check_q_growth(m_max: int) -> QGrowthReport:
    """Verify the growth bound q(m) <= 1 + 4 ln m for 2 <= m <= m_max,
    and q(m) < m for m >= 3.

    The right-hand side gets a 1e-9 slack; the inequality is comfortably
    strict in practice and this check is diagnostic.
    """
    if m_max < 3:
        raise ValueError("m_max must be >= 3")
    cache = default_cache()
    primes = cache._small_primes
    log = math.log
    worst = 0.0
    for m in range(2, m_max + 1):
        for p in primes:
            if m % p:
                q = p
                break
        else:  # pragma: no cover - q(m) < 80 for all feasible m
            q = cache.q_of(m)
        rhs = 1.0 + 4.0 * log(m) + 1e-9
        ratio = q / rhs
        if ratio > worst:
            worst = ratio
        if q > rhs or (m >= 3 and q >= m):
            return QGrowthReport(m_max, m - 1, False, m, worst)
    return QGrowthReport(m_max, m_max - 1, True, None, worst)


def q_of_oracle(m: int) -> int:
    """Independent route to q(m): scan n = 2, 3, ... and accept the first n
    that passes bare trial division and does not divide m."""
    if m < 2:
        raise ValueError("q(m) requires m >= 2")
    n = 2
    while True:
        if m % n:
            is_p = n >= 2
            f = 2
            while f * f <= n:
                if n % f == 0:
                    is_p = False
                    break
                f += 1
            if is_p:
                return n
        n += 1
