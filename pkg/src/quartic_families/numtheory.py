"""Integer factorization helpers: trial division, Miller-Rabin, Pollard-Brent."""

from __future__ import annotations

import math
import random
from collections import Counter
from itertools import product

TRIAL_BOUND = 1000

_SMALL_PRIMES = [p for p in range(2, TRIAL_BOUND) if all(p % d for d in range(2, math.isqrt(p) + 1))]
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:13]:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> list[int]:
    """Prime factors of ``n > 1`` with multiplicity, in ascending order."""
    if n <= 1:
        raise ValueError(f"factorize needs n > 1, got {n}")
    out: list[int] = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out.append(p)
            n //= p
    if n > 1:
        # Fixed seed keeps the search reproducible; no shared state between calls.
        rng = random.Random(n)
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                out.append(m)
                continue
            r = math.isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            d = _brent(m, rng)
            stack += [d, m // d]
    return sorted(out)


def divisors_from_factors(factors) -> list[int]:
    counts = Counter(factors)
    primes = sorted(counts)
    out = []
    for exps in product(*(range(counts[p] + 1) for p in primes)):
        d = 1
        for p, e in zip(primes, exps):
            d *= p ** e
        out.append(d)
    return sorted(out)


def divisors(n: int) -> list[int]:
    if n <= 0:
        raise ValueError("divisors needs n > 0")
    return [1] if n == 1 else divisors_from_factors(factorize(n))
