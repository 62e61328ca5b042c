"""Exact integer factorization and the arithmetic functions built on it.

Everything here is exact integer arithmetic; floats only appear in the
entropy layer.  Factorization is trial division over primes below 10^4
followed by Brent's variant of Pollard rho, with a deterministic
Miller-Rabin primality test.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterator

import numpy as np

from .errors import DomainError, RangeError

DEFAULT_ENUM_CAP = 10**6
ENUM_CAP_ENV = "ENTROPIA_MAX_DIVISORS"

_TRIAL_LIMIT = 10**4

# Witness set sufficient for a deterministic Miller-Rabin test far beyond 64 bits.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def enumeration_cap() -> int:
    """Cap on divisor / e-divisor list lengths, overridable via the environment."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise RangeError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise RangeError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].tolist()


_SMALL_PRIMES: tuple[int, ...] = tuple(primes_up_to(_TRIAL_LIMIT))


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant).

    The polynomial constant c is swept deterministically, so repeated runs
    factor identically.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
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
    raise RuntimeError(f"pollard rho exhausted its parameter sweep on {n}")


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ((p1, a1), ...) ascending; empty for 1."""

    entries: tuple[tuple[int, int], ...]
    value: int

    def __post_init__(self) -> None:
        prev = 1
        prod = 1
        for p, a in self.entries:
            if p <= prev:
                raise DomainError("primes must be distinct and strictly increasing")
            if a < 1:
                raise DomainError("exponents must be >= 1")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            prod *= p**a
            prev = p
        if prod != self.value:
            raise DomainError(
                f"entries multiply to {prod}, not the stated value {self.value}"
            )

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.entries)


def _factor_into(n: int, acc: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        acc[n] = acc.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, acc)
    _factor_into(n // d, acc)


def factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1; factorize(1) has no entries."""
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    value = n
    acc: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            acc[p] = acc.get(p, 0) + 1
            n //= p
    if n > 1:
        _factor_into(n, acc)
    return Factorization(tuple(sorted(acc.items())), value)


def big_omega(f: Factorization) -> int:
    """Number of prime factors counted with multiplicity."""
    return sum(a for _, a in f.entries)


def small_omega(f: Factorization) -> int:
    """Number of distinct prime factors."""
    return len(f.entries)


def divisor_count(f: Factorization) -> int:
    out = 1
    for _, a in f.entries:
        out *= a + 1
    return out


def divisor_sum(f: Factorization) -> int:
    """Sum of all positive divisors, exact."""
    out = 1
    for p, a in f.entries:
        out *= (p ** (a + 1) - 1) // (p - 1)
    return out


def divisors(f: Factorization) -> list[int]:
    """All divisors, ascending.  Refuses lists longer than the enumeration cap."""
    count = divisor_count(f)
    cap = enumeration_cap()
    if count > cap:
        raise RangeError(f"{f.value} has {count} divisors, above the cap {cap}")
    out = [1]
    for p, a in f.entries:
        powers = [p**k for k in range(a + 1)]
        out = [d * q for d in out for q in powers]
    out.sort()
    return out


def small_divisors(k: int) -> list[int]:
    """Divisors of a small positive integer (used on exponents), ascending."""
    if k < 1:
        raise DomainError(f"need a positive integer, got {k}")
    lo, hi = [], []
    for d in range(1, math.isqrt(k) + 1):
        if k % d == 0:
            lo.append(d)
            if d != k // d:
                hi.append(k // d)
    return lo + hi[::-1]


def tau_e(f: Factorization) -> int:
    """Number of exponential divisors; 1 for n = 1 by convention."""
    out = 1
    for _, a in f.entries:
        out *= len(small_divisors(a))
    return out


def exponential_divisors(f: Factorization) -> list[Factorization]:
    """All e-divisors of n > 1 (same prime support, each beta_i | alpha_i).

    Ascending by value; the count always equals tau_e(f).
    """
    if f.value == 1:
        raise DomainError("exponential divisors are defined only for n > 1")
    count = tau_e(f)
    cap = enumeration_cap()
    if count > cap:
        raise RangeError(f"{f.value} has {count} e-divisors, above the cap {cap}")
    choices = [small_divisors(a) for a in f.exponents]
    primes = f.primes
    out = []
    for betas in _cartesian(*choices):
        val = 1
        for p, b in zip(primes, betas):
            val *= p**b
        out.append(Factorization(tuple(zip(primes, betas)), val))
    out.sort(key=lambda g: g.value)
    return out


def spf_sieve(limit: int) -> np.ndarray:
    """Smallest-prime-factor table up to limit; spf[p] == p for primes."""
    if limit < 1:
        raise DomainError("sieve limit must be >= 1")
    spf = np.zeros(limit + 1, dtype=np.int64)
    spf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            view = spf[p::p]
            view[view == 0] = p
    rest = spf == 0
    spf[rest] = np.nonzero(rest)[0]
    return spf


def factored_range(
    limit: int, spf: np.ndarray | None = None
) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield (n, [(p, a), ...]) for every n in [2, limit] via an SPF table.

    Far cheaper than calling factorize per value when sweeping a full range.
    """
    if spf is None:
        spf = spf_sieve(limit)
    table = spf.tolist()
    for n in range(2, limit + 1):
        m = n
        entries = []
        while m > 1:
            p = table[m]
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            entries.append((p, a))
        yield n, entries
