"""Exact integer and rational helpers.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and never round.  On top of those this module
provides primality, factorization, square-free decomposition and the group
of square classes Q*/(Q*)^2 with signed square-free integers as
representatives.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, prod

from .errors import Unfactored

# Miller-Rabin with the first 13 prime bases is deterministic below this bound
# (Sorenson & Webster 2015); comfortably above 2**64.
DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# 65 random rounds: error probability <= 4**-65 < 2**-128.
PROBABILISTIC_ROUNDS = 65

TRIAL_DIVISION_BOUND = 1000
DEFAULT_FACTOR_EFFORT = 5_000_000
FACTOR_EFFORT_ENV = "CNFORGE_FACTOR_EFFORT"

_SMALL_PRIMES = [p for p in range(2, TRIAL_DIVISION_BOUND) if all(p % d for d in range(2, isqrt(p) + 1))]


def factor_effort() -> int:
    """Rho iteration budget per cofactor, overridable via CNFORGE_FACTOR_EFFORT."""
    raw = os.environ.get(FACTOR_EFFORT_ENV)
    if raw is None:
        return DEFAULT_FACTOR_EFFORT
    effort = int(raw)
    if effort < 1:
        raise ValueError(f"{FACTOR_EFFORT_ENV} must be a positive integer, got {raw!r}")
    return effort


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@dataclass(frozen=True)
class Primality:
    is_prime: bool
    proven: bool  # False only for probable primes above DETERMINISTIC_LIMIT


def primality(n: int) -> Primality:
    """Primality of ``n`` together with whether the answer is a proof."""
    if n < 0:
        raise ValueError("primality test needs n >= 0")
    if n < 2:
        return Primality(False, True)
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return Primality(n == p, True)
    if n < TRIAL_DIVISION_BOUND ** 2:
        return Primality(True, True)
    if n < DETERMINISTIC_LIMIT:
        return Primality(all(_strong_probable_prime(n, a) for a in _MR_BASES), True)
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return Primality(False, True)
    # Seeded by n so repeated calls agree.
    rng = random.Random(n)
    ok = all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(PROBABILISTIC_ROUNDS))
    return Primality(ok, not ok)


def is_prime(n: int) -> bool:
    return primality(n).is_prime


@dataclass(frozen=True)
class Factorization:
    """``sign * prod(p**e for p, e in factors)`` with primes strictly increasing."""

    sign: int
    factors: tuple[tuple[int, int], ...]
    proven: bool = True

    @property
    def value(self) -> int:
        return self.sign * prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def __str__(self):
        body = "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors) or "1"
        return body if self.sign > 0 else f"-{body}"


def _brent_rho(n: int, budget: int, rng: random.Random) -> int | None:
    """Return a nontrivial factor of the odd composite ``n`` or None if the budget runs out."""
    spent = 0
    while spent < budget:
        y, c, batch = rng.randrange(1, n), rng.randrange(1, n), 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += batch
            spent += r
            r *= 2
        if g == n:
            # Batched gcd overshot; replay one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(n: int, effort: int | None = None) -> Factorization:
    """Factor a nonzero integer by trial division followed by Brent's rho."""
    if n == 0:
        raise ValueError("cannot factor 0")
    effort = factor_effort() if effort is None else effort
    sign = 1 if n > 0 else -1
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    proven = True
    stack = [m] if m > 1 else []
    rng = random.Random(n)
    while stack:
        c = stack.pop()
        pr = primality(c)
        if pr.is_prime:
            proven &= pr.proven
            counts[c] = counts.get(c, 0) + 1
            continue
        r = isqrt(c)
        if r * r == c:
            stack += [r, r]
            continue
        d = _brent_rho(c, effort, rng)
        if d is None:
            raise Unfactored(n, c, effort)
        stack += [d, c // d]
    return Factorization(sign, tuple(sorted(counts.items())), proven)


def square_free_part(n: int) -> tuple[int, int]:
    """Split ``n`` as ``s * t**2`` with ``s`` square-free carrying the sign of n, t >= 1."""
    f = factorize(n)
    s, t = f.sign, 1
    for p, e in f.factors:
        if e % 2:
            s *= p
        t *= p ** (e // 2)
    return s, t


def is_squarefree(n: int) -> bool:
    return factorize(n).is_squarefree()


class SquareClass(int):
    """An element of Q*/(Q*)^2, stored as its signed square-free representative."""

    def __new__(cls, value: int, *, check: bool = True):
        value = int(value)
        if value == 0:
            raise ValueError("0 has no square class")
        if check and not is_squarefree(value):
            raise ValueError(f"{value} is not square-free")
        return super().__new__(cls, value)

    def __repr__(self):
        return f"SquareClass({int(self)})"

    def __mul__(self, other):
        if isinstance(other, SquareClass):
            return class_mul(self, other)
        return int(self) * other

    __rmul__ = __mul__


def square_class(x: Fraction | int) -> SquareClass:
    """Class of a nonzero rational modulo squares (via numerator times denominator)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no square class")
    s, _ = square_free_part(x.numerator * x.denominator)
    return SquareClass(s, check=False)


def class_mul(u: int, v: int) -> SquareClass:
    """Product in Q*/(Q*)^2.  For square-free u, v the gcd is exactly the squared part."""
    g = gcd(u, v)
    return SquareClass((u // g) * (v // g), check=False)


def primes_1_mod_6(limit: int) -> list[int]:
    """Primes p <= limit with p = 1 (mod 6), ascending."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(7, limit + 1, 6) if sieve[p]]
