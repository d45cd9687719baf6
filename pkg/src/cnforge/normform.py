"""Positive solutions of n^2 + n*l + l^2 = m and = m^2, and rank-two inputs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, isqrt

from .arith import Factorization, factorize, primes_1_mod_6
from .errors import NotAdmissible


@dataclass(frozen=True)
class NormFormSolution:
    """Positive m, n, l with m^2 = n^2 + nl + l^2, l < n and k = n + l."""

    m: int
    n: int
    l: int
    k: int

    def __post_init__(self):
        if not (self.m > 0 and 0 < self.l < self.n):
            raise ValueError(f"need m > 0 and 0 < l < n, got m={self.m} n={self.n} l={self.l}")
        if self.k != self.n + self.l:
            raise ValueError(f"k must equal n + l, got k={self.k}")
        if self.m**2 != self.n**2 + self.n * self.l + self.l**2:
            raise ValueError(f"{self.m}^2 != {self.n}^2 + {self.n}*{self.l} + {self.l}^2")

    @classmethod
    def of(cls, m: int, n: int, l: int) -> NormFormSolution:
        return cls(m, n, l, n + l)

    def scaled(self, q: int) -> NormFormSolution:
        q = abs(q)
        return NormFormSolution(self.m * q, self.n * q, self.l * q, self.k * q)

    @property
    def area(self) -> int:
        return self.k * self.l * self.m * self.n


@dataclass(frozen=True)
class AdmissibleInput:
    """A solution satisfying every hypothesis of the rank-two theorem.

    Only :func:`admissible_input` should build these; it checks that m is a
    product of distinct primes = 1 (mod 6) and that m, n, l are pairwise
    coprime.
    """

    solution: NormFormSolution
    m_factors: Factorization
    coprime: bool = True


def _solve(target: int) -> list[tuple[int, int]]:
    # n^2 + l*n + (l^2 - target) = 0 has discriminant 4*target - 3*l^2.
    out = []
    l = 1
    while 3 * l * l < target:
        disc = 4 * target - 3 * l * l
        d = isqrt(disc)
        if d * d == disc and (d - l) % 2 == 0:
            out.append(((d - l) // 2, l))
        l += 1
    return out


def solve_m(m: int) -> list[tuple[int, int]]:
    """All (n, l) with 0 < l < n and n^2 + nl + l^2 = m, ascending in l."""
    if m < 1:
        raise ValueError("m must be positive")
    return _solve(m)


def solve_m_squared(m: int) -> list[tuple[int, int]]:
    """All (n, l) with 0 < l < n and n^2 + nl + l^2 = m^2, ascending in l."""
    if m < 1:
        raise ValueError("m must be positive")
    return _solve(m * m)


def admissible_factorization(m: int) -> Factorization:
    """Factor m and check it is a product of distinct primes = 1 (mod 6)."""
    if m < 7:
        raise NotAdmissible(f"{m} is not a product of primes = 1 mod 6")
    f = factorize(m)
    if not f.is_squarefree():
        raise NotAdmissible(f"{m} = {f} is not square-free")
    bad = [p for p in f.primes if p % 6 != 1]
    if bad:
        raise NotAdmissible(f"{m} = {f} has prime factors {bad} not = 1 mod 6")
    return f


@dataclass(frozen=True)
class CountReport:
    m: int
    j: int
    count_m: int
    expected_m: int
    count_m_squared: int
    expected_m_squared: int
    coprime_count: int
    # The claimed number of coprime solutions; recorded only, it disagrees with
    # enumeration for every j.
    claimed_coprime_count: int

    @property
    def m_pass(self) -> bool:
        return self.count_m == self.expected_m

    @property
    def m_squared_pass(self) -> bool:
        return self.count_m_squared == self.expected_m_squared

    @property
    def coprime_matches_claim(self) -> bool:
        return self.coprime_count == self.claimed_coprime_count

    @property
    def passed(self) -> bool:
        return self.m_pass and self.m_squared_pass


def verify_fact1_counts(m: int, j: int | None = None) -> CountReport:
    """Compare solution counts for m and m^2 with 2^(j-1) and (3^j - 1)/2.

    ``j`` defaults to the number of prime factors of m; if given it must agree.
    """
    f = admissible_factorization(m)
    if j is None:
        j = len(f.factors)
    elif j != len(f.factors):
        raise NotAdmissible(f"{m} = {f} has {len(f.factors)} prime factors, not {j}")
    sq = solve_m_squared(m)
    return CountReport(
        m=m,
        j=j,
        count_m=len(solve_m(m)),
        expected_m=2 ** (j - 1),
        count_m_squared=len(sq),
        expected_m_squared=(3**j - 1) // 2,
        coprime_count=sum(1 for n, l in sq if gcd(n, l) == 1),
        claimed_coprime_count=2 ** (j + 1),
    )


def admissible_moduli(limit: int, max_j: int | None = None) -> list[int]:
    """Products of 1..max_j distinct primes = 1 (mod 6) not exceeding limit, ascending."""
    primes = primes_1_mod_6(limit)
    found = []

    def extend(start, value, depth):
        for i in range(start, len(primes)):
            v = value * primes[i]
            if v > limit:
                break
            found.append(v)
            if max_j is None or depth + 1 < max_j:
                extend(i + 1, v, depth + 1)

    extend(0, 1, 0)
    return sorted(found)


def admissible_input(m: int, n: int, l: int) -> AdmissibleInput:
    """Validate every rank-two hypothesis for (m, n, l) and wrap it."""
    f = admissible_factorization(m)
    try:
        sol = NormFormSolution.of(m, n, l)
    except ValueError as exc:
        raise NotAdmissible(str(exc)) from exc
    for a, b in combinations((("m", m), ("n", n), ("l", l)), 2):
        if gcd(a[1], b[1]) != 1:
            raise NotAdmissible(f"gcd({a[0]}, {b[0]}) = {gcd(a[1], b[1])} != 1")
    return AdmissibleInput(sol, f)


def theorem_inputs(m: int) -> list[AdmissibleInput]:
    """One admissible input per coprime solution of n^2 + nl + l^2 = m^2, ascending in l."""
    admissible_factorization(m)
    return [admissible_input(m, n, l) for n, l in solve_m_squared(m) if gcd(n, l) == 1]
