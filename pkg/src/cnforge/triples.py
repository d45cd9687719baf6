"""Rational Pythagorean A-triples and their correspondence with points on C_A."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve import CurveParams, Point, on_curve
from .errors import BadOrder, DegenerateTriple, NotInvertibleHere
from .normform import NormFormSolution


@dataclass(frozen=True)
class PythTriple:
    """Nonzero rationals with a^2 + b^2 = c^2 and |ab/2| = A.

    Signs are unrestricted and (a, b) keep the order they were built in.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    A: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        a, b, c = self.a, self.b, self.c
        if 0 in (a, b, c):
            raise ValueError(f"triple entries must be nonzero: {self}")
        if a * a + b * b != c * c:
            raise ValueError(f"{a}^2 + {b}^2 != {c}^2")
        if abs(a * b / 2) != self.A:
            raise ValueError(f"|ab/2| = {abs(a * b / 2)} does not match A = {self.A}")

    @property
    def curve(self) -> CurveParams:
        return CurveParams(self.A)

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c}; A={self.A})"


def psi(t: PythTriple) -> Point:
    """Point (b(b+c)/2, b^2(b+c)/2) on C_A.

    The image only depends on b and c; a triple with ab < 0 lands on the same
    point as its partner (-a, b, c).
    """
    s = t.b + t.c
    if s == 0:
        raise DegenerateTriple(f"b + c = 0 for {t}")
    x = t.b * s / 2
    p = Point(x, t.b * x)
    assert on_curve(t.curve, p)
    return p


def psi_inv(c: CurveParams, p: Point) -> PythTriple:
    """Triple (2xA/y, (x^2 - A^2)/y, (x^2 + A^2)/y), oriented so that ab = 2A."""
    if p.is_infinity or p.y == 0:
        raise NotInvertibleHere(f"{p} has no associated triple")
    A = c.A
    x, y = p.x, p.y
    return PythTriple(2 * x * A / y, (x * x - A * A) / y, (x * x + A * A) / y, A)


def triple_from_mn(m: int, n: int) -> PythTriple:
    if not m > n > 0:
        raise BadOrder(f"need m > n > 0, got m={m}, n={n}")
    return PythTriple(2 * m * n, m * m - n * n, m * m + n * n, m * n * (m * m - n * n))


def swap_catheti(t: PythTriple) -> PythTriple:
    return PythTriple(t.b, t.a, t.c, t.A)


def negate_hypotenuse(t: PythTriple) -> PythTriple:
    return PythTriple(t.a, t.b, -t.c, t.A)


@dataclass(frozen=True)
class TripleFamily:
    input: NormFormSolution
    t1: PythTriple
    t2: PythTriple
    t3: PythTriple

    @property
    def A(self) -> int:
        return self.t1.A

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))


def three_triples(s: NormFormSolution) -> TripleFamily:
    """The triples built from (m, n), (m, l) and (k, m); all share A = klmn."""
    m, n, l, k = s.m, s.n, s.l, s.k
    t1 = triple_from_mn(m, n)
    t2 = triple_from_mn(m, l)
    t3 = triple_from_mn(k, m)
    A = s.area
    if not (t1.A == t2.A == t3.A == A):
        raise AssertionError(f"family areas disagree: {t1.A}, {t2.A}, {t3.A}, klmn = {A}")
    return TripleFamily(s, t1, t2, t3)


def integral_points_from_solution(s: NormFormSolution) -> tuple[Point, Point, Point]:
    """Images of the family triples: (s*d, s*d^2) for (s, d) = (m^2, m^2-n^2), (m^2, m^2-l^2), (k^2, k^2-m^2)."""
    m, n, l, k = s.m, s.n, s.l, s.k
    bases = ((m * m, m * m - n * n), (m * m, m * m - l * l), (k * k, k * k - m * m))
    pts = tuple(Point(sq * d, sq * d * d) for sq, d in bases)
    fam = three_triples(s)
    c = CurveParams(fam.A)
    for p, t in zip(pts, fam):
        if not (on_curve(c, p) and psi(t) == p):
            raise AssertionError(f"integral point {p} does not match psi({t})")
    return pts
