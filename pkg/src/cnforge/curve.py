"""Congruent-number curves y^2 = x^3 - A^2 x and their chord-tangent group law."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotOnCurve


@dataclass(frozen=True)
class CurveParams:
    A: int

    def __post_init__(self):
        if not (isinstance(self.A, int) and self.A > 0):
            raise ValueError(f"A must be a positive integer, got {self.A!r}")

    @property
    def B(self) -> int:
        """Coefficient of x in the short form y^2 = x^3 + B x."""
        return -self.A * self.A

    def __str__(self):
        return f"y^2 = x^3 - {self.A}^2 x"


@dataclass(frozen=True)
class Point:
    """Affine rational point, or the point at infinity when x and y are None."""

    x: Fraction | None
    y: Fraction | None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("x and y must both be None (infinity) or both be set")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "inf" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = Point(None, None)


def on_b_curve(B: int, p: Point) -> bool:
    """Membership on y^2 = x^3 + B x."""
    return p.is_infinity or p.y * p.y == p.x**3 + B * p.x


def on_curve(c: CurveParams, p: Point) -> bool:
    return on_b_curve(c.B, p)


def _require(c, *points):
    for p in points:
        if not on_curve(c, p):
            raise NotOnCurve(f"{p} is not on {c}")


def neg(p: Point) -> Point:
    if p.is_infinity:
        return p
    return Point(p.x, -p.y)


def add(c: CurveParams, p: Point, q: Point, check: bool = True) -> Point:
    """Chord-tangent sum P + Q.

    Pass ``check=False`` in tight loops whose operands are already known to be
    on the curve; the membership test costs more than the addition itself.
    """
    if check:
        _require(c, p, q)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    x0, y0, x1, y1 = p.x, p.y, q.x, q.y
    if x0 != x1:
        lam = (y1 - y0) / (x1 - x0)
        x2 = lam * lam - x0 - x1
        return Point(x2, lam * (x0 - x2) - y0)
    if y0 != y1 or y0 == 0:
        # vertical chord, or vertical tangent at a 2-torsion point
        return INFINITY
    lam = (3 * x0 * x0 + c.B) / (2 * y0)
    x2 = lam * lam - 2 * x0
    return Point(x2, 3 * x0 * lam - lam**3 - y0)


def double(c: CurveParams, p: Point, check: bool = True) -> Point:
    return add(c, p, p, check)


def scalar_mul(c: CurveParams, t: int, p: Point, check: bool = True) -> Point:
    if check:
        _require(c, p)
    if t < 0:
        t, p = -t, neg(p)
    acc = INFINITY
    while t:
        if t & 1:
            acc = add(c, acc, p, check=False)
        t >>= 1
        if t:
            p = add(c, p, p, check=False)
    return acc


def two_torsion(c: CurveParams) -> list[Point]:
    return [Point(0, 0), Point(c.A, 0), Point(-c.A, 0)]


def has_infinite_order(c: CurveParams, p: Point) -> bool:
    """True iff p is an affine point with y != 0.

    The torsion subgroup of C_A is exactly {O, (0,0), (A,0), (-A,0)}, so every
    other rational point has infinite order.
    """
    _require(c, p)
    return not p.is_infinity and p.y != 0
