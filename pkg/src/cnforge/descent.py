"""Square-class bookkeeping that certifies rank(C_A) >= 2.

For a rational point (x, y) on y^2 = x^3 + Bx with x != 0 the class of x in
Q*/(Q*)^2 is the square-free b1 of a solvable quartic N^2 = b1 M^4 + b2 e^4
with b1 b2 = B.  Fourteen distinct classes together with one point of
infinite order force the rank up to at least two.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .arith import SquareClass, class_mul, square_class, square_free_part
from .curve import CurveParams, Point, add, has_infinite_order, neg, on_b_curve, on_curve
from .errors import (
    DegenerateGeometry,
    DistinctnessFailure,
    NonIntegralWitness,
    NotAdmissible,
    ZeroScale,
    ZeroX,
)
from .normform import AdmissibleInput, NormFormSolution, admissible_input
from .triples import PythTriple, integral_points_from_solution, negate_hypotenuse, psi, swap_catheti, three_triples

# A positive rank plus this many distinct classes already gives rank >= 2.
MIN_CLASSES_FOR_RANK_TWO = 9


@dataclass(frozen=True)
class DescentParams:
    """The isogenous pair y^2 = x^3 + Bx and y^2 = x^3 - 4Bx."""

    B: int

    @property
    def B_bar(self) -> int:
        return -4 * self.B

    @classmethod
    def for_curve(cls, c: CurveParams) -> DescentParams:
        return cls(c.B)


@dataclass(frozen=True)
class QuarticWitness:
    """Integers with N^2 = b1 M^4 + b2 e^4, encoding x = b1 M^2/e^2, y = b1 M N/e^3."""

    b1: SquareClass
    b2: int
    M: int
    e: int
    N: int

    def holds(self) -> bool:
        return self.e != 0 and self.N**2 == self.b1 * self.M**4 + self.b2 * self.e**4

    def point(self) -> Point:
        return Point(Fraction(self.b1 * self.M**2, self.e**2), Fraction(self.b1 * self.M * self.N, self.e**3))


def b1_of_point(p: Point) -> SquareClass:
    if p.is_infinity:
        raise ValueError("the point at infinity has no x-coordinate")
    if p.x == 0:
        raise ZeroX("x = 0; use the classes of (A, 0) and (-A, 0) instead")
    return square_class(p.x)


def quartic_witness(params: DescentParams, p: Point) -> QuarticWitness:
    if p.is_infinity or p.x == 0 or p.y == 0:
        raise ValueError(f"{p} needs x != 0 and y != 0")
    if not on_b_curve(params.B, p):
        raise ValueError(f"{p} is not on y^2 = x^3 + {params.B} x")
    num, den = p.x.numerator, p.x.denominator
    e = isqrt(den)
    if e * e != den:
        raise NonIntegralWitness(f"denominator {den} of x is not a square")
    b1, M = square_free_part(num)
    if params.B % b1:
        raise NonIntegralWitness(f"b1 = {b1} does not divide B = {params.B}")
    N = p.y * e**3 / (b1 * M)
    if N.denominator != 1:
        raise NonIntegralWitness(f"N = {N} is not an integer")
    w = QuarticWitness(SquareClass(b1, check=False), params.B // b1, M, e, N.numerator)
    if not w.holds() or w.point() != p:
        raise NonIntegralWitness(f"witness {w} does not reproduce {p}")
    return w


def subgroup_closure(classes) -> set[SquareClass]:
    """Subgroup of Q*/(Q*)^2 generated by ``classes``, identity included."""
    group = {SquareClass(1, check=False)}
    for g in classes:
        if g not in group:
            group |= {class_mul(g, h) for h in group}
    return group


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def expected_classes(s: NormFormSolution) -> list[int]:
    """kl, kn, nl, mn, ml, mk, their negatives, then klmn and -klmn (unreduced)."""
    m, n, l, k = s.m, s.n, s.l, s.k
    base = [k * l, k * n, n * l, m * n, m * l, m * k]
    return base + [-v for v in base] + [k * l * m * n, -k * l * m * n]


def certificate_triples(s: NormFormSolution) -> list[PythTriple]:
    """The twelve triples whose psi-images carry the non-torsion classes.

    Order: family triples, the same with catheti swapped, then all six again
    with the hypotenuse negated.
    """
    fam = list(three_triples(s))
    six = fam + [swap_catheti(t) for t in fam]
    return six + [negate_hypotenuse(t) for t in six]


def fourteen_classes(inp: AdmissibleInput | NormFormSolution) -> tuple[list[Point], list[SquareClass]]:
    s = inp.solution if isinstance(inp, AdmissibleInput) else inp
    A = s.area
    points = [psi(t) for t in certificate_triples(s)]
    classes = [b1_of_point(p) for p in points]
    points += [Point(A, 0), Point(-A, 0)]
    classes += [square_class(A), square_class(-A)]
    if len(set(classes)) != len(classes):
        seen = {}
        for i, cl in enumerate(classes):
            if cl in seen:
                raise DistinctnessFailure(f"classes {seen[cl] + 1} and {i + 1} coincide ({cl}) for {s}")
            seen[cl] = i
    return points, classes


def collinearity_check(s: NormFormSolution) -> tuple[Fraction, bool]:
    """Slopes through the three integral points; ok iff both equal k^2 and P1 + P2 = -P3."""
    p1, p2, p3 = integral_points_from_solution(s)
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise DegenerateGeometry(f"integral points of {s} coincide")
    lam12 = (p2.y - p1.y) / (p2.x - p1.x)
    lam13 = (p3.y - p1.y) / (p3.x - p1.x)
    c = CurveParams(s.area)
    ok = lam12 == lam13 == s.k**2 and add(c, p1, p2) == neg(p3)
    return lam12, ok


@dataclass(frozen=True)
class RankCertificate:
    input: AdmissibleInput
    A: int
    points: tuple[Point, ...]
    classes: tuple[SquareClass, ...]
    closure_order: int
    infinite_order_witness: Point
    rank_lower_bound: int = 2
    scaling_q: int = 1
    witnesses: tuple[QuarticWitness, ...] = field(default=(), compare=False, repr=False)

    @property
    def solution(self) -> NormFormSolution:
        return self.input.solution.scaled(self.scaling_q)

    @property
    def curve(self) -> CurveParams:
        return CurveParams(self.A)

    def checks(self) -> dict[str, bool]:
        """Re-verify every claim of the certificate from scratch."""
        s = self.solution
        c = self.curve
        base = self.input.solution
        pts = [p for p in self.points if p.y != 0]
        try:
            hyp = admissible_input(base.m, base.n, base.l) == self.input
        except NotAdmissible:
            hyp = False
        slope, collinear = collinearity_check(s)
        expected = [square_class(v) for v in expected_classes(s)]
        try:
            witnesses_ok = all(
                quartic_witness(DescentParams.for_curve(c), p).point() == p for p in pts
            )
        except (NonIntegralWitness, ValueError):
            witnesses_ok = False
        return {
            "hypotheses": hyp,
            "norm_identity": s.m**2 == s.n**2 + s.n * s.l + s.l**2,
            "k_is_n_plus_l": s.k == s.n + s.l,
            "area_is_klmn": self.A == s.area == base.area * self.scaling_q**4,
            "points_on_curve": all(on_curve(c, p) for p in self.points),
            "fourteen_points": len(self.points) == 14 and len(set(self.points)) == 14,
            "classes_match_points": list(self.classes) == [b1_of_point(p) for p in pts]
            + [square_class(self.A), square_class(-self.A)],
            "classes_match_formula": list(self.classes) == expected,
            "classes_distinct": len(set(self.classes)) == 14,
            "enough_classes": len(set(self.classes)) >= MIN_CLASSES_FOR_RANK_TWO,
            "closure_power_of_two": _is_power_of_two(self.closure_order)
            and self.closure_order == len(subgroup_closure(self.classes))
            and self.closure_order >= 16,
            "infinite_order_witness": has_infinite_order(c, self.infinite_order_witness),
            "quartic_witnesses": witnesses_ok,
            "collinear": collinear and slope == s.k**2,
        }

    def verify(self) -> bool:
        return all(self.checks().values())


def _build(inp: AdmissibleInput, q: int) -> RankCertificate:
    s = inp.solution.scaled(q)
    c = CurveParams(s.area)
    points, classes = fourteen_classes(s)
    params = DescentParams.for_curve(c)
    witnesses = tuple(quartic_witness(params, p) for p in points[:12])
    closure = subgroup_closure(classes)
    if not (_is_power_of_two(len(closure)) and len(closure) >= 16):
        raise DistinctnessFailure(f"closure of the classes has order {len(closure)}")
    witness = integral_points_from_solution(s)[0]
    if not has_infinite_order(c, witness):
        raise AssertionError(f"{witness} should have infinite order")
    return RankCertificate(
        input=inp,
        A=c.A,
        points=tuple(points),
        classes=tuple(classes),
        closure_order=len(closure),
        infinite_order_witness=witness,
        scaling_q=q,
        witnesses=witnesses,
    )


def rank2_certificate(inp: AdmissibleInput) -> RankCertificate:
    """Certificate that rank(C_klmn) >= 2 for an admissible (m, n, l)."""
    s = inp.solution
    # Re-check the hypotheses instead of trusting how inp was made.
    if admissible_input(s.m, s.n, s.l) != inp:
        raise NotAdmissible(f"{inp} does not match its own re-verification")
    return _build(inp, 1)


def scaled_certificate(cert: RankCertificate, q: int) -> RankCertificate:
    """Certificate for C_{A q^4} built from the solution (mq, nq, lq, kq).

    The scaled solution is not coprime any more, so its provenance is the
    original admissible input plus the scale factor.
    """
    if q == 0:
        raise ZeroScale("q must be nonzero")
    if abs(q) == 1:
        return cert
    return _build(cert.input, cert.scaling_q * abs(q))
