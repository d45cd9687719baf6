import dataclasses
from fractions import Fraction
from math import isqrt

import pytest
import sympy

from cnforge.arith import SquareClass, square_free_part
from cnforge.curve import CurveParams, Point, add, has_infinite_order, neg, on_curve
from cnforge.descent import (
    DescentParams,
    QuarticWitness,
    b1_of_point,
    collinearity_check,
    expected_classes,
    fourteen_classes,
    quartic_witness,
    rank2_certificate,
    scaled_certificate,
    subgroup_closure,
)
from cnforge.errors import DegenerateGeometry, DistinctnessFailure, NonIntegralWitness, NotAdmissible, ZeroScale, ZeroX
from cnforge.normform import AdmissibleInput, NormFormSolution, admissible_input, admissible_moduli, theorem_inputs
from cnforge.table import PAPER_TABLE

from oracles import gf2_rank

B840 = DescentParams(-(840**2))


def all_inputs(limit=500):
    return [inp for m in admissible_moduli(limit) for inp in theorem_inputs(m)]


def test_quartic_exponent_convention_symbolically():
    b1, b2, M, e, N = sympy.symbols("b1 b2 M e N", nonzero=True)
    x = b1 * M**2 / e**2
    y = b1 * M * N / e**3
    residual = sympy.simplify((y**2 - x**3 - b1 * b2 * x) * e**6 / (b1**2 * M**2))
    assert sympy.expand(residual - (N**2 - b1 * M**4 - b2 * e**4)) == 0


def test_printed_quartic_form_is_not_satisfied():
    w = quartic_witness(B840, Point(1176, 28224))
    assert w.b1 * w.M**4 + w.b2 * w.e**2 != w.N**4


@pytest.mark.parametrize(
    "point, expected",
    [((1176, 28224), 6), ((5040, 352800), 35), ((-600, -14400), -6)],
)
def test_b1_of_point_examples(point, expected):
    assert b1_of_point(Point(*point)) == expected


def test_b1_of_point_literal_values():
    # kl = 24, mn = 35, -kl = -24 reduced modulo squares
    assert square_free_part(24)[0] == 6 and square_free_part(35)[0] == 35


def test_b1_of_point_rejects_zero_x():
    with pytest.raises(ZeroX):
        b1_of_point(Point(0, 0))


@pytest.mark.parametrize(
    "B, point, witness",
    [
        (-(840**2), (1176, 28224), (6, 14, 1, 336)),
        (-36, (18, 72), (2, 3, 1, 12)),
        (-(840**2), (-600, -14400), (-6, 10, 1, 240)),
    ],
)
def test_quartic_witness_examples(B, point, witness):
    w = quartic_witness(DescentParams(B), Point(*point))
    assert (w.b1, w.M, w.e, w.N) == witness
    assert w.b2 == B // w.b1
    assert w.N**2 == w.b1 * w.M**4 + w.b2 * w.e**4
    assert w.point() == Point(*point)


def test_quartic_witness_hand_arithmetic():
    assert 336**2 == 112896 == 6 * 14**4 - 117600
    assert 144 == 2 * 81 - 18
    assert 240**2 == 57600 == -6 * 10**4 + 117600


def test_quartic_witness_with_denominators():
    c = CurveParams(6)
    p = Point(Fraction(25, 4), Fraction(35, 8))
    w = quartic_witness(DescentParams.for_curve(c), p)
    assert w.e == 2 and w.holds() and w.point() == p


def test_quartic_witness_rejects_bad_points():
    with pytest.raises(ValueError):
        quartic_witness(B840, Point(840, 0))
    with pytest.raises(ValueError):
        quartic_witness(B840, Point(1, 1))


def test_quartic_witness_flags_inconsistent_reconstruction(monkeypatch):
    import cnforge.descent as descent

    # a wrong square-free split can only come from a bug; it must not pass silently
    monkeypatch.setattr(descent, "square_free_part", lambda n: (7, 1))
    with pytest.raises(NonIntegralWitness):
        quartic_witness(B840, Point(1176, 28224))


def test_descent_params():
    p = DescentParams.for_curve(CurveParams(840))
    assert p.B == -(840**2) and p.B_bar == 4 * 840**2


def test_fourteen_classes_for_840():
    pts, classes = fourteen_classes(admissible_input(7, 5, 3))
    assert len(pts) == len(classes) == 14
    expected = {6, 10, 15, 35, 21, 14, 210}
    assert set(classes) == expected | {-v for v in expected}
    assert [square_free_part(v)[0] for v in expected_classes(NormFormSolution.of(7, 5, 3))] == list(classes)


def test_fourteen_classes_table_row_one():
    row = PAPER_TABLE[0]
    _, classes = fourteen_classes(admissible_input(row.m, row.n, row.l))
    assert len(set(classes)) == 14


def test_distinctness_failure_is_raised(monkeypatch):
    import cnforge.descent as descent

    monkeypatch.setattr(descent, "b1_of_point", lambda p: SquareClass(1))
    with pytest.raises(DistinctnessFailure):
        fourteen_classes(admissible_input(7, 5, 3))
    with pytest.raises(DistinctnessFailure):
        rank2_certificate(admissible_input(7, 5, 3))
    assert not issubclass(DistinctnessFailure, ValueError)


@pytest.mark.parametrize(
    "gens, order",
    [([6, 10, 35, -6], 16), ([1], 1), ([-1], 2)],
)
def test_subgroup_closure_examples(gens, order):
    group = subgroup_closure([SquareClass(g) for g in gens])
    assert len(group) == order == 2 ** gf2_rank(gens)
    assert SquareClass(1) in group


def test_subgroup_closure_is_closed(rng):
    gens = [SquareClass(g) for g in (6, -10, 21, 11)]
    group = subgroup_closure(gens)
    assert len(group) == 2 ** gf2_rank(gens)
    for _ in range(200):
        a, b = rng.choice(sorted(group)), rng.choice(sorted(group))
        assert a * b in group


def test_rank2_certificate_for_840():
    cert = rank2_certificate(admissible_input(7, 5, 3))
    assert cert.A == 840
    assert cert.closure_order == 16
    assert cert.rank_lower_bound == 2 and cert.scaling_q == 1
    assert cert.infinite_order_witness == Point(1176, 28224)
    assert has_infinite_order(cert.curve, cert.infinite_order_witness)
    assert cert.verify()


def test_rank2_certificate_other_examples():
    cert = rank2_certificate(admissible_input(889, 561, 464))
    assert cert.A == 237195512400 and cert.verify()
    cert = rank2_certificate(theorem_inputs(91)[1])
    assert cert.A == 13693680 and cert.verify()


def test_rank2_certificate_rechecks_hypotheses():
    good = admissible_input(7, 5, 3)
    forged = AdmissibleInput(NormFormSolution.of(91, 65, 39), good.m_factors)
    with pytest.raises(NotAdmissible):
        rank2_certificate(forged)


def test_certificate_checks_catch_tampering():
    cert = rank2_certificate(admissible_input(7, 5, 3))
    bad = dataclasses.replace(cert, classes=cert.classes[:-1] + (cert.classes[0],))
    checks = bad.checks()
    assert not checks["classes_distinct"] and not checks["classes_match_points"]
    bad = dataclasses.replace(cert, points=(Point(1, 1),) + cert.points[1:])
    assert not bad.checks()["points_on_curve"]


@pytest.mark.parametrize("q, A", [(1, 840), (2, 13440), (3, 68040), (-3, 68040), (5, 525000)])
def test_scaled_certificate(q, A):
    cert = rank2_certificate(admissible_input(7, 5, 3))
    scaled = scaled_certificate(cert, q)
    assert scaled.A == A == 840 * q**4
    assert scaled.verify()
    assert sorted(scaled.classes) == sorted(cert.classes)


def test_scaled_certificate_identity_and_sign():
    cert = rank2_certificate(admissible_input(7, 5, 3))
    assert scaled_certificate(cert, 1) == cert
    assert scaled_certificate(cert, -3) == scaled_certificate(cert, 3)
    assert scaled_certificate(scaled_certificate(cert, 2), 3) == scaled_certificate(cert, 6)
    with pytest.raises(ZeroScale):
        scaled_certificate(cert, 0)


@pytest.mark.parametrize(
    "m, n, l, slope",
    [(7, 5, 3, 64), (91, 85, 11, 96**2), (889, 561, 464, 1025**2)],
)
def test_collinearity_examples(m, n, l, slope):
    s = NormFormSolution.of(m, n, l)
    lam, ok = collinearity_check(s)
    assert lam == slope and ok


def test_collinearity_hand_slope():
    assert Fraction(78400 - 28224, 1960 - 1176) == 64


def test_twelve_points_quartic_witnesses_round_trip():
    for inp in [admissible_input(7, 5, 3)] + all_inputs(200):
        cert = rank2_certificate(inp)
        params = DescentParams.for_curve(cert.curve)
        for p in cert.points[:12]:
            w = quartic_witness(params, p)
            assert isinstance(w, QuarticWitness) and w.holds() and w.point() == p


def test_descent_invariants_up_to_500():
    inputs = all_inputs(500)
    assert len(inputs) > 20
    for inp in inputs:
        s = inp.solution
        cert = rank2_certificate(inp)
        assert len(set(cert.classes)) == 14
        assert cert.closure_order >= 16 and cert.closure_order & (cert.closure_order - 1) == 0
        assert cert.closure_order == 2 ** gf2_rank(cert.classes)
        assert list(cert.classes[:12]) == [square_free_part(v)[0] for v in expected_classes(s)[:12]]
        lam, ok = collinearity_check(s)
        assert ok and lam == s.k**2
        p1, p2, p3 = cert.points[0], cert.points[1], cert.points[2]
        c = cert.curve
        assert add(c, add(c, p1, p2), p3).is_infinity
        assert add(c, p1, p2) == neg(p3)
        squares = [v for v in (s.k, s.l, s.n) if isqrt(v) ** 2 == v]
        assert len(squares) <= 1


def test_collinearity_degenerate_guard(monkeypatch):
    import cnforge.descent as descent

    s = NormFormSolution.of(7, 5, 3)
    p = Point(1176, 28224)
    monkeypatch.setattr(descent, "integral_points_from_solution", lambda _: (p, p, Point(960, 14400)))
    with pytest.raises(DegenerateGeometry):
        collinearity_check(s)


def test_certificate_points_lie_on_curve():
    cert = rank2_certificate(admissible_input(7, 5, 3))
    assert all(on_curve(cert.curve, p) for p in cert.points)
    assert cert.points[12:] == (Point(840, 0), Point(-840, 0))
