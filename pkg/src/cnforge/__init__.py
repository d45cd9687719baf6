"""Congruent number curves of rank at least two from m^2 = n^2 + nl + l^2."""

from .arith import SquareClass, class_mul, factorize, is_prime, primes_1_mod_6, square_class, square_free_part
from .curve import INFINITY, CurveParams, Point, add, double, has_infinite_order, neg, on_curve, scalar_mul, two_torsion
from .descent import (
    DescentParams,
    QuarticWitness,
    RankCertificate,
    b1_of_point,
    collinearity_check,
    fourteen_classes,
    quartic_witness,
    rank2_certificate,
    scaled_certificate,
    subgroup_closure,
)
from .normform import (
    AdmissibleInput,
    NormFormSolution,
    admissible_input,
    admissible_moduli,
    solve_m,
    solve_m_squared,
    theorem_inputs,
    verify_fact1_counts,
)
from .triples import (
    PythTriple,
    TripleFamily,
    integral_points_from_solution,
    negate_hypotenuse,
    psi,
    psi_inv,
    swap_catheti,
    three_triples,
    triple_from_mn,
)

__version__ = "0.1.0"
