"""Exception types raised by cnforge."""


class CNForgeError(Exception):
    """Base class for all cnforge errors."""


class Unfactored(CNForgeError, ArithmeticError):
    """A cofactor could not be split within the configured effort bound."""

    def __init__(self, n, cofactor, effort):
        self.n = n
        self.cofactor = cofactor
        self.effort = effort
        super().__init__(
            f"could not split cofactor {cofactor} of {n} within {effort} rho iterations"
        )


class NotAdmissible(CNForgeError, ValueError):
    pass


class NotOnCurve(CNForgeError, ValueError):
    pass


class DegenerateTriple(CNForgeError, ValueError):
    pass


class NotInvertibleHere(CNForgeError, ValueError):
    pass


class BadOrder(CNForgeError, ValueError):
    pass


class ZeroX(CNForgeError, ValueError):
    pass


class ZeroScale(CNForgeError, ValueError):
    pass


class NonIntegralWitness(CNForgeError, ArithmeticError):
    pass


class DegenerateGeometry(CNForgeError, ValueError):
    pass


class DistinctnessFailure(CNForgeError, RuntimeError):
    """Two certificate square classes coincide.

    Under the rank-two hypotheses this cannot happen, so it always points at a
    bug rather than at bad input.
    """
