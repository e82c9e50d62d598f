"""Exception types raised across se2up."""


class BandError(ValueError):
    """A grid or coefficient band is too small or malformed."""


class ZeroFunctionError(ValueError):
    """An inequality was evaluated on the zero function."""


class InfeasibleError(ValueError):
    """A point violates the floor on ||Tf|| or no feasible start exists."""


class ConsistencyError(ArithmeticError):
    """Two routes to the same quantity disagree beyond rounding."""
