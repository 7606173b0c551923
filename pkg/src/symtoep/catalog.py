"""Built-in symbols for the eight reference experiments ``ex4.1`` .. ``ex4.8``."""
import math

from .symbols import MatrixSymbol, PiecewiseConstant, TrigPolynomial, theta_squared


def cosine_2_12():
    """``2 - 12 cos t``."""
    return TrigPolynomial({0: 2.0, 1: -6.0, -1: -6.0})


def nonsymmetric_cubic():
    """``4 + 2e^{-it} + 2e^{-2it} + 9e^{-3it} + e^{it}``."""
    return TrigPolynomial({0: 4.0, -1: 2.0, -2: 2.0, -3: 9.0, 1: 1.0})


def step_525():
    """5 on ``[-pi, -pi/2)``, 2 on ``[-pi/2, pi/2)``, 5 on ``[pi/2, pi]``."""
    return PiecewiseConstant([-math.pi, -math.pi / 2, math.pi / 2, math.pi], [5.0, 2.0, 5.0])


def rotated_diagonal_2x2():
    """``Q diag(10 + 2cos t, 2 - cos t) Q`` with ``Q = [[1, 1], [1, -1]]/sqrt(2)``.

    Expanded: diagonal entries ``6 + cos(t)/2``, off-diagonal ``4 + 3cos(t)/2``.
    """
    diag = TrigPolynomial({0: 6.0, 1: 0.25, -1: 0.25})
    off = TrigPolynomial({0: 4.0, 1: 0.75, -1: 0.75})
    return MatrixSymbol([[diag, off], [off, diag]])


def nonsymmetric_linear():
    """``2 - 2e^{-it} - 3e^{it}``."""
    return TrigPolynomial({0: 2.0, -1: -2.0, 1: -3.0})


BUILTINS = {
    "ex4.1": cosine_2_12,
    "ex4.2": nonsymmetric_cubic,
    "ex4.3": theta_squared,
    "ex4.4": step_525,
    "ex4.5": rotated_diagonal_2x2,
    "ex4.6": nonsymmetric_linear,
    "ex4.7": theta_squared,
    "ex4.8": step_525,
}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown built-in symbol {name!r}; choose from {sorted(BUILTINS)}") from None
