"""Exception types shared across the package."""


class LapcylError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LapcylError, ValueError):
    """Argument outside the supported domain of a function."""


class PoleError(LapcylError, ValueError):
    """Evaluation requested exactly at a pole."""


class ParameterPole(PoleError):
    """A series is undefined because a denominator parameter is a
    nonpositive integer."""


class NonConvergence(LapcylError, RuntimeError):
    """An iterative computation did not reach its tolerance.

    When raised by the quadrature engine, ``result`` holds the partial
    :class:`~lapcyl.quad.QuadratureResult` with ``converged=False``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class InvalidParams(LapcylError, ValueError):
    """A catalog case was asked to evaluate outside its validity region."""
