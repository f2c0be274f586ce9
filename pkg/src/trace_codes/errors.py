"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid or mismatched parameters (bad prime, odd e, cap breach, ...)."""


class DegenerateCodeError(ParameterError):
    """The defining set is empty, so the code has length 0."""


class UnsupportedRegimeError(ParameterError):
    """The requested closed form does not exist for these parameters."""


class InternalError(RuntimeError):
    """An invariant that must hold by construction was violated."""
