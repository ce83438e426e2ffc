"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Decoding was requested with parameters that are out of range or
    admit no feasible (s, ell) choice."""


class InternalCheckError(RuntimeError):
    """A guaranteed postcondition failed; indicates a bug, never bad input."""
