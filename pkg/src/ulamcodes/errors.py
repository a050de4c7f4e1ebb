"""Shared exception types."""


class ParameterError(ValueError):
    """Raised when requested parameters violate a construction's constraints.

    The message names the violated constraint so callers (and the CLI) can
    surface it verbatim.
    """
