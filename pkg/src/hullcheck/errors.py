"""Exception hierarchy shared by every hullcheck module."""


class HullcheckError(Exception):
    """Base class for all library errors."""


class ParseError(HullcheckError):
    """A record could not be parsed; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(HullcheckError):
    """A dataset invariant is violated; ``field`` names the offending field."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        prefix = []
        if line is not None:
            prefix.append(f"line {line}")
        if field is not None:
            prefix.append(f"field {field!r}")
        if prefix:
            message = ", ".join(prefix) + ": " + message
        super().__init__(message)


class NoMixedResults(HullcheckError):
    """All responses are identical, so there are no displacement pairs."""


class NonFinite(HullcheckError):
    """A predictor or displacement entry is NaN or infinite."""


class DegenerateWeights(HullcheckError):
    """Total EL weight is too small to renormalize into marginals."""


class NotOverlapping(HullcheckError):
    """The input has no overlapping core."""


class NotMinimal(HullcheckError):
    """The input is not a minimal overlap configuration."""


class NotTypeI(HullcheckError):
    """The input is not a Type I configuration."""


class SingularVminus(HullcheckError):
    """The reduced interim matrix is singular."""


class BudgetExceeded(HullcheckError):
    """An exhaustive search would exceed its evaluation budget."""


class CompositionFailed(HullcheckError):
    """An add composition did not produce a minimal Type II configuration."""


class UnknownBasis(HullcheckError):
    """A lattice search was requested for an unsupported basis."""


class DimensionUnsupported(HullcheckError):
    """The operation only supports configurations of low effective dimension."""


class BadShape(HullcheckError):
    """Requested generator dimensions are inconsistent."""
