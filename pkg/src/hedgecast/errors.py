"""Exception types shared across the engine."""


class ParameterError(ValueError):
    """Caller supplied an argument outside the documented domain."""


class FormatError(ValueError):
    """Input bytes or records do not match the documented format."""


class TrialNotFoundError(LookupError):
    """Requested trial id is not present in the trial set."""


class OutOfDomainError(ValueError):
    """Queried temperature lies outside the chart's axis domain."""


class DegenerateDistributionError(ValueError):
    """All samples identical: zero variance, so skew and density are undefined."""
