"""Exception types shared across the package."""


class HolopowError(Exception):
    """Base class for domain errors (reported with exit code 1 by the CLI)."""


class HypothesisError(HolopowError, ValueError):
    """An input violates a degree inequality that a bound depends on.

    ``inequality`` names the failed condition.
    """

    def __init__(self, inequality: str, detail: str = ""):
        self.inequality = inequality
        msg = f"hypothesis violated: {inequality}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PowerCapError(HolopowError, ValueError):
    pass


class UndefinedParameterError(HolopowError, ValueError):
    pass


class ToleranceError(HolopowError, RuntimeError):
    """Requested accuracy was not reached; ``achieved`` holds the estimate."""

    def __init__(self, message: str, achieved: float):
        self.achieved = achieved
        super().__init__(f"{message} (achieved error estimate {achieved:.3g})")


class SingularityError(HolopowError, ValueError):
    pass


class ValidityError(HolopowError, ValueError):
    pass
