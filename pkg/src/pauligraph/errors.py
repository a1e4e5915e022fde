class BudgetExceeded(RuntimeError):
    """A configured size budget would be exceeded; no partial result is returned."""

    def __init__(self, stage: str, limit: int, needed: int | None = None):
        self.stage = stage
        self.limit = limit
        self.needed = needed
        msg = f"{stage}: budget {limit} exceeded"
        if needed is not None:
            msg += f" (needs {needed})"
        super().__init__(msg)


class VerificationError(RuntimeError):
    """An exact cross-check between two independent routes failed."""


class SpectrumError(VerificationError):
    """Numerical eigenvalue hints disagree with the exact rank certificate."""
