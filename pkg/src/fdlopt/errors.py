"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the valid (fibers, recirculations) domain or sequence space."""


class PatternError(DomainError):
    """Sequence does not match the two-valued run pattern a transform requires."""


class CapExceededError(DomainError):
    """Brute-force request above the configured size cap."""

    def __init__(self, m: int, cap: int):
        super().__init__(
            f"m={m} exceeds the brute-force cap {cap}; rerun with a cap of at least {m}"
        )
        self.required_cap = m
        self.cap = cap
