"""Exception hierarchy shared by every permpat module."""


class PermpatError(Exception):
    """Root of all errors raised by permpat."""


class InvalidInputError(PermpatError, ValueError):
    """Malformed permutation, pattern, sequence or recurrence."""


class DomainError(PermpatError, ValueError):
    """Engine index outside its domain."""


class ResourceLimitError(PermpatError):
    """Brute-force request above the configured ceiling."""


class IntegralityError(PermpatError, ArithmeticError):
    """An exact value that must be an integer is not."""


class SingularityError(PermpatError, ArithmeticError):
    """Leading recurrence coefficient vanishes where a term is needed."""


class ConfigError(PermpatError):
    """Bad configuration value or environment override."""


class InsufficientTermsError(InvalidInputError):
    def __init__(self, required, given):
        super().__init__(f"need at least {required} terms, got {given}")
        self.required = required
        self.given = given
