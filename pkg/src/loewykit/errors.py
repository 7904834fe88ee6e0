"""Exception hierarchy shared by every layer of the engine."""


class LoewyError(Exception):
    """Base class for engine errors."""


class DimensionMismatch(LoewyError, ValueError):
    pass


class AlgebraMismatch(LoewyError, ValueError):
    pass


class UnsupportedCharacteristic(LoewyError):
    """Raised when an algorithm's characteristic restriction is violated."""


class NotInvariant(LoewyError, ValueError):
    """A subspace expected to be a submodule or ideal is not closed."""


class NotSemisimple(LoewyError, ValueError):
    pass


class AxiomError(LoewyError, ValueError):
    """Input data violates an algebraic axiom; ``violations`` lists them."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class Inconclusive(LoewyError):
    """A randomized search ran out of attempts without a certificate."""


class PreconditionError(LoewyError):
    pass


class SchemaError(LoewyError, ValueError):
    """Malformed JSON input (wrong shape, missing keys, bad entries)."""
