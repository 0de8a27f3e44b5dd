"""Exception hierarchy shared by every module of the package."""


class SingEquivError(Exception):
    """Base class for all errors raised by singequiv."""


class ShapeMismatch(SingEquivError, ValueError):
    pass


class FieldMismatch(SingEquivError, ValueError):
    pass


class AlgebraMismatch(SingEquivError, ValueError):
    pass


class TagMismatch(SingEquivError, ValueError):
    """Bimodule sides do not line up for a tensor or Hom construction."""


class NotNilpotent(SingEquivError, ValueError):
    pass


class InconsistentRelations(SingEquivError, ValueError):
    pass


class NotIdempotent(SingEquivError, ValueError):
    pass


class InvalidAlgebra(SingEquivError, ValueError):
    """Structure constants violate associativity, unit, or elementarity."""


class InvalidModule(SingEquivError, ValueError):
    pass


class RadicalNeedsLargerPrime(SingEquivError, ValueError):
    """The trace-form radical is only valid when p exceeds the dimension."""


class Inconclusive(SingEquivError):
    """Randomized isomorphism search found nothing, but nothing rules it out."""


class HypothesisFailed(SingEquivError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class ConstructionExhausted(SingEquivError):
    pass


class ZaksViolated(SingEquivError):
    """Left and right injective dimensions of a ring disagree (a bug)."""


class ComplexError(SingEquivError, ValueError):
    """A complex or chain map violates d^2 = 0 or commutativity."""


class ParseError(SingEquivError, ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ValidationError(SingEquivError, ValueError):
    def __init__(self, invariant: str, line: int = 0, detail: str = ""):
        self.invariant = invariant
        self.line = line
        self.detail = detail
        msg = f"line {line}: {invariant}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class UnknownTask(SingEquivError, KeyError):
    pass
