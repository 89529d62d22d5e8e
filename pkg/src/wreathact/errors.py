"""Exception types shared across the package."""


class InvalidPermutationError(ValueError):
    """An image sequence that is not a bijection of {0..n-1}."""


class DegreeMismatchError(ValueError):
    """Operands live on different index sets (degree or context mismatch)."""


class ParseError(ValueError):
    """Malformed textual input."""


class EnumerationOverflow(RuntimeError):
    """A brute-force enumeration would exceed its configured cap.

    Raised instead of silently truncating; callers that can live with a
    partial answer must raise the cap explicitly.
    """


class HypothesisViolation(ValueError):
    """The input fails a hypothesis required by the requested construction.

    ``delta`` names the offending coordinate when there is one.
    """

    def __init__(self, message: str, delta: int | None = None):
        super().__init__(message)
        self.delta = delta
