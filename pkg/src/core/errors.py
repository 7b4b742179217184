"""
Error types shared by every bigcell module.

The CLI maps ParseError to exit code 2 and every other BigCellError to 1.
"""

from typing import Optional


class BigCellError(Exception):
    """Base class for all errors raised by the library"""


class DomainError(BigCellError, ValueError):
    """Input outside the domain of an operation"""


class UnrepresentableError(DomainError):
    """Value would need a default exponent outside {0, inf}"""


class NonConvergentError(DomainError):
    """Sequence has no pcfb-limit"""


class PreconditionError(DomainError):
    """Operation called outside its precondition"""


class SolverLimitError(BigCellError):
    """Expansion, iteration or enumeration cap exceeded"""


class VerificationError(BigCellError):
    """A self-check failed; indicates an internal defect"""


class ParseError(BigCellError, ValueError):
    """
    Malformed literal, patch expression, sieve, matrix or document.

    Args:
        message: what went wrong
        text: the input being parsed
        position: 0-based offset of the offending character
        expected: description of the token that was expected
    """

    def __init__(
        self,
        message: str,
        text: str = "",
        position: Optional[int] = None,
        expected: Optional[str] = None,
    ):
        self.text = text
        self.position = position
        self.expected = expected
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)
