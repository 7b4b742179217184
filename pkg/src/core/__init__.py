# Core package: supernatural numbers and shared error types
from .errors import (
    BigCellError,
    DomainError,
    NonConvergentError,
    ParseError,
    PreconditionError,
    SolverLimitError,
    UnrepresentableError,
    VerificationError,
)
from .supernat import (
    INF,
    Exponent,
    NaturalNumber,
    SupernaturalNumber,
    as_supernatural,
    divides,
    gcd,
    is_completely_infinite,
    lcm,
    parse_natural,
    parse_supernatural,
    format_supernatural,
    valuation,
)

__all__ = [
    "BigCellError",
    "DomainError",
    "NonConvergentError",
    "ParseError",
    "PreconditionError",
    "SolverLimitError",
    "UnrepresentableError",
    "VerificationError",
    "INF",
    "Exponent",
    "NaturalNumber",
    "SupernaturalNumber",
    "as_supernatural",
    "divides",
    "gcd",
    "is_completely_infinite",
    "lcm",
    "parse_natural",
    "parse_supernatural",
    "format_supernatural",
    "valuation",
]
