"""
Supernatural numbers - 슈퍼내추럴 수 (Steinitz number) 연산 모듈

A supernatural number is a formal product of prime powers p^e with
e in {0, 1, 2, ...} ∪ {∞}. Only values whose exponents agree with a default
in {0, ∞} outside a finite exception list are representable; this class is
closed under gcd and lcm and holds every natural number, s_Σ for finite or
cofinite Σ, s_p and the maximal element.

Text literal grammar: ``FACTORS[;default=0|inf]`` with FACTORS
``p1^e1*p2^e2*...`` (``e`` a nonnegative integer or ``inf``, ``^e`` optional,
empty FACTORS allowed). ``1`` is the unit, ``;default=inf`` the maximal element.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import factorint, isprime, nextprime

from src.core.errors import DomainError, ParseError, UnrepresentableError

logger = logging.getLogger(__name__)


class _Infinity:
    """The exponent ∞; compares above every integer"""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self) -> int:
        return hash("supernatural-infinity")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True


INF = _Infinity()

Exponent = Union[int, _Infinity]
NaturalNumber = int


# =============================================================================
# EXPONENT HELPERS
# =============================================================================


def is_exponent(value) -> bool:
    """True for nonnegative ints and INF"""
    if value is INF:
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def add_exponents(a: Exponent, b: Exponent) -> Exponent:
    if a is INF or b is INF:
        return INF
    return a + b


def format_exponent(e: Exponent) -> str:
    return "inf" if e is INF else str(e)


def require_natural(value, name: str = "n") -> int:
    """Validate a strictly positive integer (the objects of the big cell)"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    return value


def require_prime(p, name: str = "p") -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise DomainError(f"{name} must be prime, got {p!r}")
    return p


@lru_cache(maxsize=4096)
def factor_natural(n: int) -> Tuple[Tuple[int, int], ...]:
    """Factor a natural number (trial division at desk scale), ascending primes"""
    require_natural(n)
    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def natural_valuation(n: int, p: int) -> int:
    """Exponent of p in the natural number n"""
    for q, e in factor_natural(n):
        if q == p:
            return e
    return 0


def prime_outside(primes: Iterable[int]) -> int:
    """Least prime not in the given collection"""
    taken = set(primes)
    p = 2
    while p in taken:
        p = int(nextprime(p))
    return p


# =============================================================================
# SUPERNATURAL NUMBER
# =============================================================================


@dataclass(frozen=True)
class SupernaturalNumber:
    """
    Canonical finite description of a supernatural number.

    Attributes:
        exceptions: (prime, exponent) pairs, ascending primes, none equal to default
        default: exponent (0 or INF) of every prime not listed
    """

    exceptions: Tuple[Tuple[int, Exponent], ...] = ()
    default: Exponent = 0

    def __post_init__(self):
        if self.default != 0 and self.default is not INF:
            raise UnrepresentableError(
                f"default exponent must be 0 or inf, got {self.default!r}"
            )
        canonical: Dict[int, Exponent] = {}
        for entry in self.exceptions:
            p, e = entry
            require_prime(p, "exception key")
            if not is_exponent(e):
                raise DomainError(f"invalid exponent {e!r} at prime {p}")
            if p in canonical:
                raise DomainError(f"duplicate prime {p} in exceptions")
            canonical[p] = e
        items = tuple(
            (p, canonical[p]) for p in sorted(canonical) if canonical[p] != self.default
        )
        object.__setattr__(self, "exceptions", items)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, exponents: Mapping[int, Exponent], default: Exponent = 0) -> "SupernaturalNumber":
        return cls(tuple(exponents.items()), default)

    @classmethod
    def from_natural(cls, n: int) -> "SupernaturalNumber":
        return cls(factor_natural(require_natural(n)), 0)

    @classmethod
    def one(cls) -> "SupernaturalNumber":
        return cls((), 0)

    @classmethod
    def maximal(cls) -> "SupernaturalNumber":
        """∏_p p^∞"""
        return cls((), INF)

    @classmethod
    def s_sigma(cls, primes: Iterable[int]) -> "SupernaturalNumber":
        """s_Σ = ∏_{p∈Σ} p^∞ for a finite set of primes (s_∅ = 1)"""
        return cls(tuple((p, INF) for p in set(primes)), 0)

    @classmethod
    def s_sigma_cofinite(cls, excluded: Iterable[int]) -> "SupernaturalNumber":
        """s_Σ for Σ = all primes except the given finite set"""
        return cls(tuple((p, 0) for p in set(excluded)), INF)

    @classmethod
    def s_p(cls, p: int) -> "SupernaturalNumber":
        """s_p = ∏_{q≠p} q^∞"""
        return cls.s_sigma_cofinite([require_prime(p)])

    @classmethod
    def parse(cls, text: str) -> "SupernaturalNumber":
        return parse_supernatural(text)

    # ------------------------------------------------------------------
    # accessors
    # ------------------------------------------------------------------

    def exponent(self, p: int) -> Exponent:
        """Exponent of p without primality check (internal hot path)"""
        for q, e in self.exceptions:
            if q == p:
                return e
        return self.default

    def valuation(self, p: int) -> Exponent:
        return self.exponent(require_prime(p))

    def primes(self) -> Tuple[int, ...]:
        """Primes listed as exceptions"""
        return tuple(p for p, _ in self.exceptions)

    def exponent_map(self) -> Dict[int, Exponent]:
        return dict(self.exceptions)

    def is_natural(self) -> bool:
        return self.default == 0 and all(e is not INF for _, e in self.exceptions)

    def to_natural(self) -> int:
        if not self.is_natural():
            raise UnrepresentableError(f"{self} is not a natural number")
        value = 1
        for p, e in self.exceptions:
            value *= p**e
        return value

    def is_completely_infinite(self) -> bool:
        return all(e == 0 or e is INF for _, e in self.exceptions)

    def finite_part(self) -> int:
        """Product of the prime powers with finite nonzero exponent"""
        value = 1
        for p, e in self.exceptions:
            if e is not INF:
                value *= p**e
        return value

    def infinite_primes(self) -> Tuple[int, ...]:
        """Primes with exponent ∞ (requires finite support)"""
        if self.default is INF:
            raise UnrepresentableError(f"{self} has infinitely many infinite primes")
        return tuple(p for p, e in self.exceptions if e is INF)

    def max_finite_exponent(self) -> int:
        finite = [e for _, e in self.exceptions if e is not INF]
        return max(finite, default=0)

    # ------------------------------------------------------------------
    # lattice operations
    # ------------------------------------------------------------------

    def divides(self, other: "SupernaturalNumber") -> bool:
        if self.default > other.default:
            return False
        for p in set(self.primes()) | set(other.primes()):
            if self.exponent(p) > other.exponent(p):
                return False
        return True

    def gcd(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        keys = set(self.primes()) | set(other.primes())
        return SupernaturalNumber(
            tuple((p, min(self.exponent(p), other.exponent(p))) for p in keys),
            min(self.default, other.default),
        )

    def lcm(self, other: "SupernaturalNumber") -> "SupernaturalNumber":
        keys = set(self.primes()) | set(other.primes())
        return SupernaturalNumber(
            tuple((p, max(self.exponent(p), other.exponent(p))) for p in keys),
            max(self.default, other.default),
        )

    def __str__(self) -> str:
        return format_supernatural(self)

    def __repr__(self) -> str:
        return f"SupernaturalNumber({format_supernatural(self)!r})"


SupernaturalLike = Union[SupernaturalNumber, int, str]


def as_supernatural(value: SupernaturalLike) -> SupernaturalNumber:
    """Coerce a natural number or literal to a SupernaturalNumber"""
    if isinstance(value, SupernaturalNumber):
        return value
    if isinstance(value, str):
        return parse_supernatural(value)
    return SupernaturalNumber.from_natural(require_natural(value))


# =============================================================================
# OPERATIONS
# =============================================================================


def divides(a: SupernaturalLike, b: SupernaturalLike) -> bool:
    """True iff every exponent of a is at most the matching exponent of b"""
    return as_supernatural(a).divides(as_supernatural(b))


def gcd(a: SupernaturalLike, b: SupernaturalLike) -> SupernaturalNumber:
    return as_supernatural(a).gcd(as_supernatural(b))


def lcm(a: SupernaturalLike, b: SupernaturalLike) -> SupernaturalNumber:
    return as_supernatural(a).lcm(as_supernatural(b))


def is_completely_infinite(s: SupernaturalLike) -> bool:
    """Every exponent is 0 or ∞"""
    return as_supernatural(s).is_completely_infinite()


def valuation(s: SupernaturalLike, p: int) -> Exponent:
    return as_supernatural(s).valuation(p)


def natural_divides(n: int, s: SupernaturalNumber) -> bool:
    """n | s for a natural number n (hot path of the solvers)"""
    for p, e in factor_natural(n):
        if e > s.exponent(p):
            return False
    return True


# =============================================================================
# TEXT LITERALS
# =============================================================================


def format_supernatural(s: SupernaturalNumber) -> str:
    factors = []
    for p, e in s.exceptions:
        factors.append(str(p) if e == 1 else f"{p}^{format_exponent(e)}")
    body = "*".join(factors)
    if s.default is INF:
        return f"{body};default=inf"
    return body or "1"


class _Scanner:
    """Tiny cursor over a literal with position-aware errors"""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_spaces()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, token: str) -> bool:
        self.skip_spaces()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            raise ParseError("unexpected input", self.text, self.pos, repr(token))

    def integer(self, expected: str = "integer") -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
            self.pos += 1
        if start == self.pos:
            raise ParseError("unexpected input", self.text, start, expected)
        return int(self.text[start:self.pos])


def parse_supernatural(text: str) -> SupernaturalNumber:
    """
    Parse ``FACTORS[;default=0|inf]``

    Bases may be any positive integer; composite bases are factored, so
    ``12`` reads as ``2^2*3`` and ``6^inf`` as ``2^inf*3^inf``.
    """
    scanner = _Scanner(text)
    exponents: Dict[int, Exponent] = {}

    def add_factor(base: int, exp: Exponent, at: int):
        if base == 0:
            raise ParseError("base must be positive", text, at, "positive integer")
        # p^0 still records p: it matters against default=inf
        for p, e in factor_natural(base):
            scaled = INF if exp is INF else e * exp
            exponents[p] = add_exponents(exponents.get(p, 0), scaled)

    if scanner.peek() not in ("", ";"):
        while True:
            at = scanner.pos
            base = scanner.integer("prime base")
            exp: Exponent = 1
            if scanner.accept("^"):
                if scanner.accept("inf") or scanner.accept("∞"):
                    exp = INF
                else:
                    exp = scanner.integer("exponent or 'inf'")
            add_factor(base, exp, at)
            if not scanner.accept("*"):
                break

    default: Exponent = 0
    if scanner.accept(";"):
        scanner.expect("default")
        scanner.expect("=")
        if scanner.accept("inf") or scanner.accept("∞"):
            default = INF
        elif scanner.accept("0"):
            default = 0
        else:
            raise ParseError("bad default", text, scanner.pos, "'0' or 'inf'")
    if not scanner.at_end():
        raise ParseError("trailing input", text, scanner.pos, "'*', ';' or end of literal")
    return SupernaturalNumber(tuple(exponents.items()), default)


def parse_natural(text: str) -> int:
    """Parse a natural number given as integer or finite literal (``2^3*3``)"""
    value = parse_supernatural(text)
    if not value.is_natural():
        raise ParseError("expected a natural number", text, 0, "finite literal")
    return value.to_natural()
