"""
Sieves on objects of the big cell

A finitely generated sieve {m_i → n} is identified with the open ideal
(m_1, ..., m_k) restricted to multiples of n. Text form: ``base:n gens:m1,m2``
(``gens:`` with nothing after it is the empty sieve).
"""

import logging
import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Tuple

from src.core.errors import DomainError, ParseError
from src.core.supernat import SupernaturalNumber, natural_divides, require_natural

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sieve:
    """
    Finitely generated sieve on n

    Attributes:
        base: the object n
        generators: multiples of n, in the order given (finite_subcover relies on it)
    """

    base: int
    generators: Tuple[int, ...] = ()

    def __post_init__(self):
        require_natural(self.base, "base")
        gens = tuple(require_natural(g, "generator") for g in self.generators)
        for g in gens:
            if g % self.base:
                raise DomainError(f"generator {g} is not a multiple of base {self.base}")
        object.__setattr__(self, "generators", gens)

    def contains(self, k: int) -> bool:
        """Does the morphism k → n belong to the sieve"""
        require_natural(k, "k")
        return k % self.base == 0 and any(k % g == 0 for g in self.generators)

    def covers_point(self, s: SupernaturalNumber) -> bool:
        """Some generator divides s"""
        return any(natural_divides(g, s) for g in self.generators)

    def is_empty(self) -> bool:
        return not self.generators

    def is_maximal(self) -> bool:
        return self.base in self.generators

    def with_generators(self, generators: Iterable[int]) -> "Sieve":
        return Sieve(self.base, tuple(generators))

    def __str__(self) -> str:
        return format_sieve(self)


def maximal_sieve(n: int) -> Sieve:
    return Sieve(n, (n,))


def empty_sieve(n: int) -> Sieve:
    return Sieve(n, ())


def pullback(L: Sieve, m: int) -> Sieve:
    """
    Pull L back along m → n: the sieve (m) ∩ L on m

    Raises:
        DomainError: m is not a multiple of L.base
    """
    require_natural(m, "m")
    if m % L.base:
        raise DomainError(f"cannot pull back along {m}: not a multiple of {L.base}")
    seen = []
    for g in L.generators:
        k = lcm(m, g)
        if k not in seen:
            seen.append(k)
    return Sieve(m, tuple(seen))


# =============================================================================
# TEXT FORM
# =============================================================================

_SIEVE_PATTERN = re.compile(r"^\s*base\s*:\s*(\d+)\s+gens\s*:\s*([\d,\s]*)$", re.ASCII)


def parse_sieve(text: str) -> Sieve:
    match = _SIEVE_PATTERN.match(text)
    if not match:
        raise ParseError("malformed sieve", text, 0, "'base:n gens:m1,m2,...'")
    base = int(match.group(1))
    raw = match.group(2)
    gens = []
    offset = match.start(2)
    for piece in raw.split(","):
        if piece.strip().isascii() and piece.strip().isdigit():
            gens.append(int(piece))
        elif piece.strip() or raw.strip():
            raise ParseError("bad generator", text, offset, "positive integer")
        offset += len(piece) + 1
    if base < 1 or any(g < 1 for g in gens):
        raise ParseError("zero is not a natural number", text, match.start(1), "positive integer")
    return Sieve(base, tuple(gens))


def format_sieve(L: Sieve) -> str:
    return f"base:{L.base} gens:" + ",".join(str(g) for g in L.generators)
