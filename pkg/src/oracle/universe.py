"""
Brute-force oracle - 유한 우주(bounded universe) 전수 검사

The bounded universe holds every supernatural number with support in a fixed
prime list and exponents in {0, ..., E, ∞}. Every solver answer whose
relevant primes lie in the list can be checked against an exhaustive scan.

A widened universe also reaches default ∞: it adds the least prime outside
the list as a stand-in for all other primes, and takes every exponent vector
over the list plus the stand-in with default 0 and with default ∞. SpecZ and
parameters with default ∞ are then checked faithfully as well.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from config.settings import settings
from src.core.errors import DomainError, SolverLimitError
from src.core.supernat import (
    INF,
    Exponent,
    SupernaturalNumber,
    natural_divides,
    prime_outside,
    require_natural,
    require_prime,
)
from src.spectral.patch import PatchExpr

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundedUniverse:
    primes: Tuple[int, ...]
    max_exp: int
    widened: bool = False

    def __post_init__(self):
        primes = tuple(sorted(require_prime(p) for p in self.primes))
        if len(set(primes)) != len(primes):
            raise DomainError(f"universe primes must be distinct, got {primes}")
        if isinstance(self.max_exp, bool) or not isinstance(self.max_exp, int) or self.max_exp < 0:
            raise DomainError(f"max_exp must be a nonnegative integer, got {self.max_exp!r}")
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "widened", bool(self.widened))

    @property
    def stand_in(self) -> Optional[int]:
        """Representative of the primes outside the list (widened universes only)"""
        return prime_outside(self.primes) if self.widened else None

    @property
    def support(self) -> Tuple[int, ...]:
        return self.primes + (self.stand_in,) if self.widened else self.primes

    @property
    def defaults(self) -> Tuple[Exponent, ...]:
        return (0, INF) if self.widened else (0,)

    @property
    def size(self) -> int:
        return (self.max_exp + 2) ** len(self.support) * len(self.defaults)

    def exponent_values(self) -> List[Exponent]:
        return list(range(self.max_exp + 1)) + [INF]

    def naturals(self) -> List[int]:
        """Naturals with support in the prime list, ascending"""
        out = [1]
        for p in self.primes:
            out = [n * p**e for n in out for e in range(self.max_exp + 1)]
        return sorted(out)

    def parameters(self) -> List[SupernaturalNumber]:
        """Members fit to serve as leaf parameters: the stand-in prime follows the default"""
        if not self.widened:
            return enumerate_universe(self)
        q = self.stand_in
        return [s for s in enumerate_universe(self) if s.exponent(q) == s.default]

    def __str__(self) -> str:
        text = ",".join(str(p) for p in self.primes) + f":{self.max_exp}"
        return text + "+" if self.widened else text


# =============================================================================
# ENUMERATION
# =============================================================================


def _block(
    primes: Tuple[int, ...], values: Tuple[Exponent, ...], head: Exponent, default: Exponent
) -> List[SupernaturalNumber]:
    rest = primes[1:]
    out = []
    for tail in product(values, repeat=len(rest)):
        out.append(SupernaturalNumber(((primes[0], head),) + tuple(zip(rest, tail)), default))
    return out


@lru_cache(maxsize=32)
def _enumerate(
    primes: Tuple[int, ...], max_exp: int, defaults: Tuple[Exponent, ...], workers: int
) -> Tuple[SupernaturalNumber, ...]:
    values = tuple(list(range(max_exp + 1)) + [INF])
    if not primes:
        return tuple(SupernaturalNumber((), d) for d in defaults)
    # one block per (default, exponent of the first prime), merged in order
    heads = [(d, head) for d in defaults for head in values]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        blocks = list(executor.map(lambda dh: _block(primes, values, dh[1], dh[0]), heads))
    return tuple(s for block in blocks for s in block)


def enumerate_universe(U: BoundedUniverse, cap: Optional[int] = None) -> List[SupernaturalNumber]:
    """
    Every element of U, lexicographic in the exponent tuples (0 < 1 < ... < E < ∞);
    in a widened universe the default-0 block comes first

    Raises:
        SolverLimitError: the element count exceeds the cap
    """
    cap = cap if cap is not None else settings.MAX_UNIVERSE_SIZE
    if U.size > cap:
        raise SolverLimitError(f"universe {U} has {U.size} elements, cap is {cap}")
    return list(_enumerate(U.support, U.max_exp, U.defaults, max(1, settings.MAX_WORKERS)))


def universe_from_settings(
    primes: Optional[Sequence[int]] = None,
    max_exp: Optional[int] = None,
    widened: Optional[bool] = None,
) -> BoundedUniverse:
    """Explicit arguments (CLI flags) win over BIGCELL_UNIVERSE, which wins over the settings fields"""
    default_primes, default_exp = settings.universe_spec()
    return BoundedUniverse(
        tuple(primes if primes is not None else default_primes),
        max_exp if max_exp is not None else default_exp,
        settings.UNIVERSE_WIDENED if widened is None else widened,
    )


# =============================================================================
# PREDICATE SETS
# =============================================================================


@dataclass(frozen=True)
class PredicateSet:
    """Arbitrary decidable subset of 𝕊 (not serializable)"""

    membership: Callable[[SupernaturalNumber], bool]
    name: str = "predicate"

    def contains(self, s: SupernaturalNumber) -> bool:
        return bool(self.membership(s))

    @classmethod
    def of_patch(cls, S: PatchExpr) -> "PredicateSet":
        return cls(S.contains, str(S))

    @classmethod
    def everything_but_one(cls) -> "PredicateSet":
        """𝕊 ∖ {1}"""
        one = SupernaturalNumber.one()
        return cls(lambda s: s != one, "S-minus-1")

    @classmethod
    def empty(cls) -> "PredicateSet":
        return cls(lambda s: False, "empty")


SetLike = Union[PredicateSet, PatchExpr]


def _as_predicate(S: SetLike) -> PredicateSet:
    return S if isinstance(S, PredicateSet) else PredicateSet.of_patch(S)


# =============================================================================
# NAIVE OPERATIONS
# =============================================================================


def naive_members(S: SetLike, U: BoundedUniverse) -> List[SupernaturalNumber]:
    S = _as_predicate(S)
    return [s for s in enumerate_universe(U) if S.contains(s)]


def naive_trace_witness(
    n: int, S: SetLike, excluded: Iterable[int], U: BoundedUniverse
) -> Optional[SupernaturalNumber]:
    """First s in U with n | s, s ∈ S and no excluded m dividing s"""
    require_natural(n)
    S = _as_predicate(S)
    excluded = list(excluded)
    for s in enumerate_universe(U):
        if natural_divides(n, s) and S.contains(s) and not any(natural_divides(m, s) for m in excluded):
            return s
    return None


def naive_cover(n: int, gens: Iterable[int], S: SetLike, U: BoundedUniverse) -> bool:
    """Every s in U with n | s and s ∈ S is divisible by some generator"""
    return naive_trace_witness(n, S, gens, U) is None


def naive_is_empty(S: SetLike, U: BoundedUniverse) -> bool:
    return naive_trace_witness(1, S, (), U) is None
