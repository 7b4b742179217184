"""
Patch grammar - 𝕊의 패치(patch)를 나타내는 유한 표현식

Leaves denote quasi-compact opens, closed sets or the named patches of the
spectral space of supernatural numbers; Union and Intersection combine them.
Every expression denotes a patch and membership is decidable.
"""

import logging
from dataclasses import dataclass
from typing import ClassVar, Iterable, Iterator, Set, Tuple

from src.core.errors import DomainError
from src.core.supernat import (
    SupernaturalLike,
    SupernaturalNumber,
    as_supernatural,
    factor_natural,
    natural_divides,
    require_natural,
)

logger = logging.getLogger(__name__)


class PatchExpr:
    """Base class of the patch grammar"""

    TAG: ClassVar[str] = ""

    def contains(self, s: SupernaturalNumber) -> bool:
        raise NotImplementedError

    def children(self) -> Tuple["PatchExpr", ...]:
        return ()

    def walk(self) -> Iterator["PatchExpr"]:
        yield self
        for child in self.children():
            yield from child.walk()

    def __str__(self) -> str:
        from src.spectral.patch_io import format_patch

        return format_patch(self)


# =============================================================================
# LEAVES
# =============================================================================


@dataclass(frozen=True)
class FgOpen(PatchExpr):
    """Finitely generated open (g_1, ..., g_k) = { s : some g_i | s }"""

    generators: Tuple[int, ...]
    TAG: ClassVar[str] = "fgopen"

    def __post_init__(self):
        object.__setattr__(
            self, "generators", tuple(require_natural(g, "generator") for g in self.generators)
        )

    def contains(self, s: SupernaturalNumber) -> bool:
        return any(natural_divides(g, s) for g in self.generators)


@dataclass(frozen=True)
class DivisorClosure(PatchExpr):
    """closure{t} = { s : s | t }"""

    bound: SupernaturalNumber
    TAG: ClassVar[str] = "divclosure"

    def __post_init__(self):
        object.__setattr__(self, "bound", as_supernatural(self.bound))

    def contains(self, s: SupernaturalNumber) -> bool:
        return s.divides(self.bound)


@dataclass(frozen=True)
class MultiplesOf(PatchExpr):
    """{ s : t | s }"""

    base: SupernaturalNumber
    TAG: ClassVar[str] = "multiples"

    def __post_init__(self):
        object.__setattr__(self, "base", as_supernatural(self.base))

    def contains(self, s: SupernaturalNumber) -> bool:
        return self.base.divides(s)


@dataclass(frozen=True)
class NotAbove(PatchExpr):
    """{ s : n ∤ s }, the complement of the principal open (n)"""

    n: int
    TAG: ClassVar[str] = "notabove"

    def __post_init__(self):
        require_natural(self.n)

    def contains(self, s: SupernaturalNumber) -> bool:
        return not natural_divides(self.n, s)


@dataclass(frozen=True)
class PowerSetPrimes(PatchExpr):
    """2^𝒫 = { s_Σ : Σ ⊆ 𝒫 }, the completely infinite supernaturals"""

    TAG: ClassVar[str] = "powersetprimes"

    def contains(self, s: SupernaturalNumber) -> bool:
        return s.is_completely_infinite()


@dataclass(frozen=True)
class SpecZ(PatchExpr):
    """{ s_p : p prime } ∪ { ∏_p p^∞ }, homeomorphic to spec(ℤ)"""

    TAG: ClassVar[str] = "specz"

    def contains(self, s: SupernaturalNumber) -> bool:
        if s.default != 0 and len(s.exceptions) <= 1:
            return all(e == 0 for _, e in s.exceptions)
        return False


@dataclass(frozen=True)
class Full(PatchExpr):
    TAG: ClassVar[str] = "full"

    def contains(self, s: SupernaturalNumber) -> bool:
        return True


@dataclass(frozen=True)
class Empty(PatchExpr):
    TAG: ClassVar[str] = "empty"

    def contains(self, s: SupernaturalNumber) -> bool:
        return False


# =============================================================================
# NODES
# =============================================================================


@dataclass(frozen=True)
class Union(PatchExpr):
    members: Tuple[PatchExpr, ...]
    TAG: ClassVar[str] = "union"

    def __post_init__(self):
        object.__setattr__(self, "members", _check_children(self.members))

    def children(self) -> Tuple[PatchExpr, ...]:
        return self.members

    def contains(self, s: SupernaturalNumber) -> bool:
        return any(child.contains(s) for child in self.members)


@dataclass(frozen=True)
class Intersection(PatchExpr):
    members: Tuple[PatchExpr, ...]
    TAG: ClassVar[str] = "intersection"

    def __post_init__(self):
        object.__setattr__(self, "members", _check_children(self.members))

    def children(self) -> Tuple[PatchExpr, ...]:
        return self.members

    def contains(self, s: SupernaturalNumber) -> bool:
        return all(child.contains(s) for child in self.members)


def _check_children(members: Iterable[PatchExpr]) -> Tuple[PatchExpr, ...]:
    members = tuple(members)
    for child in members:
        if not isinstance(child, PatchExpr):
            raise DomainError(f"not a patch expression: {child!r}")
    return members


LEAF_TYPES = (FgOpen, DivisorClosure, MultiplesOf, NotAbove, PowerSetPrimes, SpecZ, Full, Empty)
NODE_TYPES = (Union, Intersection)


# =============================================================================
# OPERATIONS
# =============================================================================


def member(s: SupernaturalLike, S: PatchExpr) -> bool:
    """Decide s ∈ S"""
    return S.contains(as_supernatural(s))


def relevant_primes(S: PatchExpr) -> Set[int]:
    """Primes mentioned by any leaf parameter"""
    primes: Set[int] = set()
    for node in S.walk():
        if isinstance(node, FgOpen):
            for g in node.generators:
                primes.update(p for p, _ in factor_natural(g))
        elif isinstance(node, DivisorClosure):
            primes.update(node.bound.primes())
        elif isinstance(node, MultiplesOf):
            primes.update(node.base.primes())
        elif isinstance(node, NotAbove):
            primes.update(p for p, _ in factor_natural(node.n))
    return primes


def max_exponent(S: PatchExpr) -> int:
    """Largest finite exponent mentioned by any leaf parameter"""
    best = 0
    for node in S.walk():
        if isinstance(node, FgOpen):
            for g in node.generators:
                best = max([best] + [e for _, e in factor_natural(g)])
        elif isinstance(node, DivisorClosure):
            best = max(best, node.bound.max_finite_exponent())
        elif isinstance(node, MultiplesOf):
            best = max(best, node.base.max_finite_exponent())
        elif isinstance(node, NotAbove):
            best = max([best] + [e for _, e in factor_natural(node.n)])
    return best


def singleton(s: SupernaturalLike) -> PatchExpr:
    """{s} = closure{s} ∩ multiples(s)"""
    s = as_supernatural(s)
    return Intersection((DivisorClosure(s), MultiplesOf(s)))


def finite_set(values: Iterable[SupernaturalLike]) -> PatchExpr:
    """A finite set is a patch (and its own pcfb-closure)"""
    return Union(tuple(singleton(v) for v in values))


def completely_infinite_part(S: PatchExpr) -> PatchExpr:
    """The completely infinite elements of S, again a patch"""
    return Intersection((S, PowerSetPrimes()))
