"""
pcfb structure on 𝕊 (primewise convergence from below)

Basic sets (n) ∩ closure{s}, pcfb-limits of sequences given by a finite
prefix and an optional geometric tail, cofinal chains and pcfb-closures of the
representable inputs.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import factorint, prime

from src.core.errors import DomainError, NonConvergentError, UnrepresentableError
from src.core.supernat import (
    INF,
    SupernaturalLike,
    SupernaturalNumber,
    as_supernatural,
    factor_natural,
    natural_divides,
    natural_valuation,
    require_natural,
)
from src.spectral.patch import PatchExpr, finite_set

logger = logging.getLogger(__name__)


# =============================================================================
# BASIC SETS
# =============================================================================


@dataclass(frozen=True)
class PcfbBasic:
    """(n) ∩ closure{s} with n | s"""

    n: int
    s: SupernaturalNumber

    def __post_init__(self):
        require_natural(self.n)
        object.__setattr__(self, "s", as_supernatural(self.s))
        if not natural_divides(self.n, self.s):
            raise DomainError(f"{self.n} does not divide {self.s}")

    def contains(self, x: SupernaturalNumber) -> bool:
        return natural_divides(self.n, x) and x.divides(self.s)


def basic_intersect(a: PcfbBasic, b: PcfbBasic) -> Optional[PcfbBasic]:
    """(lcm(n,n')) ∩ closure{gcd(s,s')}, or None when empty"""
    n = SupernaturalNumber.from_natural(a.n).lcm(SupernaturalNumber.from_natural(b.n))
    s = a.s.gcd(b.s)
    if not n.divides(s):
        return None
    return PcfbBasic(n.to_natural(), s)


# =============================================================================
# SEQUENCES AND LIMITS
# =============================================================================


@dataclass(frozen=True)
class GeometricTail:
    """Terms base·ratio^j for j ≥ 0"""

    base: int
    ratio: int

    def __post_init__(self):
        require_natural(self.base, "base")
        require_natural(self.ratio, "ratio")
        if self.ratio < 2:
            raise DomainError(f"ratio must be at least 2, got {self.ratio}")

    def term(self, j: int) -> int:
        return self.base * self.ratio**j

    def ratio_primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in factor_natural(self.ratio))

    def contains(self, value: int) -> bool:
        if value % self.base:
            return False
        quotient = value // self.base
        while quotient % self.ratio == 0:
            quotient //= self.ratio
        return quotient == 1


@dataclass(frozen=True)
class SequenceSpec:
    """
    Explicit prefix plus optional geometric tail.

    Without a tail the sequence repeats its last prefix term forever.
    """

    prefix: Tuple[int, ...] = ()
    tail: Optional[GeometricTail] = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(require_natural(t, "term") for t in self.prefix))
        if not self.prefix and self.tail is None:
            raise DomainError("a sequence needs at least one term")

    def terms(self, count: int) -> List[int]:
        """The first count terms"""
        out = list(self.prefix[:count])
        j = 0
        while len(out) < count:
            out.append(self.tail.term(j) if self.tail else self.prefix[-1])
            j += 1
        return out


def _supremum(seq: SequenceSpec) -> SupernaturalNumber:
    sup = SupernaturalNumber.one()
    for term in seq.prefix:
        sup = sup.lcm(SupernaturalNumber.from_natural(term))
    if seq.tail is not None:
        sup = sup.lcm(SupernaturalNumber.from_natural(seq.tail.base))
        sup = sup.lcm(SupernaturalNumber.s_sigma(seq.tail.ratio_primes()))
    return sup


def is_pcfb_limit(seq: SequenceSpec, s: SupernaturalNumber) -> bool:
    """
    Check both convergence conditions for s

    1. every term divides s
    2. every natural n | s divides some term
    """
    if not all(natural_divides(t, s) for t in seq.prefix):
        return False
    if seq.tail is None:
        # condition 2 with n = s forces s to be one of the terms
        return s.is_natural() and s.to_natural() in seq.prefix

    tail = seq.tail
    ratio_primes = set(tail.ratio_primes())
    if not natural_divides(tail.base, s):
        return False
    if any(s.exponent(p) is not INF for p in ratio_primes):
        return False
    if s.default is INF:
        return False
    for p, e in s.exceptions:
        if p in ratio_primes:
            continue
        # p^e times a high power of the ratio primes must divide a tail term
        if e is INF or e > natural_valuation(tail.base, p):
            return False
    return True


def pcfb_limit(seq: SequenceSpec) -> SupernaturalNumber:
    """
    The pcfb-limit of a sequence

    Raises:
        NonConvergentError: when the per-prime supremum fails condition 2
    """
    limit = _supremum(seq)
    if not is_pcfb_limit(seq, limit):
        raise NonConvergentError(f"sequence {seq} does not pcfb-converge (supremum {limit})")
    return limit


# =============================================================================
# COFINAL CHAINS
# =============================================================================


def cofinal_chain(s: SupernaturalLike, k: int) -> List[int]:
    """
    n_1 | n_2 | ... | n_k with n_j = ∏_{i≤j} p_i^{min(v_{p_i}(s), j)}

    p_i is the i-th prime; the full chain pcfb-converges to s.
    """
    s = as_supernatural(s)
    require_natural(k, "k")
    chain = []
    for j in range(1, k + 1):
        n = 1
        for i in range(1, j + 1):
            p = int(prime(i))
            e = s.exponent(p)
            n *= p ** (j if e is INF else min(e, j))
        chain.append(n)
    return chain


def cofinal_sequence(s: SupernaturalLike, k: int) -> SequenceSpec:
    """
    cofinal_chain(s, k) closed off by the canonical tail

    The last prefix term carries the full finite part of s and every infinite
    prime; the tail multiplies by the product of the infinite primes.
    """
    s = as_supernatural(s)
    if s.default is INF:
        raise UnrepresentableError(f"{s} has infinite support; no geometric tail reaches it")
    chain = cofinal_chain(s, k)
    infinite = s.infinite_primes()
    ratio = 1
    for p in infinite:
        ratio *= p
    closing = SupernaturalNumber.from_natural(chain[-1]).lcm(
        SupernaturalNumber.from_natural(s.finite_part() * ratio)
    ).to_natural()
    prefix = chain if closing == chain[-1] else chain + [closing]
    tail = GeometricTail(closing, ratio) if infinite else None
    return SequenceSpec(tuple(prefix), tail)


def field_tower(q: int, s: SupernaturalLike, k: int) -> List[int]:
    """Orders q^{n_j} of the finite fields 𝔽_{q^{n_j}} along the cofinal chain of s"""
    require_natural(q, "q")
    if len(factorint(q)) != 1:
        raise DomainError(f"q must be a prime power, got {q}")
    return [q**n for n in cofinal_chain(s, k)]


# =============================================================================
# CLOSURES
# =============================================================================


@dataclass(frozen=True)
class ClosureSet:
    """pcfb-closure of the term set of a SequenceSpec"""

    finite: Tuple[int, ...]
    family: Optional[GeometricTail] = None
    limit: Optional[SupernaturalNumber] = None

    def contains(self, s: SupernaturalLike) -> bool:
        s = as_supernatural(s)
        if self.limit is not None and s == self.limit:
            return True
        if not s.is_natural():
            return False
        value = s.to_natural()
        if value in self.finite:
            return True
        return self.family is not None and self.family.contains(value)

    def as_patch(self) -> PatchExpr:
        if self.family is not None:
            raise UnrepresentableError("an infinite geometric family is not a finite patch expression")
        return finite_set(self.finite)


def pcfb_closure(seq: SequenceSpec) -> ClosureSet:
    """
    Close the terms of seq under pcfb-limits

    A finite set is already closed; a geometric family b·m^j gains the single
    point b·m^∞ (the exponents of the primes of m raised to ∞).
    """
    finite = tuple(sorted(set(seq.prefix)))
    if seq.tail is None:
        return ClosureSet(finite)
    tail = seq.tail
    limit = SupernaturalNumber.from_natural(tail.base).lcm(
        SupernaturalNumber.s_sigma(tail.ratio_primes())
    )
    return ClosureSet(finite, tail, limit)
