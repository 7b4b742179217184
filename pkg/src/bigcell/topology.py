"""
K_S 위상 - the Grothendieck topologies K_S on the big cell

A sieve L on n is K_S-covering iff it contains (n) ∩ S. For a patch S this
is decided by the trace solver; the same solver drives finite-subcover
extraction, point certification and the Zariski-trivializing criterion.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import product
from math import lcm
from typing import Iterable, List, Optional, Sequence, Tuple

from config.settings import settings
from src.core.errors import DomainError, PreconditionError, SolverLimitError, VerificationError
from src.core.supernat import (
    INF,
    SupernaturalLike,
    SupernaturalNumber,
    as_supernatural,
    factor_natural,
    natural_divides,
    prime_outside,
    require_natural,
)
from src.spectral.patch import (
    DivisorClosure,
    FgOpen,
    Intersection,
    NotAbove,
    PatchExpr,
    max_exponent,
    member,
    relevant_primes,
)
from src.spectral.pcfb import GeometricTail, SequenceSpec, pcfb_limit
from src.spectral.solver import find_member, trace_nonempty_witness
from src.bigcell.sieve import Sieve

logger = logging.getLogger(__name__)


# =============================================================================
# COVERS
# =============================================================================


def is_cover(L: Sieve, S: PatchExpr) -> bool:
    """L covers n in K_S iff (n) ∩ S minus the generated opens is empty"""
    return trace_nonempty_witness(L.base, S, L.generators) is None


def cover_witness(L: Sieve, S: PatchExpr) -> Optional[SupernaturalNumber]:
    """An element of (n) ∩ S that L misses, or None when L covers"""
    return trace_nonempty_witness(L.base, S, L.generators)


def finite_subcover(L: Sieve, S: PatchExpr) -> List[int]:
    """
    Irredundant covering subfamily of L.generators

    Generators are tried for removal from the last to the first; a
    generator stays only if dropping it breaks the cover.

    Raises:
        PreconditionError: L does not cover
    """
    if not is_cover(L, S):
        raise PreconditionError(f"sieve {L} does not cover in K_S")
    kept = list(L.generators)
    for index in reversed(range(len(kept))):
        trial = kept[:index] + kept[index + 1:]
        if is_cover(Sieve(L.base, tuple(trial)), S):
            logger.debug(f"dropped generator {kept[index]}")
            kept = trial
    return kept


def sigma_cover_law(n: int, m: int, sigma: Iterable[int]) -> bool:
    """{m} covers n for S = multiples of s_Σ iff m/n has all prime divisors in Σ"""
    require_natural(n)
    require_natural(m, "m")
    if m % n:
        raise DomainError(f"{m} is not a multiple of {n}")
    allowed = set(sigma)
    return all(p in allowed for p, _ in factor_natural(m // n))


# =============================================================================
# POINTS
# =============================================================================


class CertificateKind(Enum):
    MEMBER = "member"
    NON_POINT = "nonpoint"


@dataclass(frozen=True)
class PointCertificate:
    """
    Member, or NonPoint(n, family): n | s, the family covers n in K_S and
    no family member divides s
    """

    kind: CertificateKind
    n: Optional[int] = None
    family: Tuple[int, ...] = ()

    @classmethod
    def member(cls) -> "PointCertificate":
        return cls(CertificateKind.MEMBER)

    @classmethod
    def non_point(cls, n: int, family: Sequence[int]) -> "PointCertificate":
        return cls(CertificateKind.NON_POINT, n, tuple(family))

    @property
    def is_member(self) -> bool:
        return self.kind is CertificateKind.MEMBER


def _divisors_by_size(s: SupernaturalNumber, primes: Iterable[int], cap: int) -> List[int]:
    """Natural divisors of s over the given primes, exponents at most cap, ascending"""
    primes = sorted(set(primes))
    ranges = []
    for p in primes:
        e = s.exponent(p)
        top = cap if e is INF else min(e, cap)
        ranges.append([p**k for k in range(top + 1)])
    values = set()
    for powers in product(*ranges):
        value = 1
        for power in powers:
            value *= power
        values.add(value)
    return sorted(values)


def _separating_neighbourhood(s: SupernaturalNumber, S: PatchExpr) -> int:
    """Least n | s with (n) ∩ closure{s} ∩ S empty"""
    restricted = Intersection((S, DivisorClosure(s)))
    primes = set(relevant_primes(S)) | set(s.primes())
    primes.add(prime_outside(primes))
    cap = max_exponent(S) + 1
    for n in _divisors_by_size(s, primes, cap):
        if trace_nonempty_witness(n, restricted) is None:
            return n
    raise VerificationError(f"no separating neighbourhood found for {s}")


def _escape_power(witness: SupernaturalNumber, s: SupernaturalNumber) -> int:
    """Least p^(v_p(s)+1) over the primes where the witness exceeds s"""
    candidates = set(witness.primes()) | set(s.primes())
    candidates.add(prime_outside(candidates))
    powers = []
    for p in candidates:
        e = s.exponent(p)
        if witness.exponent(p) > e:
            powers.append(p ** (e + 1))
    if not powers:
        raise VerificationError(f"witness {witness} divides {s}")
    return min(powers)


def point_certificate(s: SupernaturalLike, S: PatchExpr) -> PointCertificate:
    """
    Decide whether s is a point of the topos of K_S-sheaves (iff s ∈ S)

    For s ∉ S, exhibit n | s with (n) ∩ closure{s} ∩ S = ∅ and a family of
    multiples of n covering n in K_S, none of which divides s.

    Raises:
        SolverLimitError: the family loop ran past POINT_ITERATION_CAP
    """
    s = as_supernatural(s)
    if member(s, S):
        return PointCertificate.member()

    n = _separating_neighbourhood(s, S)
    family: List[int] = []
    for _ in range(settings.POINT_ITERATION_CAP):
        witness = trace_nonempty_witness(n, S, family)
        if witness is None:
            logger.debug(f"non-point {s}: n={n}, family={family}")
            return PointCertificate.non_point(n, family)
        family.append(lcm(n, _escape_power(witness, s)))
    raise SolverLimitError(
        f"point certificate for {s} did not close after {settings.POINT_ITERATION_CAP} steps"
    )


def verify_certificate(s: SupernaturalLike, S: PatchExpr, certificate: PointCertificate) -> bool:
    s = as_supernatural(s)
    if certificate.is_member:
        return member(s, S)
    n = certificate.n
    if n is None or not natural_divides(n, s):
        return False
    if any(natural_divides(m, s) for m in certificate.family):
        return False
    try:
        sieve = Sieve(n, certificate.family)
    except DomainError:
        return False
    separated = trace_nonempty_witness(n, Intersection((S, DivisorClosure(s)))) is None
    return separated and is_cover(sieve, S)


# =============================================================================
# TRIVIALIZING CRITERION
# =============================================================================


def is_trivializing_zariski(S: PatchExpr) -> bool:
    """
    K_S is Zariski-trivializing iff S holds only completely infinite values

    A member with a finite nonzero exponent at p can be moved to exponent at
    most E+1 there (E the largest mentioned exponent), so one bounded query
    per relevant prime, plus one fresh prime for the rest, decides it.
    """
    primes = set(relevant_primes(S))
    primes.add(prime_outside(primes))
    bound = max(max_exponent(S), 1) + 2
    for p in sorted(primes):
        query = Intersection((S, FgOpen((p,)), NotAbove(p**bound)))
        witness = find_member(query)
        if witness is not None:
            logger.debug(f"member {witness} has finite nonzero exponent at {p}")
            return False
    return True


# =============================================================================
# TOWERS
# =============================================================================


def tower_supernatural(chain: Sequence[int], ratio: Optional[int] = None) -> SupernaturalNumber:
    """
    Supernatural number of the tower n_1 | n_2 | ...

    Args:
        chain: finite prefix of the tower
        ratio: when given, the tower continues as chain[-1]·ratio^j

    Raises:
        DomainError: empty chain or consecutive entries that do not divide
        NonConvergentError: the supremum fails the pcfb conditions
    """
    chain = [require_natural(n, "chain entry") for n in chain]
    if not chain:
        raise DomainError("tower chain is empty")
    for a, b in zip(chain, chain[1:]):
        if b % a:
            raise DomainError(f"not a divisibility chain: {a} does not divide {b}")
    tail = GeometricTail(chain[-1], ratio) if ratio is not None else None
    return pcfb_limit(SequenceSpec(tuple(chain), tail))
