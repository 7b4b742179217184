"""
Trace-emptiness solver for patch expressions

A query "is there s with n | s, s ∈ S and m ∤ s for all excluded m" is
rewritten to disjunctive normal form. Each disjunct is a conjunction of
per-prime exponent intervals: explicit intervals for the primes some leaf
mentions, one shared interval for every other prime, and two global flags
(completely infinite, spec(ℤ)-shaped). All bounds are mentioned exponents, 0
or ∞, so a disjunct is satisfiable iff it has a solution using only those
values; the witness is assembled from interval endpoints.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence

from config.settings import settings
from src.core.errors import PreconditionError, SolverLimitError, VerificationError
from src.core.supernat import (
    INF,
    Exponent,
    SupernaturalNumber,
    factor_natural,
    natural_divides,
    require_natural,
)
from src.spectral.patch import (
    DivisorClosure,
    Empty,
    FgOpen,
    Full,
    Intersection,
    MultiplesOf,
    NotAbove,
    PatchExpr,
    PowerSetPrimes,
    SpecZ,
    Union,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval:
    """lo ≤ v ≤ hi over ℕ ∪ {∞}"""

    lo: Exponent = 0
    hi: Exponent = INF

    def meet(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def is_empty(self) -> bool:
        return self.lo > self.hi

    def contains(self, value: Exponent) -> bool:
        return self.lo <= value <= self.hi


UNBOUNDED = Interval()


@dataclass(frozen=True)
class Conjunct:
    """One disjunct of the normal form"""

    bounds: Dict[int, Interval] = field(default_factory=dict)
    rest: Interval = UNBOUNDED
    completely_infinite: bool = False
    spec_z: bool = False

    def bound(self, p: int) -> Interval:
        return self.bounds.get(p, self.rest)

    def meet(self, other: "Conjunct") -> Optional["Conjunct"]:
        """Conjunction of two disjuncts; None when an interval empties"""
        rest = self.rest.meet(other.rest)
        if rest.is_empty():
            return None
        bounds: Dict[int, Interval] = {}
        for p in set(self.bounds) | set(other.bounds):
            interval = self.bound(p).meet(other.bound(p))
            if interval.is_empty():
                return None
            bounds[p] = interval
        return Conjunct(
            bounds,
            rest,
            self.completely_infinite or other.completely_infinite,
            self.spec_z or other.spec_z,
        )


TOP = Conjunct()


class _Budget:
    """Counts generated disjuncts against MAX_DISJUNCTS"""

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int = 1):
        self.used += amount
        if self.used > self.limit:
            raise SolverLimitError(f"disjunct budget of {self.limit} exceeded")


# =============================================================================
# NORMAL FORM
# =============================================================================


def _leaf_conjuncts(expr: PatchExpr) -> List[Conjunct]:
    if isinstance(expr, FgOpen):
        return [
            Conjunct({p: Interval(e, INF) for p, e in factor_natural(g)})
            for g in expr.generators
        ]
    if isinstance(expr, DivisorClosure):
        t = expr.bound
        return [Conjunct({p: Interval(0, e) for p, e in t.exceptions}, Interval(0, t.default))]
    if isinstance(expr, MultiplesOf):
        t = expr.base
        return [Conjunct({p: Interval(e, INF) for p, e in t.exceptions}, Interval(t.default, INF))]
    if isinstance(expr, NotAbove):
        return [Conjunct({p: Interval(0, e - 1)}) for p, e in factor_natural(expr.n)]
    if isinstance(expr, PowerSetPrimes):
        return [Conjunct(completely_infinite=True)]
    if isinstance(expr, SpecZ):
        return [Conjunct(spec_z=True)]
    if isinstance(expr, Full):
        return [TOP]
    if isinstance(expr, Empty):
        return []
    raise TypeError(f"unknown patch node {type(expr).__name__}")


def iter_conjuncts(expr: PatchExpr, budget: Optional[_Budget] = None) -> Iterator[Conjunct]:
    """Lazily enumerate the disjuncts of expr, pruning empty conjunctions"""
    budget = budget or _Budget(settings.MAX_DISJUNCTS)
    if isinstance(expr, Union):
        for child in expr.members:
            yield from iter_conjuncts(child, budget)
    elif isinstance(expr, Intersection):
        # children are materialized once; the product is walked depth-first
        expanded = [list(iter_conjuncts(child, budget)) for child in expr.members]
        yield from _product(expanded, 0, TOP, budget)
    else:
        leaves = _leaf_conjuncts(expr)
        budget.charge(len(leaves))
        yield from leaves


def _product(
    expanded: Sequence[List[Conjunct]], index: int, acc: Conjunct, budget: _Budget
) -> Iterator[Conjunct]:
    if index == len(expanded):
        budget.charge()
        yield acc
        return
    for conjunct in expanded[index]:
        merged = acc.meet(conjunct)
        if merged is not None:
            yield from _product(expanded, index + 1, merged, budget)


# =============================================================================
# DISJUNCT SOLVING
# =============================================================================


def _pick(interval: Interval, zero_or_inf: bool) -> Optional[Exponent]:
    if interval.is_empty():
        return None
    if not zero_or_inf:
        return interval.lo
    if interval.lo == 0:
        return 0
    if interval.hi is INF:
        return INF
    return None


def solve_conjunct(conjunct: Conjunct) -> Optional[SupernaturalNumber]:
    """A representable solution of one disjunct, or None"""
    if conjunct.spec_z:
        return _solve_spec_z(conjunct)
    flag = conjunct.completely_infinite
    values: Dict[int, Exponent] = {}
    for p in sorted(conjunct.bounds):
        value = _pick(conjunct.bounds[p], flag)
        if value is None:
            return None
        values[p] = value
    # shared bounds are always 0 or ∞
    default = _pick(conjunct.rest, True)
    if default is None:
        return None
    return SupernaturalNumber.of(values, default)


def _solve_spec_z(conjunct: Conjunct) -> Optional[SupernaturalNumber]:
    explicit = sorted(conjunct.bounds)
    if not conjunct.rest.contains(INF):
        return None
    allows_inf = {p: conjunct.bounds[p].contains(INF) for p in explicit}
    # the maximal element
    if all(allows_inf.values()):
        return SupernaturalNumber.maximal()
    # s_p with p among the explicit primes
    for p in explicit:
        others_ok = all(allows_inf[q] for q in explicit if q != p)
        if others_ok and conjunct.bounds[p].contains(0):
            return SupernaturalNumber.s_p(p)
    return None


# =============================================================================
# QUERIES
# =============================================================================


def trace_query(n: int, S: PatchExpr, excluded: Iterable[int] = ()) -> PatchExpr:
    """(n) ∩ S minus the opens (m) for the excluded m"""
    parts: List[PatchExpr] = [MultiplesOf(SupernaturalNumber.from_natural(n)), S]
    parts.extend(NotAbove(m) for m in excluded)
    return Intersection(tuple(parts))


def trace_nonempty_witness(
    n: int, S: PatchExpr, excluded: Iterable[int] = ()
) -> Optional[SupernaturalNumber]:
    """
    Find s with n | s, s ∈ S and m ∤ s for every excluded m

    Args:
        n: base natural number
        S: patch expression
        excluded: naturals, each a multiple of n

    Returns:
        A witness with exponents drawn from the mentioned ones, or None when
        (n) ∩ S is covered by the excluded opens
    """
    require_natural(n)
    excluded = [require_natural(m, "excluded") for m in excluded]
    for m in excluded:
        if m % n:
            raise PreconditionError(f"excluded {m} is not a multiple of {n}")

    budget = _Budget(settings.MAX_DISJUNCTS)
    query = trace_query(n, S, excluded)
    for conjunct in iter_conjuncts(query, budget):
        witness = solve_conjunct(conjunct)
        if witness is None:
            continue
        if not (
            natural_divides(n, witness)
            and S.contains(witness)
            and not any(natural_divides(m, witness) for m in excluded)
        ):
            raise VerificationError(f"solver produced a bad witness {witness} for n={n}")
        logger.debug(f"witness {witness} for n={n} after {budget.used} disjuncts")
        return witness
    logger.debug(f"trace empty for n={n} after {budget.used} disjuncts")
    return None


def is_empty(S: PatchExpr) -> bool:
    return trace_nonempty_witness(1, S) is None


def find_member(S: PatchExpr) -> Optional[SupernaturalNumber]:
    return trace_nonempty_witness(1, S)
