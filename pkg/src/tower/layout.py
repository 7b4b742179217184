"""
Ordered prime-factor slot layouts

M_n = M_{p_1} ⊗ ... ⊗ M_{p_k} with p_1 ≤ ... ≤ p_k the prime factors of n
(with multiplicity). A basis index of the n-dimensional space is a tuple
(a_1, ..., a_k), a_j < p_j, linearized with the leftmost slot most
significant.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Tuple

from src.core.errors import DomainError
from src.core.supernat import factor_natural, require_natural

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SlotLayout:
    n: int
    slots: Tuple[int, ...]

    def __post_init__(self):
        require_natural(self.n)
        slots = tuple(self.slots)
        if list(slots) != sorted(slots):
            raise DomainError(f"slots must ascend, got {slots}")
        product_ = 1
        for p in slots:
            product_ *= p
        if product_ != self.n:
            raise DomainError(f"slots {slots} do not multiply to {self.n}")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def of(cls, n: int) -> "SlotLayout":
        return _layout(require_natural(n))

    @property
    def dim(self) -> int:
        return self.n

    def strides(self) -> Tuple[int, ...]:
        out = []
        stride = 1
        for p in reversed(self.slots):
            out.append(stride)
            stride *= p
        return tuple(reversed(out))

    def linearize(self, index: Tuple[int, ...]) -> int:
        if len(index) != len(self.slots) or any(not 0 <= a < p for a, p in zip(index, self.slots)):
            raise DomainError(f"index {index} does not fit slots {self.slots}")
        return sum(a * s for a, s in zip(index, self.strides()))

    def delinearize(self, value: int) -> Tuple[int, ...]:
        if not 0 <= value < self.n:
            raise DomainError(f"index {value} out of range for dimension {self.n}")
        out = []
        for p in reversed(self.slots):
            value, digit = divmod(value, p)
            out.append(digit)
        return tuple(reversed(out))

    def indices(self) -> Iterator[Tuple[int, ...]]:
        """All index tuples in linear order"""
        return product(*(range(p) for p in self.slots))

    def __str__(self) -> str:
        return f"{self.n}[" + ",".join(str(p) for p in self.slots) + "]"


@lru_cache(maxsize=1024)
def _layout(n: int) -> SlotLayout:
    slots: List[int] = []
    for p, e in factor_natural(n):
        slots.extend([p] * e)
    return SlotLayout(n, tuple(slots))


def slot_assignment(n: int, m: int) -> Dict[int, int]:
    """
    Slot map n → m: the k-th occurrence of p in n goes to the k-th occurrence of p in m

    Raises:
        DomainError: n does not divide m
    """
    require_natural(n)
    require_natural(m, "m")
    if m % n:
        raise DomainError(f"{n} does not divide {m}")
    source, target = SlotLayout.of(n).slots, SlotLayout.of(m).slots
    positions: Dict[int, List[int]] = {}
    for j, p in enumerate(target):
        positions.setdefault(p, []).append(j)
    seen: Dict[int, int] = {}
    assignment = {}
    for i, p in enumerate(source):
        k = seen.get(p, 0)
        assignment[i] = positions[p][k]
        seen[p] = k + 1
    return assignment


def compose_assignments(inner: Dict[int, int], outer: Dict[int, int]) -> Dict[int, int]:
    """outer ∘ inner"""
    return {i: outer[j] for i, j in inner.items()}
