"""
Tower matrices - 타워 단계의 정확한 유리수 행렬

Exact-rational n×n matrices realized over a SlotLayout, the standard
embeddings ρ_{n,m}, the normalized trace and the M_s tower stages.
Text form: rows separated by ';', entries by ',', each entry ``p`` or ``p/q``.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from sympy import ImmutableMatrix, Rational, zeros

from src.core.errors import DomainError, ParseError
from src.core.supernat import SupernaturalLike, SupernaturalNumber, require_natural
from src.spectral.pcfb import cofinal_chain
from src.bigcell.topology import tower_supernatural
from src.tower.layout import SlotLayout, slot_assignment

logger = logging.getLogger(__name__)

Scalar = Union[int, Rational]


@dataclass(frozen=True)
class TowerMatrix:
    """Exact n×n matrix at the stage given by its layout"""

    layout: SlotLayout
    entries: ImmutableMatrix

    def __post_init__(self):
        entries = ImmutableMatrix(self.entries)
        if entries.shape != (self.layout.n, self.layout.n):
            raise DomainError(f"matrix shape {entries.shape} does not match stage {self.layout.n}")
        if any(not value.is_Rational for value in entries):
            raise DomainError("tower matrix entries must be rational")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "TowerMatrix":
        matrix = ImmutableMatrix([[Rational(v) for v in row] for row in rows])
        if matrix.rows != matrix.cols:
            raise DomainError(f"matrix must be square, got {matrix.shape}")
        return cls(SlotLayout.of(matrix.rows), matrix)

    @property
    def n(self) -> int:
        return self.layout.n

    def _check_stage(self, other: "TowerMatrix"):
        if other.layout != self.layout:
            raise DomainError(f"stage mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "TowerMatrix") -> "TowerMatrix":
        self._check_stage(other)
        return TowerMatrix(self.layout, self.entries + other.entries)

    def __sub__(self, other: "TowerMatrix") -> "TowerMatrix":
        self._check_stage(other)
        return TowerMatrix(self.layout, self.entries - other.entries)

    def __neg__(self) -> "TowerMatrix":
        return TowerMatrix(self.layout, -self.entries)

    def __mul__(self, other):
        if isinstance(other, TowerMatrix):
            self._check_stage(other)
            return TowerMatrix(self.layout, self.entries * other.entries)
        return TowerMatrix(self.layout, self.entries * Rational(other))

    def __rmul__(self, scalar):
        return TowerMatrix(self.layout, self.entries * Rational(scalar))

    def __pow__(self, exponent: int) -> "TowerMatrix":
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"matrix power needs a nonnegative integer, got {exponent!r}")
        result = identity(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.entries.is_zero_matrix

    def commutes_with(self, other: "TowerMatrix") -> bool:
        return self * other == other * self

    def rows(self) -> List[List[Rational]]:
        return self.entries.tolist()

    def __str__(self) -> str:
        return format_matrix(self)


# =============================================================================
# CONSTRUCTORS
# =============================================================================


def matrix_unit(n: int, i: int, j: int) -> TowerMatrix:
    """e_{ij} at stage n"""
    require_natural(n)
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError(f"unit e_{i}{j} out of range for stage {n}")
    entries = zeros(n, n)
    entries[i, j] = 1
    return TowerMatrix(SlotLayout.of(n), ImmutableMatrix(entries))


def matrix_units(n: int) -> List[TowerMatrix]:
    return [matrix_unit(n, i, j) for i in range(n) for j in range(n)]


def identity(n: int) -> TowerMatrix:
    return TowerMatrix(SlotLayout.of(require_natural(n)), ImmutableMatrix.eye(n))


def zero_matrix(n: int) -> TowerMatrix:
    return TowerMatrix(SlotLayout.of(require_natural(n)), ImmutableMatrix.zeros(n, n))


# =============================================================================
# STANDARD EMBEDDINGS
# =============================================================================


def standard_embedding(x: TowerMatrix, m: int) -> TowerMatrix:
    """
    ρ_{n,m}(x)

    Entry at (I, J) is x[I restricted to the assigned slots, J restricted
    likewise] times δ on the free slots of m.

    Raises:
        DomainError: n does not divide m
    """
    n = x.n
    assignment = slot_assignment(n, m)
    if n == m:
        return x
    source, target = x.layout, SlotLayout.of(m)
    assigned = [assignment[i] for i in range(len(source.slots))]
    strides = target.strides()
    image = zeros(m, m)
    for row in range(m):
        index = target.delinearize(row)
        a = source.linearize(tuple(index[j] for j in assigned))
        # row with the assigned digits cleared
        base = row - sum(index[j] * strides[j] for j in assigned)
        for b in range(n):
            value = x.entries[a, b]
            if value == 0:
                continue
            digits = source.delinearize(b)
            col = base + sum(d * strides[j] for d, j in zip(digits, assigned))
            image[row, col] = value
    return TowerMatrix(target, ImmutableMatrix(image))


def normalized_trace(x: TowerMatrix) -> Rational:
    """tr'(x) = tr(x)/n, so tr'(1) = 1"""
    return Rational(x.entries.trace(), x.n)


def trace_axioms_hold(x: TowerMatrix, y: TowerMatrix, m: Optional[int] = None) -> bool:
    """
    tr'(1) = 1, tr'(xy) = tr'(yx), linearity, and tr' ∘ ρ_{n,m} = tr'

    m defaults to 2n.
    """
    x._check_stage(y)
    m = m if m is not None else 2 * x.n
    c = Rational(3, 7)
    return (
        normalized_trace(identity(x.n)) == 1
        and normalized_trace(x * y) == normalized_trace(y * x)
        and normalized_trace(x + y * c) == normalized_trace(x) + c * normalized_trace(y)
        and normalized_trace(standard_embedding(x, m)) == normalized_trace(x)
    )


# =============================================================================
# M_s TOWER
# =============================================================================


def tower_layouts(s: SupernaturalLike, k: int) -> List[SlotLayout]:
    """Stage layouts of the M_s tower along cofinal_chain(s, k)"""
    return [SlotLayout.of(n) for n in cofinal_chain(s, k)]


def uhf_class(stages: Sequence[Union[int, SlotLayout]], ratio: Optional[int] = None) -> SupernaturalNumber:
    """Supernatural number classifying the tower M_{n_1} → M_{n_2} → ..."""
    dims = [stage.n if isinstance(stage, SlotLayout) else stage for stage in stages]
    return tower_supernatural(dims, ratio)


# =============================================================================
# TEXT FORM
# =============================================================================

_ENTRY = re.compile(r"\s*(-?\d+(?:/\d+)?)\s*$", re.ASCII)


def parse_matrix(text: str) -> TowerMatrix:
    rows: List[List[Rational]] = []
    offset = 0
    for row_text in text.split(";"):
        row = []
        for cell in row_text.split(","):
            match = _ENTRY.match(cell)
            if not match:
                raise ParseError("bad matrix entry", text, offset, "integer or p/q")
            numerator, _, denominator = match.group(1).partition("/")
            if denominator and int(denominator) == 0:
                raise ParseError("zero denominator", text, offset, "nonzero denominator")
            row.append(Rational(int(numerator), int(denominator or 1)))
            offset += len(cell) + 1
        rows.append(row)
    width = len(rows[0])
    if any(len(row) != width for row in rows) or width != len(rows):
        raise ParseError(f"matrix must be square, got {len(rows)} rows", text, len(text), "n rows of n entries")
    return TowerMatrix.from_rows(rows)


def format_matrix(x: TowerMatrix) -> str:
    return ";".join(",".join(str(v) for v in row) for row in x.rows())
