"""
PGL stages and Skolem–Noether conjugation

PglElement is an invertible stage matrix modulo nonzero scalars; PGL_s is the
union of the stages n | s glued along the standard embeddings. The group acts
on M_n by conjugation. Two elements are ∼_n-equivalent when they act alike on
the embedded copy of M_n.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Tuple

from sympy import ImmutableMatrix, Matrix, Rational

from src.core.errors import DomainError, VerificationError
from src.core.supernat import require_natural
from src.tower.layout import SlotLayout
from src.tower.matrices import TowerMatrix, identity, matrix_unit, standard_embedding

logger = logging.getLogger(__name__)


# =============================================================================
# PGL ELEMENTS
# =============================================================================


def _normalize(matrix: ImmutableMatrix) -> ImmutableMatrix:
    """Divide by the first nonzero entry in row-major order"""
    for value in matrix:
        if value != 0:
            return matrix / value
    raise DomainError("zero matrix has no projective class")


@dataclass(frozen=True, eq=False)
class PglElement:
    stage: SlotLayout
    matrix: ImmutableMatrix

    def __post_init__(self):
        matrix = ImmutableMatrix(self.matrix)
        if matrix.shape != (self.stage.n, self.stage.n):
            raise DomainError(f"matrix shape {matrix.shape} does not match stage {self.stage.n}")
        if matrix.det() == 0:
            raise DomainError("PGL element must be invertible")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def of(cls, x: TowerMatrix) -> "PglElement":
        return cls(x.layout, x.entries)

    @classmethod
    def identity(cls, n: int) -> "PglElement":
        return cls(SlotLayout.of(n), ImmutableMatrix.eye(n))

    @property
    def n(self) -> int:
        return self.stage.n

    def normalized(self) -> ImmutableMatrix:
        return _normalize(self.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PglElement):
            return NotImplemented
        return self.stage == other.stage and self.normalized() == other.normalized()

    def __hash__(self) -> int:
        return hash((self.stage, self.normalized()))

    def _check_stage(self, other: "PglElement"):
        if other.stage != self.stage:
            raise DomainError(f"stage mismatch: {self.n} vs {other.n}")

    def compose(self, other: "PglElement") -> "PglElement":
        self._check_stage(other)
        return PglElement(self.stage, self.matrix * other.matrix)

    __mul__ = compose

    @cached_property
    def _inverse_matrix(self) -> ImmutableMatrix:
        return self.matrix.inv()

    def inverse(self) -> "PglElement":
        return PglElement(self.stage, self._inverse_matrix)

    def act(self, x: TowerMatrix) -> TowerMatrix:
        """g·x = g x g⁻¹, after pushing x to this stage"""
        if x.n != self.n:
            x = standard_embedding(x, self.n)
        return TowerMatrix(self.stage, self.matrix * x.entries * self._inverse_matrix)

    def embed(self, m: int) -> "PglElement":
        """Image in the stage m of PGL_s"""
        pushed = standard_embedding(TowerMatrix(self.stage, self.matrix), m)
        return PglElement(pushed.layout, pushed.entries)

    def as_matrix(self) -> TowerMatrix:
        return TowerMatrix(self.stage, self.normalized())


def pgl_equiv_n(g: PglElement, h: PglElement, n: int) -> bool:
    """
    g ∼_n h: g⁻¹h commutes with ρ_{n,m}(u) for every matrix unit u of M_n

    Raises:
        DomainError: stages differ or n does not divide the stage
    """
    require_natural(n)
    g._check_stage(h)
    m = g.n
    if m % n:
        raise DomainError(f"{n} does not divide the stage {m}")
    q = g.inverse().compose(h).matrix
    for i in range(n):
        for j in range(n):
            u = standard_embedding(matrix_unit(n, i, j), m).entries
            if q * u != u * q:
                return False
    return True


def is_fixed_by(g: PglElement, x: TowerMatrix) -> bool:
    """Conjugation by g fixes x (pushed to g's stage)"""
    pushed = x if x.n == g.n else standard_embedding(x, g.n)
    return g.act(pushed) == pushed


# =============================================================================
# ALGEBRA EMBEDDINGS
# =============================================================================


@dataclass(frozen=True)
class AlgebraEmbedding:
    """
    Linear map M_n → M_m given by the images of the matrix units

    images[i*n + j] is the image of e_{ij}.
    """

    n: int
    m: int
    images: Tuple[TowerMatrix, ...]

    def __post_init__(self):
        require_natural(self.n)
        require_natural(self.m, "m")
        if self.m % self.n:
            raise DomainError(f"{self.n} does not divide {self.m}")
        images = tuple(self.images)
        if len(images) != self.n * self.n:
            raise DomainError(f"expected {self.n * self.n} unit images, got {len(images)}")
        if any(x.n != self.m for x in images):
            raise DomainError(f"unit images must live at stage {self.m}")
        object.__setattr__(self, "images", images)

    @classmethod
    def standard(cls, n: int, m: int) -> "AlgebraEmbedding":
        """ρ_{n,m}"""
        units = [matrix_unit(n, i, j) for i in range(n) for j in range(n)]
        return cls(n, m, tuple(standard_embedding(u, m) for u in units))

    @classmethod
    def from_images(cls, n: int, images: Dict[Tuple[int, int], TowerMatrix]) -> "AlgebraEmbedding":
        ordered = [images[(i, j)] for i in range(n) for j in range(n)]
        return cls(n, ordered[0].n, tuple(ordered))

    def unit_image(self, i: int, j: int) -> TowerMatrix:
        return self.images[i * self.n + j]

    def conjugated(self, P: TowerMatrix) -> "AlgebraEmbedding":
        """u ↦ P·phi(u)·P⁻¹"""
        g = PglElement.of(P)
        return AlgebraEmbedding(self.n, self.m, tuple(g.act(x) for x in self.images))

    def apply(self, x: TowerMatrix) -> TowerMatrix:
        if x.n != self.n:
            raise DomainError(f"argument lives at stage {x.n}, expected {self.n}")
        out = TowerMatrix(SlotLayout.of(self.m), ImmutableMatrix.zeros(self.m, self.m))
        for i in range(self.n):
            for j in range(self.n):
                value = x.entries[i, j]
                if value != 0:
                    out = out + self.unit_image(i, j) * value
        return out

    def verify(self) -> bool:
        """
        Unital and multiplicative

        E_ij = E_i0·E_0j, E_0i·E_j0 = δ_ij·E_00 and ΣE_ii = 1 together give
        E_ij·E_kl = δ_jk·E_il.
        """
        n = self.n
        total = self.unit_image(0, 0) * 0
        for i in range(n):
            total = total + self.unit_image(i, i)
        if total != identity(self.m):
            return False
        e00 = self.unit_image(0, 0)
        for i in range(n):
            for j in range(n):
                if self.unit_image(i, 0) * self.unit_image(0, j) != self.unit_image(i, j):
                    return False
                expected = e00 if i == j else e00 * 0
                if self.unit_image(0, i) * self.unit_image(j, 0) != expected:
                    return False
        return True


def _pivot_columns(x: ImmutableMatrix) -> List[Matrix]:
    _, pivots = x.rref()
    return [x[:, c] for c in pivots]


def skolem_noether_conjugator(phi: AlgebraEmbedding, psi: AlgebraEmbedding) -> PglElement:
    """
    g with g·phi(u)·g⁻¹ = psi(u) for every matrix unit u

    Bases (v_t), (w_t) of the column spaces of phi(e_00), psi(e_00) are the
    pivot columns in reduced echelon order; g sends phi(e_i0)·v_t to
    psi(e_i0)·w_t.

    Raises:
        DomainError: an input is not a unital algebra embedding, or n, m differ
        VerificationError: the constructed g fails the intertwining check
    """
    if (phi.n, phi.m) != (psi.n, psi.m):
        raise DomainError(f"embeddings differ in shape: {phi.n}→{phi.m} vs {psi.n}→{psi.m}")
    for name, emb in (("phi", phi), ("psi", psi)):
        if not emb.verify():
            raise DomainError(f"{name} is not a unital algebra embedding")

    n, m = phi.n, phi.m
    rank = m // n
    vs = _pivot_columns(phi.unit_image(0, 0).entries)
    ws = _pivot_columns(psi.unit_image(0, 0).entries)
    if len(vs) != rank or len(ws) != rank:
        raise VerificationError(f"idempotent e_00 image has rank {len(vs)}/{len(ws)}, expected {rank}")

    source_cols, target_cols = [], []
    for i in range(n):
        a, b = phi.unit_image(i, 0).entries, psi.unit_image(i, 0).entries
        for v, w in zip(vs, ws):
            source_cols.append(a * v)
            target_cols.append(b * w)
    V = Matrix.hstack(*source_cols)
    W = Matrix.hstack(*target_cols)
    if V.det() == 0:
        raise VerificationError("image columns of phi do not form a basis")
    g = PglElement(SlotLayout.of(m), ImmutableMatrix(W * V.inv()))

    for i in range(n):
        for j in range(n):
            if g.act(phi.unit_image(i, j)) != psi.unit_image(i, j):
                raise VerificationError(f"conjugator fails on e_{i}{j}")
    logger.debug(f"Skolem–Noether conjugator found at stage {m}")
    return g


def permutation_matrix(permutation: List[int]) -> TowerMatrix:
    """Matrix sending basis vector j to permutation[j]"""
    size = len(permutation)
    rows = [[Rational(0)] * size for _ in range(size)]
    for j, image in enumerate(permutation):
        rows[image][j] = Rational(1)
    return TowerMatrix.from_rows(rows)
