"""
Deterministic corpus of patch expressions and sieves over a bounded universe

Every leaf parameter has its primes inside the universe and its finite
exponents at most E, so oracle answers are faithful for the whole corpus.
SpecZ and parameters with default ∞ only appear over a widened universe,
the only kind that holds their members.
"""

import logging
import random
from dataclasses import dataclass, field
from math import lcm
from typing import Iterator, List, Optional, Tuple

from config.settings import settings
from src.bigcell.sieve import Sieve
from src.core.supernat import SupernaturalNumber
from src.oracle.universe import BoundedUniverse, universe_from_settings
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


@dataclass
class Corpus:
    universe: BoundedUniverse
    patches: List[PatchExpr] = field(default_factory=list)
    sieves: List[Sieve] = field(default_factory=list)

    def pairs(self, per_sieve: int = 1) -> Iterator[Tuple[Sieve, PatchExpr]]:
        """Each sieve with per_sieve patches, cycling through the patch list"""
        if not self.patches:
            return
        k = 0
        for sieve in self.sieves:
            for _ in range(per_sieve):
                yield sieve, self.patches[k % len(self.patches)]
                k += 1


class _PatchFactory:
    def __init__(self, rng: random.Random, universe: BoundedUniverse):
        self.rng = rng
        self.elements = universe.parameters()
        self.widened = universe.widened
        self.naturals = universe.naturals()

    def natural(self, allow_one: bool = True) -> int:
        pool = self.naturals if allow_one else [n for n in self.naturals if n > 1] or [1]
        return self.rng.choice(pool)

    def element(self) -> SupernaturalNumber:
        return self.rng.choice(self.elements)

    def leaf(self) -> PatchExpr:
        kinds = ["fgopen", "divclosure", "multiples", "notabove", "powerset", "full", "empty"]
        weights = [5, 4, 4, 4, 2, 1, 1]
        if self.widened:
            kinds.append("specz")
            weights.append(2)
        kind = self.rng.choices(kinds, weights=weights)[0]
        if kind == "fgopen":
            return FgOpen(tuple(self.natural() for _ in range(self.rng.randint(1, 3))))
        if kind == "divclosure":
            return DivisorClosure(self.element())
        if kind == "multiples":
            return MultiplesOf(self.element())
        if kind == "notabove":
            return NotAbove(self.natural(allow_one=False))
        if kind == "powerset":
            return PowerSetPrimes()
        if kind == "specz":
            return SpecZ()
        return Full() if kind == "full" else Empty()

    def expr(self, depth: int) -> PatchExpr:
        if depth == 0 or self.rng.random() < 0.3:
            return self.leaf()
        node = Union if self.rng.random() < 0.5 else Intersection
        return node(tuple(self.expr(depth - 1) for _ in range(self.rng.randint(2, 3))))


def random_sieve(rng: random.Random, universe: BoundedUniverse, max_generators: int = 4) -> Sieve:
    naturals = universe.naturals()
    base = rng.choice(naturals)
    gens = []
    for _ in range(rng.randint(0, max_generators)):
        g = lcm(base, rng.choice(naturals))
        if g not in gens:
            gens.append(g)
    return Sieve(base, tuple(gens))


def generate_corpus(
    seed: Optional[int] = None,
    patches: Optional[int] = None,
    sieves: Optional[int] = None,
    universe: Optional[BoundedUniverse] = None,
) -> Corpus:
    """Same arguments, same corpus"""
    seed = settings.CORPUS_SEED if seed is None else seed
    patches = settings.CORPUS_PATCHES if patches is None else patches
    sieves = settings.CORPUS_SIEVES if sieves is None else sieves
    universe = universe or universe_from_settings()

    rng = random.Random(seed)
    factory = _PatchFactory(rng, universe)
    corpus = Corpus(universe)
    corpus.patches = [factory.expr(3) for _ in range(patches)]
    corpus.sieves = [random_sieve(rng, universe) for _ in range(sieves)]
    logger.info(f"corpus seed={seed}: {patches} patches, {sieves} sieves over {universe}")
    return corpus
