"""
Finite poset embedding - 유한 poset을 약수 순서(ℕ₊, |)에 임베딩

Every finite poset (equivalently, finite T₀ space) order-embeds into the
positive naturals under divisibility. The construction is recursive: the
least-labelled minimal element x goes to 2, the elements above x land on even
numbers, the rest on odd numbers.
"""

import logging
import random
import string
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import networkx as nx
from sympy import factorint, nextprime

from src.core.errors import DomainError

logger = logging.getLogger(__name__)

Label = str


# =============================================================================
# POSET
# =============================================================================


@dataclass(frozen=True)
class FinitePoset:
    """
    Finite partial order

    Attributes:
        elements: distinct labels
        relation: pairs (x, y) meaning x ≤ y; reflexive pairs are added on load
    """

    elements: Tuple[Label, ...] = ()
    relation: FrozenSet[Tuple[Label, Label]] = field(default_factory=frozenset)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        if len(set(elements)) != len(elements):
            raise DomainError("poset labels must be distinct")
        known = set(elements)
        pairs = set()
        for x, y in self.relation:
            x, y = str(x), str(y)
            if x not in known or y not in known:
                raise DomainError(f"relation pair ({x}, {y}) mentions an unknown element")
            pairs.add((x, y))
        pairs.update((e, e) for e in elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "relation", frozenset(pairs))
        self._validate()

    def _validate(self):
        for x, y in self.relation:
            if x != y and (y, x) in self.relation:
                raise DomainError(f"not antisymmetric: {x} ≤ {y} ≤ {x}")
        for x, y in self.relation:
            for z in self.elements:
                if (y, z) in self.relation and (x, z) not in self.relation:
                    raise DomainError(f"not transitive: {x} ≤ {y} ≤ {z} but not {x} ≤ {z}")

    @classmethod
    def from_covers(cls, elements: Iterable[Label], covers: Iterable[Tuple[Label, Label]]) -> "FinitePoset":
        """Build the poset generated by cover pairs (x, y) meaning x < y"""
        graph = nx.DiGraph()
        graph.add_nodes_from(str(e) for e in elements)
        for x, y in covers:
            x, y = str(x), str(y)
            if x == y:
                raise DomainError(f"cover pair ({x}, {y}) is a loop")
            graph.add_edge(x, y)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise DomainError(f"cover pairs contain a cycle: {cycle}")
        closure = nx.transitive_closure_dag(graph)
        return cls(tuple(graph.nodes), frozenset(closure.edges))

    def leq(self, x: Label, y: Label) -> bool:
        return (x, y) in self.relation

    def lt(self, x: Label, y: Label) -> bool:
        return x != y and (x, y) in self.relation

    def minimal_elements(self) -> List[Label]:
        return [y for y in self.elements if not any(self.lt(x, y) for x in self.elements)]

    def up_set(self, x: Label) -> Set[Label]:
        return {y for y in self.elements if self.leq(x, y)}

    def restrict(self, subset: Iterable[Label]) -> "FinitePoset":
        keep = [e for e in self.elements if e in set(subset)]
        members = set(keep)
        return FinitePoset(
            tuple(keep),
            frozenset((x, y) for x, y in self.relation if x in members and y in members),
        )

    def cover_pairs(self) -> List[Tuple[Label, Label]]:
        """Hasse diagram edges"""
        graph = self.strict_graph()
        return sorted(nx.transitive_reduction(graph).edges)

    def strict_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from((x, y) for x, y in self.relation if x != y)
        return graph

    def __len__(self) -> int:
        return len(self.elements)


# =============================================================================
# EMBEDDING
# =============================================================================


@dataclass(frozen=True)
class DivEmbedding:
    """label → natural number"""

    mapping: Dict[Label, int]

    def __getitem__(self, label: Label) -> int:
        return self.mapping[label]

    def items(self) -> List[Tuple[Label, int]]:
        return sorted(self.mapping.items())


def _shift_primes(n: int) -> int:
    """p_i ↦ p_{i+1}, extended multiplicatively (lands on odd numbers)"""
    value = 1
    for p, e in factorint(n).items():
        value *= int(nextprime(p)) ** e
    return value


def _odd_primes(values: Iterable[int]) -> Set[int]:
    primes: Set[int] = set()
    for v in values:
        primes.update(int(p) for p in factorint(v) if p != 2)
    return primes


def _relabel_away(values: Dict[Label, int], taken: Set[int]) -> Dict[Label, int]:
    """Rename the odd primes of values, in ascending order, to ascending odd primes outside taken"""
    renaming: Dict[int, int] = {2: 2}
    candidate = 3
    for p in sorted(_odd_primes(values.values())):
        while candidate in taken:
            candidate = int(nextprime(candidate))
        renaming[p] = candidate
        candidate = int(nextprime(candidate))
    out = {}
    for label, v in values.items():
        image = 1
        for p, e in factorint(v).items():
            image *= renaming[int(p)] ** e
        out[label] = image
    return out


def _embed(P: FinitePoset) -> Dict[Label, int]:
    if not P.elements:
        return {}
    x = min(P.minimal_elements())
    above = [y for y in P.elements if P.lt(x, y)]
    rest = [y for y in P.elements if y != x and not P.lt(x, y)]

    lower = {y: _shift_primes(v) for y, v in _embed(P.restrict(rest)).items()}
    upper = _relabel_away(_embed(P.restrict(above)), _odd_primes(lower.values()))

    mapping = {x: 2}
    mapping.update(lower)
    for y in above:
        # nothing above x lies below an element of rest
        below = [lower[z] for z in rest if P.lt(z, y)]
        mapping[y] = 2 * upper[y] * lcm(1, *below)
    return mapping


def embed_poset(P: FinitePoset) -> DivEmbedding:
    """
    Order-embed P into (ℕ₊, |)

    x (least-labelled minimal element) ↦ 2. Elements not above x are embedded
    recursively and moved to odd numbers by the prime shift p_i ↦ p_{i+1}.
    Elements y above x are embedded recursively, their odd primes are renamed
    away from the ones the odd part uses, and y maps to 2·(that image)·lcm of
    the odd images of the elements below y. Each image keeps a prime power
    dividing exactly the images of its up-set.
    """
    mapping = _embed(P)
    logger.debug(f"embedded {len(mapping)} elements, max image {max(mapping.values(), default=1)}")
    return DivEmbedding(mapping)


def verify_embedding(P: FinitePoset, E: DivEmbedding) -> bool:
    """x ≤ y ⟺ E(x) | E(y) for every pair, and E injective"""
    if set(E.mapping) != set(P.elements):
        return False
    images = [E.mapping[e] for e in P.elements]
    if any(not isinstance(v, int) or v < 1 for v in images):
        return False
    if len(set(images)) != len(images):
        return False
    for x in P.elements:
        for y in P.elements:
            if P.leq(x, y) != (E.mapping[y] % E.mapping[x] == 0):
                return False
    return True


# =============================================================================
# GENERATION
# =============================================================================


def default_labels(k: int) -> List[Label]:
    if k <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:k])
    return [f"e{i}" for i in range(k)]


def _strict_orders(k: int) -> Iterator[FrozenSet[Tuple[int, int]]]:
    """Transitive relations on 0..k-1 contained in the natural order (one linear extension each)"""
    pairs = list(combinations(range(k), 2))
    for mask in range(1 << len(pairs)):
        chosen = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if all((a, c) in chosen for a, b in chosen for b2, c in chosen if b == b2):
            yield frozenset(chosen)


def all_posets(k: int) -> List[FinitePoset]:
    """Every poset with at most k elements, one per isomorphism class"""
    out: List[FinitePoset] = []
    for size in range(k + 1):
        labels = default_labels(size)
        representatives: List[nx.DiGraph] = []
        for order in _strict_orders(size):
            graph = nx.DiGraph()
            graph.add_nodes_from(range(size))
            graph.add_edges_from(order)
            if any(nx.is_isomorphic(graph, seen) for seen in representatives):
                continue
            representatives.append(graph)
            out.append(
                FinitePoset(tuple(labels), frozenset((labels[a], labels[b]) for a, b in order))
            )
    logger.debug(f"{len(out)} posets on at most {k} elements")
    return out


def random_poset(k: int, rng: Optional[random.Random] = None, density: float = 0.4) -> FinitePoset:
    """Random poset on k elements: random DAG edges, transitively closed, labels shuffled"""
    rng = rng or random.Random()
    labels = default_labels(k)
    rng.shuffle(labels)
    covers = [(labels[a], labels[b]) for a, b in combinations(range(k), 2) if rng.random() < density]
    return FinitePoset.from_covers(labels, covers)
