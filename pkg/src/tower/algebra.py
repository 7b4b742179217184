"""
Component algebras, s-truncation and representation checks

A presentation R = ⟨generators | relations⟩ is a noncommutative polynomial
algebra modulo relations with rational coefficients. A representation at stage
m assigns an m×m matrix to each generator; it is valid when every relation
evaluates to zero (the unit goes to the identity).

Presentation text::

    generators: x, y
    relation: x*y - y*x - 1
    relation: x^2 = 1
"""

import keyword
import logging
import re
from dataclasses import dataclass
from tokenize import TokenError
from typing import Dict, List, Mapping, Optional, Tuple

from sympy import Add, Expr, Float, Integer, Mul, Number, Pow, Rational, Symbol, nan, oo, zoo
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    rationalize,
    standard_transformations,
)

from src.core.errors import DomainError, ParseError
from src.core.supernat import SupernaturalLike, as_supernatural, natural_divides, require_natural
from src.tower.matrices import TowerMatrix, identity, standard_embedding

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)
_GLOBALS = {"Integer": Integer, "Rational": Rational, "Float": Float, "Symbol": Symbol}
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|[0-9]+|[-+*/^()])\s*", re.ASCII)
_RELATION_TOKENS = "generator, integer or one of + - * / ^ ( )"


# =============================================================================
# COMPONENT ALGEBRAS
# =============================================================================


@dataclass(frozen=True)
class Component:
    """A ⊗ C_i of degree d_i over its center"""

    degree: int
    center: str = "C"

    def __post_init__(self):
        require_natural(self.degree, "degree")


@dataclass(frozen=True)
class ComponentAlgebra:
    """C = C_1 × ... × C_k with pairwise distinct degrees; no components is the zero ring"""

    components: Tuple[Component, ...] = ()

    def __post_init__(self):
        components = tuple(self.components)
        degrees = [c.degree for c in components]
        if len(set(degrees)) != len(degrees):
            raise DomainError(f"component degrees must be pairwise distinct, got {degrees}")
        object.__setattr__(self, "components", components)

    @classmethod
    def of_degrees(cls, degrees, center: str = "C") -> "ComponentAlgebra":
        return cls(tuple(Component(d, center) for d in degrees))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    def is_zero(self) -> bool:
        return not self.components


def truncate(A: ComponentAlgebra, s: SupernaturalLike) -> ComponentAlgebra:
    """A_s = ∏_{d_i | s} A ⊗ C_i"""
    s = as_supernatural(s)
    return ComponentAlgebra(tuple(c for c in A.components if natural_divides(c.degree, s)))


# =============================================================================
# PRESENTATIONS
# =============================================================================


@dataclass(frozen=True)
class AlgebraPresentation:
    generators: Tuple[str, ...]
    relations: Tuple[str, ...] = ()

    def __post_init__(self):
        generators = tuple(g.strip() for g in self.generators)
        for g in generators:
            if not _NAME.match(g) or g.startswith("__") or keyword.iskeyword(g) or g in _GLOBALS:
                raise DomainError(f"bad generator name {g!r}")
        if len(set(generators)) != len(generators):
            raise DomainError("generator names must be distinct")
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "relations", tuple(self.relations))
        for relation in self.relations:
            self.parse_relation(relation)

    def symbols(self) -> Dict[str, Symbol]:
        return {g: Symbol(g, commutative=False) for g in self.generators}

    def check_relation_text(self, relation: str) -> None:
        """
        Only generator names, integers, ``+ - * / ^ ( )`` and one ``=`` may appear

        Raises:
            ParseError: any other character (dots, quotes, brackets, ...)
            DomainError: a name that is not a declared generator
        """
        lhs, sep, rhs = relation.partition("=")
        offset = 0
        for side in (lhs, rhs) if sep else (lhs,):
            pos = 0
            while pos < len(side):
                match = _TOKEN.match(side, pos)
                if not match:
                    raise ParseError("unexpected character in relation", relation, offset + pos, _RELATION_TOKENS)
                name = match.group("name")
                if name is not None and name not in self.generators:
                    raise DomainError(f"relation {relation!r} uses undeclared generator {name!r}")
                pos = match.end()
            offset += len(side) + 1

    def _parse_side(self, relation: str, side: str) -> Expr:
        try:
            expr = parse_expr(
                side,
                local_dict=self.symbols(),
                global_dict=_GLOBALS.copy(),
                transformations=TRANSFORMATIONS,
            )
        except (SyntaxError, TypeError, NameError, AttributeError, ValueError, SympifyError, TokenError) as exc:
            raise ParseError(f"bad relation: {exc}", relation, None, "polynomial in the generators")
        if not isinstance(expr, Expr):
            raise ParseError("relation is not a polynomial", relation, None, "polynomial in the generators")
        return expr

    def parse_relation(self, relation: str):
        """Relation text → sympy expression in noncommutative symbols; ``a = b`` reads as a - b"""
        self.check_relation_text(relation)
        lhs, sep, rhs = relation.partition("=")
        expr = self._parse_side(relation, lhs)
        if sep:
            expr = expr - self._parse_side(relation, rhs)
        if expr.has(zoo, nan, oo):
            raise DomainError(f"relation {relation!r} divides by zero")
        return expr


def parse_presentation(text: str) -> AlgebraPresentation:
    generators: Optional[List[str]] = None
    relations: List[str] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            key, sep, value = body.partition(":")
            key = key.strip().lower()
            if not sep or key not in ("generators", "relation"):
                raise ParseError("bad presentation line", text, offset, "'generators:' or 'relation:'")
            if key == "generators":
                if generators is not None:
                    raise ParseError("generators declared twice", text, offset, "one 'generators:' line")
                generators = [g.strip() for g in value.split(",") if g.strip()]
            else:
                relations.append(value.strip())
        offset += len(line)
    if generators is None:
        raise ParseError("missing generators line", text, 0, "'generators: x, y'")
    return AlgebraPresentation(tuple(generators), tuple(relations))


def format_presentation(R: AlgebraPresentation) -> str:
    lines = ["generators: " + ", ".join(R.generators)]
    lines.extend(f"relation: {relation}" for relation in R.relations)
    return "\n".join(lines)


# =============================================================================
# EVALUATION
# =============================================================================


def evaluate(expr, assignment: Mapping[str, TowerMatrix], n: int) -> TowerMatrix:
    """Evaluate a noncommutative polynomial at matrices of stage n"""
    if isinstance(expr, Number):
        return identity(n) * Rational(expr)
    if isinstance(expr, Symbol):
        if expr.is_commutative or expr.name not in assignment:
            raise DomainError(f"undeclared generator {expr.name!r}")
        return assignment[expr.name]
    if isinstance(expr, Add):
        total = identity(n) * 0
        for term in expr.args:
            total = total + evaluate(term, assignment, n)
        return total
    if isinstance(expr, Mul):
        scalars, factors = expr.args_cnc()
        result = identity(n)
        for c in scalars:
            if not isinstance(c, Number):
                raise DomainError(f"undeclared generator {c}")
            result = result * Rational(c)
        for factor in factors:
            result = result * evaluate(factor, assignment, n)
        return result
    if isinstance(expr, Pow):
        base, exponent = expr.args
        if not (exponent.is_Integer and exponent >= 0):
            raise DomainError(f"unsupported exponent {exponent}")
        return evaluate(base, assignment, n) ** int(exponent)
    raise DomainError(f"unsupported term {expr}")


def _check_assignment(R: AlgebraPresentation, assignment: Mapping[str, TowerMatrix]) -> int:
    extra = sorted(set(assignment) - set(R.generators))
    if extra:
        raise DomainError(f"undeclared generators in assignment: {extra}")
    missing = sorted(set(R.generators) - set(assignment))
    if missing:
        raise DomainError(f"generators without a matrix: {missing}")
    stages = {x.n for x in assignment.values()}
    if len(stages) > 1:
        raise DomainError(f"assigned matrices live at different stages {sorted(stages)}")
    return stages.pop() if stages else 1


def check_representation(R: AlgebraPresentation, assignment: Mapping[str, TowerMatrix]) -> bool:
    """Every relation evaluates to zero under the assignment"""
    n = _check_assignment(R, assignment)
    for relation in R.relations:
        value = evaluate(R.parse_relation(relation), assignment, n)
        if not value.is_zero():
            logger.debug(f"relation {relation!r} fails at stage {n}")
            return False
    return True


def push_assignment(assignment: Mapping[str, TowerMatrix], m: int) -> Dict[str, TowerMatrix]:
    """Push a representation along ρ_{n,m}"""
    return {name: standard_embedding(x, m) for name, x in assignment.items()}
