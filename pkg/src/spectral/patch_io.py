"""
Patch expression text formats

Compact syntax (CLI arguments)::

    specz | powersetprimes | full | empty
    fgopen:[6,10]     fgopen:6
    divclosure:2^inf*3     multiples:"5^0;default=inf"     notabove:12
    union(expr, expr, ...)     intersection(expr, expr, ...)

Structured document (files, --json): a JSON value where each node is an
object with a single tag key::

    {"fgopen": [6, 10]}      {"divclosure": "2^inf*3"}   {"multiples": "..."}
    {"notabove": 12}         {"specz": {}}  (or the bare string "specz")
    {"union": [node, ...]}   {"intersection": [node, ...]}
"""

import json
import logging
from typing import Any, Callable, Dict, List

from src.core.errors import ParseError
from src.core.supernat import format_supernatural, parse_supernatural
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

NULLARY = {
    "specz": SpecZ,
    "powersetprimes": PowerSetPrimes,
    "full": Full,
    "empty": Empty,
}
NARY = {"union": Union, "intersection": Intersection}
UNARY = ("fgopen", "divclosure", "multiples", "notabove")
ALL_TAGS = tuple(NULLARY) + UNARY + tuple(NARY)


# =============================================================================
# COMPACT SYNTAX
# =============================================================================


class _PatchParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, expected: str):
        raise ParseError(message, self.text, self.pos, expected)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, char: str) -> bool:
        self.skip()
        if self.text.startswith(char, self.pos):
            self.pos += len(char)
            return True
        return False

    def name(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        word = self.text[start:self.pos].lower()
        if word not in ALL_TAGS:
            self.pos = start
            self.error(f"unknown patch tag {word!r}", "one of " + ", ".join(ALL_TAGS))
        return word

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
            self.pos += 1
        if start == self.pos:
            self.error("unexpected input", "positive integer")
        value = int(self.text[start:self.pos])
        if value < 1:
            self.pos = start
            self.error("zero is not a natural number", "positive integer")
        return value

    def literal(self) -> str:
        self.skip()
        if self.accept('"'):
            end = self.text.find('"', self.pos)
            if end < 0:
                self.error("unterminated quote", "'\"'")
            raw = self.text[self.pos:end]
            self.pos = end + 1
            return raw
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)" and not self.text[self.pos].isspace():
            self.pos += 1
        if start == self.pos:
            self.error("missing argument", "supernatural literal")
        return self.text[start:self.pos]

    def supernatural(self):
        start = self.pos
        raw = self.literal()
        try:
            return parse_supernatural(raw)
        except ParseError as exc:
            offset = 0 if exc.position is None else exc.position
            raise ParseError("bad supernatural literal", self.text, start + offset, exc.expected)

    def expr(self) -> PatchExpr:
        tag = self.name()
        if tag in NULLARY:
            return NULLARY[tag]()
        if tag in NARY:
            if not self.accept("("):
                self.error("missing '('", "'('")
            children = [self.expr()]
            while self.accept(","):
                children.append(self.expr())
            if not self.accept(")"):
                self.error("missing ')'", "',' or ')'")
            return NARY[tag](tuple(children))
        if not self.accept(":"):
            self.error("missing argument", "':'")
        if tag == "fgopen":
            return FgOpen(tuple(self.int_list()))
        if tag == "notabove":
            return NotAbove(self.integer())
        value = self.supernatural()
        return DivisorClosure(value) if tag == "divclosure" else MultiplesOf(value)

    def int_list(self) -> List[int]:
        if not self.accept("["):
            return [self.integer()]
        if self.accept("]"):
            return []
        values = [self.integer()]
        while self.accept(","):
            values.append(self.integer())
        if not self.accept("]"):
            self.error("missing ']'", "',' or ']'")
        return values

    def parse(self) -> PatchExpr:
        expr = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input", "end of expression")
        return expr


def parse_patch(text: str) -> PatchExpr:
    """Parse the compact syntax or, when text starts with '{', '[' or '"', a JSON document"""
    stripped = text.strip()
    if stripped[:1] in ("{", "[", '"'):
        try:
            document = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos, "JSON value")
        return patch_from_document(document)
    return _PatchParser(text).parse()


def format_patch(expr: PatchExpr) -> str:
    """Compact syntax; parse_patch(format_patch(e)) == e"""
    if isinstance(expr, FgOpen):
        return "fgopen:[" + ",".join(str(g) for g in expr.generators) + "]"
    if isinstance(expr, DivisorClosure):
        return f"divclosure:{format_supernatural(expr.bound)}"
    if isinstance(expr, MultiplesOf):
        return f"multiples:{format_supernatural(expr.base)}"
    if isinstance(expr, NotAbove):
        return f"notabove:{expr.n}"
    if isinstance(expr, (Union, Intersection)):
        return f"{expr.TAG}(" + ",".join(format_patch(c) for c in expr.members) + ")"
    return expr.TAG


# =============================================================================
# STRUCTURED DOCUMENT
# =============================================================================


def patch_to_document(expr: PatchExpr) -> Any:
    if isinstance(expr, FgOpen):
        return {"fgopen": list(expr.generators)}
    if isinstance(expr, DivisorClosure):
        return {"divclosure": format_supernatural(expr.bound)}
    if isinstance(expr, MultiplesOf):
        return {"multiples": format_supernatural(expr.base)}
    if isinstance(expr, NotAbove):
        return {"notabove": expr.n}
    if isinstance(expr, (Union, Intersection)):
        return {expr.TAG: [patch_to_document(c) for c in expr.members]}
    return {expr.TAG: {}}


def _natural(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ParseError(f"expected a positive integer at {path}", str(value), None, "positive integer")
    return value


def _literal(value: Any, path: str):
    if isinstance(value, int) and not isinstance(value, bool):
        value = str(value)
    if not isinstance(value, str):
        raise ParseError(f"expected a supernatural literal at {path}", str(value), None, "string")
    return parse_supernatural(value)


_DOCUMENT_LEAVES: Dict[str, Callable[[Any, str], PatchExpr]] = {
    "fgopen": lambda v, path: FgOpen(
        tuple(_natural(g, f"{path}.fgopen[{i}]") for i, g in enumerate(v if isinstance(v, list) else [v]))
    ),
    "divclosure": lambda v, path: DivisorClosure(_literal(v, f"{path}.divclosure")),
    "multiples": lambda v, path: MultiplesOf(_literal(v, f"{path}.multiples")),
    "notabove": lambda v, path: NotAbove(_natural(v, f"{path}.notabove")),
}


def patch_from_document(document: Any, path: str = "$") -> PatchExpr:
    if isinstance(document, str):
        document = {document: {}}
    if not isinstance(document, dict) or len(document) != 1:
        raise ParseError(f"expected a single-key object at {path}", json.dumps(document), None, "tagged node")
    (tag, value), = document.items()
    tag = tag.lower()
    if tag in NULLARY:
        return NULLARY[tag]()
    if tag in NARY:
        if not isinstance(value, list):
            raise ParseError(f"expected a list of children at {path}.{tag}", json.dumps(value), None, "list")
        return NARY[tag](
            tuple(patch_from_document(child, f"{path}.{tag}[{i}]") for i, child in enumerate(value))
        )
    if tag in _DOCUMENT_LEAVES:
        return _DOCUMENT_LEAVES[tag](value, path)
    raise ParseError(f"unknown tag {tag!r} at {path}", json.dumps(document), None, "one of " + ", ".join(ALL_TAGS))
