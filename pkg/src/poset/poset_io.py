"""
Poset documents

JSON::

    {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]}

Line format (``#`` starts a comment)::

    a < b < c
    d            # isolated element

The transitive closure is computed on load.
"""

import json
import logging
from typing import Any, Dict, List, Tuple

from src.core.errors import DomainError, ParseError
from src.poset.posetlab import DivEmbedding, FinitePoset

logger = logging.getLogger(__name__)


def _from_json(text: str) -> FinitePoset:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", text, exc.pos, "JSON object")
    if not isinstance(document, dict) or "elements" not in document:
        raise ParseError("poset document needs an 'elements' list", text, 0, "{\"elements\": [...]}")
    elements = document["elements"]
    covers = document.get("covers", [])
    if not isinstance(elements, list) or not isinstance(covers, list):
        raise ParseError("'elements' and 'covers' must be lists", text, 0, "list")
    pairs: List[Tuple[str, str]] = []
    for pair in covers:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"bad cover pair {pair!r}", text, 0, "[x, y]")
        pairs.append((str(pair[0]), str(pair[1])))
    known = {str(e) for e in elements}
    for x, y in pairs:
        if x not in known or y not in known:
            raise DomainError(f"cover ({x}, {y}) mentions an undeclared element")
    return FinitePoset.from_covers([str(e) for e in elements], pairs)


def _from_lines(text: str) -> FinitePoset:
    elements: List[str] = []
    covers: List[Tuple[str, str]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        chain = [label.strip() for label in body.split("<")]
        if body.strip():
            if any(not label or any(c.isspace() for c in label) for label in chain):
                raise ParseError("bad poset line", text, offset, "'x < y < ...' or a single label")
            for label in chain:
                if label not in elements:
                    elements.append(label)
            covers.extend(zip(chain, chain[1:]))
        offset += len(line)
    return FinitePoset.from_covers(elements, covers)


def parse_poset(text: str) -> FinitePoset:
    """JSON when the document starts with '{', line format otherwise"""
    if text.lstrip().startswith("{"):
        return _from_json(text)
    return _from_lines(text)


def poset_to_document(P: FinitePoset) -> Dict[str, Any]:
    return {"elements": list(P.elements), "covers": [list(pair) for pair in P.cover_pairs()]}


def format_poset(P: FinitePoset) -> str:
    """Line format: one line per cover pair, isolated elements on their own line"""
    covers = P.cover_pairs()
    touched = {x for pair in covers for x in pair}
    lines = [f"{x} < {y}" for x, y in covers]
    lines.extend(e for e in P.elements if e not in touched)
    return "\n".join(lines)


def format_embedding(E: DivEmbedding) -> str:
    return "\n".join(f"{label}={value}" for label, value in E.items())


def embedding_to_document(E: DivEmbedding) -> Dict[str, int]:
    return dict(E.items())
