"""
CLI output - line-oriented text by default, JSON under --json

Every printed value re-parses with the matching input parser.
"""

import json
import sys
from typing import Any, Optional, TextIO

from src.bigcell.topology import PointCertificate
from src.core.errors import BigCellError, ParseError
from src.core.supernat import SupernaturalNumber, format_supernatural
from src.poset.posetlab import DivEmbedding
from src.tower.layout import SlotLayout
from src.tower.matrices import TowerMatrix, format_matrix
from src.tower.pgl import PglElement


def to_jsonable(value: Any) -> Any:
    """Result value → JSON-compatible document"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, SupernaturalNumber):
        return format_supernatural(value)
    if isinstance(value, TowerMatrix):
        return format_matrix(value)
    if isinstance(value, PglElement):
        return format_matrix(value.as_matrix())
    if isinstance(value, SlotLayout):
        return {"n": value.n, "slots": list(value.slots)}
    if isinstance(value, DivEmbedding):
        return dict(value.items())
    if isinstance(value, PointCertificate):
        if value.is_member:
            return {"kind": value.kind.value}
        return {"kind": value.kind.value, "n": value.n, "family": list(value.family)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, int):
        return value
    return str(value)


def to_text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, PointCertificate):
        if value.is_member:
            return "member"
        return f"nonpoint n={value.n} family=" + ",".join(str(m) for m in value.family)
    if isinstance(value, DivEmbedding):
        return "\n".join(f"{label}={image}" for label, image in value.items())
    if isinstance(value, (list, tuple)):
        return ",".join(to_text(v) for v in value)
    if isinstance(value, dict):
        return "\n".join(f"{k}={to_text(v)}" for k, v in value.items())
    if isinstance(value, (SupernaturalNumber, TowerMatrix, PglElement)):
        return to_jsonable(value)
    return str(value)


def emit(value: Any, as_json: bool, stream: Optional[TextIO] = None):
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps({"result": to_jsonable(value)}, ensure_ascii=False) + "\n")
    else:
        stream.write(to_text(value) + "\n")


def emit_error(error: BigCellError, as_json: bool, stream: Optional[TextIO] = None):
    stream = stream or sys.stderr
    if as_json:
        document = {"error": str(error), "kind": type(error).__name__}
        if isinstance(error, ParseError):
            document["position"] = error.position
            document["expected"] = error.expected
        stream.write(json.dumps(document, ensure_ascii=False) + "\n")
    else:
        stream.write(f"error: {error}\n")
