"""
JSON documents for gauges, chains and reports.

Floats are written with 17 significant digits so that every double survives
a round trip.
"""

import json
import math
from typing import Any, Dict, Mapping

from .geometry import Chain, Circle, Gauge
from ..utils.validators import InputError, SteinerError

NUMBER_DIGITS = 17


def format_number(value: float, digits: int = NUMBER_DIGITS) -> str:
    if not math.isfinite(value):
        raise InputError(f"Cannot serialize non-finite number {value!r}")
    return format(value, f".{digits}g")


def _plain(obj: Any) -> Any:
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "item") and not isinstance(obj, Mapping):
        # numpy scalar
        return obj.item()
    return obj


def _write(obj: Any, digits: int, indent: int, level: int) -> str:
    obj = _plain(obj)
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_number(obj, digits)

    pad = "\n" + " " * (indent * (level + 1))
    close = "\n" + " " * (indent * level)
    if isinstance(obj, Mapping):
        if not obj:
            return "{}"
        items = [
            f"{json.dumps(str(key))}: {_write(obj[key], digits, indent, level + 1)}"
            for key in sorted(obj, key=str)
        ]
        return "{" + pad + ("," + pad).join(items) + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [_write(v, digits, indent, level + 1) for v in obj]
        return "[" + pad + ("," + pad).join(items) + close + "]"
    raise InputError(f"Cannot serialize {type(obj).__name__}")


def dumps(obj: Any, digits: int = NUMBER_DIGITS, indent: int = 2) -> str:
    """Deterministic JSON text: sorted keys, floats at a fixed number of significant digits"""
    return _write(obj, digits, indent, 0)


def chain_to_dict(chain: Chain) -> Dict[str, Any]:
    return {
        "gauge": chain.gauge.to_dict(),
        "phase": chain.phase,
        "circles": [c.to_dict() for c in chain.circles],
    }


def _number(doc: Mapping, key: str) -> float:
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"Field {key!r} must be a number, got {value!r}")
    return float(value)


def chain_from_dict(doc: Any) -> Chain:
    """Rebuild a chain document; the gauge is re-validated"""
    if not isinstance(doc, Mapping):
        raise InputError("Chain document must be a JSON object")
    gauge_doc, circles_doc = doc.get("gauge"), doc.get("circles")
    if not isinstance(gauge_doc, Mapping) or not isinstance(circles_doc, list):
        raise InputError("Chain document needs a 'gauge' object and a 'circles' list")
    n = gauge_doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"Gauge field 'n' must be an integer, got {n!r}")

    gauge = Gauge(_number(gauge_doc, "R"), _number(gauge_doc, "r"), _number(gauge_doc, "d"), n)
    circles = []
    for item in circles_doc:
        if not isinstance(item, Mapping):
            raise InputError("Every circle must be a JSON object")
        circles.append(Circle(_number(item, "cx"), _number(item, "cy"), _number(item, "radius")))
    phase = _number(doc, "phase") if "phase" in doc else 0.0
    return Chain(circles=tuple(circles), gauge=gauge, phase=phase)


def loads_chain(text: str) -> Chain:
    try:
        doc = json.loads(text)
    except ValueError as e:
        raise InputError(f"Invalid JSON: {e}") from e
    try:
        return chain_from_dict(doc)
    except SteinerError:
        raise
    except (TypeError, ValueError) as e:
        raise InputError(f"Malformed chain document: {e}") from e
