"""Report emission: JSON with rationals as "p/q" strings, stable ordering."""

from __future__ import annotations

import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction

from orderbands.rational import fmt
from orderbands.verdict import PredicateResult


def jsonable(obj):
    """Recursively convert workbench values into JSON-ready structures."""
    from orderbands.funcspace.elements import Iv, PAQuadElem, Region

    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, PredicateResult):
        return {
            "verdict": obj.verdict,
            "witness": jsonable(obj.witness),
            "justification": list(obj.justification),
        }
    if isinstance(obj, PAQuadElem):
        return {
            "domain": obj.domain,
            "breakpoints": [fmt(b) for b in obj.breakpoints],
            "values": [fmt(v) for v in obj.values],
            "quad": fmt(obj.quad),
            "overrides": [[fmt(p), fmt(v)] for p, v in obj.overrides],
        }
    if isinstance(obj, Region):
        return {
            "intervals": [[fmt(iv.lo), fmt(iv.hi), iv.lc, iv.rc] for iv in obj.ivs],
            "points": sorted(fmt(p) for p in obj.points),
            "at2": obj.at2,
            "marker": obj.marker,
        }
    if isinstance(obj, Iv):
        return [fmt(obj.lo), fmt(obj.hi), obj.lc, obj.rc]
    if isinstance(obj, frozenset):
        return sorted(jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if is_dataclass(obj):
        return {"type": type(obj).__name__, **jsonable(asdict(obj))}
    if callable(obj):
        return f"<rule {getattr(obj, '__name__', 'fn')}>"
    return repr(obj)


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=True) + "\n"


def text_lines(report: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    for key in sorted(report) if isinstance(report, dict) else []:
        val = report[key]
        if isinstance(val, dict):
            out.append(f"{pad}{key}:")
            out.extend(text_lines(val, indent + 1))
        elif isinstance(val, list):
            out.append(f"{pad}{key}: [{len(val)} entries]")
        else:
            out.append(f"{pad}{key}: {jsonable(val)}")
    return out
