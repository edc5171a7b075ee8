"""Line-oriented sectioned instance file format.

Sections start with `[kind name]`; entries are `key = value` lines.  All
numbers are rational literals ("p/q" or integers); vectors are whitespace
separated, matrices use ';' row separators.  Unknown keys are rejected with
line numbers.  The format is diff-friendly by design.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from orderbands.rational import fmt, rat, vec


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class SpaceSpec:
    name: str
    kind: str                      # cone_rays | cone_inequalities | example
    data: Optional[tuple] = None   # rows for cones
    example: Optional[str] = None  # fixture name


@dataclass
class SubspaceSpec:
    name: str
    space: str
    kind: str                      # basis | kernel_coords | fixture_ideal
    data: Optional[tuple] = None
    coords: Optional[tuple] = None
    fixture_ideal: Optional[str] = None
    flags: tuple = ()


@dataclass
class QuerySpec:
    name: str
    op: str
    target: Optional[str] = None
    args: tuple = ()
    expect: Optional[str] = None


@dataclass
class InstanceFile:
    spaces: list[SpaceSpec] = field(default_factory=list)
    subspaces: list[SubspaceSpec] = field(default_factory=list)
    queries: list[QuerySpec] = field(default_factory=list)


_SPACE_KEYS = {"kind", "data", "example"}
_SUBSPACE_KEYS = {"space", "kind", "data", "coords", "ideal", "flags"}
_QUERY_KEYS = {"op", "target", "args", "expect"}
_FLAGS = {"directed", "solid", "band"}
_OPS = {
    "order_leq", "is_disjoint", "disjoint_complement", "band_generated",
    "is_band", "is_solid", "is_directed", "is_solvex", "is_s_closed",
    "is_o_closed", "is_pervasive", "is_fordable", "is_lattice_rdp",
    "theorem_suite", "example_table",
}


def parse_matrix(text: str, line: int) -> tuple:
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            rows.append(vec(chunk.split()))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(line, f"bad rational literal in {chunk!r}") from e
    if not rows:
        raise ParseError(line, "empty matrix")
    return tuple(rows)


def parse_instance(text: str) -> InstanceFile:
    out = InstanceFile()
    section: Optional[tuple] = None
    entries: dict = {}
    entry_lines: dict = {}

    def close(lineno: int):
        nonlocal section, entries
        if section is None:
            return
        kind, name = section
        if kind == "space":
            unknown = set(entries) - _SPACE_KEYS
            if unknown:
                raise ParseError(entry_lines[next(iter(unknown))],
                                 f"unknown key {next(iter(unknown))!r} in [space]")
            skind = entries.get("kind")
            if skind in ("cone_rays", "cone_inequalities"):
                if "data" not in entries:
                    raise ParseError(lineno, f"space {name!r} needs data")
                out.spaces.append(SpaceSpec(name, skind,
                                            parse_matrix(entries["data"],
                                                         entry_lines["data"])))
            elif skind == "example":
                if "example" not in entries:
                    raise ParseError(lineno, f"space {name!r} needs example = <name>")
                out.spaces.append(SpaceSpec(name, skind, example=entries["example"]))
            else:
                raise ParseError(lineno, f"bad space kind {skind!r}")
        elif kind == "subspace":
            unknown = set(entries) - _SUBSPACE_KEYS
            if unknown:
                raise ParseError(entry_lines[next(iter(unknown))],
                                 f"unknown key {next(iter(unknown))!r} in [subspace]")
            flags = tuple(entries.get("flags", "").split())
            bad = set(flags) - _FLAGS
            if bad:
                raise ParseError(entry_lines.get("flags", lineno),
                                 f"unknown flags {sorted(bad)}")
            skind = entries.get("kind", "basis")
            spec = SubspaceSpec(name, entries.get("space", ""), skind, flags=flags)
            if skind == "basis":
                spec.data = parse_matrix(entries["data"], entry_lines["data"]) \
                    if entries.get("data") else ()
            elif skind == "kernel_coords":
                spec.coords = tuple(int(x) for x in entries["coords"].split())
            elif skind == "fixture_ideal":
                spec.fixture_ideal = entries["ideal"]
            else:
                raise ParseError(lineno, f"bad subspace kind {skind!r}")
            if not spec.space:
                raise ParseError(lineno, f"subspace {name!r} needs a space")
            out.subspaces.append(spec)
        elif kind == "query":
            unknown = set(entries) - _QUERY_KEYS
            if unknown:
                raise ParseError(entry_lines[next(iter(unknown))],
                                 f"unknown key {next(iter(unknown))!r} in [query]")
            op = entries.get("op")
            if op not in _OPS:
                raise ParseError(entry_lines.get("op", lineno), f"unknown op {op!r}")
            args = tuple(entries.get("args", "").split(";")) if entries.get("args") else ()
            out.queries.append(QuerySpec(name, op, entries.get("target"),
                                         tuple(a.strip() for a in args),
                                         entries.get("expect")))
        else:
            raise ParseError(lineno, f"unknown section kind {kind!r}")
        section, entries = None, {}
        entry_lines.clear()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.startswith("["):
            close(lineno)
            header = line.strip()
            if not header.endswith("]"):
                raise ParseError(lineno, "unterminated section header")
            parts = header[1:-1].split()
            if len(parts) != 2:
                raise ParseError(lineno, "section header must be [kind name]")
            section = (parts[0], parts[1])
        else:
            if section is None:
                raise ParseError(lineno, "entry outside of any section")
            if "=" not in line:
                raise ParseError(lineno, "expected key = value")
            key, _, value = line.partition("=")
            key = key.strip()
            if key in entries:
                raise ParseError(lineno, f"duplicate key {key!r}")
            entries[key] = value.strip()
            entry_lines[key] = lineno
    close(len(text.splitlines()) + 1)
    return out


def serialize_matrix(rows) -> str:
    return " ; ".join(" ".join(fmt(x) for x in row) for row in rows)
