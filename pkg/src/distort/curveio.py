"""Curve file formats.

Two equivalent on-disk forms, shared by every tool in this repo:

* plain text: header ``CURVE <open|closed> <n>``, then n lines of three
  decimal coordinates;
* JSON: ``{"closed": bool, "vertices": [[x, y, z], ...]}``.

Coordinates are printed with Python's shortest round-trip repr, so a
write/read cycle is bit-exact.
"""

from __future__ import annotations

import json
import os
import tempfile

from .geometry import PolyCurve

__all__ = [
    "CurveFormatError",
    "read_curve",
    "parse_curve_text",
    "parse_curve_json",
    "format_curve_text",
    "format_curve_json",
    "write_curve",
    "atomic_write_text",
]


class CurveFormatError(ValueError):
    """Malformed curve file."""


def format_curve_text(curve: PolyCurve) -> str:
    kind = "closed" if curve.closed else "open"
    lines = [f"CURVE {kind} {curve.n_vertices}"]
    for x, y, z in curve.vertices:
        lines.append(f"{x!r} {y!r} {z!r}")
    return "\n".join(lines) + "\n"


def parse_curve_text(text: str) -> PolyCurve:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise CurveFormatError("empty curve file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "CURVE":
        raise CurveFormatError(f"bad header: {lines[0]!r}")
    if header[1] not in ("open", "closed"):
        raise CurveFormatError(f"bad open/closed flag: {header[1]!r}")
    try:
        n = int(header[2])
    except ValueError:
        raise CurveFormatError(f"bad vertex count: {header[2]!r}") from None
    if len(lines) - 1 != n:
        raise CurveFormatError(f"expected {n} vertex lines, found {len(lines) - 1}")
    verts = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise CurveFormatError(f"bad vertex line: {ln!r}")
        try:
            verts.append([float(p) for p in parts])
        except ValueError:
            raise CurveFormatError(f"bad coordinate in line: {ln!r}") from None
    try:
        return PolyCurve(verts, closed=(header[1] == "closed"))
    except ValueError as exc:
        raise CurveFormatError(str(exc)) from None


def format_curve_json(curve: PolyCurve) -> str:
    obj = {"closed": curve.closed, "vertices": curve.vertices.tolist()}
    return json.dumps(obj, indent=None) + "\n"


def parse_curve_json(text: str) -> PolyCurve:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CurveFormatError(f"bad JSON: {exc}") from None
    if not isinstance(obj, dict) or "closed" not in obj or "vertices" not in obj:
        raise CurveFormatError("JSON curve needs 'closed' and 'vertices' fields")
    if not isinstance(obj["closed"], bool):
        raise CurveFormatError("'closed' must be a boolean")
    try:
        return PolyCurve(obj["vertices"], closed=obj["closed"])
    except ValueError as exc:
        raise CurveFormatError(str(exc)) from None


def parse_curve(text: str) -> PolyCurve:
    """Parse either format, sniffing by the first non-space character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_curve_json(text)
    return parse_curve_text(text)


def read_curve(path) -> PolyCurve:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_curve(fh.read())


def atomic_write_text(path, text: str) -> None:
    """Write via a temp file + rename so readers never see partial output."""
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_curve(path, curve: PolyCurve, fmt: str = "text") -> None:
    if fmt == "text":
        atomic_write_text(path, format_curve_text(curve))
    elif fmt == "json":
        atomic_write_text(path, format_curve_json(curve))
    else:
        raise ValueError(f"unknown curve format {fmt!r}")
