"""Line-oriented text format for monomial algebras.

::

    # Two vertices, a 2-cycle, one zero relation
    field: Q            # or "field: F 2"
    vertices: 1 2
    arrows:
      alpha: 1 -> 2
      beta: 2 -> 1
    relations:
      beta alpha

Instead of ``relations:`` a file may say ``truncate: n`` (all paths of
length n are zero).  ``#`` starts a comment.  Relations may also be given
inline, separated by ``;``: ``relations: beta alpha; alpha beta``.
"""

from __future__ import annotations

import hashlib
import json
import re

from .errors import AlgebraFormatError
from .quiver import MonomialAlgebra, Quiver

_HEADER = re.compile(r"^(field|vertices|arrows|relations|truncate)\s*:\s*(.*)$")
_ARROW = re.compile(r"^(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")


def _parse_field(spec: str, lineno: int) -> int:
    parts = spec.split()
    if parts == ["Q"]:
        return 0
    if len(parts) == 2 and parts[0] == "F" and parts[1].isdigit():
        return int(parts[1])
    raise AlgebraFormatError(f"line {lineno}: field must be 'Q' or 'F p', got {spec!r}")


def parse_algebra(text: str) -> MonomialAlgebra:
    char = 0
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    relations: list[tuple[list[str], int]] = []
    truncate: int | None = None
    section = None
    seen: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if section == "arrows" and "->" in line:
            m = _ARROW.match(line)
            if not m:
                raise AlgebraFormatError(f"line {lineno}: expected 'name: source -> target'")
            arrows.append(m.groups())
            continue
        h = _HEADER.match(line)
        if h:
            key, rest = h.group(1), h.group(2).strip()
            if key in seen:
                raise AlgebraFormatError(f"line {lineno}: duplicate '{key}' section")
            seen.add(key)
            section = key
            if key == "field":
                char = _parse_field(rest, lineno)
            elif key == "vertices":
                vertices = rest.split()
                if not vertices:
                    raise AlgebraFormatError(f"line {lineno}: no vertices listed")
            elif key == "truncate":
                if not rest.isdigit():
                    raise AlgebraFormatError(f"line {lineno}: truncate needs an integer")
                truncate = int(rest)
            elif key == "relations" and rest:
                relations.extend((r.split(), lineno) for r in rest.split(";") if r.strip())
            elif key == "arrows" and rest:
                raise AlgebraFormatError(f"line {lineno}: list arrows on their own lines")
            continue
        if section == "relations":
            relations.extend((r.split(), lineno) for r in line.split(";") if r.strip())
            continue
        raise AlgebraFormatError(f"line {lineno}: cannot parse {line!r}")

    if vertices is None:
        raise AlgebraFormatError("missing 'vertices:' line")
    if relations and truncate is not None:
        raise AlgebraFormatError("give either relations or truncate, not both")
    quiver = Quiver.build(vertices, arrows)
    words = []
    for names, lineno in relations:
        if len(names) < 2:
            raise AlgebraFormatError(f"line {lineno}: relation {' '.join(names)!r} has length < 2")
        try:
            words.append(tuple(quiver.arrow_index(n) for n in names))
        except AlgebraFormatError as e:
            raise AlgebraFormatError(f"line {lineno}: {e}") from None
    return MonomialAlgebra(quiver, tuple(words), truncate, char)


def read_algebra(path) -> MonomialAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def format_algebra(A: MonomialAlgebra) -> str:
    q = A.quiver
    lines = [f"field: {'Q' if A.char == 0 else f'F {A.char}'}", "vertices: " + " ".join(q.vertices), "arrows:"]
    for a in q.arrows:
        lines.append(f"  {a.name}: {q.vertices[a.source]} -> {q.vertices[a.target]}")
    if A.truncation is not None:
        lines.append(f"truncate: {A.truncation}")
    if A.relations:
        lines.append("relations:")
        lines.extend("  " + q.word_str(r) for r in A.relations)
    return "\n".join(lines) + "\n"


def canonical_hash(A: MonomialAlgebra) -> str:
    """Hash of the presentation up to renaming vertices and arrows.

    Only declaration indices enter the hash, so renaming that keeps the
    declaration order leaves it unchanged.
    """
    q = A.quiver
    payload = {
        "char": A.char,
        "vertices": len(q.vertices),
        "arrows": [[a.source, a.target] for a in q.arrows],
        "relations": sorted(list(r) for r in A.relations),
        "truncate": A.truncation,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]
