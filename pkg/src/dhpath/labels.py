"""Vertex identifiers: ordering and rendering.

User vertices are strings.  Constructions build composite vertices:
product vertices are ``(v, i)`` tuples and subset vertices are frozensets.
All of them share one total order given by :func:`vkey`.
"""
from __future__ import annotations

import re
from functools import lru_cache

RESERVED = ("'", "|")

_CHUNK = re.compile(r"(\d+)")


@lru_cache(maxsize=1 << 16)
def vkey(v):
    """Sort key for a vertex; natural order on strings ("2" < "10")."""
    if isinstance(v, str):
        parts = _CHUNK.split(v)
        return (0, tuple((0, int(p), "") if p.isdigit() else (1, 0, p)
                         for p in parts if p))
    if isinstance(v, tuple):
        return (1, tuple(vkey(x) for x in v))
    if isinstance(v, frozenset):
        return (2, tuple(sorted(vkey(x) for x in v)))
    raise TypeError(f"unsupported vertex type {type(v).__name__}")


def pkey(path):
    return tuple(vkey(v) for v in path)


def sorted_vertices(vs):
    return tuple(sorted(set(vs), key=vkey))


def sorted_subset(s):
    return tuple(sorted(s, key=vkey))


def render(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, tuple):
        return "|".join(render(x) for x in v)
    if isinstance(v, frozenset):
        return "{" + "|".join(render(x) for x in sorted_subset(v)) + "}"
    raise TypeError(f"unsupported vertex type {type(v).__name__}")


def render_path(path) -> str:
    return "(" + " ".join(render(v) for v in path) + ")"


def check_label(label) -> str | None:
    """Return a complaint about a user label, or None if it is acceptable."""
    if not isinstance(label, str) or not label:
        return "vertex labels must be non-empty strings"
    if any(ch.isspace() for ch in label):
        return f"vertex label {label!r} contains whitespace"
    for r in RESERVED:
        if r in label:
            return f"vertex label {label!r} contains reserved character {r!r}"
    return None
