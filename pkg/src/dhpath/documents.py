"""JSON documents for hypergraphs, digraphs and vertex maps; bundled fixtures."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .hypergraph import DirectedHypergraph, Digraph, Hypergraph, arrow, validate
from .labels import check_label, render, sorted_subset

KINDS = ("directed-hypergraph", "digraph", "hypergraph", "morphism")

_FIELDS = {
    "directed-hypergraph": {"kind", "description", "vertices", "edges"},
    "digraph": {"kind", "description", "vertices", "arrows"},
    "hypergraph": {"kind", "description", "vertices", "edges", "strict"},
    "morphism": {"kind", "description", "vertex_map"},
}


class DocumentError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Document:
    kind: str
    value: object
    description: str = ""


def _line_of(text, needle, occurrence=0):
    pos = -1
    for _ in range(occurrence + 1):
        pos = text.find(needle, pos + 1)
        if pos < 0:
            return None
    return text.count("\n", 0, pos) + 1


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise DocumentError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _labels(text, values, what):
    if not isinstance(values, list):
        raise DocumentError(f"{what} must be a list")
    seen = {}
    for v in values:
        bad = check_label(v)
        if bad:
            raise DocumentError(bad, _line_of(text, json.dumps(v)) if isinstance(v, str) else None)
        if v in seen:
            raise DocumentError(f"duplicate vertex {v!r} in {what}",
                                _line_of(text, json.dumps(v), seen[v]))
        seen[v] = seen.get(v, 0) + 1
    return values


def _infer_kind(obj):
    if "vertex_map" in obj:
        return "morphism"
    if "arrows" in obj:
        return "digraph"
    edges = obj.get("edges")
    if isinstance(edges, list) and edges and isinstance(edges[0], list):
        return "hypergraph"
    return "directed-hypergraph"


def parse_document(text: str) -> Document:
    """Strict parse: unknown fields, duplicates and invalid objects are errors."""
    try:
        obj = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    kind = obj.get("kind") or _infer_kind(obj)
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}")
    unknown = sorted(set(obj) - _FIELDS[kind])
    if unknown:
        raise DocumentError(f"unknown field {unknown[0]!r}", _line_of(text, json.dumps(unknown[0])))
    desc = obj.get("description", "")
    if kind == "morphism":
        vm = obj.get("vertex_map")
        if not isinstance(vm, dict):
            raise DocumentError("vertex_map must be an object")
        for k, v in vm.items():
            for lab in (k, v):
                bad = check_label(lab)
                if bad:
                    raise DocumentError(bad)
        return Document(kind, dict(vm), desc)
    vertices = obj.get("vertices")
    if not vertices:
        raise DocumentError("vertices must be non-empty")
    _labels(text, vertices, "vertices")
    if kind == "digraph":
        arrows = obj.get("arrows", [])
        pairs = []
        for i, a in enumerate(arrows):
            if not (isinstance(a, list) and len(a) == 2 and all(isinstance(x, str) for x in a)):
                raise DocumentError(f"arrow {i} must be a pair of labels")
            if tuple(a) in pairs:
                raise DocumentError(f"arrow {i} repeats an earlier arrow")
            pairs.append(tuple(a))
        D = Digraph.build(vertices, pairs)
        _raise_on(text, D.validate(), "arrows")
        return Document(kind, D, desc)
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise DocumentError("edges must be a list")
    if kind == "hypergraph":
        es = []
        for i, e in enumerate(edges):
            if not isinstance(e, list):
                raise DocumentError(f"edge {i} must be a list of labels")
            _labels(text, e, f"edge {i}")
            if frozenset(e) in es:
                raise DocumentError(f"edge {i} repeats an earlier edge")
            es.append(frozenset(e))
        X = Hypergraph.build(vertices, es, strict=bool(obj.get("strict", False)))
        _raise_on(text, X.validate(), "edges")
        return Document(kind, X, desc)
    arrows = []
    for i, e in enumerate(edges):
        if not isinstance(e, dict) or set(e) != {"origin", "end"}:
            raise DocumentError(f"arrow {i} must have exactly the fields 'origin' and 'end'",
                                _line_of(text, '"origin"', i))
        _labels(text, e["origin"], f"origin of arrow {i}")
        _labels(text, e["end"], f"end of arrow {i}")
        arrows.append(arrow(e["origin"], e["end"]))
    G = DirectedHypergraph.build(vertices, arrows)
    problems = validate(G)
    if problems:
        first = problems[0]
        line = None
        if first.startswith("arrow "):
            idx = int(first.split()[1].rstrip(":"))
            line = _line_of(text, '"origin"', idx)
        raise DocumentError("; ".join(problems), line)
    return Document(kind, G, desc)


def _raise_on(text, problems, what):
    if problems:
        raise DocumentError("; ".join(problems))


def to_document(value, description="") -> dict:
    if isinstance(value, DirectedHypergraph):
        doc = {"kind": "directed-hypergraph",
               "vertices": [render(v) for v in value.vertices],
               "edges": [{"origin": [render(v) for v in sorted_subset(e.origin)],
                          "end": [render(v) for v in sorted_subset(e.end)]} for e in value.edges]}
    elif isinstance(value, Digraph):
        doc = {"kind": "digraph", "vertices": [render(v) for v in value.vertices],
               "arrows": [[render(v), render(w)] for v, w in value.arrows]}
    elif isinstance(value, Hypergraph):
        doc = {"kind": "hypergraph", "vertices": [render(v) for v in value.vertices],
               "edges": [[render(v) for v in sorted_subset(e)] for e in value.edges]}
        if value.strict:
            doc["strict"] = True
    elif isinstance(value, dict):
        doc = {"kind": "morphism", "vertex_map": {render(k): render(v) for k, v in value.items()}}
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
    if description:
        doc["description"] = description
    return doc


def dumps(value, description="") -> str:
    return json.dumps(to_document(value, description), indent=2) + "\n"


def digest(value) -> str:
    canon = json.dumps(to_document(value), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def fixture_names():
    root = resources.files("dhpath.fixtures")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_text(name: str) -> str:
    path = resources.files("dhpath.fixtures") / f"{name}.json"
    if not path.is_file():
        raise DocumentError(f"{name!r} is neither a file nor a bundled fixture")
    return path.read_text(encoding="utf-8")


def load_fixture(name: str):
    return parse_document(fixture_text(name)).value


def read_input(ref: str) -> tuple:
    """(Document, source name) from a file path or a bundled fixture name."""
    p = Path(ref)
    if p.is_file():
        return parse_document(p.read_text(encoding="utf-8")), ref
    return parse_document(fixture_text(ref)), ref


@dataclass(frozen=True)
class Report:
    """What a command did, to what, and what came out."""

    command: dict
    inputs: dict
    result: dict
    version: str
    field: str | None = None
    max_length: int | None = None

    def to_json(self) -> str:
        body = {"command": self.command, "inputs": self.inputs, "result": self.result,
                "version": self.version, "field": self.field, "max_length": self.max_length}
        return json.dumps(body, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        obj = json.loads(text)
        return cls(obj["command"], obj["inputs"], obj["result"], obj["version"],
                   obj.get("field"), obj.get("max_length"))
