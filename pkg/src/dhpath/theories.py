"""The four path complexes attached to a directed hypergraph."""
from __future__ import annotations

from dataclasses import dataclass

from .homology import betti
from .hypergraph import (DirectedHypergraph, Digraph, Hypergraph, arrow_multiplicity, epsilon,
                         natural, natural_vertex_map)
from .labels import pkey, render, sorted_vertices
from .linalg import QQ
from .pathcomplex import PathComplex, digraph_complex

KINDS = ("connective", "bold", "nondirected", "natural")


@dataclass(frozen=True)
class TheorySpec:
    kind: str
    density: int = 1
    max_dim: int = 2
    field: object = QQ

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown theory {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.density < 1:
            raise ValueError("density must be at least 1")
        if self.max_dim < 0:
            raise ValueError("max_dim must be non-negative")

    @property
    def functorial(self):
        return not (self.kind == "connective" and self.density > 1)


def connective_digraph(G: DirectedHypergraph, c: int) -> Digraph:
    mult = arrow_multiplicity(G)
    return Digraph.build(G.vertices, (pair for pair, k in mult.items() if k >= c))


def connective_view(G: DirectedHypergraph, c: int, L: int) -> PathComplex:
    """Steps v -> w carried by at least ``c`` distinct arrows."""
    if c < 1:
        raise ValueError("density must be at least 1")
    return digraph_complex(connective_digraph(G, c), L, label=f"connective(c={c})")


# Bold membership runs a nondeterministic automaton over the path.  States:
#   ("A", e)     still inside origin(e), e not yet crossed
#   ("B", e)     whole path so far inside end(e), no crossing
#   ("M", d, e)  crossed d, now inside end(d) & origin(e), e next to cross
#   ("F", e)     crossed e last, now inside end(e)
# Every live M(d, e) comes with a live F(d), so a non-empty state set accepts.

def _bold_start(G, v):
    states = set()
    for i, e in enumerate(G.edges):
        if v in e.origin:
            states.add(("A", i))
        if v in e.end:
            states.add(("B", i))
    return frozenset(states)


def _bold_step(G, states, v):
    E = G.edges
    out = set()
    for s in states:
        tag = s[0]
        if tag == "A":
            e = E[s[1]]
            if v in e.origin:
                out.add(s)
            elif v in e.end:
                out.update(_crossed(G, s[1], v))
        elif tag == "B":
            if v in E[s[1]].end:
                out.add(s)
        elif tag == "M":
            d, e = E[s[1]], E[s[2]]
            if v in d.end and v in e.origin:
                out.add(s)
            if v in e.end:
                out.update(_crossed(G, s[2], v))
        elif v in E[s[1]].end:
            out.add(s)
    return frozenset(out)


def _crossed(G, i, v):
    yield ("F", i)
    for j, e in enumerate(G.edges):
        if v in e.origin:
            yield ("M", i, j)


def bold_contains(G: DirectedHypergraph, path) -> bool:
    """Whether ``path`` is allowed in the bold complex of G."""
    path = tuple(path)
    vset = set(G.vertices)
    for v in path:
        if v not in vset:
            raise ValueError(f"{render(v)} is not a vertex")
    if not path:
        return False
    states = _bold_start(G, path[0])
    for v in path[1:]:
        states = _bold_step(G, states, v)
        if not states:
            return False
    return bool(states)


def bold_view(G: DirectedHypergraph, L: int) -> PathComplex:
    vertices = sorted_vertices(G.vertices)
    level = [((v,), _bold_start(G, v)) for v in vertices]
    allowed = [tuple(p for p, _ in level)]
    step_cache = {}
    for _ in range(L):
        nxt = []
        for p, states in level:
            for w in vertices:
                if w == p[-1]:
                    continue
                key = (states, w)
                if key not in step_cache:
                    step_cache[key] = _bold_step(G, states, w)
                new = step_cache[key]
                if new:
                    nxt.append((p + (w,), new))
        level = nxt
        allowed.append(tuple(sorted((p for p, _ in nxt), key=pkey)))
    vset = set(G.vertices)

    def contains(path):
        return bool(path) and all(v in vset for v in path) and bold_contains(G, path)

    return PathComplex(vertices, L, tuple(allowed), contains, "bold")


def hypergraph_view(X: Hypergraph, q: int, L: int, label=None) -> PathComplex:
    """Paths whose windows of min(q, #vertices) consecutive vertices lie in an edge."""
    if q < 1:
        raise ValueError("density must be at least 1")
    edges = [frozenset(e) for e in X.edges]
    vset = frozenset(X.vertices)
    in_edge_cache = {}

    def in_edge(window):
        s = frozenset(window)
        r = in_edge_cache.get(s)
        if r is None:
            r = in_edge_cache[s] = any(s <= e for e in edges)
        return r

    def contains(path):
        path = tuple(path)
        if not path or any(v not in vset for v in path):
            return False
        w = min(q, len(path))
        return all(in_edge(path[i:i + w]) for i in range(len(path) - w + 1))

    vertices = sorted_vertices(X.vertices)
    level = [(v,) for v in vertices if in_edge((v,))]
    allowed = [tuple(level)]
    for _ in range(L):
        nxt = []
        for p in level:
            for w in vertices:
                if w != p[-1] and in_edge((p + (w,))[-q:]):
                    nxt.append(p + (w,))
        level = sorted(nxt, key=pkey)
        allowed.append(tuple(level))
    return PathComplex(vertices, L, tuple(allowed), contains, label or f"hypergraph(q={q})")


def nondirected_view(G: DirectedHypergraph, q: int, L: int) -> PathComplex:
    return hypergraph_view(epsilon(G), q, L, label=f"nondirected(q={q})")


def natural_view(G: DirectedHypergraph, L: int) -> PathComplex:
    return digraph_complex(natural(G), L, label="natural")


def theory_view(G: DirectedHypergraph, spec: TheorySpec, L: int | None = None) -> PathComplex:
    L = spec.max_dim + 1 if L is None else L
    if spec.kind == "connective":
        return connective_view(G, spec.density, L)
    if spec.kind == "bold":
        return bold_view(G, L)
    if spec.kind == "nondirected":
        return nondirected_view(G, spec.density, L)
    return natural_view(G, L)


def theory_vertex_map(kind: str, G: DirectedHypergraph, vertex_map) -> dict:
    """Vertex map between the complexes of ``kind`` induced by a hypergraph morphism."""
    if kind == "natural":
        return natural_vertex_map(G, vertex_map)
    return dict(vertex_map)


def theory_betti(G: DirectedHypergraph, spec: TheorySpec):
    return betti(theory_view(G, spec), spec.max_dim, spec.field)
