"""Directed hypergraphs, hypergraphs, digraphs and the constructions between them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .labels import render, sorted_subset, sorted_vertices, vkey

PRODUCT_SUBSET_LIMIT = 20  # log2 of the largest subset family hypergraph_product will scan


class Arrow(NamedTuple):
    origin: frozenset
    end: frozenset

    def __str__(self):
        return f"{render(self.origin)} -> {render(self.end)}"


def arrow(origin, end) -> Arrow:
    return Arrow(frozenset(origin), frozenset(end))


class InvalidInput(ValueError):
    """Raised when an object fails validation; ``violations`` lists why."""

    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class DirectedHypergraph:
    vertices: tuple
    edges: tuple

    @classmethod
    def build(cls, vertices, edges):
        return cls(sorted_vertices(vertices), tuple(arrow(a, b) for a, b in edges))

    @classmethod
    def from_arrows(cls, edges):
        """Vertex set taken as the union of all origins and ends."""
        edges = [arrow(a, b) for a, b in edges]
        return cls(sorted_vertices(v for e in edges for v in e.origin | e.end), tuple(edges))

    def validate(self):
        return validate(self)

    def check(self):
        bad = validate(self)
        if bad:
            raise InvalidInput(bad)
        return self


def validate(G: DirectedHypergraph) -> list:
    """Violations of the directed-hypergraph axioms; empty when G is valid."""
    out = []
    vset = set(G.vertices)
    if not G.vertices:
        out.append("vertices must be non-empty")
    if len(vset) != len(G.vertices):
        dup = [v for v, k in Counter(G.vertices).items() if k > 1]
        out.append(f"duplicate vertex {render(dup[0])}")
    seen = {}
    for i, e in enumerate(G.edges):
        if not e.origin:
            out.append(f"arrow {i}: empty origin")
        if not e.end:
            out.append(f"arrow {i}: empty end")
        both = e.origin & e.end
        if both:
            out.append(f"arrow {i} ({e}): origin and end share {render(sorted_subset(both)[0])}")
        stray = (e.origin | e.end) - vset
        if stray:
            out.append(f"arrow {i} ({e}): unknown vertex {render(sorted_subset(stray)[0])}")
        if e in seen:
            out.append(f"arrow {i} ({e}): duplicates arrow {seen[e]}")
        else:
            seen[e] = i
    covered = set().union(*(e.origin | e.end for e in G.edges)) if G.edges else set()
    for v in G.vertices:
        if v not in covered:
            out.append(f"vertex {render(v)} lies in no arrow")
    return out


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple
    edges: tuple
    strict: bool = False

    @classmethod
    def build(cls, vertices, edges, strict=False):
        uniq = []
        for e in edges:
            e = frozenset(e)
            if e not in uniq:
                uniq.append(e)
        return cls(sorted_vertices(vertices), tuple(sorted(uniq, key=vkey)), strict)

    def validate(self):
        out = []
        if not self.vertices:
            out.append("vertices must be non-empty")
        vset = set(self.vertices)
        for i, e in enumerate(self.edges):
            if not e:
                out.append(f"edge {i}: empty")
            if self.strict and len(e) < 2:
                out.append(f"edge {i} ({render(e)}): needs at least two vertices")
            if e - vset:
                out.append(f"edge {i} ({render(e)}): unknown vertex")
        if len(set(self.edges)) != len(self.edges):
            out.append("duplicate edges")
        covered = set().union(*self.edges) if self.edges else set()
        for v in self.vertices:
            if v not in covered:
                out.append(f"vertex {render(v)} lies in no edge")
        return out

    def check(self):
        bad = self.validate()
        if bad:
            raise InvalidInput(bad)
        return self


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    arrows: tuple

    @classmethod
    def build(cls, vertices, arrows):
        arrows = sorted(set((v, w) for v, w in arrows), key=lambda a: (vkey(a[0]), vkey(a[1])))
        return cls(sorted_vertices(vertices), tuple(arrows))

    def validate(self):
        out = []
        vset = set(self.vertices)
        for v, w in self.arrows:
            if v == w:
                out.append(f"loop at {render(v)}")
            if v not in vset or w not in vset:
                out.append(f"arrow {render(v)}->{render(w)} has an unknown endpoint")
        return out

    def check(self):
        bad = self.validate()
        if bad:
            raise InvalidInput(bad)
        return self

    def is_connected(self):
        return len(components(self.vertices, self.arrows)) <= 1


def components(vertices, pairs):
    """Connected components of the underlying undirected graph."""
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, w in pairs:
        parent[find(v)] = find(w)
    groups = {}
    for v in vertices:
        groups.setdefault(find(v), []).append(v)
    return [tuple(g) for g in groups.values()]


def as_directed(D: Digraph) -> DirectedHypergraph:
    """A digraph as the directed hypergraph of its singleton arrows."""
    return DirectedHypergraph(D.vertices, tuple(arrow({v}, {w}) for v, w in D.arrows))


def p_sets(G: DirectedHypergraph):
    """(origins, ends, origins | ends), each sorted."""
    p0 = sorted({e.origin for e in G.edges}, key=vkey)
    p1 = sorted({e.end for e in G.edges}, key=vkey)
    p01 = sorted(set(p0) | set(p1), key=vkey)
    return tuple(p0), tuple(p1), tuple(p01)


def gamma(G: DirectedHypergraph) -> Digraph:
    """v -> w whenever one arrow has v in its origin and w in its end."""
    return Digraph.build(G.vertices, ((v, w) for e in G.edges for v in e.origin for w in e.end))


def arrow_multiplicity(G: DirectedHypergraph) -> Counter:
    """How many distinct arrows carry each vertex pair from origin to end."""
    c = Counter()
    for e in set(G.edges):
        for v in e.origin:
            for w in e.end:
                c[v, w] += 1
    return c


def epsilon(G: DirectedHypergraph) -> Hypergraph:
    """Forget direction: one edge A | B per arrow, duplicates merged."""
    return Hypergraph.build(G.vertices, (e.origin | e.end for e in G.edges))


def natural(G: DirectedHypergraph) -> Digraph:
    """Digraph on the origins and ends, one arrow per hyperedge."""
    return Digraph.build(p_sets(G)[2], ((e.origin, e.end) for e in G.edges))


def natural_vertex_map(G, vertex_map):
    """Vertex map of the natural digraphs induced by a hypergraph vertex map."""
    return {C: frozenset(vertex_map[v] for v in C) for C in p_sets(G)[2]}


def box_product(G: DirectedHypergraph, D) -> DirectedHypergraph:
    """Box product with a connected digraph (or directed hypergraph) factor.

    Vertices are pairs ``(v, i)``.
    """
    H = as_directed(D) if isinstance(D, Digraph) else D
    if isinstance(D, Digraph):
        if not D.arrows:
            raise ValueError("digraph factor needs at least one arrow")
        if not D.is_connected():
            raise ValueError("digraph factor must be connected")
    p01_g = p_sets(G)[2]
    p01_h = p_sets(H)[2]
    cross = lambda A, C: frozenset((a, c) for a in A for c in C)
    edges = []
    for e in G.edges:
        for C in p01_h:
            edges.append(Arrow(cross(e.origin, C), cross(e.end, C)))
    for e in H.edges:
        for A in p01_g:
            edges.append(Arrow(cross(A, e.origin), cross(A, e.end)))
    vertices = sorted_vertices(product(G.vertices, H.vertices))
    return DirectedHypergraph(vertices, tuple(edges))


def digraph_box_product(D1: Digraph, D2: Digraph) -> Digraph:
    arrows = [((v, x), (w, x)) for v, w in D1.arrows for x in D2.vertices]
    arrows += [((v, x), (v, y)) for x, y in D2.arrows for v in D1.vertices]
    return Digraph.build(product(D1.vertices, D2.vertices), arrows)


def hypergraph_product(X: Hypergraph, Y: Hypergraph) -> Hypergraph:
    """Edges: subsets of V_X x V_Y projecting onto an edge of X and an edge of Y."""
    edges = []
    for ex in X.edges:
        for ey in Y.edges:
            cells = [(a, b) for a in sorted_subset(ex) for b in sorted_subset(ey)]
            if len(cells) > PRODUCT_SUBSET_LIMIT:
                raise ValueError(
                    f"edge pair {render(ex)} x {render(ey)} spans 2^{len(cells)} subsets; "
                    f"limit is 2^{PRODUCT_SUBSET_LIMIT}")
            for mask in range(1, 1 << len(cells)):
                S = [cells[i] for i in range(len(cells)) if mask >> i & 1]
                if {a for a, _ in S} == ex and {b for _, b in S} == ey:
                    edges.append(frozenset(S))
    return Hypergraph.build(product(X.vertices, Y.vertices), edges)


INTERVAL = Hypergraph.build(["0", "1"], [{"0"}, {"1"}, {"0", "1"}])


@dataclass(frozen=True, eq=False)
class DHMorphism:
    """Vertex map plus the forced arrow map (index of each image arrow)."""

    source: DirectedHypergraph
    target: DirectedHypergraph
    vertex_map: dict
    edge_map: tuple

    @property
    def images(self):
        return tuple(self.vertex_map[v] for v in self.source.vertices)

    def __call__(self, v):
        return self.vertex_map[v]

    def __eq__(self, other):
        return (isinstance(other, DHMorphism) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        body = ", ".join(f"{render(v)}->{render(w)}" for v, w in zip(self.source.vertices, self.images))
        return f"DHMorphism({body})"


class NotAMorphism(ValueError):
    def __init__(self, message, arrow_index=None):
        super().__init__(message)
        self.arrow_index = arrow_index


def _image(vertex_map, S):
    return frozenset(vertex_map[v] for v in S)


def dh_violation(G, H, vertex_map, index=None):
    """Index of the first arrow of G with no image arrow in H, or None."""
    index = index if index is not None else {e: i for i, e in enumerate(H.edges)}
    for i, e in enumerate(G.edges):
        if Arrow(_image(vertex_map, e.origin), _image(vertex_map, e.end)) not in index:
            return i
    return None


def check_dh_morphism(G, H, vertex_map) -> DHMorphism:
    missing = [v for v in G.vertices if v not in vertex_map]
    if missing:
        raise ValueError(f"vertex map is not defined on {render(missing[0])}")
    index = {e: i for i, e in enumerate(H.edges)}
    edge_map = []
    for i, e in enumerate(G.edges):
        img = Arrow(_image(vertex_map, e.origin), _image(vertex_map, e.end))
        j = index.get(img)
        if j is None:
            raise NotAMorphism(f"arrow {i} ({e}) maps to {img}, which is not an arrow of the target",
                               arrow_index=i)
        edge_map.append(j)
    return DHMorphism(G, H, {v: vertex_map[v] for v in G.vertices}, tuple(edge_map))


def identity(G) -> DHMorphism:
    return check_dh_morphism(G, G, {v: v for v in G.vertices})


def compose(g: DHMorphism, f: DHMorphism) -> DHMorphism:
    """g after f."""
    return check_dh_morphism(f.source, g.target, {v: g(f(v)) for v in f.source.vertices})


def random_hypergraph(rng, max_vertices=5, max_arrows=5, min_arrows=1) -> DirectedHypergraph:
    """A random valid directed hypergraph on labels "1".."n"."""
    n = rng.randint(2, max_vertices)
    labels = [str(i) for i in range(1, n + 1)]
    k = rng.randint(min_arrows, max_arrows)
    edges = []
    for _ in range(50 * k):
        if len(edges) == k:
            break
        pool = labels[:]
        rng.shuffle(pool)
        size = rng.randint(2, n)
        cut = rng.randint(1, size - 1)
        e = arrow(pool[:cut], pool[cut:size])
        if e not in edges:
            edges.append(e)
    return DirectedHypergraph.from_arrows(edges)

