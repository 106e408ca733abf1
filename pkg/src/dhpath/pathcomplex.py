"""Truncated path complexes and morphisms between them."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .labels import pkey, render_path, sorted_vertices

J0, J1 = "0", "1"


def is_regular(path) -> bool:
    return all(a != b for a, b in zip(path, path[1:]))


def regularize(path):
    """Collapse runs of equal consecutive vertices."""
    out = []
    for v in path:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


def regular_boundary(path) -> dict:
    """Alternating sum of faces with irregular faces dropped.

    >>> regular_boundary(("1", "2", "1"))
    {('2', '1'): 1, ('1', '2'): 1}
    """
    path = tuple(path)
    if not path:
        raise ValueError("empty path")
    if not is_regular(path):
        raise ValueError(f"irregular path {render_path(path)}")
    out = {}
    if len(path) == 1:
        return out
    for k in range(len(path)):
        face = path[:k] + path[k + 1:]
        if not is_regular(face):
            continue
        c = out.get(face, 0) + (-1) ** k
        if c:
            out[face] = c
        else:
            out.pop(face, None)
    return out


@dataclass(frozen=True)
class PathComplex:
    """A path complex cut off at ``max_length`` (paths of at most L+1 vertices).

    ``allowed[n]`` holds the allowed regular paths with ``n + 1`` vertices,
    sorted by vertex order.  ``contains`` answers membership for arbitrary
    paths up to the truncation, stationary steps included.
    """

    vertices: tuple
    max_length: int
    allowed: tuple
    contains: Callable = field(compare=False, repr=False)
    label: str = field(default="", compare=False)

    def paths(self, n=None) -> frozenset:
        if n is not None:
            return frozenset(self.allowed[n]) if n <= self.max_length else frozenset()
        return frozenset(p for level in self.allowed for p in level)

    def counts(self):
        return tuple(len(level) for level in self.allowed)

    def __contains__(self, path):
        return self.contains(tuple(path))

    def truncate(self, L):
        if L > self.max_length:
            raise ValueError("cannot extend a truncated complex")
        return PathComplex(self.vertices, L, self.allowed[:L + 1], self.contains, self.label)


def enumerate_by_extension(vertices, L, contains):
    """Level-by-level enumeration using truncation closure.

    Every allowed path with n+2 vertices has an allowed prefix with n+1
    vertices, so extending the previous level is exhaustive.
    """
    vertices = sorted_vertices(vertices)
    level = [(v,) for v in vertices if contains((v,))]
    allowed = [tuple(level)]
    for _ in range(L):
        nxt = [p + (w,) for p in level for w in vertices if w != p[-1] and contains(p + (w,))]
        level = nxt
        allowed.append(tuple(sorted(nxt, key=pkey)))
    return tuple(allowed)


def from_oracle(vertices, L, contains, label="") -> PathComplex:
    vertices = sorted_vertices(vertices)
    return PathComplex(vertices, L, enumerate_by_extension(vertices, L, contains), contains, label)


def digraph_complex(D, L, label="digraph") -> PathComplex:
    """Paths along the arrows of a loop-free digraph."""
    arrows = frozenset(D.arrows)
    vset = frozenset(D.vertices)
    succ = {v: [] for v in D.vertices}
    for v, w in D.arrows:
        succ[v].append(w)

    def contains(path):
        if not path or any(v not in vset for v in path):
            return False
        return all(a == b or (a, b) in arrows for a, b in zip(path, path[1:]))

    vertices = sorted_vertices(D.vertices)
    level = [(v,) for v in vertices]
    allowed = [tuple(level)]
    for _ in range(L):
        level = sorted((p + (w,) for p in level for w in succ[p[-1]]), key=pkey)
        allowed.append(tuple(level))
    return PathComplex(vertices, L, tuple(allowed), contains, label)


def cylinder(view: PathComplex) -> PathComplex:
    """The cylinder on two copies of the vertex set.

    Bottom copy is ``(v, "0")``, top copy ``(v, "1")``.  Paths: both copies
    of every allowed path, and for each allowed path (i0..in) and each k the
    path (i0..ik ik' i(k+1)'..in').
    """
    if view.max_length < 1:
        raise ValueError("cylinder needs max_length >= 1")
    L = view.max_length
    bottom = lambda p: tuple((v, J0) for v in p)
    top = lambda p: tuple((v, J1) for v in p)
    levels = [[] for _ in range(L + 1)]
    for n, level in enumerate(view.allowed):
        for p in level:
            levels[n].append(bottom(p))
            levels[n].append(top(p))
            if n + 1 <= L:
                for k in range(n + 1):
                    levels[n + 1].append(bottom(p[:k + 1]) + top(p[k:]))
    allowed = tuple(tuple(sorted(set(lv), key=pkey)) for lv in levels)
    base = view.contains

    def contains(path):
        path = tuple(path)
        if not path or len(path) > L + 1:
            return False
        if any(not (isinstance(x, tuple) and len(x) == 2 and x[1] in (J0, J1)) for x in path):
            return False
        sides = [x[1] for x in path]
        plain = tuple(x[0] for x in path)
        if J1 not in sides or J0 not in sides:
            return base(plain)
        k = sides.index(J1)
        if J0 in sides[k:]:
            return False
        if plain[k] != plain[k - 1]:
            return False
        return base(plain[:k] + plain[k + 1:])

    vertices = sorted_vertices([(v, j) for v in view.vertices for j in (J0, J1)])
    return PathComplex(vertices, L, allowed, contains, f"cylinder({view.label})")


class NotAMorphism(ValueError):
    """A vertex map that fails the morphism condition; ``witness`` says where."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True, eq=False)
class PCMorphism:
    source: PathComplex
    target: PathComplex
    vertex_map: dict

    def __call__(self, v):
        return self.vertex_map[v]

    def image(self, path):
        return tuple(self.vertex_map[v] for v in path)


def pc_violation(source: PathComplex, target: PathComplex, vertex_map):
    """Shortest allowed path of ``source`` whose image is not allowed, or None."""
    missing = [v for v in source.vertices if v not in vertex_map]
    if missing:
        raise ValueError(f"vertex map is not defined on {missing[0]!r}")
    L = min(source.max_length, target.max_length)
    for n in range(L + 1):
        for p in source.allowed[n]:
            if not target.contains(tuple(vertex_map[v] for v in p)):
                return p
    return None


def check_pc_morphism(source, target, vertex_map) -> PCMorphism:
    bad = pc_violation(source, target, vertex_map)
    if bad is not None:
        img = tuple(vertex_map[v] for v in bad)
        raise NotAMorphism(
            f"path {render_path(bad)} maps to {render_path(img)}, which is not allowed",
            witness=bad)
    return PCMorphism(source, target, dict(vertex_map))
