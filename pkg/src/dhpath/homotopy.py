"""Line digraphs, homotopies of hypergraph morphisms, and bounded searches for them."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .hypergraph import (Digraph, DirectedHypergraph, DHMorphism, box_product, check_dh_morphism,
                         compose, dh_violation, identity)

MORPHISM_CAP = 10 ** 6


class CapExceeded(RuntimeError):
    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


def line_digraph(orientations) -> Digraph:
    """Path digraph on "0".."n"; True orients i -> i+1, False orients i+1 -> i."""
    orientations = list(orientations)
    labels = [str(i) for i in range(len(orientations) + 1)]
    arrows = [(labels[i], labels[i + 1]) if fwd else (labels[i + 1], labels[i])
              for i, fwd in enumerate(orientations)]
    return Digraph.build(labels, arrows)


@dataclass(frozen=True)
class HomotopyStep:
    """f0 ~1 f1 through ``homotopy``: G box I1 -> H, with I1 oriented ``forward``."""

    f0: DHMorphism
    f1: DHMorphism
    forward: bool
    homotopy: DHMorphism


@dataclass(frozen=True)
class HomotopyWitness:
    start: DHMorphism
    steps: tuple

    @property
    def end(self):
        return self.steps[-1].f1 if self.steps else self.start

    def __len__(self):
        return len(self.steps)

    def validate(self):
        """Re-check every step from scratch; raises on any inconsistency."""
        cur = self.start
        for s in self.steps:
            if s.f0 != cur:
                raise AssertionError("homotopy chain is broken")
            G = s.f0.source
            box = box_product(G, line_digraph([s.forward]))
            F = check_dh_morphism(box, s.f0.target, s.homotopy.vertex_map)
            for v in G.vertices:
                if F((v, "0")) != s.f0(v) or F((v, "1")) != s.f1(v):
                    raise AssertionError("homotopy does not restrict to its ends")
            cur = s.f1
        return True


def _require_parallel(f0, f1):
    if f0.source != f1.source or f0.target != f1.target:
        raise ValueError("morphisms must share source and target")


def one_step_homotopic(f0: DHMorphism, f1: DHMorphism):
    """A verified one-step homotopy from f0 to f1, or None.

    Both orientations of I1 are tried, 0 -> 1 first.  f ~1 f never holds:
    the crossing arrows would need origin == end.
    """
    _require_parallel(f0, f1)
    G, H = f0.source, f0.target
    index = {e: i for i, e in enumerate(H.edges)}
    for forward in (True, False):
        box = box_product(G, line_digraph([forward]))
        vmap = {(v, i): (f0(v) if i == "0" else f1(v)) for v, i in box.vertices}
        if dh_violation(box, H, vmap, index) is None:
            return HomotopyStep(f0, f1, forward, check_dh_morphism(box, H, vmap))
    return None


def morphisms(G: DirectedHypergraph, H: DirectedHypergraph, cap=MORPHISM_CAP):
    """Every morphism G -> H, in lexicographic order of vertex images."""
    count = len(H.vertices) ** len(G.vertices)
    if count > cap:
        raise CapExceeded(f"{count} candidate vertex maps exceed the cap of {cap}", count)
    index = {e: i for i, e in enumerate(H.edges)}
    out = []
    for images in product(H.vertices, repeat=len(G.vertices)):
        vmap = dict(zip(G.vertices, images))
        if dh_violation(G, H, vmap, index) is None:
            out.append(check_dh_morphism(G, H, vmap))
    return out


def homotopic(f: DHMorphism, g: DHMorphism, max_steps: int, cap=MORPHISM_CAP):
    """Shortest chain f ~1 ... ~1 g of at most ``max_steps`` steps, or None.

    Breadth-first over all morphisms G -> H; None only means "not within bound".
    """
    _require_parallel(f, g)
    if max_steps < 0:
        raise ValueError("max_steps must be non-negative")
    if f == g:
        return HomotopyWitness(f, ())
    space = morphisms(f.source, f.target, cap)
    parent = {f: None}
    frontier = deque([(f, 0)])
    while frontier:
        cur, depth = frontier.popleft()
        if depth == max_steps:
            continue
        for nxt in space:
            if nxt in parent:
                continue
            step = one_step_homotopic(cur, nxt)
            if step is None:
                continue
            parent[nxt] = step
            if nxt == g:
                steps = []
                node = nxt
                while parent[node] is not None:
                    steps.append(parent[node])
                    node = parent[node].f0
                w = HomotopyWitness(f, tuple(reversed(steps)))
                w.validate()
                return w
            frontier.append((nxt, depth + 1))
    return None


def homotopy_class(f: DHMorphism, max_steps: int, cap=MORPHISM_CAP) -> set:
    """Morphisms reachable from f in at most ``max_steps`` one-step moves."""
    space = morphisms(f.source, f.target, cap)
    seen = {f}
    layer = [f]
    for _ in range(max_steps):
        nxt = []
        for cur in layer:
            for m in space:
                if m not in seen and one_step_homotopic(cur, m) is not None:
                    seen.add(m)
                    nxt.append(m)
        if not nxt:
            break
        layer = nxt
    return seen


@dataclass(frozen=True)
class Equivalence:
    f: DHMorphism
    g: DHMorphism
    gf: HomotopyWitness
    fg: HomotopyWitness


def homotopy_equivalent(G, H, max_steps=2, cap=MORPHISM_CAP):
    """Morphisms f: G -> H, g: H -> G with gf ~ id and fg ~ id, or None within the caps."""
    forward = morphisms(G, H, cap)
    backward = morphisms(H, G, cap)
    idG, idH = identity(G), identity(H)
    near_idG = homotopy_class(idG, max_steps, cap)
    near_idH = homotopy_class(idH, max_steps, cap)
    for f in forward:
        for g in backward:
            gf, fg = compose(g, f), compose(f, g)
            if gf in near_idG and fg in near_idH:
                return Equivalence(f, g, homotopic(gf, idG, max_steps, cap),
                                   homotopic(fg, idH, max_steps, cap))
    return None
