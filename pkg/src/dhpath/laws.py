"""Executable checks of the structural laws relating the constructions.

Each check returns a :class:`LawReport`; counterexamples are data, not errors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .homology import betti
from .hypergraph import (INTERVAL, DirectedHypergraph, box_product, digraph_box_product, epsilon,
                         gamma, hypergraph_product, natural, p_sets)
from .labels import pkey, render, render_path, sorted_subset
from .pathcomplex import cylinder, digraph_complex, from_oracle
from .theories import (bold_contains, bold_view, connective_view, hypergraph_view,
                       nondirected_view)
from .homotopy import line_digraph

I1 = line_digraph([True])


@dataclass(frozen=True)
class LawReport:
    law: str
    holds: bool
    detail: str = ""
    counterexample: object = None
    data: dict = field(default_factory=dict)

    def as_dict(self):
        ce = self.counterexample
        if isinstance(ce, tuple):
            ce = render_path(ce)
        return {"law": self.law, "holds": self.holds, "detail": self.detail,
                "counterexample": ce, "data": self.data}


def _first(paths):
    return min(paths, key=lambda p: (len(p), pkey(p))) if paths else None


def _inclusion(law, small, contains, what):
    bad = [p for p in small.paths() if not contains(p)]
    if bad:
        p = _first(bad)
        return LawReport(law, False, f"{render_path(p)} is in {what[0]} but not in {what[1]}", p,
                         {"paths_checked": len(small.paths())})
    return LawReport(law, True, f"{what[0]} is contained in {what[1]}",
                     data={"paths_checked": len(small.paths())})


def check_connective_cylinder(G: DirectedHypergraph, L: int = 3) -> LawReport:
    """Cylinder of the connective complex against the connective complex of G box I1."""
    law = "connective-cylinder"
    cyl = cylinder(connective_view(G, 1, L))
    box = connective_view(box_product(G, I1), 1, L)
    a, b = cyl.paths(), box.paths()
    if a == b:
        return LawReport(law, True, "path sets are equal", data={"paths": len(a)})
    only_cyl, only_box = a - b, b - a
    p = _first(only_cyl or only_box)
    where = "cylinder only" if only_cyl else "box product only"
    return LawReport(law, False, f"{render_path(p)}: {where}", p,
                     {"cylinder_only": len(only_cyl), "box_only": len(only_box)})


def check_bold_cylinder(G: DirectedHypergraph, L: int = 3) -> LawReport:
    box = box_product(G, I1)
    return _inclusion("bold-cylinder", cylinder(bold_view(G, L)),
                      lambda p: bold_contains(box, p), ("bold cylinder", "bold(G box I1)"))


def check_nondirected_cylinder(G: DirectedHypergraph, L: int = 3) -> LawReport:
    big = nondirected_view(box_product(G, I1), 2, L)
    return _inclusion("nondirected-cylinder", cylinder(nondirected_view(G, 2, L)), big.contains,
                      ("nondirected(q=2) cylinder", "nondirected(q=2) of G box I1"))


def product_witness(G: DirectedHypergraph):
    """First (v, w) with v in an origin, w in the same arrow's end, and no
    origin or end containing both."""
    p01 = p_sets(G)[2]
    for e in G.edges:
        for v in sorted_subset(e.origin):
            for w in sorted_subset(e.end):
                if not any(v in A and w in A for A in p01):
                    return ((v, "0"), (w, "1"))
    return None


def check_product_inclusion(G: DirectedHypergraph, q: int = 2, L: int = 3) -> LawReport:
    """Non-directed complex of G box I1 inside that of eps(G) x I, plus strictness."""
    if q < 2:
        raise ValueError("q must be at least 2")
    law = "product-inclusion"
    left = hypergraph_view(epsilon(box_product(G, I1)), q, L)
    right = hypergraph_view(hypergraph_product(epsilon(G), INTERVAL), q, L)
    inc = _inclusion(law, left, right.contains, ("left", "right"))
    if not inc.holds:
        return inc
    w = product_witness(G)
    data = dict(inc.data)
    if w is None:
        return LawReport(law, True, "inclusion holds; no strictness witness configuration",
                         data=data)
    strict = right.contains(w) and not left.contains(w)
    data["witness_confirmed"] = strict
    return LawReport(law, strict,
                     f"inclusion holds; {render_path(w)} is only on the right" if strict
                     else f"witness {render_path(w)} failed to separate the complexes", w, data)


def check_natural_box_product(G: DirectedHypergraph) -> LawReport:
    """natural(G box I1) against natural(G) box I1, relabelled by (C, i) -> C x {i}."""
    law = "natural-box-product"
    lhs = natural(box_product(G, I1))
    rhs = digraph_box_product(natural(G), I1)
    relabel = lambda x: frozenset((c, x[1]) for c in x[0])
    rv = {relabel(x) for x in rhs.vertices}
    ra = {(relabel(a), relabel(b)) for a, b in rhs.arrows}
    if set(lhs.vertices) != rv:
        diff = sorted(set(lhs.vertices) ^ rv, key=lambda v: render(v))
        return LawReport(law, False, f"vertex sets differ at {render(diff[0])}", diff[0])
    if set(lhs.arrows) != ra:
        a = sorted(set(lhs.arrows) ^ ra, key=lambda x: (render(x[0]), render(x[1])))[0]
        return LawReport(law, False, f"arrow sets differ at {render(a[0])} -> {render(a[1])}", a)
    return LawReport(law, True, "labelled digraphs are equal",
                     data={"vertices": len(rv), "arrows": len(ra)})


def check_connective_digraph(G: DirectedHypergraph, N: int = 2) -> LawReport:
    """Connective complex (density 1) against the digraph complex of gamma(G)."""
    law = "connective-digraph"
    a = betti(connective_view(G, 1, N + 1), N)
    b = betti(digraph_complex(gamma(G), N + 1), N)
    if a != b:
        return LawReport(law, False, f"Betti tables differ: {a.betti} vs {b.betti}",
                         data={"connective": a.as_dict(), "digraph": b.as_dict()})
    return LawReport(law, True, "equal Betti tables", data={"betti": list(a.betti)})


def full_complex(vertices, L):
    return from_oracle(vertices, L, lambda p: bool(p) and set(p) <= set(vertices), "full")


def check_full_complex(G: DirectedHypergraph, N: int = 2) -> LawReport:
    """Density-1 non-directed complex is the full path complex; Betti (1, 0, ...)."""
    law = "full-complex"
    view = nondirected_view(G, 1, N + 1)
    full = full_complex(G.vertices, N + 1)
    if view.paths() != full.paths():
        p = _first(view.paths() ^ full.paths())
        return LawReport(law, False, f"{render_path(p)} differs from the full complex", p)
    b = betti(view, N).betti
    expected = (1,) + (0,) * N
    return LawReport(law, b == expected, f"betti = {b}", data={"betti": list(b)})


def check_density_filtration(G: DirectedHypergraph, max_density: int = 3, L: int = 3) -> LawReport:
    """Raising the connective density only removes paths."""
    law = "density-filtration"
    prev = connective_view(G, 1, L)
    for c in range(2, max_density + 1):
        cur = connective_view(G, c, L)
        extra = cur.paths() - prev.paths()
        if extra:
            p = _first(extra)
            return LawReport(law, False, f"{render_path(p)} allowed at density {c} only", p)
        prev = cur
    return LawReport(law, True, f"nested for densities 1..{max_density}")


LAWS = {
    "connective-digraph": lambda G, L: check_connective_digraph(G, max(L - 1, 0)),
    "connective-cylinder": check_connective_cylinder,
    "bold-cylinder": check_bold_cylinder,
    "nondirected-cylinder": check_nondirected_cylinder,
    "product-inclusion": lambda G, L: check_product_inclusion(G, 2, L),
    "natural-box-product": lambda G, L: check_natural_box_product(G),
    "full-complex": lambda G, L: check_full_complex(G, max(L - 1, 0)),
    "density-filtration": lambda G, L: check_density_filtration(G, 3, L),
}
