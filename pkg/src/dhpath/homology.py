"""Regular path homology of a truncated path complex."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .labels import pkey
from .linalg import QQ, Matrix
from .pathcomplex import PCMorphism, PathComplex, is_regular, regular_boundary


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class OmegaComplex:
    """Omega modules and their boundary maps, dimensions 0..top.

    ``omega_basis[n]`` lists sparse coefficient vectors (dicts index -> value)
    over ``allowed_basis[n]``; ``boundary[n]`` lists, per Omega_n basis
    vector, its image in Omega_(n-1) coordinates (also sparse).
    ``boundary[0]`` is the zero map.
    """

    view: PathComplex
    top: int
    field: object
    allowed_basis: tuple
    omega_basis: tuple
    anchors: tuple
    boundary: tuple

    def dim(self, n):
        return len(self.omega_basis[n])

    def omega_matrix(self, n) -> Matrix:
        """Columns are the Omega_n basis vectors over the allowed paths."""
        rows = len(self.allowed_basis[n])
        return Matrix.from_columns([_dense(v, rows, self.field) for v in self.omega_basis[n]], rows)

    def boundary_matrix(self, n) -> Matrix:
        rows = self.dim(n - 1) if n > 0 else 0
        return Matrix.from_columns([_dense(v, rows, self.field) for v in self.boundary[n]], rows)

    def boundary_rank(self, n) -> int:
        return linalg.sparse_rank(self.boundary[n], self.field) if n > 0 else 0

    def raw_boundary(self, n, vector):
        """Boundary of a sparse chain over ``allowed_basis[n]``, keyed by path."""
        out = {}
        F = self.field
        for i, c in vector.items():
            for face, s in regular_boundary(self.allowed_basis[n][i]).items():
                out[face] = F.reduce(out.get(face, F.zero) + s * c)
        return {k: v for k, v in out.items() if v != 0}

    def to_omega(self, n, vector):
        """Coordinates in ``omega_basis[n]`` of a sparse chain, or None."""
        return linalg.sparse_coordinates(self.anchors[n], self.omega_basis[n], vector, self.field)


def _dense(v, n, field):
    out = [field.zero] * n
    for i, x in v.items():
        out[i] = x
    return tuple(out)


def build_omega(view: PathComplex, N: int, field=QQ) -> OmegaComplex:
    """Omega_n for n <= N + 1: chains of allowed paths with allowed boundary."""
    if N < 0:
        raise ValueError("N must be non-negative")
    if view.max_length < N + 1:
        raise TruncationError(
            f"dimension {N} needs paths of length {N + 1}, view stops at {view.max_length}")
    top = N + 1
    allowed = tuple(view.allowed[: top + 1])
    index = [{p: i for i, p in enumerate(level)} for level in allowed]
    omegas, anchors, faces = [], [], []
    for n in range(top + 1):
        cols = [regular_boundary(p) for p in allowed[n]]
        faces.append(cols)
        # one constraint row per non-allowed face
        rows = {}
        if n > 0:
            for j, d in enumerate(cols):
                for face, s in d.items():
                    if face not in index[n - 1]:
                        rows.setdefault(face, {})[j] = s
        constraint = [rows[f] for f in sorted(rows, key=pkey)]
        basis, free = linalg.sparse_kernel(constraint, len(cols), field)
        omegas.append(tuple(basis))
        anchors.append(tuple(free))
    boundaries = [tuple({} for _ in omegas[0])]
    for n in range(1, top + 1):
        columns = []
        for w in omegas[n]:
            img = {}
            for j, c in w.items():
                for face, s in faces[n][j].items():
                    i = index[n - 1].get(face)
                    if i is not None:
                        img[i] = field.reduce(img.get(i, field.zero) + s * c)
            img = {i: x for i, x in img.items() if x != 0}
            coords = linalg.sparse_coordinates(anchors[n - 1], omegas[n - 1], img, field)
            if coords is None:
                raise AssertionError("boundary left the Omega module")
            columns.append({i: x for i, x in enumerate(coords) if x != 0})
        boundaries.append(tuple(columns))
    return OmegaComplex(view, top, field, allowed, tuple(omegas), tuple(anchors), tuple(boundaries))


@dataclass(frozen=True)
class BettiTable:
    dim_omega: tuple
    rank_boundary: tuple
    betti: tuple
    field: str
    max_length: int

    def as_dict(self):
        return {
            "betti": list(self.betti),
            "dim_omega": list(self.dim_omega),
            "rank_boundary": list(self.rank_boundary),
            "field": self.field,
            "max_length": self.max_length,
        }


def betti_from_omega(om: OmegaComplex, N: int | None = None) -> BettiTable:
    N = om.top - 1 if N is None else N
    ranks = [om.boundary_rank(n) for n in range(N + 2)]
    dims = [om.dim(n) for n in range(N + 1)]
    b = tuple(dims[n] - ranks[n] - ranks[n + 1] for n in range(N + 1))
    return BettiTable(tuple(dims), tuple(ranks[: N + 1]), b, om.field.name, om.view.max_length)


def betti(view: PathComplex, N: int, field=QQ) -> BettiTable:
    """Betti numbers in dimensions 0..N."""
    return betti_from_omega(build_omega(view, N, field), N)


@dataclass(frozen=True)
class HomologyBasis:
    """Cycle representatives (Omega coordinates) plus the boundary spanning set."""

    n: int
    representatives: tuple
    boundaries: tuple

    def coordinates(self, cycle, field):
        vecs = list(self.boundaries) + list(self.representatives)
        sol = linalg.solve_in_span(vecs, cycle, field)
        if sol is None:
            raise ValueError("not a cycle")
        return sol[len(self.boundaries):]


def homology_basis(om: OmegaComplex, n: int) -> HomologyBasis:
    """First-come greedy choice of kernel vectors independent modulo boundaries."""
    if n + 1 > om.top:
        raise TruncationError(f"homology in dimension {n} needs Omega up to {n + 1}")
    F = om.field
    cycles = linalg.kernel_basis(om.boundary_matrix(n), F)
    images = list(om.boundary_matrix(n + 1).columns())
    keep = linalg.independent_columns(images, F) if images else []
    images = [images[i] for i in keep]
    pool = images + cycles
    chosen = [i - len(images) for i in linalg.independent_columns(pool, F) if i >= len(images)] if pool else []
    return HomologyBasis(n, tuple(cycles[i] for i in chosen), tuple(images))


def chain_map_matrix(m: PCMorphism, om_src: OmegaComplex, om_tgt: OmegaComplex, n: int) -> Matrix:
    """Matrix of the chain map Omega_n(source) -> Omega_n(target).

    A path whose image is irregular goes to 0.
    """
    F = om_src.field
    tindex = {p: i for i, p in enumerate(om_tgt.allowed_basis[n])}
    images = []
    for p in om_src.allowed_basis[n]:
        q = m.image(p)
        if not is_regular(q):
            images.append(None)
            continue
        i = tindex.get(q)
        if i is None:
            raise ValueError(f"image of {p} is not an allowed path of the target")
        images.append(i)
    columns = []
    for w in om_src.omega_basis[n]:
        v = {}
        for j, c in w.items():
            i = images[j]
            if i is not None:
                v[i] = F.reduce(v.get(i, F.zero) + c)
        v = {i: x for i, x in v.items() if x != 0}
        coords = om_tgt.to_omega(n, v)
        if coords is None:
            raise ValueError(f"chain map does not preserve Omega in dimension {n}")
        columns.append(coords)
    return Matrix.from_columns(columns, om_tgt.dim(n))


def induced_homology_map(m: PCMorphism, n: int, field=QQ, om_src=None, om_tgt=None) -> Matrix:
    """Matrix of H_n(source) -> H_n(target) in the greedy homology bases."""
    om_src = om_src or build_omega(m.source, n, field)
    om_tgt = om_tgt or build_omega(m.target, n, field)
    hs, ht = homology_basis(om_src, n), homology_basis(om_tgt, n)
    C = chain_map_matrix(m, om_src, om_tgt, n)
    columns = [ht.coordinates(C.apply(z), om_src.field) for z in hs.representatives]
    return Matrix.from_columns(columns, len(ht.representatives))
