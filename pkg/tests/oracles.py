"""Independent reference computations used to check the engine.

Nothing here imports the engine's linear algebra or path enumeration.
Ranks are either pure minor expansion (small matrices) or certified:
a nonzero r x r minor bounds the rank below, and ``cols - r`` verified,
visibly independent kernel vectors bound it above.
"""
from fractions import Fraction
from itertools import combinations, product

import sympy


def laplace_det(M):
    n = len(M)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(M[0][0])
    total = Fraction(0)
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        total += (-1) ** j * Fraction(M[0][j]) * laplace_det(minor)
    return total


def minor_rank(M):
    """Largest k with a nonzero k x k minor, by cofactor expansion."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for k in range(min(rows, cols), 0, -1):
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                if laplace_det([[M[i][j] for j in c] for i in r]) != 0:
                    return k
    return 0


def certified_rank(M, ncols):
    """Rank of a list-of-rows matrix, with both bounds checked independently."""
    if not M or ncols == 0:
        return 0
    S = sympy.Matrix(M)
    _, pivots = S.rref()
    r = len(pivots)
    if r:
        _, row_pivots = S.T.rref()
        sub = S.extract(list(row_pivots), list(pivots))
        assert sub.det(method="berkowitz") != 0
    free = [j for j in range(ncols) if j not in pivots]
    kernel = S.nullspace()
    assert len(kernel) == len(free)
    for v, j in zip(kernel, free):
        assert (S * v).is_zero_matrix
        assert [v[k] for k in free] == [1 if k == j else 0 for k in free]
    return r


def regular_paths(vertices, n):
    for p in product(vertices, repeat=n + 1):
        if all(p[i] != p[i + 1] for i in range(n)):
            yield p


def faces(p):
    """Non-degenerate faces of p with signs (irregular faces dropped)."""
    out = []
    for k in range(len(p)):
        q = p[:k] + p[k + 1:]
        if all(q[i] != q[i + 1] for i in range(len(q) - 1)):
            out.append(((-1) ** k, q))
    return out


def naive_betti(vertices, allowed, N):
    """Betti numbers 0..N straight from the definitions.

    ``allowed`` is a membership predicate on vertex tuples.
    """
    vertices = list(vertices)
    A = [[p for p in regular_paths(vertices, n) if allowed(p)] for n in range(N + 2)]
    omega = []
    for n in range(N + 2):
        if n == 0:
            omega.append(sympy.eye(len(A[0])))
            continue
        below = set(A[n - 1])
        bad = sorted({q for p in A[n] for _, q in faces(p) if q not in below})
        if not A[n]:
            omega.append(sympy.zeros(0, 0))
            continue
        C = sympy.zeros(len(bad), len(A[n]))
        bi = {q: i for i, q in enumerate(bad)}
        for j, p in enumerate(A[n]):
            for s, q in faces(p):
                if q in bi:
                    C[bi[q], j] += s
        basis = C.nullspace() if bad else [sympy.eye(len(A[n]))[:, j] for j in range(len(A[n]))]
        omega.append(sympy.Matrix.hstack(*basis) if basis else sympy.zeros(len(A[n]), 0))
    dims = [omega[n].shape[1] for n in range(N + 2)]
    ranks = [0]
    for n in range(1, N + 2):
        if dims[n] == 0 or not A[n - 1]:
            ranks.append(0)
            continue
        idx = {q: i for i, q in enumerate(A[n - 1])}
        D = sympy.zeros(len(A[n - 1]), len(A[n]))
        for j, p in enumerate(A[n]):
            for s, q in faces(p):
                if q in idx:
                    D[idx[q], j] += s
        B = D * omega[n]
        ranks.append(certified_rank(B.tolist(), B.shape[1]))
    return tuple(dims[n] - ranks[n] - ranks[n + 1] for n in range(N + 1))


# ---------------------------------------------------------------- membership

def connective_allowed(edges, c=1):
    def ok(p):
        return all(sum(1 for A, B in edges if v in A and w in B) >= c for v, w in zip(p, p[1:]))
    return ok


def digraph_allowed(arrows):
    arrows = set(arrows)
    return lambda p: all((v, w) in arrows for v, w in zip(p, p[1:]))


def nondirected_allowed(edges, q):
    sets = [A | B for A, B in edges]

    def ok(p):
        w = min(q, len(p))
        return all(any(set(p[i:i + w]) <= s for s in sets) for i in range(len(p) - w + 1))
    return ok


def bold_allowed(edges):
    """Search over every choice of crossing steps and crossing edges."""
    edges = list(edges)

    def inside(seg, S):
        return all(v in S for v in seg)

    def ok(p):
        if any(inside(p, A) or inside(p, B) for A, B in edges):
            return True
        steps = range(len(p) - 1)
        for r in range(1, len(p)):
            for cuts in combinations(steps, r):
                for es in product(edges, repeat=r):
                    if _bold_split(p, cuts, es, inside):
                        return True
        return False
    return ok


def _bold_split(p, cuts, es, inside):
    A0, _ = es[0]
    if not inside(p[: cuts[0] + 1], A0):
        return False
    for i, k in enumerate(cuts):
        A, B = es[i]
        if p[k] not in A or p[k + 1] not in B:
            return False
        end = cuts[i + 1] + 1 if i + 1 < len(cuts) else len(p)
        seg = p[k + 1: end]
        if i + 1 < len(cuts):
            if not (inside(seg, B) and inside(seg, es[i + 1][0])):
                return False
        elif not inside(seg, B):
            return False
    return True


def natural_allowed(edges):
    arrows = {(frozenset(A), frozenset(B)) for A, B in edges}
    return lambda p: all((v, w) in arrows for v, w in zip(p, p[1:]))


def natural_vertices(edges):
    return {frozenset(S) for e in edges for S in e}


def edge_pairs(G):
    return [(set(e.origin), set(e.end)) for e in G.edges]
