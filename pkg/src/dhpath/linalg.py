"""Exact linear algebra over the rationals and over prime fields.

Vectors are tuples of field elements; matrices are :class:`Matrix`.
Rational elements are :class:`fractions.Fraction`, prime-field elements
are ints in ``[0, p)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm


class Rationals:
    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x):
        return Fraction(x)

    def inv(self, a):
        return 1 / a

    def reduce(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self):
        return f"Fp:{self.p}"

    @property
    def characteristic(self):
        return self.p

    zero = 0
    one = 1

    def __call__(self, x):
        x = Fraction(x)
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
        return x.numerator * pow(den, -1, self.p) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def reduce(self, a):
        return a % self.p


def _is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """``"Q"`` or ``"Fp:<prime>"``."""
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad field descriptor {text!r}") from None
        return GF(p)
    raise ValueError(f"bad field descriptor {text!r}")


@dataclass(frozen=True)
class Matrix:
    """Dense matrix, row-major.  Entries are stored as given."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = tuple(tuple(r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [tuple(c) for c in columns]
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self):
        return Matrix(self.cols, self.rows, tuple(self.columns()))

    def apply(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.entries)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        oc = other.columns()
        return Matrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in oc) for r in self.entries))

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def tolist(self):
        return [list(r) for r in self.entries]


def _as_rows(M):
    if isinstance(M, Matrix):
        return M.entries, M.cols
    rows = [tuple(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def _sparse(rows):
    return [{j: x for j, x in enumerate(r) if x != 0} for r in rows]


def sparse_rref(rows, field):
    """Reduced row echelon form of sparse rows (dicts column -> value).

    Returns ``[(pivot column, row), ...]`` sorted by pivot column; each row
    has a 1 at its pivot and 0 at every other pivot column.  The result is
    the unique RREF of the row space, whatever the input row order.
    """
    piv = {}
    holders = {}  # column -> pivot columns whose row is non-zero there
    for r in rows:
        r = {c: field(x) for c, x in r.items() if x != 0}
        for c in [c for c in r if c in piv]:
            f = r.get(c)
            if not f:
                continue
            for cc, x in piv[c].items():
                y = field.reduce(r.get(cc, field.zero) - f * x)
                if y != 0:
                    r[cc] = y
                else:
                    r.pop(cc, None)
        if not r:
            continue
        lead = min(r)
        inv = field.inv(r[lead])
        r = {c: field.reduce(x * inv) for c, x in r.items()}
        for pc in list(holders.get(lead, ())):
            prow = piv[pc]
            f = prow[lead]
            for cc, x in r.items():
                y = field.reduce(prow.get(cc, field.zero) - f * x)
                if y != 0:
                    if cc not in prow:
                        holders.setdefault(cc, set()).add(pc)
                    prow[cc] = y
                else:
                    prow.pop(cc, None)
                    holders.get(cc, set()).discard(pc)
        piv[lead] = r
        for cc in r:
            if cc != lead:
                holders.setdefault(cc, set()).add(lead)
    return sorted(piv.items())


def _int_row(r):
    fr = {c: Fraction(x) for c, x in r.items()}
    d = lcm(*(x.denominator for x in fr.values())) if fr else 1
    return {c: int(x * d) for c, x in fr.items()}


def _fraction_free_rank(rows):
    """Forward elimination on integer rows without division.

    A row is reduced by ``row <- p * row - a * pivot`` where ``p`` is the
    pivot entry, then divided by the gcd of its entries to keep it small.
    """
    piv = {}
    rank_ = 0
    for r in rows:
        r = {c: x for c, x in r.items() if x}
        while r:
            lead = min(r)
            prow = piv.get(lead)
            if prow is None:
                g = gcd(*r.values())
                piv[lead] = {c: x // g for c, x in r.items()}
                rank_ += 1
                break
            p, a = prow[lead], r[lead]
            new = {c: p * x for c, x in r.items()}
            for c, x in prow.items():
                y = new.get(c, 0) - a * x
                if y:
                    new[c] = y
                else:
                    new.pop(c, None)
            g = gcd(*new.values()) if new else 1
            r = {c: x // g for c, x in new.items()} if g > 1 else new
    return rank_


def sparse_rank(rows, field=QQ) -> int:
    """Rank of sparse rows (dicts column -> value)."""
    if field == QQ:
        return _fraction_free_rank([_int_row(r) for r in rows])
    return len(sparse_rref(rows, field))


def rank(M, field=QQ) -> int:
    rows, _ = _as_rows(M)
    return sparse_rank(_sparse(rows), field)


def sparse_kernel(rows, ncols, field):
    """Null space basis as sparse vectors, with the free column of each."""
    red = sparse_rref(rows, field)
    pivcols = {pc for pc, _ in red}
    free = [c for c in range(ncols) if c not in pivcols]
    vecs = {f: {f: field.one} for f in free}
    for pc, r in red:
        for c, x in r.items():
            if c != pc:
                vecs[c][pc] = field.reduce(-x)
    return [vecs[f] for f in free], free


def _dense(v, n, field):
    out = [field.zero] * n
    for i, x in v.items():
        out[i] = x
    return tuple(out)


def kernel_basis(M, field=QQ) -> list:
    """Basis of the right null space in reduced-echelon normal form.

    The vector attached to free column ``f`` has a 1 at ``f``, zeros at every
    other free column, and ``f`` is its last non-zero position.
    """
    rows, ncols = _as_rows(M)
    basis, _ = sparse_kernel(_sparse(rows), ncols, field)
    return [_dense(v, ncols, field) for v in basis]


@lru_cache(maxsize=64)
def _positions(anchors):
    return {a: k for k, a in enumerate(anchors)}


def sparse_coordinates(anchors, basis, v, field=QQ):
    """Coordinates of sparse ``v`` in a basis from :func:`sparse_kernel`, or None."""
    pos = _positions(tuple(anchors))
    coeffs = [field.zero] * len(anchors)
    acc = {}
    for i, c in v.items():
        k = pos.get(i)
        if k is not None and c != 0:
            coeffs[k] = field(c)
            for j, x in basis[k].items():
                acc[j] = field.reduce(acc.get(j, field.zero) + coeffs[k] * x)
    for i in set(acc) | set(v):
        if field.reduce(field(v.get(i, 0)) - acc.get(i, field.zero)) != 0:
            return None
    return tuple(coeffs)


def solve_in_span(basis, target, field=QQ):
    """Coefficients ``c`` with ``sum(c[i] * basis[i]) == target``, or None.

    Raises ValueError if the vectors do not all have the same length.
    """
    n = len(target)
    if any(len(b) != n for b in basis):
        raise ValueError("dimension mismatch")
    k = len(basis)
    rows = [{j: basis[j][i] for j in range(k) if basis[j][i] != 0} for i in range(n)]
    for i in range(n):
        if target[i] != 0:
            rows[i][k] = target[i]
    red = sparse_rref(rows, field)
    if any(pc == k for pc, _ in red):
        return None
    coeffs = [field.zero] * k
    for pc, r in red:
        coeffs[pc] = r.get(k, field.zero)
    return tuple(coeffs)


def independent_columns(vectors, field=QQ):
    """Indices of the greedy (first-come) maximal independent subset."""
    if not vectors:
        return []
    n = len(vectors[0])
    rows = [{j: v[i] for j, v in enumerate(vectors) if v[i] != 0} for i in range(n)]
    return [pc for pc, _ in sparse_rref(rows, field)]
