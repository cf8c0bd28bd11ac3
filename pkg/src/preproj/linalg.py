"""Exact linear algebra over Q or GF(p), backed by FLINT matrices.

Vectors are rows.  A subspace is stored as a matrix whose rows are its
reduced row echelon basis, which doubles as a canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

DEFAULT_PRIME = 32003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The scalar field: rationals when ``prime`` is None, else GF(prime)."""

    def __init__(self, prime: int | None = None):
        if prime is not None and not is_prime(prime):
            raise ValueError(f"{prime} is not prime")
        self.prime = prime

    @property
    def characteristic(self) -> int:
        return self.prime or 0

    def __repr__(self) -> str:
        return "QQ" if self.prime is None else f"GF({self.prime})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and other.prime == self.prime

    def __hash__(self) -> int:
        return hash(("Field", self.prime))

    def __reduce__(self):
        return (Field, (self.prime,))

    # -- scalars ---------------------------------------------------------

    def coerce(self, x):
        """Turn an int, Fraction or FLINT scalar into something the matrix
        constructors accept."""
        if self.prime is None:
            if isinstance(x, Fraction):
                return flint.fmpq(x.numerator, x.denominator)
            return x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.prime) % self.prime
        if isinstance(x, flint.fmpq):
            return int(x.p) * pow(int(x.q), -1, self.prime) % self.prime
        return int(x) % self.prime

    def to_python(self, x) -> int | Fraction:
        if self.prime is not None:
            return int(x)
        if isinstance(x, flint.fmpq):
            if x.q == 1:
                return int(x.p)
            return Fraction(int(x.p), int(x.q))
        return x

    # -- matrices --------------------------------------------------------

    def matrix(self, nrows: int, ncols: int, entries: Sequence | None = None):
        if entries is None:
            if self.prime is None:
                return flint.fmpq_mat(nrows, ncols)
            return flint.nmod_mat(nrows, ncols, self.prime)
        if self.prime is None:
            ents = [flint.fmpq(e.numerator, e.denominator) if isinstance(e, Fraction) else e
                    for e in entries]
            return flint.fmpq_mat(nrows, ncols, ents)
        return flint.nmod_mat(nrows, ncols, [self.coerce(e) for e in entries], self.prime)

    def raw(self, nrows: int, ncols: int, entries: list):
        """Matrix from entries already in FLINT form (no coercion)."""
        if self.prime is None:
            return flint.fmpq_mat(nrows, ncols, entries)
        return flint.nmod_mat(nrows, ncols, entries, self.prime)

    def from_rows(self, rows: Sequence[Sequence], ncols: int):
        return self.matrix(len(rows), ncols, [x for row in rows for x in row])

    def zero(self, nrows: int, ncols: int):
        return self.matrix(nrows, ncols)

    def identity(self, n: int):
        ents = [0] * (n * n)
        for i in range(n):
            ents[i * n + i] = 1
        return self.matrix(n, n, ents)

    def unit_rows(self, indices: Sequence[int], ncols: int):
        ents = [0] * (len(indices) * ncols)
        for r, c in enumerate(indices):
            ents[r * ncols + c] = 1
        return self.matrix(len(indices), ncols, ents)

    def key(self, M) -> tuple:
        """Hashable canonical form of a matrix."""
        if self.prime is None:
            return (M.nrows(), M.ncols(), tuple(M.entries()))
        return (M.nrows(), M.ncols(), tuple(int(x) for x in M.entries()))

    def to_lists(self, M) -> list[list]:
        return [[self.to_python(x) for x in row] for row in M.tolist()]


QQ = Field()


def field_of(M) -> Field:
    if isinstance(M, flint.nmod_mat):
        return Field(int(M.modulus()))
    return QQ


# -- structural helpers ------------------------------------------------------


def is_zero(M) -> bool:
    return all(x == 0 for x in M.entries())


def submatrix(F: Field, M, rows: Sequence[int] | None = None,
              cols: Sequence[int] | None = None):
    nr, nc = M.nrows(), M.ncols()
    rows = range(nr) if rows is None else rows
    cols = range(nc) if cols is None else cols
    e = M.entries()
    return F.raw(len(rows), len(cols), [e[i * nc + j] for i in rows for j in cols])


def vstack(F: Field, mats: Iterable, ncols: int):
    ents: list = []
    nrows = 0
    for M in mats:
        if M.nrows() == 0:
            continue
        assert M.ncols() == ncols, (M.ncols(), ncols)
        ents.extend(M.entries())
        nrows += M.nrows()
    return F.raw(nrows, ncols, ents) if nrows else F.zero(0, ncols)


def hstack(F: Field, mats: Sequence, nrows: int):
    widths = [M.ncols() for M in mats]
    total = sum(widths)
    rowlists = [M.tolist() for M in mats]
    ents: list = []
    for i in range(nrows):
        for rl in rowlists:
            if rl:
                ents.extend(rl[i])
    return F.matrix(nrows, total, ents)


def block_diag(F: Field, mats: Sequence):
    nr = sum(M.nrows() for M in mats)
    nc = sum(M.ncols() for M in mats)
    ents = [0] * (nr * nc)
    r0 = c0 = 0
    for M in mats:
        mr, mc = M.nrows(), M.ncols()
        e = M.entries()
        for i in range(mr):
            base = (r0 + i) * nc + c0
            ents[base:base + mc] = e[i * mc:(i + 1) * mc]
        r0 += mr
        c0 += mc
    return F.matrix(nr, nc, ents)


# -- elimination -------------------------------------------------------------


def rref(M) -> tuple:
    """Return ``(R, pivots)``: the nonzero rows of the reduced echelon form
    and their pivot columns."""
    F = field_of(M)
    if M.nrows() == 0 or M.ncols() == 0:
        return F.zero(0, M.ncols()), ()
    R, rank = M.rref()
    nc = M.ncols()
    e = R.entries()
    zero = e[0] * 0 if e else 0
    pivots = []
    for i in range(rank):
        row = e[i * nc:(i + 1) * nc]
        for j, x in enumerate(row):
            if x != zero:
                pivots.append(j)
                break
    return F.raw(rank, nc, e[:rank * nc]), tuple(pivots)


def rank(M) -> int:
    if M.nrows() == 0 or M.ncols() == 0:
        return 0
    return M.rank()


def row_space(M):
    """Canonical basis (reduced echelon rows) of the row space."""
    F = field_of(M)
    nr, nc = M.nrows(), M.ncols()
    if nr == 0 or nc == 0:
        return F.zero(0, nc)
    R, r = M.rref()
    if r == nr:
        return R
    return F.raw(r, nc, R.entries()[:r * nc]) if r else F.zero(0, nc)


def kernel(M):
    """Rows spanning ``{x : M x^T = 0}``."""
    F = field_of(M)
    nc = M.ncols()
    R, pivots = rref(M)
    free = [j for j in range(nc) if j not in set(pivots)]
    e = R.entries()
    ents = [0] * (len(free) * nc)
    for k, f in enumerate(free):
        ents[k * nc + f] = 1
        for r, p in enumerate(pivots):
            x = e[r * nc + f]
            if x != 0:
                ents[k * nc + p] = -x
    return F.matrix(len(free), nc, ents)


def left_kernel(M):
    """Rows spanning ``{x : x M = 0}``."""
    return kernel(M.transpose())


def contains(space, vectors) -> bool:
    """Whether every row of ``vectors`` lies in the row space of ``space``."""
    if vectors.nrows() == 0:
        return True
    F = field_of(vectors)
    return rank(vstack(F, [space, vectors], vectors.ncols())) == rank(space)


def subspace_sum(F: Field, spaces: Iterable, ncols: int):
    return row_space(vstack(F, spaces, ncols))


def intersection(F: Field, A, B, ncols: int):
    """Row space intersection of two subspaces (rows of A, rows of B)."""
    if A.nrows() == 0 or B.nrows() == 0:
        return F.zero(0, ncols)
    # x A = y B  <=>  (x, -y) in left kernel of [A; B]
    K = left_kernel(vstack(F, [A, B], ncols))
    if K.nrows() == 0:
        return F.zero(0, ncols)
    X = submatrix(F, K, None, range(A.nrows()))
    return row_space(X * A)


def pivot_coords(F: Field, vectors, pivots: Sequence[int]):
    """Coordinates of vectors in an echelon basis, read off the pivots."""
    return submatrix(F, vectors, None, pivots)


def complement_columns(ncols: int, pivots: Sequence[int]) -> list[int]:
    ps = set(pivots)
    return [j for j in range(ncols) if j not in ps]


def solve_left(F: Field, A, B):
    """Some X with X A = B, or None when no solution exists."""
    # X A = B  <=>  A^T X^T = B^T
    At = A.transpose()
    k, m = A.nrows(), A.ncols()
    aug = hstack(F, [At, B.transpose()], m)
    R, pivots = rref(aug)
    if any(p >= k for p in pivots):
        return None
    nb = B.nrows()
    X = [[0] * k for _ in range(nb)]
    e = R.entries()
    width = k + nb
    for r, p in enumerate(pivots):
        for j in range(nb):
            X[j][p] = e[r * width + k + j]
    return F.matrix(nb, k, [x for row in X for x in row])
