"""g-vectors, g-matrices and the chamber fan.

g(w) is computed twice: from minimal projective presentations of the
slices e_i I_w, and as the matrix sigma*(w) of the contragredient
representation.  The cone C(w) is spanned by the columns of g(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .context import Context
from .errors import GMismatch
from .modules import min_presentation
from .weyl import Matrix, WeylElement, det, matvec, transpose

Vector = tuple[int, ...]


def g_vector(ctx: Context, w: WeylElement, i: int) -> Vector:
    """P0 - P1 for a minimal presentation of e_i I_w, or -e_{sigma(i)} when
    the slice is zero."""
    X = ctx.slice(w, i)
    if X.is_zero():
        s = ctx.sigma[i]
        return tuple(-int(v == s) for v in ctx.quiver.vertices)
    p = min_presentation(X)
    return tuple(a - b for a, b in zip(p.m0, p.m1))


def g_matrix_presentations(ctx: Context, w: WeylElement) -> Matrix:
    cols = [g_vector(ctx, w, i) for i in ctx.quiver.vertices]
    return transpose(tuple(cols))


def g_matrix_reflections(ctx: Context, w: WeylElement) -> Matrix:
    return w.canonical


def g_matrix(ctx: Context, w: WeylElement) -> Matrix:
    """g(w), raising GMismatch when the two computations disagree."""
    a = g_matrix_presentations(ctx, w)
    b = g_matrix_reflections(ctx, w)
    if a != b:
        raise GMismatch(f"{w}: presentations give {a}, reflections give {b}")
    return a


@dataclass(frozen=True)
class Cone:
    """Open simplicial cone on the columns of a g-matrix."""

    generators: tuple[Vector, ...]

    @property
    def witness(self) -> Vector:
        return tuple(sum(c) for c in zip(*self.generators))

    @property
    def matrix(self) -> Matrix:
        return transpose(self.generators)


def cone_of(w: WeylElement) -> Cone:
    return Cone(tuple(transpose(w.canonical)))


def pairing(y: Sequence[int], x: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(y, x))


def sign_vector(y: Sequence, positives: Sequence[Vector]) -> tuple[int, ...]:
    out = []
    for x in positives:
        p = pairing(y, x)
        out.append((p > 0) - (p < 0))
    return tuple(out)


@dataclass
class Fan:
    ctx: Context
    cones: list[tuple[WeylElement, Cone]]

    def __iter__(self):
        return iter(self.cones)

    def __len__(self) -> int:
        return len(self.cones)


def chamber_fan(ctx: Context) -> Fan:
    elems = sorted(ctx.W.enumerate(), key=lambda w: (w.length, w.word))
    return Fan(ctx, [(w, cone_of(w)) for w in elems])


@dataclass
class ChamberReport:
    count: int
    walls_avoided: bool
    distinct_signs: bool
    distinct_matrices: bool
    determinants_ok: bool

    @property
    def ok(self) -> bool:
        return self.walls_avoided and self.distinct_signs and self.distinct_matrices \
            and self.determinants_ok


def chamber_report(fan: Fan) -> ChamberReport:
    roots = fan.ctx.W.roots()
    signs, mats = set(), set()
    walls_ok = det_ok = True
    for w, C in fan:
        y = C.witness
        if any(pairing(y, x) == 0 for x in roots.roots):
            walls_ok = False
        signs.add(sign_vector(y, roots.positives))
        mats.add(C.matrix)
        if det(C.matrix) != (-1) ** w.length:
            det_ok = False
    k = len(fan)
    return ChamberReport(k, walls_ok, len(signs) == k, len(mats) == k, det_ok)


@dataclass(frozen=True)
class Boundary:
    """A point on a root hyperplane; ``closures`` lists the elements whose
    closed cone contains it, with the point's coordinates there."""

    point: tuple
    closures: tuple[tuple[WeylElement, tuple], ...]


def _solve(M: Matrix, p: Sequence) -> tuple | None:
    """Exact solution a of M a = p (M square, invertible)."""
    n = len(M)
    aug = [[Fraction(x) for x in M[r]] + [Fraction(p[r])] for r in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(row[n] for row in aug)


def cone_membership(point: Sequence, fan: Fan) -> WeylElement | Boundary:
    """The element w whose open cone contains the point, or a Boundary report
    when the point lies on a wall."""
    point = tuple(Fraction(x) for x in point)
    closures = []
    for w, C in fan:
        a = _solve(C.matrix, point)
        if a is None or any(x < 0 for x in a):
            continue
        if all(x > 0 for x in a):
            return w
        closures.append((w, a))
    return Boundary(point, tuple(closures))


def witness_of(w: WeylElement) -> Vector:
    return matvec(w.canonical, (1,) * len(w.canonical))


def adjacent_chambers_differ_by_one_column(ctx: Context, w: WeylElement, i: int) -> bool:
    """g(s_i w) and g(w) share every column except column i."""
    a = transpose(g_matrix_reflections(ctx, w))
    b = transpose(g_matrix_reflections(ctx, ctx.W.left_mul(i, w)))
    return all((a[j] == b[j]) == (j != i - 1) for j in range(ctx.n))


def coordinates_2d(fan: Fan) -> list[dict]:
    """Rank-2 data for external plotting: cone rays per element."""
    if fan.ctx.n != 2:
        raise ValueError("2D coordinates need a rank-2 quiver")
    rows = []
    for w, C in fan:
        (x1, y1), (x2, y2) = C.generators
        rows.append({"word": list(w.word), "ray1": [x1, y1], "ray2": [x2, y2],
                     "witness": list(C.witness)})
    return rows
