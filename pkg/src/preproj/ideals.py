"""Ideals of the preprojective algebra as subspaces of it.

A RightIdeal stores the reduced echelon basis of a subspace of Lambda,
which is canonical: two ideals are equal exactly when their bases agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import linalg as la
from .algebra import Algebra
from .modules import ModuleRep, annihilator_rows, quotient


@dataclass(frozen=True, eq=False)
class RightIdeal:
    algebra: Algebra = field(repr=False)
    basis: object = field(repr=False)

    @cached_property
    def key(self) -> tuple:
        return self.algebra.F.key(self.basis)

    @property
    def dim(self) -> int:
        return self.basis.nrows()

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other: object) -> bool:
        # reduced echelon bases are canonical, so matrix equality decides
        return isinstance(other, RightIdeal) and other.algebra is self.algebra \
            and other.dim == self.dim and other.basis == self.basis

    @cached_property
    def _hash(self) -> int:
        # fingerprint: the basis applied to a fixed probe vector
        return hash((self.dim, tuple(str(x) for x in (self.basis * _probe(self.algebra)).entries())))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RightIdeal(dim={self.dim}, dims={self.dim_vector})"

    @cached_property
    def dim_vector(self) -> tuple[int, ...]:
        """Dimensions of the spaces I e_v (the module's dimension vector)."""
        return tuple(self.vertex_space(v).nrows() for v in self.algebra.quiver.vertices)

    def vertex_space(self, v: int):
        return _project(self.algebra, self.basis, self.algebra.ending_at(v))

    def slice_space(self, i: int):
        """Basis of e_i I (rows starting at i)."""
        return _project(self.algebra, self.basis, self.algebra.starting_at(i))

    def contains(self, other: "RightIdeal") -> bool:
        return la.contains(self.basis, other.basis)

    def to_json(self) -> dict:
        F = self.algebra.F
        return {"dim": self.dim,
                "basis": [[str(x) for x in row] for row in F.to_lists(self.basis)]}


_PROBES: dict = {}


def _probe(A: Algebra):
    key = (A.F, A.dim)
    if key not in _PROBES:
        _PROBES[key] = A.F.matrix(A.dim, 1, [(7 * k * k + 3 * k + 1) % 1009 for k in range(A.dim)])
    return _PROBES[key]


def _project(A: Algebra, S, cols: list[int]):
    """Row space of S with all coordinates outside ``cols`` set to zero."""
    if S.nrows() == 0 or not cols:
        return A.F.zero(0, A.dim)
    keep = set(cols)
    nc = A.dim
    e = S.entries()
    ents = [e[i] if (i % nc) in keep else 0 for i in range(len(e))]
    return la.row_space(A.F.matrix(S.nrows(), nc, ents))


def make_ideal(A: Algebra, rows) -> RightIdeal:
    return RightIdeal(A, la.row_space(rows) if rows.nrows() else A.F.zero(0, A.dim))


def whole(A: Algebra) -> RightIdeal:
    return RightIdeal(A, A.F.identity(A.dim))


def zero_ideal(A: Algebra) -> RightIdeal:
    return RightIdeal(A, A.F.zero(0, A.dim))


def left_closure(A: Algebra, S):
    """Smallest left ideal containing the rows of S (which must already be
    stable under left multiplication by idempotents)."""
    F = A.F
    B = la.row_space(S) if S.nrows() else F.zero(0, A.dim)
    frontier = B
    while frontier.nrows():
        imgs = [frontier * A.LA[a.id] for a in A.arrows]
        new = la.row_space(la.vstack(F, [B] + imgs, A.dim))
        if new.nrows() == B.nrows():
            break
        frontier = la.row_space(la.vstack(F, imgs, A.dim))
        B = new
    return B


def right_closure(A: Algebra, S):
    F = A.F
    B = la.row_space(S) if S.nrows() else F.zero(0, A.dim)
    while True:
        imgs = [B * A.RA[a.id] for a in A.arrows]
        imgs += [B * A.idempotent_right(v) for v in A.quiver.vertices]
        new = la.row_space(la.vstack(F, [B] + imgs, A.dim))
        if new.nrows() == B.nrows():
            return B
        B = new


def two_sided_closure(A: Algebra, S):
    F = A.F
    B = la.row_space(S) if S.nrows() else F.zero(0, A.dim)
    while True:
        imgs = [B * A.RA[a.id] for a in A.arrows] + [B * A.LA[a.id] for a in A.arrows]
        imgs += [B * A.idempotent_right(v) for v in A.quiver.vertices]
        imgs += [B * A.idempotent_left(v) for v in A.quiver.vertices]
        new = la.row_space(la.vstack(F, [B] + imgs, A.dim))
        if new.nrows() == B.nrows():
            return B
        B = new


def ideal_generator(A: Algebra, i: int) -> RightIdeal:
    """I_i = Lambda (1 - e_i) Lambda."""
    one_minus = A.one() - A.unit(A.idempotent_index(i))
    return RightIdeal(A, two_sided_closure(A, one_minus))


def left_multiply_generator(A: Algebra, i: int, T: RightIdeal) -> RightIdeal:
    """I_i T for a two-sided ideal T, computed as Lambda (1 - e_i) T."""
    cols = [k for k, b in enumerate(A.basis) if b.source != i]
    S = _project(A, T.basis, cols)
    return RightIdeal(A, left_closure(A, S))


def ideal_product(I: RightIdeal, J: RightIdeal) -> RightIdeal:
    """Span of all products x y with x in I, y in J."""
    A = I.algebra
    F = A.F
    if I.is_zero() or J.is_zero():
        return zero_ideal(A)
    parts = [I.basis * A.right_mult(y) for y in _rows(J.basis)]
    return make_ideal(A, la.vstack(F, parts, A.dim))


def _rows(M):
    F = la.field_of(M)
    return [la.submatrix(F, M, [r], None) for r in range(M.nrows())]


def is_two_sided(I: RightIdeal) -> bool:
    A = I.algebra
    return la.row_space(two_sided_closure(A, I.basis)).nrows() == I.dim


def subspace_rep(A: Algebra, S) -> ModuleRep:
    """The right submodule of Lambda spanned by the rows of S, as a
    representation.  S must be closed under right multiplication."""
    F = A.F
    bases = {}
    for v in A.quiver.vertices:
        bases[v] = la.rref(_project(A, S, A.ending_at(v)))
    action = {}
    for a in A.arrows:
        Bs, _ = bases[a.source]
        Bt, pt = bases[a.target]
        img = Bs * A.RA[a.id]
        coords = la.pivot_coords(F, img, pt)
        if coords * Bt != img:
            raise ValueError("subspace is not a right submodule")
        action[a.id] = coords
    dims = [bases[v][0].nrows() for v in A.quiver.vertices]
    return ModuleRep(A, dims, action)


def to_rep(I: RightIdeal) -> ModuleRep:
    return subspace_rep(I.algebra, I.basis)


def regular_rep(A: Algebra) -> ModuleRep:
    return to_rep(whole(A))


def quotient_rep(I: RightIdeal) -> ModuleRep:
    """Lambda / I as a right module."""
    A = I.algebra
    L = regular_rep(A)
    spaces = {}
    for v in A.quiver.vertices:
        # coordinates of I e_v inside Lambda e_v, whose basis is the unit rows
        # of the paths ending at v in basis order
        cols = A.ending_at(v)
        Iv = I.vertex_space(v)
        spaces[v] = la.submatrix(A.F, Iv, None, cols)
    return quotient(L, spaces)[0]


def summand_slices(I: RightIdeal) -> list[tuple[int, ModuleRep]]:
    """The nonzero e_i I, each an indecomposable summand of I."""
    A = I.algebra
    out = []
    for i in A.quiver.vertices:
        S = I.slice_space(i)
        if S.nrows():
            out.append((i, subspace_rep(A, S)))
    return out


def slice_rep(I: RightIdeal, i: int) -> ModuleRep:
    return subspace_rep(I.algebra, I.slice_space(i))


def annihilator_ideal(X: ModuleRep) -> RightIdeal:
    return RightIdeal(X.algebra, annihilator_rows(X))
