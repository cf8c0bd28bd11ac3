"""Mutation of support tau-tilting pairs, the exchange quiver and torsion
classes."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from . import linalg as la
from .context import Context
from .errors import ApproximationNotMinimal
from .ideals import RightIdeal, left_multiply_generator, whole
from .modules import (ModuleRep, Morphism, cokernel, decompose, direct_sum, fac_contains,
                      fac_leq, hom_basis, is_indecomposable, is_isomorphic, linear_combination,
                      socle_spaces, zero_module)
from .weyl import WeylElement


@dataclass(frozen=True)
class MutationStep:
    source: WeylElement
    vertex: int
    target: WeylElement
    direction: str  # "left" or "right"
    verified: bool = True


def mutate(ctx: Context, w: WeylElement, i: int) -> MutationStep:
    """Mutation at vertex i: the pair of w goes to the pair of s_i w.

    Left mutations are those with l(w) < l(s_i w); there the new ideal is
    I_i I_w.  The check also confirms the two pairs share the summands at
    every vertex other than i.
    """
    to = ctx.W.left_mul(i, w)
    left = w.length < to.length
    lower, upper = (w, to) if left else (to, w)
    ok = ctx.ideal_of(upper) == left_multiply_generator(ctx.algebra, i, ctx.ideal_of(lower))
    Iw, It = ctx.ideal_of(w), ctx.ideal_of(to)
    for j in ctx.quiver.vertices:
        if j != i and Iw.slice_space(j) != It.slice_space(j):
            ok = False
    return MutationStep(w, i, to, "left" if left else "right", ok)


# -- equivalent descriptions of a left mutation ------------------------------------


def complement_module(ctx: Context, w: WeylElement, i: int) -> ModuleRep:
    """(1 - e_i) I_w."""
    parts = [ctx.slice(w, j) for j in ctx.quiver.vertices if j != i]
    parts = [P for P in parts if not P.is_zero()]
    return direct_sum(parts) if parts else zero_module(ctx.algebra)


def mutation_criteria(ctx: Context, w: WeylElement, i: int) -> tuple[bool, bool, bool]:
    """(l(w) < l(s_i w), I_i I_w != I_w, e_i I_w not in Fac (1 - e_i) I_w)."""
    by_length = w.length < ctx.W.left_mul(i, w).length
    by_ideal = left_multiply_generator(ctx.algebra, i, ctx.ideal_of(w)) != ctx.ideal_of(w)
    X = ctx.slice(w, i)
    by_fac = not fac_contains(complement_module(ctx, w, i), X)
    return by_length, by_ideal, by_fac


# -- minimal left approximations ----------------------------------------------------


def _flatten(f: Morphism) -> list:
    out: list = []
    for v in sorted(f.maps):
        out.extend(f.maps[v].entries())
    return out


def _flat_matrix(F, maps: list[Morphism], width: int):
    return F.matrix(len(maps), width, [x for f in maps for x in _flatten(f)])


def _hom_width(X: ModuleRep, Y: ModuleRep) -> int:
    return sum(X.d(v) * Y.d(v) for v in X.algebra.quiver.vertices)


def radical_maps(U: ModuleRep, V: ModuleRep, same: bool) -> list[Morphism]:
    """Radical maps between indecomposables with simple socle.  Between
    different summands every map is radical; an endomorphism is radical
    exactly when it kills the socle."""
    H = hom_basis(U, V)
    if not same or not H:
        return H
    F = U.F
    soc = socle_spaces(U)
    cols = []
    for f in H:
        col: list = []
        for v in U.algebra.quiver.vertices:
            if soc[v].nrows():
                col.extend((soc[v] * f.maps[v]).entries())
        cols.append(col)
    width = len(cols[0])
    if width == 0:
        return H
    K = la.left_kernel(F.matrix(len(H), width, [x for c in cols for x in c]))
    return [linear_combination(U, V, row, H) for row in K.tolist()]


@dataclass
class Approximation:
    source: ModuleRep
    summands: list[tuple[int, ModuleRep]]   # (vertex j, U_j), one per copy in U'
    target: ModuleRep                        # U'
    map: Morphism                            # f: X -> U'


def minimal_left_approximation(X: ModuleRep, U: dict[int, ModuleRep]) -> Approximation:
    """Minimal left add(U)-approximation of X, where U maps vertex labels
    to pairwise non-isomorphic indecomposables with simple socles."""
    F = X.F
    verts = list(X.algebra.quiver.vertices)
    H = {j: hom_basis(X, Uj) for j, Uj in U.items()}
    chosen: list[tuple[int, Morphism]] = []
    for j, Uj in U.items():
        width = _hom_width(X, Uj)
        if not H[j]:
            continue
        # maps X -> U_j that factor through a radical map U_k -> U_j
        R = []
        for k, Uk in U.items():
            for g in radical_maps(Uk, Uj, k == j):
                for phi in H[k]:
                    R.append(phi.then(g))
        span = la.row_space(_flat_matrix(F, R, width)) if R else F.zero(0, width)
        for phi in H[j]:
            row = F.matrix(1, width, _flatten(phi))
            grown = la.row_space(la.vstack(F, [span, row], width))
            if grown.nrows() > span.nrows():
                span = grown
                chosen.append((j, phi))
    summands = [(j, U[j]) for j, _ in chosen]
    if chosen:
        target = direct_sum([Uj for _, Uj in summands])
        maps = {v: la.hstack(F, [phi.maps[v] for _, phi in chosen], X.d(v)) for v in verts}
    else:
        target = zero_module(X.algebra)
        maps = {v: F.zero(X.d(v), 0) for v in verts}
    f = Morphism(X, target, maps)
    return Approximation(X, summands, target, f)


def certify_approximation(ap: Approximation, U: dict[int, ModuleRep]) -> None:
    """Raise unless every map X -> U_j factors through f and f is left
    minimal."""
    X, Up, f = ap.source, ap.target, ap.map
    F = X.F
    for j, Uj in U.items():
        width = _hom_width(X, Uj)
        H = hom_basis(X, Uj)
        if not H:
            continue
        through = [f.then(h) for h in hom_basis(Up, Uj)] if not Up.is_zero() else []
        span = la.row_space(_flat_matrix(F, through, width)) if through else F.zero(0, width)
        if not la.contains(span, _flat_matrix(F, H, width)):
            raise ApproximationNotMinimal(f"a map into U_{j} does not factor through f")
    if Up.is_zero():
        return
    # left minimality: every h with f h = 0 is radical, i.e. kills soc U'
    E = hom_basis(Up, Up)
    width = _hom_width(X, Up)
    comp = _flat_matrix(F, [f.then(h) for h in E], width)
    K = la.left_kernel(comp) if width else F.identity(len(E))
    soc = socle_spaces(Up)
    for row in K.tolist():
        h = linear_combination(Up, Up, row, E)
        for v in Up.algebra.quiver.vertices:
            if soc[v].nrows() and not la.is_zero(soc[v] * h.maps[v]):
                raise ApproximationNotMinimal("approximation is not left minimal")


@dataclass
class ApproximationMutation:
    approximation: Approximation
    cokernel: ModuleRep
    y1: ModuleRep | None
    multiplicity: int
    result: ModuleRep
    matches: bool
    notes: list[str] = field(default_factory=list)


def left_mutation_via_approximation(ctx: Context, w: WeylElement, i: int,
                                    rng: random.Random | None = None) -> ApproximationMutation:
    """Left mutation of I_w at the summand e_i I_w computed from a minimal
    left approximation X -> U' -> Y -> 0 with X = e_i I_w and
    U = (1 - e_i) I_w.  The result Y_1 + U is compared with I_{s_i w}."""
    rng = rng or random.Random(0)
    to = ctx.W.left_mul(i, w)
    if not w.length < to.length:
        raise ValueError("not a left mutation: l(s_i w) < l(w)")
    X = ctx.slice(w, i)
    if X.is_zero():
        raise ValueError("e_i I_w = 0: mutation exchanges a projective, not a summand")
    U = {j: ctx.slice(w, j) for j in ctx.quiver.vertices if j != i}
    U = {j: Uj for j, Uj in U.items() if not Uj.is_zero()}
    ap = minimal_left_approximation(X, U)
    certify_approximation(ap, U)
    Y, _ = cokernel(ap.map)
    comp = complement_module(ctx, w, i)
    notes = []
    if Y.is_zero():
        y1, m, result = None, 0, comp
    else:
        parts = decompose(Y, rng)
        y1, m = parts[0], len(parts)
        if not is_indecomposable(y1):
            raise ApproximationNotMinimal("cokernel summand is not indecomposable")
        if not all(is_isomorphic(P, y1, rng) for P in parts[1:]):
            notes.append("cokernel is not a power of one indecomposable")
        result = direct_sum([y1, comp]) if not comp.is_zero() else y1
    matches = is_isomorphic(result, ctx.rep(to), rng)
    return ApproximationMutation(ap, Y, y1, m, result, matches, notes)


# -- exchange quiver ------------------------------------------------------------------


def ideal_closure(ctx: Context) -> set[RightIdeal]:
    """All ideals reachable from Lambda by T -> I_i T.  Uses no Weyl group
    data."""
    A = ctx.algebra
    start = whole(A)
    seen = {start}
    queue = deque([start])
    while queue:
        T = queue.popleft()
        for i in ctx.quiver.vertices:
            S = left_multiply_generator(A, i, T)
            if S not in seen:
                seen.add(S)
                queue.append(S)
    return seen


def exchange_quiver(ctx: Context) -> nx.DiGraph:
    """Left mutations between the ideals I_w, with arrows T -> I_i T when the
    two differ.  Vertices are labelled by Weyl group elements."""
    A = ctx.algebra
    label = {ctx.ideal_of(w): w for w in ctx.W.enumerate()}
    G = nx.DiGraph()
    for w in ctx.W.enumerate():
        I = ctx.ideal_of(w)
        G.add_node(w, word=list(w.word), dims=I.dim_vector,
                   projectors=sorted(ctx.projectors(w)), dim=I.dim)
    for w in ctx.W.enumerate():
        I = ctx.ideal_of(w)
        for i in ctx.quiver.vertices:
            S = left_multiply_generator(A, i, I)
            if S != I:
                if S not in label:
                    raise AssertionError("mutation left the set of ideals I_w")
                G.add_edge(w, label[S], vertex=i)
    return G


def matches_opposite_weak_order(ctx: Context, G: nx.DiGraph | None = None) -> bool:
    G = exchange_quiver(ctx) if G is None else G
    H = ctx.W.hasse_weak().reverse(copy=True)
    same_nodes = set(G.nodes) == set(H.nodes)
    same_edges = {(u, v, d["vertex"]) for u, v, d in G.edges(data=True)} == \
        {(u, v, d["vertex"]) for u, v, d in H.edges(data=True)}
    return same_nodes and same_edges


# -- torsion classes --------------------------------------------------------------


def torsion_classes(ctx: Context) -> list[tuple[WeylElement, ModuleRep]]:
    """One torsion class Fac I_w per element w, listed by w."""
    return [(w, ctx.rep(w)) for w in ctx.W.enumerate()]


def order_isomorphism_holds(ctx: Context, u: WeylElement, w: WeylElement) -> bool:
    """u <=_L w exactly when Fac I_u contains Fac I_w."""
    return ctx.W.weak_leq(u, w) == fac_leq(ctx.rep(w), ctx.rep(u))


def meet_is_intersection(ctx: Context, u: WeylElement, w: WeylElement,
                         tests: list[ModuleRep]) -> bool:
    """Fac I_u and Fac I_w intersect in Fac I_{u v w} (join in weak order),
    tested on the given modules."""
    j = ctx.W.join(u, w)
    Tu, Tw, Tj = ctx.rep(u), ctx.rep(w), ctx.rep(j)
    for M in tests:
        if (fac_contains(Tu, M) and fac_contains(Tw, M)) != fac_contains(Tj, M):
            return False
    return True

