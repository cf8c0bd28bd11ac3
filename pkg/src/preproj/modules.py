"""Finite-dimensional right modules as representations of the double quiver.

A module X has a space X_v = K^{d_v} at every vertex and, for every arrow
a: s -> t of the double quiver, a matrix A_a of shape d_s x d_t acting on
row vectors: x * a = x @ A_a.  A morphism f: X -> Y is a family of
matrices f_v (d_v(X) x d_v(Y)) with A^X_a f_t = f_s A^Y_a.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg as la
from .algebra import Algebra
from .errors import RelationViolated

RANDOM_RANGE = 1000


class ModuleRep:
    def __init__(self, algebra: Algebra, dims: Sequence[int], action: dict, check: bool = True):
        self.algebra = algebra
        self.F = algebra.F
        self.n = algebra.n
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != self.n:
            raise ValueError("dimension vector has the wrong length")
        self.action = dict(action)
        for a in algebra.arrows:
            if a.id not in self.action:
                self.action[a.id] = self.F.zero(self.d(a.source), self.d(a.target))
            A = self.action[a.id]
            if (A.nrows(), A.ncols()) != (self.d(a.source), self.d(a.target)):
                raise ValueError(f"action of {a.id} has shape {A.nrows()}x{A.ncols()}")
        self._paths: dict[int, object] = {}
        if check:
            self.check_relations()

    def d(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def dim(self) -> int:
        return sum(self.dims)

    @property
    def dim_vector(self) -> tuple[int, ...]:
        return self.dims

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        return f"ModuleRep(dims={self.dims})"

    def check_relations(self) -> None:
        for v, terms in self.algebra.relations.items():
            acc = self.F.zero(self.d(v), self.d(v))
            for c, a, b in terms:
                acc = acc + (self.action[a] * self.action[b]) * c
            if not la.is_zero(acc):
                raise RelationViolated(f"relation at vertex {v} fails")

    def path_action(self, k: int):
        """Matrix by which the basis path b_k acts (d_source x d_target)."""
        if k not in self._paths:
            b = self.algebra.basis[k]
            M = self.F.identity(self.d(b.source))
            for a in b.word:
                M = M * self.action[a]
            self._paths[k] = M
        return self._paths[k]

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "action": {a: [[str(self.F.to_python(x)) for x in row]
                           for row in self.action[a].tolist()]
                       for a in sorted(self.action)},
        }


def zero_module(A: Algebra) -> ModuleRep:
    return ModuleRep(A, (0,) * A.n, {})


def simple_module(A: Algebra, i: int) -> ModuleRep:
    return ModuleRep(A, tuple(int(v == i) for v in A.quiver.vertices), {})


@dataclass
class Morphism:
    source: ModuleRep
    target: ModuleRep
    maps: dict[int, object]

    def __getitem__(self, v: int):
        return self.maps[v]

    def then(self, g: "Morphism") -> "Morphism":
        """The composite: first self, then g."""
        return Morphism(self.source, g.target,
                        {v: self.maps[v] * g.maps[v] for v in self.maps})

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.maps.values())

    def is_iso(self) -> bool:
        if self.source.dims != self.target.dims:
            return False
        return all(la.rank(m) == m.nrows() for m in self.maps.values())


def linear_combination(X: ModuleRep, Y: ModuleRep, coeffs: Sequence,
                       maps: Sequence[Morphism]) -> Morphism:
    F = X.F
    out = {}
    for v in X.algebra.quiver.vertices:
        acc = F.zero(X.d(v), Y.d(v))
        for c, f in zip(coeffs, maps):
            if c != 0:
                acc = acc + f.maps[v] * F.coerce(c)
        out[v] = acc
    return Morphism(X, Y, out)


def identity_map(X: ModuleRep) -> Morphism:
    return Morphism(X, X, {v: X.F.identity(X.d(v)) for v in X.algebra.quiver.vertices})


def zero_map(X: ModuleRep, Y: ModuleRep) -> Morphism:
    return Morphism(X, Y, {v: X.F.zero(X.d(v), Y.d(v)) for v in X.algebra.quiver.vertices})


def is_morphism(f: Morphism) -> bool:
    X, Y = f.source, f.target
    for a in X.algebra.arrows:
        if X.action[a.id] * f.maps[a.target] != f.maps[a.source] * Y.action[a.id]:
            return False
    return True


# -- Hom spaces ---------------------------------------------------------------


def hom_basis(X: ModuleRep, Y: ModuleRep) -> list[Morphism]:
    """Basis of Hom(X, Y), the solution space of the intertwining system."""
    F = X.F
    A = X.algebra
    verts = list(A.quiver.vertices)
    off, total = {}, 0
    for v in verts:
        off[v] = total
        total += X.d(v) * Y.d(v)
    if total == 0:
        return []
    rows: list[dict[int, object]] = []
    for a in A.arrows:
        s, t = a.source, a.target
        dxs, dxt, dys, dyt = X.d(s), X.d(t), Y.d(s), Y.d(t)
        if dxs == 0 or dyt == 0:
            continue
        AX = X.action[a.id].tolist()
        BY = Y.action[a.id].tolist()
        # (A_a f_t)[p, q] - (f_s B_a)[p, q] = 0
        for p in range(dxs):
            Ap = AX[p]
            for q in range(dyt):
                row: dict[int, object] = {}
                for r in range(dxt):
                    c = Ap[r]
                    if c != 0:
                        row[off[t] + r * dyt + q] = c
                for r in range(dys):
                    c = BY[r][q]
                    if c != 0:
                        k = off[s] + p * dys + r
                        row[k] = row.get(k, 0) - c
                if row:
                    rows.append(row)
    if rows:
        ents = [0] * (len(rows) * total)
        for i, row in enumerate(rows):
            for k, c in row.items():
                ents[i * total + k] = c
        K = la.kernel(F.matrix(len(rows), total, ents))
    else:
        K = F.identity(total)
    out = []
    for sol in K.tolist():
        maps = {}
        for v in verts:
            dx, dy = X.d(v), Y.d(v)
            maps[v] = F.matrix(dx, dy, sol[off[v]:off[v] + dx * dy])
        out.append(Morphism(X, Y, maps))
    return out


def hom_dim(X: ModuleRep, Y: ModuleRep) -> int:
    return len(hom_basis(X, Y))


def random_combination(X: ModuleRep, Y: ModuleRep, basis: Sequence[Morphism],
                       rng: random.Random) -> Morphism:
    coeffs = [rng.randint(-RANDOM_RANGE, RANDOM_RANGE) for _ in basis]
    return linear_combination(X, Y, coeffs, basis)


# -- sub and quotient modules -----------------------------------------------


def _spaces_rref(X: ModuleRep, spaces: dict) -> dict:
    out = {}
    for v in X.algebra.quiver.vertices:
        S = spaces.get(v)
        out[v] = la.rref(S) if S is not None and S.nrows() else (X.F.zero(0, X.d(v)), ())
    return out


def submodule(X: ModuleRep, spaces: dict, check: bool = True) -> tuple[ModuleRep, Morphism]:
    """Submodule spanned at each vertex by the given rows; returns it together
    with the inclusion."""
    F = X.F
    red = _spaces_rref(X, spaces)
    dims = [red[v][0].nrows() for v in X.algebra.quiver.vertices]
    action = {}
    for a in X.algebra.arrows:
        Bs, _ = red[a.source]
        Bt, pt = red[a.target]
        img = Bs * X.action[a.id]
        coords = la.pivot_coords(F, img, pt)
        if check and coords * Bt != img:
            raise ValueError(f"subspace is not closed under arrow {a.id}")
        action[a.id] = coords
    S = ModuleRep(X.algebra, dims, action, check=False)
    return S, Morphism(S, X, {v: red[v][0] for v in red})


def quotient(X: ModuleRep, spaces: dict) -> tuple[ModuleRep, Morphism]:
    """X modulo a submodule given by per-vertex rows; returns the quotient and
    the projection."""
    F = X.F
    red = _spaces_rref(X, spaces)
    proj, keep = {}, {}
    for v in X.algebra.quiver.vertices:
        S, piv = red[v]
        d = X.d(v)
        Q = la.complement_columns(d, piv)
        keep[v] = Q
        ents = [0] * (d * len(Q))
        for k, i in enumerate(Q):
            ents[i * len(Q) + k] = 1
        Srows = S.tolist()
        for r, i in enumerate(piv):
            for k, j in enumerate(Q):
                x = Srows[r][j]
                if x != 0:
                    ents[i * len(Q) + k] = -x
        proj[v] = F.matrix(d, len(Q), ents)
    action = {}
    for a in X.algebra.arrows:
        A = la.submatrix(F, X.action[a.id], keep[a.source], None)
        action[a.id] = A * proj[a.target]
    Qm = ModuleRep(X.algebra, [len(keep[v]) for v in X.algebra.quiver.vertices], action,
                   check=False)
    return Qm, Morphism(X, Qm, proj)


def kernel(f: Morphism) -> tuple[ModuleRep, Morphism]:
    return submodule(f.source, {v: la.left_kernel(m) for v, m in f.maps.items()}, check=False)


def image_spaces(f: Morphism) -> dict:
    return {v: la.row_space(m) for v, m in f.maps.items()}


def cokernel(f: Morphism) -> tuple[ModuleRep, Morphism]:
    return quotient(f.target, image_spaces(f))


def direct_sum(mods: Sequence[ModuleRep]) -> ModuleRep:
    A = mods[0].algebra
    F = A.F
    dims = [sum(M.d(v) for M in mods) for v in A.quiver.vertices]
    action = {a.id: la.block_diag(F, [M.action[a.id] for M in mods]) for a in A.arrows}
    return ModuleRep(A, dims, action, check=False)


def generated_submodule(X: ModuleRep, spaces: dict) -> dict:
    """Per-vertex rows of the smallest submodule containing the given rows."""
    F = X.F
    cur = {v: la.row_space(spaces[v]) if v in spaces and spaces[v].nrows()
           else F.zero(0, X.d(v)) for v in X.algebra.quiver.vertices}
    changed = True
    while changed:
        changed = False
        for a in X.algebra.arrows:
            S = cur[a.source]
            if S.nrows() == 0:
                continue
            img = S * X.action[a.id]
            T = cur[a.target]
            new = la.row_space(la.vstack(F, [T, img], X.d(a.target)))
            if new.nrows() > T.nrows():
                cur[a.target] = new
                changed = True
    return cur


def radical_spaces(X: ModuleRep) -> dict:
    F = X.F
    out = {}
    for v in X.algebra.quiver.vertices:
        imgs = [X.action[a.id] for a in X.algebra.arrows if a.target == v]
        out[v] = la.row_space(la.vstack(F, imgs, X.d(v))) if imgs else F.zero(0, X.d(v))
    return out


def socle_spaces(X: ModuleRep) -> dict:
    F = X.F
    out = {}
    for v in X.algebra.quiver.vertices:
        outs = [X.action[a.id] for a in X.algebra.arrows if a.source == v]
        if outs:
            out[v] = la.row_space(la.left_kernel(la.hstack(F, outs, X.d(v))))
        else:
            out[v] = F.identity(X.d(v))
    return out


def top(X: ModuleRep) -> tuple[ModuleRep, Morphism]:
    return quotient(X, radical_spaces(X))


def top_dims(X: ModuleRep) -> tuple[int, ...]:
    rad = radical_spaces(X)
    return tuple(X.d(v) - rad[v].nrows() for v in X.algebra.quiver.vertices)


def socle_dims(X: ModuleRep) -> tuple[int, ...]:
    soc = socle_spaces(X)
    return tuple(soc[v].nrows() for v in X.algebra.quiver.vertices)


# -- projectives and presentations -----------------------------------------------


@dataclass
class ProjectiveSum:
    """A direct sum of indecomposable projectives e_u Lambda, one per entry of
    ``vertices``.  ``layout[v]`` lists, for each coordinate of the space at v,
    the pair (summand, basis path index)."""

    algebra: Algebra
    vertices: tuple[int, ...]
    rep: ModuleRep
    layout: dict[int, list[tuple[int, int]]]

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(self.vertices.count(v) for v in self.algebra.quiver.vertices)

    def coordinate(self, v: int, summand: int, path: int) -> int:
        return self.layout[v].index((summand, path))


def projective_sum(A: Algebra, vertices: Sequence[int]) -> ProjectiveSum:
    F = A.F
    vertices = tuple(vertices)
    layout = {v: [(k, b) for k, u in enumerate(vertices) for b in A.block(u, v)]
              for v in A.quiver.vertices}
    pos = {v: {kb: i for i, kb in enumerate(layout[v])} for v in layout}
    action = {}
    for a in A.arrows:
        s, t = a.source, a.target
        rows = []
        R = A.RA[a.id]
        for k, b in layout[s]:
            row = [0] * len(layout[t])
            for c, x in enumerate_row(R, b):
                if x != 0:
                    row[pos[t][(k, c)]] = x
            rows.append(row)
        action[a.id] = F.from_rows(rows, len(layout[t])) if rows else F.zero(0, len(layout[t]))
    dims = [len(layout[v]) for v in A.quiver.vertices]
    return ProjectiveSum(A, vertices, ModuleRep(A, dims, action, check=False), layout)


def enumerate_row(M, r: int):
    nc = M.ncols()
    return enumerate(M.entries()[r * nc:(r + 1) * nc])


def projective(A: Algebra, u: int) -> ModuleRep:
    return projective_sum(A, [u]).rep


def map_from_projectives(P: ProjectiveSum, X: ModuleRep, images: Sequence) -> Morphism:
    """The morphism P -> X sending the generator e_u of summand k to images[k]
    (a row vector in X_u)."""
    F = X.F
    maps = {}
    for v in P.algebra.quiver.vertices:
        rows = [images[k] * X.path_action(b) for k, b in P.layout[v]]
        maps[v] = F.matrix(len(rows), X.d(v), [x for r in rows for x in r.entries()])
    return Morphism(P.rep, X, maps)


def cover_generators(X: ModuleRep) -> list[tuple[int, object]]:
    """Representatives (vertex, row vector) of a basis of the top of X."""
    F = X.F
    rad = radical_spaces(X)
    gens = []
    for v in X.algebra.quiver.vertices:
        _, piv = la.rref(rad[v]) if rad[v].nrows() else (None, ())
        for c in la.complement_columns(X.d(v), piv):
            gens.append((v, F.unit_rows([c], X.d(v))))
    return gens


def projective_cover(X: ModuleRep) -> tuple[ProjectiveSum, Morphism]:
    gens = cover_generators(X)
    P = projective_sum(X.algebra, [v for v, _ in gens])
    return P, map_from_projectives(P, X, [x for _, x in gens])


@dataclass
class Presentation:
    """Minimal projective presentation P1 --d--> P0 --cover--> X -> 0."""

    P0: ProjectiveSum
    P1: ProjectiveSum
    cover: Morphism
    d: Morphism
    blocks: dict[tuple[int, int], object] = field(default_factory=dict)

    @property
    def m0(self) -> tuple[int, ...]:
        return self.P0.multiplicities()

    @property
    def m1(self) -> tuple[int, ...]:
        return self.P1.multiplicities()


def min_presentation(X: ModuleRep, certify: bool = True) -> Presentation:
    A = X.algebra
    F = X.F
    P0, cover = projective_cover(X)
    K, inc = kernel(cover)
    gensK = cover_generators(K)
    P1 = projective_sum(A, [v for v, _ in gensK])
    lifts = [x * inc.maps[v] for v, x in gensK]
    d = map_from_projectives(P1, P0.rep, lifts)
    if certify:
        rad = radical_spaces(P0.rep)
        for v in A.quiver.vertices:
            Kv = inc.maps[v]
            if not la.contains(rad[v], Kv):
                raise AssertionError("projective cover is not minimal")
            if la.rank(la.vstack(F, [Kv, d.maps[v]], P0.rep.d(v))) != Kv.nrows() \
                    or la.rank(d.maps[v]) != Kv.nrows():
                raise AssertionError("presentation is not exact at P0")
    # the element lambda_{k,l} in e_{u_k} Lambda e_{u'_l} through which
    # summand l of P1 maps into summand k of P0
    blocks = {}
    for l, (u1, y) in enumerate(zip(P1.vertices, lifts)):
        ents = y.entries()
        for k, u0 in enumerate(P0.vertices):
            coeffs = {}
            for i, (kk, b) in enumerate(P0.layout[u1]):
                if kk == k and ents[i] != 0:
                    coeffs[b] = ents[i]
            if coeffs:
                blocks[(k, l)] = A.element(coeffs)
    return Presentation(P0, P1, cover, d, blocks)


# -- Nakayama functor and tau ---------------------------------------------------


@dataclass
class InjectiveSum:
    """nu(P) = direct sum of D(Lambda e_u).  ``layout[w]`` lists
    (summand, basis path index) for the dual basis at vertex w."""

    algebra: Algebra
    vertices: tuple[int, ...]
    rep: ModuleRep
    layout: dict[int, list[tuple[int, int]]]


def dual_projective_sum(A: Algebra, vertices: Sequence[int]) -> InjectiveSum:
    F = A.F
    vertices = tuple(vertices)
    layout = {w: [(k, b) for k, u in enumerate(vertices) for b in A.block(w, u)]
              for w in A.quiver.vertices}
    pos = {w: {kb: i for i, kb in enumerate(layout[w])} for w in layout}
    action = {}
    for a in A.arrows:
        s, t = a.source, a.target
        L = A.LA[a.id]
        # (phi . a)(c) = phi(a c): entry [p, q] = coefficient of b_p in a * c_q
        ents = [0] * (len(layout[s]) * len(layout[t]))
        nt = len(layout[t])
        for q, (k, c) in enumerate(layout[t]):
            for b, x in enumerate_row(L, c):
                if x != 0:
                    ents[pos[s][(k, b)] * nt + q] = x
        action[a.id] = F.matrix(len(layout[s]), nt, ents)
    dims = [len(layout[w]) for w in A.quiver.vertices]
    return InjectiveSum(A, vertices, ModuleRep(A, dims, action, check=False), layout)


def dual_projective(A: Algebra, u: int) -> ModuleRep:
    return dual_projective_sum(A, [u]).rep


def nu_map(pres: Presentation) -> tuple[InjectiveSum, InjectiveSum, Morphism]:
    """nu(d): nu(P1) -> nu(P0) for the presentation map d."""
    A = pres.P0.algebra
    F = A.F
    N1 = dual_projective_sum(A, pres.P1.vertices)
    N0 = dual_projective_sum(A, pres.P0.vertices)
    rights = {kl: A.right_mult(lam) for kl, lam in pres.blocks.items()}
    maps = {}
    for w in A.quiver.vertices:
        rows, cols = N1.layout[w], N0.layout[w]
        cpos = {kb: i for i, kb in enumerate(cols)}
        ents = [0] * (len(rows) * len(cols))
        # entry [p, q] = coefficient of b_p in c_q * lambda_{k,l}
        for q, (k, c) in enumerate(cols):
            for p, (l, b) in enumerate(rows):
                R = rights.get((k, l))
                if R is not None:
                    x = R[c, b]
                    if x != 0:
                        ents[p * len(cols) + q] = x
        maps[w] = F.matrix(len(rows), len(cols), ents)
    return N1, N0, Morphism(N1.rep, N0.rep, maps)


def nakayama_nu(A: Algebra, multiplicities: Sequence[int]) -> tuple[int, ...]:
    """Multiplicity vector of nu(P): nu(e_j Lambda) = e_{sigma^-1(j)} Lambda."""
    inv = A.nakayama_data.inverse()
    out = [0] * A.n
    for j, m in zip(A.quiver.vertices, multiplicities):
        out[inv[j] - 1] += m
    return tuple(out)


def tau(X: ModuleRep) -> ModuleRep:
    """tau X = ker(nu(P1) -> nu(P0)) for a minimal presentation of X."""
    if X.is_zero():
        return X
    pres = min_presentation(X)
    if not pres.P1.vertices:
        return zero_module(X.algebra)
    _, _, nd = nu_map(pres)
    return kernel(nd)[0]


# -- isomorphism and decomposition ---------------------------------------------


def is_isomorphic(X: ModuleRep, Y: ModuleRep, rng: random.Random | None = None,
                  tries: int = 3) -> bool:
    """Randomized test; a True answer is certified by an explicit isomorphism."""
    if X.dims != Y.dims:
        return False
    if X.is_zero():
        return True
    H = hom_basis(X, Y)
    if not H:
        return False
    rng = rng or random.Random(0)
    for _ in range(tries):
        f = random_combination(X, Y, H, rng)
        if f.is_iso():
            return True
    return False


def endomorphism_basis(X: ModuleRep) -> list[Morphism]:
    return hom_basis(X, X)


def _trace(M) -> object:
    return sum((M[i, i] for i in range(M.nrows())), 0)


def semisimple_rank(X: ModuleRep, E: list[Morphism] | None = None) -> int:
    """dim End(X)/rad End(X), as the rank of the trace form on End(X).
    Valid in characteristic 0 and in characteristic p > dim X."""
    F = X.F
    if F.prime is not None and F.prime <= X.dim:
        raise ValueError("trace form test needs characteristic 0 or p > dim X")
    E = endomorphism_basis(X) if E is None else E
    m = len(E)
    ents = [0] * (m * m)
    verts = list(X.algebra.quiver.vertices)
    for a in range(m):
        for b in range(a, m):
            t = 0
            for v in verts:
                if X.d(v):
                    t += _trace(E[a].maps[v] * E[b].maps[v])
            ents[a * m + b] = ents[b * m + a] = t
    return la.rank(F.matrix(m, m, ents))


def is_indecomposable(X: ModuleRep) -> bool:
    """End(X) is local with residue field K (absolute indecomposability)."""
    if X.is_zero():
        return False
    return semisimple_rank(X) == 1


def _poly_eval_blocks(F, coeffs: Sequence, phi: dict, dims: dict) -> dict:
    out = {}
    for v, M in phi.items():
        d = dims[v]
        acc = F.zero(d, d)
        for c in reversed(coeffs):
            acc = acc * M + F.identity(d) * c
        out[v] = acc
    return out


def _power(M, k: int):
    R = None
    for _ in range(k):
        R = M if R is None else R * M
    return R


def fitting_split(X: ModuleRep, phi: Morphism) -> tuple[dict, dict] | None:
    """Split X along the primary decomposition of an endomorphism, or None
    when its characteristic polynomial is a power of one irreducible."""
    F = X.F
    verts = list(X.algebra.quiver.vertices)
    full = la.block_diag(F, [phi.maps[v] for v in verts])
    _, factors = full.charpoly().factor()
    if len(factors) < 2:
        return None
    f = factors[0][0]
    coeffs = [F.coerce(c) for c in f.coeffs()]
    g = _poly_eval_blocks(F, coeffs, phi.maps, {v: X.d(v) for v in verts})
    N = max(1, X.dim)
    ker, img = {}, {}
    for v in verts:
        if X.d(v) == 0:
            ker[v] = img[v] = F.zero(0, 0)
            continue
        G = _power(g[v], N)
        ker[v] = la.row_space(la.left_kernel(G))
        img[v] = la.row_space(G)
    return ker, img


def decompose(X: ModuleRep, rng: random.Random | None = None,
              max_tries: int = 60) -> list[ModuleRep]:
    """Indecomposable direct summands of X (up to isomorphism, with
    multiplicity)."""
    if X.is_zero():
        return []
    E = endomorphism_basis(X)
    if semisimple_rank(X, E) == 1:
        return [X]
    rng = rng or random.Random(0)
    F = X.F
    verts = [v for v in X.algebra.quiver.vertices if X.d(v)]
    for attempt in range(max_tries):
        if attempt % 2 == 0:
            phi = random_combination(X, X, E, rng)
        else:
            # an endomorphism killing a random vector is singular, so its
            # characteristic polynomial has the factor x
            v = rng.choice(verts)
            x = F.matrix(1, X.d(v), [rng.randint(-RANDOM_RANGE, RANDOM_RANGE)
                                     for _ in range(X.d(v))])
            M = la.vstack(F, [x * f.maps[v] for f in E], X.d(v))
            K = la.left_kernel(M)
            if K.nrows() == 0:
                continue
            c = [rng.randint(-RANDOM_RANGE, RANDOM_RANGE) for _ in range(K.nrows())]
            coeffs = (F.matrix(1, K.nrows(), c) * K).entries()
            phi = linear_combination(X, X, coeffs, E)
        split = fitting_split(X, phi)
        if split is None:
            continue
        ker, img = split
        parts = []
        for spaces in (ker, img):
            S, _ = submodule(X, spaces, check=False)
            parts.append(S)
        if any(P.is_zero() for P in parts):
            continue
        return decompose(parts[0], rng) + decompose(parts[1], rng)
    raise RuntimeError("could not split a decomposable module")


# -- Fac and annihilators -------------------------------------------------------


def trace_spaces(T: ModuleRep, X: ModuleRep) -> dict:
    """Per-vertex rows of the trace of T in X (sum of images of all maps)."""
    F = X.F
    H = hom_basis(T, X)
    return {v: la.row_space(la.vstack(F, [f.maps[v] for f in H], X.d(v)))
            if H else F.zero(0, X.d(v)) for v in X.algebra.quiver.vertices}


def fac_contains(T: ModuleRep, X: ModuleRep) -> bool:
    """X lies in Fac T, i.e. the trace of T in X is all of X."""
    if X.is_zero():
        return True
    tr = trace_spaces(T, X)
    return all(tr[v].nrows() == X.d(v) for v in X.algebra.quiver.vertices)


def fac_leq(T: ModuleRep, Tp: ModuleRep) -> bool:
    """Fac T is contained in Fac T'."""
    return fac_contains(Tp, T)


def annihilator_rows(X: ModuleRep):
    """Echelon basis, in algebra coordinates, of {lambda : X lambda = 0}."""
    A = X.algebra
    F = X.F
    rows = []
    for (s, t), idx in A._blocks.items():
        size = X.d(s) * X.d(t)
        if size == 0:
            rows.extend(A.unit(k) for k in idx)
            continue
        M = la.vstack(F, [F.matrix(1, size, X.path_action(k).entries()) for k in idx], size)
        K = la.left_kernel(M)
        if K.nrows():
            rows.append(K * F.unit_rows(idx, A.dim))
    return la.row_space(la.vstack(F, rows, A.dim)) if rows else F.zero(0, A.dim)


def is_tau_rigid(X: ModuleRep) -> bool:
    return hom_dim(X, tau(X)) == 0
