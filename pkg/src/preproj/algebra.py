"""The preprojective algebra of a Dynkin quiver as an explicit algebra.

Paths compose left to right: ``p * q`` means "traverse p, then q", so
``e_i * Lambda`` is spanned by the paths starting at i.  Elements are row
vectors over the chosen field; right multiplication by y is the matrix
``R(y)`` with ``x * y = x @ R(y)``, and left multiplication ``y * x`` is
``x @ L(y)``.

The basis is built grade by grade.  Grade k+1 is spanned by the products
(basis element of grade k) * (arrow), modulo the images of
(grade k-1 element) * rho_v, where rho_v is the vertex-v component of the
preprojective relation.  This is valid because the relation is quadratic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import linalg as la
from .errors import DegreeBoundExceeded, SocleNotSimple
from .linalg import QQ, Field
from .quiver import Arrow, DynkinQuiver, double_quiver


@dataclass(frozen=True)
class BasisElement:
    label: str
    source: int
    target: int
    grade: int
    word: tuple[str, ...]


@dataclass(frozen=True)
class NakayamaData:
    sigma: dict[int, int]
    socle_basis: dict[int, object]

    def inverse(self) -> dict[int, int]:
        return {v: k for k, v in self.sigma.items()}


def _label(word: Sequence[str], vertex: int) -> str:
    if not word:
        return f"e{vertex}"
    sep = "" if all(len(a.rstrip("*")) == 1 for a in word) else "."
    return sep.join(word)


def relation_terms(quiver: DynkinQuiver) -> dict[int, list[tuple[int, str, str]]]:
    """rho_v as a list of (coefficient, first arrow, second arrow)."""
    terms: dict[int, list] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        astar = a.id + "*"
        terms[a.source].append((1, a.id, astar))
        terms[a.target].append((-1, astar, a.id))
    return terms


class Algebra:
    """A finite-dimensional basic algebra given by a path basis, vertex
    bigrading and the right/left multiplication matrices of the arrows."""

    def __init__(self, quiver: DynkinQuiver, field: Field, arrows: Sequence[Arrow],
                 basis: Sequence[BasisElement], RA: dict, LA: dict,
                 relations: dict[int, list], is_opposite: bool = False):
        self.quiver = quiver
        self.F = field
        self.n = quiver.n
        self.arrows = tuple(arrows)
        self.arrow_by_id = {a.id: a for a in self.arrows}
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.RA = RA
        self.LA = LA
        self.relations = relations
        self.is_opposite = is_opposite
        self._R: dict[int, object] = {}
        self._L: dict[int, object] = {}

    def __repr__(self) -> str:
        side = "^op" if self.is_opposite else ""
        return f"Algebra({self.quiver.type_tag}{side}, dim={self.dim}, {self.F!r})"

    # -- index helpers ---------------------------------------------------------

    @cached_property
    def index_by_label(self) -> dict[str, int]:
        return {b.label: k for k, b in enumerate(self.basis)}

    def idempotent_index(self, v: int) -> int:
        return v - 1

    def block(self, s: int, t: int) -> list[int]:
        """Indices of basis paths from s to t, i.e. a basis of e_s Lambda e_t."""
        return self._blocks.get((s, t), [])

    @cached_property
    def _blocks(self) -> dict[tuple[int, int], list[int]]:
        out: dict = {}
        for k, b in enumerate(self.basis):
            out.setdefault((b.source, b.target), []).append(k)
        return out

    def starting_at(self, s: int) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.source == s]

    def ending_at(self, t: int) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.target == t]

    @cached_property
    def max_grade(self) -> int:
        return max(b.grade for b in self.basis)

    # -- elements --------------------------------------------------------------

    def zero(self):
        return self.F.zero(1, self.dim)

    def unit(self, k: int):
        return self.F.unit_rows([k], self.dim)

    def element(self, coeffs: dict) -> object:
        """Row vector from {basis label or index: coefficient}."""
        row = [0] * self.dim
        for key, c in coeffs.items():
            k = self.index_by_label[key] if isinstance(key, str) else key
            row[k] = self.F.coerce(c)
        return self.F.matrix(1, self.dim, row)

    def one(self):
        return self.element({v - 1: 1 for v in self.quiver.vertices})

    def right_matrix(self, k: int):
        """R(b_k): x * b_k = x @ R(b_k)."""
        if k not in self._R:
            b = self.basis[k]
            M = self.idempotent_right(b.source)
            for a in b.word:
                M = M * self.RA[a]
            self._R[k] = M
        return self._R[k]

    def left_matrix(self, k: int):
        """L(b_k): b_k * x = x @ L(b_k)."""
        if k not in self._L:
            b = self.basis[k]
            M = self.idempotent_left(b.target)
            for a in reversed(b.word):
                M = M * self.LA[a]
            self._L[k] = M
        return self._L[k]

    def idempotent_right(self, v: int):
        ents = [0] * (self.dim * self.dim)
        for k, b in enumerate(self.basis):
            if b.target == v:
                ents[k * self.dim + k] = 1
        return self.F.matrix(self.dim, self.dim, ents)

    def idempotent_left(self, v: int):
        ents = [0] * (self.dim * self.dim)
        for k, b in enumerate(self.basis):
            if b.source == v:
                ents[k * self.dim + k] = 1
        return self.F.matrix(self.dim, self.dim, ents)

    def right_mult(self, y):
        """R(y) for an element y."""
        M = self.F.zero(self.dim, self.dim)
        for k, c in enumerate(y.entries()):
            if c != 0:
                M = M + self.right_matrix(k) * c
        return M

    def multiply(self, x, y):
        return x * self.right_mult(y)

    def word_element(self, word: Sequence[str]):
        """The element represented by a path (sequence of arrow ids)."""
        if not word:
            raise ValueError("empty word; use an idempotent")
        a0 = self.arrow_by_id[word[0]]
        x = self.unit(self.idempotent_index(a0.source))
        for a in word:
            x = x * self.RA[a]
        return x

    def relation_element(self, v: int | None = None):
        """rho_v, or the full relation sum when v is None."""
        x = self.zero()
        verts = self.quiver.vertices if v is None else [v]
        for u in verts:
            for c, a, b in self.relations[u]:
                x = x + self.word_element((a, b)) * c
        return x

    # -- structure ---------------------------------------------------------

    def radical_indices(self) -> list[int]:
        return [k for k, b in enumerate(self.basis) if b.grade >= 1]

    def radical(self):
        return self.F.unit_rows(self.radical_indices(), self.dim)

    def socle_right(self, i: int):
        """Socle of the right module e_i Lambda, as a row subspace."""
        rows = self.starting_at(i)
        E = self.F.unit_rows(rows, self.dim)
        M = la.hstack(self.F, [E * self.RA[a.id] for a in self.arrows], len(rows)) \
            if self.arrows else self.F.zero(len(rows), 0)
        K = la.left_kernel(M) if self.arrows else self.F.identity(len(rows))
        return la.row_space(K * E)

    @cached_property
    def nakayama_data(self) -> NakayamaData:
        sigma, soc = {}, {}
        for i in self.quiver.vertices:
            S = self.socle_right(i)
            if S.nrows() != 1:
                raise SocleNotSimple(f"socle of e_{i} Lambda has dimension {S.nrows()}")
            support = {self.basis[k].target for k, x in enumerate(S.entries()) if x != 0}
            if len(support) != 1:
                raise SocleNotSimple(f"socle of e_{i} Lambda is not concentrated at a vertex")
            sigma[i] = support.pop()
            soc[i] = S
        if sorted(sigma.values()) != list(self.quiver.vertices):
            raise SocleNotSimple("Nakayama permutation is not a bijection")
        return NakayamaData(sigma, soc)

    def opposite(self) -> "Algebra":
        basis = [BasisElement(b.label, b.target, b.source, b.grade, tuple(reversed(b.word)))
                 for b in self.basis]
        quiver = self.quiver.opposite()
        arrows = [a.reversed() for a in self.arrows]
        return Algebra(quiver, self.F, arrows, basis, dict(self.LA), dict(self.RA),
                       relation_terms(quiver), not self.is_opposite)

    def dump(self) -> dict:
        """JSON-ready description: basis, bigrading, grades, structure constants."""
        consts = []
        for j in range(self.dim):
            R = self.right_matrix(j)
            rows = R.tolist()
            for i in range(self.dim):
                for k, c in enumerate(rows[i]):
                    if c != 0:
                        consts.append([i, j, k, str(self.F.to_python(c))])
        return {
            "type": self.quiver.type_tag,
            "quiver": self.quiver.to_edge_list(),
            "opposite": self.is_opposite,
            "field": repr(self.F),
            "dim": self.dim,
            "basis": [{"label": b.label, "source": b.source, "target": b.target,
                       "grade": b.grade, "word": list(b.word)} for b in self.basis],
            "structure_constants": consts,
        }


def default_degree_bound(quiver: DynkinQuiver) -> int:
    # 2 * (number of positive roots); the Loewy length is far below this
    from .weyl import WeylGroup
    return max(2, 2 * len(WeylGroup(quiver).roots().positives))


def build_algebra(quiver: DynkinQuiver, field: Field = QQ,
                  degree_bound: int | None = None) -> Algebra:
    """Construct Lambda = K Qbar / <sum (a a* - a* a)> with an explicit basis."""
    F = field
    n = quiver.n
    dq = double_quiver(quiver)
    arrows = dq.arrows
    bound = default_degree_bound(quiver) if degree_bound is None else degree_bound
    rels = relation_terms(quiver)
    out_of: dict[int, list[Arrow]] = {v: [] for v in quiver.vertices}
    for a in arrows:
        out_of[a.source].append(a)

    basis: list[BasisElement] = [BasisElement(f"e{v}", v, v, 0, ()) for v in quiver.vertices]
    # rmul[(k, arrow id)] = {index: coefficient} for b_k * arrow
    rmul: dict[tuple[int, str], dict[int, object]] = {}
    grades: list[list[int]] = [list(range(n))]
    first = []
    for a in arrows:
        k = len(basis)
        basis.append(BasisElement(_label((a.id,), a.source), a.source, a.target, 1, (a.id,)))
        rmul[(a.source - 1, a.id)] = {k: 1}
        first.append(k)
    if first:
        grades.append(first)

    g = 1
    while g < len(grades) and grades[g]:
        if g + 1 > bound:
            raise DegreeBoundExceeded(f"grade {g + 1} still nonzero (bound {bound})")
        cur, prev = grades[g], grades[g - 1]
        cands = [(b, a.id) for b in cur for a in out_of[basis[b].target]]
        col = {c: j for j, c in enumerate(cands)}
        rel_rows = []
        for c in prev:
            v = basis[c].target
            row = [0] * len(cands)
            touched = False
            for coef, x, y in rels[v]:
                for b, cb in rmul.get((c, x), {}).items():
                    row[col[(b, y)]] += coef * cb
                    touched = True
            if touched:
                rel_rows.append(row)
        if rel_rows:
            R, pivots = la.rref(F.from_rows(rel_rows, len(cands)))
            Rrows = R.tolist()
        else:
            pivots, Rrows = (), []
        pivset = set(pivots)
        new_index = {}
        nxt = []
        for j, (b, a) in enumerate(cands):
            if j not in pivset:
                k = len(basis)
                word = basis[b].word + (a,)
                arr = dq.arrow(a)
                basis.append(BasisElement(_label(word, basis[b].source),
                                          basis[b].source, arr.target, g + 1, word))
                new_index[j] = k
                nxt.append(k)
        for j, (b, a) in enumerate(cands):
            if j in new_index:
                rmul[(b, a)] = {new_index[j]: 1}
        for r, p in enumerate(pivots):
            b, a = cands[p]
            vec = {}
            for j, k in new_index.items():
                x = Rrows[r][j]
                if x != 0:
                    vec[k] = -x
            rmul[(b, a)] = vec
        grades.append(nxt)
        g += 1

    N = len(basis)
    RA, LA = {}, {}
    for a in arrows:
        ents = [0] * (N * N)
        for k in range(N):
            for t, c in rmul.get((k, a.id), {}).items():
                ents[k * N + t] = c
        RA[a.id] = F.matrix(N, N, ents)
    # a * b_k, by induction along the stored word of b_k
    parent = _parents(basis)
    for pos, a in enumerate(arrows):
        rows: list = []
        for k, b in enumerate(basis):
            if b.grade == 0:
                rows.append(F.unit_rows([n + pos], N) if b.source == a.target else F.zero(1, N))
            else:
                rows.append(rows[parent[k]] * RA[b.word[-1]])
        LA[a.id] = _stack_full(F, rows, N)
    return Algebra(quiver, F, arrows, basis, RA, LA, rels)


def _stack_full(F: Field, rows: list, N: int):
    ents: list = []
    for r in rows:
        ents.extend(r.entries())
    return F.matrix(N, N, ents)


def _parents(basis: Sequence[BasisElement]) -> list[int]:
    """Index of the path with the last arrow removed (an idempotent for arrows)."""
    where = {(b.source, b.word): k for k, b in enumerate(basis)}
    out = []
    for k, b in enumerate(basis):
        out.append(-1 if b.grade == 0 else where[(b.source, b.word[:-1])])
    return out


def nakayama(A: Algebra) -> NakayamaData:
    return A.nakayama_data


def opposite(A: Algebra) -> Algebra:
    return A.opposite()
