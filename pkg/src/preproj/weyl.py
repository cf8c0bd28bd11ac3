"""Weyl groups of simply laced Dynkin diagrams.

An element w = s_{i_1} ... s_{i_k} is stored through the integer matrix
sigma*(w) = sigma*_{i_k} ... sigma*_{i_1} of the contragredient geometric
representation.  That representation is faithful, so the matrix is the
canonical form and equality test.  Reduced words are recovered from it by
peeling off right descents.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .quiver import DynkinQuiver, m_matrix

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def det(A: Matrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True, eq=False)
class WeylElement:
    canonical: Matrix
    word: tuple[int, ...]
    group: "WeylGroup" = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and other.canonical == self.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.multiply(self, other)

    def inverse(self) -> "WeylElement":
        return self.group.from_word(reversed(self.word))

    def is_identity(self) -> bool:
        return not self.word

    def word_str(self) -> str:
        return " ".join(map(str, self.word)) if self.word else "e"

    def __str__(self) -> str:
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)

    def __reduce__(self):
        return (_rebuild_element, (self.group.quiver, self.word))


def _rebuild_element(quiver: DynkinQuiver, word: tuple[int, ...]) -> WeylElement:
    return WeylGroup(quiver).from_word(word)


@dataclass(frozen=True)
class ReflectionRep:
    sigma: dict[int, Matrix]
    sigma_star: dict[int, Matrix]


@dataclass(frozen=True)
class RootSystem:
    roots: tuple[tuple[int, ...], ...]
    positives: tuple[tuple[int, ...], ...]


# Closed-form orders of the Weyl groups.
def closed_form_order(type_tag: str) -> int:
    kind, n = type_tag[0], int(type_tag[1:])
    if kind == "A":
        return factorial(n + 1)
    if kind == "D":
        return 2 ** (n - 1) * factorial(n)
    return {6: 51840, 7: 2903040, 8: 696729600}[n]


class WeylGroup:
    """The Weyl group W_Q with its geometric representations."""

    def __init__(self, quiver: DynkinQuiver):
        self.quiver = quiver
        self.n = quiver.n
        self.m = m_matrix(quiver)
        n, m = self.n, self.m
        sig, sig_star = {}, {}
        for i in range(1, n + 1):
            # sigma_i(e_j) = e_j + (m_ij - 2 delta_ij) e_i: only row i differs from 1
            S = [list(r) for r in identity_matrix(n)]
            for j in range(n):
                S[i - 1][j] += m[i - 1][j] - 2 * (i - 1 == j)
            sig[i] = tuple(map(tuple, S))
            sig_star[i] = transpose(sig[i])
        self.rep = ReflectionRep(sig, sig_star)
        self.identity = WeylElement(identity_matrix(n), (), self)
        self._elements: list[WeylElement] | None = None
        self._index: dict[Matrix, int] | None = None

    def __reduce__(self):
        return (WeylGroup, (self.quiver,))

    def __repr__(self) -> str:
        return f"WeylGroup({self.quiver.type_tag})"

    # -- matrix moves ----------------------------------------------------

    def _right_star(self, M: Matrix, i: int) -> Matrix:
        """M @ sigma*_i  (only column i changes)."""
        col = i - 1
        mi = self.m[col]
        rows = []
        for row in M:
            v = -row[col] + sum(row[j] for j in range(self.n) if mi[j])
            rows.append(row[:col] + (v,) + row[col + 1:])
        return tuple(rows)

    def _left_star(self, M: Matrix, i: int) -> Matrix:
        """sigma*_i @ M  (row r gains m_ri times row i; row i is negated)."""
        r_i = M[i - 1]
        out = []
        for r, row in enumerate(M):
            if r == i - 1:
                out.append(tuple(-x for x in r_i))
            elif self.m[r][i - 1]:
                c = self.m[r][i - 1]
                out.append(tuple(x + c * y for x, y in zip(row, r_i)))
            else:
                out.append(row)
        return tuple(out)

    def _right_descent_of_matrix(self, M: Matrix) -> int | None:
        for r, row in enumerate(M):
            if sum(row) < 0:
                return r + 1
        return None

    def _reduced_word(self, M: Matrix) -> tuple[int, ...]:
        word: list[int] = []
        while True:
            i = self._right_descent_of_matrix(M)
            if i is None:
                break
            word.append(i)
            M = self._left_star(M, i)
        if M != self.identity.canonical:
            raise ValueError("matrix is not in the image of the Weyl group")
        return tuple(reversed(word))

    # -- constructors ----------------------------------------------------

    def _check_vertex(self, i: int) -> None:
        if not (isinstance(i, int) and 1 <= i <= self.n):
            raise ValueError(f"generator index {i!r} outside 1..{self.n}")

    def generator(self, i: int) -> WeylElement:
        self._check_vertex(i)
        return WeylElement(self.rep.sigma_star[i], (i,), self)

    def canonical_of_word(self, word: Iterable[int]) -> Matrix:
        M = self.identity.canonical
        for i in word:
            self._check_vertex(i)
            M = self._left_star(M, i)
        return M

    def from_word(self, word: Iterable[int]) -> WeylElement:
        M = self.canonical_of_word(word)
        return WeylElement(M, self._reduced_word(M), self)

    def from_canonical(self, M: Matrix) -> WeylElement:
        M = tuple(tuple(int(x) for x in r) for r in M)
        return WeylElement(M, self._reduced_word(M), self)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        # sigma* reverses products: sigma*(uv) = sigma*(v) sigma*(u)
        return self.from_canonical(matmul(v.canonical, u.canonical))

    def left_mul(self, i: int, w: WeylElement) -> WeylElement:
        """s_i w."""
        return self.from_canonical(self._right_star(w.canonical, i))

    def right_mul(self, w: WeylElement, i: int) -> WeylElement:
        """w s_i."""
        return self.from_canonical(self._left_star(w.canonical, i))

    # -- descents and lengths ----------------------------------------------

    def length(self, w: WeylElement) -> int:
        return w.length

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        return frozenset(r + 1 for r, row in enumerate(w.canonical) if sum(row) < 0)

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        return self.right_descents(w.inverse())

    def is_left_descent(self, w: WeylElement, i: int) -> bool:
        return i in self.left_descents(w)

    # -- enumeration ---------------------------------------------------------

    def enumerate(self) -> list[WeylElement]:
        """All elements, breadth first from the identity, so each stored
        word is reduced and elements come sorted by length."""
        if self._elements is None:
            seen = {self.identity.canonical: self.identity}
            order = [self.identity]
            queue = deque([self.identity])
            while queue:
                w = queue.popleft()
                for i in range(1, self.n + 1):
                    M = self._right_star(w.canonical, i)
                    if M not in seen:
                        x = WeylElement(M, (i,) + w.word, self)
                        seen[M] = x
                        order.append(x)
                        queue.append(x)
            self._elements = order
            self._index = {w.canonical: k for k, w in enumerate(order)}
        return self._elements

    def index(self, w: WeylElement) -> int:
        self.enumerate()
        return self._index[w.canonical]

    def order(self) -> int:
        """|W| from an orbit-stabilizer recursion over parabolic subgroups;
        does not enumerate the group."""
        return self._parabolic_order(tuple(range(1, self.n + 1)))

    def _parabolic_order(self, S: tuple[int, ...]) -> int:
        if not S:
            return 1
        k = S[-1]
        start = tuple(int(j == k - 1) for j in range(self.n))
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for j in S:
                u = matvec(self.rep.sigma_star[j], v)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) * self._parabolic_order(S[:-1])

    def longest_element(self) -> WeylElement:
        w = self.identity
        while True:
            desc = self.left_descents(w)
            free = [i for i in range(1, self.n + 1) if i not in desc]
            if not free:
                return w
            w = self.left_mul(free[0], w)

    def random_element(self, rng: random.Random, max_len: int | None = None) -> WeylElement:
        L = max_len if max_len is not None else self.longest_element().length
        return self.from_word(rng.randint(1, self.n) for _ in range(rng.randint(0, L)))

    # -- weak order ----------------------------------------------------------

    def weak_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """u <=_L w: w is reached from u by length-increasing left steps."""
        return (w * u.inverse()).length + u.length == w.length

    def hasse_weak(self) -> nx.DiGraph:
        """Edges w -> s_i w whenever l(s_i w) < l(w)."""
        G = nx.DiGraph()
        for w in self.enumerate():
            G.add_node(w)
        for w in self.enumerate():
            for i in self.left_descents(w):
                G.add_edge(w, self.left_mul(i, w), vertex=i)
        return G

    def lower_set(self, w: WeylElement) -> list[WeylElement]:
        return [u for u in self.enumerate() if self.weak_leq(u, w)]

    def upper_set(self, u: WeylElement) -> list[WeylElement]:
        return [w for w in self.enumerate() if self.weak_leq(u, w)]

    def meet(self, u: WeylElement, w: WeylElement) -> WeylElement:
        common = set(self.lower_set(u)) & set(self.lower_set(w))
        return max(common, key=lambda x: (x.length, x.word))

    def join(self, u: WeylElement, w: WeylElement) -> WeylElement:
        common = set(self.upper_set(u)) & set(self.upper_set(w))
        return min(common, key=lambda x: (x.length, x.word))

    def reduced_words(self, w: WeylElement) -> Iterator[tuple[int, ...]]:
        """Every reduced word of w (exponential; desk scale only)."""
        if w.is_identity():
            yield ()
            return
        for i in sorted(self.left_descents(w)):
            for rest in self.reduced_words(self.left_mul(i, w)):
                yield (i,) + rest

    # -- roots -----------------------------------------------------------------

    def roots(self) -> RootSystem:
        seen: dict[tuple[int, ...], None] = {}
        queue = deque()
        for i in range(self.n):
            e = tuple(int(j == i) for j in range(self.n))
            seen[e] = None
            queue.append(e)
        while queue:
            v = queue.popleft()
            for j in range(1, self.n + 1):
                u = matvec(self.rep.sigma[j], v)
                if u not in seen:
                    seen[u] = None
                    queue.append(u)
        roots = tuple(sorted(seen, key=lambda r: (sum(map(abs, r)), r)))
        pos = tuple(r for r in roots if all(x >= 0 for x in r))
        return RootSystem(roots, pos)

    def sigma_of(self, w: WeylElement) -> Matrix:
        """sigma(w), the transpose of the canonical matrix."""
        return transpose(w.canonical)
