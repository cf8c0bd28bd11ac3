"""Shared state for one quiver: the Weyl group, the algebra and caches of
the ideals I_w and their module data."""

from __future__ import annotations

from functools import cached_property

from .algebra import Algebra, build_algebra
from .ideals import (RightIdeal, ideal_generator, left_multiply_generator, slice_rep,
                     to_rep, whole)
from .linalg import QQ, Field
from .modules import ModuleRep, tau
from .quiver import DynkinQuiver, parse_quiver
from .weyl import WeylElement, WeylGroup


class Context:
    """Everything derived from a quiver, built lazily and cached.

    With ``opposite=True`` the algebra is the opposite algebra, so modules
    are left modules over the original one.
    """

    def __init__(self, quiver: DynkinQuiver | str, field: Field = QQ, opposite: bool = False):
        self.quiver = parse_quiver(quiver) if isinstance(quiver, (str, dict)) else quiver
        self.field = field
        self.opposite = opposite
        self.W = WeylGroup(self.quiver)
        self._ideals: dict = {}
        self._reps: dict = {}
        self._slices: dict = {}
        self._taus: dict = {}
        self._words: dict = {}

    def __reduce__(self):
        return (Context, (self.quiver, self.field, self.opposite))

    @property
    def n(self) -> int:
        return self.quiver.n

    @cached_property
    def algebra(self) -> Algebra:
        A = build_algebra(self.quiver, self.field)
        return A.opposite() if self.opposite else A

    @cached_property
    def sigma(self) -> dict[int, int]:
        return self.algebra.nakayama_data.sigma

    @cached_property
    def generators(self) -> dict[int, RightIdeal]:
        return {i: ideal_generator(self.algebra, i) for i in self.quiver.vertices}

    def element(self, word) -> WeylElement:
        return self.W.from_word(word)

    def ideal_of(self, w: WeylElement) -> RightIdeal:
        """I_w, built along the stored reduced word: I_{s_i u} = I_i I_u."""
        key = w.canonical
        if key not in self._ideals:
            if w.is_identity():
                self._ideals[key] = whole(self.algebra)
            else:
                i = w.word[0]
                rest = self.W.left_mul(i, w)
                self._ideals[key] = left_multiply_generator(self.algebra, i, self.ideal_of(rest))
        return self._ideals[key]

    def ideal_of_word(self, word) -> RightIdeal:
        """The product I_{i_1} ... I_{i_k} along a given word (no reduction).
        Products are memoized by word suffix."""
        word = tuple(word)
        if word not in self._words:
            if not word:
                self._words[word] = whole(self.algebra)
            else:
                rest = self.ideal_of_word(word[1:])
                self._words[word] = left_multiply_generator(self.algebra, word[0], rest)
        return self._words[word]

    def rep(self, w: WeylElement) -> ModuleRep:
        key = w.canonical
        if key not in self._reps:
            self._reps[key] = to_rep(self.ideal_of(w))
        return self._reps[key]

    def slice(self, w: WeylElement, i: int) -> ModuleRep:
        """e_i I_w as a module (possibly zero)."""
        key = (w.canonical, i)
        if key not in self._slices:
            self._slices[key] = slice_rep(self.ideal_of(w), i)
        return self._slices[key]

    def slice_tau(self, w: WeylElement, i: int) -> ModuleRep:
        key = (w.canonical, i)
        if key not in self._taus:
            self._taus[key] = tau(self.slice(w, i))
        return self._taus[key]

    def projectors(self, w: WeylElement) -> frozenset[int]:
        """Vertices i with e_i I_w = 0."""
        I = self.ideal_of(w)
        return frozenset(i for i in self.quiver.vertices if I.slice_space(i).nrows() == 0)

    def clear(self) -> None:
        self._ideals.clear()
        self._reps.clear()
        self._slices.clear()
        self._taus.clear()
        self._words.clear()
