import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.ideals import (ideal_generator, ideal_product, is_two_sided, quotient_rep,
                            summand_slices, whole, zero_ideal)
from preproj.modules import is_isomorphic, simple_module

from .conftest import context


def test_a1_generator_is_zero():
    ctx = context("A1")
    assert ctx.generators[1].is_zero()
    assert ctx.ideal_of(ctx.W.longest_element()).is_zero()


def test_a2_generators():
    ctx = context("A2")
    I1, I2 = ctx.generators[1], ctx.generators[2]
    assert I2.dim == 3 and I2.dim_vector == (2, 1)
    assert I1.dim == 3 and I1.dim_vector == (1, 2)
    assert is_two_sided(I1) and is_two_sided(I2)


def test_a2_products():
    ctx = context("A2")
    I1, I2 = ctx.generators[1], ctx.generators[2]
    I12 = ideal_product(I1, I2)
    assert I12.dim == 1 and I12.dim_vector == (1, 0)
    assert ideal_product(I12, I1).is_zero()
    assert ideal_product(I2, whole(ctx.algebra)) == I2
    assert ideal_product(zero_ideal(ctx.algebra), I2).is_zero()


@pytest.mark.parametrize("tag", ["A2", "A3", "D4"])
def test_longest_word_gives_zero(tag):
    ctx = context(tag)
    w0 = ctx.W.longest_element()
    assert ctx.ideal_of(w0).is_zero()
    assert ctx.ideal_of(ctx.W.identity) == whole(ctx.algebra)


def test_both_reduced_words_of_w0():
    ctx = context("A2")
    a = ctx.ideal_of_word((1, 2, 1))
    b = ctx.ideal_of_word((2, 1, 2))
    assert a == b and a.is_zero()


def test_braid_move_a3():
    ctx = context("A3")
    assert ctx.ideal_of_word((1, 2, 1, 3)) == ctx.ideal_of_word((2, 1, 2, 3))
    assert ctx.ideal_of_word((1, 3)) == ctx.ideal_of_word((3, 1))


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_ideals_are_distinct(tag):
    ctx = context(tag)
    elems = ctx.W.enumerate()
    ideals = {ctx.ideal_of(w) for w in elems}
    assert len(ideals) == len(elems)


def test_dimension_matches_length_a3():
    # dim Lambda/I_w grows with l(w) and the complement of w0 is all of Lambda
    ctx = context("A3")
    for w in ctx.W.enumerate():
        for i in ctx.W.left_descents(w):
            shorter = ctx.W.left_mul(i, w)
            assert ctx.ideal_of(shorter).contains(ctx.ideal_of(w))
            assert ctx.ideal_of(shorter).dim > ctx.ideal_of(w).dim


def test_summand_slices():
    ctx = context("A2")
    I = ctx.ideal_of(ctx.element([2]))
    parts = summand_slices(I)
    assert [i for i, _ in parts] == [1, 2]
    assert sum(M.dim for _, M in parts) == I.dim
    assert dict(parts)[2].dim_vector == (1, 0)  # spanned by a*


def test_quotient_by_generator():
    ctx = context("A3")
    for i in ctx.quiver.vertices:
        Q = quotient_rep(ideal_generator(ctx.algebra, i))
        assert is_isomorphic(Q, simple_module(ctx.algebra, i))


def test_to_json():
    d = context("A2").generators[2].to_json()
    assert d["dim"] == 3 and len(d["basis"]) == 3
    assert all(isinstance(x, str) for row in d["basis"] for x in row)


def test_hash_respects_equality():
    ctx = context("A3")
    a = ctx.ideal_of_word((1, 2, 1))
    b = ctx.ideal_of_word((2, 1, 2))
    assert a == b and hash(a) == hash(b)
    assert a != ctx.ideal_of_word((1, 2))


@given(st.sampled_from(["A3", "D4"]), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_ideal_is_two_sided_and_word_independent(tag, seed):
    ctx = context(tag)
    w = ctx.W.random_element(random.Random(seed))
    I = ctx.ideal_of(w)
    assert is_two_sided(I)
    words = list(ctx.W.reduced_words(w))[:3]
    assert all(ctx.ideal_of_word(word) == I for word in words)
