import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.errors import NotSupportTauTilting
from preproj.pairs import (SttPair, annihilator, annihilator_matches, check_pair, dual_dim_check,
                           left_right_symmetric, pair_data, presentation_disjoint, stt_module,
                           stt_pair, tau_rigid_ideal, times_generator_is_minimal)

from .conftest import context


def test_identity_pair():
    ctx = context("A3")
    p = stt_pair(ctx, ctx.W.identity)
    assert p.projectors == frozenset()
    assert p.summands == (1, 2, 3)
    assert stt_module(ctx, ctx.W.identity).dim == ctx.algebra.dim


def test_longest_pair_a2():
    ctx = context("A2")
    p = stt_pair(ctx, ctx.W.longest_element())
    assert p.module.is_zero()
    assert p.projectors == frozenset({1, 2})
    assert p.projective_vertices == (1, 2)


def test_projectors_a2_s2():
    ctx = context("A2")
    p = stt_pair(ctx, ctx.element([1, 2]))
    assert p.projectors == frozenset({1})
    assert p.summands == (2,)
    assert p.projective_vertices == (2,)


def test_broken_pair_is_rejected():
    ctx = context("A2")
    p = pair_data(ctx, ctx.element([2]))
    # pretend e_1 Lambda is a summand of P, but I e_1 != 0
    bad = SttPair(p.w, p.module, frozenset({2}), (1,), (1,))
    assert check_pair(ctx, bad)


def test_stt_pair_raises(monkeypatch):
    import preproj.pairs as pairs
    ctx = context("A2")
    monkeypatch.setattr(pairs, "check_pair", lambda *a, **k: ["forced"])
    with pytest.raises(NotSupportTauTilting):
        pairs.stt_pair(ctx, ctx.W.identity)


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_every_element_gives_pair(tag):
    ctx = context(tag)
    for w in ctx.W.enumerate():
        assert not check_pair(ctx, pair_data(ctx, w))
        assert tau_rigid_ideal(ctx, w)


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_times_generator_minimal(tag):
    ctx = context(tag)
    for w in ctx.W.enumerate():
        for i in ctx.quiver.vertices:
            assert times_generator_is_minimal(ctx, w, i)


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_opposite_side(tag):
    op = context(tag, opposite=True)
    for w in op.W.enumerate():
        assert left_right_symmetric(op, w)


@pytest.mark.parametrize("tag", ["A2", "A3", "D4"])
def test_presentations_disjoint(tag):
    ctx = context(tag)
    for w in ctx.W.enumerate()[:60]:
        assert presentation_disjoint(ctx, w)


def test_dual_dim_example():
    ctx = context("A2")
    s2 = ctx.element([2])
    w0 = ctx.W.longest_element()
    assert ctx.ideal_of(s2).dim == 3
    assert ctx.ideal_of(s2.inverse() * w0).dim == 1
    assert dual_dim_check(ctx, s2)


def test_annihilator_examples():
    ctx = context("A2")
    assert annihilator(ctx, ctx.W.identity).is_zero()
    assert annihilator(ctx, ctx.W.longest_element()).dim == ctx.algebra.dim
    assert annihilator_matches(ctx, ctx.element([2]))


@given(st.sampled_from(["A3", "D4"]), st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_random_elements(tag, seed):
    ctx = context(tag)
    w = ctx.W.random_element(random.Random(seed))
    assert annihilator_matches(ctx, w)
    assert dual_dim_check(ctx, w)
    p = pair_data(ctx, w)
    assert len(p.summands) + len(p.projectors) == ctx.n
