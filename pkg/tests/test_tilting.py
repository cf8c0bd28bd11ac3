import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.modules import fac_contains, simple_module
from preproj.tilting import (exchange_quiver, ideal_closure, left_mutation_via_approximation,
                             matches_opposite_weak_order, meet_is_intersection, mutate,
                             mutation_criteria, order_isomorphism_holds, torsion_classes)

from .conftest import context


def test_mutate_examples():
    ctx = context("A2")
    e, s2 = ctx.W.identity, ctx.element([2])
    step = mutate(ctx, e, 2)
    assert step.direction == "left" and step.target == s2 and step.verified
    back = mutate(ctx, s2, 2)
    assert back.direction == "right" and back.target == e and back.verified


@pytest.mark.parametrize("tag", ["A2", "A3", "D4"])
def test_longest_only_mutates_right(tag):
    ctx = context(tag)
    w0 = ctx.W.longest_element()
    for i in ctx.quiver.vertices:
        step = mutate(ctx, w0, i)
        assert step.direction == "right" and step.verified


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_mutation_is_involutive(tag):
    ctx = context(tag)
    for w in ctx.W.enumerate():
        for i in ctx.quiver.vertices:
            step = mutate(ctx, w, i)
            assert step.verified
            assert mutate(ctx, step.target, i).target == w


@pytest.mark.parametrize("tag", ["A2", "A3"])
def test_criteria_agree(tag):
    ctx = context(tag)
    for w in ctx.W.enumerate():
        for i in ctx.quiver.vertices:
            a, b, c = mutation_criteria(ctx, w, i)
            assert a == b
            if ctx.slice(w, i).is_zero():
                continue
            assert a == c


@pytest.mark.parametrize("tag", ["A2", "A3", "D4"])
def test_approximation_from_identity(tag):
    ctx = context(tag)
    for i in ctx.quiver.vertices:
        res = left_mutation_via_approximation(ctx, ctx.W.identity, i)
        nbrs = sorted({a.target for a in ctx.algebra.arrows if a.source == i})
        assert sorted(j for j, _ in res.approximation.summands) == nbrs
        assert res.matches and not res.notes
        assert res.result.dim == ctx.ideal_of(ctx.element([i])).dim


def test_approximation_preconditions():
    ctx = context("A2")
    with pytest.raises(ValueError):
        left_mutation_via_approximation(ctx, ctx.element([2]), 2)
    # e_1 I_{s1 s2} = 0
    with pytest.raises(ValueError):
        left_mutation_via_approximation(ctx, ctx.element([1, 2]), 1)


def test_simple_cokernel_a1():
    ctx = context("A1")
    res = left_mutation_via_approximation(ctx, ctx.W.identity, 1)
    assert res.cokernel.is_zero() and res.result.is_zero() and res.matches


@pytest.mark.parametrize("tag", ["A1", "A2", "A3"])
def test_exchange_quiver(tag):
    ctx = context(tag)
    G = exchange_quiver(ctx)
    assert G.number_of_nodes() == ctx.W.order()
    for w in G.nodes:
        assert G.out_degree(w) + G.in_degree(w) == ctx.n
    assert matches_opposite_weak_order(ctx, G)
    assert len(ideal_closure(ctx)) == ctx.W.order()


def test_a1_single_edge():
    G = exchange_quiver(context("A1"))
    assert G.number_of_edges() == 1


def test_torsion_classes_a2():
    ctx = context("A2")
    classes = torsion_classes(ctx)
    assert len(classes) == 6
    S1 = simple_module(ctx.algebra, 1)
    assert sum(fac_contains(T, S1) for _, T in classes) == 3


def test_meet_on_simples_a3():
    ctx = context("A3")
    tests = [simple_module(ctx.algebra, i) for i in ctx.quiver.vertices]
    tests += [ctx.rep(w) for w in ctx.W.enumerate()[:8]]
    for u in ctx.W.enumerate()[::3]:
        for w in ctx.W.enumerate()[::5]:
            assert meet_is_intersection(ctx, u, w, tests)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=30, deadline=None)
def test_order_isomorphism_d4(seed):
    ctx = context("D4")
    rng = random.Random(seed)
    u, w = ctx.W.random_element(rng), ctx.W.random_element(rng)
    assert order_isomorphism_holds(ctx, u, w)
    assert order_isomorphism_holds(ctx, ctx.W.meet(u, w), w)
