import itertools
import pickle
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj.quiver import parse_quiver
from preproj.weyl import WeylGroup, closed_form_order, det, matmul, matvec

from .conftest import context


def group(tag):
    return context(tag).W


def test_a2_generators():
    W = group("A2")
    assert W.generator(1).canonical == ((-1, 0), (1, 1))
    assert W.generator(2).canonical == ((1, 1), (0, -1))
    assert (W.generator(1) * W.generator(1)).is_identity()


def test_a2_products():
    W = group("A2")
    s1, s2 = W.generator(1), W.generator(2)
    assert (s1 * s2).canonical == ((0, 1), (-1, -1))
    w0 = W.longest_element()
    assert w0.canonical == ((0, -1), (-1, 0))
    assert w0.length == 3
    assert w0.word in {(1, 2, 1), (2, 1, 2)}
    assert W.left_descents(w0) == {1, 2}
    assert set(W.reduced_words(w0)) == {(1, 2, 1), (2, 1, 2)}


def test_identity_data():
    W = group("A3")
    e = W.identity
    assert e.length == 0 and W.left_descents(e) == frozenset() and str(e) == "e"


def test_bad_generator():
    with pytest.raises(ValueError):
        group("A2").generator(3)
    with pytest.raises(ValueError):
        group("A2").from_word([0])


@pytest.mark.parametrize("tag,size", [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120),
                                      ("A5", 720), ("D4", 192), ("D5", 1920)])
def test_enumerate_counts(tag, size):
    W = WeylGroup(parse_quiver(tag))
    elems = W.enumerate()
    assert len(elems) == size == closed_form_order(tag)
    assert len({w.canonical for w in elems}) == size


@pytest.mark.parametrize("tag", ["A3", "D4", "D6", "E6", "E7", "E8"])
def test_order_closed_form(tag):
    assert WeylGroup(parse_quiver(tag)).order() == closed_form_order(tag)


@pytest.mark.parametrize("tag,length", [("A2", 3), ("A3", 6), ("D4", 12), ("E6", 36)])
def test_longest_length(tag, length):
    W = WeylGroup(parse_quiver(tag))
    w0 = W.longest_element()
    assert w0.length == length == len(W.roots().positives)
    assert W.left_descents(w0) == frozenset(range(1, W.n + 1))


def test_weak_order_examples():
    W = group("A2")
    s1, s2 = W.generator(1), W.generator(2)
    assert W.weak_leq(s2, s1 * s2)
    assert not W.weak_leq(s1, s2)
    assert all(W.weak_leq(W.identity, w) for w in W.enumerate())
    assert W.meet(s1, s2) == W.identity
    assert W.join(s1, s2) == W.longest_element()


@pytest.mark.parametrize("tag,nodes,edges", [("A1", 2, 1), ("A2", 6, 6), ("A3", 24, 36)])
def test_hasse(tag, nodes, edges):
    W = group(tag)
    G = W.hasse_weak()
    assert G.number_of_nodes() == nodes and G.number_of_edges() == edges
    assert all(u.length == v.length + 1 for u, v in G.edges)
    assert edges == sum(len(W.left_descents(w)) for w in W.enumerate())


@pytest.mark.parametrize("tag,count", [("A1", 2), ("A2", 6), ("A3", 12), ("D4", 24),
                                       ("E6", 72), ("E8", 240)])
def test_roots(tag, count):
    R = WeylGroup(parse_quiver(tag)).roots()
    assert len(R.roots) == count
    assert set(R.roots) == {tuple(-x for x in r) for r in R.roots}
    assert 2 * len(R.positives) == count


def test_a1_roots():
    assert set(group("A1").roots().roots) == {(1,), (-1,)}


@pytest.mark.parametrize("tag", ["A3", "D4", "E6"])
def test_relations(tag):
    W = WeylGroup(parse_quiver(tag))
    for i in range(1, W.n + 1):
        for S in (W.rep.sigma, W.rep.sigma_star):
            assert matmul(S[i], S[i]) == W.identity.canonical
    for i, j in itertools.combinations(range(1, W.n + 1), 2):
        m = 3 if W.m[i - 1][j - 1] else 2
        for S in (W.rep.sigma, W.rep.sigma_star):
            P = matmul(S[i], S[j])
            M = W.identity.canonical
            for _ in range(m):
                M = matmul(M, P)
            assert M == W.identity.canonical


def test_lattice_axioms_a3():
    W = group("A3")
    elems = W.enumerate()
    for u, w in itertools.product(elems, repeat=2):
        m, j = W.meet(u, w), W.join(u, w)
        assert W.weak_leq(m, u) and W.weak_leq(m, w)
        assert W.weak_leq(u, j) and W.weak_leq(w, j)
        for x in elems:
            if W.weak_leq(x, u) and W.weak_leq(x, w):
                assert W.weak_leq(x, m)


def test_pickle_roundtrip():
    W = group("D4")
    w = W.from_word([1, 2, 3, 2])
    v = pickle.loads(pickle.dumps(w))
    assert v == w and v.word == w.word


# -- properties on random words ------------------------------------------------------

TAGS = ["A3", "A4", "D4", "D5", "E6"]
words = st.lists(st.integers(1, 5), max_size=14)


def _clip(word, n):
    return [(i - 1) % n + 1 for i in word]


@given(st.sampled_from(TAGS), words)
@settings(max_examples=80, deadline=None)
def test_word_is_reduced_and_consistent(tag, word):
    W = group(tag)
    w = W.from_word(_clip(word, W.n))
    assert w.length <= len(word)
    assert len(word) % 2 == w.length % 2
    assert det(w.canonical) == (-1) ** w.length
    assert W.from_word(w.word) == w
    assert W.from_word(w.word).length == w.length
    # no shorter word: every left descent lowers the length by one
    for i in W.left_descents(w):
        assert W.left_mul(i, w).length == w.length - 1


@given(st.sampled_from(TAGS), words, words)
@settings(max_examples=80, deadline=None)
def test_group_axioms(tag, a, b):
    W = group(tag)
    u, v = W.from_word(_clip(a, W.n)), W.from_word(_clip(b, W.n))
    assert (u * u.inverse()).is_identity()
    assert u.inverse().length == u.length
    assert (u * v) == W.from_word(list(u.word) + list(v.word))
    assert (u * v).inverse() == v.inverse() * u.inverse()


@given(st.sampled_from(TAGS), words)
@settings(max_examples=60, deadline=None)
def test_length_counts_inverted_roots(tag, word):
    W = group(tag)
    w = W.from_word(_clip(word, W.n))
    R = W.roots()
    sig = W.sigma_of(w)
    negated = sum(1 for x in R.positives if all(c <= 0 for c in matvec(sig, x)))
    assert negated == w.length


@given(st.sampled_from(["A3", "D4"]), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_reduced_words_agree(tag, seed):
    W = group(tag)
    w = W.random_element(random.Random(seed))
    for word in itertools.islice(W.reduced_words(w), 6):
        assert len(word) == w.length
        assert W.from_word(word) == w


@given(st.sampled_from(["A3", "D4"]), st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_weak_order_is_partial_order(tag, seed):
    W = group(tag)
    rng = random.Random(seed)
    u, v, w = (W.random_element(rng) for _ in range(3))
    assert W.weak_leq(u, u)
    if W.weak_leq(u, v) and W.weak_leq(v, u):
        assert u == v
    if W.weak_leq(u, v) and W.weak_leq(v, w):
        assert W.weak_leq(u, w)
