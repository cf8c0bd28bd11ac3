import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preproj import linalg as la
from preproj.algebra import build_algebra, nakayama, opposite
from preproj.errors import DegreeBoundExceeded
from preproj.linalg import Field
from preproj.quiver import parse_quiver

from .conftest import context


def alg(tag):
    return context(tag).algebra


@pytest.mark.parametrize("tag,dim", [("A1", 1), ("A2", 4), ("A3", 10), ("A4", 20),
                                     ("D4", 28), ("D5", 60), ("E6", 156)])
def test_dimensions(tag, dim):
    A = build_algebra(parse_quiver(tag))
    assert A.dim == dim
    assert sum(len(A.starting_at(v)) for v in A.quiver.vertices) == dim
    for v in A.quiver.vertices:
        assert len(A.starting_at(v)) == len(A.ending_at(v))


def test_a2_basis():
    A = alg("A2")
    assert [b.label for b in A.basis] == ["e1", "e2", "a", "a*"]
    assert len(A.starting_at(1)) == len(A.starting_at(2)) == 2


def test_a2_products():
    A = alg("A2")
    e1, a, astar = (A.element({k: 1}) for k in ("e1", "a", "a*"))
    assert A.multiply(e1, a) == a
    assert la.is_zero(A.multiply(a, astar))
    assert la.is_zero(A.multiply(astar, a))
    assert la.is_zero(A.multiply(a, e1))


def test_unit_and_idempotents():
    A = alg("A3")
    one = A.one()
    for k in range(A.dim):
        x = A.unit(k)
        assert A.multiply(one, x) == x == A.multiply(x, one)
    for u, v in itertools.product(A.quiver.vertices, repeat=2):
        eu, ev = A.unit(u - 1), A.unit(v - 1)
        assert A.multiply(eu, ev) == (eu if u == v else A.zero())


@pytest.mark.parametrize("tag", ["A2", "A3", "D4"])
def test_relations_vanish(tag):
    A = alg(tag)
    assert la.is_zero(A.relation_element())
    for v in A.quiver.vertices:
        assert la.is_zero(A.relation_element(v))


def test_associativity_a3_exhaustive():
    A = alg("A3")
    units = [A.unit(k) for k in range(A.dim)]
    for x, y, z in itertools.product(units, repeat=3):
        assert A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_associativity_random(data):
    A = alg(data.draw(st.sampled_from(["D4", "A4"])))
    coeffs = st.lists(st.integers(-2, 2), min_size=A.dim, max_size=A.dim)
    x, y, z = (A.F.matrix(1, A.dim, data.draw(coeffs)) for _ in range(3))
    assert A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_bigrading(data):
    A = alg(data.draw(st.sampled_from(["A3", "D4"])))
    k = data.draw(st.integers(0, A.dim - 1))
    b = A.basis[k]
    for v in A.quiver.vertices:
        x = A.unit(k)
        left = A.multiply(A.unit(v - 1), x)
        right = A.multiply(x, A.unit(v - 1))
        assert left == (x if v == b.source else A.zero())
        assert right == (x if v == b.target else A.zero())


@pytest.mark.parametrize("tag", ["A3", "D4", "E6"])
def test_radical_nilpotent(tag):
    A = build_algebra(parse_quiver(tag))
    top = [k for k, b in enumerate(A.basis) if b.grade == A.max_grade]
    for k in top:
        for a in A.arrows:
            assert la.is_zero(A.unit(k) * A.RA[a.id])
    assert A.radical().nrows() == A.dim - A.n


@pytest.mark.parametrize("tag,sigma", [
    ("A1", {1: 1}),
    ("A2", {1: 2, 2: 1}),
    ("A3", {1: 3, 2: 2, 3: 1}),
    ("A4", {1: 4, 2: 3, 3: 2, 4: 1}),
    ("D4", {1: 1, 2: 2, 3: 3, 4: 4}),
    ("D5", {1: 1, 2: 2, 3: 3, 4: 5, 5: 4}),
    ("E6", {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}),
])
def test_nakayama_permutation(tag, sigma):
    A = build_algebra(parse_quiver(tag))
    N = nakayama(A)
    assert N.sigma == sigma
    assert all(S.nrows() == 1 for S in N.socle_basis.values())
    assert {N.sigma[N.inverse()[v]] for v in A.quiver.vertices} == set(A.quiver.vertices)


def test_a2_socle():
    A = alg("A2")
    S = A.socle_right(1)
    assert S == A.element({"a": 1})


def test_degree_bound():
    with pytest.raises(DegreeBoundExceeded):
        build_algebra(parse_quiver("A3"), degree_bound=1)


@pytest.mark.parametrize("tag", ["A1", "A2", "A3", "D4"])
def test_opposite(tag):
    A = build_algebra(parse_quiver(tag))
    B = opposite(A)
    assert B.dim == A.dim and B.is_opposite
    assert la.is_zero(B.relation_element())
    assert opposite(B).dump() == A.dump()
    # products reverse: x*y in A equals y*x in A^op
    for j, k in itertools.product(range(A.dim), repeat=2):
        assert A.multiply(A.unit(j), A.unit(k)) == B.multiply(B.unit(k), B.unit(j))


def test_a2_opposite_star_isomorphism():
    A = alg("A2")
    B = opposite(A)
    # a <-> a* matches the two bases with their bigrading
    A_sig = sorted((b.source, b.target, b.grade) for b in A.basis)
    B_sig = sorted((b.source, b.target, b.grade) for b in B.basis)
    assert A_sig == B_sig
    assert B.nakayama_data.sigma == A.nakayama_data.sigma


def test_prime_field_agrees():
    Q = parse_quiver("D4")
    A = build_algebra(Q)
    B = build_algebra(Q, Field(32003))
    assert [b.label for b in A.basis] == [b.label for b in B.basis]
    assert B.nakayama_data.sigma == A.nakayama_data.sigma


def test_dump_golden_a2():
    d = alg("A2").dump()
    assert d["dim"] == 4
    assert [(b["label"], b["source"], b["target"], b["grade"]) for b in d["basis"]] == [
        ("e1", 1, 1, 0), ("e2", 2, 2, 0), ("a", 1, 2, 1), ("a*", 2, 1, 1)]
    consts = {(i, j, k): c for i, j, k, c in d["structure_constants"]}
    assert consts[(0, 2, 2)] == "1"        # e1 * a = a
    assert consts[(2, 1, 2)] == "1"        # a * e2 = a
    assert (2, 3, 0) not in consts         # a * a* = 0
    json.dumps(d)
