from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singequiv.algebra import (
    AlgebraHom,
    QuiverPresentation,
    algebra_from_quiver,
    corner,
    enveloping,
    identity_hom,
    morita_ring,
    opposite,
    product_algebra,
    raw_algebra,
    simples,
    tensor_algebra,
)
from singequiv.errors import (
    FieldMismatch,
    InconsistentRelations,
    InvalidAlgebra,
    NotIdempotent,
    RadicalNeedsLargerPrime,
)
from singequiv.linalg import Field
from singequiv.module import Bimodule

from helpers import A2, T2, A2xk, F, k_alg


def test_quiver_examples():
    assert algebra_from_quiver(QuiverPresentation(["1"]), F).dim == 1
    a = A2()
    assert a.dim == 2 and a.labels == ["e1", "x"]
    assert a.radical.shape[0] == 1
    t = T2()
    assert t.dim == 3 and t.n_vertices == 2 and t.labels == ["e1", "e2", "a"]


def test_path_convention():
    t = T2()
    e1, e2, a = (t.element(x) for x in ("e1", "e2", "a"))
    # a: 1 -> 2 satisfies a = e2 a e1
    assert F.equal(t.mul(t.mul(e2, a), e1), a)
    assert F.is_zero(t.mul(e1, a))
    assert F.is_zero(t.mul(a, a))


def test_length_one_relation_rejected():
    q = QuiverPresentation(["1"], [("x", "1", "1")], [[(1, ("x",))]])
    with pytest.raises(InconsistentRelations):
        algebra_from_quiver(q, F)


def test_non_composable_relation_rejected():
    q = QuiverPresentation(["1", "2"], [("a", "1", "2")], [[(1, ("a", "a"))]])
    with pytest.raises(InconsistentRelations):
        algebra_from_quiver(q, F)


def test_opposite_examples():
    a = A2()
    assert F.equal(opposite(a).structure, a.structure)
    assert opposite(opposite(T2())).same(T2())
    reversed_quiver = algebra_from_quiver(QuiverPresentation(["1", "2"], [("a", "2", "1")]), F)
    # the identity on labelled bases is an algebra isomorphism
    AlgebraHom(opposite(T2()), reversed_quiver, F.eye(3))


def test_tensor_and_enveloping():
    assert tensor_algebra(k_alg(), A2()).same(A2())
    env = enveloping(A2())
    assert env.dim == 4 and env.radical.shape[0] == 3
    env.validate()
    assert enveloping(k_alg()).dim == 1
    assert enveloping(T2()).dim == 9
    assert tensor_algebra(T2(), opposite(T2())).n_vertices == 4
    with pytest.raises(FieldMismatch):
        tensor_algebra(A2(), algebra_from_quiver(QuiverPresentation(["1"]), Field(101)))


def test_corner_examples():
    t = T2()
    c, emb = corner(t, t.unit)
    assert emb.matrix.shape == (3, 3)
    assert c.dim == 3
    c1, _ = corner(t, t.element("e1"))
    assert c1.dim == 1 and c1.n_vertices == 1
    lam = A2xk()
    ca, _emb = corner(lam, lam.idempotent_sum([0]))
    assert ca.same(A2())
    with pytest.raises(NotIdempotent):
        corner(t, F.array([2, 0, 0]))


def test_morita_ring_examples():
    k = k_alg()
    t = morita_ring(k, k, Bimodule.regular(k), Bimodule.zero(k, k))
    assert t.dim == 3
    # basis (k1.e, k2.e, M0) maps onto (e1, e2, a)
    AlgebraHom(t, T2(), F.eye(3))
    p = product_algebra(A2(), k)
    assert p.dim == 3 and p.n_vertices == 2
    assert p.labels == ["A2.e1", "A2.x", "k.e"]
    assert p.vertex_labels == ["A2.1", "k.1"]


def test_simples():
    assert len(simples(k_alg())) == 1
    assert [s.dim for s in simples(A2())] == [1]
    assert len(simples(enveloping(T2()))) == 4


def test_raw_algebra_radical_by_trace_form():
    # k[x]/x^2 on basis (1, x)
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 0] = c[0, 1, 1] = c[1, 0, 1] = 1
    a = raw_algebra(F, c, [1, 0], [[1, 0]])
    assert F.equal(a.radical, F.array([[0, 1]]))
    with pytest.raises(RadicalNeedsLargerPrime):
        raw_algebra(Field(2), c, [1, 0], [[1, 0]])


def test_invalid_structure_rejected():
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 0, 0] = 1
    with pytest.raises(InvalidAlgebra):
        raw_algebra(F, c, [1, 0], [[1, 0]])


def test_identity_hom_and_non_unital_map():
    identity_hom(T2())
    with pytest.raises(InvalidAlgebra):
        AlgebraHom(A2(), A2(), F.zeros((2, 2)))


@st.composite
def acyclic_quivers(draw):
    n = draw(st.integers(1, 4))
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            for m in range(draw(st.integers(0, 2))):
                arrows.append((f"a{i}{j}{m}", str(i), str(j)))
    return n, arrows


@settings(max_examples=30, deadline=None)
@given(acyclic_quivers())
def test_acyclic_path_algebra_dimension(q):
    n, arrows = q
    adj = np.zeros((n, n), dtype=np.int64)
    for _, s, t in arrows:
        adj[int(s), int(t)] += 1
    paths = sum(np.linalg.matrix_power(adj, k).sum() for k in range(n + 1))
    a = algebra_from_quiver(QuiverPresentation([str(i) for i in range(n)], arrows), F)
    assert a.dim == paths
    assert a.n_vertices == n
    assert opposite(opposite(a)).same(a)
    if a.dim <= 10:
        # structure constants of A^e have dim(A)^6 entries
        assert enveloping(a).dim == a.dim ** 2


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 6))
def test_truncated_polynomial_ring(n):
    path = tuple("x" for _ in range(n))
    a = algebra_from_quiver(QuiverPresentation(["1"], [("x", "1", "1")], [[(1, path)]]), F)
    assert a.dim == n
    assert a.radical.shape[0] == n - 1
