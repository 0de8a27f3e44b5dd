from __future__ import annotations

import math

import pytest

from singequiv.algebra import QuiverPresentation, algebra_from_quiver, enveloping
from singequiv.errors import HypothesisFailed
from singequiv.gorenstein import env_vdim_bound, inj_dim, is_gorenstein, is_mcm, mcm_bimodule_check, vdim
from singequiv.module import (
    Bimodule,
    ExceedsCutoff,
    Module,
    bimodule_syzygy,
    dual,
    ext_dim,
    indecomposable_projective,
    pd,
    regular_as_env,
    simple_modules,
)
from singequiv.witness import corollary_witness

from helpers import A2, T2, A2xk, F, k_alg


def radical_square_zero_two_loops():
    """k<x, y>/(x, y)^2: local, dim 3, not Gorenstein."""
    rels = [[(1, (p, q))] for p in "xy" for q in "xy"]
    q = QuiverPresentation(["1"], [("x", "1", "1"), ("y", "1", "1")], rels, name="R")
    return algebra_from_quiver(q, F)


def test_inj_dim_examples():
    t = T2()
    # D(T2) as a left module: the transpose of right multiplication
    injective = Module(t, t.right_mult.transpose(0, 2, 1).copy())
    assert inj_dim(injective) == 0
    assert dual(injective).dim == 3
    assert inj_dim(Module.regular(A2())) == 0
    assert inj_dim(Module.regular(t)) == 1


def test_vdim_examples():
    assert vdim(A2()) == 0
    assert vdim(k_alg()) == 0
    assert vdim(T2()) == 1
    assert vdim(A2xk()) == 0
    assert is_gorenstein(T2())


def test_non_gorenstein_algebra():
    r = radical_square_zero_two_loops()
    assert r.dim == 3
    v = vdim(r, 4)
    assert isinstance(v, ExceedsCutoff) or v == math.inf
    assert not is_gorenstein(r, 4)
    with pytest.raises(HypothesisFailed):
        is_mcm(simple_modules(r)[0], 4)


def test_mcm_examples():
    a = A2()
    assert is_mcm(simple_modules(a)[0])
    assert is_mcm(Module.regular(a))
    t = T2()
    s1, s2 = simple_modules(t)
    # 0 -> P2 -> P1 -> S1 -> 0: Ext^1(S1, T2) = e2T2 / (image of e1T2) is nonzero
    assert ext_dim(s1, Module.regular(t), 1) == 1
    assert not is_mcm(s1)
    assert is_mcm(s2)
    assert is_mcm(indecomposable_projective(t, 0))


def test_mcm_bimodule_examples():
    a = A2()
    reg = Bimodule.regular(a)
    assert mcm_bimodule_check(reg, reg)
    assert mcm_bimodule_check(bimodule_syzygy(reg, 1), reg)
    k = simple_modules(enveloping(a))[0]
    with pytest.raises(HypothesisFailed):
        mcm_bimodule_check(Bimodule.from_module(k), reg)


def test_mcm_bimodule_fails_for_hereditary_identity():
    """A = T2 is Gorenstein but not self-injective; A itself is not MCM over A^e.

    pd_{A^e}(A) = 1, and a module of finite projective dimension n >= 1 has
    Ext^n(-, A^e) != 0, so the identity pair (A, A) is a counterexample to
    N (x)_B M being MCM for every pair projective on both sides.
    """
    t = T2()
    x = regular_as_env(t)
    assert pd(x) == 1
    assert vdim(enveloping(t)) == 2
    assert ext_dim(x, Module.regular(x.algebra), 1) == 1
    reg = Bimodule.regular(t)
    assert reg.is_projective_both_sides()
    assert not mcm_bimodule_check(reg, reg)


def test_env_vdim_bound():
    assert env_vdim_bound(A2()) == (0, 0, True)
    assert env_vdim_bound(T2()) == (2, 2, True)


def test_corollary_examples():
    a = A2()
    om = bimodule_syzygy(Bimodule.regular(a), 1)
    w, rep = corollary_witness(a, a, om)
    assert w.level == 0 and rep.verdict == "pass"
    assert rep.data["mcm_preserved"]
    r = radical_square_zero_two_loops()
    with pytest.raises(HypothesisFailed):
        corollary_witness(r, r, Bimodule.regular(r), cutoff=4)


def test_corollary_for_hereditary_identity():
    t = T2()
    w, rep = corollary_witness(t, t, Bimodule.regular(t))
    assert w.level == 2
    assert rep.verdict == "pass"
