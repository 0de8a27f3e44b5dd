from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singequiv import linalg
from singequiv.complex import (
    ChainMap,
    Complex,
    NotPerfect,
    NotPerfectWithinCutoff,
    Perfect,
    cone,
    cone_maps,
    hard_truncate_below,
    hom_complex_regular,
    homology,
    is_exact,
    is_minimal,
    is_perfect,
    is_quasi_iso,
    resolve_complex,
    shift,
    soft_truncation,
    tail_syzygy,
    tensor_complexes,
)
from singequiv.errors import ComplexError
from singequiv.module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    direct_sum,
    find_iso,
    hom_matrices,
    indecomposable_projective,
    is_projective,
    regular_as_env,
    simple_modules,
)

from helpers import A2, T2, F, k_alg, module_from_x, random_bimodule_complex


def k_mod():
    return simple_modules(A2())[0]


def times_x():
    """0 -> A2 --x--> A2 -> 0 in degrees 1, 0."""
    a = A2()
    reg = Module.regular(a)
    x = a.combine(a.right_mult, a.element("x"))
    return Complex(a, {0: reg, 1: reg}, {1: x})


def homology_dims(c: Complex):
    return {n: c.homology_dim(n) for n in c.degrees if c.homology_dim(n)}


def d_squared_zero(c: Complex) -> bool:
    return all(F.is_zero(F.matmul(c.d(n - 1), c.d(n))) for n in c.degrees)


def test_non_chain_rejected():
    a = A2()
    reg = Module.regular(a)
    x = a.combine(a.right_mult, a.element("x"))
    one = F.eye(2)
    with pytest.raises(ComplexError):
        Complex(a, {0: reg, 1: reg, 2: reg}, {1: x, 2: one})
    with pytest.raises(ComplexError):
        Complex(a, {0: k_mod(), 1: reg}, {1: F.array([[0, 1]])})


def test_homology_examples():
    m = direct_sum(k_mod(), Module.regular(A2()))
    c = Complex.stalk(m)
    assert find_iso(homology(c, 0), m) is not None
    assert homology(c, 1).dim == 0
    c = times_x()
    assert find_iso(homology(c, 0), k_mod()) is not None
    assert find_iso(homology(c, 1), k_mod()) is not None
    assert is_exact(cone(ChainMap.identity(c)))


def test_shift_examples():
    c = times_x()
    s0 = shift(c, 0)
    assert s0.degrees == c.degrees and F.equal(s0.d(1), c.d(1))
    for n in (-2, 1, 3):
        s = shift(c, n)
        for i in range(-3, 5):
            assert s.homology_dim(i) == c.homology_dim(i - n)
    assert F.equal(shift(shift(c, 1), 2).d(4), shift(c, 3).d(4))


def test_cone_examples():
    c = times_x()
    assert is_exact(cone(ChainMap.identity(c)))
    z = ChainMap(Complex.zero(A2()), c, {})
    cz = cone(z)
    assert cz.degrees == c.degrees and F.equal(cz.d(1), c.d(1))
    a = A2()
    reg = Module.regular(a)
    x = a.combine(a.right_mult, a.element("x"))
    f = ChainMap(Complex.stalk(reg), Complex.stalk(reg), {0: x})
    assert homology_dims(cone(f)) == {0: 1, 1: 1}
    _C, inc, proj = cone_maps(f)
    inc.validate()
    proj.validate()


def test_hard_truncation_examples():
    c = times_x()
    q, proj, low = hard_truncate_below(c, -5)
    assert q.degrees == c.degrees and low.is_zero()
    q, proj, low = hard_truncate_below(c, 5)
    assert q.is_zero()
    q, proj, low = hard_truncate_below(c, 1)
    assert q.degrees == [1] and low.degrees == [0]
    proj.validate()


def test_tensor_complex_examples():
    a = A2()
    reg = Complex.stalk(regular_as_env(a))
    y = times_x()
    t = tensor_complexes(reg, y)
    assert t.degrees == y.degrees and homology_dims(t) == homology_dims(y)
    rng = np.random.default_rng(3)
    x = random_bimodule_complex(a, rng)
    while len(x.degrees) != 2:
        x = random_bimodule_complex(a, rng)
    assert len(tensor_complexes(x, y).degrees) == 3


def test_hom_complex_regular_examples():
    a = A2()
    reg = Complex.stalk(regular_as_env(a))
    h = hom_complex_regular(reg)
    assert h.degrees == [0] and find_iso(h.term(0), regular_as_env(a)) is not None
    z = Complex.zero(regular_as_env(a).algebra)
    assert hom_complex_regular(z).is_zero()
    om = Complex.stalk(bimodule_syzygy(Bimodule.regular(a), 1).module, 2)
    hh = hom_complex_regular(hom_complex_regular(om))
    assert homology_dims(hh) == homology_dims(om)
    assert hom_complex_regular(om).degrees == [-2]


def test_resolution_examples():
    t = T2()
    p1 = Complex.stalk(indecomposable_projective(t, 0))
    P, rho = resolve_complex(p1, 3)
    assert P.degrees == [0] and is_quasi_iso(rho)
    P, rho = resolve_complex(Complex.stalk(k_mod()), 3)
    assert P.degrees == [0, 1, 2, 3]
    assert all(P.dim(n) == 2 for n in P.degrees)
    assert is_quasi_iso(rho) and is_minimal(P)
    assert all(find_iso(P.term(n), Module.regular(A2())) is not None for n in P.degrees)
    # each differential is multiplication by a unit multiple of x: rank 1, square 0
    for n in (1, 2, 3):
        assert linalg.rank(F, P.d(n)) == 1 and F.is_zero(F.matmul(P.d(n), P.d(n)))
    s1 = simple_modules(t)[0]
    P, rho = resolve_complex(Complex.stalk(s1), 4)
    assert [P.dim(n) for n in P.degrees] == [2, 1]


def test_tail_syzygy_examples():
    t = T2()
    s1 = Complex.stalk(simple_modules(t)[0])
    assert tail_syzygy(s1, 2).dim == 0
    for n in (1, 2, 5):
        assert find_iso(tail_syzygy(Complex.stalk(k_mod()), n), k_mod()) is not None
    assert tail_syzygy(Complex.stalk(Module.regular(k_alg())), 1).dim == 0
    with pytest.raises(ValueError):
        tail_syzygy(s1, 0)


def test_is_perfect_examples():
    t = T2()
    proj = Complex.stalk(direct_sum(indecomposable_projective(t, 0), indecomposable_projective(t, 1)))
    assert isinstance(is_perfect(proj), Perfect)
    assert is_perfect(Complex.stalk(k_mod()), 50) == NotPerfectWithinCutoff(50)
    assert isinstance(is_perfect(Complex.stalk(k_mod()), 50, certify=True), NotPerfect)
    assert is_perfect(Complex.stalk(simple_modules(t)[0])) == Perfect(1)
    assert is_perfect(times_x()) == Perfect(1)
    assert is_perfect(Complex.zero(t)) == Perfect(-math.inf)


def test_is_quasi_iso_examples():
    c = times_x()
    assert is_quasi_iso(ChainMap.identity(c))
    assert not is_quasi_iso(ChainMap(Complex.zero(A2()), c, {}))
    _P, rho = resolve_complex(c, 5)
    assert is_quasi_iso(rho)


def test_soft_truncation_of_a2_bimodule():
    a = A2()
    x = Complex.stalk(regular_as_env(a))
    t = soft_truncation(x, 1)
    assert [t.complex.dim(n) for n in (0, 1)] == [4, 2]
    assert is_projective(t.complex.term(0))
    assert Bimodule.from_module(t.complex.term(1)).is_projective_both_sides()
    assert is_quasi_iso(t.rho)
    with pytest.raises(ValueError):
        soft_truncation(shift(x, 2), 1)


# ----------------------------------------------------------------------------
# properties on random small complexes


@st.composite
def random_modules(draw, alg_name=None):
    name = alg_name or draw(st.sampled_from(["A2", "T2"]))
    if name == "A2":
        a = A2()
        parts = [k_mod()] * draw(st.integers(0, 2)) + [Module.regular(a)] * draw(st.integers(0, 2))
    else:
        a = T2()
        s1, s2 = simple_modules(a)
        p1 = indecomposable_projective(a, 0)
        parts = [s1] * draw(st.integers(0, 1)) + [s2] * draw(st.integers(0, 1)) + [p1] * draw(st.integers(0, 1))
    if not parts:
        return Module.zero(a)
    return direct_sum(*parts)


@st.composite
def random_stalk_maps(draw):
    name = draw(st.sampled_from(["A2", "T2"]))
    m = draw(random_modules(name))
    n = draw(random_modules(name))
    seed = draw(st.integers(0, 2**32 - 1))
    H = hom_matrices(m, n)
    rng = np.random.default_rng(seed)
    if H.shape[0]:
        fm = F.reduce(np.tensordot(F.random(rng, (H.shape[0],)), H, axes=(0, 0)))
    else:
        fm = F.zeros((n.dim, m.dim))
    shiftn = draw(st.integers(-1, 2))
    return ChainMap(Complex.stalk(m, shiftn), Complex.stalk(n, shiftn), {shiftn: fm})


def euler_of_homology(c: Complex) -> int:
    return sum((-1) ** n * c.homology_dim(n) for n in c.degrees)


@settings(max_examples=40, deadline=None)
@given(random_stalk_maps())
def test_cone_bookkeeping(f):
    c = cone(f)
    assert d_squared_zero(c)
    assert euler_of_homology(c) == euler_of_homology(f.target) - euler_of_homology(f.source)
    assert c.euler_characteristic() == f.target.euler_characteristic() - f.source.euler_characteristic()


@settings(max_examples=30, deadline=None)
@given(random_stalk_maps())
def test_perfectness_two_out_of_three(f):
    c = cone(f)
    vs = [is_perfect(x, 10, certify=True) for x in (f.source, f.target, c)]
    assert not any(isinstance(v, NotPerfectWithinCutoff) for v in vs)
    perfect = [isinstance(v, Perfect) for v in vs]
    assert sum(perfect) != 2
    for n in (-1, 2):
        assert type(is_perfect(shift(c, n), 10, certify=True)) is type(vs[2])


@settings(max_examples=30, deadline=None)
@given(random_stalk_maps())
def test_resolution_minimal_and_quasi_iso(f):
    c = cone(f)
    hi = c.hi if c.hi is not None else 0
    P, rho = resolve_complex(c, hi + 4)
    assert d_squared_zero(P)
    assert is_minimal(P)
    assert is_quasi_iso(rho)
    v = is_perfect(c, 10)
    if isinstance(v, Perfect) and v.bound < hi + 4:
        # the resolution is bounded, so Euler characteristics agree
        assert P.euler_characteristic() == euler_of_homology(c)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2))
def test_soft_truncation_quasi_iso(seed, extra):
    rng = np.random.default_rng(seed)
    alg = A2() if seed % 2 else T2()
    x = random_bimodule_complex(alg, rng)
    hi = x.hi if x.hi is not None else 0
    t = soft_truncation(x, hi + extra)
    assert d_squared_zero(t.complex)
    assert is_quasi_iso(t.rho)
    assert all(is_projective(t.complex.term(n)) for n in t.complex.degrees if n < t.top)


def test_module_map_check_in_chain_map():
    c = times_x()
    with pytest.raises(ComplexError):
        ChainMap(c, c, {0: F.eye(2), 1: F.zeros((2, 2))})


def test_one_loop_resolution_period():
    m = module_from_x(A2(), F.array([[0, 0], [1, 0]]))
    assert isinstance(is_perfect(Complex.stalk(m)), Perfect)
