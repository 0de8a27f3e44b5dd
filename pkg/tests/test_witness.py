from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singequiv.complex import Complex
from singequiv.errors import HypothesisFailed, TagMismatch
from singequiv.module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    bimodule_tensor,
    regular_as_env,
    simple_modules,
)
from singequiv.witness import (
    Witness,
    build_witness,
    downstream_check,
    idempotent_witness,
    morita_witness,
    verify_witness,
)

from helpers import A2, A3, T2, A2xk, a2_factor_idempotent, k_alg


def statuses(rep):
    return [c.status for c in rep.checks]


def test_identity_witness_passes():
    for alg in (k_alg(), A2(), T2()):
        rep = verify_witness(Witness.identity(alg))
        assert rep.verdict == "pass" and statuses(rep) == ["pass"] * 4
        assert rep.data["level"] == 0


def test_wrong_level_fails_syzygy_checks():
    a = A2()
    reg = Bimodule.regular(a)
    rep = verify_witness(Witness(a, a, reg, reg, 1))
    assert rep.verdict == "fail"
    assert statuses(rep) == ["pass", "pass", "fail", "fail"]


def test_witness_validates_sides_and_level():
    a, t = A2(), T2()
    with pytest.raises(TagMismatch):
        Witness(a, t, Bimodule.regular(a), Bimodule.regular(a), 0)
    with pytest.raises(ValueError):
        Witness(a, a, Bimodule.regular(a), Bimodule.regular(a), -1)


def test_non_projective_bimodule_fails_first_check():
    a = A2()
    k = Bimodule.from_module(simple_modules(regular_as_env(a).algebra)[0])
    rep = verify_witness(Witness(a, a, k, Bimodule.regular(a), 0))
    assert rep.check("M_projective_both_sides").status == "fail"
    assert rep.verdict == "fail"


def test_build_witness_examples():
    a = A2()
    w, rep = build_witness(Complex.stalk(regular_as_env(a)))
    assert rep.verdict == "pass"
    assert w.level == rep.data["s"] + rep.data["s_dual"]
    w, rep = build_witness(Complex.stalk(regular_as_env(a)), s=1, s_dual=1)
    assert w.level == 2 and rep.verdict == "pass"


def test_build_witness_requires_certified_input():
    a = A2()
    env_free = Complex.stalk(Module.regular(regular_as_env(a).algebra))
    with pytest.raises(HypothesisFailed):
        build_witness(env_free, cutoff=10)
    # without the certificate a single attempt is reported as it is
    _w, rep = build_witness(env_free, cutoff=10, require_certified=False)
    assert rep.verdict == "fail"


def test_idempotent_witness_examples():
    lam = A2xk()
    w, rep = idempotent_witness(lam, a2_factor_idempotent())
    assert rep.verdict == "pass" and w.level == 0
    w, rep = idempotent_witness(lam, lam.unit)
    assert rep.verdict == "pass" and w.level == 0
    t = T2()
    w, rep = idempotent_witness(t, t.element("e1"))
    assert rep.verdict == "pass" and w.level == 1
    w, rep = idempotent_witness(t, t.element("e2"))
    assert rep.verdict == "pass" and w.level == 1


def test_morita_witness_examples():
    k = k_alg()
    # the Morita ring is T2; the closed form gives 0 but the pd of the
    # quotient over the enveloping algebra of T2 forces level 1
    w, rep = morita_witness(k, k, Bimodule.regular(k), Bimodule.zero(k, k))
    assert rep.verdict == "pass" and w.level == 1
    assert rep.data["formula_level"] == 0 and rep.data["pd_env_quotient"] == 1
    assert rep.data["corner"] == "TopLeft"
    w, rep = morita_witness(k, k, Bimodule.regular(k), Bimodule.zero(k, k), "BottomRight")
    assert rep.verdict == "pass" and w.level == 1
    with pytest.raises(ValueError):
        morita_witness(k, k, Bimodule.regular(k), Bimodule.zero(k, k), "Middle")


def test_downstream_examples():
    a3 = A3()
    reg = Bimodule.regular(a3)
    om = bimodule_syzygy(reg, 1)
    w = Witness(a3, a3, om, reg, 1)
    assert verify_witness(w).verdict == "pass"
    for x in simple_modules(a3):
        assert downstream_check(w, x)
    corrupted = Witness(a3, a3, om, reg, 2)
    assert verify_witness(corrupted).verdict == "fail"
    assert not downstream_check(corrupted, simple_modules(a3)[0])


@settings(max_examples=9, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2))
def test_levels_add_under_composition(l1, l2):
    a = A2()
    reg = Bimodule.regular(a)
    m = bimodule_tensor(bimodule_syzygy(reg, l1), bimodule_syzygy(reg, l2))
    w = Witness(a, a, m, reg, l1 + l2)
    assert verify_witness(w).verdict == "pass"
