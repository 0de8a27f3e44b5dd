from __future__ import annotations

import numpy as np
import pytest

from singequiv.algebra import (
    AlgebraHom,
    enveloping,
    field_algebra,
    identity_hom,
    opposite,
    tensor_algebra,
)
from singequiv.complex import (
    Complex,
    NotPerfect,
    Perfect,
    is_exact,
    is_perfect,
    soft_truncation,
)
from singequiv.errors import HypothesisFailed
from singequiv.module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    projective_module,
    regular_as_env,
    simple_modules,
)
from singequiv.singular import (
    counit_cone,
    hom_singular_check,
    idempotent_ideal_check,
    idempotent_singular_check,
    perf_env_direct,
    perf_env_simples,
    singular_equivalence_check,
    unit_cone,
)
from singequiv.truncation import truncate_per_fact

from helpers import A2, T2, A2xk, F, a2_factor_idempotent, k_alg


def stalk_regular(alg):
    return Complex.stalk(regular_as_env(alg))


def env_regular_stalk(alg):
    return Complex.stalk(Module.regular(enveloping(alg)))


@pytest.mark.parametrize("name", ["k", "A2", "T2"])
def test_unit_and_counit_of_identity_are_exact(name):
    alg = {"k": k_alg, "A2": A2, "T2": T2}[name]()
    x = stalk_regular(alg)
    for c in (unit_cone(x), counit_cone(x)):
        assert is_exact(c)
        assert isinstance(is_perfect(c), Perfect)


def test_unit_cone_of_free_bimodule_not_perfect():
    c = unit_cone(env_regular_stalk(A2()))
    assert isinstance(perf_env_direct(c, 20), NotPerfect)
    assert isinstance(perf_env_simples(c, 20)[0], NotPerfect)


def test_unit_cone_of_witness_model_is_perfect():
    a = A2()
    L = soft_truncation(stalk_regular(a), 1).complex
    assert isinstance(perf_env_direct(unit_cone(L), 20), Perfect)
    assert isinstance(perf_env_direct(counit_cone(L), 20), Perfect)


def test_perf_env_examples():
    assert isinstance(perf_env_direct(env_regular_stalk(A2()), 20), Perfect)
    assert isinstance(perf_env_direct(stalk_regular(A2()), 20), NotPerfect)
    assert perf_env_direct(stalk_regular(A2()), 20, certify=False).verdict == "not_perfect_within_cutoff"
    assert perf_env_direct(stalk_regular(T2()), 20) == Perfect(1)
    v, per = perf_env_simples(env_regular_stalk(A2()), 20)
    assert isinstance(v, Perfect) and len(per) == 1
    v, per = perf_env_simples(stalk_regular(A2()), 20)
    assert isinstance(v, NotPerfect)
    v, per = perf_env_simples(stalk_regular(T2()), 20, parallel=True)
    assert isinstance(v, Perfect) and len(per) == 2


@pytest.mark.parametrize("mode", ["simples", "direct", "gorenstein"])
def test_identity_certified(mode):
    for alg in (A2(), T2()):
        rep = singular_equivalence_check(stalk_regular(alg), 20, mode)
        assert rep.verdict == "certified", rep.to_dict()
        assert [c.status for c in rep.checks] == ["pass"] * 5


def test_free_bimodule_refuted():
    rep = singular_equivalence_check(env_regular_stalk(A2()), 20)
    assert rep.verdict == "refuted"
    assert "unit_cone_perfect" in rep.data["failed"]


def test_syzygy_bimodule_certified():
    om = bimodule_syzygy(Bimodule.regular(A2()), 1)
    rep = singular_equivalence_check(Complex.stalk(om.module), 20)
    assert rep.verdict == "certified"


def test_a2_t2_bimodule_refuted():
    alg = tensor_algebra(T2(), opposite(A2()))
    m = projective_module(alg, [0, 1])
    assert Bimodule.from_module(m).is_projective_both_sides()
    rep = singular_equivalence_check(Complex.stalk(m), 20)
    assert rep.verdict == "refuted"


def test_mode_validated():
    with pytest.raises(ValueError):
        singular_equivalence_check(stalk_regular(A2()), 5, "bogus")


def test_hom_check_examples():
    assert hom_singular_check(identity_hom(A2())).verdict == "certified"
    proj = AlgebraHom(A2xk(), A2(), F.array([[1, 0, 0], [0, 1, 0]]))
    assert hom_singular_check(proj, 20).verdict == "certified"
    aug = AlgebraHom(A2(), field_algebra(F), F.array([[1, 0]]))
    rep = hom_singular_check(aug, 20)
    assert rep.verdict == "refuted"
    assert rep.check("pd_A(B)").status == "fail"


def test_ideal_check_examples():
    a = A2()
    assert idempotent_ideal_check(a, F.zeros((2, 0))).verdict == "certified"
    rep = idempotent_ideal_check(a, F.array([[0], [1]]))
    assert rep.verdict == "refuted" and rep.check("idempotent").status == "fail"
    lam = A2xk()
    k_unit = lam.idempotent_sum([1])
    rep = idempotent_ideal_check(lam, k_unit.reshape(-1, 1))
    assert rep.verdict == "certified", rep.to_dict()


def test_ideal_check_rejects_one_sided():
    t = T2()
    # span{e1} is not a two-sided ideal
    rep = idempotent_ideal_check(t, t.element("e1").reshape(-1, 1))
    assert rep.verdict == "refuted" and rep.check("two_sided_ideal").status == "fail"


def test_idempotent_check_examples():
    lam = A2xk()
    assert idempotent_singular_check(lam, lam.unit).verdict == "certified"
    rep = idempotent_singular_check(lam, a2_factor_idempotent())
    assert rep.verdict == "certified"
    assert rep.check("condition_i").detail["pd_Gamma_op(Lambda e)"] == 0
    assert rep.check("condition_ii").detail["pd_Gamma(e Lambda)"] == 0
    assert rep.check("pd_env(Lambda/LambdaeLambda)").detail["value"] == 0
    t = T2()
    for v in ("e1", "e2"):
        assert idempotent_singular_check(t, t.element(v)).verdict == "certified"


def test_truncation_hypothesis_failure_names_side():
    a = A2()
    # the simple bimodule k is not projective on either side and has infinite pd
    s = simple_modules(enveloping(a))[0]
    with pytest.raises(HypothesisFailed) as exc:
        truncate_per_fact(Complex.stalk(s), cutoff=10)
    assert exc.value.hypothesis == "X is perfect over B"


def test_reports_are_deterministic():
    x = Complex.stalk(bimodule_syzygy(Bimodule.regular(A2()), 2).module)
    r1 = singular_equivalence_check(x, 20, seed=4).to_dict()
    r2 = singular_equivalence_check(x, 20, seed=4).to_dict()
    assert r1 == r2
    assert np.all([c["status"] == "pass" for c in r1["checks"]])
