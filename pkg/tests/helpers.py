"""Desk algebras, witnesses and random inputs shared by the test modules."""

from __future__ import annotations

import functools

import numpy as np

from singequiv.algebra import (
    QuiverPresentation,
    algebra_from_quiver,
    field_algebra,
    opposite,
    product_algebra,
    tensor_algebra,
)
from singequiv.complex import ChainMap, Complex, cone
from singequiv.linalg import Field
from singequiv.module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    direct_sum,
    hom_matrices,
    projective_module,
    regular_as_env,
    syzygy,
)
from singequiv.witness import Witness, corollary_witness, idempotent_witness

F = Field(32003)


@functools.lru_cache(maxsize=None)
def k_alg():
    return field_algebra(F)


@functools.lru_cache(maxsize=None)
def A2():
    """k[x]/(x^2)."""
    return algebra_from_quiver(QuiverPresentation(["1"], [("x", "1", "1")], [[(1, ("x", "x"))]], name="A2"), F)


@functools.lru_cache(maxsize=None)
def A3():
    """k[x]/(x^3)."""
    return algebra_from_quiver(
        QuiverPresentation(["1"], [("x", "1", "1")], [[(1, ("x", "x", "x"))]], name="A3"), F
    )


@functools.lru_cache(maxsize=None)
def T2():
    """Path algebra of 1 -> 2."""
    return algebra_from_quiver(QuiverPresentation(["1", "2"], [("a", "1", "2")], name="T2"), F)


@functools.lru_cache(maxsize=None)
def A2xk():
    return product_algebra(A2(), k_alg())


def a2_factor_idempotent():
    lam = A2xk()
    return lam.idempotent_sum([lam.vertex_labels.index("A2.1")])


def bimodule_algebra(left, right):
    """The algebra whose left modules are (left, right)-bimodules."""
    return tensor_algebra(left, opposite(right))


def module_from_x(alg, x: np.ndarray) -> Module:
    """A module over a one-loop algebra given the matrix of x."""
    return Module.from_label_actions(alg, {"x": F.array(x)})


@functools.lru_cache(maxsize=None)
def verified_witnesses():
    """Witnesses expected to pass verification, with a short name each."""
    out = []
    for name, alg in (("k", k_alg()), ("A2", A2()), ("T2", T2()), ("A2xk", A2xk())):
        out.append((f"identity_{name}", Witness.identity(alg)))
    for lvl in (1, 2, 3):
        om = bimodule_syzygy(Bimodule.regular(A2()), lvl)
        out.append((f"syzygy_A2_{lvl}", Witness(A2(), A2(), om, Bimodule.regular(A2()), lvl)))
    om3 = bimodule_syzygy(Bimodule.regular(A3()), 1)
    out.append(("syzygy_A3_1", Witness(A3(), A3(), om3, Bimodule.regular(A3()), 1)))
    w, _ = idempotent_witness(A2xk(), a2_factor_idempotent())
    out.append(("idempotent_A2xk", w))
    w, _ = corollary_witness(A2(), A2(), Bimodule.regular(A2()))
    out.append(("corollary_A2_regular", w))
    return tuple(out)


# ----------------------------------------------------------------------------
# random bimodule complexes


def random_bimodule_complex(alg, rng: np.random.Generator) -> Complex:
    """A small complex of A-bimodules with right-projective terms.

    One of: a two-term complex ``P -> A`` or ``A -> P`` with P a projective
    ``A^e``-module and a random bimodule map; a two-term complex of
    projectives (always perfect); a stalk of a direct sum of a projective
    and a bimodule syzygy of A.
    """
    env = regular_as_env(alg)
    env_alg = env.algebra
    nv = env_alg.n_vertices
    kind = rng.integers(0, 4)
    if kind == 2:
        parts = [syzygy(env, int(rng.integers(0, 3)))]
        verts = [int(v) for v in rng.integers(0, nv, size=rng.integers(0, 2))]
        if verts:
            parts.append(projective_module(env_alg, verts))
        return Complex.stalk(direct_sum(*parts))
    verts = [int(v) for v in rng.integers(0, nv, size=rng.integers(1, 3))]
    P = projective_module(env_alg, verts)
    if kind == 3:
        Q = projective_module(env_alg, [int(v) for v in rng.integers(0, nv, size=rng.integers(1, 3))])
        src, tgt = P, Q
    else:
        src, tgt = (P, env) if kind == 0 else (env, P)
    H = hom_matrices(src, tgt)
    if H.shape[0]:
        c = F.random(rng, (H.shape[0],))
        fm = F.reduce(np.tensordot(c, H, axes=(0, 0)))
    else:
        fm = F.zeros((tgt.dim, src.dim))
    f = ChainMap(Complex.stalk(src), Complex.stalk(tgt), {0: fm})
    return cone(f)
