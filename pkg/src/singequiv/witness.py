"""Bimodule witnesses for singular equivalences of Morita type with level.

A witness ``(A, B, M, N, l)`` consists of a (B, A)-bimodule M and an
(A, B)-bimodule N, each projective on both sides, with
``N (x)_B M = Omega^l_{A^e}(A)`` and ``M (x)_A N = Omega^l_{B^e}(B)`` up to
projective summands.  Witnesses are verified directly, or built from a
bimodule complex, an idempotent, a Morita ring, or a Gorenstein pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .algebra import Algebra, morita_ring
from .complex import DEFAULT_CUTOFF, Complex, hom_complex_regular
from .errors import ConstructionExhausted, HypothesisFailed, Inconclusive, TagMismatch
from .gorenstein import env_vdim_bound, inj_dim, is_gorenstein, is_mcm, mcm_bimodule_check, vdim
from .module import (
    Bimodule,
    Module,
    bimodule_syzygy,
    bimodule_tensor,
    hom_into_regular,
    is_projective,
    pd,
    regular_as_env,
    simple_modules,
    strip_projectives,
    syzygy,
    tensor_product,
)
from .report import FAIL, PASS, UNRESOLVED, Check, Report, combine
from .singular import (
    idempotent_bimodules,
    idempotent_singular_check,
    singular_equivalence_check,
    two_sided_quotient,
)
from .truncation import truncate_per_fact

__all__ = [
    "Witness",
    "verify_witness",
    "truncate_per_fact",
    "build_witness",
    "idempotent_witness",
    "morita_witness",
    "corollary_witness",
    "downstream_check",
    "inj_dim",
    "vdim",
    "is_gorenstein",
    "is_mcm",
    "mcm_bimodule_check",
]


@dataclass
class Witness:
    A: Algebra
    B: Algebra
    M: Bimodule  # (B, A)
    N: Bimodule  # (A, B)
    level: int

    def __post_init__(self):
        if not (self.M.left.same(self.B) and self.M.right.same(self.A)):
            raise TagMismatch("M must be a (B, A)-bimodule")
        if not (self.N.left.same(self.A) and self.N.right.same(self.B)):
            raise TagMismatch("N must be an (A, B)-bimodule")
        if self.level < 0:
            raise ValueError("level must be >= 0")

    @classmethod
    def identity(cls, a: Algebra) -> "Witness":
        reg = Bimodule.regular(a)
        return cls(a, a, reg, reg, 0)


def _iso_check(name: str, lhs: Module, rhs: Module, seed: int) -> Check:
    cl, cr = strip_projectives(lhs), strip_projectives(rhs)
    detail = {
        "product_dim": lhs.dim,
        "syzygy_dim": rhs.dim,
        "product_core_dim": cl.core.dim,
        "syzygy_core_dim": cr.core.dim,
    }
    from .module import find_iso

    try:
        iso = find_iso(cl.core, cr.core, seed=seed)
    except Inconclusive:
        return Check(name, UNRESOLVED, dict(detail, evidence="random search found no isomorphism"))
    if iso is None:
        return Check(name, FAIL, dict(detail, evidence="invariants differ"))
    return Check(name, PASS, dict(detail, evidence="isomorphism found"))


def verify_witness(w: Witness, seed: int = 0, cutoff: int = DEFAULT_CUTOFF) -> Report:
    """Check the four defining conditions; overall ``pass`` iff all four pass."""
    checks: List[Check] = []
    for name, x in (("M_projective_both_sides", w.M), ("N_projective_both_sides", w.N)):
        left, right = is_projective(x.restrict("left")), is_projective(x.restrict("right"))
        checks.append(Check(name, PASS if left and right else FAIL, {"left": left, "right": right}))
    nm = bimodule_tensor(w.N, w.M).module
    checks.append(_iso_check("NM_is_syzygy_of_A", nm, syzygy(regular_as_env(w.A), w.level), seed))
    mn = bimodule_tensor(w.M, w.N).module
    checks.append(_iso_check("MN_is_syzygy_of_B", mn, syzygy(regular_as_env(w.B), w.level), seed))
    verdict = combine((c.status for c in checks), PASS, FAIL, UNRESOLVED)
    data = {"level": w.level, "seed": seed, "cutoff": cutoff, "dim_M": w.M.dim, "dim_N": w.N.dim}
    return Report("verify-witness", verdict, checks, data)


# ----------------------------------------------------------------------------
# construction from a bimodule complex


def witness_from_indices(x: Complex, s: Optional[int], s_dual: Optional[int], cutoff: int, seed: int):
    t = truncate_per_fact(x, s, cutoff, seed)
    xd = hom_complex_regular(t.complex)
    t2 = truncate_per_fact(xd, s_dual, cutoff, seed)
    b, _a_op = x.algebra._cache["factors"]
    M = Bimodule.from_module(t.complex.term(t.top))
    N = Bimodule.from_module(t2.complex.term(t2.top))
    A = M.right
    if M.dim == 0:
        M = Bimodule.zero(b, A)
    if N.dim == 0:
        N = Bimodule.zero(A, b)
    return Witness(A, b, M, N, t.top + t2.top), t.top, t2.top


def build_witness(
    x: Complex,
    cutoff: int = DEFAULT_CUTOFF,
    seed: int = 0,
    s: Optional[int] = None,
    s_dual: Optional[int] = None,
    require_certified: bool = True,
):
    """Witness ``(L_s, W_{s'}, s + s')`` from a complex of (B, A)-bimodules.

    L is a bounded model of X with top degree s and W one of its dual with
    top degree s'.  When X is certified to induce a singular equivalence, a
    failed verification is retried with both indices raised by one, up to
    ``cutoff`` times.  With ``require_certified=False`` a single attempt is
    made and its report returned whatever the outcome.
    """
    if require_certified:
        r = singular_equivalence_check(x, cutoff, seed=seed)
        if r.verdict != "certified":
            raise HypothesisFailed("X induces a singular equivalence", r.verdict)
    w, s0, s1 = witness_from_indices(x, s, s_dual, cutoff, seed)
    rep = verify_witness(w, seed, cutoff)
    first = (s0, s1)
    attempts = 1
    while rep.verdict != PASS and require_certified and attempts <= cutoff:
        s0, s1 = s0 + 1, s1 + 1
        w, s0, s1 = witness_from_indices(x, s0, s1, cutoff, seed)
        rep = verify_witness(w, seed, cutoff)
        attempts += 1
    if rep.verdict != PASS and require_certified:
        raise ConstructionExhausted(f"no passing witness for indices {first} through {(s0, s1)}")
    rep.data.update({"s": s0, "s_dual": s1, "attempts": attempts})
    return w, rep


# ----------------------------------------------------------------------------
# idempotents and Morita rings


def _finite(v) -> int:
    """A finite pd as a level contribution; the zero module counts as 0."""
    return 0 if v == -math.inf else int(v)


def idempotent_witness(lam: Algebra, e: np.ndarray, cutoff: int = DEFAULT_CUTOFF, seed: int = 0):
    """Witness between ``Lambda`` and ``e Lambda e`` under condition (i) or (ii)."""
    check = idempotent_singular_check(lam, e, cutoff, seed)
    if check.verdict != "certified":
        failed = check.data.get("failed", [c.name for c in check.checks if c.status != PASS])
        raise HypothesisFailed("idempotent conditions hold", ", ".join(failed))
    gamma, lam_e, e_lam = idempotent_bimodules(lam, e)
    q = _finite(pd(two_sided_quotient(lam, e), cutoff, certify=True, seed=seed))
    if check.data["condition"] == "i":
        l = max(_finite(pd(lam_e.restrict("right"), cutoff)), q)
        w = Witness(gamma, lam, bimodule_syzygy(lam_e, l), e_lam, l)
    else:
        l = max(_finite(pd(e_lam.restrict("left"), cutoff)), q)
        w = Witness(gamma, lam, lam_e, bimodule_syzygy(e_lam, l), l)
    rep = verify_witness(w, seed, cutoff)
    rep.data.update({"condition": check.data["condition"], "pd_env_quotient": q})
    return w, rep


def morita_witness(
    a: Algebra,
    b: Algebra,
    m: Bimodule,
    n: Bimodule,
    corner: str = "TopLeft",
    cutoff: int = DEFAULT_CUTOFF,
    seed: int = 0,
):
    """Witness for a corner of the Morita ring ``[[a, n], [m, b]]``.

    The report records the closed-form level next to the computed one:
    ``max(pd_{A^op} M, pd_{B^e} B)`` for the top-left corner and
    ``max(pd_B M, pd_{A^e} A)`` for the bottom-right corner.
    """
    lam = morita_ring(a, b, m, n)
    f = a.field
    e = f.zeros(lam.dim)
    if corner == "TopLeft":
        e[:a.dim] = a.unit
        parts = (pd(m.restrict("right"), cutoff, certify=True, seed=seed),
                 pd(regular_as_env(b), cutoff, certify=True, seed=seed))
    elif corner == "BottomRight":
        e[a.dim:a.dim + b.dim] = b.unit
        parts = (pd(m.restrict("left"), cutoff, certify=True, seed=seed),
                 pd(regular_as_env(a), cutoff, certify=True, seed=seed))
    else:
        raise ValueError("corner must be TopLeft or BottomRight")
    w, rep = idempotent_witness(lam, e, cutoff, seed)
    finite = all(isinstance(v, (int, float)) and v != math.inf for v in parts)
    formula = max(_finite(v) for v in parts) if finite else None
    rep.data.update({"corner": corner, "formula_level": formula})
    return w, rep


# ----------------------------------------------------------------------------
# Gorenstein pairs


def corollary_witness(a: Algebra, b: Algebra, m: Bimodule, cutoff: int = DEFAULT_CUTOFF, seed: int = 0):
    """Witness ``(M, Omega^l Hom_B(M, B), l)`` with ``l = 2 max(vdim A, vdim B)``."""
    va, vb = vdim(a, cutoff), vdim(b, cutoff)
    if not (isinstance(va, int) and isinstance(vb, int)):
        raise HypothesisFailed("A and B are Gorenstein", f"vdim(A) = {va}, vdim(B) = {vb}")
    if not (m.left.same(b) and m.right.same(a)):
        raise TagMismatch("M must be a (B, A)-bimodule")
    if not m.is_projective_both_sides():
        raise HypothesisFailed("M is projective on both sides")
    r = singular_equivalence_check(Complex.stalk(m.module), cutoff, mode="gorenstein", seed=seed)
    if r.verdict != "certified":
        raise HypothesisFailed("M induces a singular equivalence", r.verdict)
    l = 2 * max(va, vb)
    n = bimodule_syzygy(hom_into_regular(m, "left"), l)
    w = Witness(a, b, m, n, l)
    rep = verify_witness(w, seed, cutoff)
    bounds = {}
    for name, alg in (("A", a), ("B", b)):
        ve, twice, holds = env_vdim_bound(alg, cutoff)
        bounds[name] = {"vdim_env": ve, "twice_vdim": twice, "holds": holds}
    mcm = []
    for x in simple_modules(a):
        y = tensor_product(m, syzygy(x, va)).result
        mcm.append(is_mcm(y, cutoff))
    rep.data.update({"vdim_A": va, "vdim_B": vb, "env_vdim_bound": bounds, "mcm_preserved": all(mcm)})
    return w, rep


def downstream_check(w: Witness, x: Module, seed: int = 0) -> bool:
    """``N (x)_B (M (x)_A x)`` agrees with ``Omega^l(x)`` up to projective summands.

    May raise :class:`Inconclusive` when the isomorphism search is undecided.
    """
    from .module import find_iso

    mx = tensor_product(w.M, x).result
    nmx = tensor_product(w.N, mx).result
    lhs = strip_projectives(nmx).core
    rhs = strip_projectives(syzygy(x, w.level)).core
    return find_iso(lhs, rhs, seed=seed) is not None
