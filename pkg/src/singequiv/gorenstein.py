"""Injective dimension, virtual dimension and maximal Cohen-Macaulay tests."""

from __future__ import annotations

import math

from .algebra import Algebra, enveloping, opposite
from .errors import HypothesisFailed, ZaksViolated
from .module import (
    Bimodule,
    ExceedsCutoff,
    Module,
    bimodule_tensor,
    dual,
    ext_dim,
    pd,
)

DEFAULT_CUTOFF = 50


def inj_dim(m: Module, cutoff: int = DEFAULT_CUTOFF, certify: bool = True):
    """Injective dimension of m, computed as pd of its k-dual over the opposite algebra."""
    return pd(dual(m), cutoff, certify=certify)


def vdim(a: Algebra, cutoff: int = DEFAULT_CUTOFF):
    """Common injective dimension of A over itself on both sides.

    Returns an int, ``math.inf`` when one side is certified infinite, or
    :class:`ExceedsCutoff`.  Cached per algebra and cutoff.
    """
    key = ("vdim", cutoff)
    if key in a._cache:
        return a._cache[key]
    left = inj_dim(Module.regular(a), cutoff)
    right = inj_dim(Module.regular(opposite(a)), cutoff)
    finite = [isinstance(v, int) for v in (left, right)]
    if all(finite):
        if left != right:
            raise ZaksViolated(f"inj.dim of A is {left} on the left but {right} on the right")
        out = left
    elif any(v == math.inf for v in (left, right)):
        out = math.inf
    elif any(finite):
        # a finite side forces the other side to the same value; not reached
        # within the cutoff means the cutoff is too small to see it
        out = ExceedsCutoff(cutoff)
    else:
        out = ExceedsCutoff(cutoff)
    a._cache[key] = out
    return out


def is_gorenstein(a: Algebra, cutoff: int = DEFAULT_CUTOFF) -> bool:
    return isinstance(vdim(a, cutoff), int)


def is_mcm(m: Module, cutoff: int = DEFAULT_CUTOFF) -> bool:
    """Ext^i(m, A) = 0 for 1 <= i <= vdim(A); requires A Gorenstein within cutoff."""
    a = m.algebra
    v = vdim(a, cutoff)
    if not isinstance(v, int):
        raise HypothesisFailed("algebra is Gorenstein", f"vdim = {v}")
    reg = Module.regular(a)
    return all(ext_dim(m, reg, i) == 0 for i in range(1, v + 1))


def mcm_bimodule_check(m: Bimodule, n: Bimodule, cutoff: int = DEFAULT_CUTOFF) -> bool:
    """N (x)_B M is MCM over A^e and M (x)_A N is MCM over B^e.

    ``m`` is a (B, A)-bimodule and ``n`` an (A, B)-bimodule, both projective
    on each side.
    """
    for name, x in (("M", m), ("N", n)):
        if not x.is_projective_both_sides():
            raise HypothesisFailed(f"{name} is projective on both sides")
    nm = bimodule_tensor(n, m)
    mn = bimodule_tensor(m, n)
    return is_mcm(nm.module, cutoff) and is_mcm(mn.module, cutoff)


def env_vdim_bound(a: Algebra, cutoff: int = DEFAULT_CUTOFF):
    """``(vdim(A^e), 2 vdim(A), holds)`` for the enveloping-algebra bound."""
    va = vdim(a, cutoff)
    ve = vdim(enveloping(a), cutoff)
    holds = isinstance(va, int) and isinstance(ve, int) and ve <= 2 * va
    return ve, (2 * va if isinstance(va, int) else va), holds
