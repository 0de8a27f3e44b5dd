"""Bounded models of bimodule complexes whose top term is projective on both sides."""

from __future__ import annotations

from typing import Optional

from .complex import (
    DEFAULT_CUTOFF,
    Complex,
    Perfect,
    SoftTruncation,
    is_perfect,
    is_quasi_iso,
    soft_truncation,
)
from .errors import ComplexError, HypothesisFailed
from .module import Bimodule, is_projective


def top_is_two_sided_projective(t: SoftTruncation) -> bool:
    top = t.complex.terms.get(t.top)
    if top is None:
        return True
    return Bimodule.from_module(top).is_projective_both_sides()


def check_one_sided_perfect(x: Complex, cutoff: int = DEFAULT_CUTOFF, seed: int = 0) -> None:
    for side, name in (("left", "X is perfect over B"), ("right", "X is perfect over A^op")):
        v = is_perfect(x.restrict(side), cutoff, certify=True, seed=seed)
        if not isinstance(v, Perfect):
            raise HypothesisFailed(name, v.verdict)


def truncate_per_fact(
    x: Complex,
    s: Optional[int] = None,
    cutoff: int = DEFAULT_CUTOFF,
    seed: int = 0,
    check: bool = True,
) -> SoftTruncation:
    """A bounded model ``L -> x`` of a complex of (B, A)-bimodules.

    Terms below the top degree s are projective over ``B (x) A^op``; the top
    term is projective as a left B-module and as a right A-module.  Without
    ``s`` the smallest admissible degree is used.  ``check`` re-verifies that
    the map to x is a quasi-isomorphism.
    """
    check_one_sided_perfect(x, cutoff, seed)
    hi = x.hi if x.hi is not None else 0
    if s is not None:
        if s < hi:
            raise HypothesisFailed("truncation degree is at least the top of X", f"s = {s} < {hi}")
        t = soft_truncation(x, s)
        if not top_is_two_sided_projective(t):
            raise HypothesisFailed("top term is projective on both sides", f"s = {s}")
    else:
        for cand in range(hi, hi + cutoff + 1):
            t = soft_truncation(x, cand)
            if top_is_two_sided_projective(t):
                break
        else:
            raise HypothesisFailed("top term is projective on both sides", f"not reached by degree {hi + cutoff}")
    if check:
        for n, term in t.complex.terms.items():
            if n < t.top and not is_projective(term):
                raise ComplexError(f"truncation term {n} is not projective")
        if not is_quasi_iso(t.rho):
            raise ComplexError("truncation is not quasi-isomorphic to its input")
    return t
