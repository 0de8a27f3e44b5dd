"""Bounded chain complexes of modules, chain maps, and projective resolutions.

Indexing is homological: ``d_n: X_n -> X_{n-1}``.  A complex stores only its
nonzero terms; absent degrees are zero.  Complexes obtained by cutting an
infinite resolution record ``valid_top``, the largest degree whose homology
is meaningful.

Sign conventions: ``(S^n X)_i = X_{i-n}`` with differential ``(-1)^n d``;
the cone of ``f: X -> Y`` has ``Cone_n = X_{n-1} + Y_n`` and
``d(x, y) = (-d x, f x + d y)``; the total complex of a tensor product uses
``d (x) 1 + (-1)^p 1 (x) d``; a homogeneous map f of degree n in a Hom
complex has ``D f = d f - (-1)^n f d``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Union

import numpy as np

from . import linalg
from .algebra import Algebra, opposite, tensor_algebra
from .errors import ComplexError, Inconclusive, TagMismatch
from .module import (
    Bimodule,
    Module,
    ModuleMap,
    find_iso,
    hom_bimodule,
    is_projective,
    projective_cover,
    radical_span,
    tensor_map,
    tensor_product,
)

DEFAULT_CUTOFF = 50


class Complex:
    """A bounded complex of modules over one algebra."""

    def __init__(
        self,
        algebra: Algebra,
        terms: Dict[int, Module],
        diffs: Optional[Dict[int, np.ndarray]] = None,
        valid_top: Optional[int] = None,
        check: bool = True,
    ):
        self.algebra = algebra
        self.field = algebra.field
        self.terms = {n: m for n, m in terms.items() if m.dim > 0}
        for m in self.terms.values():
            if not (m.algebra is algebra or m.algebra.same(algebra)):
                raise ComplexError("term lives over a different algebra")
        self.diffs: Dict[int, np.ndarray] = {}
        for n, d in (diffs or {}).items():
            d = np.asarray(d.matrix if isinstance(d, ModuleMap) else d)
            if d.shape != (self.dim(n - 1), self.dim(n)):
                raise ComplexError(
                    f"d_{n} has shape {d.shape}, expected {(self.dim(n - 1), self.dim(n))}"
                )
            if d.size and not self.field.is_zero(d):
                self.diffs[n] = self.field.reduce(d)
        self.valid_top = valid_top
        self._lock = threading.Lock()
        self._resolution = None
        if check:
            self.validate()

    def __repr__(self):
        dims = ", ".join(f"{n}:{self.dim(n)}" for n in self.degrees)
        return f"<Complex [{dims}] over {self.algebra!r}>"

    @property
    def degrees(self) -> List[int]:
        return sorted(self.terms)

    @property
    def lo(self) -> Optional[int]:
        return min(self.terms) if self.terms else None

    @property
    def hi(self) -> Optional[int]:
        return max(self.terms) if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def term(self, n: int) -> Module:
        m = self.terms.get(n)
        return m if m is not None else Module.zero(self.algebra)

    def dim(self, n: int) -> int:
        m = self.terms.get(n)
        return m.dim if m is not None else 0

    def d(self, n: int) -> np.ndarray:
        got = self.diffs.get(n)
        if got is not None:
            return got
        return self.field.zeros((self.dim(n - 1), self.dim(n)))

    def diff_map(self, n: int) -> ModuleMap:
        return ModuleMap(self.term(n), self.term(n - 1), self.d(n), check=False)

    def validate(self) -> None:
        f = self.field
        for n, d in self.diffs.items():
            src, tgt = self.term(n), self.term(n - 1)
            if not f.equal(f.reduce(d @ src.action), f.reduce(tgt.action @ d)):
                raise ComplexError(f"d_{n} is not a module homomorphism")
            if (n - 1) in self.diffs:
                if not f.is_zero(f.matmul(self.diffs[n - 1], d)):
                    raise ComplexError(f"d_{n - 1} d_{n} != 0")

    @classmethod
    def stalk(cls, m: Module, degree: int = 0) -> "Complex":
        return cls(m.algebra, {degree: m}, {}, check=False)

    @classmethod
    def zero(cls, algebra: Algebra) -> "Complex":
        return cls(algebra, {}, {}, check=False)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * m.dim for n, m in self.terms.items())

    def homology_dim(self, n: int) -> int:
        f = self.field
        return self.dim(n) - linalg.rank(f, self.d(n)) - linalg.rank(f, self.d(n + 1))

    def restrict(self, side: str) -> "Complex":
        """Restriction of a complex of bimodules to one side."""
        terms = {n: Bimodule.from_module(m).restrict(side) for n, m in self.terms.items()}
        if terms:
            alg = next(iter(terms.values())).algebra
        else:
            factors = self.algebra._cache["factors"]
            alg = factors[0] if side == "left" else factors[1]
        return Complex(alg, terms, dict(self.diffs), self.valid_top, check=False)

    def resolution(self) -> "Resolution":
        with self._lock:
            if self._resolution is None:
                self._resolution = Resolution(self)
            return self._resolution


class ChainMap:
    """Components ``f_n: X_n -> Y_n`` commuting with the differentials."""

    def __init__(self, source: Complex, target: Complex, components: Dict[int, np.ndarray], check: bool = True):
        self.source = source
        self.target = target
        f = source.field
        self.components: Dict[int, np.ndarray] = {}
        for n, c in components.items():
            c = np.asarray(c.matrix if isinstance(c, ModuleMap) else c)
            if c.shape != (target.dim(n), source.dim(n)):
                raise ComplexError(f"component {n} has shape {c.shape}")
            if c.size:
                self.components[n] = f.reduce(c)
        if check:
            self.validate()

    def component(self, n: int) -> np.ndarray:
        got = self.components.get(n)
        if got is not None:
            return got
        return self.source.field.zeros((self.target.dim(n), self.source.dim(n)))

    def validate(self) -> None:
        f = self.source.field
        degs = set(self.source.terms) | set(self.target.terms)
        for n, c in self.components.items():
            src, tgt = self.source.term(n), self.target.term(n)
            if not f.equal(f.reduce(c @ src.action), f.reduce(tgt.action @ c)):
                raise ComplexError(f"component {n} is not a module homomorphism")
        for n in degs | {k + 1 for k in degs}:
            lhs = f.matmul(self.target.d(n), self.component(n))
            rhs = f.matmul(self.component(n - 1), self.source.d(n))
            if not f.equal(lhs, rhs):
                raise ComplexError(f"chain map does not commute in degree {n}")

    @classmethod
    def identity(cls, c: Complex) -> "ChainMap":
        return cls(c, c, {n: c.field.eye(m.dim) for n, m in c.terms.items()}, check=False)


def homology(c: Complex, n: int) -> Module:
    f = c.field
    K, free = linalg.kernel_with_coords(f, c.d(n))
    X = c.term(n)
    if X.dim == 0:
        return Module.zero(c.algebra)
    act = f.reduce(X.action @ K)[:, free, :] if K.shape[1] else f.zeros((c.algebra.dim, 0, 0))
    Z = Module(c.algebra, act, check=False)
    B = c.d(n + 1)
    sub = B[free, :] if K.shape[1] else f.zeros((0, B.shape[1]))
    Q, S = linalg.quotient_maps(f, sub, Z.dim)
    if Q.shape[0] == 0:
        return Module.zero(c.algebra)
    return Module(c.algebra, f.reduce(f.reduce(Q @ Z.action) @ S), check=False)


def shift(c: Complex, n: int) -> Complex:
    sign = -1 if n % 2 else 1
    terms = {i + n: m for i, m in c.terms.items()}
    diffs = {i + n: c.field.reduce(sign * d) for i, d in c.diffs.items()}
    vt = None if c.valid_top is None else c.valid_top + n
    return Complex(c.algebra, terms, diffs, vt, check=False)


def shift_map(f: ChainMap, n: int) -> ChainMap:
    return ChainMap(shift(f.source, n), shift(f.target, n), {i + n: c for i, c in f.components.items()}, check=False)


def _min_top(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def cone(fm: ChainMap) -> Complex:
    """Mapping cone; degree n holds ``X_{n-1} + Y_n`` in that order."""
    X, Y = fm.source, fm.target
    f = X.field
    degs = set(Y.terms) | {n + 1 for n in X.terms}
    terms, diffs = {}, {}
    from .module import direct_sum

    for n in degs:
        parts = [X.term(n - 1), Y.term(n)]
        terms[n] = direct_sum(*parts)
    for n in degs:
        if (n - 1) not in degs:
            continue
        dx_prev = X.d(n - 1)
        a, b = X.dim(n - 1), Y.dim(n)
        a2, b2 = X.dim(n - 2), Y.dim(n - 1)
        D = f.zeros((a2 + b2, a + b))
        D[:a2, :a] = f.reduce(-dx_prev)
        D[a2:, :a] = fm.component(n - 1)
        D[a2:, a:] = Y.d(n)
        diffs[n] = D
    vt = _min_top(None if X.valid_top is None else X.valid_top + 1, Y.valid_top)
    return Complex(X.algebra, terms, diffs, vt, check=False)


def cone_maps(fm: ChainMap):
    """The canonical maps ``Y -> Cone(f)`` and ``Cone(f) -> S X``."""
    C = cone(fm)
    f = fm.source.field
    inc, proj = {}, {}
    for n in C.terms:
        a, b = fm.source.dim(n - 1), fm.target.dim(n)
        i = f.zeros((a + b, b))
        i[a:, :] = f.eye(b)
        p = f.zeros((a, a + b))
        p[:, :a] = f.eye(a)
        inc[n], proj[n] = i, p
    Y, SX = fm.target, shift(fm.source, 1)
    return C, ChainMap(Y, C, {n: inc[n] for n in Y.terms}, check=False), ChainMap(
        C, SX, {n: proj[n] for n in C.terms if n in SX.terms}, check=False
    )


def hard_truncate_below(c: Complex, m: int):
    """Brutal truncation: ``(X_{>=m}, projection X -> X_{>=m}, X_{<m})``."""
    up = {n: t for n, t in c.terms.items() if n >= m}
    low = {n: t for n, t in c.terms.items() if n < m}
    q = Complex(c.algebra, up, {n: d for n, d in c.diffs.items() if n > m}, c.valid_top, check=False)
    s = Complex(c.algebra, low, {n: d for n, d in c.diffs.items() if n < m}, c.valid_top, check=False)
    proj = ChainMap(c, q, {n: c.field.eye(t.dim) for n, t in up.items()}, check=False)
    return q, proj, s


def is_quasi_iso(fm: ChainMap) -> bool:
    C = cone(fm)
    for n in C.degrees:
        if C.valid_top is not None and n > C.valid_top:
            continue
        if C.homology_dim(n) != 0:
            return False
    return True


def is_exact(c: Complex) -> bool:
    return all(
        c.homology_dim(n) == 0 for n in c.degrees if c.valid_top is None or n <= c.valid_top
    )


# ----------------------------------------------------------------------------
# tensor and Hom complexes


def _bimodule_view(m: Module) -> Bimodule:
    return Bimodule.from_module(m)


@dataclass
class TensorComplex:
    complex: Complex
    blocks: Dict[int, List[tuple]]  # degree -> [(p, q, offset, TensorProduct)]


def tensor_complexes_data(xc: Complex, yc: Complex) -> TensorComplex:
    """Total complex of ``xc (x)_B yc``.

    ``xc`` is a complex of (L, B)-bimodules; ``yc`` a complex of left
    B-modules or of (B, R)-bimodules.
    """
    factors = xc.algebra._cache.get("factors")
    if factors is None:
        raise TagMismatch("first complex must consist of bimodules")
    L, B = factors[0], opposite(factors[1])
    plain = yc.algebra is B or yc.algebra.same(B)
    if plain:
        out_alg = L
        view_y = lambda m: m  # noqa: E731
    else:
        yf = yc.algebra._cache.get("factors")
        if yf is None or not (yf[0] is B or yf[0].same(B)):
            raise TagMismatch("second complex is not over the middle algebra")
        out_alg = tensor_algebra(L, yf[1])
        view_y = _bimodule_view
    f = xc.field
    blocks: Dict[int, List[tuple]] = {}
    for p, X in sorted(xc.terms.items()):
        for q, Y in sorted(yc.terms.items()):
            tp = tensor_product(_bimodule_view(X), view_y(Y))
            blocks.setdefault(p + q, []).append((p, q, tp))
    terms, layout = {}, {}
    from .module import direct_sum

    for n, items in blocks.items():
        mods = [
            (tp.result.module if isinstance(tp.result, Bimodule) else tp.result) for _, _, tp in items
        ]
        off = 0
        lay = []
        for (p, q, tp), m in zip(items, mods):
            lay.append((p, q, off, tp))
            off += m.dim
        layout[n] = lay
        terms[n] = direct_sum(*mods) if len(mods) > 1 else mods[0]
    diffs = {}
    for n in layout:
        if (n - 1) not in layout:
            continue
        tgt = {(p, q): (off, tp) for p, q, off, tp in layout[n - 1]}
        D = f.zeros((terms[n - 1].dim, terms[n].dim))
        for p, q, off, tp in layout[n]:
            w = tp.Q.shape[0]
            if (p - 1, q) in tgt:
                o2, tp2 = tgt[(p - 1, q)]
                blk = tensor_map(tp, tp2, xc.d(p), f.eye(yc.dim(q)), f)
                D[o2:o2 + blk.shape[0], off:off + w] += blk
            if (p, q - 1) in tgt:
                o2, tp2 = tgt[(p, q - 1)]
                blk = tensor_map(tp, tp2, f.eye(xc.dim(p)), yc.d(q), f)
                if p % 2:
                    blk = -blk
                D[o2:o2 + blk.shape[0], off:off + w] += blk
        diffs[n] = f.reduce(D)
    vt = None
    if xc.valid_top is not None or yc.valid_top is not None:
        vt = _min_top(
            None if xc.valid_top is None else xc.valid_top + (yc.lo or 0),
            None if yc.valid_top is None else yc.valid_top + (xc.lo or 0),
        )
    return TensorComplex(Complex(out_alg, terms, diffs, vt, check=False), layout)


def tensor_complexes(xc: Complex, yc: Complex) -> Complex:
    return tensor_complexes_data(xc, yc).complex


@dataclass
class HomComplex:
    complex: Complex
    blocks: Dict[int, List[tuple]]  # degree n -> [(p, offset, HomRegular)] for Hom(U_p, V_{p+n})


def hom_complex_data(uc: Complex, vc: Complex) -> HomComplex:
    """``Hom_B(U, V)`` for complexes of (B, A)- and (B, C)-bimodules.

    Degree n holds the product over p of ``Hom_B(U_p, V_{p+n})``; the
    result is a complex of (A, C)-bimodules.
    """
    uf = uc.algebra._cache.get("factors")
    vf = vc.algebra._cache.get("factors")
    if uf is None or vf is None:
        raise TagMismatch("Hom complex needs complexes of bimodules")
    if not (uf[0] is vf[0] or uf[0].same(vf[0])):
        raise TagMismatch("Hom complex needs a common left algebra")
    A = opposite(uf[1])
    out_alg = tensor_algebra(A, vf[1])
    f = uc.field
    blocks: Dict[int, List[tuple]] = {}
    for p, U in sorted(uc.terms.items()):
        for q, V in sorted(vc.terms.items()):
            h = hom_bimodule(Bimodule.from_module(U), Bimodule.from_module(V))
            if h.result.dim:
                blocks.setdefault(q - p, []).append((p, h))
    from .module import direct_sum

    terms, layout = {}, {}
    for n, items in blocks.items():
        off, lay = 0, []
        for p, h in items:
            lay.append((p, off, h))
            off += h.result.dim
        layout[n] = lay
        mods = [h.result.module for _, h in items]
        terms[n] = direct_sum(*mods) if len(mods) > 1 else mods[0]
    diffs = {}
    for n in layout:
        if (n - 1) not in layout:
            continue
        tgt = {p: (off, h) for p, off, h in layout[n - 1]}
        sign = -1 if n % 2 == 0 else 1  # -(-1)^n
        D = f.zeros((terms[n - 1].dim, terms[n].dim))
        for p, off, h in layout[n]:
            k = h.result.dim
            if p in tgt:
                o2, h2 = tgt[p]
                img = f.reduce(vc.d(p + n) @ h.maps)
                D[o2:o2 + h2.result.dim, off:off + k] += img.reshape(k, -1)[:, h2.coords].T
            if (p + 1) in tgt:
                o2, h2 = tgt[p + 1]
                img = f.reduce(h.maps @ uc.d(p + 1))
                D[o2:o2 + h2.result.dim, off:off + k] += sign * img.reshape(k, -1)[:, h2.coords].T
        diffs[n] = f.reduce(D)
    return HomComplex(Complex(out_alg, terms, diffs, check=False), layout)


def hom_complex(uc: Complex, vc: Complex) -> Complex:
    return hom_complex_data(uc, vc).complex


def regular_stalk(b: Algebra) -> Complex:
    return Complex.stalk(Bimodule.regular(b).module)


def hom_complex_regular(pc: Complex) -> Complex:
    """``Hom_B(P, B)`` for a complex of (B, A)-bimodules; degree -p holds Hom_B(P_p, B)."""
    uf = pc.algebra._cache.get("factors")
    if uf is None:
        raise TagMismatch("expected a complex of bimodules")
    return hom_complex(pc, regular_stalk(uf[0]))


# ----------------------------------------------------------------------------
# resolutions


class Resolution:
    """Minimal projective resolution ``rho: P -> c``, extended on demand.

    P lives in degrees ``>= lo(c)`` and is built upward: at degree n take a
    projective cover of the cycles of Cone(rho) in degree n modulo the
    boundaries coming from c.  Beyond the top of c this continues as a
    minimal resolution of the tail syzygy.
    """

    def __init__(self, c: Complex):
        self.c = c
        self.algebra = c.algebra
        self.terms: Dict[int, Module] = {}
        self.d: Dict[int, np.ndarray] = {}
        self.rho: Dict[int, np.ndarray] = {}
        self.lo = c.lo if c.lo is not None else 0
        self.built = self.lo - 1
        self._lock = threading.Lock()

    def P(self, n: int) -> Module:
        self.extend(n)
        return self.terms.get(n, Module.zero(self.algebra))

    def dim(self, n: int) -> int:
        return self.P(n).dim

    def dP(self, n: int) -> np.ndarray:
        self.extend(n)
        return self.d.get(n, self.c.field.zeros((self._dim(n - 1), self._dim(n))))

    def _dim(self, n):
        t = self.terms.get(n)
        return t.dim if t is not None else 0

    def extend(self, top: int) -> None:
        with self._lock:
            while self.built < top:
                self._step(self.built + 1)
                self.built += 1

    def _step(self, n: int) -> None:
        c, f, alg = self.c, self.c.field, self.algebra
        from .module import direct_sum

        Pm1 = self.terms.get(n - 1, Module.zero(alg))
        Cn = c.term(n)
        a, b = Pm1.dim, Cn.dim
        if a + b == 0:
            self._store(n, Module.zero(alg), f.zeros((0, 0)), f.zeros((0, 0)))
            return
        W = direct_sum(Pm1, Cn)
        # (p, x) -> (d p, rho p - d x) in P_{n-2} + C_{n-1}
        a2, b2 = self._dim(n - 2), c.dim(n - 1)
        M = f.zeros((a2 + b2, a + b))
        if a and a2:
            M[:a2, :a] = self.d.get(n - 1, f.zeros((a2, a)))
        if a and b2:
            M[a2:, :a] = self.rho.get(n - 1, f.zeros((b2, a)))
        if b and b2:
            M[a2:, a:] = f.reduce(-c.d(n))
        K, free = linalg.kernel_with_coords(f, M)
        if K.shape[1] == 0:
            self._store(n, Module.zero(alg), f.zeros((a, 0)), f.zeros((b, 0)))
            return
        Z = Module(alg, f.reduce(W.action @ K)[:, free, :], check=False)
        bnd = f.zeros((a + b, c.dim(n + 1)))
        if b and c.dim(n + 1):
            bnd[a:, :] = c.d(n + 1)
        sub = bnd[free, :]
        Q, S = linalg.quotient_maps(f, sub, Z.dim)
        if Q.shape[0] == 0:
            self._store(n, Module.zero(alg), f.zeros((a, 0)), f.zeros((b, 0)))
            return
        Qm = Module(alg, f.reduce(f.reduce(Q @ Z.action) @ S), check=False)
        P, epi = projective_cover(Qm)
        # lift generators: g in e_v Qm -> e_v S g in Z
        from .module import _hom_from_projective

        lifts = []
        for j, v in enumerate(P.projective_vertices):
            g = f.matmul(epi.matrix, P.generators[:, j:j + 1])
            z = f.matmul(S, g)
            z = f.matmul(Z.act(alg.idempotents[v]), z)
            lifts.append(z)
        lifts = np.concatenate(lifts, axis=1)
        to_Z = _hom_from_projective(P, lifts, Z)
        to_W = f.matmul(K, to_Z)
        self._store(n, P, to_W[:a, :], to_W[a:, :])

    def _store(self, n, P, dmat, rmat):
        if P.dim:
            self.terms[n] = P
            if dmat.size:
                self.d[n] = dmat
            if rmat.size:
                self.rho[n] = rmat

    def complex(self, top: int) -> Complex:
        """Brutal truncation of P at degree ``top`` (homology valid below top)."""
        self.extend(top)
        terms = {n: t for n, t in self.terms.items() if n <= top}
        diffs = {n: d for n, d in self.d.items() if n <= top}
        return Complex(self.algebra, terms, diffs, valid_top=top - 1, check=False)

    def chain_map(self, top: int) -> ChainMap:
        P = self.complex(top)
        comps = {n: r for n, r in self.rho.items() if n <= top}
        return ChainMap(P, self.c, comps, check=False)

    def image_of_d(self, n: int) -> Module:
        """``im(d_n) <= P_{n-1}`` as a module."""
        from .module import image

        d = self.dP(n)
        Pm1 = self.terms.get(n - 1, Module.zero(self.algebra))
        Pn = self.terms.get(n, Module.zero(self.algebra))
        if d.size == 0:
            return Module.zero(self.algebra)
        return image(ModuleMap(Pn, Pm1, d, check=False))[0]


def resolve_complex(c: Complex, depth: int):
    """``(P, rho)`` with P realized through homological degree ``depth``.

    ``depth`` counts upward from the bottom of c: the resolution of a module
    in degree 0 has its syzygies in degrees 1, 2, ...; the returned complex
    has valid homology below ``depth``.
    """
    r = c.resolution()
    return r.complex(depth), r.chain_map(depth)


def tail_syzygy(c: Complex, n: int) -> Module:
    """``im(d_n)`` of the minimal resolution, for n above the top of c.

    For a module placed in degree 0 this is the n-th syzygy.
    """
    top = c.hi if c.hi is not None else 0
    if n <= top:
        raise ValueError(f"tail syzygies start above degree {top}")
    return c.resolution().image_of_d(n)


@dataclass(frozen=True)
class Perfect:
    bound: float  # top degree of the minimal bounded projective model (-inf if exact)

    verdict = "perfect"


@dataclass(frozen=True)
class NotPerfectWithinCutoff:
    cutoff: int

    verdict = "not_perfect_within_cutoff"


@dataclass(frozen=True)
class NotPerfect:
    """Certified: two tail syzygies are isomorphic, so they never vanish."""

    first: int
    repeat: int

    verdict = "not_perfect"


PerfectVerdict = Union[Perfect, NotPerfectWithinCutoff, NotPerfect]


def is_perfect(c: Complex, cutoff: int = DEFAULT_CUTOFF, certify: bool = False, seed: int = 0) -> PerfectVerdict:
    if c.is_zero():
        return Perfect(-math.inf)
    r = c.resolution()
    top = c.hi
    seen = []
    for n in range(top + 1, top + 2 + cutoff):
        T = r.image_of_d(n)
        if T.dim == 0 or is_projective(T):
            last = n if T.dim else n - 1
            degs = [k for k, t in r.terms.items() if k <= last and t.dim]
            return Perfect(max(degs) if degs else -math.inf)
        if certify:
            for k, prev in seen:
                try:
                    if find_iso(prev, T, seed=seed) is not None:
                        return NotPerfect(k, n)
                except Inconclusive:
                    pass
            seen.append((n, T))
    return NotPerfectWithinCutoff(cutoff)


def is_minimal(c: Complex) -> bool:
    """Every differential lands in the radical of its target."""
    f = c.field
    for n, d in c.diffs.items():
        if not linalg.in_span(f, radical_span(c.term(n - 1)), d):
            return False
    return True


def is_degreewise_projective(c: Complex) -> bool:
    return all(is_projective(t) for t in c.terms.values())


@dataclass
class SoftTruncation:
    """``L = (P_{<s}, P_s / im d_{s+1})`` with the induced map ``rho: L -> c``."""

    complex: Complex
    top: int
    rho: ChainMap


def soft_truncation(c: Complex, s: int) -> SoftTruncation:
    """Cut the minimal resolution of c at degree ``s >= hi(c)``.

    Below s the terms are those of the resolution; degree s holds the
    cokernel of ``d_{s+1}``, which is quasi-isomorphic to c because the
    resolution is exact above the top of c.
    """
    from .module import quotient

    top = c.hi if c.hi is not None else 0
    if s < top:
        raise ValueError(f"truncation degree {s} is below the top degree {top} of the complex")
    r = c.resolution()
    r.extend(s + 1)
    f = c.field
    terms = {n: t for n, t in r.terms.items() if n < s}
    diffs = {n: d for n, d in r.d.items() if n < s}
    comps = {n: m for n, m in r.rho.items() if n < s}
    Ps = r.terms.get(s)
    if Ps is not None:
        q, _, S = quotient(Ps, r.dP(s + 1))
        if q.dim:
            terms[s] = q
            if (s - 1) in r.terms:
                diffs[s] = f.matmul(r.dP(s), S)
            if s in r.rho:
                comps[s] = f.matmul(r.rho[s], S)
    L = Complex(c.algebra, terms, diffs, check=False)
    return SoftTruncation(L, s, ChainMap(L, c, comps, check=False))
