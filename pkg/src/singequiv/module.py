"""Modules as exact matrix representations, their maps, and bimodule views.

A left module stores one matrix per algebra basis element.  A bimodule over
``(L, R)`` is a left module over ``tensor_algebra(L, opposite(R))``; the
:class:`Bimodule` class is a thin view exposing the two one-sided actions.
Right actions are stored as matrices acting on column vectors, so
``u * r`` has coordinates ``right_action[r] @ u``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from . import linalg
from .algebra import Algebra, field_algebra, opposite, tensor_algebra
from .errors import (
    AlgebraMismatch,
    Inconclusive,
    InvalidModule,
    RadicalNeedsLargerPrime,
    ShapeMismatch,
    TagMismatch,
)

DEFAULT_TRIALS = 20


class Module:
    """A finite-dimensional left module over ``algebra``."""

    def __init__(self, algebra: Algebra, action: np.ndarray, name: str = "", check: bool = True):
        f = algebra.field
        action = f.reduce(np.asarray(action))
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise ShapeMismatch(
                f"action must have shape ({algebra.dim}, d, d), got {np.shape(action)}"
            )
        self.algebra = algebra
        self.field = f
        self.dim = action.shape[1]
        self.action = action
        self.name = name
        self._cache: dict = {}
        self._lock = threading.Lock()
        if check:
            self.validate()

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Module{nm} dim={self.dim} over {self.algebra!r}>"

    def validate(self) -> None:
        f, a = self.field, self.algebra
        if not f.equal(self.act(a.unit), f.eye(self.dim)):
            raise InvalidModule("the unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = f.matmul(self.action[i], self.action[j])
                rhs = self.act(a.structure[i, j])
                if not f.equal(lhs, rhs):
                    raise InvalidModule(
                        f"action is not multiplicative at ({a.labels[i]}, {a.labels[j]})"
                    )

    def act(self, x: np.ndarray) -> np.ndarray:
        """Matrix by which the algebra element with coordinates ``x`` acts."""
        return self.algebra.combine(self.action, x)

    def is_zero(self) -> bool:
        return self.dim == 0

    # constructors ----------------------------------------------------------

    @classmethod
    def regular(cls, a: Algebra) -> "Module":
        return cls(a, a.left_mult.copy(), name="regular", check=False)

    @classmethod
    def zero(cls, a: Algebra) -> "Module":
        return cls(a, a.field.zeros((a.dim, 0, 0)), name="0", check=False)

    @classmethod
    def from_label_actions(cls, a: Algebra, actions: dict, name: str = "") -> "Module":
        """Build a module from matrices for some basis labels.

        Missing labels are filled in when possible: the unit of a one-vertex
        algebra acts as the identity and a path label ``b*a`` acts as the
        product of the matrices of ``b`` and ``a``.
        """
        f = a.field
        given = {k: f.array(v) for k, v in actions.items()}
        if not given and a.dim:
            raise InvalidModule("no action matrices given")
        d = next(iter(given.values())).shape[0] if given else 0
        mats = []
        for lbl in a.labels:
            if lbl in given:
                m = given[lbl]
            elif a.n_vertices == 1 and lbl == a.labels[0]:
                m = f.eye(d)
            elif "*" in lbl and all(p in given for p in lbl.split("*")):
                m = f.eye(d)
                for p in lbl.split("*"):
                    m = f.matmul(m, given[p])
            else:
                raise InvalidModule(f"no action given for basis element {lbl}")
            if m.shape != (d, d):
                raise ShapeMismatch(f"action of {lbl} must be {d} x {d}")
            mats.append(m)
        arr = np.array(mats).reshape(a.dim, d, d) if a.dim else f.zeros((0, d, d))
        return cls(a, arr, name=name)


def direct_sum(*mods: Module) -> Module:
    if not mods:
        raise ValueError("direct_sum needs at least one module")
    a = mods[0].algebra
    for m in mods[1:]:
        _same_algebra(a, m.algebra)
    f = a.field
    acts = np.array([linalg.block_diag(f, [m.action[i] for m in mods]) for i in range(a.dim)])
    d = sum(m.dim for m in mods)
    return Module(a, acts.reshape(a.dim, d, d), check=False)


def _same_algebra(a: Algebra, b: Algebra) -> None:
    if not (a is b or a.same(b)):
        raise AlgebraMismatch("modules live over different algebras")


# ----------------------------------------------------------------------------
# maps


class ModuleMap:
    """A module homomorphism; ``matrix`` has shape (target.dim, source.dim)."""

    def __init__(self, source: Module, target: Module, matrix: np.ndarray, check: bool = True):
        _same_algebra(source.algebra, target.algebra)
        f = source.field
        matrix = f.reduce(np.asarray(matrix)).reshape(target.dim, source.dim)
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            self.validate()

    def validate(self) -> None:
        f = self.source.field
        lhs = f.reduce(self.matrix @ self.source.action) if self.source.dim else None
        rhs = f.reduce(self.target.action @ self.matrix) if self.target.dim else None
        if lhs is not None and rhs is not None and not f.equal(lhs, rhs):
            raise InvalidModule("matrix does not intertwine the actions")

    def __repr__(self):
        return f"<ModuleMap {self.source.dim} -> {self.target.dim}>"

    def __matmul__(self, other: "ModuleMap") -> "ModuleMap":
        """Composition ``self o other``."""
        return ModuleMap(
            other.source, self.target, self.source.field.matmul(self.matrix, other.matrix), check=False
        )

    def rank(self) -> int:
        return linalg.rank(self.source.field, self.matrix)

    def is_iso(self) -> bool:
        return linalg.is_invertible(self.source.field, self.matrix)

    def is_zero(self) -> bool:
        return self.source.field.is_zero(self.matrix)

    @classmethod
    def identity(cls, m: Module) -> "ModuleMap":
        return cls(m, m, m.field.eye(m.dim), check=False)

    @classmethod
    def zero(cls, source: Module, target: Module) -> "ModuleMap":
        return cls(source, target, source.field.zeros((target.dim, source.dim)), check=False)


def _sub_action(action: np.ndarray, basis: np.ndarray, coords: Sequence[int], field) -> np.ndarray:
    """Action on a submodule with basis columns ``basis`` (``basis[coords] = I``)."""
    n = action.shape[0]
    k = basis.shape[1]
    if k == 0:
        return field.zeros((n, 0, 0))
    img = field.reduce(action @ basis)
    return img[:, coords, :]


def submodule(m: Module, vectors: np.ndarray):
    """Submodule generated by the columns of ``vectors`` and its inclusion."""
    f = m.field
    if vectors.size == 0 or m.dim == 0:
        z = Module.zero(m.algebra)
        return z, ModuleMap(z, m, f.zeros((m.dim, 0)), check=False)
    imgs = f.reduce(m.action @ vectors)
    stacked = np.concatenate(list(imgs), axis=1)
    B, coords = linalg.column_space(f, stacked)
    sub = Module(m.algebra, _sub_action(m.action, B, coords, f), check=False)
    return sub, ModuleMap(sub, m, B, check=False)


def _subspace_module(m: Module, B: np.ndarray, coords) -> Module:
    return Module(m.algebra, _sub_action(m.action, B, coords, m.field), check=False)


def quotient(m: Module, sub_vectors: np.ndarray):
    """``m / span`` (the span must be a submodule) and the projection."""
    f = m.field
    Q, S = linalg.quotient_maps(f, sub_vectors, m.dim)
    if Q.shape[0] == 0:
        act = f.zeros((m.algebra.dim, 0, 0))
    else:
        act = f.reduce(f.reduce(Q @ m.action) @ S)
    q = Module(m.algebra, act, check=False)
    return q, ModuleMap(m, q, Q, check=False), S


def kernel(fm: ModuleMap):
    f = fm.source.field
    K, free = linalg.kernel_with_coords(f, fm.matrix)
    sub = _subspace_module(fm.source, K, free)
    return sub, ModuleMap(sub, fm.source, K, check=False)


def image(fm: ModuleMap):
    f = fm.source.field
    B, coords = linalg.column_space(f, fm.matrix)
    sub = _subspace_module(fm.target, B, coords)
    return sub, ModuleMap(sub, fm.target, B, check=False)


def cokernel(fm: ModuleMap):
    q, proj, _ = quotient(fm.target, fm.matrix)
    return q, proj


# ----------------------------------------------------------------------------
# radical, top, projectives


def radical_span(m: Module) -> np.ndarray:
    """Columns span rad(A) * m."""
    f = m.field
    a = m.algebra
    if "rad" not in m._cache:
        if m.dim == 0 or a.radical.shape[0] == 0:
            m._cache["rad"] = f.zeros((m.dim, 0))
        else:
            mats = [m.act(r) for r in a.radical]
            B, _ = linalg.column_space(f, np.concatenate(mats, axis=1))
            m._cache["rad"] = B
    return m._cache["rad"]


def vertex_space(m: Module, v: int) -> np.ndarray:
    """Basis columns of ``e_v m``."""
    B, _ = linalg.column_space(m.field, m.act(m.algebra.idempotents[v]))
    return B


def top_vectors(m: Module) -> List[np.ndarray]:
    """Per vertex, vectors of ``e_v m`` whose classes form a basis of ``e_v top(m)``."""
    if "topvec" in m._cache:
        return m._cache["topvec"]
    f = m.field
    Q, _ = linalg.quotient_maps(f, radical_span(m), m.dim)
    out = []
    for v in range(m.algebra.n_vertices):
        E = vertex_space(m, v)
        if E.shape[1] == 0 or Q.shape[0] == 0:
            out.append(f.zeros((m.dim, 0)))
            continue
        _, piv = linalg.rref(f, f.matmul(Q, E))
        out.append(E[:, piv])
    m._cache["topvec"] = out
    return out


def top(m: Module) -> List[int]:
    """Multiplicity of each simple in ``m / rad(m)``, in vertex order."""
    return [t.shape[1] for t in top_vectors(m)]


def indecomposable_projective(a: Algebra, v: int) -> Module:
    """``A e_v`` with its generator ``e_v`` stored in ``generator``."""
    key = ("proj", v)
    if key not in a._cache:
        f = a.field
        B, coords = linalg.column_space(f, a.combine(a.right_mult, a.idempotents[v]))
        P = Module(a, _sub_action(a.left_mult, B, coords, f), name=f"P{a.vertex_labels[v]}", check=False)
        P.projective_vertices = [v]
        P.generators = a.idempotents[v][coords].reshape(-1, 1)
        P.embedding = B
        a._cache[key] = P
    return a._cache[key]


def projective_module(a: Algebra, vertices: Sequence[int]) -> Module:
    """``sum_j A e_{v_j}`` with generators recorded."""
    f = a.field
    if not vertices:
        z = Module.zero(a)
        z.projective_vertices = []
        z.generators = f.zeros((0, 0))
        return z
    parts = [indecomposable_projective(a, v) for v in vertices]
    P = direct_sum(*parts) if len(parts) > 1 else Module(a, parts[0].action, check=False)
    P.projective_vertices = list(vertices)
    P.generators = linalg.block_diag(f, [p.generators for p in parts])
    P.name = "+".join(f"P{a.vertex_labels[v]}" for v in vertices)
    return P


def _hom_from_projective(P: Module, images: np.ndarray, n: Module) -> np.ndarray:
    """Matrix of the map P -> n sending generator j to ``images[:, j]``."""
    f = n.field
    a = P.algebra
    cols = []
    for j, v in enumerate(P.projective_vertices):
        block = indecomposable_projective(a, v).embedding  # A-coordinates of the basis of A e_v
        X = f.reduce(n.action.reshape(a.dim, n.dim, n.dim) @ images[:, j])  # (dimA, dn)
        cols.append(f.matmul(X.T, block) if n.dim else f.zeros((0, block.shape[1])))
    if not cols:
        return f.zeros((n.dim, 0))
    return np.concatenate(cols, axis=1)


def projective_cover(m: Module):
    """Minimal projective cover ``(P, epi)``."""
    with m._lock:
        if "cover" not in m._cache:
            a = m.algebra
            tv = top_vectors(m)
            verts = [v for v in range(a.n_vertices) for _ in range(tv[v].shape[1])]
            P = projective_module(a, verts)
            imgs = np.concatenate(tv, axis=1) if verts else m.field.zeros((m.dim, 0))
            mat = _hom_from_projective(P, imgs, m)
            m._cache["cover"] = (P, ModuleMap(P, m, mat, check=False))
        return m._cache["cover"]


def is_projective(m: Module) -> bool:
    P, _ = projective_cover(m)
    return P.dim == m.dim


def syzygy_with_inclusion(m: Module):
    """First syzygy of ``m`` with its inclusion into the projective cover."""
    with m._lock:
        cached = m._cache.get("syz")
    if cached is None:
        _P, epi = projective_cover(m)
        cached = kernel(epi)
        with m._lock:
            m._cache.setdefault("syz", cached)
            cached = m._cache["syz"]
    return cached


def syzygy(m: Module, n: int = 1) -> Module:
    if n < 0:
        raise ValueError("syzygy index must be >= 0")
    cur = m
    for _ in range(n):
        if cur.dim == 0:
            return cur
        cur = syzygy_with_inclusion(cur)[0]
    return cur


@dataclass(frozen=True)
class ExceedsCutoff:
    """A homological dimension that was not reached within ``cutoff`` steps."""

    cutoff: int

    def __str__(self):
        return f"> {self.cutoff}"


def pd(m: Module, cutoff: int = 50, certify: bool = False, seed: int = 0):
    """Projective dimension.

    Returns an int, ``-math.inf`` for the zero module, :class:`ExceedsCutoff`,
    or ``math.inf`` when ``certify`` is set and two syzygies are found
    isomorphic (eventually periodic nonzero syzygies).
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    if m.dim == 0:
        return -math.inf
    history = [m]
    cur = m
    for n in range(cutoff + 1):
        cur = syzygy(cur, 1)
        if cur.dim == 0:
            return n
        if certify:
            for prev in history[1:]:
                if _definitely_iso(prev, cur, seed):
                    return math.inf
        history.append(cur)
    return ExceedsCutoff(cutoff)


def _definitely_iso(m: Module, n: Module, seed: int) -> bool:
    try:
        return find_iso(m, n, seed=seed) is not None
    except Inconclusive:
        return False


def minimal_resolution(m: Module, length: int):
    """Terms ``P_0..P_length`` and differentials ``d_i: P_i -> P_{i-1}`` (i >= 1).

    Also returns the augmentation ``P_0 -> m``.
    """
    terms, diffs = [], {}
    P0, eps = projective_cover(m)
    terms.append(P0)
    K, inc = kernel(eps)
    for i in range(1, length + 1):
        P, epi = projective_cover(K)
        terms.append(P)
        diffs[i] = ModuleMap(P, terms[i - 1], m.field.matmul(inc.matrix, epi.matrix), check=False)
        K, inc = kernel(epi)
    return terms, diffs, eps


# ----------------------------------------------------------------------------
# Hom


def hom_matrices(m: Module, n: Module) -> np.ndarray:
    """Basis of Hom(m, n) as an array of shape (k, n.dim, m.dim)."""
    _same_algebra(m.algebra, n.algebra)
    f = m.field
    if m.dim == 0 or n.dim == 0:
        return f.zeros((0, n.dim, m.dim))
    P, epi = projective_cover(m)
    K, _ = linalg.kernel_with_coords(f, epi.matrix)
    S = linalg.solve(f, epi.matrix, f.eye(m.dim))[0]
    a = m.algebra
    # unknowns: image of generator j in e_{v_j} n
    spaces = [vertex_space(n, v) for v in range(a.n_vertices)]
    unknown_maps = []
    for j, v in enumerate(P.projective_vertices):
        E = spaces[v]
        for t in range(E.shape[1]):
            imgs = f.zeros((n.dim, len(P.projective_vertices)))
            imgs[:, j] = E[:, t]
            unknown_maps.append(_hom_from_projective(P, imgs, n))
    if not unknown_maps:
        return f.zeros((0, n.dim, m.dim))
    U = np.array(unknown_maps)  # (u, dn, dP)
    if K.shape[1]:
        cons = f.reduce(U @ K).reshape(len(unknown_maps), -1).T
        C = linalg.kernel_basis(f, cons)
    else:
        C = f.eye(len(unknown_maps))
    if C.shape[1] == 0:
        return f.zeros((0, n.dim, m.dim))
    psi = f.reduce(np.tensordot(C.T, U, axes=(1, 0)))  # (k, dn, dP)
    return f.reduce(psi @ S)


def hom_space(m: Module, n: Module) -> List[ModuleMap]:
    return [ModuleMap(m, n, h, check=False) for h in hom_matrices(m, n)]


def hom_dim(m: Module, n: Module) -> int:
    return hom_matrices(m, n).shape[0]


def ext_dim(m: Module, n: Module, i: int) -> int:
    """dim Ext^i(m, n) from the minimal projective resolution of m."""
    if i < 0:
        raise ValueError("i must be >= 0")
    if i == 0:
        return hom_dim(m, n)
    terms, diffs, _ = minimal_resolution(m, i + 1)
    f = m.field

    def delta_rank(k):
        # rank of Hom(P_{k-1}, n) -> Hom(P_k, n), phi -> phi o d_k
        H = hom_matrices(terms[k - 1], n)
        if H.shape[0] == 0 or terms[k].dim == 0:
            return 0
        comp = f.reduce(H @ diffs[k].matrix).reshape(H.shape[0], -1).T
        return linalg.rank(f, comp)

    h = hom_dim(terms[i], n)
    return h - delta_rank(i + 1) - delta_rank(i)


# ----------------------------------------------------------------------------
# isomorphism and projective summands


def find_iso(m: Module, n: Module, seed: int = 0, trials: int = DEFAULT_TRIALS) -> Optional[ModuleMap]:
    """An isomorphism m -> n, ``None`` when provably none exists.

    Raises :class:`Inconclusive` when invariants agree but random search fails.
    """
    _same_algebra(m.algebra, n.algebra)
    f = m.field
    if m.dim != n.dim or top(m) != top(n):
        return None
    if m.dim == 0:
        return ModuleMap(m, n, f.zeros((0, 0)), check=False)
    H = hom_matrices(m, n)
    if H.shape[0] == 0:
        return None
    dims = {H.shape[0], hom_dim(n, m), hom_dim(m, m), hom_dim(n, n)}
    if len(dims) > 1:
        return None
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        c = f.random(rng, (H.shape[0],))
        cand = f.reduce(np.tensordot(c, H, axes=(0, 0)))
        if linalg.is_invertible(f, cand):
            return ModuleMap(m, n, cand, check=False)
    raise Inconclusive(f"no invertible map among {trials} random homomorphisms")


@dataclass
class StripResult:
    core: Module
    counts: List[int]
    inclusion: np.ndarray  # columns: basis of the core inside the original module


def _top_functional(P: Module) -> np.ndarray:
    Q, _ = linalg.quotient_maps(P.field, radical_span(P), P.dim)
    return Q


def strip_projectives(m: Module) -> StripResult:
    """Split off projective summands ``A e_v`` until none is left.

    A summand ``A e_v`` exists iff some ``g: m -> A e_v`` sends some
    ``u in e_v m`` outside ``rad(A e_v)``; then ``m = A u + ker g``.
    """
    a = m.algebra
    f = m.field
    counts = [0] * a.n_vertices
    core = m
    incl = f.eye(m.dim)
    changed = True
    while changed and core.dim:
        changed = False
        for v in range(a.n_vertices):
            Pv = indecomposable_projective(a, v)
            if Pv.dim > core.dim:
                continue
            E = vertex_space(core, v)
            if E.shape[1] == 0:
                continue
            G = hom_matrices(core, Pv)
            if G.shape[0] == 0:
                continue
            tau = _top_functional(Pv)
            vals = f.reduce(tau @ f.reduce(G @ E))  # (k, 1, t)
            hit = np.argwhere(vals.reshape(G.shape[0], -1) != 0) if f.is_prime else [
                (i, j) for i in range(G.shape[0]) for j in range(E.shape[1]) if vals[i, 0, j] != 0
            ]
            if len(hit) == 0:
                continue
            gi = int(hit[0][0])
            K, free = linalg.kernel_with_coords(f, G[gi])
            new_core = _subspace_module(core, K, free)
            incl = f.matmul(incl, K)
            core = new_core
            counts[v] += 1
            changed = True
            break
    return StripResult(core, counts, incl)


def stable_iso(m: Module, n: Module, seed: int = 0, trials: int = DEFAULT_TRIALS) -> bool:
    """Isomorphism in the stable category; may raise :class:`Inconclusive`."""
    cm = strip_projectives(m).core
    cn = strip_projectives(n).core
    return find_iso(cm, cn, seed=seed, trials=trials) is not None


def is_indecomposable(m: Module) -> bool:
    """True iff End(m) / rad End(m) is the ground field.

    The radical of End(m) is the kernel of the trace form of its action on
    m, valid when the characteristic exceeds dim m.
    """
    if m.dim == 0:
        return False
    f = m.field
    if f.is_prime and f.p <= m.dim:
        raise RadicalNeedsLargerPrime(f"p = {f.p} must exceed dim = {m.dim}")
    E = hom_matrices(m, m)
    k = E.shape[0]
    T = f.zeros((k, k))
    for i in range(k):
        for j in range(k):
            T[i, j] = f.reduce(np.trace(f.matmul(E[i], E[j])))
    return linalg.rank(f, T) == 1


# ----------------------------------------------------------------------------
# simples, duals


def simple_modules(a: Algebra) -> List[Module]:
    if "simples" not in a._cache:
        f = a.field
        out = []
        tops = np.array([a.top_coordinates(a.basis_vector(i)) for i in range(a.dim)])
        for v in range(a.n_vertices):
            act = tops[:, v].reshape(a.dim, 1, 1)
            out.append(Module(a, f.reduce(act), name=f"S{a.vertex_labels[v]}", check=False))
        a._cache["simples"] = out
    return a._cache["simples"]


def dual(m: Module) -> Module:
    """k-dual: a module over the opposite algebra with transposed action."""
    return Module(opposite(m.algebra), m.action.transpose(0, 2, 1).copy(), check=False)


# ----------------------------------------------------------------------------
# bimodules


class Bimodule:
    """An ``(L, R)``-bimodule viewed as a left module over ``L (x) R^op``."""

    def __init__(self, left: Algebra, right: Algebra, module: Module):
        env = tensor_algebra(left, opposite(right))
        if module.algebra is not env and not module.algebra.same(env):
            raise TagMismatch("bimodule's module must live over L (x) R^op")
        self.left = left
        self.right = right
        self.module = module
        self._cache: dict = {}

    def __repr__(self):
        return f"<Bimodule dim={self.dim} over ({self.left!r}, {self.right!r})>"

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def field(self):
        return self.left.field

    @classmethod
    def from_actions(cls, left: Algebra, right: Algebra, left_action, right_action, check=True):
        f = left.field
        la = f.reduce(np.asarray(left_action))
        ra = f.reduce(np.asarray(right_action))
        d = la.shape[1] if la.ndim == 3 else 0
        if la.shape != (left.dim, d, d) or ra.shape != (right.dim, d, d):
            raise ShapeMismatch("bimodule action shapes do not match the algebras")
        env = tensor_algebra(left, opposite(right))
        if d:
            acts = f.reduce(np.einsum("iab,jbc->ijac", la, ra) if f.is_prime else _obj_pairs(la, ra))
        else:
            acts = f.zeros((left.dim, right.dim, 0, 0))
        mod = Module(env, acts.reshape(env.dim, d, d), check=False)
        if check:
            Module(left, la, check=True)
            Module(opposite(right), ra, check=True)
            for i in range(left.dim):
                for j in range(right.dim):
                    if not f.equal(f.matmul(la[i], ra[j]), f.matmul(ra[j], la[i])):
                        raise InvalidModule("left and right actions do not commute")
        bm = cls(left, right, mod)
        bm._cache["left"] = la
        bm._cache["right"] = ra
        return bm

    @classmethod
    def from_module(cls, m: Module) -> "Bimodule":
        factors = m.algebra._cache.get("factors")
        if factors is None:
            raise TagMismatch("module does not live over a tensor algebra")
        return cls(factors[0], opposite(factors[1]), m)

    @classmethod
    def regular(cls, a: Algebra) -> "Bimodule":
        return cls.from_actions(a, a, a.left_mult, a.right_mult, check=False)

    @classmethod
    def zero(cls, left: Algebra, right: Algebra) -> "Bimodule":
        f = left.field
        return cls.from_actions(left, right, f.zeros((left.dim, 0, 0)), f.zeros((right.dim, 0, 0)), check=False)

    @property
    def left_action(self) -> np.ndarray:
        if "left" not in self._cache:
            ro = opposite(self.right)
            vec = np.multiply.outer(self.left.field.eye(self.left.dim), ro.unit)
            vec = vec.reshape(self.left.dim, -1)
            self._cache["left"] = np.array([self.module.act(x) for x in vec]).reshape(
                self.left.dim, self.dim, self.dim
            )
        return self._cache["left"]

    @property
    def right_action(self) -> np.ndarray:
        if "right" not in self._cache:
            f = self.left.field
            vec = np.multiply.outer(self.left.unit, f.eye(self.right.dim)).transpose(1, 0, 2)
            vec = vec.reshape(self.right.dim, -1)
            self._cache["right"] = np.array([self.module.act(x) for x in vec]).reshape(
                self.right.dim, self.dim, self.dim
            )
        return self._cache["right"]

    def restrict(self, side: str) -> Module:
        """``"left"``: module over L; ``"right"``: module over R^op."""
        if side == "left":
            return Module(self.left, self.left_action, check=False)
        if side == "right":
            return Module(opposite(self.right), self.right_action, check=False)
        raise ValueError("side must be 'left' or 'right'")

    def is_projective_both_sides(self) -> bool:
        return is_projective(self.restrict("left")) and is_projective(self.restrict("right"))


def _obj_pairs(la, ra):
    n1, d, _ = la.shape
    n2 = ra.shape[0]
    out = np.empty((n1, n2, d, d), dtype=object)
    for i in range(n1):
        for j in range(n2):
            out[i, j] = np.dot(la[i], ra[j])
    return out


def restrict_side(m: Union[Bimodule, Module], side: str) -> Module:
    if isinstance(m, Module):
        m = Bimodule.from_module(m)
    return m.restrict(side)


def regular_bimodule(a: Algebra) -> Bimodule:
    return Bimodule.regular(a)


def bimodule_of(m: Union[Bimodule, Module]) -> Bimodule:
    return m if isinstance(m, Bimodule) else Bimodule.from_module(m)


@dataclass
class TensorProduct:
    """``m (x)_B x`` with the projection from ``m (x)_k x`` and a section."""

    result: Union[Bimodule, Module]
    Q: np.ndarray
    S: np.ndarray


def tensor_product(m: Bimodule, x: Union[Bimodule, Module]) -> TensorProduct:
    """``m (x)_B x`` for an (L, B)-bimodule m and a B-module or (B, R)-bimodule x.

    The space is ``(m (x)_k x) / span{u b (x) y - u (x) b y}``; basis vectors
    of ``m (x)_k x`` are indexed ``i * dim x + j``.
    """
    f = m.field
    B = m.right
    if isinstance(x, Bimodule):
        if not (x.left is B or x.left.same(B)):
            raise TagMismatch("middle algebras do not agree")
        xl = x.left_action
        dx = x.dim
    else:
        if not (x.algebra is B or x.algebra.same(B)):
            raise TagMismatch("middle algebras do not agree")
        xl = x.action
        dx = x.dim
    dm = m.dim
    N = dm * dx
    rels = []
    if N:
        Im, Ix = f.eye(dm), f.eye(dx)
        for g in B.generators:
            rm = B.combine(m.right_action, g)
            lx = B.combine(xl, g)
            rels.append(f.reduce(np.kron(rm, Ix) - np.kron(Im, lx)))
    sub = np.concatenate(rels, axis=1) if rels else f.zeros((N, 0))
    Q, S = linalg.quotient_maps(f, sub, N)
    q = Q.shape[0]

    def induced(mats_m, mats_x):
        out = []
        for A_, B_ in zip(mats_m, mats_x):
            out.append(f.matmul(f.matmul(Q, f.kron(A_, B_)), S))
        return np.array(out).reshape(len(out), q, q) if out else None

    L = m.left
    Ieye_x = f.eye(dx)
    left = induced(list(m.left_action), [Ieye_x] * L.dim)
    if left is None:
        left = f.zeros((L.dim, q, q))
    if isinstance(x, Bimodule):
        R = x.right
        right = induced([f.eye(dm)] * R.dim, list(x.right_action))
        if right is None:
            right = f.zeros((R.dim, q, q))
        result = Bimodule.from_actions(L, R, left, right, check=False)
    else:
        result = Module(L, left, check=False)
    return TensorProduct(result, Q, S)


def tensor_over(mid: Algebra, m: Bimodule, x: Union[Bimodule, Module]):
    """``m (x)_mid x`` as an L-module (or (L, R)-bimodule)."""
    if not (m.right is mid or m.right.same(mid)):
        raise TagMismatch("m is not a right module over the middle algebra")
    return tensor_product(m, x).result


def tensor_map(tp_src: TensorProduct, tp_tgt: TensorProduct, fm: np.ndarray, gx: np.ndarray, field) -> np.ndarray:
    """Matrix of ``f (x) g`` between two tensor products."""
    return field.matmul(field.matmul(tp_tgt.Q, field.kron(fm, gx)), tp_src.S)


@dataclass
class HomRegular:
    """Hom into the regular module as a bimodule, with the basis of maps."""

    result: Bimodule
    maps: np.ndarray  # (k, dim reg, dim m)
    coords: List[int]  # flattened positions giving coordinates of a map in ``maps``

    def coordinates(self, phi: np.ndarray) -> np.ndarray:
        return phi.reshape(-1)[self.coords]


def hom_bimodule(u: Bimodule, v: Bimodule) -> HomRegular:
    """``Hom_B(u, v)`` for a (B, A)-bimodule u and a (B, C)-bimodule v.

    The result is an (A, C)-bimodule with ``(a f c)(x) = f(x a) c``.
    """
    f = u.field
    if not (u.left is v.left or u.left.same(v.left)):
        raise TagMismatch("Hom over B needs both bimodules to be left B-modules")
    A, C = u.right, v.right
    H = hom_matrices(u.restrict("left"), v.restrict("left"))
    return _hom_bimodule_from(H, f, A, C, v.dim, u.dim,
                              lambda maps, a: maps @ u.right_action[a],
                              lambda maps, c: v.right_action[c] @ maps)


def _hom_bimodule_from(H, f, A, C, dt, ds, left_op, right_op) -> HomRegular:
    k = H.shape[0]
    flat = H.reshape(k, -1).T
    Bm, coords = linalg.column_space(f, flat)
    k = Bm.shape[1]
    maps = Bm.T.reshape(k, dt, ds)
    if k == 0:
        return HomRegular(Bimodule.zero(A, C), maps, coords)

    def coords_of(stack):
        return f.reduce(stack.reshape(k, -1)[:, coords].T)

    la = np.array([coords_of(f.reduce(left_op(maps, a))) for a in range(A.dim)])
    ra = np.array([coords_of(f.reduce(right_op(maps, c))) for c in range(C.dim)])
    return HomRegular(Bimodule.from_actions(A, C, la, ra, check=False), maps, coords)


def hom_into_regular_data(m: Bimodule, side: str = "left") -> HomRegular:
    """``Hom_L(m, L)`` (side ``"left"``) or ``Hom_{R^op}(m, R)`` (side ``"right"``).

    For an (L, R)-bimodule m both results are (R, L)-bimodules:
    ``(r phi l)(u) = phi(u r) l`` on the left side and
    ``(r psi l)(u) = r psi(l u)`` on the right side.
    """
    if side == "left":
        return hom_bimodule(m, Bimodule.regular(m.left))
    if side != "right":
        raise ValueError("side must be 'left' or 'right'")
    f = m.field
    L, R = m.left, m.right
    H = hom_matrices(m.restrict("right"), Module.regular(opposite(R)))
    return _hom_bimodule_from(H, f, R, L, R.dim, m.dim,
                              lambda maps, r: R.left_mult[r] @ maps,
                              lambda maps, l: maps @ m.left_action[l])


def hom_into_regular(m: Bimodule, side: str = "left") -> Bimodule:
    return hom_into_regular_data(m, side).result


def bimodule_tensor(m: Bimodule, n: Bimodule) -> Bimodule:
    """``m (x)_B n`` for (L, B) and (B, R) bimodules."""
    return tensor_product(m, n).result


def bimodule_syzygy(m: Bimodule, n: int = 1) -> Bimodule:
    return Bimodule(m.left, m.right, syzygy(m.module, n))


def regular_as_env(a: Algebra) -> Module:
    """A as a left module over its enveloping algebra."""
    return Bimodule.regular(a).module


def field_module(field) -> Module:
    return Module.regular(field_algebra(field))
