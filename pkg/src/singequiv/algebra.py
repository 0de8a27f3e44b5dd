"""Finite-dimensional elementary algebras given by exact structure constants.

An :class:`Algebra` stores a basis, the tensor ``c[i, j, k]`` with
``b_i * b_j = sum_k c[i, j, k] b_k``, the coordinates of the unit, a complete
set of primitive orthogonal idempotents and a basis of the radical.  Only
elementary algebras (``A / rad A = k^n``) are accepted.

Path algebras use the composition convention: for arrows ``a: u -> v`` and
``b: v -> w`` the product ``b*a`` is the path "first a, then b".  Left
modules are then ordinary quiver representations and ``A e_u`` is spanned by
the paths starting at ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import (
    FieldMismatch,
    InconsistentRelations,
    InvalidAlgebra,
    NotIdempotent,
    NotNilpotent,
    RadicalNeedsLargerPrime,
)
from .linalg import Field

DEFAULT_NILPOTENCY_BOUND = 30
MAX_PATHS = 20000


class Algebra:
    """An elementary finite-dimensional algebra over a :class:`Field`.

    Instances are immutable after construction; derived data (multiplication
    matrices, generators, simple modules) is computed lazily and cached.
    """

    def __init__(
        self,
        field: Field,
        structure: np.ndarray,
        unit: np.ndarray,
        idempotents: np.ndarray,
        radical: np.ndarray,
        labels: Optional[Sequence[str]] = None,
        vertex_labels: Optional[Sequence[str]] = None,
        provenance: str = "raw",
        name: str = "",
        check: bool = True,
    ):
        n = structure.shape[0]
        if structure.shape != (n, n, n):
            raise InvalidAlgebra(f"structure constants must be n x n x n, got {structure.shape}")
        self.field = field
        self.dim = n
        self.structure = field.reduce(structure)
        self.unit = field.reduce(np.asarray(unit))
        self.idempotents = field.reduce(np.asarray(idempotents).reshape(-1, n))
        self.radical = field.reduce(np.asarray(radical).reshape(-1, n))
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(n)]
        nv = self.idempotents.shape[0]
        self.vertex_labels = (
            list(vertex_labels) if vertex_labels is not None else [str(i + 1) for i in range(nv)]
        )
        self.provenance = provenance
        self.name = name
        self._cache: Dict[str, object] = {}
        if check:
            self.validate()

    def __repr__(self):
        nm = f" {self.name}" if self.name else ""
        return f"<Algebra{nm} dim={self.dim} vertices={self.n_vertices} ({self.provenance})>"

    @property
    def n_vertices(self) -> int:
        return self.idempotents.shape[0]

    # multiplication ----------------------------------------------------------

    @property
    def left_mult(self) -> np.ndarray:
        """``left_mult[i]`` is the matrix of ``x -> b_i x``."""
        if "L" not in self._cache:
            self._cache["L"] = np.ascontiguousarray(self.structure.transpose(0, 2, 1))
        return self._cache["L"]

    @property
    def right_mult(self) -> np.ndarray:
        """``right_mult[j]`` is the matrix of ``x -> x b_j``."""
        if "R" not in self._cache:
            self._cache["R"] = np.ascontiguousarray(self.structure.transpose(1, 2, 0))
        return self._cache["R"]

    def combine(self, mats: np.ndarray, vec: np.ndarray) -> np.ndarray:
        """``sum_i vec[i] * mats[i]`` reduced in the field."""
        f = self.field
        if f.is_prime:
            return np.mod(np.tensordot(np.asarray(vec, dtype=np.int64), mats, axes=(0, 0)), f.p)
        out = f.zeros(mats.shape[1:])
        for i, c in enumerate(vec):
            if c != 0:
                out = out + c * mats[i]
        return out

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.field.matmul(self.combine(self.left_mult, x), y.reshape(-1, 1))[:, 0]

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = 1
        return v

    def element(self, label: str) -> np.ndarray:
        return self.basis_vector(self.labels.index(label))

    def vertex_index(self, label: str) -> int:
        return self.vertex_labels.index(str(label))

    def idempotent_sum(self, vertices: Sequence[int]) -> np.ndarray:
        e = self.field.zeros(self.dim)
        for v in vertices:
            e = self.field.reduce(e + self.idempotents[v])
        return e

    # structure ----------------------------------------------------------------

    @property
    def generators(self) -> np.ndarray:
        """Idempotents followed by radical elements spanning rad / rad^2."""
        if "gens" not in self._cache:
            f = self.field
            rad = self.radical
            if rad.shape[0]:
                prods = [self.mul(r, s) for r in rad for s in rad]
                sq = np.array(prods).T if prods else f.zeros((self.dim, 0))
                sq_basis, _ = linalg.column_space(f, sq)
                chosen = []
                cur = sq_basis
                r0 = cur.shape[1]
                for r in rad:
                    cand = np.concatenate([cur, r.reshape(-1, 1)], axis=1)
                    rk = linalg.rank(f, cand)
                    if rk > r0:
                        chosen.append(r)
                        cur, r0 = cand, rk
                gens = np.concatenate([self.idempotents, np.array(chosen).reshape(-1, self.dim)])
            else:
                gens = self.idempotents.copy()
            self._cache["gens"] = f.reduce(gens)
        return self._cache["gens"]

    def validate(self) -> None:
        f = self.field
        n = self.dim
        C = self.structure
        L = self.left_mult
        R = self.right_mult
        # associativity: (b_i b_j) b_k = b_i (b_j b_k), checked as L_{b_i b_j} = L_i L_j
        for i in range(n):
            for j in range(n):
                lhs = self.combine(L, C[i, j])
                rhs = f.matmul(L[i], L[j])
                if not f.equal(lhs, rhs):
                    raise InvalidAlgebra(f"associativity fails at ({self.labels[i]}, {self.labels[j]})")
        U = self.combine(L, self.unit)
        if not f.equal(U, f.eye(n)) or not f.equal(self.combine(R, self.unit), f.eye(n)):
            raise InvalidAlgebra("unit law fails")
        E = self.idempotents
        for a in range(E.shape[0]):
            for b in range(E.shape[0]):
                prod = self.mul(E[a], E[b])
                want = E[a] if a == b else f.zeros(n)
                if not f.equal(prod, want):
                    raise InvalidAlgebra("idempotents are not orthogonal idempotents")
        if E.shape[0] and not f.equal(f.reduce(E.sum(axis=0)), self.unit):
            raise InvalidAlgebra("idempotents do not sum to 1")
        rad = self.radical
        if E.shape[0] + rad.shape[0] != n:
            raise InvalidAlgebra("not elementary: dim A - dim rad != number of idempotents")
        if rad.shape[0]:
            rb = rad.T
            if linalg.rank(f, rb) != rad.shape[0]:
                raise InvalidAlgebra("radical basis is not independent")
            for i in range(n):
                if not linalg.in_span(f, rb, f.matmul(L[i], rb)) or not linalg.in_span(
                    f, rb, f.matmul(R[i], rb)
                ):
                    raise InvalidAlgebra("radical is not a two-sided ideal")
            # nilpotency: rad^k = 0 for some k <= dim
            cur = rb
            for _ in range(n + 1):
                if f.is_zero(cur):
                    break
                cur = np.concatenate([f.matmul(self.combine(L, r), cur) for r in rad], axis=1)
                cur, _ = linalg.column_space(f, cur)
            else:
                raise InvalidAlgebra("radical is not nilpotent")
        full = np.concatenate([E, rad]).T if n else f.zeros((0, 0))
        if n and linalg.rank(f, full) != n:
            raise InvalidAlgebra("idempotents and radical do not span the algebra")

    def same(self, other: "Algebra") -> bool:
        """Structural equality (same field, basis order and constants)."""
        if self is other:
            return True
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.field.equal(self.structure, other.structure)
            and self.field.equal(self.unit, other.unit)
        )

    def top_coordinates(self, x: np.ndarray) -> np.ndarray:
        """Coefficients of ``x`` on the idempotents modulo the radical."""
        if "topsolve" not in self._cache:
            self._cache["topsolve"] = linalg.inverse(
                self.field, np.concatenate([self.idempotents, self.radical]).T
            )
        coords = self.field.matmul(self._cache["topsolve"], x.reshape(-1, 1))[:, 0]
        return coords[: self.n_vertices]


# ----------------------------------------------------------------------------
# constructions


@lru_cache(maxsize=None)
def field_algebra(field: Field) -> Algebra:
    """The ground field as a one-dimensional algebra."""
    s = field.zeros((1, 1, 1))
    s[0, 0, 0] = 1
    u = field.array([1])
    return Algebra(field, s, u, u.reshape(1, 1), field.zeros((0, 1)), ["e"], ["1"], "raw", "k")


@dataclass
class QuiverPresentation:
    """Vertices, arrows ``(label, source, target)`` and relations.

    A relation is a list of ``(coefficient, path)`` where a path is a tuple of
    arrow labels in product order (``("b", "a")`` means ``b*a``).
    """

    vertices: List[str]
    arrows: List[Tuple[str, str, str]] = dc_field(default_factory=list)
    relations: List[List[Tuple[object, Tuple[str, ...]]]] = dc_field(default_factory=list)
    nilpotency_bound: int = DEFAULT_NILPOTENCY_BOUND
    name: str = ""


def _path_ends(path: Tuple[str, ...], arrows: Dict[str, Tuple[str, str]]):
    for left, right in zip(path, path[1:]):
        if arrows[left][0] != arrows[right][1]:
            return None
    return arrows[path[-1]][0], arrows[path[0]][1]


def algebra_from_quiver(q: QuiverPresentation, field: Field = Field()) -> Algebra:
    vertices = [str(v) for v in q.vertices]
    if len(set(vertices)) != len(vertices):
        raise InconsistentRelations("duplicate vertex labels")
    arrows: Dict[str, Tuple[str, str]] = {}
    for label, s, t in q.arrows:
        if label in arrows:
            raise InconsistentRelations(f"duplicate arrow {label}")
        if str(s) not in vertices or str(t) not in vertices:
            raise InconsistentRelations(f"arrow {label} uses an unknown vertex")
        arrows[label] = (str(s), str(t))
    relations = []
    for rel in q.relations:
        ends = set()
        terms = []
        for coeff, path in rel:
            path = tuple(path)
            if any(a not in arrows for a in path):
                raise InconsistentRelations(f"relation uses unknown arrow in {path}")
            if len(path) < 2:
                raise InconsistentRelations(
                    f"relation term {'*'.join(path) or '1'} has length < 2 (not admissible)"
                )
            e = _path_ends(path, arrows)
            if e is None:
                raise InconsistentRelations(f"path {'*'.join(path)} is not composable")
            ends.add(e)
            terms.append((field.scalar(coeff), path))
        if len(ends) > 1:
            raise InconsistentRelations("relation combines non-parallel paths")
        relations.append(terms)

    by_source: Dict[str, List[str]] = {v: [] for v in vertices}
    for a, (s, _t) in sorted(arrows.items()):
        by_source[s].append(a)

    # paths grouped by length, each as (arrow tuple, source, target)
    levels: List[List[Tuple[Tuple[str, ...], str, str]]] = [[((), v, v) for v in vertices]]
    bound = q.nilpotency_bound
    for N in range(2, bound + 2):
        while len(levels) < N:
            prev = levels[-1]
            nxt = []
            if len(levels) == 1:
                nxt = [((a,), s, t) for a, (s, t) in sorted(arrows.items())]
            else:
                for path, s, t in prev:
                    for a in sorted(arrows):
                        if arrows[a][0] == t:
                            nxt.append(((a,) + path, s, arrows[a][1]))
            nxt.sort(key=lambda x: x[0])
            levels.append(nxt)
            if sum(len(lv) for lv in levels) > MAX_PATHS:
                raise NotNilpotent("path space grows beyond the enumeration limit")
        paths = [p for lv in levels[:N] for p in lv]
        pos = {}
        for i, (arr, s, _t) in enumerate(paths):
            pos[(arr, s)] = i
        dim = len(paths)
        ideal = _path_ideal(field, paths, pos, arrows, relations, dim)
        top = [pos[(arr, s)] for arr, s, _ in levels[N - 1]]
        if top:
            E = field.zeros((len(top), dim))
            for r, i in enumerate(top):
                E[r, i] = 1
            stacked = np.concatenate([ideal, E]) if ideal.shape[0] else E
            done = linalg.rank(field, stacked) == ideal.shape[0]
        else:
            done = True
        if done:
            return _quotient_path_algebra(field, q, vertices, arrows, paths, pos, ideal)
    raise NotNilpotent(f"arrow ideal is not nilpotent modulo relations within {bound}")


def _path_ideal(field, paths, pos, arrows, relations, dim):
    def vec_of(terms):
        v = field.zeros(dim)
        for c, path in terms:
            s = arrows[path[-1]][0]
            if (path, s) in pos:
                v[pos[(path, s)]] = field.reduce(v[pos[(path, s)]] + c)
        return v

    def shifted(v, a, left):
        out = field.zeros(dim)
        sa, ta = arrows[a]
        for i in np.flatnonzero(v if field.is_prime else np.array([x != 0 for x in v])):
            arr, s, t = paths[i]
            if left:
                if t != sa:
                    continue
                key = ((a,) + arr, s)
            else:
                if s != ta:
                    continue
                key = (arr + (a,), sa)
            if key in pos:
                out[pos[key]] = field.reduce(out[pos[key]] + v[i])
        return out

    gens = [vec_of(r) for r in relations]
    if not gens:
        return field.zeros((0, dim))
    basis, _ = linalg.rref(field, np.array(gens).reshape(len(gens), dim))
    while True:
        new = [basis]
        for row in basis:
            for a in arrows:
                new.append(shifted(row, a, True).reshape(1, -1))
                new.append(shifted(row, a, False).reshape(1, -1))
        nb, _ = linalg.rref(field, np.concatenate(new))
        if nb.shape[0] == basis.shape[0]:
            return basis
        basis = nb


def _quotient_path_algebra(field, q, vertices, arrows, paths, pos, ideal):
    dim = len(paths)
    order = sorted(range(dim), key=lambda i: (-len(paths[i][0]), paths[i][0], paths[i][1]))
    if ideal.shape[0]:
        R, piv = linalg.rref(field, ideal[:, order])
        pivots = [order[c] for c in piv]
        rows = field.zeros((R.shape[0], dim))
        rows[:, order] = R
    else:
        pivots, rows = [], field.zeros((0, dim))
    pivot_row = {p: r for r, p in enumerate(pivots)}
    normal = [i for i in range(dim) if i not in pivot_row]
    normal.sort(key=lambda i: (len(paths[i][0]), paths[i][0] if paths[i][0] else (paths[i][1],)))
    bidx = {i: k for k, i in enumerate(normal)}
    n = len(normal)

    def reduce_path(key):
        out = field.zeros(n)
        if key not in pos:
            return out
        i = pos[key]
        if i in pivot_row:
            v = field.reduce(-rows[pivot_row[i]])
            v[i] = 0
            for j in np.flatnonzero(v if field.is_prime else np.array([x != 0 for x in v])):
                out[bidx[j]] = v[j]
            return out
        out[bidx[i]] = 1
        return out

    C = field.zeros((n, n, n))
    for a, i in enumerate(normal):
        pa, sa, _ta = paths[i]
        for b, j in enumerate(normal):
            pb, sb, tb = paths[j]
            if sa != tb:
                continue
            if not pa:
                key = (pb, sb)
            elif not pb:
                key = (pa, sa)
            else:
                key = (pa + pb, sb)
            C[a, b] = reduce_path(key)
    labels = []
    for i in normal:
        arr, s, _ = paths[i]
        labels.append("*".join(arr) if arr else f"e{s}")
    unit = field.zeros(n)
    idem = field.zeros((len(vertices), n))
    for k, v in enumerate(vertices):
        i = bidx[pos[((), v)]]
        unit[i] = 1
        idem[k, i] = 1
    rad = field.zeros((n - len(vertices), n))
    for r, k in enumerate(range(len(vertices), n)):
        rad[r, k] = 1
    return Algebra(field, C, unit, idem, rad, labels, vertices, "quiver", q.name)


def raw_algebra(
    field: Field,
    structure,
    unit,
    idempotents,
    labels=None,
    vertex_labels=None,
    name: str = "",
) -> Algebra:
    """Algebra from structure constants; the radical is the trace-form kernel.

    The kernel of ``(x, y) -> tr(L_x L_y)`` equals the radical in
    characteristic 0 or characteristic larger than the dimension.
    """
    structure = field.array(structure)
    n = structure.shape[0]
    if field.is_prime and field.p <= n:
        raise RadicalNeedsLargerPrime(f"p = {field.p} must exceed dim = {n}")
    L = structure.transpose(0, 2, 1)
    T = field.zeros((n, n))
    for i in range(n):
        for j in range(n):
            T[i, j] = field.reduce(np.trace(field.matmul(L[i], L[j])))
    rad = linalg.kernel_basis(field, T).T
    return Algebra(
        field, structure, field.array(unit), field.array(idempotents), rad, labels, vertex_labels, "raw", name
    )


@lru_cache(maxsize=None)
def opposite(a: Algebra) -> Algebra:
    if a._cache.get("opposite_of") is not None:
        return a._cache["opposite_of"]
    op = Algebra(
        a.field,
        a.structure.transpose(1, 0, 2).copy(),
        a.unit,
        a.idempotents,
        a.radical,
        a.labels,
        a.vertex_labels,
        "opposite",
        f"{a.name}^op" if a.name else "",
        check=False,
    )
    op._cache["opposite_of"] = a
    return op


@lru_cache(maxsize=None)
def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """``a (x) b`` with basis ``a_i (x) b_j`` at index ``i * dim b + j``."""
    if a.field != b.field:
        raise FieldMismatch("tensor product of algebras over different fields")
    f = a.field
    na, nb = a.dim, b.dim
    N = na * nb
    C = np.multiply.outer(a.structure, b.structure)  # (i,k,m,j,l,n)
    C = f.reduce(C.transpose(0, 3, 1, 4, 2, 5).reshape(N, N, N))
    unit = f.reduce(np.multiply.outer(a.unit, b.unit).reshape(N))
    idem = [f.reduce(np.multiply.outer(e, g).reshape(N)) for e in a.idempotents for g in b.idempotents]
    rad = [f.reduce(np.multiply.outer(r, f.eye(nb)[j]).reshape(N)) for r in a.radical for j in range(nb)]
    # a (x) rad(b) modulo rad(a) (x) b: only the idempotent-part of a is needed
    rad += [f.reduce(np.multiply.outer(e, r).reshape(N)) for e in a.idempotents for r in b.radical]
    labels = [f"{x}@{y}" for x in a.labels for y in b.labels]
    vlabels = [f"{u}@{v}" for u in a.vertex_labels for v in b.vertex_labels]
    name = f"{a.name}@{b.name}" if a.name and b.name else ""
    t = Algebra(
        f,
        C,
        unit,
        np.array(idem).reshape(len(idem), N),
        np.array(rad).reshape(len(rad), N),
        labels,
        vlabels,
        "tensor",
        name,
        check=False,
    )
    t._cache["factors"] = (a, b)
    return t


def enveloping(a: Algebra) -> Algebra:
    return tensor_algebra(a, opposite(a))


@dataclass
class CornerEmbedding:
    """Inclusion ``eAe -> A`` (non-unital) as a basis-to-coordinates matrix."""

    algebra: Algebra
    idempotent: np.ndarray
    matrix: np.ndarray


def corner(a: Algebra, e: np.ndarray):
    """The corner algebra ``eAe`` together with its embedding into ``a``."""
    f = a.field
    e = f.reduce(np.asarray(e))
    if not f.equal(a.mul(e, e), e):
        raise NotIdempotent("corner requires e*e = e")
    P = f.matmul(a.combine(a.left_mult, e), a.combine(a.right_mult, e))
    B, coords = linalg.column_space(f, P)
    m = B.shape[1]
    C = f.zeros((m, m, m))
    for i in range(m):
        Li = a.combine(a.left_mult, B[:, i])
        prods = f.matmul(Li, B)
        C[i] = prods[coords, :].T
    def to_corner(x):
        return x[coords]

    idem, vlabels = [], []
    for v in range(a.n_vertices):
        ev = a.idempotents[v]
        x = a.mul(a.mul(e, ev), e)
        if not f.is_zero(x):
            idem.append(to_corner(x))
            vlabels.append(a.vertex_labels[v])
    rad = f.matmul(P, a.radical.T) if a.radical.shape[0] else f.zeros((a.dim, 0))
    rb, _ = linalg.column_space(f, rad)
    rad_c = np.array([to_corner(rb[:, j]) for j in range(rb.shape[1])]).reshape(-1, m)
    labels = []
    for i in range(m):
        col = B[:, i]
        nz = [j for j in range(a.dim) if col[j] != 0]
        labels.append(a.labels[nz[0]] if len(nz) == 1 and col[nz[0]] == 1 else f"c{i}")
    c = Algebra(
        f,
        C,
        to_corner(e),
        np.array(idem).reshape(len(idem), m),
        rad_c,
        labels,
        vlabels,
        "corner",
        f"e{a.name}e" if a.name else "",
        check=True,
    )
    return c, CornerEmbedding(c, e, B)


def morita_ring(a: Algebra, b: Algebra, m, n) -> Algebra:
    """The Morita ring ``[[a, n], [m, b]]`` with zero bimodule maps.

    ``m`` is a b-a bimodule and ``n`` an a-b bimodule (see
    :class:`singequiv.module.Bimodule`); the products ``m*n`` and ``n*m``
    vanish.  Basis order: a, b, m, n.
    """
    if a.field != b.field:
        raise FieldMismatch("Morita ring of algebras over different fields")
    f = a.field
    if not (m.left.same(b) and m.right.same(a) and n.left.same(a) and n.right.same(b)):
        from .errors import TagMismatch

        raise TagMismatch("Morita ring needs m over b (x) a^op and n over a (x) b^op")
    da, db, dm, dn = a.dim, b.dim, m.dim, n.dim
    N = da + db + dm + dn
    oa, ob, om, on = 0, da, da + db, da + db + dm
    C = f.zeros((N, N, N))
    C[oa:ob, oa:ob, oa:ob] = a.structure
    C[ob:om, ob:om, ob:om] = b.structure
    # a * n -> n via left action on n; n * b -> n via right action on n
    for i in range(da):
        C[oa + i, on:on + dn, on:on + dn] = n.left_action[i].T
    for j in range(db):
        C[on:on + dn, ob + j, on:on + dn] = n.right_action[j].T
    # m * a -> m via right action on m; b * m -> m via left action on m
    for i in range(da):
        C[om:om + dm, oa + i, om:om + dm] = m.right_action[i].T
    for j in range(db):
        C[ob + j, om:om + dm, om:om + dm] = m.left_action[j].T
    unit = f.zeros(N)
    unit[oa:ob] = a.unit
    unit[ob:om] = b.unit
    idem = []
    for e in a.idempotents:
        v = f.zeros(N)
        v[oa:ob] = e
        idem.append(v)
    for e in b.idempotents:
        v = f.zeros(N)
        v[ob:om] = e
        idem.append(v)
    rad = []
    for r in a.radical:
        v = f.zeros(N)
        v[oa:ob] = r
        rad.append(v)
    for r in b.radical:
        v = f.zeros(N)
        v[ob:om] = r
        rad.append(v)
    for k in range(om, N):
        v = f.zeros(N)
        v[k] = 1
        rad.append(v)
    pa, pb = (a.name or "A"), (b.name or "B")
    if pa == pb:
        pa, pb = pa + "1", pb + "2"
    labels = (
        [f"{pa}.{x}" for x in a.labels]
        + [f"{pb}.{x}" for x in b.labels]
        + [f"M{i}" for i in range(dm)]
        + [f"N{i}" for i in range(dn)]
    )
    vlabels = [f"{pa}.{v}" for v in a.vertex_labels] + [f"{pb}.{v}" for v in b.vertex_labels]
    return Algebra(
        f,
        C,
        unit,
        np.array(idem).reshape(len(idem), N),
        np.array(rad).reshape(len(rad), N),
        labels,
        vlabels,
        "morita",
        "",
        check=True,
    )


def product_algebra(a: Algebra, b: Algebra) -> Algebra:
    """``a x b``: the Morita ring with zero bimodules."""
    from .module import Bimodule

    return morita_ring(a, b, Bimodule.zero(b, a), Bimodule.zero(a, b))


def simples(a: Algebra):
    """One-dimensional simple modules, one per primitive idempotent."""
    from .module import simple_modules

    return simple_modules(a)


@dataclass
class AlgebraHom:
    """Unital algebra homomorphism; ``matrix`` maps source coordinates to target coordinates."""

    source: Algebra
    target: Algebra
    matrix: np.ndarray

    def __post_init__(self):
        f = self.source.field
        s, t = self.source, self.target
        if self.matrix.shape != (t.dim, s.dim):
            raise InvalidAlgebra("homomorphism matrix has the wrong shape")
        if not f.equal(f.matmul(self.matrix, s.unit.reshape(-1, 1))[:, 0], t.unit):
            raise InvalidAlgebra("homomorphism is not unital")
        for i in range(s.dim):
            for j in range(s.dim):
                lhs = f.matmul(self.matrix, s.structure[i, j].reshape(-1, 1))[:, 0]
                rhs = t.mul(self.matrix[:, i], self.matrix[:, j])
                if not f.equal(lhs, rhs):
                    raise InvalidAlgebra("homomorphism is not multiplicative")

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.source.field.matmul(self.matrix, x.reshape(-1, 1))[:, 0]


def identity_hom(a: Algebra) -> AlgebraHom:
    return AlgebraHom(a, a, a.field.eye(a.dim))
