"""Exact dense linear algebra over a prime field F_p or over the rationals.

Matrices are plain numpy arrays.  In prime mode they have dtype int64 with
every entry a canonical representative in [0, p); in rational mode they are
object arrays of :class:`fractions.Fraction`.  No floating point is ever
involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import ShapeMismatch

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """Either F_p (``p`` a prime) or the rationals (``p is None``)."""

    p: Optional[int] = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    def __str__(self):
        return f"prime {self.p}" if self.is_prime else "rational"

    # construction -------------------------------------------------------

    def scalar(self, x):
        if self.is_prime:
            if isinstance(x, Fraction):
                return int(x.numerator % self.p) * pow(int(x.denominator), -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def array(self, data) -> np.ndarray:
        if self.is_prime:
            arr = np.asarray(data, dtype=object)
            if arr.size and any(isinstance(v, Fraction) for v in arr.flat):
                flat = [self.scalar(v) for v in arr.flat]
                return np.array(flat, dtype=np.int64).reshape(arr.shape)
            return np.asarray(np.asarray(data, dtype=object) % self.p, dtype=np.int64)
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = Fraction(v)
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.is_prime:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = 1 if self.is_prime else Fraction(1)
        return m

    def reduce(self, a: np.ndarray) -> np.ndarray:
        if self.is_prime:
            return np.mod(a, self.p)
        return a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[-1] != b.shape[0]:
            raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
        if self.is_prime:
            if a.size == 0 or b.size == 0:
                return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
            # inner dimension * p^2 stays far below 2^63 at any feasible size
            return np.mod(a @ b, self.p)
        if a.shape[-1] == 0:
            return self.zeros(a.shape[:-1] + b.shape[1:])
        return np.dot(a, b)

    def kron(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.reduce(np.kron(a, b))

    def inv_scalar(self, x):
        if self.is_prime:
            x = int(x) % self.p
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(x, self.p - 2, self.p)
        return 1 / Fraction(x)

    def random(self, rng: np.random.Generator, shape, low: int = 0, high: Optional[int] = None):
        """Uniform random entries (prime mode) or small random integers."""
        if self.is_prime:
            hi = self.p if high is None else high
            return np.asarray(rng.integers(low, hi, size=shape), dtype=np.int64) % self.p
        hi = 10 if high is None else high
        return self.array(rng.integers(-hi, hi + 1, size=shape))

    def is_zero(self, a: np.ndarray) -> bool:
        if self.is_prime:
            return not np.any(a)
        return all(v == 0 for v in a.flat)

    def equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        if a.shape != b.shape:
            return False
        return self.is_zero(self.reduce(a - b))


def rref(field: Field, m: np.ndarray):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.  Pivots
    are chosen as the first nonzero entry scanning columns left to right.
    """
    rows, cols = m.shape
    if field.is_prime:
        p = field.p
        a = np.mod(np.array(m, dtype=np.int64), p)
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, c])
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i]] = a[[i, r]]
            inv = pow(int(a[r, c]), p - 2, p)
            a[r, c:] = (a[r, c:] * inv) % p
            col = a[:, c].copy()
            col[r] = 0
            others = np.flatnonzero(col)
            if others.size:
                a[others, c:] = (a[others, c:] - np.outer(col[others], a[r, c:])) % p
            pivots.append(c)
            r += 1
        return a[:r], pivots
    a = np.array(m, dtype=object)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if a[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = a[r, c]
        a[r, c:] = a[r, c:] / piv
        for j in range(rows):
            if j != r and a[j, c] != 0:
                a[j, c:] = a[j, c:] - a[j, c] * a[r, c:]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(field: Field, m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(field, m)[1])


def kernel_basis(field: Field, m: np.ndarray) -> np.ndarray:
    """Columns span the null space of ``m``.

    The basis vector for the j-th free variable has a 1 in row j and zeros in
    the other free rows, so coordinates of a kernel vector are read off its
    free rows (see :func:`kernel_with_coords`).
    """
    return kernel_with_coords(field, m)[0]


def kernel_with_coords(field: Field, m: np.ndarray):
    rows, cols = m.shape
    if rows == 0:
        return field.eye(cols), list(range(cols))
    R, pivots = rref(field, m)
    free = [j for j in range(cols) if j not in set(pivots)]
    K = field.zeros((cols, len(free)))
    for k, j in enumerate(free):
        K[j, k] = 1
        for i, pc in enumerate(pivots):
            K[pc, k] = -R[i, j]
    return field.reduce(K), free


def column_space(field: Field, m: np.ndarray):
    """Basis of the column space in reduced column echelon form.

    Returns ``(B, coords)``: ``B`` is n x r with ``B[coords, :]`` the identity,
    so the coordinates of any vector v in the span are ``v[coords]``.
    """
    n = m.shape[0]
    if m.size == 0:
        return field.zeros((n, 0)), []
    R, pivots = rref(field, m.T)
    return R.T.copy(), list(pivots)


def quotient_maps(field: Field, sub: np.ndarray, n: int):
    """Projection onto V / span(sub) and a linear section of it.

    ``sub`` is any n x k matrix.  Returns ``(Q, S)`` with Q of shape q x n,
    S of shape n x q, ``Q @ S = I`` and ``ker Q = span(sub)``.
    """
    if sub.size == 0:
        return field.eye(n), field.eye(n)
    R, pivots = rref(field, sub.T)
    pset = set(pivots)
    rest = [j for j in range(n) if j not in pset]
    Q = field.zeros((len(rest), n))
    for k, j in enumerate(rest):
        Q[k, j] = 1
    for i, pc in enumerate(pivots):
        Q[:, pc] = field.reduce(-R[i, rest])
    S = field.zeros((n, len(rest)))
    for k, j in enumerate(rest):
        S[j, k] = 1
    return Q, S


def solve(field: Field, m: np.ndarray, b: np.ndarray):
    """Solve ``m @ x = b``.

    Returns ``(x, kernel)`` or ``None`` when some column of ``b`` is outside
    the image of ``m``.  ``b`` may be a vector or a matrix.
    """
    vector = b.ndim == 1
    bb = b.reshape(-1, 1) if vector else b
    if bb.shape[0] != m.shape[0]:
        raise ShapeMismatch(f"matrix has {m.shape[0]} rows, right side {bb.shape[0]}")
    cols = m.shape[1]
    kern = kernel_basis(field, m)
    if m.shape[0] == 0:
        x = field.zeros((cols, bb.shape[1]))
        return (x[:, 0] if vector else x), kern
    aug = np.concatenate([m, bb], axis=1)
    R, pivots = rref(field, aug)
    if any(pc >= cols for pc in pivots):
        return None
    x = field.zeros((cols, bb.shape[1]))
    for i, pc in enumerate(pivots):
        x[pc, :] = R[i, cols:]
    return (x[:, 0] if vector else x), kern


def inverse(field: Field, m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ShapeMismatch("inverse of a non-square matrix")
    res = solve(field, m, field.eye(n))
    if res is None or res[1].shape[1]:
        raise ZeroDivisionError("matrix is singular")
    return res[0]


def is_invertible(field: Field, m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and rank(field, m) == m.shape[0]


def in_span(field: Field, basis: np.ndarray, vecs: np.ndarray) -> bool:
    """True when every column of ``vecs`` lies in the column span of ``basis``."""
    if vecs.size == 0:
        return True
    if basis.size == 0:
        return field.is_zero(vecs)
    return rank(field, np.concatenate([basis, vecs], axis=1)) == rank(field, basis)


def block_diag(field: Field, blocks: Sequence[np.ndarray]) -> np.ndarray:
    r = sum(b.shape[0] for b in blocks)
    c = sum(b.shape[1] for b in blocks)
    out = field.zeros((r, c))
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out
