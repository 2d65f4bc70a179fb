"""Dense exact matrices over Q(i) and the fraction-free linear algebra kernel.

Rank uses Bareiss elimination on a denominator-cleared copy with pivots
chosen to minimise total bit length; nullspaces come from a division-based
reduced echelon form.  Both are exact, so rank + nullity is an identity,
not an approximation.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar

Vector = tuple  # tuple[Scalar, ...]


def vector(coeffs: Iterable) -> Vector:
    return tuple(c if isinstance(c, Scalar) else Scalar(c) for c in coeffs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Vector) -> Vector:
    return tuple(c * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(not a for a in u)


class MatrixQ:
    """A dense rows x cols matrix of Scalars, row-major and immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Scalar]):
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", tuple(entries))

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQ is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "MatrixQ":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = []
        for r in rows:
            if len(r) != nc:
                raise ValueError("ragged rows")
            flat.extend(vector(r))
        return cls(nr, nc, flat)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "MatrixQ":
        nc = len(cols)
        nr = len(cols[0]) if nc else 0
        return cls.from_rows([[cols[j][i] for j in range(nc)] for i in range(nr)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols]

    def row_list(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "MatrixQ":
        return MatrixQ.from_rows([list(self.column(j)) for j in range(self.cols)])

    def matvec(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            acc = ZERO
            row = self.row(i)
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        flat = []
        for i in range(self.rows):
            row = self.row(i)
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                flat.append(acc)
        return MatrixQ(self.rows, other.cols, flat)

    def add(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return MatrixQ(self.rows, self.cols,
                       tuple(a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return MatrixQ(self.rows, self.cols,
                       tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c: Scalar) -> "MatrixQ":
        return MatrixQ(self.rows, self.cols, tuple(c * a for a in self.entries))

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def is_zero(self) -> bool:
        return all(not a for a in self.entries)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"MatrixQ({self.rows}x{self.cols}: {body})"


def _cleared_rows(m: MatrixQ) -> list:
    """Row-scaled copy with all denominators cleared (rank-preserving)."""
    out = []
    for i in range(m.rows):
        row = list(m.row(i))
        lcm = 1
        for s in row:
            lcm = math.lcm(lcm, int(s.re.denominator), int(s.im.denominator))
        if lcm != 1:
            c = Scalar(lcm)
            row = [c * s for s in row]
        out.append(row)
    return out


def rank_profile(m: MatrixQ) -> tuple:
    """Bareiss elimination with full, bit-size-minimising pivoting.

    Returns (rank, pivot_rows, pivot_cols) with indices into the original
    matrix; the index sets locate a nonsingular rank x rank minor.
    """
    a = _cleared_rows(m)
    nr, nc = m.rows, m.cols
    row_idx = list(range(nr))
    col_idx = list(range(nc))
    prev = ONE
    rank = 0
    for k in range(min(nr, nc)):
        best = None
        for i in range(k, nr):
            ai = a[i]
            for j in range(k, nc):
                s = ai[j]
                if s:
                    sz = s.bit_size()
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            a[k], a[pi] = a[pi], a[k]
            row_idx[k], row_idx[pi] = row_idx[pi], row_idx[k]
        if pj != k:
            for r in a:
                r[k], r[pj] = r[pj], r[k]
            col_idx[k], col_idx[pj] = col_idx[pj], col_idx[k]
        piv = a[k][k]
        for i in range(k + 1, nr):
            aik = a[i][k]
            ai, ak = a[i], a[k]
            for j in range(k + 1, nc):
                ai[j] = (piv * ai[j] - aik * ak[j]) / prev
            ai[k] = ZERO
        prev = piv
        rank += 1
    return rank, sorted(row_idx[:rank]), sorted(col_idx[:rank])


def rank_of(m: MatrixQ) -> int:
    """Exact rank over the fraction field."""
    return rank_profile(m)[0]


def _rref(rows: list, ncols: int) -> tuple:
    """In-place reduced row echelon form; returns (rank, pivot_cols)."""
    pivots = []
    r = 0
    nr = len(rows)
    for c in range(ncols):
        best = None
        for i in range(r, nr):
            s = rows[i][c]
            if s:
                sz = s.bit_size()
                if best is None or sz < best[0]:
                    best = (sz, i)
        if best is None:
            continue
        _, pi = best
        rows[r], rows[pi] = rows[pi], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return r, pivots


def nullspace_of(m: MatrixQ) -> list:
    """Basis of the right nullspace; empty iff rank = cols."""
    rows = m.row_list()
    rank, pivots = _rref(rows, m.cols)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][f]
        basis.append(tuple(v))
    return basis


def solve_in_span(basis: MatrixQ, v: Sequence[Scalar]):
    """Coefficients c with basis @ c = v, or None if v is outside the column span."""
    if len(v) != basis.rows:
        raise ValueError("dimension mismatch")
    rows = [list(basis.row(i)) + [v[i]] for i in range(basis.rows)]
    rank, pivots = _rref(rows, basis.cols + 1)
    if basis.cols in pivots:
        return None
    coeffs = [ZERO] * basis.cols
    for r, pc in enumerate(pivots):
        coeffs[pc] = rows[r][basis.cols]
    return tuple(coeffs)


def span_contains(basis: MatrixQ, v: Sequence[Scalar]) -> bool:
    """True iff v lies in the column span of basis; exact."""
    return solve_in_span(basis, v) is not None


def is_nilpotent_matrix(m: MatrixQ, dim: int) -> bool:
    """True iff m^dim = 0, computed by repeated squaring."""
    if m.rows != m.cols or m.rows != dim:
        raise ValueError(f"expected a {dim}x{dim} matrix, got {m.rows}x{m.cols}")
    if dim == 0:
        return True
    p = m
    e = 1
    while e < dim:
        if p.is_zero():
            return True
        p = p.matmul(p)
        e *= 2
    return p.is_zero()


def nilpotency_exponent(m: MatrixQ):
    """Least e >= 1 with m^e = 0, or None if m is not nilpotent."""
    n = m.rows
    if not is_nilpotent_matrix(m, n):
        return None
    p = m
    e = 1
    while not p.is_zero():
        p = p.matmul(m)
        e += 1
    return e


class EchelonSpan:
    """An incrementally built subspace with exact membership tests.

    Keeps the original inserted vectors (as a basis) alongside reduced
    rows for fast reduction.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.basis = []  # vectors as inserted, linearly independent
        self._reduced = []  # list of (pivot_index, row)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reduce(self, v: Sequence[Scalar]) -> list:
        w = list(v)
        for pc, row in self._reduced:
            c = w[pc]
            if c:
                for j in range(pc, self.ambient_dim):
                    w[j] = w[j] - c * row[j]
        return w

    def contains(self, v: Sequence[Scalar]) -> bool:
        return all(not a for a in self._reduce(v))

    def add(self, v: Sequence[Scalar]) -> bool:
        """Insert v; returns True if it enlarged the span."""
        w = self._reduce(v)
        for pc in range(self.ambient_dim):
            if w[pc]:
                inv = w[pc].inverse()
                row = [inv * a for a in w]
                self._reduced.append((pc, row))
                self._reduced.sort(key=lambda t: t[0])
                self.basis.append(tuple(v))
                return True
        return False

    def extend(self, vectors: Iterable) -> None:
        for v in vectors:
            self.add(v)

    def equals(self, other: "EchelonSpan") -> bool:
        return (
            self.dim == other.dim
            and all(other.contains(v) for v in self.basis)
        )
