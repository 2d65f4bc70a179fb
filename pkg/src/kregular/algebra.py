"""Lie algebra structure: brackets, ad, Killing form, Cartan decompositions.

A LieAlgebra is given by structure constants over a fixed basis; the
Killing matrix is computed once at construction and cached, since every
Gram-certificate pairing consults it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .linalg import (
    EchelonSpan,
    MatrixQ,
    Vector,
    nullspace_of,
    rank_of,
    vec_add,
    vec_is_zero,
    zero_vector,
)
from .scalar import ONE, ZERO, Scalar

# sparse bracket value: tuple of (basis_index, coefficient)
SparseVec = tuple


def _sparsify(coeffs: Sequence[Scalar]) -> SparseVec:
    return tuple((k, c) for k, c in enumerate(coeffs) if c)


def _densify(sv: SparseVec, dim: int) -> Vector:
    out = [ZERO] * dim
    for k, c in sv:
        out[k] = c
    return tuple(out)


class LieAlgebra:
    """A complex semisimple Lie algebra in a fixed basis.

    structure maps an ordered pair (i, j) to the sparse coefficient vector
    of [b_i, b_j]; both orientations are stored so that a defective
    (non-antisymmetric) table can be represented and caught by validate().
    """

    __slots__ = ("name", "dim", "basis_labels", "structure", "killing", "family",
                 "_adj")

    def __init__(self, name: str, dim: int, structure: dict,
                 basis_labels: Optional[Sequence[str]] = None,
                 family: Optional[str] = None):
        self.name = name
        self.dim = dim
        self.basis_labels = tuple(basis_labels) if basis_labels else tuple(
            f"b{i}" for i in range(dim))
        self.structure = dict(structure)
        self.family = family
        adj = {}
        for (i, j), terms in self.structure.items():
            adj.setdefault(i, []).append((j, terms))
        self._adj = adj
        self.killing = self._compute_killing()

    @classmethod
    def from_lower_table(cls, name: str, dim: int, lower: dict,
                         basis_labels=None, family=None) -> "LieAlgebra":
        """Build from a table given on pairs i < j only (antisymmetric closure)."""
        structure = {}
        for (i, j), coeffs in lower.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"lower table needs 0 <= i < j < dim, got ({i},{j})")
            sv = _sparsify(coeffs) if not _is_sparse(coeffs) else tuple(coeffs)
            if sv:
                structure[(i, j)] = sv
                structure[(j, i)] = tuple((k, -c) for k, c in sv)
        return cls(name, dim, structure, basis_labels, family)

    def table(self, i: int, j: int) -> Vector:
        """[b_i, b_j] as a dense vector."""
        return _densify(self.structure.get((i, j), ()), self.dim)

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def _compute_killing(self) -> MatrixQ:
        ads = [ad_matrix(self, self.basis_vector(i)) for i in range(self.dim)]
        flat = []
        for a in ads:
            for b in ads:
                acc = ZERO
                for r in range(self.dim):
                    row = a.row(r)
                    for c in range(self.dim):
                        x = row[c]
                        if x:
                            y = b[c, r]
                            if y:
                                acc = acc + x * y
                flat.append(acc)
        return MatrixQ(self.dim, self.dim, flat)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name}, dim={self.dim})"


def _is_sparse(coeffs) -> bool:
    return bool(coeffs) and isinstance(coeffs[0], tuple)


def bracket(alg: LieAlgebra, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    """[u, v], extended bilinearly from the structure table."""
    if len(u) != alg.dim or len(v) != alg.dim:
        raise ValueError("vector length must equal dim")
    out = [ZERO] * alg.dim
    for (i, j), terms in alg.structure.items():
        ui = u[i]
        vj = v[j]
        if ui and vj:
            c = ui * vj
            for k, s in terms:
                out[k] = out[k] + c * s
    return tuple(out)


def bracket_basis(alg: LieAlgebra, i: int, v: Sequence[Scalar]) -> Vector:
    """[b_i, v] using the per-index adjacency (fast path for basis elements)."""
    out = [ZERO] * alg.dim
    for j, terms in alg._adj.get(i, ()):
        vj = v[j]
        if vj:
            for k, s in terms:
                out[k] = out[k] + vj * s
    return tuple(out)


def ad_matrix(alg: LieAlgebra, u: Sequence[Scalar]) -> MatrixQ:
    """Matrix of ad u; column j is [u, b_j]."""
    if len(u) != alg.dim:
        raise ValueError("vector length must equal dim")
    cols = [[ZERO] * alg.dim for _ in range(alg.dim)]
    for (i, j), terms in alg.structure.items():
        ui = u[i]
        if ui:
            col = cols[j]
            for k, s in terms:
                col[k] = col[k] + ui * s
    return MatrixQ.from_columns(cols)


def killing_pair(alg: LieAlgebra, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """B(u, v) = tr(ad u ad v), via the cached Killing matrix."""
    bv = alg.killing.matvec(v)
    acc = ZERO
    for a, b in zip(u, bv):
        if a and b:
            acc = acc + a * b
    return acc


class CartanDecomposition:
    """The involution theta with its eigenspaces k (+1) and p (-1)."""

    __slots__ = ("theta", "k_basis", "p_basis", "proj_k", "proj_p")

    def __init__(self, theta: MatrixQ):
        n = theta.rows
        if theta.cols != n:
            raise ValueError("theta must be square")
        self.theta = theta
        ident = MatrixQ.identity(n)
        half = Scalar(1) / Scalar(2)
        self.proj_k = ident.add(theta).scale(half)
        self.proj_p = ident.sub(theta).scale(half)
        self.k_basis = tuple(nullspace_of(theta.sub(ident)))
        self.p_basis = tuple(nullspace_of(theta.add(ident)))

    @property
    def dim_k(self) -> int:
        return len(self.k_basis)

    @property
    def dim_p(self) -> int:
        return len(self.p_basis)

    def __repr__(self) -> str:
        return f"CartanDecomposition(dim_k={self.dim_k}, dim_p={self.dim_p})"


@dataclass(frozen=True)
class ElementZ:
    """z = x + y with x the k-part and y the p-part."""

    z: Vector
    x: Vector
    y: Vector


def decompose(cd: CartanDecomposition, z: Sequence[Scalar]) -> ElementZ:
    """Split z into its k- and p-parts via the projections (1 +/- theta)/2."""
    z = tuple(z)
    x = cd.proj_k.matvec(z)
    y = cd.proj_p.matvec(z)
    return ElementZ(z=z, x=x, y=y)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[CheckResult]:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate(alg: LieAlgebra, cd: Optional[CartanDecomposition] = None) -> ValidationReport:
    """Exact pass/fail report for every structural invariant.

    Failures are report entries, never exceptions; the first violating
    basis tuple is named in the detail string.
    """
    rep = ValidationReport()
    n = alg.dim

    bad = None
    for i in range(n):
        for j in range(i, n):
            lhs = alg.table(i, j)
            rhs = tuple(-c for c in alg.table(j, i))
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.record("antisymmetry", bad is None, f"({bad[0]},{bad[1]})" if bad else "")

    bad = None
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = vec_add(
                    vec_add(
                        bracket_basis(alg, i, alg.table(j, k)),
                        bracket_basis(alg, j, alg.table(k, i)),
                    ),
                    bracket_basis(alg, k, alg.table(i, j)),
                )
                if not vec_is_zero(s):
                    bad = (i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.record("jacobi", bad is None,
               f"jacobi({bad[0]},{bad[1]},{bad[2]})" if bad else "")

    rep.record("killing-symmetric", alg.killing.is_symmetric())
    kr = rank_of(alg.killing)
    rep.record("killing-nondegenerate", kr == n, f"rank {kr} of {n}")

    if cd is None:
        return rep

    ident = MatrixQ.identity(n)
    rep.record("theta-involution", cd.theta.matmul(cd.theta) == ident)

    bad = None
    for i in range(n):
        ti = cd.theta.column(i)
        for j in range(i + 1, n):
            lhs = cd.theta.matvec(alg.table(i, j))
            rhs = bracket(alg, ti, cd.theta.column(j))
            if lhs != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.record("theta-automorphism", bad is None,
               f"({bad[0]},{bad[1]})" if bad else "")

    rep.record("eigenspace-dims", cd.dim_k + cd.dim_p == n,
               f"dim k {cd.dim_k} + dim p {cd.dim_p} != {n}"
               if cd.dim_k + cd.dim_p != n else "")

    pp = EchelonSpan(n)
    for a in range(cd.dim_p):
        for b in range(a + 1, cd.dim_p):
            pp.add(bracket(alg, cd.p_basis[a], cd.p_basis[b]))
    k_span = EchelonSpan(n)
    k_span.extend(cd.k_basis)
    proper = pp.equals(k_span)
    rep.record("properness", proper,
               "" if proper else f"span[p,p] dim {pp.dim}, k dim {k_span.dim}")

    bad = None
    for u in cd.k_basis:
        for v in cd.p_basis:
            if killing_pair(alg, u, v):
                bad = True
                break
        if bad:
            break
    rep.record("killing-k-p-orthogonal", bad is None)

    return rep
