"""Certificates: generated subalgebra, Gram matrix, regularity and nilcone.

The Gram certificate pairs free-Lie-basis evaluations at z under the
Killing form; its rank detects whether the subalgebra generated by the
k- and p-parts of z is all of g.  Full mode uses every Lyndon word up to
the degree cap; reduced mode pairs only the filtration's spanning vectors
of g(z).  Both vector sets span g(z), so the two Gram matrices always
have equal rank; full mode stays the default where its size is feasible.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import (
    CartanDecomposition,
    ElementZ,
    LieAlgebra,
    ad_matrix,
    bracket,
    decompose,
    killing_pair,
)
from .errors import DegreeBoundError, GramSizeError
from .linalg import (
    EchelonSpan,
    MatrixQ,
    Vector,
    is_nilpotent_matrix,
    nilpotency_exponent,
    nullspace_of,
    rank_profile,
    span_contains,
    vec_is_zero,
    zero_vector,
)
from .scalar import ZERO, Scalar
from .words import LyndonWord, WordEvaluator, lyndon_basis, witt_dimension

DEFAULT_GRAM_LIMIT = 1500
GRAM_LIMIT_ENV = "KREGULAR_GRAM_LIMIT"

VERDICT_REGULAR = "k-regular"
VERDICT_NIL = "nil-k"
VERDICT_NEITHER = "neither"


def gram_size_limit() -> int:
    raw = os.environ.get(GRAM_LIMIT_ENV)
    if raw is None:
        return DEFAULT_GRAM_LIMIT
    return int(raw)


@dataclass
class SubalgebraReport:
    """g(z) computed by the filtration g_{m+1} = g_m + [x, g_m] + [y, g_m]."""

    basis: list
    dim: int
    stabilization_degree: int
    per_degree_dims: list

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "stabilization_degree": self.stabilization_degree,
            "per_degree_dims": list(self.per_degree_dims),
        }


def generated_subalgebra(alg: LieAlgebra, cd: CartanDecomposition,
                         z: Sequence[Scalar]) -> SubalgebraReport:
    """Iterate the filtration from span{x, y} until it stabilizes.

    Stabilization past dim g - 1 is a soundness bug, not an input error,
    and trips an assertion.
    """
    ez = decompose(cd, z)
    n = alg.dim
    span = EchelonSpan(n)
    span.add(ez.x)
    span.add(ez.y)
    per_degree = [span.dim]
    frontier = list(span.basis)
    m = 1
    while True:
        new = []
        for v in frontier:
            for gen in (ez.x, ez.y):
                w = bracket(alg, gen, v)
                if span.add(w):
                    new.append(w)
        if not new:
            break
        per_degree.append(span.dim)
        frontier = new
        m += 1
        assert m <= max(n - 1, 1), (
            f"filtration failed to stabilize by degree {n - 1}; "
            "this contradicts the stabilization bound and is a bug")
    return SubalgebraReport(
        basis=list(span.basis),
        dim=span.dim,
        stabilization_degree=m,
        per_degree_dims=per_degree,
    )


def centralizer_in_k(alg: LieAlgebra, cd: CartanDecomposition,
                     report: SubalgebraReport) -> list:
    """Basis of {u in k : [u, w] = 0 for all w in g(z)}."""
    if not report.basis:
        return [tuple(v) for v in cd.k_basis]
    n = alg.dim
    ad_k = [ad_matrix(alg, u) for u in cd.k_basis]
    rows = []
    for w in report.basis:
        cols = [a.matvec(w) for a in ad_k]
        for r in range(n):
            rows.append([cols[c][r] for c in range(len(ad_k))])
    stacked = MatrixQ.from_rows(rows)
    out = []
    for coeffs in nullspace_of(stacked):
        v = [ZERO] * n
        for c, u in zip(coeffs, cd.k_basis):
            if c:
                for i in range(n):
                    v[i] = v[i] + c * u[i]
        out.append(tuple(v))
    return out


@dataclass
class GramCertificate:
    degree_cap: int
    mode: str  # "full" | "reduced"
    gram: MatrixQ
    rank: int
    dim_g: int
    verdict: Optional[str] = None
    witnesses: Optional[dict] = None
    # pivot profile from the rank computation; kept so verdict assembly
    # does not have to eliminate the same matrix twice
    pivot_rows: Optional[list] = None
    pivot_cols: Optional[list] = None

    def gram_hash(self) -> str:
        body = ";".join(str(e) for e in self.gram.entries)
        header = f"{self.gram.rows}x{self.gram.cols}:"
        return hashlib.sha256((header + body).encode()).hexdigest()

    def to_dict(self, include_matrix: bool = False) -> dict:
        d = {
            "degree_cap": self.degree_cap,
            "mode": self.mode,
            "rank": self.rank,
            "dim_g": self.dim_g,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "gram_hash": self.gram_hash(),
        }
        if include_matrix:
            d["gram"] = [
                [e.to_quad() for e in self.gram.row(i)]
                for i in range(self.gram.rows)
            ]
        return d


def full_gram_side(degree_cap: int) -> int:
    """d(cap): number of Lyndon words of degree <= cap."""
    return sum(witt_dimension(j) for j in range(1, degree_cap + 1))


def _gram_of_vectors(alg: LieAlgebra, vectors: list, jobs: int = 1) -> MatrixQ:
    m = len(vectors)
    paired = [alg.killing.matvec(v) for v in vectors]

    def entry(ij):
        i, j = ij
        acc = ZERO
        for a, b in zip(vectors[i], paired[j]):
            if a and b:
                acc = acc + a * b
        return acc

    index_pairs = [(i, j) for i in range(m) for j in range(i, m)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(entry, index_pairs))
    else:
        values = [entry(ij) for ij in index_pairs]
    flat = [[ZERO] * m for _ in range(m)]
    for (i, j), v in zip(index_pairs, values):
        flat[i][j] = v
        flat[j][i] = v
    return MatrixQ.from_rows(flat)


def gram_matrix(alg: LieAlgebra, cd: CartanDecomposition, z: Sequence[Scalar],
                degree_cap: Optional[int] = None, mode: str = "full",
                jobs: int = 1, override_limit: bool = False) -> GramCertificate:
    """Exact symmetric Gram matrix of Killing pairings; verdict unset."""
    n = alg.dim
    cap = n if degree_cap is None else degree_cap
    if cap < 1:
        raise ValueError("degree cap must be >= 1")
    if mode not in ("full", "reduced"):
        raise ValueError(f"unknown gram mode {mode!r}")
    ez = decompose(cd, z)
    if mode == "full":
        side = full_gram_side(cap)
        limit = gram_size_limit()
        if side > limit and not override_limit:
            raise GramSizeError(
                f"full Gram side d({cap}) = {side} exceeds limit {limit}; "
                f"set {GRAM_LIMIT_ENV} or use reduced mode")
        ev = WordEvaluator(alg, ez.x, ez.y)
        vectors = [ev.value(w) for group in lyndon_basis(cap) for w in group]
    else:
        vectors = generated_subalgebra(alg, cd, z).basis
    gram = _gram_of_vectors(alg, vectors, jobs=jobs)
    rank, rows, cols = rank_profile(gram)
    return GramCertificate(degree_cap=cap, mode=mode, gram=gram,
                           rank=rank, dim_g=n, pivot_rows=rows,
                           pivot_cols=cols)


def _feasible_mode(alg: LieAlgebra, override_limit: bool) -> str:
    if override_limit or full_gram_side(alg.dim) <= gram_size_limit():
        return "full"
    return "reduced"


def is_k_regular(alg: LieAlgebra, cd: CartanDecomposition, z: Sequence[Scalar],
                 jobs: int = 1, override_limit: bool = False) -> GramCertificate:
    """Regularity certificate: Gram rank equals dim g iff g(z) = g.

    The Gram verdict is cross-checked against the filtration dimension;
    disagreement would be a soundness bug and trips an assertion.
    """
    mode = _feasible_mode(alg, override_limit)
    cert = gram_matrix(alg, cd, z, mode=mode, jobs=jobs,
                       override_limit=override_limit)
    report = generated_subalgebra(alg, cd, z)
    gram_says = cert.rank == alg.dim
    filtration_says = report.dim == alg.dim
    assert gram_says == filtration_says, (
        f"Gram rank {cert.rank} and filtration dim {report.dim} disagree "
        f"on regularity (dim g = {alg.dim}); this is a bug")
    if gram_says:
        cert.verdict = VERDICT_REGULAR
        cert.witnesses = {"minor_rows": cert.pivot_rows,
                          "minor_cols": cert.pivot_cols}
    else:
        cert.verdict = VERDICT_NEITHER
    return cert


def nilcone_test(alg: LieAlgebra, cd: CartanDecomposition, z: Sequence[Scalar],
                 jobs: int = 1, override_limit: bool = False) -> GramCertificate:
    """Membership in the K-unstable cone.

    z is in the cone iff the Gram matrix vanishes identically and both
    ad x and ad y are nilpotent; the nilpotency exponents are recorded
    as witnesses.
    """
    mode = _feasible_mode(alg, override_limit)
    cert = gram_matrix(alg, cd, z, mode=mode, jobs=jobs,
                       override_limit=override_limit)
    ez = decompose(cd, z)
    adx = ad_matrix(alg, ez.x)
    ady = ad_matrix(alg, ez.y)
    if cert.gram.is_zero():
        ex = nilpotency_exponent(adx)
        ey = nilpotency_exponent(ady)
        if ex is not None and ey is not None:
            cert.verdict = VERDICT_NIL
            cert.witnesses = {"ad_x_exponent": ex, "ad_y_exponent": ey}
            return cert
    cert.verdict = VERDICT_REGULAR if cert.rank == alg.dim else VERDICT_NEITHER
    return cert


def derived_series(alg: LieAlgebra, basis: Sequence) -> list:
    """Dims of D^0 >= D^1 >= ... with D^{k+1} = span[D^k, D^k], until stable."""
    n = alg.dim
    current = EchelonSpan(n)
    current.extend(basis)
    for u in current.basis:
        for v in current.basis:
            if not current.contains(bracket(alg, u, v)):
                raise ValueError("basis is not closed under the bracket")
    dims = [current.dim]
    while True:
        nxt = EchelonSpan(n)
        cb = current.basis
        for i in range(len(cb)):
            for j in range(i + 1, len(cb)):
                nxt.add(bracket(alg, cb[i], cb[j]))
        dims.append(nxt.dim)
        if nxt.dim == current.dim or nxt.dim == 0:
            return dims
        current = nxt


def is_solvable(alg: LieAlgebra, basis: Sequence) -> bool:
    return derived_series(alg, basis)[-1] == 0


@dataclass(frozen=True)
class InvariantValue:
    value: Scalar
    degree: int


def invariant_value(alg: LieAlgebra, cd: CartanDecomposition,
                    t: LyndonWord, t_prime: LyndonWord,
                    z: Sequence[Scalar]) -> InvariantValue:
    """The Killing pairing of the two word evaluations at z."""
    degree = t.degree + t_prime.degree
    if degree > 2 * alg.dim:
        raise DegreeBoundError(
            f"deg {t} + deg {t_prime} = {degree} exceeds 2*dim g = {2 * alg.dim}")
    ez = decompose(cd, z)
    ev = WordEvaluator(alg, ez.x, ez.y)
    return InvariantValue(
        value=killing_pair(alg, ev.value(t), ev.value(t_prime)),
        degree=degree,
    )


def lie_derivative_residual(alg: LieAlgebra, cd: CartanDecomposition,
                            t: LyndonWord, t_prime: LyndonWord,
                            z: Sequence[Scalar], u: Sequence[Scalar]) -> Scalar:
    """First-order change of the pairing along the k-direction u; exactly 0
    for a correct build."""
    k_mat = MatrixQ.from_columns(list(cd.k_basis))
    if not span_contains(k_mat, u):
        raise ValueError("direction u must lie in the span of k")
    ez = decompose(cd, z)
    dx = bracket(alg, u, ez.x)
    dy = bracket(alg, u, ez.y)
    from .words import DualWordEvaluator

    dev = DualWordEvaluator(alg, ez.x, ez.y, dx, dy)
    a = dev.value(t)
    b = dev.value(t_prime)
    return killing_pair(alg, a.value, b.deriv) + killing_pair(alg, a.deriv, b.value)


def power_trace(alg: LieAlgebra, z: Sequence[Scalar], m: int) -> Scalar:
    """tr((ad z)^m), exact."""
    if not 1 <= m <= 2 * alg.dim:
        raise ValueError(f"power {m} outside [1, {2 * alg.dim}]")
    a = ad_matrix(alg, z)
    p = a
    for _ in range(m - 1):
        p = p.matmul(a)
    return p.trace()


@dataclass(frozen=True)
class DegreeBounds:
    n: int
    two_n: int
    dim_p: int
    r: int

    def to_dict(self) -> dict:
        return {"n": self.n, "two_n": self.two_n, "dim_p": self.dim_p, "r": self.r}


def degree_bounds(alg: LieAlgebra, cd: CartanDecomposition) -> DegreeBounds:
    """Invariant-generation degree bound r = C(2n, 2) * dim p."""
    n = alg.dim
    return DegreeBounds(n=n, two_n=2 * n, dim_p=cd.dim_p,
                        r=math.comb(2 * n, 2) * cd.dim_p)


@dataclass(frozen=True)
class Separator:
    kind: str  # "word-pair" | "power-trace"
    detail: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.detail}


def separation_probe(alg: LieAlgebra, cd: CartanDecomposition,
                     z: Sequence[Scalar], z_prime: Sequence[Scalar],
                     degree_cap: int = 6) -> Optional[Separator]:
    """Search for an invariant separating z from z'.

    Returns the first word pair (or trace power) whose values differ, or
    None if no separator exists at this cap.  None is inconclusive: it is
    never a proof that the two elements lie on the same K-orbit.
    """
    ez = decompose(cd, z)
    ezp = decompose(cd, z_prime)
    ev = WordEvaluator(alg, ez.x, ez.y)
    evp = WordEvaluator(alg, ezp.x, ezp.y)
    words = [w for group in lyndon_basis(degree_cap) for w in group]
    two_n = 2 * alg.dim
    for a in range(len(words)):
        wa = words[a]
        va, vpa = ev.value(wa), evp.value(wa)
        for b in range(a, len(words)):
            wb = words[b]
            if wa.degree + wb.degree > two_n:
                continue
            lhs = killing_pair(alg, va, ev.value(wb))
            rhs = killing_pair(alg, vpa, evp.value(wb))
            if lhs != rhs:
                return Separator("word-pair", {
                    "t": str(wa), "t_prime": str(wb),
                    "value": str(lhs), "value_prime": str(rhs),
                })
    for m in range(1, two_n + 1):
        lhs = power_trace(alg, z, m)
        rhs = power_trace(alg, z_prime, m)
        if lhs != rhs:
            return Separator("power-trace", {
                "power": m, "value": str(lhs), "value_prime": str(rhs),
            })
    return None
