"""Restricted-root data and the deterministic construction of K-regular
elements.

Every "choose so that a polynomial does not vanish" step is replaced by a
deterministic expanding-box search over integer coordinate vectors, so two
runs on the same datum produce identical output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (
    CartanDecomposition,
    ElementZ,
    LieAlgebra,
    ValidationReport,
    bracket,
    decompose,
    killing_pair,
)
from .catalog import matrix_index
from .errors import CatalogError, ValidationFailure
from .linalg import (
    EchelonSpan,
    MatrixQ,
    Vector,
    nullspace_of,
    solve_in_span,
    span_contains,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)
from .scalar import ONE, ZERO, Scalar


@dataclass(frozen=True)
class RestrictedRoot:
    """A restricted root: its values on the a-basis and its root space."""

    values: tuple  # Scalar per a-basis vector
    space: tuple  # basis vectors of g_nu, ambient coordinates

    @property
    def multiplicity(self) -> int:
        return len(self.space)

    def value_at(self, coeffs: Sequence[Scalar]) -> Scalar:
        acc = ZERO
        for c, v in zip(coeffs, self.values):
            if c and v:
                acc = acc + c * v
        return acc


@dataclass(frozen=True)
class RestrictedRootDatum:
    a_basis: tuple
    hm_basis: tuple
    roots: tuple  # all restricted roots, both signs
    positive: tuple  # indices into roots

    @property
    def dim_a(self) -> int:
        return len(self.a_basis)

    @property
    def mult_one(self) -> tuple:
        """Positive root indices with 1-dimensional root space."""
        return tuple(i for i in self.positive if self.roots[i].multiplicity == 1)

    @property
    def mult_high(self) -> tuple:
        """Positive root indices with root space of dimension >= 2."""
        return tuple(i for i in self.positive if self.roots[i].multiplicity > 1)


def catalog_datum(alg: LieAlgebra, cd: CartanDecomposition) -> RestrictedRootDatum:
    """Closed-form datum for the split sl(n) catalog: a = traceless
    diagonals, roots eps_i - eps_j with root space C*E_ij, m = 0."""
    if alg.family != "split-sl":
        raise CatalogError(
            "restricted-root data is built in only for catalog algebras; "
            "supply a datum file for user algebras")
    n = int(alg.name[2:])
    dim = alg.dim
    a_basis = tuple(alg.basis_vector(k) for k in range(n - 1))
    roots = []
    positive = []
    idx = 0
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            values = []
            for k in range(1, n):
                # (eps_i - eps_j)(H_k) with H_k = E_kk - E_{k+1,k+1}
                v = (1 if i == k else 0) - (1 if i == k + 1 else 0) \
                    - (1 if j == k else 0) + (1 if j == k + 1 else 0)
                values.append(Scalar(v))
            space = (alg.basis_vector(matrix_index(n, i, j)),)
            roots.append(RestrictedRoot(tuple(values), space))
            if i < j:
                positive.append(idx)
            idx += 1
    return RestrictedRootDatum(
        a_basis=a_basis, hm_basis=(), roots=tuple(roots), positive=tuple(positive))


def _centralizer_of_a_in_k(alg, cd, datum) -> list:
    """Basis of m = {u in k : [u, a] = 0}."""
    if not cd.k_basis:
        return []
    rows = []
    from .algebra import ad_matrix

    ad_k = [ad_matrix(alg, u) for u in cd.k_basis]
    for h in datum.a_basis:
        cols = [a.matvec(h) for a in ad_k]
        for r in range(alg.dim):
            rows.append([-cols[c][r] for c in range(len(ad_k))])
    stacked = MatrixQ.from_rows(rows)
    out = []
    for coeffs in nullspace_of(stacked):
        v = [ZERO] * alg.dim
        for c, u in zip(coeffs, cd.k_basis):
            if c:
                for i in range(alg.dim):
                    v[i] = v[i] + c * u[i]
        out.append(tuple(v))
    return out


def validate_datum(alg: LieAlgebra, cd: CartanDecomposition,
                   datum: RestrictedRootDatum) -> ValidationReport:
    """Exact well-formedness report for a restricted-root datum."""
    rep = ValidationReport()
    n = alg.dim

    a_mat = MatrixQ.from_columns(list(datum.a_basis)) if datum.a_basis else None
    p_mat = MatrixQ.from_columns(list(cd.p_basis))
    k_mat = MatrixQ.from_columns(list(cd.k_basis)) if cd.k_basis else None

    ok = all(span_contains(p_mat, h) for h in datum.a_basis)
    rep.record("a-inside-p", ok)

    bad = None
    for i, hi in enumerate(datum.a_basis):
        for j in range(i + 1, datum.dim_a):
            if not vec_is_zero(bracket(alg, hi, datum.a_basis[j])):
                bad = (i, j)
                break
        if bad:
            break
    rep.record("a-abelian", bad is None, str(bad) if bad else "")

    bad = None
    for ri, root in enumerate(datum.roots):
        for vi, v in enumerate(root.space):
            for ai, h in enumerate(datum.a_basis):
                lhs = bracket(alg, h, v)
                rhs = vec_scale(root.values[ai], v)
                if lhs != rhs:
                    bad = (ri, vi)
                    break
            if bad:
                break
        if bad:
            break
    rep.record("root-eigenvectors", bad is None,
               f"root {bad[0]}, vector {bad[1]}" if bad else "")

    bad = None
    for ri, root in enumerate(datum.roots):
        neg = [s for s in datum.roots
               if s.values == tuple(-v for v in root.values)]
        if len(neg) != 1:
            bad = (ri, "missing or duplicate opposite root")
            break
        neg_span = EchelonSpan(n)
        neg_span.extend(neg[0].space)
        img_span = EchelonSpan(n)
        img_span.extend(cd.theta.matvec(v) for v in root.space)
        if not img_span.equals(neg_span):
            bad = (ri, "theta image is not the opposite root space")
            break
    rep.record("theta-pairing", bad is None,
               f"root {bad[0]}: {bad[1]}" if bad else "")

    m_basis = _centralizer_of_a_in_k(alg, cd, datum)
    total = sum(r.multiplicity for r in datum.roots) + len(m_basis) + datum.dim_a
    rep.record("weight-space-completeness", total == n,
               f"sum {total} != dim g {n}" if total != n else "")

    bad = None
    if k_mat is None and datum.hm_basis:
        bad = "hm nonempty but k = 0"
    else:
        for i, h in enumerate(datum.hm_basis):
            if not span_contains(k_mat, h):
                bad = f"hm[{i}] not in k"
                break
            if any(not vec_is_zero(bracket(alg, h, a)) for a in datum.a_basis):
                bad = f"hm[{i}] does not commute with a"
                break
    rep.record("hm-in-m", bad is None, bad or "")

    pos_set = set(datum.positive)
    ok = all(0 <= i < len(datum.roots) for i in pos_set) and \
        2 * len(pos_set) == len(datum.roots)
    rep.record("positive-set", ok)

    ok = not (datum.mult_high and not datum.hm_basis)
    rep.record("mult-high-needs-hm", ok,
               "" if ok else "a root space of dimension >= 2 requires h_m != 0")

    return rep


def _box_candidates(dim: int, half_width: int):
    """Integer coordinate tuples in expanding boxes, deterministic order:
    per-coordinate candidates 0, 1, -1, 2, -2, ..., new shell only."""
    for b in range(1, half_width + 1):
        order = [0]
        for v in range(1, b + 1):
            order.extend((v, -v))
        for tup in itertools.product(order, repeat=dim):
            if max((abs(c) for c in tup), default=0) == b:
                yield tup


def zeta_value(datum: RestrictedRootDatum, coeffs: Sequence[Scalar]) -> Scalar:
    """Product of (nu - nu')(y) over ordered pairs of distinct roots.

    Since roots come in opposite pairs, 2*nu divides the product, so a
    nonzero value forces every nu(y) != 0 as well.
    """
    values = [r.value_at(coeffs) for r in datum.roots]
    prod = Scalar(1)
    for i, vi in enumerate(values):
        for j, vj in enumerate(values):
            if i != j:
                prod = prod * (vi - vj)
    return prod


def choose_y(datum: RestrictedRootDatum, max_half_width: int = 64) -> Vector:
    """First integer combination of the a-basis with all root values
    pairwise distinct and nonzero."""
    ambient = len(datum.a_basis[0]) if datum.a_basis else 0
    if not datum.a_basis:
        raise ValueError("datum has an empty Cartan subspace")
    if not datum.roots:
        return datum.a_basis[0]
    for tup in _box_candidates(datum.dim_a, max_half_width):
        coeffs = [Scalar(c) for c in tup]
        values = [r.value_at(coeffs) for r in datum.roots]
        if any(not v for v in values):
            continue
        if len(set(values)) != len(values):
            continue
        y = [ZERO] * ambient
        for c, h in zip(coeffs, datum.a_basis):
            if c:
                for i in range(ambient):
                    y[i] = y[i] + c * h[i]
        return tuple(y)
    raise AssertionError(
        "no valid y found; the search bound should never be reached for a "
        "valid datum")


def _krylov_is_cyclic(alg: LieAlgebra, x0: Sequence[Scalar],
                      root: RestrictedRoot, gen: Sequence[Scalar]) -> bool:
    span = EchelonSpan(alg.dim)
    v = tuple(gen)
    for _ in range(root.multiplicity):
        if not span.add(v):
            break
        v = bracket(alg, x0, v)
    return span.dim == root.multiplicity


def _cyclic_generator(alg: LieAlgebra, x0: Sequence[Scalar],
                      root: RestrictedRoot) -> Optional[Vector]:
    """Datum basis vectors first, then small integer combinations."""
    for v in root.space:
        if _krylov_is_cyclic(alg, x0, root, v):
            return tuple(v)
    ambient = alg.dim
    for tup in _box_candidates(root.multiplicity, 8):
        v = [ZERO] * ambient
        for c, b in zip(tup, root.space):
            if c:
                sc = Scalar(c)
                for i in range(ambient):
                    v[i] = v[i] + sc * b[i]
        if vec_is_zero(v):
            continue
        if _krylov_is_cyclic(alg, x0, root, tuple(v)):
            return tuple(v)
    return None


def choose_x0(alg: LieAlgebra, datum: RestrictedRootDatum,
              max_half_width: int = 64) -> Vector:
    """Element of h_m making every multiplicity->=2 root space a cyclic
    ad-module; the zero vector when no such root space exists."""
    ambient = alg.dim
    high = [datum.roots[i] for i in datum.mult_high]
    if not high:
        return zero_vector(ambient)
    if not datum.hm_basis:
        raise ValidationFailure("mult-high-needs-hm",
                                "cannot choose x0 with empty h_m")
    for tup in _box_candidates(len(datum.hm_basis), max_half_width):
        x0 = [ZERO] * ambient
        for c, h in zip(tup, datum.hm_basis):
            if c:
                sc = Scalar(c)
                for i in range(ambient):
                    x0[i] = x0[i] + sc * h[i]
        x0 = tuple(x0)
        if all(_cyclic_generator(alg, x0, r) is not None for r in high):
            return x0
    raise AssertionError(
        "no valid x0 found; the search bound should never be reached for a "
        "valid datum")


def construct_regular(alg: LieAlgebra, cd: CartanDecomposition,
                      datum: RestrictedRootDatum) -> ElementZ:
    """Deterministic K-regular element z = x + y from the datum.

    The output is certified on the spot; a failed certificate would be a
    soundness bug and trips an assertion.
    """
    from .certify import is_k_regular

    y = choose_y(datum)
    x0 = choose_x0(alg, datum)
    x = list(x0)
    for i in datum.positive:
        root = datum.roots[i]
        if root.multiplicity == 1:
            x_nu = root.space[0]
        else:
            x_nu = _cyclic_generator(alg, x0, root)
            assert x_nu is not None, "x0 was chosen to make this cyclic"
        contrib = vec_add(x_nu, cd.theta.matvec(x_nu))
        for k in range(alg.dim):
            x[k] = x[k] + contrib[k]
    x = tuple(x)
    z = vec_add(x, y)
    ez = ElementZ(z=z, x=x, y=tuple(y))
    cert = is_k_regular(alg, cd, z)
    assert cert.verdict == "k-regular", (
        "constructed element failed the regularity certificate; this "
        "contradicts the construction theorem and is a bug")
    return ez
