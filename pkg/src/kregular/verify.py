"""Seeded verification suites tying the library's guarantees to checks.

Every suite is exact: a single failing comparison is a real failure, not
noise.  Reports are deterministic functions of (algebra, suite, seed,
samples); worker count never changes report content.
"""

from __future__ import annotations

import io as _io
import csv
import random
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import (
    CartanDecomposition,
    LieAlgebra,
    ad_matrix,
    bracket,
    decompose,
    killing_pair,
)
from .catalog import matrix_index
from .certify import (
    VERDICT_NIL,
    centralizer_in_k,
    degree_bounds,
    derived_series,
    generated_subalgebra,
    gram_matrix,
    is_k_regular,
    lie_derivative_residual,
    nilcone_test,
    power_trace,
    separation_probe,
)
from .linalg import (
    EchelonSpan,
    MatrixQ,
    is_nilpotent_matrix,
    solve_in_span,
    span_contains,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .roots import (
    RestrictedRootDatum,
    catalog_datum,
    choose_y,
    construct_regular,
    zeta_value,
)
from .scalar import ONE, ZERO, I, Scalar
from .words import (
    DualWordEvaluator,
    LyndonWord,
    WordEvaluator,
    is_lyndon,
    lyndon_basis,
    witt_dimension,
)

SUITES = ("stabilization", "invariance", "regularity", "nilcone",
          "appendix", "witt", "bounds", "all")

DEFAULT_BOX = 3


@dataclass
class PropertyRecord:
    name: str
    statement: str
    checks_run: int = 0
    failures: int = 0
    first_counterexample: Optional[str] = None

    def check(self, ok: bool, counterexample: str = "") -> None:
        self.checks_run += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = counterexample

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "checks_run": self.checks_run,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }


@dataclass
class VerifyReport:
    suite: str
    algebra: str
    seed: int
    samples: int
    records: list = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.records)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def body_dict(self) -> dict:
        """Deterministic report body: everything except timing."""
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "seed": self.seed,
            "samples": self.samples,
            "failures": self.failures,
            "records": [r.to_dict() for r in self.records],
        }

    def to_dict(self) -> dict:
        d = self.body_dict()
        d["wall_time_s"] = round(self.wall_time_s, 3)
        return d

    def to_csv(self) -> str:
        buf = _io.StringIO()
        w = csv.writer(buf)
        w.writerow(["suite", "algebra", "seed", "samples", "property",
                    "checks_run", "failures", "first_counterexample"])
        for r in self.records:
            w.writerow([self.suite, self.algebra, self.seed, self.samples,
                        r.name, r.checks_run, r.failures,
                        r.first_counterexample or ""])
        return buf.getvalue()


def sample_element(alg: LieAlgebra, rng: random.Random,
                   box: int = DEFAULT_BOX):
    """Random element with integer real/imaginary coordinates in [-box, box]."""
    return tuple(
        Scalar(rng.randint(-box, box), rng.randint(-box, box))
        for _ in range(alg.dim)
    )


def _sl2_curated(alg: LieAlgebra):
    h, e, f = (alg.basis_vector(i) for i in range(3))
    zero = (ZERO,) * 3
    witness = tuple(a + I * (b + c) for a, b, c in zip(h, e, f))  # h + i(e+f)
    e_minus_f = tuple(a - b for a, b in zip(e, f))
    return [zero, witness, e, e_minus_f, h]


def _suite_stabilization(alg, cd, rng, samples, jobs, box) -> list:
    rec = PropertyRecord(
        "stabilization",
        "the filtration of the subalgebra generated by the k- and p-parts "
        "stabilizes by step dim(g) - 1",
    )
    n = alg.dim
    for _ in range(samples):
        z = sample_element(alg, rng, box)
        try:
            rep = generated_subalgebra(alg, cd, z)
            rec.check(rep.stabilization_degree <= max(n - 1, 1),
                      f"z with stabilization {rep.stabilization_degree}")
        except AssertionError as exc:
            rec.check(False, str(exc))
    return [rec]


def _suite_regularity(alg, cd, rng, samples, jobs, box,
                      datum: Optional[RestrictedRootDatum]) -> list:
    rank_bound = PropertyRecord(
        "rank-bound",
        "Gram rank never exceeds dim g(z), with equality when g(z) = g",
    )
    agreement = PropertyRecord(
        "verdict-agreement",
        "the Gram-rank verdict and the filtration-dimension verdict agree "
        "on regularity for every input",
    )
    n = alg.dim
    elements = [sample_element(alg, rng, box) for _ in range(samples)]
    if datum is not None:
        elements.append(construct_regular(alg, cd, datum).z)
    for z in elements:
        rep = generated_subalgebra(alg, cd, z)
        try:
            cert = is_k_regular(alg, cd, z, jobs=jobs)
        except AssertionError as exc:
            agreement.check(False, str(exc))
            continue
        agreement.check(True)
        ok = cert.rank <= rep.dim and (rep.dim != n or cert.rank == n)
        rank_bound.check(ok, f"rank {cert.rank}, dim g(z) {rep.dim}")
    return [agreement, rank_bound]


def _suite_invariance(alg, cd, rng, samples, jobs, box) -> list:
    residual = PropertyRecord(
        "residual-zero",
        "the first-order change of every word-pair invariant along every "
        "k-direction vanishes exactly",
    )
    equivariance = PropertyRecord(
        "equivariance",
        "the derivative of a word evaluation along ([u,x],[u,y]) equals "
        "[u, value] for every k-basis direction u",
    )
    words = [w for group in lyndon_basis(4) for w in group]
    for _ in range(samples):
        z = sample_element(alg, rng, box)
        ez = decompose(cd, z)
        for u in cd.k_basis:
            dx = bracket(alg, u, ez.x)
            dy = bracket(alg, u, ez.y)
            dev = DualWordEvaluator(alg, ez.x, ez.y, dx, dy)
            duals = {w: dev.value(w) for w in words}
            for w, dv in duals.items():
                expected = bracket(alg, u, dv.value)
                equivariance.check(dv.deriv == expected, f"word {w}")
            for a in range(len(words)):
                da = duals[words[a]]
                for b in range(a, len(words)):
                    db = duals[words[b]]
                    res = killing_pair(alg, da.value, db.deriv) \
                        + killing_pair(alg, da.deriv, db.value)
                    residual.check(not res,
                                   f"pair ({words[a]},{words[b]}), residual {res}")
    return [residual, equivariance]


def _is_nil_by_solvability(alg, cd, z) -> bool:
    """Independent route: derived series of g(z) reaches 0 and ad is
    nilpotent on every basis element (plus sampled members)."""
    rep = generated_subalgebra(alg, cd, z)
    if rep.dim == 0:
        return True
    if derived_series(alg, rep.basis)[-1] != 0:
        return False
    rng = random.Random(20240601)
    members = list(rep.basis)
    for _ in range(20):
        v = [ZERO] * alg.dim
        for b in rep.basis:
            c = Scalar(rng.randint(-3, 3), rng.randint(-3, 3))
            if c:
                for i in range(alg.dim):
                    v[i] = v[i] + c * b[i]
        members.append(tuple(v))
    return all(
        is_nilpotent_matrix(ad_matrix(alg, w), alg.dim) for w in members
    )


def _suite_nilcone(alg, cd, rng, samples, jobs, box) -> list:
    cartan = PropertyRecord(
        "cartan-criterion",
        "vanishing Gram with nilpotent ad x, ad y agrees with solvability "
        "of g(z) plus elementwise ad-nilpotency",
    )
    oracle = PropertyRecord(
        "hand-oracle",
        "for sl(2): both routes agree with the closed-form test "
        "x = 0 and B(y, y) = 0",
    )
    traces = PropertyRecord(
        "power-traces-vanish",
        "tr((ad z)^m) = 0 for every m <= 2 dim g whenever the nilcone "
        "verdict is positive",
    )
    is_sl2 = alg.family == "split-sl" and alg.dim == 3
    elements = list(_sl2_curated(alg)) if is_sl2 else []
    elements.extend(sample_element(alg, rng, box) for _ in range(samples))
    for z in elements:
        cert = nilcone_test(alg, cd, z, jobs=jobs)
        via_gram = cert.verdict == VERDICT_NIL
        via_solv = _is_nil_by_solvability(alg, cd, z)
        cartan.check(via_gram == via_solv,
                     f"gram route {via_gram}, solvability route {via_solv}")
        if is_sl2:
            ez = decompose(cd, z)
            via_hand = vec_is_zero(ez.x) and not killing_pair(alg, ez.y, ez.y)
            oracle.check(via_gram == via_hand,
                         f"gram route {via_gram}, hand oracle {via_hand}")
        if via_gram:
            for m in range(1, 2 * alg.dim + 1):
                traces.check(not power_trace(alg, z, m), f"power {m}")
    records = [cartan, traces]
    if is_sl2:
        records.insert(1, oracle)
    return records


def _killing_dual_in_a(alg, datum, root):
    """h_nu in a with B(h, h_nu) = nu(h) for every h in the a-basis."""
    k = datum.dim_a
    rows = []
    for hi in datum.a_basis:
        rows.append([killing_pair(alg, hi, hj) for hj in datum.a_basis])
    gram = MatrixQ.from_rows(rows)
    coeffs = solve_in_span(gram, list(root.values))
    if coeffs is None:
        return None
    out = [ZERO] * alg.dim
    for c, h in zip(coeffs, datum.a_basis):
        if c:
            for i in range(alg.dim):
                out[i] = out[i] + c * h[i]
    return tuple(out)


def _suite_appendix(alg, cd, rng, samples, jobs, box,
                    datum: Optional[RestrictedRootDatum]) -> list:
    certified = PropertyRecord(
        "construct-certified",
        "the deterministic construction yields a certified K-regular element",
    )
    centralizer = PropertyRecord(
        "centralizer-empty",
        "the centralizer in k of the generated subalgebra of a regular "
        "element is zero",
    )
    containment = PropertyRecord(
        "n-containment",
        "every positive restricted root space lies inside g(z) for the "
        "constructed element",
    )
    zeta = PropertyRecord(
        "zeta-nonzero",
        "the chosen y has pairwise distinct nonzero root values, "
        "recomputed from the product formula",
    )
    dual_pair = PropertyRecord(
        "killing-dual-pairing",
        "the p-projection of [e, theta(e)] equals B(e, theta(e)) times the "
        "Killing-dual of the root, for each positive root vector e",
    )
    determinism = PropertyRecord(
        "determinism",
        "two runs of the construction on the same datum produce the same "
        "element",
    )
    if datum is None:
        datum = catalog_datum(alg, cd)

    try:
        ez = construct_regular(alg, cd, datum)
        certified.check(True)
    except AssertionError as exc:
        certified.check(False, str(exc))
        return [certified]

    rep = generated_subalgebra(alg, cd, ez.z)
    cz = centralizer_in_k(alg, cd, rep)
    centralizer.check(len(cz) == 0, f"centralizer dim {len(cz)}")

    basis_mat = MatrixQ.from_columns(rep.basis)
    for i in datum.positive:
        for v in datum.roots[i].space:
            containment.check(span_contains(basis_mat, v),
                              f"root {i} space escapes g(z)")

    a_mat = MatrixQ.from_columns(list(datum.a_basis))
    coeffs = solve_in_span(a_mat, ez.y)
    zeta.check(coeffs is not None and bool(zeta_value(datum, coeffs)),
               "zeta vanishes at the chosen y")

    for i in datum.positive:
        root = datum.roots[i]
        h_nu = _killing_dual_in_a(alg, datum, root)
        if h_nu is None:
            dual_pair.check(False, f"root {i}: no Killing dual in a")
            continue
        for e in root.space:
            theta_e = cd.theta.matvec(e)
            w = cd.proj_p.matvec(bracket(alg, e, theta_e))
            c = killing_pair(alg, e, theta_e)
            expected = vec_scale(c, h_nu)
            dual_pair.check(w == expected,
                            f"root {i}: projection is not B(e, theta e) h_nu")

    ez2 = construct_regular(alg, cd, datum)
    determinism.check(ez.z == ez2.z, "construction differs between runs")

    return [certified, centralizer, containment, zeta, dual_pair, determinism]


def brute_force_lyndon_count(degree: int) -> int:
    """Independent count: enumerate all 2^degree words, keep those strictly
    smaller than every proper rotation."""
    import itertools

    count = 0
    for letters in itertools.product("XY", repeat=degree):
        if all(letters < letters[k:] + letters[:k] for k in range(1, degree)):
            count += 1
    return count


def _suite_witt(alg, cd, rng, samples, jobs, box) -> list:
    formula = PropertyRecord(
        "witt-formula",
        "Lyndon word counts per degree match the necklace-count formula "
        "for degrees 1..12",
    )
    brute = PropertyRecord(
        "brute-force",
        "Lyndon word counts match exhaustive rotation-filter enumeration "
        "for degrees 1..6",
    )
    groups = lyndon_basis(12)
    for j in range(1, 13):
        formula.check(len(groups[j - 1]) == witt_dimension(j), f"degree {j}")
    for j in range(1, 7):
        brute.check(len(groups[j - 1]) == brute_force_lyndon_count(j),
                    f"degree {j}")
    return [formula, brute]


_EXPECTED_BOUNDS = {"sl2": (3, 6, 30), "sl3": (8, 16, 600),
                    "sl4": (15, 30, 3915)}


def _suite_bounds(alg, cd, rng, samples, jobs, box) -> list:
    rec = PropertyRecord(
        "degree-bound",
        "the generation degree bound equals C(2n, 2) * dim p",
    )
    import math

    b = degree_bounds(alg, cd)
    rec.check(b.r == math.comb(2 * b.n, 2) * b.dim_p, "formula mismatch")
    rec.check(b.two_n == 2 * b.n, "2n mismatch")
    expected = _EXPECTED_BOUNDS.get(alg.name)
    if expected is not None:
        rec.check((b.n, b.two_n, b.r) == expected,
                  f"got ({b.n}, {b.two_n}, {b.r}), expected {expected}")
    return [rec]


_SUITE_FUNCS = {
    "stabilization": lambda a, c, r, s, j, b, d: _suite_stabilization(a, c, r, s, j, b),
    "invariance": lambda a, c, r, s, j, b, d: _suite_invariance(a, c, r, s, j, b),
    "regularity": _suite_regularity,
    "nilcone": lambda a, c, r, s, j, b, d: _suite_nilcone(a, c, r, s, j, b),
    "appendix": _suite_appendix,
    "witt": lambda a, c, r, s, j, b, d: _suite_witt(a, c, r, s, j, b),
    "bounds": lambda a, c, r, s, j, b, d: _suite_bounds(a, c, r, s, j, b),
}


def verify_suite(alg: LieAlgebra, cd: CartanDecomposition, suite: str,
                 seed: int = 0, samples: int = 100, jobs: int = 1,
                 box: int = DEFAULT_BOX,
                 datum: Optional[RestrictedRootDatum] = None) -> VerifyReport:
    """Run one named suite (or 'all') and return its report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {SUITES}")
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    if datum is None and alg.family == "split-sl":
        datum = catalog_datum(alg, cd)
    start = time.monotonic()
    records = []
    for name in names:
        rng = random.Random(seed)
        records.extend(_SUITE_FUNCS[name](alg, cd, rng, samples, jobs, box, datum))
    report = VerifyReport(suite=suite, algebra=alg.name, seed=seed,
                          samples=samples, records=records)
    report.wall_time_s = time.monotonic() - start
    return report
