"""Acceptance gate: every guarantee the package makes, at desk scale.

Each test prints one line, "[acceptance] <name>: PASS|FAIL (<elapsed>s)",
and enforces both the exact property (zero tolerance) and a runtime
budget.  Seeds are fixed so the gate is reproducible bit-for-bit.
"""

import time

import pytest

from kregular.catalog import catalog_build
from kregular.certify import is_k_regular, separation_probe
from kregular.roots import catalog_datum, construct_regular
from kregular.verify import verify_suite

from conftest import vec

SEED = 20240601


def _report(name, budget_s, fn):
    start = time.monotonic()
    try:
        fn()
        elapsed = time.monotonic() - start
        print(f"[acceptance] {name}: PASS ({elapsed:.2f}s)")
    except BaseException:
        elapsed = time.monotonic() - start
        print(f"[acceptance] {name}: FAIL ({elapsed:.2f}s)")
        raise
    assert elapsed < budget_s, f"{name} took {elapsed:.2f}s, budget {budget_s}s"


def test_acceptance_1_stabilization():
    def run():
        for n in (2, 3, 4):
            alg, cd = catalog_build("split-sl", n)
            report = verify_suite(alg, cd, "stabilization",
                                  seed=SEED, samples=100)
            assert report.ok, report.body_dict()
            assert report.records[0].checks_run == 100

    _report("stabilization bound on sl(2..4), 100 samples each", 10, run)


def test_acceptance_2_regularity_certificate():
    def run():
        for n, mode in ((2, "full"), (3, "full"), (4, "reduced")):
            alg, cd = catalog_build("split-sl", n)
            report = verify_suite(alg, cd, "regularity",
                                  seed=SEED, samples=100)
            assert report.ok, report.body_dict()
            # the regularity suite also appends the constructed regular
            assert all(r.checks_run == 101 for r in report.records)
            z = construct_regular(alg, cd, catalog_datum(alg, cd)).z
            assert is_k_regular(alg, cd, z).mode == mode

    _report("Gram-rank regularity certificate agrees with the filtration",
            60, run)


def test_acceptance_3_appendix_construction():
    def run():
        for n in (2, 3, 4):
            alg, cd = catalog_build("split-sl", n)
            report = verify_suite(alg, cd, "appendix", seed=SEED, samples=1)
            assert report.ok, report.body_dict()
            names = {r.name for r in report.records}
            assert {"construct-certified", "centralizer-empty",
                    "determinism"} <= names

    _report("constructive regular elements certify on sl(2..4)", 30, run)


def test_acceptance_4_nilcone_equivalence():
    def run():
        alg, cd = catalog_build("split-sl", 2)
        report = verify_suite(alg, cd, "nilcone", seed=SEED, samples=200)
        assert report.ok, report.body_dict()
        by_name = {r.name: r for r in report.records}
        # 200 sampled points plus the five curated witnesses
        assert by_name["cartan-criterion"].checks_run == 205
        assert by_name["hand-oracle"].checks_run == 205

    _report("three nilcone predicates agree on sl(2), 200 samples", 10, run)


def test_acceptance_5_invariance():
    def run():
        for n in (2, 3):
            alg, cd = catalog_build("split-sl", n)
            report = verify_suite(alg, cd, "invariance", seed=SEED, samples=25)
            assert report.ok, report.body_dict()

    _report("K-invariance of word-pair polynomials on sl(2), sl(3)", 60, run)


def test_acceptance_6_witt_dimensions():
    def run():
        alg, cd = catalog_build("split-sl", 2)
        report = verify_suite(alg, cd, "witt", seed=SEED, samples=1)
        assert report.ok, report.body_dict()
        by_name = {r.name: r for r in report.records}
        assert by_name["witt-formula"].checks_run == 12
        assert by_name["brute-force"].checks_run == 6

    _report("Lyndon counts match the dimension formula and brute force",
            5, run)


def test_acceptance_7_degree_bounds():
    def run():
        expected = {2: (3, 6, 30), 3: (8, 16, 600), 4: (15, 30, 3915)}
        for n, _ in expected.items():
            alg, cd = catalog_build("split-sl", n)
            report = verify_suite(alg, cd, "bounds", seed=SEED, samples=1)
            assert report.ok, report.body_dict()

    _report("generation degree bounds (3,6,30)/(8,16,600)/(15,30,3915)",
            1, run)


def test_acceptance_8_separation_smoke():
    def run():
        alg, cd = catalog_build("split-sl", 2)
        z1 = vec(3, e0=1, e1=1, e2=-1)
        z2 = vec(3, e0=1, e1=2, e2=-2)  # x-part scaled
        sep = separation_probe(alg, cd, z1, z2, degree_cap=6)
        assert sep is not None and sep.kind == "word-pair"
        assert separation_probe(alg, cd, z1, z1, degree_cap=6) is None

    _report("separating invariant found for scaled pair, none for equal",
            5, run)
