import pytest

from kregular.algebra import decompose, killing_pair
from kregular.certify import (
    GRAM_LIMIT_ENV,
    centralizer_in_k,
    degree_bounds,
    derived_series,
    full_gram_side,
    generated_subalgebra,
    gram_matrix,
    invariant_value,
    is_k_regular,
    is_solvable,
    lie_derivative_residual,
    nilcone_test,
    power_trace,
    separation_probe,
)
from kregular.errors import DegreeBoundError, GramSizeError
from kregular.linalg import MatrixQ, rank_of
from kregular.scalar import I, ONE, ZERO, Scalar
from kregular.words import LyndonWord

from conftest import vec

Z_REG = vec(3, e0=1, e1=1, e2=-1)  # h + e - f: x = e - f, y = h
Z_NIL = tuple(a + I * (b + c) for a, b, c in zip(
    vec(3, e0=1), vec(3, e1=1), vec(3, e2=1)))  # h + i(e + f)


def test_generated_subalgebra(sl2):
    alg, cd = sl2
    rep = generated_subalgebra(alg, cd, Z_REG)
    assert rep.dim == 3
    assert rep.stabilization_degree == 2
    assert rep.per_degree_dims == [2, 3]


def test_generated_subalgebra_of_zero(sl2):
    alg, cd = sl2
    rep = generated_subalgebra(alg, cd, vec(3))
    assert rep.dim == 0
    assert rep.stabilization_degree == 1


def test_gram_full_mode(sl2):
    alg, cd = sl2
    cert = gram_matrix(alg, cd, Z_REG)
    assert cert.mode == "full"
    assert cert.gram.rows == full_gram_side(3) == 5
    assert cert.gram.is_symmetric()
    assert cert.rank == 3


def test_gram_reduced_equals_full_rank(sl3):
    alg, cd = sl3
    z = tuple(Scalar((k * 3) % 5 - 2, k % 2) for k in range(8))
    full = gram_matrix(alg, cd, z, mode="full")
    reduced = gram_matrix(alg, cd, z, mode="reduced")
    assert full.rank == reduced.rank
    assert reduced.gram.rows == generated_subalgebra(alg, cd, z).dim


def test_gram_jobs_deterministic(sl2):
    alg, cd = sl2
    a = gram_matrix(alg, cd, Z_REG, jobs=1)
    b = gram_matrix(alg, cd, Z_REG, jobs=4)
    assert a.gram == b.gram
    assert a.gram_hash() == b.gram_hash()


def test_gram_size_limit(sl2, monkeypatch):
    alg, cd = sl2
    monkeypatch.setenv(GRAM_LIMIT_ENV, "3")
    with pytest.raises(GramSizeError):
        gram_matrix(alg, cd, Z_REG, mode="full")
    # override flag and reduced mode both sidestep the limit
    assert gram_matrix(alg, cd, Z_REG, mode="full", override_limit=True).rank == 3
    assert gram_matrix(alg, cd, Z_REG, mode="reduced").rank == 3


def test_gram_rejects_bad_args(sl2):
    alg, cd = sl2
    with pytest.raises(ValueError):
        gram_matrix(alg, cd, Z_REG, degree_cap=0)
    with pytest.raises(ValueError):
        gram_matrix(alg, cd, Z_REG, mode="fast")


def test_is_k_regular_verdicts(sl2):
    alg, cd = sl2
    cert = is_k_regular(alg, cd, Z_REG)
    assert cert.verdict == "k-regular"
    rows = cert.witnesses["minor_rows"]
    cols = cert.witnesses["minor_cols"]
    minor = MatrixQ.from_rows([[cert.gram[i, j] for j in cols] for i in rows])
    assert rank_of(minor) == 3

    e = alg.basis_vector(1)
    assert is_k_regular(alg, cd, e).verdict == "k-regular"
    assert is_k_regular(alg, cd, alg.basis_vector(0)).verdict == "neither"
    assert is_k_regular(alg, cd, vec(3)).verdict == "neither"


def test_is_k_regular_uses_reduced_mode_on_sl4(sl4):
    alg, cd = sl4
    z = tuple(Scalar(k % 3 - 1, (k * 2) % 3 - 1) for k in range(15))
    cert = is_k_regular(alg, cd, z)
    assert cert.mode == "reduced"
    assert cert.verdict in ("k-regular", "neither")


def test_nilcone_verdicts(sl2):
    alg, cd = sl2
    cert = nilcone_test(alg, cd, Z_NIL)
    assert cert.verdict == "nil-k"
    assert cert.witnesses == {"ad_x_exponent": 1, "ad_y_exponent": 3}

    zero = nilcone_test(alg, cd, vec(3))
    assert zero.verdict == "nil-k"
    assert zero.witnesses == {"ad_x_exponent": 1, "ad_y_exponent": 1}

    assert nilcone_test(alg, cd, alg.basis_vector(1)).verdict == "k-regular"
    assert nilcone_test(alg, cd, alg.basis_vector(0)).verdict == "neither"


def test_centralizer_in_k(sl2):
    alg, cd = sl2
    rep = generated_subalgebra(alg, cd, Z_REG)
    assert centralizer_in_k(alg, cd, rep) == []
    empty = generated_subalgebra(alg, cd, vec(3))
    assert len(centralizer_in_k(alg, cd, empty)) == cd.dim_k


def test_derived_series(sl2):
    alg, _ = sl2
    full = [alg.basis_vector(i) for i in range(3)]
    assert derived_series(alg, full) == [3, 3]
    assert not is_solvable(alg, full)
    borel = [alg.basis_vector(0), alg.basis_vector(1)]  # h, e
    assert derived_series(alg, borel) == [2, 1, 0]
    assert is_solvable(alg, borel)
    with pytest.raises(ValueError):
        derived_series(alg, [alg.basis_vector(1), alg.basis_vector(2)])


def test_invariant_value(sl2):
    alg, cd = sl2
    x_word = LyndonWord.parse("X")
    xy_word = LyndonWord.parse("XY")
    iv = invariant_value(alg, cd, x_word, xy_word, Z_REG)
    # B(e - f, -2e - 2f) = 0
    assert iv.value == ZERO
    assert iv.degree == 3
    xx = invariant_value(alg, cd, x_word, x_word, Z_REG)
    assert xx.value == Scalar(-8)  # B(e - f, e - f)


def test_invariant_degree_bound(sl2):
    alg, cd = sl2
    with pytest.raises(DegreeBoundError):
        invariant_value(alg, cd, LyndonWord.parse("XXXY"),
                        LyndonWord.parse("XXY"), Z_REG)


def test_lie_derivative_residual(sl2):
    alg, cd = sl2
    t = LyndonWord.parse("XY")
    tp = LyndonWord.parse("XXY")
    for u in cd.k_basis:
        assert lie_derivative_residual(alg, cd, t, tp, Z_REG, u) == ZERO
    with pytest.raises(ValueError):
        lie_derivative_residual(alg, cd, t, tp, Z_REG, alg.basis_vector(0))


def test_power_trace(sl2):
    alg, _ = sl2
    h = alg.basis_vector(0)
    assert power_trace(alg, h, 1) == ZERO
    assert power_trace(alg, h, 2) == Scalar(8)
    with pytest.raises(ValueError):
        power_trace(alg, h, 7)
    with pytest.raises(ValueError):
        power_trace(alg, h, 0)


def test_degree_bounds(sl2, sl3, sl4):
    for (alg, cd), expected in zip(
            (sl2, sl3, sl4), [(3, 6, 2, 30), (8, 16, 5, 600), (15, 30, 9, 3915)]):
        b = degree_bounds(alg, cd)
        assert (b.n, b.two_n, b.dim_p, b.r) == expected


def test_separation_probe(sl2):
    alg, cd = sl2
    z1 = Z_REG
    z2 = vec(3, e0=1, e1=2, e2=-2)  # x-part scaled by 2
    sep = separation_probe(alg, cd, z1, z2)
    assert sep is not None
    assert sep.kind == "word-pair"
    assert sep.detail == {"t": "X", "t_prime": "X",
                          "value": "-8", "value_prime": "-32"}
    assert separation_probe(alg, cd, z1, z1) is None


def test_full_gram_side():
    assert full_gram_side(3) == 5
    assert full_gram_side(8) == 71
    assert full_gram_side(15) == 4720
