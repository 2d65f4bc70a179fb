import pytest

from kregular import (
    CartanDecomposition,
    LieAlgebra,
    MatrixQ,
    RestrictedRoot,
    RestrictedRootDatum,
    Scalar,
    catalog_build,
)
from kregular.scalar import ONE, ZERO


def sc(re=0, im=0):
    return Scalar(re, im)


def vec(dim, **coords):
    """Sparse constructor: vec(8, e3=1, e6=-1) -> unit coords at 3 and 6."""
    out = [ZERO] * dim
    for key, val in coords.items():
        out[int(key[1:])] = Scalar(val)
    return tuple(out)


@pytest.fixture(scope="session")
def sl2():
    return catalog_build("split-sl", 2)


@pytest.fixture(scope="session")
def sl3():
    return catalog_build("split-sl", 3)


@pytest.fixture(scope="session")
def sl4():
    return catalog_build("split-sl", 4)


def _sl3_lower_table():
    alg, _ = catalog_build("split-sl", 3)
    return {
        (i, j): alg.table(i, j)
        for i in range(alg.dim)
        for j in range(i + 1, alg.dim)
        if any(alg.table(i, j))
    }


@pytest.fixture(scope="session")
def su21():
    """An indefinite-unitary-type decomposition of the sl(3) bracket table.

    The involution is conjugation by diag(1, 1, -1); k is the upper-left
    2x2 block plus the last diagonal entry, p is the off-block.  Basis
    order is H1, H2, E12, E13, E21, E23, E31, E32.
    """
    alg3, _ = catalog_build("split-sl", 3)
    alg = LieAlgebra.from_lower_table(
        "su21", 8, _sl3_lower_table(), basis_labels=alg3.basis_labels)
    signs = [1, 1, 1, -1, 1, -1, -1, -1]
    theta = MatrixQ.from_rows([
        [Scalar(signs[i]) if i == j else ZERO for j in range(8)]
        for i in range(8)
    ])
    return alg, CartanDecomposition(theta)


@pytest.fixture(scope="session")
def su21_datum():
    """Restricted-root datum for the su21 fixture: a = C(E13 + E31),
    roots +-1 (multiplicity 2) and +-2, m = C(H1 - H2)."""
    a1 = vec(8, e3=1, e6=1)
    hm = vec(8, e0=1, e1=-1)
    plus_one = RestrictedRoot(
        (sc(1),), (vec(8, e2=1, e7=1), vec(8, e4=1, e5=-1)))
    minus_one = RestrictedRoot(
        (sc(-1),), (vec(8, e2=1, e7=-1), vec(8, e4=1, e5=1)))
    plus_two = RestrictedRoot(
        (sc(2),), (vec(8, e3=1, e6=-1, e0=-1, e1=-1),))
    minus_two = RestrictedRoot(
        (sc(-2),), (vec(8, e3=1, e6=-1, e0=1, e1=1),))
    return RestrictedRootDatum(
        a_basis=(a1,),
        hm_basis=(hm,),
        roots=(plus_one, minus_one, plus_two, minus_two),
        positive=(0, 2),
    )
