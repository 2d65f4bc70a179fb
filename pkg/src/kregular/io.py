"""JSON schemas for algebras, elements, and restricted-root data.

Scalars travel as 4-integer quads [re_num, re_den, im_num, im_den];
arbitrary precision, base-10 strings permitted.  Loading always validates;
a document that parses but violates an invariant is rejected with the name
of the failed check.
"""

from __future__ import annotations

import json
import sys
from typing import Optional, Sequence

from .algebra import CartanDecomposition, LieAlgebra, validate
from .errors import SchemaError, ValidationFailure
from .linalg import MatrixQ, Vector
from .roots import RestrictedRoot, RestrictedRootDatum, validate_datum
from .scalar import Scalar


def _scalar_from_json(obj) -> Scalar:
    try:
        return Scalar.from_quad(obj)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"bad scalar encoding {obj!r}: {exc}") from exc


def _vector_from_json(obj, dim: int) -> Vector:
    if not isinstance(obj, list) or len(obj) != dim:
        raise SchemaError(f"expected a vector of {dim} scalars")
    return tuple(_scalar_from_json(q) for q in obj)


def _vector_to_json(v: Sequence[Scalar]) -> list:
    return [s.to_quad() for s in v]


def dump_algebra(alg: LieAlgebra, cd: CartanDecomposition) -> dict:
    structure = []
    for (i, j), terms in sorted(alg.structure.items()):
        if i < j:
            dense = alg.table(i, j)
            structure.append([i, j, _vector_to_json(dense)])
    return {
        "name": alg.name,
        "dim": alg.dim,
        "basis_labels": list(alg.basis_labels),
        "structure": structure,
        "theta": [
            _vector_to_json(cd.theta.row(i)) for i in range(cd.theta.rows)
        ],
    }


def load_algebra(doc: dict) -> tuple:
    """Parse and fully validate an algebra document; returns (alg, cd)."""
    if not isinstance(doc, dict):
        raise SchemaError("algebra document must be a JSON object")
    for key in ("name", "dim", "structure", "theta"):
        if key not in doc:
            raise SchemaError(f"algebra document missing {key!r}")
    name = doc["name"]
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer")
    labels = doc.get("basis_labels")
    if labels is not None and len(labels) != dim:
        raise SchemaError("basis_labels length must equal dim")

    lower = {}
    for entry in doc["structure"]:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise SchemaError("structure entries must be [i, j, coeffs]")
        i, j, coeffs = entry
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < dim):
            raise SchemaError(f"structure indices must satisfy 0 <= i < j < dim, got ({i},{j})")
        lower[(i, j)] = _vector_from_json(coeffs, dim)
    alg = LieAlgebra.from_lower_table(name, dim, lower, basis_labels=labels)

    theta_rows = doc["theta"]
    if len(theta_rows) != dim:
        raise SchemaError("theta must be a dim x dim array")
    theta = MatrixQ.from_rows([_vector_from_json(r, dim) for r in theta_rows])
    cd = CartanDecomposition(theta)

    report = validate(alg, cd)
    if not report.ok:
        bad = report.first_failure
        raise ValidationFailure(bad.name, bad.detail)
    return alg, cd


def dump_element(v: Sequence[Scalar]) -> dict:
    return {"coeffs": _vector_to_json(v)}


def load_element(doc: dict, dim: int) -> Vector:
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise SchemaError("element document must be an object with 'coeffs'")
    return _vector_from_json(doc["coeffs"], dim)


def dump_datum(datum: RestrictedRootDatum) -> dict:
    return {
        "a_basis": [_vector_to_json(v) for v in datum.a_basis],
        "hm_basis": [_vector_to_json(v) for v in datum.hm_basis],
        "roots": [
            {
                "values_on_a_basis": _vector_to_json(r.values),
                "space": [_vector_to_json(v) for v in r.space],
            }
            for r in datum.roots
        ],
        "positive": list(datum.positive),
    }


def load_datum(doc: dict, alg: LieAlgebra,
               cd: CartanDecomposition) -> RestrictedRootDatum:
    """Parse and validate a restricted-root datum document."""
    if not isinstance(doc, dict):
        raise SchemaError("datum document must be a JSON object")
    for key in ("a_basis", "roots", "positive"):
        if key not in doc:
            raise SchemaError(f"datum document missing {key!r}")
    dim = alg.dim
    a_basis = tuple(_vector_from_json(v, dim) for v in doc["a_basis"])
    hm_basis = tuple(_vector_from_json(v, dim) for v in doc.get("hm_basis", []))
    roots = []
    for r in doc["roots"]:
        if not isinstance(r, dict) or "values_on_a_basis" not in r or "space" not in r:
            raise SchemaError("each root needs 'values_on_a_basis' and 'space'")
        values = _vector_from_json(r["values_on_a_basis"], len(a_basis))
        space = tuple(_vector_from_json(v, dim) for v in r["space"])
        if not space:
            raise SchemaError("root space must be nonempty")
        roots.append(RestrictedRoot(values, space))
    positive = tuple(doc["positive"])
    datum = RestrictedRootDatum(
        a_basis=a_basis, hm_basis=hm_basis, roots=tuple(roots), positive=positive)
    report = validate_datum(alg, cd, datum)
    if not report.ok:
        bad = report.first_failure
        raise ValidationFailure(bad.name, bad.detail)
    return datum


def read_json(path: str) -> dict:
    """Load a JSON document from a file, or from stdin when path is '-'."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON in {path}: {exc}") from exc


def write_json(path: str, doc: dict) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
