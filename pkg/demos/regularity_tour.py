"""A short tour: decompose elements of sl(3), generate subalgebras, and
read off the exact regularity certificate.

Run:  python3 demos/regularity_tour.py
"""

from kregular import (
    catalog_build,
    decompose,
    generated_subalgebra,
    gram_matrix,
    is_k_regular,
)
from kregular.scalar import Scalar

alg, cd = catalog_build("split-sl", 3)
print(f"algebra {alg.name}: dim g = {alg.dim}, "
      f"dim k = {cd.dim_k}, dim p = {cd.dim_p}")
print(f"basis: {', '.join(alg.basis_labels)}")
print()

samples = {
    "a generic integer element": tuple(Scalar(k % 3 - 1, (2 * k) % 3 - 1)
                                       for k in range(8)),
    "a single root vector E12": alg.basis_vector(2),
    "a Cartan element H1": alg.basis_vector(0),
}

for label, z in samples.items():
    ez = decompose(cd, z)
    rep = generated_subalgebra(alg, cd, z)
    cert = is_k_regular(alg, cd, z)
    print(f"{label}:")
    print(f"  z = ({', '.join(str(c) for c in z)})")
    print(f"  x = ({', '.join(str(c) for c in ez.x)})")
    print(f"  y = ({', '.join(str(c) for c in ez.y)})")
    print(f"  filtration dims {rep.per_degree_dims} -> dim g(z) = {rep.dim}, "
          f"stabilized at step {rep.stabilization_degree}")
    print(f"  Gram ({cert.mode} mode, {cert.gram.rows}x{cert.gram.cols}) "
          f"rank {cert.rank} of {cert.dim_g} -> verdict: {cert.verdict}")
    if cert.verdict == "k-regular":
        print(f"  nonsingular minor at rows {cert.witnesses['minor_rows']}, "
              f"cols {cert.witnesses['minor_cols']}")
    print()

print("reduced mode pairs only the filtration's spanning vectors; the rank")
print("is provably the same because both vector sets span g(z):")
z = samples["a generic integer element"]
full = gram_matrix(alg, cd, z, mode="full")
reduced = gram_matrix(alg, cd, z, mode="reduced")
print(f"  full {full.gram.rows}x{full.gram.cols} rank {full.rank}, "
      f"reduced {reduced.gram.rows}x{reduced.gram.cols} rank {reduced.rank}")
