"""Strongly regular graphs: verification, spectra, complements.

A k-regular graph is strongly regular when every adjacent pair has the
same number of common neighbors (lambda) and every non-adjacent pair has
the same number (mu). Equivalently A^2 = (lambda - mu) A + (k - mu) I
+ mu J, which pins the whole spectrum down to closed forms. Paley graphs
(quadratic residues mod a prime q = 1 mod 4) are the package's stock
family; they satisfy mu = k/2, which is what the frame conversions need.

Run:  python demos/03_strongly_regular_graphs.py
"""

import numpy as np

from etfkit import (
    check_parameter_relation,
    complement,
    complement_params,
    deviation,
    is_etf_eligible,
    paley,
    spectrum,
    verify_srg,
)
from etfkit.errors import NotStronglyRegular
from etfkit.graphs import AdjacencyMatrix

for q in (5, 13, 17, 29):
    graph = paley(q)
    params = verify_srg(graph)
    spec = spectrum(params)
    print(
        f"paley({q:2d}): SRG({params.v},{params.k},{params.lam},{params.mu})"
        f"  relation={check_parameter_relation(params)}"
        f"  eligible={is_etf_eligible(params)}"
        f"  spectrum: {params.k}, "
        f"{spec.gamma_plus:+.4f} x{spec.mult_plus}, "
        f"{spec.gamma_minus:+.4f} x{spec.mult_minus}"
    )

# The closed-form spectrum is the honest one: compare against numpy.
graph = paley(13)
params = verify_srg(graph)
spec = spectrum(params)
numeric = np.sort(np.linalg.eigvalsh(graph.data.astype(float)))[::-1]
closed = np.sort(
    np.concatenate(
        [[float(params.k)],
         np.full(spec.mult_plus, spec.gamma_plus),
         np.full(spec.mult_minus, spec.gamma_minus)]
    )
)[::-1]
print(f"\npaley(13) spectrum vs numpy: max |diff| = "
      f"{np.max(np.abs(closed - numeric)):.2e}")

# Complements: parameters transform in closed form and the deviation
# v - 2k - 1 flips sign.
comp = complement(graph)
print(f"\ncomplement of paley(13): {verify_srg(comp)}")
print(f"matches complement_params: {verify_srg(comp) == complement_params(params)}")
print(f"deviation: {deviation(params)} -> {deviation(complement_params(params))}")

# Regularity alone is not enough: the 6-cycle is 2-regular but its
# non-adjacent pairs disagree on common neighbors.
cycle6 = np.zeros((6, 6), dtype=int)
for i in range(6):
    cycle6[i, (i + 1) % 6] = cycle6[(i + 1) % 6, i] = 1
try:
    verify_srg(AdjacencyMatrix(cycle6))
except NotStronglyRegular as exc:
    print(f"\n6-cycle rejected: {exc}")
