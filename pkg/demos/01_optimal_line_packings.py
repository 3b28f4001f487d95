"""Tour of the frame-side basics on the built-in 6x16 packing.

Sixteen unit vectors in R^6 can never be orthogonal, so the interesting
question is how small their worst pairwise inner product (the coherence)
can get. The Welch bound answers that, and the built-in 6x16 matrix
attains it: an optimal packing of 16 lines in six dimensions.

Run:  python demos/01_optimal_line_packings.py
"""

import numpy as np

from etfkit import (
    coherence,
    fixture_6x16,
    gram,
    switch,
    tightness_defect,
    verify_etf_gram,
    welch_bound,
)

phi = fixture_6x16()
m, n = phi.shape
print(f"synthesis matrix: {m} x {n}, entries in {{0, +-1/sqrt(3)}}")
print(f"column norms:     {np.sqrt(np.sum(phi * phi, axis=0)).round(12)}")

bound = welch_bound(m, n)
print(f"\nwelch_bound({m}, {n})   = {bound}")
print(f"coherence(phi)      = {coherence(phi)}")
print(f"tightness_defect    = {tightness_defect(phi):.3e}  (0 => tight frame)")

# Random unit-norm frames obey the bound but do not attain it.
rng = np.random.default_rng(0)
random_phi = rng.normal(size=(m, n))
random_phi /= np.sqrt(np.sum(random_phi * random_phi, axis=0))
print(f"\nrandom frame coherence   = {coherence(random_phi):.6f}  (>= {bound:.6f})")
print(f"random tightness defect  = {tightness_defect(random_phi):.6f}")

# The Gram matrix tells the whole story: unit diagonal, off-diagonal
# entries all +-1/3, and G^2 = alpha G.
g = gram(phi)
summary = verify_etf_gram(g)
print(f"\nverified Gram summary: n={summary.n} m={summary.m} "
      f"alpha={summary.alpha:.6f} beta={summary.beta:.6f}")
print(f"off-diagonal values: {sorted({float(x) for x in np.round(g.data[0, 1:], 12)})}")

# Negating vectors (switching) changes the Gram's sign pattern but not
# any of the packing quality measures.
signs = rng.choice([-1, 1], size=n)
switched = switch(phi, signs)
print(f"\nafter a random switch: coherence = {coherence(switched)}")
print(f"summary unchanged:     {verify_etf_gram(gram(switched)) == summary}")
