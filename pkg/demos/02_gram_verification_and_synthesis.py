"""Gram matrices as certificates: verify, factor, and complement.

A symmetric matrix is the Gram matrix of an equiangular tight frame
exactly when it has unit diagonal, one common off-diagonal modulus, and
satisfies G^2 = alpha G. That characterization is checkable, and once a
matrix passes, actual frame vectors can be synthesized from its top
eigenspace. Every (m, n) frame also has an (n-m, n) partner whose Gram
is a closed-form affine image of the original.

Run:  python demos/02_gram_verification_and_synthesis.py
"""

import numpy as np

from etfkit import (
    EtfkitError,
    coherence,
    gram,
    naimark_complement_gram,
    synthesize_from_gram,
    verify_etf_gram,
    welch_bound,
)
from etfkit.linalg import SymMatrix

# A 3x3 Gram with off-diagonal -1/2: three unit vectors at 120 degrees.
g = np.full((3, 3), -0.5)
np.fill_diagonal(g, 1.0)
simplex = SymMatrix(g)
summary = verify_etf_gram(simplex)
print(f"simplex Gram: n={summary.n} m={summary.m} alpha={summary.alpha} "
      f"beta={summary.beta}")

phi = synthesize_from_gram(simplex)
print(f"synthesized vectors ({phi.shape[0]} x {phi.shape[1]}):")
print(phi.round(6))
print(f"coherence = {coherence(phi)}  (welch_bound(2,3) = {welch_bound(2, 3)})")
print(f"reconstruction error = {np.max(np.abs(phi.T @ phi - simplex.data)):.2e}")

# Verification is a certificate: breaking any clause is caught by name.
print("\nbroken inputs:")
for label, breakage in (
    ("diagonal entry 1.5", lambda a: a.__setitem__((0, 0), 1.5)),
    ("one modulus 0.9", lambda a: (a.__setitem__((0, 1), 0.9),
                                   a.__setitem__((1, 0), 0.9))),
    ("one sign flipped", lambda a: (a.__setitem__((0, 1), 0.5),
                                    a.__setitem__((1, 0), 0.5))),
):
    bad = np.array(simplex.data)
    breakage(bad)
    try:
        verify_etf_gram(SymMatrix(bad))
        print(f"  {label}: unexpectedly accepted")
    except EtfkitError as exc:
        print(f"  {label}: rejected ({type(exc).__name__})")

# The complementary frame: (n I - m G)/(n - m). For the simplex the
# complement is one-dimensional (all three vectors collapse to +-1).
comp = naimark_complement_gram(simplex, summary)
comp_summary = verify_etf_gram(comp)
print(f"\ncomplement Gram verifies as m={comp_summary.m}, n={comp_summary.n}:")
print(comp.data.round(6))
mixed = (summary.m / summary.n) * simplex.data \
    + ((summary.n - summary.m) / summary.n) * comp.data
print(f"(m/n) G + ((n-m)/n) G~ == I: {np.max(np.abs(mixed - np.eye(3))):.2e}")
