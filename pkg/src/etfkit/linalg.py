"""Dense symmetric-matrix kernel: storage, eigendecomposition, norms.

Everything downstream (frame verification, graph spectra, conversions)
runs through the two operations here. The eigensolver is a cyclic Jacobi
iteration: all matrices in this package are small, dense, and symmetric,
and Jacobi delivers an orthonormal eigenvector matrix for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["SymMatrix", "EigenPair", "sym_eigen", "frobenius_distance"]

# Jacobi stops once the off-diagonal Frobenius norm falls below this
# fraction of the input's Frobenius norm.
OFF_DIAGONAL_STOP = 1e-12
_MAX_SWEEPS = 60


class SymMatrix:
    """Square real matrix with entries(i, j) == entries(j, i) exactly.

    The constructor rejects anything that is not bitwise symmetric; use
    :meth:`symmetrized` for arrays that are symmetric only up to rounding
    (matrix products, for instance). The stored array is read-only.
    """

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        a = np.array(data, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise ValueError("matrix size must be >= 1")
        if not np.array_equal(a, a.T):
            raise ValueError(
                "matrix is not exactly symmetric; use SymMatrix.symmetrized"
            )
        a.setflags(write=False)
        self.data = a

    @classmethod
    def symmetrized(cls, data, atol: float = 1e-9) -> "SymMatrix":
        """Build from a nearly symmetric array by averaging with its transpose.

        0.5*(a + a.T) is exactly symmetric in floating point, so the result
        always satisfies the constructor's invariant.
        """
        a = np.asarray(data, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        skew = float(np.max(np.abs(a - a.T)))
        if skew > atol:
            raise ValueError(f"asymmetry {skew:.3e} exceeds atol {atol:.3e}")
        return cls(0.5 * (a + a.T))

    @property
    def size(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, index):
        return self.data[index]

    def __repr__(self) -> str:
        return f"SymMatrix(size={self.size})"


def as_sym(matrix) -> SymMatrix:
    """Coerce a SymMatrix or exactly symmetric array to SymMatrix."""
    if isinstance(matrix, SymMatrix):
        return matrix
    return SymMatrix(matrix)


@dataclass(frozen=True)
class EigenPair:
    """Spectral decomposition: eigenvalues descending, eigenvectors as the
    columns of an orthogonal matrix aligned with them."""

    values: np.ndarray
    vectors: np.ndarray


def sym_eigen(matrix) -> EigenPair:
    """Full spectral decomposition of a symmetric matrix by cyclic Jacobi.

    Sweeps rotate every upper-triangle pivot in turn until the off-diagonal
    Frobenius norm drops below OFF_DIAGONAL_STOP times the input norm.
    Eigenvalues are returned in descending order; the eigenvector columns
    are orthonormal to machine precision.
    """
    s = as_sym(matrix)
    a = np.array(s.data, dtype=float)
    n = a.shape[0]
    vecs = np.eye(n)
    if n > 1:
        stop = OFF_DIAGONAL_STOP * math.sqrt(float(np.sum(a * a)))
        # Pivots below this contribute at most stop/2 to the off-norm even
        # if every off-diagonal entry sits right at the threshold.
        negligible = stop / (2.0 * n)
        for _ in range(_MAX_SWEEPS):
            if _off_norm(a) <= stop:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    if abs(a[p, q]) > negligible:
                        _rotate(a, vecs, p, q)
        else:
            raise RuntimeError("Jacobi iteration failed to converge")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenPair(values=values[order], vectors=vecs[:, order])


def _off_norm(a: np.ndarray) -> float:
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(float(np.sum(off * off)))


def _rotate(a: np.ndarray, vecs: np.ndarray, p: int, q: int) -> None:
    """One Jacobi rotation zeroing a[p, q], applied two-sided in place."""
    apq = a[p, q]
    if apq == 0.0:
        return
    app, aqq = a[p, p], a[q, q]
    diff = aqq - app
    if abs(apq) < abs(diff) * 1e-36:
        t = apq / diff
    else:
        tau = diff / (2.0 * apq)
        if tau >= 0.0:
            t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
        else:
            t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    sn = t * c

    rp = a[p, :].copy()
    rq = a[q, :].copy()
    a[p, :] = c * rp - sn * rq
    a[q, :] = sn * rp + c * rq
    cp = a[:, p].copy()
    cq = a[:, q].copy()
    a[:, p] = c * cp - sn * cq
    a[:, q] = sn * cp + c * cq
    # Analytic values for the pivot block kill accumulated round-off.
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = 0.0
    a[q, p] = 0.0

    vp = vecs[:, p].copy()
    vq = vecs[:, q].copy()
    vecs[:, p] = c * vp - sn * vq
    vecs[:, q] = sn * vp + c * vq


def frobenius_distance(a, b) -> float:
    """Frobenius norm of the difference of two symmetric matrices."""
    sa, sb = as_sym(a), as_sym(b)
    if sa.size != sb.size:
        raise ValueError(f"size mismatch: {sa.size} vs {sb.size}")
    d = sa.data - sb.data
    return math.sqrt(float(np.sum(d * d)))
