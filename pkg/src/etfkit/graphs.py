"""Graph-side core: adjacency matrices, strong-regularity verification,
parameter arithmetic, spectra, complements, and the deviation.

Strong regularity is a discrete property, so `verify_srg` works entirely
in integer arithmetic: A^2(i, j) counts two-step paths, and the counts
must be constant on the diagonal (k), over adjacent pairs (lambda), and
over non-adjacent pairs (mu).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateDiscriminant,
    NegativeParameter,
    NonIntegralMultiplicity,
    NotRegular,
    NotStronglyRegular,
)

__all__ = [
    "AdjacencyMatrix",
    "SrgParams",
    "SrgSpectrum",
    "verify_srg",
    "check_parameter_relation",
    "spectrum",
    "complement",
    "complement_params",
    "deviation",
]

MULTIPLICITY_TOL = 1e-6


class AdjacencyMatrix:
    """Simple-graph adjacency matrix: symmetric 0/1 with zero diagonal.

    Entries are stored as a read-only int64 array; equality is exact
    entrywise comparison.
    """

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        raw = np.asarray(data)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {raw.shape}")
        if raw.shape[0] < 1:
            raise ValueError("graph must have at least one vertex")
        if not np.isin(raw, (0, 1)).all():
            raise ValueError("adjacency entries must be 0 or 1")
        a = raw.astype(np.int64)
        if np.any(np.diag(a) != 0):
            raise ValueError("diagonal must be zero (no loops)")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        a.setflags(write=False)
        self.data = a

    @property
    def v(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, index):
        return self.data[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return np.array_equal(self.data, other.data)

    def __repr__(self) -> str:
        edges = int(np.sum(self.data)) // 2
        return f"AdjacencyMatrix(v={self.v}, edges={edges})"


@dataclass(frozen=True, eq=False)
class SrgParams:
    """Parameter tuple (v, k, lambda, mu) of a strongly regular graph.

    `lam_vacuous` marks that no adjacent pair exists (empty graph) and
    `mu_vacuous` that no non-adjacent pair exists (complete graph); a
    flagged value is unconstrained and ignored by equality. The quadratic
    relation k(k - lambda - 1) = (v - k - 1) mu is *not* enforced here;
    use `check_parameter_relation`.
    """

    v: int
    k: int
    lam: int
    mu: int
    lam_vacuous: bool = False
    mu_vacuous: bool = False

    def __post_init__(self) -> None:
        if self.v < 1:
            raise ValueError(f"v={self.v} must be positive")
        if not 0 <= self.k <= self.v - 1:
            raise ValueError(f"degree k={self.k} outside 0..v-1={self.v - 1}")
        if self.lam < 0 and not self.lam_vacuous:
            raise ValueError(f"lambda={self.lam} negative")
        if self.mu < 0 and not self.mu_vacuous:
            raise ValueError(f"mu={self.mu} negative")

    @property
    def deviation(self) -> int:
        return self.v - 2 * self.k - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, SrgParams):
            return NotImplemented
        if (self.v, self.k) != (other.v, other.k):
            return False
        if (self.lam_vacuous, self.mu_vacuous) != (other.lam_vacuous, other.mu_vacuous):
            return False
        if not self.lam_vacuous and self.lam != other.lam:
            return False
        if not self.mu_vacuous and self.mu != other.mu:
            return False
        return True


@dataclass(frozen=True)
class SrgSpectrum:
    """Adjacency spectrum {k (once), gamma_plus x mult_plus, gamma_minus
    x mult_minus} of a strongly regular graph."""

    k: int
    gamma_plus: float
    gamma_minus: float
    mult_plus: int
    mult_minus: int

    def __post_init__(self) -> None:
        if self.mult_plus < 0 or self.mult_minus < 0:
            raise ValueError("multiplicities must be nonnegative")
        trace = self.k + self.mult_plus * self.gamma_plus + self.mult_minus * self.gamma_minus
        if abs(trace) > 1e-9:
            raise ValueError(f"trace {trace!r} != 0")

    @property
    def v(self) -> int:
        return 1 + self.mult_plus + self.mult_minus


def verify_srg(a: AdjacencyMatrix) -> SrgParams:
    """Verify strong regularity by exact two-step path counting.

    Computes A^2 in integer arithmetic and demands a constant diagonal,
    a constant value over adjacent pairs, and a constant value over
    non-adjacent pairs. Empty classes set the corresponding vacuous flag
    and store 0.
    """
    adj = _as_adjacency(a)
    m = adj.data
    v = adj.v
    sq = m @ m

    deg = np.diag(sq)
    if np.any(deg != deg[0]):
        j = int(np.argmax(deg != deg[0]))
        raise NotRegular(
            f"vertex {j} has degree {int(deg[j])} but vertex 0 has {int(deg[0])}",
            witness=(0, j),
        )
    k = int(deg[0])

    upper = np.triu(np.ones((v, v), dtype=bool), 1)
    lam, lam_vacuous = _class_constant(sq, (m == 1) & upper, "adjacent")
    mu, mu_vacuous = _class_constant(sq, (m == 0) & upper, "non-adjacent")
    return SrgParams(v, k, lam, mu, lam_vacuous, mu_vacuous)


def _class_constant(sq: np.ndarray, mask: np.ndarray, kind: str) -> tuple[int, bool]:
    pairs = np.argwhere(mask)
    if pairs.shape[0] == 0:
        return 0, True
    vals = sq[pairs[:, 0], pairs[:, 1]]
    ref = int(vals[0])
    bad = vals != ref
    if np.any(bad):
        i, j = (int(x) for x in pairs[int(np.argmax(bad))])
        raise NotStronglyRegular(
            f"{kind} pair ({i},{j}) has {int(sq[i, j])} common neighbors, "
            f"but pair ({int(pairs[0, 0])},{int(pairs[0, 1])}) has {ref}",
            witness=(i, j),
        )
    return ref, False


def check_parameter_relation(p: SrgParams) -> bool:
    """Whether k(k - lambda - 1) = (v - k - 1) mu holds exactly."""
    return p.k * (p.k - p.lam - 1) == (p.v - p.k - 1) * p.mu


def spectrum(p: SrgParams) -> SrgSpectrum:
    """Closed-form eigenvalues and multiplicities from the parameters.

    The non-degree eigenvalues are the roots of
    gamma^2 - (lambda - mu) gamma - (k - mu); multiplicities come from the
    zero-trace condition and must round to integers.
    """
    diff = p.lam - p.mu
    disc = diff * diff + 4 * (p.k - p.mu)
    if disc <= 0:
        raise DegenerateDiscriminant(
            f"(lambda-mu)^2 + 4(k-mu) = {disc} is not positive"
        )
    root = math.sqrt(disc)
    gamma_plus = 0.5 * (diff + root)
    gamma_minus = 0.5 * (diff - root)
    numer = 2 * p.k + (p.v - 1) * diff
    mult_plus = 0.5 * ((p.v - 1) - numer / root)
    mult_minus = 0.5 * ((p.v - 1) + numer / root)
    mults = []
    for value in (mult_plus, mult_minus):
        nearest = round(value)
        if abs(value - nearest) > MULTIPLICITY_TOL:
            raise NonIntegralMultiplicity(
                f"multiplicity {value!r} is not an integer"
            )
        mults.append(int(nearest))
    return SrgSpectrum(
        k=p.k,
        gamma_plus=gamma_plus,
        gamma_minus=gamma_minus,
        mult_plus=mults[0],
        mult_minus=mults[1],
    )


def complement(a: AdjacencyMatrix) -> AdjacencyMatrix:
    """Complement graph: disconnect neighbors, connect non-neighbors."""
    adj = _as_adjacency(a)
    v = adj.v
    comp = np.ones((v, v), dtype=np.int64) - adj.data - np.eye(v, dtype=np.int64)
    return AdjacencyMatrix(comp)


def complement_params(p: SrgParams) -> SrgParams:
    """Parameters of the complement graph.

    (v, k, lambda, mu) maps to (v, v-k-1, v-2k+mu-2, v-2k+lambda); the
    vacuous flags swap roles (empty <-> complete). Formula values are
    stored verbatim even under a vacuous flag.
    """
    k_c = p.v - p.k - 1
    lam_c = p.v - 2 * p.k + p.mu - 2
    mu_c = p.v - 2 * p.k + p.lam
    lam_c_vacuous = p.mu_vacuous
    mu_c_vacuous = p.lam_vacuous
    if lam_c < 0 and not lam_c_vacuous:
        raise NegativeParameter(f"complement lambda = {lam_c} is negative")
    if mu_c < 0 and not mu_c_vacuous:
        raise NegativeParameter(f"complement mu = {mu_c} is negative")
    return SrgParams(p.v, k_c, lam_c, mu_c, lam_c_vacuous, mu_c_vacuous)


def deviation(p: SrgParams) -> int:
    """The deviation v - 2k - 1; graph complement negates it."""
    return p.deviation


def _as_adjacency(a) -> AdjacencyMatrix:
    if isinstance(a, AdjacencyMatrix):
        return a
    return AdjacencyMatrix(a)
