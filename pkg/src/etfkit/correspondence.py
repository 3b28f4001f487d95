"""The frame <-> graph dictionary.

An n-vector real ETF, switched so the first vector has positive inner
product with all others, strips to a strongly regular graph on v = n - 1
vertices with mu = k/2. Conversely, any SRG with mu = k/2 assembles into
an ETF Gram matrix, and the frame dimension m is determined by (v, k)
in closed form. Both directions, the parameter bijection, and the second
(negative-root) Gram are implemented here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BetaZero,
    GramVerificationError,
    InternalInconsistency,
    NonIntegralDegree,
    NonIntegralDimension,
    NotAnEtf,
    NotAnSrg,
    NotEligible,
    OddDegree,
    SrgVerificationError,
)
from .frames import DEFAULT_TOL, gram, sign_normalize, verify_etf_gram
from .graphs import AdjacencyMatrix, SrgParams, verify_srg
from .linalg import SymMatrix

__all__ = [
    "EtfShape",
    "ConversionReport",
    "etf_params_to_srg_params",
    "srg_params_to_etf_params",
    "is_etf_eligible",
    "etf_to_srg",
    "srg_to_etf_gram",
    "srg_to_etf_gram_minus",
]

INTEGRALITY_TOL = 1e-6


@dataclass(frozen=True)
class EtfShape:
    """Frame dimensions: n unit vectors in dimension m, with m < n."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.m < self.n:
            raise ValueError(f"need 1 <= m < n, got m={self.m}, n={self.n}")


@dataclass(frozen=True, eq=False)
class ConversionReport:
    """What a conversion measured: frame shape, graph parameters, the
    off-diagonal value beta (signed; negative for the minus-root Gram),
    the tight-frame constant alpha, and the switching pattern used."""

    shape: EtfShape
    params: SrgParams
    beta: float
    alpha: float
    signs: np.ndarray

    def __post_init__(self) -> None:
        if self.params.v != self.shape.n - 1:
            raise ValueError(
                f"v={self.params.v} does not match n-1={self.shape.n - 1}"
            )
        if abs(self.alpha - (self.params.v * self.beta**2 + 1.0)) > 1e-9:
            raise ValueError("alpha != v beta^2 + 1")


def etf_params_to_srg_params(shape: EtfShape) -> SrgParams:
    """Graph parameters implied by frame dimensions (m, n).

    v = n - 1, the degree is
    k = n/2 - 1 + (n/(2m) - 1) sqrt(m(n-1)/(n-m)), mu = k/2, and
    lambda = (3k - v - 1)/2. k must round to a nonnegative even integer
    and lambda to a nonnegative integer, else no real ETF of this shape
    exists and the corresponding error is raised.
    """
    m, n = shape.m, shape.n
    v = n - 1
    k_real = 0.5 * n - 1.0 + (n / (2.0 * m) - 1.0) * math.sqrt(m * (n - 1) / (n - m))
    k = round(k_real)
    if abs(k_real - k) > INTEGRALITY_TOL or k < 0:
        raise NonIntegralDegree(f"degree {k_real!r} for shape ({m},{n})")
    k = int(k)
    if k == 0:
        # Simplex case: the graph is empty, so lambda is unconstrained.
        return SrgParams(v, 0, 0, 0, lam_vacuous=True, mu_vacuous=(v == 1))
    if k % 2:
        raise OddDegree(f"degree {k} is odd, so mu = k/2 is not integral")
    lam_twice = 3 * k - v - 1
    if lam_twice % 2 or lam_twice < 0:
        raise NonIntegralDegree(
            f"lambda = {lam_twice}/2 for shape ({m},{n}) is not a "
            "nonnegative integer"
        )
    return SrgParams(v, k, lam_twice // 2, k // 2)


def srg_params_to_etf_params(v: int, k: int) -> EtfShape:
    """Frame dimensions implied by graph parameters (v, k).

    n = v + 1 and m = (v+1)/2 * (1 + delta/sqrt(delta^2 + 4v)) with
    delta = v - 2k - 1; m must round to an integer.
    """
    if v < 1:
        raise ValueError(f"v={v} must be positive")
    if not 0 <= k <= v - 1:
        raise ValueError(f"degree k={k} outside 0..v-1={v - 1}")
    m_real = _dimension_from_graph(v, k, +1)
    m = round(m_real)
    if abs(m_real - m) > INTEGRALITY_TOL:
        raise NonIntegralDimension(f"dimension {m_real!r} for (v,k)=({v},{k})")
    return EtfShape(int(m), v + 1)


def is_etf_eligible(p: SrgParams) -> bool:
    """Whether the graph corresponds to a real ETF: mu = k/2 exactly.

    A vacuous mu (complete graph) imposes no constraint, so such graphs
    are eligible only in the degenerate k = 0 case.
    """
    if p.mu_vacuous:
        return p.k == 0
    return 2 * p.mu == p.k


def etf_to_srg(phi, tol: float = DEFAULT_TOL) -> tuple[AdjacencyMatrix, ConversionReport]:
    """Convert an ETF synthesis matrix to its strongly regular graph.

    Verifies the Gram matrix, switches signs so the first row is +beta,
    maps entries through A = G/(2 beta) - (beta+1)/(2 beta) I + J/2, and
    strips the first vertex. The stripped graph is re-verified by exact
    integer counting and its parameters checked against the closed forms;
    any mismatch raises InternalInconsistency rather than returning a
    silently misclassified graph.
    """
    g = gram(phi)
    try:
        summary = verify_etf_gram(g, tol)
    except GramVerificationError as exc:
        raise NotAnEtf(str(exc)) from exc
    if summary.m == summary.n:
        raise BetaZero("m == n: orthonormal bases have no graph counterpart")

    normalized, signs = sign_normalize(g, summary)
    beta = summary.beta
    n = summary.n
    a_float = (
        normalized.data / (2.0 * beta)
        - ((beta + 1.0) / (2.0 * beta)) * np.eye(n)
        + 0.5 * np.ones((n, n))
    )
    a_int = np.rint(a_float).astype(np.int64)
    if np.max(np.abs(a_float - a_int)) > 0.25:
        raise InternalInconsistency("entries do not classify cleanly as 0/1")
    if np.any(a_int[0, 1:] != 1) or np.any(a_int[1:, 0] != 1):
        raise InternalInconsistency("first vertex is not adjacent to all others")

    try:
        b = AdjacencyMatrix(a_int[1:, 1:])
        params = verify_srg(b)
    except (ValueError, SrgVerificationError) as exc:
        raise InternalInconsistency(f"stripped graph is not an SRG: {exc}") from exc

    try:
        expected = etf_params_to_srg_params(EtfShape(summary.m, n))
    except (NonIntegralDegree, OddDegree) as exc:
        raise InternalInconsistency(str(exc)) from exc
    if params != expected:
        raise InternalInconsistency(
            f"measured parameters {params} != closed-form {expected}"
        )

    report = ConversionReport(
        shape=EtfShape(summary.m, n),
        params=params,
        beta=beta,
        alpha=summary.alpha,
        signs=signs,
    )
    return b, report


def srg_to_etf_gram(b, tol: float = DEFAULT_TOL) -> tuple[SymMatrix, ConversionReport]:
    """Assemble the ETF Gram matrix of an eligible SRG (positive root).

    beta is the positive root of v beta^2 + (v - 2k - 1) beta - 1 = 0,
    which equals the Welch bound of the resulting (m, v+1) frame.
    """
    return _srg_to_etf(b, +1, tol)


def srg_to_etf_gram_minus(b, tol: float = DEFAULT_TOL) -> tuple[SymMatrix, ConversionReport]:
    """Same as `srg_to_etf_gram` but with the negative root.

    The resulting dimension m' satisfies m + m' = v + 1: this Gram is the
    Naimark complement of the positive-root one. For deviation zero the
    dimension repeats and only the off-diagonal signs flip.
    """
    return _srg_to_etf(b, -1, tol)


def _srg_to_etf(b, root_sign: int, tol: float) -> tuple[SymMatrix, ConversionReport]:
    try:
        params = verify_srg(b)
    except SrgVerificationError as exc:
        raise NotAnSrg(str(exc)) from exc
    if not is_etf_eligible(params):
        raise NotEligible(f"mu = {params.mu} != k/2 = {params.k}/2")

    v, k = params.v, params.k
    delta = v - 2 * k - 1
    root = math.sqrt(delta * delta + 4 * v)
    beta = (-delta + root_sign * root) / (2.0 * v)

    adj = b if isinstance(b, AdjacencyMatrix) else AdjacencyMatrix(b)
    g = _assemble_gram(adj, beta)
    summary = verify_etf_gram(g, tol)

    n = v + 1
    m_real = _dimension_from_graph(v, k, root_sign)
    m = round(m_real)
    if abs(m_real - m) > INTEGRALITY_TOL or summary.m != m:
        raise InternalInconsistency(
            f"rank {summary.m} does not match closed-form dimension {m_real!r}"
        )

    report = ConversionReport(
        shape=EtfShape(int(m), n),
        params=params,
        beta=beta,
        alpha=summary.alpha,
        signs=np.ones(n, dtype=np.int64),
    )
    return g, report


def _assemble_gram(b: AdjacencyMatrix, beta: float) -> SymMatrix:
    v = b.v
    lower = (
        2.0 * beta * b.data
        + (beta + 1.0) * np.eye(v)
        - beta * np.ones((v, v))
    )
    g = np.empty((v + 1, v + 1))
    g[0, 0] = 1.0
    g[0, 1:] = beta
    g[1:, 0] = beta
    g[1:, 1:] = lower
    return SymMatrix(g)


def _dimension_from_graph(v: int, k: int, root_sign: int) -> float:
    delta = v - 2 * k - 1
    return 0.5 * (v + 1) * (1.0 + root_sign * delta / math.sqrt(delta * delta + 4 * v))
