"""Brute-force oracles shared by the tests.

These deliberately avoid the library's own verified code paths: graph
parameters are counted with python sets, and reference spectra come from
numpy's eigensolver.
"""

from __future__ import annotations

import numpy as np


def brute_srg_params(adj: np.ndarray):
    """Count common neighbors pair by pair with python sets.

    Returns (v, k, lam, mu) with None for an empty class, or None if the
    graph is not strongly regular.
    """
    a = np.asarray(adj)
    v = a.shape[0]
    nbrs = [set(np.flatnonzero(a[i]).tolist()) for i in range(v)]
    degrees = {len(nbrs[i]) for i in range(v)}
    if len(degrees) != 1:
        return None
    k = degrees.pop()
    lams: set[int] = set()
    mus: set[int] = set()
    for i in range(v):
        for j in range(i + 1, v):
            common = len(nbrs[i] & nbrs[j])
            (lams if a[i, j] else mus).add(common)
    if len(lams) > 1 or len(mus) > 1:
        return None
    lam = lams.pop() if lams else None
    mu = mus.pop() if mus else None
    return v, k, lam, mu


def record_to_dict(text: str) -> dict[str, str]:
    """Parse `key = value` lines emitted by the CLI into a dict."""
    out: dict[str, str] = {}
    for line in text.splitlines():
        if "=" in line:
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out
