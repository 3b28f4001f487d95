"""The two-way dictionary between frames and graphs, on real instances.

Direction one: switch an n-vector ETF so vector 1 points "toward"
everything, map Gram entries +beta -> edge and -beta -> non-edge, drop
vertex 1, and an SRG on n - 1 vertices with mu = k/2 appears. Direction
two: from any such graph, one scalar beta (a quadratic root) rebuilds an
ETF Gram, and the frame dimension m is forced. The negative root gives
the complementary frame, so the two dimensions sum to n.

Run:  python demos/04_frame_graph_dictionary.py
"""

import numpy as np

from etfkit import (
    etf_to_srg,
    fano_plane,
    fixture_6x16,
    paley,
    steiner_etf,
    srg_to_etf_gram,
    srg_to_etf_gram_minus,
    synthesize_from_gram,
    verify_srg,
)

print("frame -> graph")
for label, phi in (
    ("6x16 packing", fixture_6x16()),
    ("7x28 from the 7-point plane design", steiner_etf(fano_plane())),
):
    graph, report = etf_to_srg(phi)
    p = report.params
    print(f"  {label}: SRG({p.v},{p.k},{p.lam},{p.mu}),"
          f" beta={report.beta:.6f}, switched "
          f"{int(np.sum(report.signs == -1))} of {report.shape.n} vectors")

print("\ngraph -> frame -> graph (exact round trips)")
for q in (5, 13, 17, 29):
    graph = paley(q)
    g, report = srg_to_etf_gram(graph)
    phi = synthesize_from_gram(g)
    back, _ = etf_to_srg(phi)
    print(f"  paley({q:2d}) -> {report.shape.m}x{report.shape.n} frame"
          f" (beta = {report.beta:.6f} = 1/sqrt({q}))"
          f" -> same graph: {back == graph}")

print("\nboth roots of the defining quadratic")
fixture_graph, _ = etf_to_srg(fixture_6x16())
params = verify_srg(fixture_graph)
g_plus, plus = srg_to_etf_gram(fixture_graph)
g_minus, minus = srg_to_etf_gram_minus(fixture_graph)
n = params.v + 1
print(f"  SRG({params.v},{params.k},{params.lam},{params.mu}):"
      f" beta+ = {plus.beta:+.4f} -> m = {plus.shape.m},"
      f" beta- = {minus.beta:+.4f} -> m' = {minus.shape.m},"
      f" m + m' = {plus.shape.m + minus.shape.m} = n = {n}")
mixed = (plus.shape.m / n) * g_plus.data + (minus.shape.m / n) * g_minus.data
print(f"  weighted sum of the two Grams is the identity:"
      f" max |.| = {np.max(np.abs(mixed - np.eye(n))):.2e}")
