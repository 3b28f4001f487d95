"""Parameter arithmetic without any matrices.

The dimension pair (m, n) of a frame and the pair (v, k) of its graph
determine each other in closed form, over the reals, not just integers.
This demo scans small graph parameters for frame-compatible ones and
shows where the integrality gates say "no such frame".

Run:  python demos/05_parameter_arithmetic.py
"""

from etfkit import (
    EtfShape,
    etf_params_to_srg_params,
    srg_params_to_etf_params,
    welch_bound,
)
from etfkit.errors import NonIntegralDegree, NonIntegralDimension, OddDegree

print("shape (m, n) -> graph (v, k, lambda, mu)")
for m, n in ((3, 6), (6, 16), (7, 28), (5, 6), (7, 14), (15, 36)):
    try:
        p = etf_params_to_srg_params(EtfShape(m, n))
        lam = "free" if p.lam_vacuous else p.lam
        print(f"  ({m:2d},{n:2d}) -> ({p.v},{p.k},{lam},{p.mu})"
              f"   beta = {welch_bound(m, n):.6f}")
    except (NonIntegralDegree, OddDegree) as exc:
        print(f"  ({m:2d},{n:2d}) -> no graph: {type(exc).__name__}")

print("\ngraph (v, k) -> shape (m, n)")
for v, k in ((27, 16), (13, 6), (15, 8), (10, 3), (5, 2)):
    try:
        shape = srg_params_to_etf_params(v, k)
        print(f"  ({v:2d},{k:2d}) -> ({shape.m},{shape.n})")
    except NonIntegralDimension:
        print(f"  ({v:2d},{k:2d}) -> no frame: dimension is not an integer")

print("\nround-trip scan over v <= 40 (integral shapes only)")
found = []
for v in range(1, 41):
    for k in range(0, v):
        try:
            shape = srg_params_to_etf_params(v, k)
            params = etf_params_to_srg_params(shape)
        except Exception:
            continue
        assert (params.v, params.k) == (v, k)
        found.append((v, k, shape.m, shape.n))
print(f"  {len(found)} parameter pairs survive both gates; first few:")
for v, k, m, n in found[:10]:
    print(f"    (v,k) = ({v:2d},{k:2d})  <->  (m,n) = ({m:2d},{n:2d})")
