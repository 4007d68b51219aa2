"""Cross-checking the complex star against an independent real-coordinate path.

Run:  python demos/03_real_oracle_cross_check.py
"""

from itertools import combinations

from pqforms import (
    Form,
    HermitianMetric,
    ORACLE_STAR_RATIOS,
    RealForm,
    complexify,
    oracle_compare,
    real_hodge_star,
    realify,
)
from pqforms.dsl import pretty_print

# ---------------------------------------------------------------------------
# realify expands dz = dx + i dy; complexify inverts it exactly
# ---------------------------------------------------------------------------
pair = Form.term(1, (1,), (1,), 1)
print(f"realify(dz1^dzb1) = {realify(pair)!r}")
print(f"round trip back   = {pretty_print(complexify(realify(pair)))}")

# ---------------------------------------------------------------------------
# the Euclidean star on real monomials, orientation dx1^dy1^...
# ---------------------------------------------------------------------------
print("\nEuclidean star at n=1:")
print(f"  star(dx1) = {real_hodge_star(RealForm.term(1, (1,), 1))!r}")
print(f"  star(dy1) = {real_hodge_star(RealForm.term(1, (2,), 1))!r}")

# ---------------------------------------------------------------------------
# engine star vs oracle star: exactly proportional, constant per (n,p,q)
# ---------------------------------------------------------------------------
print("\nengine/oracle ratios (recorded table in ORACLE_STAR_RATIOS):")
for n in (1, 2):
    metric = HermitianMetric.identity(n)
    for p in range(n + 1):
        for q in range(n + 1):
            ratios = set()
            for A in combinations(range(1, n + 1), p):
                for B in combinations(range(1, n + 1), q):
                    report = oracle_compare(Form.term(n, A, B, 1), metric)
                    ratios.add(report.ratio_for(p, q))
            (ratio,) = ratios
            recorded = ORACLE_STAR_RATIOS[(n, p, q)]
            print(f"  n={n} (p,q)=({p},{q}): measured {ratio}, recorded {recorded}, equal={ratio == recorded}")
