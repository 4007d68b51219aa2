"""The pairing functionals that separate paired-index forms from mixed ones.

Run:  python demos/05_pairing_functionals.py
"""

from pqforms import (
    Direction,
    Form,
    HermitianMetric,
    RealOrthogonalMatrix,
    WirtingerPolynomial,
    harmonic_check,
    k3_product_form,
    lemma34_scenario,
    obstruction,
    obstruction_direction_coefficients,
    paired_class_form,
    transform_form,
)
from pqforms.dsl import format_poly, pretty_print

n = 4

# ---------------------------------------------------------------------------
# paired-index forms: every dz^s carries its dzb^s partner
# ---------------------------------------------------------------------------
paired = paired_class_form({3, 4}, 1, n)
print(f"paired class form on {{3,4}}: {pretty_print(paired)}")
print(f"  obstruction coefficients in v: {obstruction_direction_coefficients(paired)}")

# ---------------------------------------------------------------------------
# the mixed-index candidate does not pair its indices
# ---------------------------------------------------------------------------
candidate = Form.term(n, (1, 2), (3, 4), 1)
print(f"\ncandidate: {pretty_print(candidate)}")
symbolic = obstruction_direction_coefficients(candidate)
rendered = " + ".join(f"({format_poly(poly)})*c{j}" for j, poly in sorted(symbolic.items()))
print(f"  obstruction(v) = {rendered}")
print(f"  at v = e1: {format_poly(obstruction(candidate, Direction.basis(n, 1)))}")

# ---------------------------------------------------------------------------
# the zero verdict survives exact rational orthogonal frame changes
# ---------------------------------------------------------------------------
rotation = RealOrthogonalMatrix.rotation(n, 1, 2, "3/5", "4/5")
print(f"\nrotated paired form: {pretty_print(transform_form(paired, rotation))}")
directions = [Direction.basis(n, j) for j in range(1, 5)] + [Direction.parse("1,2,-3,1/2", n)]
report = lemma34_scenario(paired, directions, [rotation])
print(f"  zero in all frames: {report.all_zero} (frames tested: {len(report.frames)})")

counter = lemma34_scenario(candidate, directions, [rotation])
print(f"  candidate zero in standard frame: {counter.frames[0].all_zero}")

# ---------------------------------------------------------------------------
# the product construction: harmonic, yet fails the pairing equation
# ---------------------------------------------------------------------------
one = WirtingerPolynomial.one(n)
psi = k3_product_form(one, one)
metric = HermitianMetric.identity(n)
print(f"\nproduct form: {pretty_print(psi)}")
print(f"  harmonic: {harmonic_check(psi, metric).harmonic}")
print(f"  obstruction at e1: {format_poly(obstruction(psi, Direction.basis(n, 1)))} (nonzero)")
print("  no cohomological conclusion is drawn here; the engine reports functional values only")
