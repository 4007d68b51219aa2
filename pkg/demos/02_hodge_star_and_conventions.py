"""The Hodge star, its defining identity, and the two printed variants.

Run:  python demos/02_hodge_star_and_conventions.py
"""

from pqforms import (
    DEFAULT_CONVENTION,
    Form,
    HermitianMetric,
    LITERAL_CONVENTION,
    StarConvention,
    WirtingerPolynomial,
    defining_identity_check,
    hodge_star,
    pointwise_inner,
    volume_coefficient_report,
    volume_form,
)
from pqforms.dsl import format_poly, pretty_print

# ---------------------------------------------------------------------------
# The star is pinned by: phi ^ star(psi) = <phi, psi> * vol, exactly
# ---------------------------------------------------------------------------
m1 = HermitianMetric.identity(1)
dz1 = Form.term(1, (1,), (), 1)
print("n=1, identity metric:")
print(f"  vol        = {pretty_print(volume_form(m1))}")
print(f"  star(dz1)  = {pretty_print(hodge_star(dz1, m1))}")
print(f"  star(1)    = {pretty_print(hodge_star(Form.from_scalar(1, 1), m1))}")
print(f"  star(vol)  = {pretty_print(hodge_star(volume_form(m1), m1))}")

# ---------------------------------------------------------------------------
# The holomorphic-coefficient block form on n=4
# ---------------------------------------------------------------------------
n = 4
m4 = HermitianMetric.identity(n)
f = WirtingerPolynomial.z(n, 1) * WirtingerPolynomial.zb(n, 4) + 3
psi = Form.term(n, (1, 2), (3, 4), f)
print(f"\npsi       = {pretty_print(psi)}")
print(f"star(psi) = {pretty_print(hodge_star(psi, m4))}")
print(f"<psi,psi> = {format_poly(pointwise_inner(psi, psi, m4))}")
report = defining_identity_check(psi, psi, m4)
print(f"defining identity holds: {report.holds}")

# ---------------------------------------------------------------------------
# The literal printed variant fails the defining identity; the engine
# keeps it runnable so the failure is demonstrable, never silent
# ---------------------------------------------------------------------------
printed = StarConvention(conjugation_mode="single", output_index_mode="printed_eq_2_9")
bad = defining_identity_check(dz1, dz1, m1, printed)
print("\nliteral index placement at n=1:")
print(f"  star(dz1) = {pretty_print(hodge_star(dz1, m1, printed))}")
print(f"  defining identity holds: {bad.holds}")
print(f"  residual: {pretty_print(bad.residual)}")

print("\nfull literal variant on psi:")
print(f"  star(psi) = {pretty_print(hodge_star(psi, m4, LITERAL_CONVENTION))}")
print(f"  (the default gives {pretty_print(hodge_star(psi, m4, DEFAULT_CONVENTION))})")

# ---------------------------------------------------------------------------
# Volume normalization: wedge power versus the i^n-free printed prefactor
# ---------------------------------------------------------------------------
print("\nvolume coefficient, wedge power vs printed variant:")
for n_dim in (1, 2, 3, 4):
    rep = volume_coefficient_report(HermitianMetric.identity(n_dim))
    print(
        f"  n={n_dim}: wedge power gives {rep.wedge_power_coefficient}, "
        f"variant gives {rep.real_prefactor_variant}, match={rep.match}"
    )
