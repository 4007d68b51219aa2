"""d, delta, the Laplacian, and why the mixed-index block form is harmonic.

Run:  python demos/04_harmonic_block_form.py
"""

from pqforms import (
    Form,
    HermitianMetric,
    WirtingerPolynomial,
    codifferential,
    dolbeault_del,
    dolbeault_delbar,
    exterior_d,
    harmonic_check,
    hodge_star,
    laplacian,
)
from pqforms.dsl import pretty_print

n = 4
metric = HermitianMetric.identity(n)

# a coefficient using only z1, z2, zb3, zb4 - the variables whose
# differentials already appear in the wedge monomial
f = WirtingerPolynomial.z(n, 1) * WirtingerPolynomial.zb(n, 4) + 3
psi = Form.term(n, (1, 2), (3, 4), f)
print(f"psi = {pretty_print(psi)}")

# d(psi): each derivative either hits a variable whose differential is
# already wedged in (killing the term) or vanishes by independence
print(f"\nd(psi)      = {pretty_print(exterior_d(psi))}")
print(f"del(psi)    = {pretty_print(dolbeault_del(psi))}")
print(f"delbar(psi) = {pretty_print(dolbeault_delbar(psi))}")

# delta = -(star d star) here; star(psi) has the same block shape with the
# complementary indices, so d kills it for the same reason
print(f"\nstar(psi)        = {pretty_print(hodge_star(psi, metric))}")
print(f"d(star(psi))     = {pretty_print(exterior_d(hodge_star(psi, metric)))}")
print(f"delta(psi)       = {pretty_print(codifferential(psi, metric))}")
print(f"laplacian(psi)   = {pretty_print(laplacian(psi, metric))}")

report = harmonic_check(psi, metric)
print(f"\nharmonic: {report.harmonic}  (d vanishes: {report.d_vanishes}, delta vanishes: {report.delta_vanishes})")
print(f"note: {report.note}")

# contrast: a function that is not closed
g = Form.from_scalar(1, WirtingerPolynomial.z(1, 1) * WirtingerPolynomial.zb(1, 1))
m1 = HermitianMetric.identity(1)
print(f"\ncontrast, |z|^2 at n=1:")
print(f"  d(z1*zb1)         = {pretty_print(exterior_d(g))}")
print(f"  laplacian(z1*zb1) = {pretty_print(laplacian(g, m1))}")
