"""
Alexander-type invariants of classical and virtual knots
========================================================

"""

from vkt.alexander import delta, gks, hbar, knot_determinant, mod_p_obstruction
from vkt.fixtures import BUILTIN, CLASSICAL, VIRTUAL_TREFOIL

# classical knots: delta is the Alexander polynomial and hbar vanishes
for name in CLASSICAL:
    d = BUILTIN[name]
    print(f"{name:10s} delta = {delta(d)!s:28s} det = {knot_determinant(d):2d}  hbar = {hbar(d)}")

# the virtual trefoil has trivial delta but a nonzero hbar
vt = VIRTUAL_TREFOIL
print("\nvirtual trefoil")
print("  delta:", delta(vt))
print("  hbar :", hbar(vt))
print("  G(s,t):", gks(vt))

# neither vanishing condition holds, so it is not mod p almost classical
for p in (2, 3, 5):
    r = mod_p_obstruction(vt, p)
    print(f"  p={p}: hbar(t, zeta)=0? {r.hbar_vanishes_at_zeta}   Phi_p | G? {r.phi_divides_gks}")
