"""
Knot groups and counting representations
========================================

"""

from vkt.fixtures import TREFOIL, VIRTUAL_TREFOIL
from vkt.presentations import count_elements_of_order_dividing, group, hom_count, presentation, quotient, tietze_simplify

# the reduced group has one extra generator v; Tietze moves shrink it
g = group(VIRTUAL_TREFOIL, "Gbar")
print(g)
print(tietze_simplify(g))

# homomorphisms into S_3 and S_4
for which in ("G", "Gbar", "EG"):
    p = group(TREFOIL, which)
    print(which, [hom_count(p, n) for n in (3, 4)])

# a diagram with an odd chord: adding v^2 to the reduced group does not give G * Z/2
# S_3 cannot see the difference, S_4 can
q = quotient(group(VIRTUAL_TREFOIL, "Gbar"), "v^2")
for n in (3, 4):
    want = hom_count(group(VIRTUAL_TREFOIL, "G"), n) * count_elements_of_order_dividing(n, 2)
    print(f"S{n}: Gbar/<v^2> {hom_count(q, n)}, G * Z/2 {want}")

# printed presentations can be typed in directly
z2 = presentation(["a", "v"], "v^2")
q441 = presentation(["a", "v"], "v^2", "v a^-1 v a^-1 (v a v a^-1 v a)^2")
print(hom_count(z2, 3), hom_count(q441, 3))
