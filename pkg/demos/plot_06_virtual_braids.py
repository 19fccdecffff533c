"""
Closures of virtual braids
==========================

"""

from vkt.diagram import to_code
from vkt.presentations import braid_closure_diagram, braid_closure_vg, group, hom_count, kill_generator

# sigma_1^2 tau_1 closes up to the virtual trefoil
for word in ("s1 s1 s1", "s1 s1 t1", "s1 t1"):
    d = braid_closure_diagram(2, word)
    print(f"{word:10s} -> {to_code(d)!r} ({d.n_components} component(s))")

# the closure group, with s killed, has the same representations as the reduced group
vg = braid_closure_vg(2, "s1 s1 t1")
print(vg)
gbar = kill_generator(vg, "s")
d = braid_closure_diagram(2, "s1 s1 t1")
print(hom_count(gbar, 4), hom_count(group(d, "Gbar"), 4))
