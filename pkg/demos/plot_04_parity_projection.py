"""
The index parity and the projection filtration
==============================================

"""

import random

from vkt.diagram import to_code
from vkt.fixtures import random_diagram
from vkt.parity import parity, projection_trace

rng = random.Random(3)

# deleting odd chords can create new odd chords, so the projection is iterated
for _ in range(6):
    d = random_diagram(rng, 6)
    trace = projection_trace(d, 0)
    print(f"level {len(trace) - 1}: " + " -> ".join(to_code(x) or "(unknot)" for x in trace))

# parity mod 2 is coarser: fewer chords are odd
d = random_diagram(rng, 6)
print(parity(d, 0).odd(), parity(d, 2).odd())
