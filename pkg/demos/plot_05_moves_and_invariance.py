"""
Reidemeister moves and invariance
=================================

"""

import random

from vkt.alexander import delta, hbar
from vkt.diagram import UNKNOT, to_code
from vkt.fixtures import TREFOIL
from vkt.moves import Move, apply_move, random_walk
from vkt.parity import stable_project
from vkt.presentations import group, hom_count

rng = random.Random(0)
d = TREFOIL
e, moves = random_walk(d, 12, rng, max_crossings=8)
print("moves:", ", ".join(str(m) for m in moves))
print("before:", to_code(d))
print("after :", to_code(e))

for f in (delta, hbar, lambda k: hom_count(group(k, "G"), 4)):
    print(f(d) == f(e), f(e))

# the projection level is a property of the diagram, not of the knot:
# one R2 move on the round unknot introduces two odd chords
k = apply_move(UNKNOT, Move("R2-add", (0, 0, 0, 0, -1, True, False)))
print(to_code(k), "level", stable_project(k)[1], "vs", stable_project(UNKNOT)[1])
