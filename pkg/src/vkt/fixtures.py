"""Built-in diagrams and random diagram generators.

Classical knots are built from alternating Dowker-Thistlethwaite codes: the
over/under pattern alternates along the knot, and the crossing signs are
found by searching for the assignment whose Carter surface is a sphere (a
planar diagram).  No polynomial information is used to pick them.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Dict, List, Optional, Sequence

from .diagram import GaussDiagram, carter_genus, connected_sum, parse_gauss, to_code, vertical_mirror
from .parity import stable_project


def alternating_from_dt(dt: Sequence[int]) -> GaussDiagram:
    """Planar alternating diagram for a DT code (even labels paired with 1, 3, 5, ...)."""
    n = len(dt)
    if sorted(abs(x) for x in dt) != list(range(2, 2 * n + 1, 2)):
        raise ValueError("not a DT code")
    crossing_at = {}
    for i, e in enumerate(dt):
        crossing_at[2 * i + 1] = i + 1
        crossing_at[abs(e)] = i + 1
    roles = ["O" if pos % 2 else "U" for pos in range(1, 2 * n + 1)]
    seq = [(roles[pos - 1], crossing_at[pos]) for pos in range(1, 2 * n + 1)]
    for signs in product((1, -1), repeat=n):
        d = GaussDiagram([seq], {i + 1: s for i, s in enumerate(signs)})
        if carter_genus(d) == 0:
            return parse_gauss(to_code(d))
    raise ValueError("no planar sign assignment found")


UNKNOT = parse_gauss("")
KINK = parse_gauss("O1+U1+")
VIRTUAL_TREFOIL = parse_gauss("O1+O2+U1+U2+")
TREFOIL = parse_gauss("O1+U2+O3+U1+O2+U3+")
FIGURE_EIGHT = alternating_from_dt([4, 6, 8, 2])
CINQUEFOIL = alternating_from_dt([6, 8, 10, 2, 4])
THREE_TWIST = alternating_from_dt([4, 8, 10, 2, 6])
STEVEDORE = alternating_from_dt([4, 8, 12, 10, 2, 6])
GRANNY = connected_sum(TREFOIL, 0, TREFOIL, 0)
SQUARE = connected_sum(TREFOIL, 0, vertical_mirror(TREFOIL), 0)

BUILTIN: Dict[str, GaussDiagram] = {
    "unknot": UNKNOT,
    "2.1": VIRTUAL_TREFOIL,
    "3_1": TREFOIL,
    "3_1*": vertical_mirror(TREFOIL),
    "4_1": FIGURE_EIGHT,
    "5_1": CINQUEFOIL,
    "5_2": THREE_TWIST,
    "6_1": STEVEDORE,
    "3_1#3_1": GRANNY,
    "3_1#3_1*": SQUARE,
}

CLASSICAL = ("unknot", "3_1", "3_1*", "4_1", "5_1", "5_2", "6_1", "3_1#3_1", "3_1#3_1*")


def random_diagram(rng: random.Random, n: int, components: int = 1) -> GaussDiagram:
    """Uniformly shuffled endpoints with random signs, split into circles."""
    tokens = [("O", i) for i in range(1, n + 1)] + [("U", i) for i in range(1, n + 1)]
    rng.shuffle(tokens)
    if components <= 1:
        circles = [tokens]
    else:
        cuts = sorted(rng.sample(range(len(tokens) + 1), components - 1)) if tokens else [0] * (components - 1)
        bounds = [0] + cuts + [len(tokens)]
        circles = [tokens[a:b] for a, b in zip(bounds, bounds[1:])]
    return GaussDiagram(circles, {i: rng.choice((1, -1)) for i in range(1, n + 1)})


def random_numberable(rng: random.Random, n: int, p: int = 0, tries: int = 200) -> GaussDiagram:
    """A mod p numberable knot diagram, preferring ones with about n chords.

    Draws random diagrams and takes the stable projection; the largest result
    over a few attempts is kept.
    """
    best: Optional[GaussDiagram] = None
    for _ in range(tries):
        d, _ = stable_project(random_diagram(rng, n), p)
        if best is None or d.n_chords > best.n_chords:
            best = d
        if best.n_chords >= max(n - 2, 1):
            break
    return best


def random_diagrams(rng: random.Random, count: int, max_chords: int, min_chords: int = 0) -> List[GaussDiagram]:
    return [random_diagram(rng, rng.randint(min_chords, max_chords)) for _ in range(count)]
