"""Reidemeister moves and the forbidden overpass on Gauss diagrams.

A move instance is a :class:`Move` with a ``kind`` string and a tuple of site
parameters:

``R1-remove``  ``(chord_id,)``
``R1-add``     ``(circle, gap, sign, over_first)``
``R2-remove``  ``(chord_a, chord_b)``
``R2-add``     ``(circle1, gap1, circle2, gap2, sign, parallel, under_first)``
``R3``         ``((circle, pos), (circle, pos), (circle, pos))`` first slots of the three swapped pairs
``F1``         ``(circle, pos)`` first of two adjacent tails

A gap ``g`` on a circle of length ``L`` is the slot before position ``g``,
with ``0 <= g < max(L, 1)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .diagram import DiagramError, GaussDiagram, remove_chords, to_code

FAMILIES = ("R1-add", "R1-remove", "R2-add", "R2-remove", "R3", "F1")


@dataclass(frozen=True)
class Move:
    kind: str
    params: tuple

    def __str__(self):
        return f"{self.kind}{self.params}"


# ---------------------------------------------------------------------------
# helpers


def _adjacent(d: GaussDiagram, a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    """True iff endpoint b immediately follows endpoint a on a circle."""
    if a[0] != b[0]:
        return False
    n = len(d.circles[a[0]])
    return n >= 2 and (a[1] + 1) % n == b[1]


def _new_id(d: GaussDiagram, k: int = 0) -> int:
    return max(d.signs, default=0) + 1 + k


def _insert(circles: List[list], inserts: Sequence[Tuple[int, int, Sequence]]) -> List[list]:
    """Insert token runs at (circle, gap); runs at the same gap keep list order."""
    out = [list(c) for c in circles]
    by_circle: Dict[int, List[Tuple[int, int, Sequence]]] = {}
    for k, (ci, gap, run) in enumerate(inserts):
        by_circle.setdefault(ci, []).append((gap, k, run))
    for ci, items in by_circle.items():
        for gap, _, run in sorted(items, key=lambda x: (-x[0], -x[1])):
            out[ci][gap:gap] = list(run)
    return out


# ---------------------------------------------------------------------------
# R3 pattern table, generated from three straight lines


def _r3_table() -> FrozenSet:
    """Every local Gauss pattern of one side of a third Reidemeister move.

    Lines of slopes 0, 1 and infinity (the vertical one at x = h) meet in a
    triangle; moving the vertical line to x = -h reverses the order of the two
    crossings on each line.  All orientations, height orders, both h and the
    mirror image x -> -x are enumerated.  A pattern records, for each line,
    the ordered pair ((crossing, role), (crossing, role)) along the line, and
    the sign of each crossing; crossings are named by their two lines.
    """
    table = set()
    for h, refl in product((1, -1), (1, -1)):
        base_dirs = [(1, 0), (1, 1), (0, 1)]
        points = {frozenset((0, 1)): (0, 0), frozenset((0, 2)): (h, 0), frozenset((1, 2)): (h, h)}
        for orient in product((1, -1), repeat=3):
            dirs = [(refl * o * dx, o * dy) for o, (dx, dy) in zip(orient, base_dirs)]
            pts = {k: (refl * x, y) for k, (x, y) in points.items()}
            for heights in permutations(range(3)):
                strands = []
                signs = {}
                for line in range(3):
                    crossings = [k for k in pts if line in k]
                    dx, dy = dirs[line]
                    crossings.sort(key=lambda k: pts[k][0] * dx + pts[k][1] * dy)
                    run = []
                    for k in crossings:
                        other = next(iter(k - {line}))
                        run.append((k, "O" if heights[line] > heights[other] else "U"))
                    strands.append(tuple(run))
                for k in pts:
                    a, b = tuple(k)
                    over, under = (a, b) if heights[a] > heights[b] else (b, a)
                    ox, oy = dirs[over]
                    ux, uy = dirs[under]
                    signs[k] = 1 if ox * uy - oy * ux > 0 else -1
                for perm in permutations(range(3)):
                    ren = {k: frozenset(perm[x] for x in k) for k in pts}
                    key = (
                        frozenset(tuple((ren[k], r) for k, r in run) for run in strands),
                        frozenset((ren[k], s) for k, s in signs.items()),
                    )
                    table.add(key)
    return frozenset(table)


R3_PATTERNS = _r3_table()


def _r3_sites(d: GaussDiagram) -> Iterator[Move]:
    seen = set()
    ids = list(d.signs)
    # candidate adjacent pairs: (first endpoint, second endpoint) of distinct chords
    pairs = []
    for ci, circ in enumerate(d.circles):
        n = len(circ)
        if n < 2:
            continue
        for pos in range(n):
            a = circ[pos]
            b = circ[(pos + 1) % n]
            if a[1] != b[1]:
                pairs.append(((ci, pos), a, b))
    by_chords: Dict[FrozenSet[int], list] = {}
    for p in pairs:
        by_chords.setdefault(frozenset((p[1][1], p[2][1])), []).append(p)
    for a, b, c in combinations(ids, 3):
        lists = [by_chords.get(frozenset(x), []) for x in ((a, b), (a, c), (b, c))]
        for p1, p2, p3 in product(*lists):
            used = [p1[1], p1[2], p2[1], p2[2], p3[1], p3[2]]
            if len(set(used)) != 6:
                continue
            slots = tuple(sorted((p1[0], p2[0], p3[0])))
            if slots in seen:
                continue
            for perm in permutations(range(3)):
                # name chords by crossing of lines
                line_names = [frozenset(x) for x in ((0, 1), (0, 2), (1, 2))]
                name = {cid: line_names[perm[k]] for k, cid in enumerate((a, b, c))}
                key = (
                    frozenset(tuple((name[t[1]], t[0]) for t in (p[1], p[2])) for p in (p1, p2, p3)),
                    frozenset((name[cid], d.signs[cid]) for cid in (a, b, c)),
                )
                if key in R3_PATTERNS:
                    seen.add(slots)
                    yield Move("R3", slots)
                    break


# ---------------------------------------------------------------------------
# enumeration


def enumerate_moves(d: GaussDiagram, kind: str) -> List[Move]:
    """All applicable instances of one move family.

    Add-move sites range over every gap (and pair of gaps for R2) with all
    sign and orientation choices.
    """
    if kind not in FAMILIES:
        raise ValueError(f"unknown move family {kind!r}")
    out: List[Move] = []
    if kind == "R1-remove":
        for cid in d.signs:
            o = d.locate(cid, "O")
            u = d.locate(cid, "U")
            if _adjacent(d, o, u) or _adjacent(d, u, o):
                out.append(Move(kind, (cid,)))
    elif kind == "R1-add":
        for ci, circ in enumerate(d.circles):
            for gap in range(max(len(circ), 1)):
                for sign in (1, -1):
                    for over_first in (True, False):
                        out.append(Move(kind, (ci, gap, sign, over_first)))
    elif kind == "R2-remove":
        for a, b in combinations(d.signs, 2):
            if d.signs[a] == d.signs[b]:
                continue
            oa, ob = d.locate(a, "O"), d.locate(b, "O")
            ua, ub = d.locate(a, "U"), d.locate(b, "U")
            if (_adjacent(d, oa, ob) or _adjacent(d, ob, oa)) and (_adjacent(d, ua, ub) or _adjacent(d, ub, ua)):
                out.append(Move(kind, (a, b)))
    elif kind == "R2-add":
        gaps = [(ci, g) for ci, circ in enumerate(d.circles) for g in range(max(len(circ), 1))]
        for (c1, g1), (c2, g2) in product(gaps, gaps):
            for sign in (1, -1):
                for parallel in (True, False):
                    if (c1, g1) == (c2, g2):
                        for under_first in (False, True):
                            out.append(Move(kind, (c1, g1, c2, g2, sign, parallel, under_first)))
                    else:
                        out.append(Move(kind, (c1, g1, c2, g2, sign, parallel, False)))
    elif kind == "R3":
        out.extend(_r3_sites(d))
    elif kind == "F1":
        for ci, circ in enumerate(d.circles):
            n = len(circ)
            if n < 2:
                continue
            for pos in range(n):
                a, b = circ[pos], circ[(pos + 1) % n]
                if a[0] == "O" and b[0] == "O" and a[1] != b[1]:
                    if n == 2 and pos == 1:
                        continue
                    out.append(Move(kind, (ci, pos)))
    return out


def is_applicable(d: GaussDiagram, m: Move) -> bool:
    if m.kind in ("R1-add", "R2-add"):
        return _valid_add_site(d, m)
    return m in enumerate_moves(d, m.kind)


def _valid_add_site(d, m) -> bool:
    try:
        if m.kind == "R1-add":
            ci, gap, sign, _ = m.params
            sites = [(ci, gap)]
        else:
            c1, g1, c2, g2, sign, _, _ = m.params
            sites = [(c1, g1), (c2, g2)]
        for ci, g in sites:
            if not (0 <= ci < len(d.circles)) or not (0 <= g < max(len(d.circles[ci]), 1)):
                return False
        return sign in (1, -1)
    except (TypeError, ValueError):
        return False


# ---------------------------------------------------------------------------
# application


def apply_move(d: GaussDiagram, m: Move) -> GaussDiagram:
    """Apply a move instance; raises DiagramError if it does not apply."""
    if not is_applicable(d, m):
        raise DiagramError(f"inapplicable move {m}")
    k = m.kind
    if k == "R1-remove" or k == "R2-remove":
        return remove_chords(d, m.params)
    if k == "R1-add":
        ci, gap, sign, over_first = m.params
        cid = _new_id(d)
        run = [("O", cid), ("U", cid)] if over_first else [("U", cid), ("O", cid)]
        signs = dict(d.signs)
        signs[cid] = sign
        return GaussDiagram(_insert(d.circles, [(ci, gap, run)]), signs)
    if k == "R2-add":
        c1, g1, c2, g2, sign, parallel, under_first = m.params
        a, b = _new_id(d), _new_id(d, 1)
        over = [("O", a), ("O", b)]
        under = [("U", a), ("U", b)] if parallel else [("U", b), ("U", a)]
        signs = dict(d.signs)
        signs[a] = sign
        signs[b] = -sign
        if (c1, g1) == (c2, g2):
            run = under + over if under_first else over + under
            inserts = [(c1, g1, run)]
        else:
            inserts = [(c1, g1, over), (c2, g2, under)]
        return GaussDiagram(_insert(d.circles, inserts), signs)
    if k == "R3" or k == "F1":
        slots = m.params if k == "R3" else (m.params,)
        circles = [list(c) for c in d.circles]
        for ci, pos in slots:
            n = len(circles[ci])
            q = (pos + 1) % n
            circles[ci][pos], circles[ci][q] = circles[ci][q], circles[ci][pos]
        return GaussDiagram(circles, d.signs)
    raise DiagramError(f"unknown move kind {k!r}")


def inverse_move(d: GaussDiagram, m: Move, result: Optional[GaussDiagram] = None) -> Move:
    """A move taking ``apply_move(d, m)`` back to a diagram isomorphic to ``d``."""
    if result is None:
        result = apply_move(d, m)
    k = m.kind
    if k == "R1-add":
        return Move("R1-remove", (_new_id(d),))
    if k == "R2-add":
        return Move("R2-remove", (_new_id(d), _new_id(d, 1)))
    if k in ("R3", "F1"):
        return m
    if k in ("R1-remove", "R2-remove"):
        return _search_inverse(d, "R1-add" if k == "R1-remove" else "R2-add", result)
    raise DiagramError(f"unknown move kind {k!r}")


def _search_inverse(d: GaussDiagram, family: str, result: GaussDiagram) -> Move:
    target = to_code(d)
    for cand in enumerate_moves(result, family):
        if to_code(apply_move(result, cand)) == target:
            return cand
    raise DiagramError("no inverse move found")


# ---------------------------------------------------------------------------
# random walks


def random_move(d: GaussDiagram, rng: random.Random, max_crossings: int = 9,
                families: Sequence[str] = ("R1-add", "R1-remove", "R2-add", "R2-remove", "R3")) -> Optional[Move]:
    """Pick a random applicable move; add moves are skipped at the crossing cap."""
    fams = list(families)
    rng.shuffle(fams)
    weights_first = [f for f in fams if f == "R3"] + [f for f in fams if f != "R3"]
    for fam in weights_first if rng.random() < 0.4 else fams:
        if fam == "R1-add" and d.n_chords + 1 > max_crossings:
            continue
        if fam == "R2-add" and d.n_chords + 2 > max_crossings:
            continue
        options = enumerate_moves(d, fam)
        if options:
            return rng.choice(options)
    return None


def random_walk(d: GaussDiagram, steps: int, rng: random.Random, max_crossings: int = 9,
                families: Sequence[str] = ("R1-add", "R1-remove", "R2-add", "R2-remove", "R3")) -> Tuple[GaussDiagram, List[Move]]:
    moves = []
    for _ in range(steps):
        m = random_move(d, rng, max_crossings, families)
        if m is None:
            break
        d = apply_move(d, m)
        moves.append(m)
    return d, moves
