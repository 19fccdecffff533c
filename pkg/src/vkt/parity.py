"""Chord index, mod p Alexander numberings, the index parity and its projection.

Throughout, ``p = 0`` means working over the integers and ``p = 1`` is
rejected.  Only single-circle (knot) diagrams are accepted: the index is not
defined for links.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .diagram import DiagramError, GaussDiagram, remove_chords


class PreconditionError(DiagramError):
    """Input outside an operation's domain (e.g. a link, or p = 1)."""


def _check(d: GaussDiagram, p: int | None = None) -> None:
    if d.n_components != 1:
        raise PreconditionError("defined for knot diagrams (one circle) only")
    if p is not None and (p < 0 or p == 1):
        raise PreconditionError("modulus must be 0 or at least 2")


@dataclass(frozen=True)
class IndexReport:
    chord: int
    index: int
    r_plus: int
    r_minus: int
    l_plus: int
    l_minus: int

    @property
    def interleaved(self) -> int:
        return self.r_plus + self.r_minus + self.l_plus + self.l_minus


def index_report(d: GaussDiagram, chord_id: int) -> IndexReport:
    """Classify the chords crossing ``chord_id`` by head side and sign.

    The right side of a chord is the arc running forward from its tail to its
    head.
    """
    _check(d)
    sign = d.signs.get(chord_id)
    if sign is None:
        raise DiagramError(f"unknown chord id {chord_id}")
    seq = d.circles[0]
    n = len(seq)
    i = d.locate(chord_id, "O")[1]
    j = d.locate(chord_id, "U")[1]
    right = set()
    k = (i + 1) % n
    while k != j:
        right.add(k)
        k = (k + 1) % n
    counts = {"r+": 0, "r-": 0, "l+": 0, "l-": 0}
    for other, eps in d.signs.items():
        if other == chord_id:
            continue
        head = d.locate(other, "U")[1] in right
        tail = d.locate(other, "O")[1] in right
        if head == tail:
            continue
        key = ("r" if head else "l") + ("+" if eps > 0 else "-")
        counts[key] += 1
    idx = sign * (counts["r+"] - counts["r-"] + counts["l-"] - counts["l+"])
    return IndexReport(chord_id, idx, counts["r+"], counts["r-"], counts["l+"], counts["l-"])


def chord_index(d: GaussDiagram, chord_id: int) -> int:
    return index_report(d, chord_id).index


def chord_indices(d: GaussDiagram) -> Dict[int, int]:
    _check(d)
    return {cid: chord_index(d, cid) for cid in d.signs}


def _residue(x: int, p: int) -> int:
    return x % p if p else x


def is_numberable(d: GaussDiagram, p: int = 0) -> bool:
    """True iff every chord index vanishes mod p."""
    _check(d, p)
    return all(_residue(v, p) == 0 for v in chord_indices(d).values())


# ---------------------------------------------------------------------------
# numberings


def numbering_relations(d: GaussDiagram) -> List[Tuple[int, int, int]]:
    """Linear crossing relations ``lam[a] - lam[b] = w`` on short arcs.

    Short arc ``k`` runs from endpoint ``k`` to endpoint ``k + 1``.  At a
    chord of sign e with tail at i and head at j the over strand drops by e,
    the under strand enters with the over strand's outgoing label and leaves
    with its incoming label.
    """
    _check(d)
    n = len(d.circles[0])
    rels = []
    for cid, e in d.signs.items():
        i = d.locate(cid, "O")[1]
        j = d.locate(cid, "U")[1]
        rels.append((i, (i - 1) % n, -e))
        rels.append(((j - 1) % n, i, 0))
        rels.append((j, (i - 1) % n, 0))
    return rels


def check_numbering(d: GaussDiagram, lam: Dict[int, int], p: int = 0) -> bool:
    """Verify a numbering against the crossing relations."""
    _check(d, p)
    n = max(len(d.circles[0]), 1)
    if set(lam) != set(range(n)):
        return False
    return all(_residue(lam[a] - lam[b] - w, p) == 0 for a, b, w in numbering_relations(d))


def alexander_numbering(d: GaussDiagram, p: int = 0) -> Optional[Dict[int, int]]:
    """A mod p Alexander numbering with arc 0 labelled 0, or None.

    Solved with a weighted union-find over the relations, independently of
    the index criterion.
    """
    _check(d, p)
    n = len(d.circles[0])
    if n == 0:
        return {0: 0}
    parent = list(range(n))
    off = [0] * n  # lam[x] = lam[parent[x]] + off[x]

    def find(x):
        path = []
        while parent[x] != x:
            path.append(x)
            x = parent[x]
        root = x
        acc = 0
        for y in reversed(path):
            acc += off[y]
            off[y] = acc
            parent[y] = root
        return root

    for a, b, w in numbering_relations(d):
        ra, rb = find(a), find(b)
        # lam[a] = lam[ra] + off[a], lam[b] = lam[rb] + off[b]
        if ra == rb:
            if _residue(off[a] - off[b] - w, p):
                return None
        else:
            parent[ra] = rb
            off[ra] = _residue(w + off[b] - off[a], p)
    root0 = find(0)
    base = off[0]
    out = {}
    for x in range(n):
        if find(x) != root0:
            # every arc is tied to its neighbours, so this cannot happen
            raise AssertionError("disconnected numbering system")
        out[x] = _residue(off[x] - base, p)
    return out


# ---------------------------------------------------------------------------
# parity and projection


@dataclass(frozen=True)
class ParityAssignment:
    p: int
    values: Dict[int, int]

    def odd(self) -> List[int]:
        return [c for c, v in self.values.items() if v]

    def even(self) -> List[int]:
        return [c for c, v in self.values.items() if not v]


def parity(d: GaussDiagram, p: int = 0) -> ParityAssignment:
    """f(c) = 0 iff I(c) vanishes mod p."""
    _check(d, p)
    return ParityAssignment(p, {c: 0 if _residue(v, p) == 0 else 1 for c, v in chord_indices(d).items()})


def project(d: GaussDiagram, p: int = 0) -> GaussDiagram:
    """Delete the odd chords (identity if there are none)."""
    odd = parity(d, p).odd()
    return remove_chords(d, odd) if odd else d


def projection_trace(d: GaussDiagram, p: int = 0) -> List[GaussDiagram]:
    """``[d, P(d), P^2(d), ...]`` up to and including the first fixed point."""
    _check(d, p)
    trace = [d]
    for _ in range(d.n_chords + 1):
        nxt = project(trace[-1], p)
        if nxt == trace[-1]:
            return trace
        trace.append(nxt)
    raise AssertionError("projection failed to stabilize")


def stable_project(d: GaussDiagram, p: int = 0) -> Tuple[GaussDiagram, int]:
    """Fixed point of the projection and the filtration level."""
    trace = projection_trace(d, p)
    return trace[-1], len(trace) - 1
