"""Gauss diagrams of virtual knots and links.

A diagram is a tuple of circles; each circle is a cyclic sequence of chord
endpoints ``(role, id)`` with role ``"O"`` (the chord's tail, at the
over-crossing) or ``"U"`` (its head, at the under-crossing).  Every chord has
a sign ``+1`` or ``-1``.

Text format: circles are separated by whitespace, each circle is a run of
tokens ``O<id><sign>`` / ``U<id><sign>``; an empty circle is written ``_``
and the unknot is the empty string.

>>> d = parse_gauss("O1+O2+U1+U2+")
>>> d.n_chords, d.n_components
(2, 1)
>>> to_code(parse_gauss("O2+U1+O1+U2+"))
'O1+U2+O2+U1+'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, NamedTuple, Sequence, Tuple

Token = Tuple[str, int]


class DiagramError(ValueError):
    """Invalid diagram or inapplicable diagram operation."""


class GaussCodeError(DiagramError):
    """Malformed Gauss code text."""


@dataclass(frozen=True)
class Endpoint:
    component: int
    position: int
    role: str  # "O" or "U"


@dataclass(frozen=True)
class Chord:
    id: int
    sign: int
    over: Endpoint
    under: Endpoint


class GaussDiagram:
    """Immutable Gauss diagram.

    ``circles`` is a sequence of sequences of ``(role, id)`` tokens and
    ``signs`` maps chord ids to ``+1``/``-1``.
    """

    __slots__ = ("circles", "signs", "_where", "_canon")

    def __init__(self, circles: Sequence[Sequence[Token]] = ((),), signs: Mapping[int, int] | None = None):
        circles = tuple(tuple((str(r), int(i)) for r, i in c) for c in circles)
        if not circles:
            circles = ((),)
        signs = dict(signs or {})
        where: Dict[Tuple[int, str], Tuple[int, int]] = {}
        for ci, circ in enumerate(circles):
            for pos, (role, cid) in enumerate(circ):
                if role not in ("O", "U"):
                    raise DiagramError(f"bad role {role!r}")
                if (cid, role) in where:
                    raise DiagramError(f"chord {cid} has two {role} endpoints")
                where[(cid, role)] = (ci, pos)
        ids = {cid for cid, _ in where}
        for cid in ids:
            if (cid, "O") not in where or (cid, "U") not in where:
                raise DiagramError(f"chord {cid} is dangling (only one endpoint)")
            if signs.get(cid) not in (1, -1):
                raise DiagramError(f"chord {cid} needs sign +1 or -1")
        self.circles: Tuple[Tuple[Token, ...], ...] = circles
        self.signs: Dict[int, int] = {cid: signs[cid] for cid in sorted(ids)}
        self._where = where
        self._canon = None

    # -- structure --------------------------------------------------------
    @property
    def n_chords(self) -> int:
        return len(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.circles)

    @property
    def chord_ids(self) -> List[int]:
        return list(self.signs)

    @property
    def components(self) -> List[List[Endpoint]]:
        return [[Endpoint(ci, pos, role) for pos, (role, _) in enumerate(c)] for ci, c in enumerate(self.circles)]

    @property
    def chords(self) -> List[Chord]:
        return [self.chord(cid) for cid in self.signs]

    def chord(self, cid: int) -> Chord:
        if cid not in self.signs:
            raise DiagramError(f"unknown chord id {cid}")
        oc, op = self._where[(cid, "O")]
        uc, up = self._where[(cid, "U")]
        return Chord(cid, self.signs[cid], Endpoint(oc, op, "O"), Endpoint(uc, up, "U"))

    def locate(self, cid: int, role: str) -> Tuple[int, int]:
        """(circle, position) of a chord endpoint."""
        try:
            return self._where[(cid, role)]
        except KeyError:
            raise DiagramError(f"unknown chord id {cid}") from None

    def is_knot(self) -> bool:
        return len(self.circles) == 1

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self.circles == other.circles and self.signs == other.signs

    def __hash__(self):
        return hash((self.circles, tuple(self.signs.items())))

    def canonical(self) -> "GaussDiagram":
        if self._canon is None:
            self._canon = parse_gauss(to_code(self))
        return self._canon

    def isomorphic(self, other: "GaussDiagram") -> bool:
        return to_code(self) == to_code(other)

    def __repr__(self):
        return f"GaussDiagram({format_code(self)!r})"

    def __str__(self):
        return format_code(self)


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"([OU])(\d+)([+\-−])")


def parse_gauss(code: str) -> GaussDiagram:
    """Parse a Gauss code; see the module docstring for the grammar."""
    if not isinstance(code, str):
        raise GaussCodeError("code must be a string")
    words = code.split()
    if not words:
        return GaussDiagram(((),), {})
    circles = []
    signs: Dict[int, int] = {}
    roles: Dict[int, set] = {}
    for w in words:
        if w == "_":
            circles.append(())
            continue
        pos = 0
        circ = []
        while pos < len(w):
            m = _TOKEN.match(w, pos)
            if not m:
                raise GaussCodeError(f"malformed token at {w[pos:]!r}")
            pos = m.end()
            role, cid, s = m.group(1), int(m.group(2)), m.group(3)
            sign = 1 if s == "+" else -1
            if cid in signs and signs[cid] != sign:
                raise GaussCodeError(f"sign mismatch for chord {cid}")
            signs[cid] = sign
            if role in roles.setdefault(cid, set()):
                raise GaussCodeError(f"duplicate {role} endpoint for chord {cid}")
            roles[cid].add(role)
            circ.append((role, cid))
        circles.append(tuple(circ))
    for cid, rs in roles.items():
        if len(rs) != 2:
            raise GaussCodeError(f"dangling chord id {cid}")
    return GaussDiagram(circles, signs)


def format_code(d: GaussDiagram) -> str:
    """Render without canonicalizing (ids and rotations kept)."""
    if len(d.circles) == 1 and not d.circles[0]:
        return ""
    parts = []
    for c in d.circles:
        if not c:
            parts.append("_")
        else:
            parts.append("".join(f"{r}{i}{'+' if d.signs[i] > 0 else '-'}" for r, i in c))
    return " ".join(parts)


def _canonical_key(d: GaussDiagram):
    k = len(d.circles)
    best = None
    for order in permutations(range(k)):
        ranges = [range(max(1, len(d.circles[c]))) for c in order]
        for rots in product(*ranges):
            mapping: Dict[int, int] = {}
            key = []
            for c, r in zip(order, rots):
                seq = d.circles[c]
                seq = seq[r:] + seq[:r]
                ck = []
                for role, cid in seq:
                    if cid not in mapping:
                        mapping[cid] = len(mapping) + 1
                    ck.append((mapping[cid], 0 if role == "O" else 1, 0 if d.signs[cid] > 0 else 1))
                key.append(tuple(ck))
            key = tuple(key)
            if best is None or key < best:
                best = key
    return best


def to_code(d: GaussDiagram) -> str:
    """Canonical code: least over circle order and rotations, ids relabeled by first appearance."""
    key = _canonical_key(d)
    if len(key) == 1 and not key[0]:
        return ""
    parts = []
    for ck in key:
        if not ck:
            parts.append("_")
        else:
            parts.append("".join(f"{'OU'[r]}{i}{'+-'[s]}" for i, r, s in ck))
    return " ".join(parts)


UNKNOT = GaussDiagram(((),), {})


# ---------------------------------------------------------------------------
# elementary operations


def relabel(d: GaussDiagram, mapping: Mapping[int, int]) -> GaussDiagram:
    circles = [[(r, mapping[i]) for r, i in c] for c in d.circles]
    return GaussDiagram(circles, {mapping[i]: s for i, s in d.signs.items()})


def vertical_mirror(d: GaussDiagram) -> GaussDiagram:
    """Reverse every chord and change its sign."""
    circles = [[("U" if r == "O" else "O", i) for r, i in c] for c in d.circles]
    return GaussDiagram(circles, {i: -s for i, s in d.signs.items()})


def crossing_switch(d: GaussDiagram, chord_id: int) -> GaussDiagram:
    if chord_id not in d.signs:
        raise DiagramError(f"unknown chord id {chord_id}")
    circles = [[(("U" if r == "O" else "O") if i == chord_id else r, i) for r, i in c] for c in d.circles]
    signs = dict(d.signs)
    signs[chord_id] = -signs[chord_id]
    return GaussDiagram(circles, signs)


def set_sign(d: GaussDiagram, chord_id: int, sign: int) -> GaussDiagram:
    """The diagram with the given chord made to have the given sign (switching if needed)."""
    return d if d.signs[chord_id] == sign else crossing_switch(d, chord_id)


def remove_chords(d: GaussDiagram, ids: Iterable[int]) -> GaussDiagram:
    """Delete chords; remaining endpoints keep their ids and circle order."""
    drop = set(ids)
    for i in drop:
        if i not in d.signs:
            raise DiagramError(f"unknown chord id {i}")
    circles = [[(r, i) for r, i in c if i not in drop] for c in d.circles]
    return GaussDiagram(circles, {i: s for i, s in d.signs.items() if i not in drop})


def smooth(d: GaussDiagram, chord_id: int) -> GaussDiagram:
    """Oriented smoothing at a chord.

    On one circle with endpoints at positions i < j the circle splits into
    the runs strictly between them; across two circles the circles merge.
    """
    if chord_id not in d.signs:
        raise DiagramError(f"unknown chord id {chord_id}")
    ci, i = d.locate(chord_id, "O")
    cj, j = d.locate(chord_id, "U")
    others = [c for k, c in enumerate(d.circles) if k not in (ci, cj)]
    signs = {k: s for k, s in d.signs.items() if k != chord_id}
    if ci == cj:
        seq = d.circles[ci]
        if i > j:
            i, j = j, i
        inner = seq[i + 1:j]
        outer = seq[j + 1:] + seq[:i]
        new = [inner, outer]
    else:
        a, b = d.circles[ci], d.circles[cj]
        merged = a[i + 1:] + a[:i] + b[j + 1:] + b[:j]
        new = [merged]
    first = min(ci, cj)
    circles = others[:first] + new + others[first:]
    return GaussDiagram(circles, signs)


def connected_sum(d1: GaussDiagram, cut1: int, d2: GaussDiagram, cut2: int) -> GaussDiagram:
    """Splice two knot diagrams at the gaps before positions ``cut1`` and ``cut2``.

    Chord ids of ``d2`` are shifted past those of ``d1``.
    """
    if d1.n_components != 1 or d2.n_components != 1:
        raise DiagramError("connected sum needs single-circle diagrams")
    off = max(d1.signs, default=0)
    s1 = d1.circles[0]
    s2 = [(r, i + off) for r, i in d2.circles[0]]
    if s1:
        cut1 %= len(s1)
    if s2:
        cut2 %= len(s2)
    seq = list(s1[cut1:]) + list(s1[:cut1]) + s2[cut2:] + s2[:cut2]
    signs = dict(d1.signs)
    signs.update({i + off: s for i, s in d2.signs.items()})
    return GaussDiagram([seq], signs)


def disjoint_union(d1: GaussDiagram, d2: GaussDiagram) -> GaussDiagram:
    off = max(d1.signs, default=0)
    circles = list(d1.circles) + [[(r, i + off) for r, i in c] for c in d2.circles]
    signs = dict(d1.signs)
    signs.update({i + off: s for i, s in d2.signs.items()})
    return GaussDiagram(circles, signs)


# ---------------------------------------------------------------------------
# Carter surface


def _component_labels(d: GaussDiagram) -> List[int]:
    """Union-find over circles joined by chords; label per circle."""
    parent = list(range(len(d.circles)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cid in d.signs:
        a = find(d.locate(cid, "O")[0])
        b = find(d.locate(cid, "U")[0])
        parent[a] = b
    return [find(x) for x in range(len(d.circles))]


def carter_genus(d: GaussDiagram) -> int:
    """Genus of the Carter surface, summed over connected pieces.

    Crossings become 4-valent vertices of a ribbon graph whose edges are the
    short arcs; the cyclic order at a crossing of sign +1 is (under-in,
    over-in, under-out, over-out), reversed for sign -1.  Faces are orbits of
    rotation composed with the edge involution.
    """
    # darts: (circle, position, end) where end 0 = leaving the endpoint at
    # `position`, end 1 = arriving at the endpoint following `position`
    circles = d.circles

    def nxt(ci, pos):
        return (pos + 1) % len(circles[ci])

    def prv(ci, pos):
        return (pos - 1) % len(circles[ci])

    rot: Dict[Tuple[int, int, int], Tuple[int, int, int]] = {}
    for cid, sign in d.signs.items():
        oc, op = d.locate(cid, "O")
        uc, up = d.locate(cid, "U")
        under_in = (uc, prv(uc, up), 1)
        over_in = (oc, prv(oc, op), 1)
        under_out = (uc, up, 0)
        over_out = (oc, op, 0)
        cyc = [under_in, over_in, under_out, over_out]
        if sign < 0:
            cyc.reverse()
        for k in range(4):
            rot[cyc[k]] = cyc[(k + 1) % 4]

    def alpha(dart):
        ci, pos, end = dart
        return (ci, pos, 1 - end)

    labels = _component_labels(d)
    seen = set()
    faces: Dict[int, int] = {}
    for dart in rot:
        if dart in seen:
            continue
        comp = labels[dart[0]]
        faces[comp] = faces.get(comp, 0) + 1
        x = dart
        while x not in seen:
            seen.add(x)
            x = rot[alpha(x)]
    verts: Dict[int, int] = {}
    for cid in d.signs:
        comp = labels[d.locate(cid, "O")[0]]
        verts[comp] = verts.get(comp, 0) + 1
    total = 0
    for comp, v in verts.items():
        e = 2 * v
        chi2 = 2 - v + e - faces[comp]
        if chi2 % 2:
            raise AssertionError("odd Euler characteristic in Carter surface")
        total += chi2 // 2
    return total


# ---------------------------------------------------------------------------
# knot tables


class TableRecord(NamedTuple):
    name: str
    code: str
    line: int


class TableError(NamedTuple):
    line: int
    text: str
    message: str


def read_table(source) -> Tuple[List[TableRecord], List[TableError]]:
    """Read ``<name> <code>`` records; ``#`` starts a comment.

    ``source`` is a path or an iterable of lines.  Malformed lines are
    collected and reported rather than raised.
    """
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text().splitlines()
    else:
        lines = list(source)
    records: List[TableRecord] = []
    errors: List[TableError] = []
    for lineno, raw in enumerate(lines, 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        parts = text.split(None, 1)
        name = parts[0]
        code = parts[1] if len(parts) > 1 else ""
        try:
            parse_gauss(code)
        except DiagramError as exc:
            errors.append(TableError(lineno, raw.rstrip("\n"), str(exc)))
            continue
        records.append(TableRecord(name, code, lineno))
    return records, errors


def crossing_number(d: GaussDiagram) -> int:
    return d.n_chords


def chord_lookup(d: GaussDiagram) -> Dict[int, Chord]:
    return {c.id: c for c in d.chords}

