"""Finitely presented groups attached to Gauss diagrams.

Words are tuples of nonzero integers: the letter ``k > 0`` is generator
``k - 1`` and ``-k`` is its inverse.  A :class:`Presentation` holds generator
names and freely reduced relator words.

Groups built from a diagram (``group(d, which)``):

``G``     Wirtinger group, one generator per arc between under-crossings.
``Gbar``  reduced virtual knot group, one generator per short arc plus ``v``.
``EG``    extended group; the change of variables ``a -> a v``, ``v -> s``
          applied to ``Gbar``.
``WG``    ``G`` free product a fresh infinite cyclic generator ``w``.
``VG``    ``Gbar`` with ``s, q``, ``[s, q] = 1`` and ``v = s q^-1``.
``QG``    served as ``Gbar`` (the two are isomorphic).
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .diagram import GaussDiagram

Word = Tuple[int, ...]

DEFAULT_BUDGET = 10 ** 9


class PresentationError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Homomorphism search visited more nodes than allowed."""


# ---------------------------------------------------------------------------
# words


def letter(gen: int, exp: int = 1) -> int:
    return (gen + 1) if exp > 0 else -(gen + 1)


def word_from_pairs(pairs: Iterable[Tuple[int, int]]) -> Word:
    """Build a word from ``(generator index, exponent)`` pairs; exponents may exceed 1."""
    out: List[int] = []
    for g, e in pairs:
        out.extend([letter(g, e)] * abs(e))
    return free_reduce(out)


def word_to_pairs(w: Word) -> List[Tuple[int, int]]:
    return [(abs(x) - 1, 1 if x > 0 else -1) for x in w]


def free_reduce(w: Iterable[int]) -> Word:
    out: List[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Word, k: int) -> Word:
    if k < 0:
        return free_reduce(inverse(w) * (-k))
    return free_reduce(w * k)


def concat(*ws: Word) -> Word:
    out: List[int] = []
    for w in ws:
        out.extend(w)
    return free_reduce(out)


def commutator(a: Word, b: Word) -> Word:
    return concat(a, b, inverse(a), inverse(b))


def conj(g: Word, w: Word) -> Word:
    """``g w g^-1``."""
    return concat(g, w, inverse(g))


def substitute_word(w: Word, images: Dict[int, Word]) -> Word:
    """Replace generator ``g`` by ``images[g]`` (generators absent from the map are kept)."""
    out: List[int] = []
    for x in w:
        g = abs(x) - 1
        img = images.get(g)
        if img is None:
            out.append(x)
        else:
            out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


def exponent_sum(w: Word, gen: int) -> int:
    return sum(1 if x > 0 else -1 for x in w if abs(x) - 1 == gen)


def occurrences(w: Word, gen: int) -> int:
    return sum(1 for x in w if abs(x) - 1 == gen)


def generators_in(w: Word) -> set:
    return {abs(x) - 1 for x in w}


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class Presentation:
    gens: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()
    note: str = ""

    def __post_init__(self):
        n = len(self.gens)
        if len(set(self.gens)) != n:
            raise PresentationError("duplicate generator names")
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            for x in r:
                if x == 0 or abs(x) > n:
                    raise PresentationError(f"generator index out of range in relator {r}")
            rels.append(r)
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def n_gens(self) -> int:
        return len(self.gens)

    def index(self, name: str) -> int:
        try:
            return self.gens.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def word(self, text: str) -> Word:
        return parse_word(text, self.gens)

    def word_text(self, w: Word) -> str:
        return format_word(w, self.gens)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.gens)]
        for r in self.relators:
            lines.append("rel: " + format_word(r, self.gens))
        return "\n".join(lines) + "\n"

    def __str__(self):
        rels = ", ".join(format_word(r, self.gens) or "1" for r in self.relators)
        return f"< {' '.join(self.gens)} | {rels} >"


def parse_word(text: str, gens: Sequence[str]) -> Word:
    """Parse words like ``a b^-1 (v a)^2``; ``1`` or empty text is the identity.

    When every generator name is a single character, juxtaposed names such as
    ``ab^-1`` are split letter by letter.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    index = {g: i for i, g in enumerate(gens)}
    single = all(len(g) == 1 for g in gens)
    name_re = re.compile(r"[A-Za-z_]" if single else r"[A-Za-z_][A-Za-z_0-9']*")
    exp_re = re.compile(r"\s*\^\s*\{?\s*(-?\s*\d+)\s*\}?")
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos] in " \t*·":
            pos += 1

    def exponent() -> int:
        nonlocal pos
        m = exp_re.match(text, pos)
        if not m:
            return 1
        pos = m.end()
        return int(m.group(1).replace(" ", ""))

    def sequence(closing: bool) -> List[int]:
        nonlocal pos
        out: List[int] = []
        while True:
            skip()
            if pos >= len(text):
                if closing:
                    raise PresentationError("unbalanced parenthesis")
                return out
            ch = text[pos]
            if ch == ")":
                if not closing:
                    raise PresentationError("unbalanced parenthesis")
                pos += 1
                return out
            if ch == "(":
                pos += 1
                inner = free_reduce(sequence(True))
                out.extend(power(inner, exponent()))
                continue
            if ch == "1" and not text[pos + 1:pos + 2].isdigit():
                pos += 1
                continue
            m = name_re.match(text, pos)
            if not m or m.group(0) not in index:
                raise PresentationError(f"cannot parse word at {text[pos:]!r}")
            pos = m.end()
            k = exponent()
            out.extend([letter(index[m.group(0)], k)] * abs(k))

    return free_reduce(sequence(False))


def format_word(w: Word, gens: Sequence[str]) -> str:
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = j - i
        g = gens[abs(w[i]) - 1]
        e = k if w[i] > 0 else -k
        parts.append(g if e == 1 else f"{g}^{e}")
        i = j
    return " ".join(parts)


def parse_presentation(text: str) -> Presentation:
    """Read the ``gens:`` / ``rel:`` line format (``#`` comments allowed)."""
    gens = None
    rels_text = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if gens is not None:
                raise PresentationError("repeated gens line")
            gens = tuple(line[5:].split())
        elif line.startswith("rel:"):
            rels_text.append(line[4:])
        else:
            raise PresentationError(f"unrecognized line {raw!r}")
    if gens is None:
        raise PresentationError("missing gens line")
    return Presentation(gens, tuple(parse_word(r, gens) for r in rels_text))


def presentation(gens: Sequence[str], *relators: str) -> Presentation:
    """Convenience constructor from relator strings."""
    gens = tuple(gens)
    return Presentation(gens, tuple(parse_word(r, gens) for r in relators))


def quotient(p: Presentation, extra: Word | str) -> Presentation:
    """Append a relator."""
    if isinstance(extra, str):
        extra = parse_word(extra, p.gens)
    for x in extra:
        if x == 0 or abs(x) > p.n_gens:
            raise PresentationError("extra relator uses an unknown generator")
    return Presentation(p.gens, p.relators + (free_reduce(extra),), p.note)


def add_generator(p: Presentation, name: str, *relators: str) -> Presentation:
    gens = p.gens + (name,)
    return Presentation(gens, p.relators + tuple(parse_word(r, gens) for r in relators), p.note)


def kill_generator(p: Presentation, name: str) -> Presentation:
    """Quotient by ``name = 1`` and drop that generator."""
    g = p.index(name)
    rels = []
    for r in p.relators:
        w = []
        for x in r:
            k = abs(x) - 1
            if k == g:
                continue
            w.append(x if k < g else (x - 1 if x > 0 else x + 1))
        rels.append(tuple(w))
    gens = p.gens[:g] + p.gens[g + 1:]
    return Presentation(gens, tuple(rels), p.note)


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    off = p1.n_gens
    gens = p1.gens + tuple(g if g not in p1.gens else g + "'" for g in p2.gens)
    rels = p1.relators + tuple(tuple(x + off if x > 0 else x - off for x in r) for r in p2.relators)
    return Presentation(gens, rels)


# ---------------------------------------------------------------------------
# groups of a Gauss diagram


def _short_arcs(d: GaussDiagram):
    """Short-arc generator index for (circle, position) arcs; returns (names, arc_of)."""
    names = []
    arc_of: Dict[Tuple[int, int], int] = {}
    for ci, circ in enumerate(d.circles):
        if not circ:
            arc_of[(ci, 0)] = len(names)
            names.append(f"a{len(names) + 1}")
            continue
        for pos in range(len(circ)):
            arc_of[(ci, pos)] = len(names)
            names.append(f"a{len(names) + 1}")
    return names, arc_of


def _arc_in(d, ci, pos):
    return (ci, (pos - 1) % len(d.circles[ci]))


def wirtinger(d: GaussDiagram) -> Presentation:
    """The knot group: arcs run from one under-crossing to the next."""
    names = []
    arc_of: Dict[Tuple[int, int], int] = {}
    for ci, circ in enumerate(d.circles):
        unders = [pos for pos, (r, _) in enumerate(circ) if r == "U"]
        if not unders:
            names.append(f"a{len(names) + 1}")
            for pos in range(max(len(circ), 1)):
                arc_of[(ci, pos)] = len(names) - 1
            continue
        n = len(circ)
        start = unders[0]
        cur = None
        for step in range(n):
            pos = (start + step) % n
            if circ[pos][0] == "U":
                names.append(f"a{len(names) + 1}")
                cur = len(names) - 1
            arc_of[(ci, pos)] = cur
    rels = []
    for cid, e in d.signs.items():
        oc, op = d.locate(cid, "O")
        uc, up = d.locate(cid, "U")
        x = (letter(arc_of[(oc, op)]),)
        a_in = (letter(arc_of[_arc_in(d, uc, up)]),)
        a_out = (letter(arc_of[(uc, up)]),)
        xe = power(x, e)
        rels.append(concat(inverse(a_out), xe, a_in, inverse(xe)))
    return Presentation(tuple(names), tuple(rels))


def reduced_group(d: GaussDiagram) -> Presentation:
    """The reduced virtual knot group on short arcs and the augmentation generator v.

    At a crossing of sign e with over strand u -> u' and under strand w -> w':
    e = +1: u' = v u v^-1 and w' = (u v^-1) w (u v^-1)^-1;
    e = -1: u' = v^-1 u v and w' = (u^-1 v) w (u^-1 v)^-1.
    """
    names, arc_of = _short_arcs(d)
    vi = len(names)
    v = (letter(vi),)
    rels = []
    for cid, e in d.signs.items():
        oc, op = d.locate(cid, "O")
        uc, up = d.locate(cid, "U")
        u = (letter(arc_of[_arc_in(d, oc, op)]),)
        u2 = (letter(arc_of[(oc, op)]),)
        w = (letter(arc_of[_arc_in(d, uc, up)]),)
        w2 = (letter(arc_of[(uc, up)]),)
        if e > 0:
            rels.append(concat(inverse(u2), conj(v, u)))
            rels.append(concat(inverse(w2), conj(concat(u, inverse(v)), w)))
        else:
            rels.append(concat(inverse(u2), conj(inverse(v), u)))
            rels.append(concat(inverse(w2), conj(concat(inverse(u), v), w)))
    return Presentation(tuple(names) + ("v",), tuple(rels))


def extended_group(d: GaussDiagram) -> Presentation:
    """Same short arcs as the reduced group, augmentation generator s.

    e = +1: u' = s u s^-1, w' = u w u'^-1;  e = -1: u' = s^-1 u s, w' = u'^-1 w u.
    """
    names, arc_of = _short_arcs(d)
    s = (letter(len(names)),)
    rels = []
    for cid, e in d.signs.items():
        oc, op = d.locate(cid, "O")
        uc, up = d.locate(cid, "U")
        u = (letter(arc_of[_arc_in(d, oc, op)]),)
        u2 = (letter(arc_of[(oc, op)]),)
        w = (letter(arc_of[_arc_in(d, uc, up)]),)
        w2 = (letter(arc_of[(uc, up)]),)
        if e > 0:
            rels.append(concat(inverse(u2), conj(s, u)))
            rels.append(concat(inverse(w2), u, w, inverse(u2)))
        else:
            rels.append(concat(inverse(u2), conj(inverse(s), u)))
            rels.append(concat(inverse(w2), inverse(u2), w, u))
    return Presentation(tuple(names) + ("s",), tuple(rels))


def group(d: GaussDiagram, which: str = "G") -> Presentation:
    which = which.strip()
    if which == "G":
        return wirtinger(d)
    if which in ("Gbar", "QG"):
        p = reduced_group(d)
        if which == "QG":
            return Presentation(p.gens, p.relators, "QG is isomorphic to Gbar; Gbar presentation returned")
        return p
    if which == "EG":
        return extended_group(d)
    if which == "WG":
        return add_generator(wirtinger(d), "w")
    if which == "VG":
        return _vg(d)
    raise PresentationError(f"unknown group {which!r}")


def _vg(d: GaussDiagram) -> Presentation:
    p = reduced_group(d)
    gens = p.gens + ("s", "q")
    extra = (parse_word("s q s^-1 q^-1", gens), parse_word("v^-1 s q^-1", gens))
    return Presentation(gens, p.relators + extra)


# ---------------------------------------------------------------------------
# Tietze simplification


def tietze_simplify(p: Presentation, max_length: int = 2000) -> Presentation:
    """Eliminate generators that occur once in some relator.

    Relators are freely and cyclically reduced and trivial ones dropped.  A
    candidate elimination is skipped if it would push the total relator
    length past ``max_length``.  Free generators are kept.
    """
    gens = list(p.gens)
    alive = list(range(len(gens)))
    rels = [cyclic_reduce(r) for r in p.relators]
    rels = _dedupe([r for r in rels if r])
    while True:
        best = None
        for ri, r in enumerate(rels):
            counts: Dict[int, int] = {}
            for x in r:
                counts[abs(x) - 1] = counts.get(abs(x) - 1, 0) + 1
            for g, c in counts.items():
                if c != 1:
                    continue
                uses = sum(occurrences(s, g) for k, s in enumerate(rels) if k != ri)
                cost = (len(r) - 1) * uses
                key = (cost, len(r), ri, g)
                if best is None or key < best[0]:
                    best = (key, ri, g)
        if best is None:
            break
        _, ri, g = best
        r = rels[ri]
        k = next(i for i, x in enumerate(r) if abs(x) - 1 == g)
        rot = r[k:] + r[:k]
        rest = rot[1:]
        # g^e rest = 1
        image = inverse(rest) if rot[0] > 0 else rest
        new = []
        for i, s in enumerate(rels):
            if i == ri:
                continue
            s2 = cyclic_reduce(substitute_word(s, {g: image}))
            if s2:
                new.append(s2)
        total = sum(len(s) for s in new)
        if total > max_length:
            break
        rels = _dedupe(new)
        alive.remove(g)
    # renumber surviving generators
    remap = {g: i for i, g in enumerate(alive)}
    out = []
    for r in rels:
        out.append(tuple((remap[abs(x) - 1] + 1) * (1 if x > 0 else -1) for x in r))
    return Presentation(tuple(gens[g] for g in alive), tuple(out), p.note)


def _cyclic_key(r: Word) -> Word:
    best = None
    for w in (r, inverse(r)):
        for k in range(len(w)):
            c = w[k:] + w[:k]
            if best is None or c < best:
                best = c
    return best or ()


def _dedupe(rels: List[Word]) -> List[Word]:
    seen = set()
    out = []
    for r in rels:
        key = _cyclic_key(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


# ---------------------------------------------------------------------------
# permutations and homomorphism counting


class Permutation:
    """Bijection of ``{1..n}`` stored as a tuple of images (0-based internally).

    Products compose left to right: ``(p * q)(x) = q(p(x))``, matching the
    right action of automorphisms on words.
    """

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({[i + 1 for i in self.images]})"


class _SymmetricGroup:
    def __init__(self, n: int):
        self.n = n
        self.elements = list(permutations(range(n)))
        index = {p: i for i, p in enumerate(self.elements)}
        size = len(self.elements)
        self.mul = [[index[tuple(q[i] for i in p)] for q in self.elements] for p in self.elements]
        self.inv = [0] * size
        for i, p in enumerate(self.elements):
            inv = [0] * n
            for a, b in enumerate(p):
                inv[b] = a
            self.inv[i] = index[tuple(inv)]
        self.identity = index[tuple(range(n))]


_GROUPS: Dict[int, _SymmetricGroup] = {}


def symmetric_group(n: int) -> _SymmetricGroup:
    if n not in _GROUPS:
        _GROUPS[n] = _SymmetricGroup(n)
    return _GROUPS[n]


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("VKT_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise PresentationError(f"VKT_BUDGET must be an integer, got {raw!r}") from None
    return default


def _plan(p: Presentation):
    """Generator order, per-step completed relators, and per-step forcing relator."""
    n = p.n_gens
    rels = [r for r in p.relators if r]
    part = [sum(1 for r in rels if g in generators_in(r)) for g in range(n)]
    order: List[int] = []
    assigned = set()
    forcing: List[Optional[Tuple[Word, int]]] = []
    while len(order) < n:
        choice = None
        for r in rels:
            unknown = generators_in(r) - assigned
            if len(unknown) == 1:
                g = next(iter(unknown))
                if occurrences(r, g) == 1:
                    if choice is None or len(r) < len(choice[1]):
                        choice = (g, r)
        if choice is not None:
            g, r = choice
            forcing.append((r, g))
        else:
            rest = [g for g in range(n) if g not in assigned]
            g = max(rest, key=lambda x: (part[x], sum(1 for r in rels if x in generators_in(r) and generators_in(r) & assigned), -x))
            forcing.append(None)
        order.append(g)
        assigned.add(g)
    checks: List[List[Word]] = [[] for _ in range(n)]
    pos = {g: i for i, g in enumerate(order)}
    for r in rels:
        last = max(pos[g] for g in generators_in(r))
        checks[last].append(r)
    return order, checks, forcing


def hom_count(p: Presentation, n: int, budget: Optional[int] = None, max_degree: int = 6,
              simplify: bool = True) -> int:
    """Number of homomorphisms into the symmetric group S_n.

    Backtracks over generator images; a generator occurring once in a relator
    whose other generators are already assigned is solved for directly.
    """
    if n < 1 or n > max_degree:
        raise PresentationError(f"degree {n} outside 1..{max_degree}")
    if budget is None:
        budget = budget_from_env()
    if simplify:
        p = tietze_simplify(p)
    if not any(p.relators):
        return math.factorial(n) ** p.n_gens
    sg = symmetric_group(n)
    mul, inv = sg.mul, sg.inv
    size = len(sg.elements)
    ident = sg.identity
    order, checks, forcing = _plan(p)
    values = [ident] * p.n_gens
    visits = 0

    def evaluate(w: Word) -> int:
        acc = ident
        for x in w:
            v = values[x - 1] if x > 0 else inv[values[-x - 1]]
            acc = mul[acc][v]
        return acc

    def forced(r: Word, g: int) -> int:
        k = next(i for i, x in enumerate(r) if abs(x) - 1 == g)
        rot = r[k:] + r[:k]
        rest = evaluate(rot[1:])
        # g^e * rest = 1
        return inv[rest] if rot[0] > 0 else rest

    depth_total = len(order)
    count = 0

    def rec(depth: int):
        nonlocal visits, count
        if depth == depth_total:
            count += 1
            return
        g = order[depth]
        f = forcing[depth]
        candidates = (forced(*f),) if f is not None else range(size)
        for val in candidates:
            visits += 1
            if visits > budget:
                raise BudgetExceeded(f"hom_count exceeded budget of {budget} node visits")
            values[g] = val
            ok = True
            for r in checks[depth]:
                if evaluate(r) != ident:
                    ok = False
                    break
            if ok:
                rec(depth + 1)

    rec(0)
    return count


def count_elements_of_order_dividing(n: int, k: int) -> int:
    """Number of x in S_n with x^k = 1 (homomorphisms Z/k -> S_n)."""
    return hom_count(Presentation(("x",), (tuple([1] * k),)), n, simplify=False)


# ---------------------------------------------------------------------------
# abelianization


def exponent_matrix(p: Presentation) -> List[List[int]]:
    return [[exponent_sum(r, g) for g in range(p.n_gens)] for r in p.relators]


def smith_diagonal(matrix: List[List[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form, each dividing the next."""
    a = [list(r) for r in matrix if any(r)]
    if not a:
        return []
    rows, cols = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # divisibility of the remaining block
                bad = None
                for i in range(t + 1, rows):
                    for j in range(t + 1, cols):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # move the smallest entry of row/column t to the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, rows):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, cols):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(p: Presentation) -> List[int]:
    """Invariant factors: torsion divisors greater than 1, then a 0 per free summand."""
    diag = smith_diagonal(exponent_matrix(p))
    free = p.n_gens - len(diag)
    return [d for d in diag if d > 1] + [0] * free


# ---------------------------------------------------------------------------
# virtual braids


BraidLetter = Tuple[str, int, int]  # ("s", i, +-1) for sigma_i^+-1, ("t", i, 1) for tau_i

_BTOK = re.compile(r"\s*([stST])(\d+)(?:\^(-?1))?")


def parse_braid(text: str) -> List[BraidLetter]:
    """Tokens ``s<i>``, ``s<i>^-1`` (or ``S<i>``) and ``t<i>``."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos] in " ,":
            pos += 1
            continue
        m = _BTOK.match(text, pos)
        if not m:
            raise PresentationError(f"cannot parse braid at {text[pos:]!r}")
        kind, i, e = m.group(1), int(m.group(2)), m.group(3)
        exp = -1 if (kind == "S" or e == "-1") else 1
        if kind in "tT":
            out.append(("t", i, 1))
        else:
            out.append(("s", i, exp))
        pos = m.end()
    return out


def braid_generator_action(k: int, gen: BraidLetter, w: Word, barred: bool = False) -> Word:
    """Apply the automorphism of one braid letter to a word.

    Unbarred words use generators ``x_1..x_k, s, q`` (indices ``0..k+1``);
    barred words use ``xbar_1..xbar_k, v, s``.  In the barred basis ``v`` plays
    the role of ``s`` for crossings and ``tau_i`` is a plain swap.
    """
    kind, i, e = gen
    if not 1 <= i <= k - 1:
        raise PresentationError(f"braid index {i} out of range for {k} strands")
    xi, xj = (letter(i - 1),), (letter(i),)
    s = (letter(k),)  # v in the barred basis
    q = (letter(k + 1),)
    if kind == "s":
        if e > 0:
            images = {i - 1: conj(s, xj), i: concat(xj, xi, s, inverse(xj), inverse(s))}
        else:
            images = {i: conj(inverse(s), xi), i - 1: concat(inverse(s), inverse(xi), s, xj, xi)}
    elif kind == "t":
        if barred:
            images = {i - 1: xj, i: xi}
        else:
            images = {i - 1: conj(q, xj), i: conj(inverse(q), xi)}
    else:
        raise PresentationError(f"bad braid letter {gen!r}")
    return substitute_word(w, images)


def braid_action(k: int, braid: Sequence[BraidLetter], w: Word, barred: bool = False) -> Word:
    for gen in braid:
        w = braid_generator_action(k, gen, w, barred)
    return w


def braid_closure_vg(k: int, braid: Sequence[BraidLetter] | str) -> Presentation:
    """``< xbar_1..xbar_k, v, s | xbar_j = (xbar_j)beta, [v, s] >``."""
    if isinstance(braid, str):
        braid = parse_braid(braid)
    gens = tuple(f"x{j}" for j in range(1, k + 1)) + ("v", "s")
    rels = []
    for j in range(k):
        x = (letter(j),)
        rels.append(concat(inverse(x), braid_action(k, braid, x, barred=True)))
    rels.append(commutator((letter(k),), (letter(k + 1),)))
    return Presentation(gens, tuple(rels))


def braid_closure_diagram(k: int, braid: Sequence[BraidLetter] | str) -> GaussDiagram:
    """Gauss diagram of the closure.

    ``sigma_i`` sends the over strand from position i+1 to i with sign +1;
    ``sigma_i^-1`` sends it from i to i+1 with sign -1; ``tau_i`` swaps the
    strands through a virtual crossing.
    """
    if isinstance(braid, str):
        braid = parse_braid(braid)
    tokens: List[List[Tuple[str, int]]] = [[] for _ in range(k)]
    at = list(range(k))  # at[pos] = strand currently at position pos
    signs = {}
    cid = 0
    for kind, i, e in braid:
        if not 1 <= i <= k - 1:
            raise PresentationError(f"braid index {i} out of range for {k} strands")
        a, b = at[i - 1], at[i]
        if kind == "s":
            cid += 1
            signs[cid] = e
            over, under = (b, a) if e > 0 else (a, b)
            tokens[over].append(("O", cid))
            tokens[under].append(("U", cid))
        at[i - 1], at[i] = b, a
    # strand starting at position j ends at position end[j]
    end = {at[pos]: pos for pos in range(k)}
    seen = set()
    circles = []
    for start in range(k):
        if start in seen:
            continue
        circ = []
        j = start
        while j not in seen:
            seen.add(j)
            circ.extend(tokens[j])
            j = end[j]
        circles.append(circ)
    return GaussDiagram(circles, signs)
