"""Fox calculus and the Alexander-type polynomial invariants of Gauss diagrams.

``hbar``   zeroth polynomial of the reduced group, in ``Z[t^±1, v^±1]``;
           the determinant of the square block of arc columns.
``gks``    ``G(s, t) = hbar(st, s)``.
``delta``  gcd of the first elementary ideal of the knot group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .diagram import GaussDiagram, connected_sum, crossing_switch, set_sign, smooth
from .parity import PreconditionError, is_numberable
from .polyring import (
    LaurentPoly,
    PolyMatrix,
    cyclotomic_eval,
    cyclotomic_poly,
    det,
    gcd,
    gcd_list,
)
from .presentations import Presentation, Word, group

TV = ("t", "v")
ST = ("s", "t")


# ---------------------------------------------------------------------------
# Fox calculus


@dataclass(frozen=True)
class AbelianizationSpec:
    """Images of the generators as units of a Laurent ring."""

    variables: Tuple[str, ...]
    images: Tuple[LaurentPoly, ...]

    def __post_init__(self):
        for im in self.images:
            if not im.is_unit():
                raise ValueError("abelianization images must be units")

    @classmethod
    def from_map(cls, p: Presentation, mapping: Mapping[str, str | LaurentPoly], variables) -> "AbelianizationSpec":
        variables = tuple(variables)
        images = []
        for g in p.gens:
            if g not in mapping:
                raise ValueError(f"generator {g!r} has no image")
            im = mapping[g]
            if isinstance(im, str):
                im = LaurentPoly.var(im, variables)
            images.append(im)
        return cls(variables, tuple(images))

    def image(self, w: Word) -> LaurentPoly:
        acc = LaurentPoly.one(self.variables)
        for x in w:
            im = self.images[abs(x) - 1]
            acc = acc * (im if x > 0 else im.unit_inverse())
        return acc


def meridional_spec(p: Presentation, variables: Sequence[str] = ("t",)) -> AbelianizationSpec:
    """Generators named like a variable map to it; every other generator maps to ``t``."""
    variables = tuple(variables)
    return AbelianizationSpec.from_map(p, {g: (g if g in variables else "t") for g in p.gens}, variables)


def fox_derivative(w: Word, gen: int, spec: AbelianizationSpec) -> LaurentPoly:
    """Abelianized Fox derivative of ``w`` by generator index ``gen``."""
    if not 0 <= gen < len(spec.images):
        raise ValueError(f"unknown generator index {gen}")
    prefix = LaurentPoly.one(spec.variables)
    total = LaurentPoly.zero(spec.variables)
    for x in w:
        g = abs(x) - 1
        im = spec.images[g]
        if x > 0:
            if g == gen:
                total = total + prefix
            prefix = prefix * im
        else:
            prefix = prefix * im.unit_inverse()
            if g == gen:
                total = total - prefix
    return total


def alexander_matrix(p: Presentation, spec: AbelianizationSpec) -> PolyMatrix:
    """Rows are relators, columns generators."""
    rows = [[fox_derivative(r, g, spec) for g in range(p.n_gens)] for r in p.relators]
    return PolyMatrix(rows, p.n_gens, spec.variables)


# ---------------------------------------------------------------------------
# elementary ideals


@dataclass(frozen=True)
class IdealGens:
    k: int
    generators: Tuple[LaurentPoly, ...]
    variables: Tuple[str, ...] = ("t",)

    def is_zero(self) -> bool:
        return not self.generators

    def is_whole_ring(self) -> bool:
        return any(g.is_unit() for g in self.generators)

    def gcd(self) -> LaurentPoly:
        return gcd_list(self.generators, self.variables)


def _minor_gens(m: PolyMatrix, size: int) -> List[LaurentPoly]:
    if size <= 0:
        return [LaurentPoly.one(m.vars)]
    out = []
    for g in m.minors(size):
        if g.terms:
            out.append(g)
    return out


def elementary_ideal(p: Presentation, spec: AbelianizationSpec, k: int, reduce: bool = False) -> IdealGens:
    """``E_k``: minors of size (generator count - k) of the Alexander matrix.

    With ``reduce=True`` unit pivots are eliminated first; the ideal is the
    same but the generator list is much shorter.
    """
    if not 0 <= k <= p.n_gens:
        raise ValueError(f"k must be in 0..{p.n_gens}")
    m = alexander_matrix(p, spec)
    size = p.n_gens - k
    if reduce:
        m, size = _unit_reduced(m, size)
    return IdealGens(k, tuple(_minor_gens(m, size)), spec.variables)


def _unit_reduced(m: PolyMatrix, size: int) -> Tuple[PolyMatrix, int]:
    reduced, _ = m.reduce_units()
    # each pivot removes one row and one column
    removed = m.nrows - reduced.nrows
    rows = [r for r in reduced.rows if any(x.terms for x in r)]
    ncols = m.ncols - removed
    return PolyMatrix(rows, ncols, m.vars), size - removed


def ideal_gcd(m: PolyMatrix, size: int) -> LaurentPoly:
    """gcd of all size-``size`` minors after unit-pivot reduction."""
    m, size = _unit_reduced(m, size)
    if size <= 0:
        return LaurentPoly.one(m.vars)
    if size > min(m.nrows, m.ncols):
        return LaurentPoly.zero(m.vars)
    g = LaurentPoly.zero(m.vars)
    for minor in m.minors(size):
        if minor.terms:
            g = minor.unit_normal() if not g.terms else gcd(g, minor)
            if g.is_constant() and g.constant_value() == 1:
                break
    return g


# ---------------------------------------------------------------------------
# H-bar and G(s, t)


def gbar_matrix(d: GaussDiagram) -> Tuple[PolyMatrix, int]:
    """Alexander matrix of the reduced group (a -> t, v -> v) and the v column index."""
    p = group(d, "Gbar")
    spec = meridional_spec(p, TV)
    return alexander_matrix(p, spec), p.index("v")


@lru_cache(maxsize=4096)
def _hbar_raw(d: GaussDiagram) -> LaurentPoly:
    m, vcol = gbar_matrix(d)
    a = m.drop_columns([vcol])
    if a.nrows != a.ncols or a.nrows == 0:
        # more arc generators than relators (crossingless circles): E_0 = (0)
        return LaurentPoly.zero(TV)
    return det(a)


def hbar(d: GaussDiagram) -> LaurentPoly:
    """Unit-normalized determinant of the arc block of the reduced group's matrix."""
    return _hbar_raw(d).unit_normal()


def hbar_minor_gcd(d: GaussDiagram) -> LaurentPoly:
    """gcd of the maximal minors of the full matrix ``[A | dr/dv]``.

    By the fundamental identity this equals ``hbar / (v - 1)`` up to units;
    used as a cross-check.
    """
    m, _ = gbar_matrix(d)
    # E_1 uses minors of size (generators - 1); with fewer relators it is (0)
    size = m.ncols - 1
    if m.nrows < size or m.nrows == 0:
        return LaurentPoly.zero(TV)
    return ideal_gcd(m, size)


def gks(d: GaussDiagram) -> LaurentPoly:
    """``G(s, t) = hbar(st, s)``, unit-normalized."""
    s = LaurentPoly.var("s", ST)
    t = LaurentPoly.var("t", ST)
    return _hbar_raw(d).substitute({"t": s * t, "v": s}, ST).unit_normal()


def gks_direct(d: GaussDiagram) -> LaurentPoly:
    """``G(s, t)`` from the extended group's arc block (a -> t, s -> s).

    Independent of ``hbar``: different generators, different relators.
    """
    p = group(d, "EG")
    spec = meridional_spec(p, ST)
    m = alexander_matrix(p, spec).drop_columns([p.index("s")])
    if m.nrows != m.ncols or m.nrows == 0:
        return LaurentPoly.zero(ST)
    return det(m).unit_normal()


# ---------------------------------------------------------------------------
# Delta


def knot_group_matrix(d: GaussDiagram) -> PolyMatrix:
    p = group(d, "G")
    spec = meridional_spec(p)
    return alexander_matrix(p, spec)


@lru_cache(maxsize=4096)
def _delta(d: GaussDiagram) -> LaurentPoly:
    m = knot_group_matrix(d)
    g = ideal_gcd(m, m.ncols - 1)
    if not g.terms:
        return g
    if d.n_components == 1:
        val = g.evaluate(1)
        if val == -1:
            g = -g
    return g


def delta(d: GaussDiagram) -> LaurentPoly:
    """gcd of ``E_1`` of the knot group.

    Unit-normalized (lowest power ``t^0``); for knots the sign is then chosen
    so that ``delta(1) = 1``.
    """
    return _delta(d)


def delta_interpretation(d: GaussDiagram) -> str:
    """Whether ``delta`` is the Alexander polynomial in the almost classical sense."""
    if d.n_components == 1 and is_numberable(d, 0):
        return "almost classical: delta is the Alexander polynomial"
    return "not known to be almost classical: delta is the E1 gcd (a welded invariant)"


def knot_determinant(d: GaussDiagram) -> int:
    return abs(int(delta(d).evaluate(-1)))


# ---------------------------------------------------------------------------
# mod p obstructions


@dataclass(frozen=True)
class ModPReport:
    p: int
    hbar_vanishes_at_zeta: bool
    phi_divides_gks: bool


def mod_p_obstruction(d: GaussDiagram, p: int) -> ModPReport:
    """Both vanishing checks implied by mod p almost classicality."""
    if p < 2:
        raise PreconditionError("p must be at least 2")
    h = _hbar_raw(d)
    vanish = cyclotomic_eval(h, p, "v").is_zero()
    g = gks(d)
    phi = cyclotomic_poly(p, "s", ST)
    divides = (not g.terms) or phi.divides(g)
    return ModPReport(p, vanish, divides)


# ---------------------------------------------------------------------------
# genus bound, multiplicativity, skein


def genus_lower_bound(d: GaussDiagram) -> Fraction:
    """``(width(delta) - components + 1) / 2``, clamped at 0."""
    dl = delta(d)
    w = dl.width("t") if dl.terms else 0
    return max(Fraction(0), Fraction(w - d.n_components + 1, 2))


def multiplicativity_check(d1: GaussDiagram, d2: GaussDiagram, cut1: int = 0, cut2: int = 0) -> bool:
    for d in (d1, d2):
        if d.n_components != 1 or not is_numberable(d, 0):
            raise PreconditionError("multiplicativity needs almost classical knot diagrams")
    s = connected_sum(d1, cut1, d2, cut2)
    return delta(s).unit_normal() == (delta(d1) * delta(d2)).unit_normal()


@dataclass
class SkeinReport:
    chord: int
    precondition: bool
    holds: bool
    units: Optional[Tuple[str, str, str]] = None
    deltas: Dict[str, str] = field(default_factory=dict)
    note: str = ""


def _in_x(f: LaurentPoly) -> LaurentPoly:
    """Rewrite a polynomial in t as one in x with t = x^2."""
    return LaurentPoly({(2 * e[0],): c for e, c in f.with_vars(("t",)).terms.items()}, ("x",))


def skein_check(d: GaussDiagram, chord_id: int, bound: int = 6) -> SkeinReport:
    """Search units for ``D+ - u2 D- = (x - x^-1) u3 D0`` with ``t = x^2``.

    ``u2, u3`` range over ``±x^k`` with ``|k| <= 2 * bound``.
    """
    if d.n_components != 1:
        return SkeinReport(chord_id, False, False, note="skein triple needs a knot diagram")
    kp = set_sign(d, chord_id, 1)
    km = crossing_switch(kp, chord_id)
    k0 = smooth(kp, chord_id)
    dp, dm, d0 = delta(kp), delta(km), delta(k0)
    deltas = {"plus": str(dp), "minus": str(dm), "zero": str(d0)}
    if not is_numberable(kp, 0):
        return SkeinReport(chord_id, False, False, deltas=deltas, note="triple is not Alexander numberable")
    xp, xm, x0 = _in_x(dp), _in_x(dm), _in_x(d0)
    x = LaurentPoly.var("x")
    factor = (x - x ** -1) * x0
    for k2 in range(-2 * bound, 2 * bound + 1):
        for c2 in (1, -1):
            u2 = LaurentPoly.monomial([k2], c2, ("x",))
            lhs = xp - u2 * xm
            if not factor.terms:
                if not lhs.terms:
                    return SkeinReport(chord_id, True, True, ("1", str(u2), "1"), deltas)
                continue
            q = lhs.try_div(factor)
            if q is not None and q.is_unit():
                (e,), = q.terms
                if abs(e) <= 2 * bound:
                    return SkeinReport(chord_id, True, True, ("1", str(u2), str(q)), deltas)
    return SkeinReport(chord_id, True, False, deltas=deltas, note="no units within bound")
