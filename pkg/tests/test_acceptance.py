"""Acceptance criteria, one group of tests per criterion.

The terminal summary prints one PASS/FAIL/SKIP line per criterion.
"""

import os
import random

import pytest

from vkt.alexander import (
    AbelianizationSpec,
    delta,
    elementary_ideal,
    fox_derivative,
    gks,
    gks_direct,
    hbar,
    knot_determinant,
    meridional_spec,
    mod_p_obstruction,
    multiplicativity_check,
)
from vkt.diagram import carter_genus, connected_sum, parse_gauss, read_table, to_code, vertical_mirror
from vkt.fixtures import BUILTIN, CLASSICAL, FIGURE_EIGHT, GRANNY, SQUARE, TREFOIL, VIRTUAL_TREFOIL, random_diagram, random_numberable
from vkt.moves import apply_move, enumerate_moves, random_walk
from vkt.parity import alexander_numbering, check_numbering, chord_indices, is_numberable, parity, stable_project
from vkt.polyring import LaurentPoly, PolyMatrix, det, det_cofactor, gcd, parse_poly
from vkt.presentations import group, hom_count, presentation

from oracles import all_polys, gcd_by_enumeration

T = ("t",)
TV = ("t", "v")
ST = ("s", "t")
MODS = (0, 2, 3, 4, 5)
DATA = os.path.join(os.path.dirname(__file__), "data")


def P(text, variables=T):
    return parse_poly(text, variables).unit_normal()


def acceptance(n):
    return pytest.mark.acceptance(n)


# ---------------------------------------------------------------------------
# 1


@acceptance(1)
def test_c1_virtual_trefoil_indices():
    assert sorted(chord_indices(VIRTUAL_TREFOIL).values()) == [-1, 1]


@acceptance(1)
def test_c1_classical_indices_vanish():
    for name in CLASSICAL:
        assert all(v == 0 for v in chord_indices(BUILTIN[name]).values()), name


@acceptance(1)
def test_c1_numberable_agrees_with_solver():
    rng = random.Random(1)
    seen = {True: 0, False: 0}
    for k in range(1000):
        d = random_diagram(rng, rng.randint(0, 7))
        p = MODS[k % len(MODS)]
        lam = alexander_numbering(d, p)
        flag = is_numberable(d, p)
        assert (lam is not None) == flag, (to_code(d), p)
        if lam is not None:
            assert check_numbering(d, lam, p)
        seen[flag] += 1
    assert seen[True] > 50 and seen[False] > 50


# ---------------------------------------------------------------------------
# 2

Q441 = "v a^-1 v a^-1 (v a v a^-1 v a)^2"
GBAR441 = (
    "v a^-1 v^-3 a^-1 v^2 a^-1 v^-2 a v^3 a (v^-1 a^-1)^2 "
    "v^2 a v^-2 (a v)^2 a^-1 v^-3 a^-1 v^2 a v^-2 a v^2"
)


@acceptance(2)
def test_c2_free_product_with_z2():
    assert hom_count(presentation(["a", "v"], "v^2"), 3) == 24


@acceptance(2)
def test_c2_quotient_441():
    assert hom_count(presentation(["a", "v"], "v^2", Q441), 3) == 18


@acceptance(2)
def test_c2_quotient_from_reduced_group_441():
    # the reduced group with v^2 added agrees with the printed quotient
    q = presentation(["a", "v"], GBAR441, "v^2")
    assert hom_count(q, 3) == 18
    assert hom_count(q, 4) == hom_count(presentation(["a", "v"], "v^2", Q441), 4)


# ---------------------------------------------------------------------------
# 3


@acceptance(3)
@pytest.mark.parametrize(
    "knot,poly",
    [
        (TREFOIL, "t^2-t+1"),
        (FIGURE_EIGHT, "t^2-3t+1"),
        (GRANNY, "(t^2-t+1)^2"),
        (SQUARE, "(t^2-t+1)^2"),
    ],
    ids=["3_1", "4_1", "3_1#3_1", "3_1#3_1*"],
)
def test_c3_classical_rows(knot, poly):
    assert delta(knot).unit_normal() == P(poly)
    assert carter_genus(knot) == 0


# ---------------------------------------------------------------------------
# 4


@acceptance(4)
def test_c4_structural_identities():
    rng = random.Random(4)
    s, t = LaurentPoly.var("s", ST), LaurentPoly.var("t", ST)
    counts = {p: 0 for p in (0, 2, 3, 5)}
    for _ in range(500):
        d = random_diagram(rng, rng.randint(0, 6))
        sub = hbar(d).substitute({"t": s * t, "v": s}, ST)
        assert gks_direct(d) == sub.unit_normal()
        p = group(d, "G")
        assert elementary_ideal(p, meridional_spec(p), 0).gcd() == LaurentPoly.zero(T)
        assert abs(delta(d).evaluate(1)) == 1
        if is_numberable(d, 0):
            counts[0] += 1
            assert hbar(d) == LaurentPoly.zero(TV)
        for q in (2, 3, 5):
            if is_numberable(d, q):
                counts[q] += 1
                r = mod_p_obstruction(d, q)
                assert r.hbar_vanishes_at_zeta and r.phi_divides_gks
    assert all(c > 0 for c in counts.values())


# ---------------------------------------------------------------------------
# 5


def _invariants(d):
    return (
        hbar(d),
        delta(d),
        knot_determinant(d),
        hom_count(group(d, "G"), 3),
        hom_count(group(d, "Gbar"), 3),
    )


def _walk_pairs():
    rng = random.Random(5)
    for _ in range(200):
        d = random_diagram(rng, rng.randint(0, 5))
        e, _ = random_walk(d, 10, rng)
        yield d, e


@acceptance(5)
def test_c5_invariants_under_random_walks():
    for d, e in _walk_pairs():
        assert _invariants(d) == _invariants(e), (to_code(d), to_code(e))


@acceptance(5)
def test_c5_stable_projection_invariants_under_walks():
    # the stable projection is well defined up to moves
    for d, e in list(_walk_pairs())[:100]:
        for p in (0, 2):
            a, b = stable_project(d, p)[0], stable_project(e, p)[0]
            assert (hbar(a), delta(a), hom_count(group(a, "G"), 3)) == (hbar(b), delta(b), hom_count(group(b, "G"), 3))


@acceptance(5)
@pytest.mark.xfail(
    strict=True,
    reason="the projection level of a diagram is not preserved by moves: an R2 move on the "
    "unknot gives a diagram with chord indices +1, -1 and level 1",
)
def test_c5_level_unchanged():
    for d, e in _walk_pairs():
        for p in (0, 2):
            assert stable_project(d, p)[1] == stable_project(e, p)[1], (to_code(d), to_code(e))


@acceptance(5)
def test_c5_welded_invariance_of_delta():
    rng = random.Random(55)
    applied = 0
    for _ in range(200):
        d = random_diagram(rng, rng.randint(2, 6))
        e, moves = random_walk(d, 5, rng, families=("F1",))
        applied += len(moves)
        assert delta(d) == delta(e) and knot_determinant(d) == knot_determinant(e)
    assert applied > 100


# ---------------------------------------------------------------------------
# 6


def _r3_chords(d, m):
    ids = set()
    for ci, pos in m.params:
        circ = d.circles[ci]
        ids.add(circ[pos][1])
        ids.add(circ[(pos + 1) % len(circ)][1])
    return ids


@acceptance(6)
def test_c6_parity_axioms():
    rng = random.Random(6)
    checked = {"R1": 0, "R2": 0, "R3": 0}
    for _ in range(200):
        d = random_diagram(rng, rng.randint(0, 5))
        for p in (0, 2, 3):
            f = parity(d, p).values
            for m in enumerate_moves(d, "R1-remove"):
                assert f[m.params[0]] == 0
                checked["R1"] += 1
            for m in enumerate_moves(d, "R2-remove"):
                a, b = m.params
                assert f[a] == f[b]
                checked["R2"] += 1
            for m in enumerate_moves(d, "R3"):
                odd = sum(f[c] for c in _r3_chords(d, m))
                assert odd != 1
                checked["R3"] += 1
        for kind in ("R1-add", "R2-add"):
            moves = enumerate_moves(d, kind)
            for m in moves if kind == "R1-add" else rng.sample(moves, min(len(moves), 60)):
                e = apply_move(d, m)
                new = sorted(set(e.signs) - set(d.signs))
                for p in (0, 2, 3):
                    g = parity(e, p).values
                    if kind == "R1-add":
                        assert g[new[0]] == 0
                    else:
                        assert g[new[0]] == g[new[1]]
                checked[kind[:2]] += 1
    assert all(v > 0 for v in checked.values()), checked


# ---------------------------------------------------------------------------
# 7


@acceptance(7)
def test_c7_determinant_odd():
    rng = random.Random(7)
    seen = 0
    for _ in range(300):
        d = random_numberable(rng, rng.randint(1, 7), 0)
        assert d.n_components == 1 and is_numberable(d, 0)
        assert knot_determinant(d) % 2 == 1, to_code(d)
        seen += d.n_chords > 0
    assert seen > 100


# ---------------------------------------------------------------------------
# 8


@acceptance(8)
def test_c8_trefoil_figure_eight():
    s = connected_sum(TREFOIL, 0, FIGURE_EIGHT, 0)
    assert delta(s).unit_normal() == (P("t^2-t+1") * P("t^2-3t+1")).unit_normal()


@acceptance(8)
def test_c8_random_pairs():
    rng = random.Random(8)
    for _ in range(20):
        d1 = random_numberable(rng, rng.randint(2, 6))
        d2 = random_numberable(rng, rng.randint(2, 6))
        c1 = rng.randrange(max(1, 2 * d1.n_chords))
        c2 = rng.randrange(max(1, 2 * d2.n_chords))
        assert multiplicativity_check(d1, d2, c1, c2), (to_code(d1), to_code(d2))


# ---------------------------------------------------------------------------
# 9 (conditional on a user-supplied table file)

GREEN = os.environ.get("VKT_GREEN_TABLE")
needs_table = pytest.mark.skipif(
    not (GREEN and os.path.isfile(GREEN)),
    reason="set VKT_GREEN_TABLE to a '<name> <code>' table file to run the table reproduction",
)

TABLE_COUNTS = {  # crossings: (knots, mod2, mod3, mod4, mod5, AC)
    3: (7, 3, 1, 1, 1, 1),
    4: (108, 10, 6, 3, 3, 3),
    5: (2448, 104, 21, 17, 11, 11),
    6: (90235, 1557, 192, 81, 71, 61),
}


def _green():
    recs, errs = read_table(GREEN)
    assert not errs, errs[:3]
    return {r.name: parse_gauss(r.code) for r in recs}


@acceptance(9)
@needs_table
def test_c9_counts():
    from collections import Counter

    knots = _green()
    total, numb = Counter(), {p: Counter() for p in MODS}
    for d in knots.values():
        n = d.n_chords
        if n not in TABLE_COUNTS:
            continue
        total[n] += 1
        for p in MODS:
            numb[p][n] += is_numberable(d, p)
    for n, (k, m2, m3, m4, m5, ac) in TABLE_COUNTS.items():
        assert (total[n], numb[2][n], numb[3][n], numb[4][n], numb[5][n], numb[0][n]) == (k, m2, m3, m4, m5, ac), n


@acceptance(9)
@needs_table
def test_c9_almost_classical_rows():
    knots = _green()
    with open(os.path.join(DATA, "ac_table.txt")) as fh:
        rows = [line.split() for line in fh if line.strip() and not line.startswith("#")]
    assert len(rows) == 76
    for name, genus, poly in rows:
        d = knots[name]
        assert delta(d).unit_normal() == P(poly), name
        assert carter_genus(d) == int(genus), name


@acceptance(9)
@needs_table
def test_c9_named_examples():
    knots = _green()
    s, t = LaurentPoly.var("s", ST), LaurentPoly.var("t", ST)
    base = (s - 1) * (t - 1) * (s * t - 1)
    g491 = base * (s * s * t * t + s * t * t + s * s * t + t * t + 2 * s * t + s * s + t + s + 1)
    g492 = base * (s * s + s + 1) * (t * t + t + 1)
    assert gks(knots["4.91"]) == g491.unit_normal()
    assert gks(knots["4.92"]) == g492.unit_normal()
    assert is_numberable(knots["4.92"], 3)
    assert stable_project(knots["6.3555"], 0)[1] == 3
    k = knots["6.73053"]
    assert hom_count(group(k, "G"), 4) != hom_count(group(vertical_mirror(k), "G"), 4)


# ---------------------------------------------------------------------------
# 10


@acceptance(10)
def test_c10_det_vs_cofactor():
    rng = random.Random(10)
    for _ in range(100):
        m = PolyMatrix(
            [
                [LaurentPoly({(rng.randint(-2, 2), rng.randint(-1, 1)): rng.randint(-3, 3) for _ in range(3)}, TV) for _ in range(4)]
                for _ in range(4)
            ],
            4,
            TV,
        )
        assert det(m) == det_cofactor(m)


@acceptance(10)
def test_c10_fox_fundamental_identity():
    rng = random.Random(11)
    p = presentation(["a", "b", "c"])
    xyz = ("x", "y", "z")
    spec = AbelianizationSpec.from_map(p, {"a": "x", "b": "y", "c": "z"}, xyz)
    for _ in range(100):
        w = tuple(rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 15)))
        rhs = LaurentPoly.zero(xyz)
        for g in range(3):
            rhs = rhs + fox_derivative(w, g, spec) * (spec.images[g] - 1)
        assert rhs == spec.image(w) - 1


@acceptance(10)
def test_c10_gcd_vs_divisor_enumeration():
    small = list(all_polys(1, 1))
    rng = random.Random(12)
    for _ in range(60):
        a, b, c = (rng.choice(small) for _ in range(3))
        f, g = a * c, b * c
        assert gcd(f, g).unit_normal() == gcd_by_enumeration(f, g, 2, 2), (f, g)
