import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vkt.diagram import parse_gauss, to_code, vertical_mirror
from vkt.fixtures import BUILTIN, CLASSICAL, FIGURE_EIGHT, STEVEDORE, TREFOIL, VIRTUAL_TREFOIL, random_diagram, random_numberable
from vkt.moves import random_walk
from vkt.presentations import (
    BudgetExceeded,
    Permutation,
    PresentationError,
    abelianization,
    add_generator,
    braid_action,
    braid_closure_diagram,
    braid_closure_vg,
    count_elements_of_order_dividing,
    cyclic_reduce,
    format_word,
    free_product,
    free_reduce,
    group,
    hom_count,
    inverse,
    kill_generator,
    parse_braid,
    parse_presentation,
    parse_word,
    presentation,
    quotient,
    smith_diagonal,
    substitute_word,
    symmetric_group,
    tietze_simplify,
)

from oracles import brute_hom_count
from strategies import diagrams, words

AB = ["a", "b"]


class TestWords:
    @given(words(3))
    def test_free_reduce_idempotent(self, w):
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert all(x != -y for x, y in zip(r, r[1:]))

    @given(words(3))
    def test_inverse(self, w):
        assert free_reduce(w + inverse(w)) == ()

    @given(words(2))
    def test_format_parse_roundtrip(self, w):
        w = free_reduce(w)
        assert parse_word(format_word(w, AB), AB) == w

    def test_parse_forms(self):
        assert parse_word("(ab)^2 a^-1", AB) == (1, 2, 1, 2, -1)
        assert parse_word("1", AB) == ()
        assert parse_word("a^-3", AB) == (-1, -1, -1)
        with pytest.raises(PresentationError):
            parse_word("ac", AB)

    def test_cyclic_reduce(self):
        assert cyclic_reduce((1, 2, -1)) == (2,)

    def test_substitute(self):
        assert substitute_word((1, -2), {0: (2, 2), 1: (1,)}) == (2, 2, -1)


class TestPresentationFormat:
    def test_roundtrip(self):
        p = presentation(AB, "aba^-1b^-1", "a^3")
        assert parse_presentation(p.to_text()).relators == p.relators

    def test_errors(self):
        with pytest.raises(PresentationError):
            parse_presentation("rel: ab\n")
        with pytest.raises(PresentationError):
            presentation(["a", "a"])

    def test_operations(self):
        p = presentation(["a"])
        q = add_generator(p, "v", "v^2")
        assert q.gens == ("a", "v")
        assert kill_generator(q, "v").gens == ("a",)
        assert free_product(p, p).n_gens == 2
        assert len(quotient(q, "a^2").relators) == 2


class TestHomCount:
    def test_small_groups(self):
        assert hom_count(presentation(["a"]), 3) == 6
        assert hom_count(presentation(["a", "v"], "v^2"), 3) == 24
        assert hom_count(presentation(AB, "aba^-1b^-1"), 3) == 18
        assert hom_count(presentation([]), 4) == 1

    @given(st.lists(words(2, 6), max_size=2), st.integers(2, 4))
    def test_matches_brute_force(self, rels, n):
        p = presentation(AB)
        p = type(p)(p.gens, tuple(rels))
        assert hom_count(p, n) == brute_hom_count(p.gens, p.relators, n)
        assert hom_count(p, n, simplify=False) == brute_hom_count(p.gens, p.relators, n)

    def test_trefoil_and_figure_eight(self):
        # surjections onto S3 plus abelian ones: 6 + 12 for the trefoil
        assert hom_count(group(TREFOIL, "G"), 3) == 12
        assert hom_count(group(FIGURE_EIGHT, "G"), 3) == 6

    def test_budget(self, monkeypatch):
        with pytest.raises(BudgetExceeded):
            hom_count(group(STEVEDORE, "Gbar"), 5, budget=10, simplify=False)
        monkeypatch.setenv("VKT_BUDGET", "5")
        with pytest.raises(BudgetExceeded):
            hom_count(group(STEVEDORE, "Gbar"), 5, simplify=False)

    def test_degree_cap(self):
        with pytest.raises(ValueError):
            hom_count(presentation(["a"]), 9)

    def test_elements_of_order(self):
        assert count_elements_of_order_dividing(3, 2) == 4
        assert count_elements_of_order_dividing(4, 2) == 10
        assert count_elements_of_order_dividing(4, 1) == 1

    def test_symmetric_group(self):
        g = symmetric_group(4)
        assert len(g.elements) == 24
        p = Permutation.from_cycles(3, (1, 2, 3))
        assert p * p * p == Permutation.identity(3)


class TestTietze:
    @given(diagrams(5), st.sampled_from(["G", "Gbar", "EG"]))
    def test_preserves_counts(self, d, which):
        p = group(d, which)
        s = tietze_simplify(p)
        assert s.n_gens <= p.n_gens
        assert hom_count(s, 3, simplify=False) == hom_count(p, 3, simplify=False)

    def test_trefoil_two_generators(self):
        assert tietze_simplify(group(TREFOIL, "G")).n_gens <= 2


class TestAbelianization:
    def test_smith(self):
        assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
        assert smith_diagonal([[0, 0]]) == []

    @pytest.mark.parametrize("name", CLASSICAL)
    def test_knot_groups_abelianize_to_z(self, name):
        assert abelianization(group(BUILTIN[name], "G")) == [0]

    @given(diagrams(6))
    def test_virtual_knot_groups(self, d):
        assert abelianization(group(d, "G")) == [0]
        assert abelianization(group(d, "Gbar")) == [0, 0]


class TestDiagramGroups:
    def test_shapes(self):
        d = VIRTUAL_TREFOIL
        assert group(d, "G").n_gens == 2
        assert group(d, "WG").n_gens == 3
        assert "v" in group(d, "Gbar").gens and "s" in group(d, "EG").gens
        assert group(d, "QG").note
        with pytest.raises(ValueError):
            group(d, "XG")

    def test_killing_v_gives_knot_group(self):
        rng = random.Random(11)
        for _ in range(15):
            d, _ = random_walk(parse_gauss(""), 8, rng, max_crossings=5)
            gb = kill_generator(group(d, "Gbar"), "v")
            assert hom_count(gb, 4) == hom_count(group(d, "G"), 4)

    def test_mod_p_quotient(self):
        # for mod p numberable diagrams, Gbar/<v^p> is G free product Z/p
        rng = random.Random(2)
        for _ in range(10):
            for p in (2, 3):
                d = random_numberable(rng, rng.randint(3, 6), p)
                q = quotient(group(d, "Gbar"), "v^%d" % p)
                for n in (3, 4):
                    want = hom_count(group(d, "G"), n) * count_elements_of_order_dividing(n, p)
                    assert hom_count(q, n) == want

    def test_twin_property_for_classical(self):
        for name in ("3_1", "4_1", "5_2"):
            d = BUILTIN[name]
            assert hom_count(group(d, "G"), 4) == hom_count(group(vertical_mirror(d), "G"), 4)


class TestBraids:
    def test_parse(self):
        assert parse_braid("s1 S2 t1 s1^-1") == [("s", 1, 1), ("s", 2, -1), ("t", 1, 1), ("s", 1, -1)]
        with pytest.raises(PresentationError):
            parse_braid("x1")

    def test_virtual_trefoil_closure(self):
        assert to_code(braid_closure_diagram(2, "s1 s1 t1")) == to_code(VIRTUAL_TREFOIL)
        # the closure of s1 t1 is a two-component link
        assert braid_closure_diagram(2, "s1 t1").n_components == 2

    def test_trefoil_closure(self):
        d = braid_closure_diagram(2, "s1 s1 s1")
        assert d.n_components == 1 and to_code(d) == to_code(TREFOIL)

    @pytest.mark.parametrize("barred", [False, True])
    def test_inverse_letters(self, barred):
        for i in (1, 2):
            for j in range(5):
                x = (j + 1,)
                assert braid_action(3, [("s", i, 1), ("s", i, -1)], x, barred) == x
                assert braid_action(3, [("t", i, 1), ("t", i, 1)], x, barred) == x

    @pytest.mark.parametrize("k,word", [(2, "s1 s1 s1"), (2, "s1 s1 t1"), (3, "s1 S2 s1 S2"), (3, "s1 t2 s1 t2 S1")])
    def test_closure_groups_match_diagram(self, k, word):
        vg = braid_closure_vg(k, word)
        d = braid_closure_diagram(k, word)
        gb = kill_generator(vg, "s")
        for n in (3, 4):
            assert hom_count(gb, n) == hom_count(group(d, "Gbar"), n)
            assert hom_count(kill_generator(gb, "v"), n) == hom_count(group(d, "G"), n)


class TestPrintedGroups:
    def test_twin_counterexample_groups(self):
        g = presentation(AB, "a^-1b^-1a^-1bab")
        g_star = presentation(AB, "a^-1b^-1a^-1bab", "a^3b^-3aba^-2b^2a^-1b^-1")
        assert [hom_count(g, n) for n in (3, 4, 5)] == [12, 96, 600]
        assert [hom_count(g_star, n) for n in (3, 4, 5)] == [12, 72, 360]


class TestSpecExamples:
    def test_unknot_groups(self):
        u = parse_gauss("")
        g = group(u, "G")
        assert g.n_gens == 1 and not g.relators
        gb = group(u, "Gbar")
        assert gb.n_gens == 2 and not gb.relators

    def test_trefoil_wirtinger(self):
        g = group(TREFOIL, "G")
        assert g.n_gens == 3 and len(g.relators) == 3

    def test_quotient_examples(self):
        p = presentation(["a", "v"])
        assert quotient(p, "v^2").relators == (parse_word("v^2", ["a", "v"]),)
        assert quotient(p, ()).relators in ((), ((),))
        with pytest.raises(PresentationError):
            quotient(p, "w")

    def test_tietze_example(self):
        s = tietze_simplify(presentation(AB, "b a^-1"))
        assert s.n_gens == 1 and not s.relators

    def test_free_group_counts(self):
        for k in range(3):
            assert hom_count(presentation(["a", "b", "c"][:k]), 3) == 6 ** k

    def test_cyclic_abelianization(self):
        assert abelianization(presentation(["a"], "a^3")) == [3]

    def test_tau_action(self):
        # unbarred generators x1 x2 s q have indices 1..4
        x1, x2, q = (1,), (2,), 4
        assert braid_action(2, [("t", 1, 1)], x1) == (q, 2, -q)
        assert braid_action(2, [("t", 1, 1)], x1, barred=True) == x2

    def test_empty_braid(self):
        vg = braid_closure_vg(1, "")
        assert vg.n_gens == 3
        assert hom_count(vg, 3) == hom_count(group(parse_gauss(""), "VG"), 3)

    def test_sigma_cubed_abelianizes_to_z(self):
        g = kill_generator(kill_generator(braid_closure_vg(2, "s1 s1 s1"), "s"), "v")
        assert abelianization(g) == [0]

    def test_welded_invariance_of_g(self):
        rng = random.Random(21)
        for _ in range(40):
            d = random_diagram(rng, rng.randint(2, 5))
            e, _ = random_walk(d, 4, rng, families=("F1",))
            for which in ("G", "WG"):
                assert hom_count(group(d, which), 3) == hom_count(group(e, which), 3)
