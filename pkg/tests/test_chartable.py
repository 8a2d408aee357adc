import random
from fractions import Fraction

import pytest

from conftest import catalog_upto
from oracles import brute_character_table
from permchar.catalog import build
from permchar.chartable import (character_table, fusion, induce, inner_product,
                                is_monolithic, kernel, linear_characters,
                                render_table_text, restrict, table_json,
                                trivial_character)
from permchar.cyclo import Cyclo
from permchar.perms import parse_cycles

ONE = Cyclo.rational(1)
NIL = Cyclo.rational(0)


def test_degree_sets():
    assert character_table(build("sym:3")).degrees == (1, 1, 2)
    assert character_table(build("alt:5")).degrees == (1, 3, 3, 4, 5)
    t = character_table(build("cyc:4"))
    assert t.degrees == (1, 1, 1, 1)
    assert {v.conductor for row in t.rows for v in row.values} == {1, 4}


def test_table_invariants_battery():
    # the full-catalog sweep runs in the acceptance suite; this covers the
    # small and structurally varied groups
    from oracles import assert_table_orthogonality
    for spec in catalog_upto(30) + ["alt:5", "psl2:7", "cyc:60", "dih:60"]:
        assert_table_orthogonality(build(spec))


def test_dixon_schneider_matches_oracle_upto_24():
    for spec in catalog_upto(24):
        G = build(spec)
        ours = {row.values for row in character_table(G).rows}
        assert ours == brute_character_table(G), spec


def test_inner_product_examples():
    A5 = build("alt:5")
    t = character_table(A5)
    A4 = A5.subgroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(2 3)", 5)])
    ind = induce(trivial_character(A4.group), A4)
    assert inner_product(ind, trivial_character(A5)) == ONE


def test_fusion_examples():
    A5 = build("alt:5")
    full = A5.full_subgroup
    assert fusion(full) == tuple(range(len(A5.conjugacy_classes)))

    A4 = A5.subgroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(2 3)", 5)])
    fus = fusion(A4)
    orders = [c.element_order for c in A4.group.conjugacy_classes]
    # both order-3 classes of A4 land in the unique order-3 class of A5
    targets = {fus[i] for i, o in enumerate(orders) if o == 3}
    assert len(targets) == 1

    S4 = build("sym:4")
    C2 = S4.subgroup([parse_cycles("(0 1)(2 3)", 4)])
    fus = fusion(C2)
    # the involution class goes to the double-transposition class (size 3)
    invol_class = next(i for i, c in enumerate(C2.group.conjugacy_classes)
                       if c.element_order == 2)
    assert S4.conjugacy_classes[fus[invol_class]].size == 3


def test_induced_degree_and_frobenius_reciprocity():
    rng = random.Random(11)
    checked = 0
    for spec in ["sym:4", "alt:5", "sl23", "dih:12"]:
        G = build(spec)
        t = character_table(G)
        from permchar.subgroups import all_subgroups
        for cls in all_subgroups(G):
            H = cls.representative
            lams = linear_characters(H)
            lam = lams[rng.randrange(len(lams))]
            ind = induce(lam, H)
            assert ind.degree.as_integer() == H.index * lam.degree.as_integer()
            chi = t.rows[rng.randrange(len(t.rows))]
            assert inner_product(ind, chi) == inner_product(lam, restrict(chi, H))
            checked += 1
    assert checked >= 20


def test_induced_linear_irreducible_example():
    A5 = build("alt:5")
    A4 = A5.subgroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(2 3)", 5)])
    lams = [l for l in linear_characters(A4) if l.values != trivial_character(A4.group).values]
    assert len(lams) == 2
    for lam in lams:
        ind = induce(lam, A4)
        assert inner_product(ind, ind) == ONE
        assert ind.degree.as_integer() == 5


def test_linear_characters_counts():
    assert len(linear_characters(build("cyc:6").full_subgroup)) == 6
    assert len(linear_characters(build("prod:cyc:2,cyc:2").full_subgroup)) == 4
    A4 = build("alt:4")
    assert len(linear_characters(A4.full_subgroup)) == 3
    assert len(linear_characters(build("sl23").full_subgroup)) == 3
    for lam in linear_characters(A4.full_subgroup):
        assert lam.degree == ONE


def test_kernels():
    S4 = build("sym:4")
    t = character_table(S4)
    assert kernel(t.rows[0]).order == 24          # trivial character
    sign = t.rows[1]
    assert sign.degree == ONE
    assert kernel(sign).order == 12               # alternating subgroup
    A5 = build("alt:5")
    deg4 = next(r for r in character_table(A5).rows if r.degree.as_integer() == 4)
    assert kernel(deg4).order == 1                # faithful


def test_kernel_of_induced_is_core_of_kernel():
    # ker(lam^G) equals the intersection of the G-conjugates of ker(lam)
    rng = random.Random(5)
    checked = 0
    for spec in ["sym:4", "sl23", "dih:12", "alt:4"]:
        G = build(spec)
        tab = G.table
        from permchar.subgroups import all_subgroups
        for cls in all_subgroups(G):
            H = cls.representative
            for lam in linear_characters(H):
                if rng.random() < 0.5:
                    continue
                ind = induce(lam, H)
                ker_lam_ids = {i for i in H.element_ids
                               if lam(tab.perms[i]) == ONE}
                meet = None
                for g in tab.perms:
                    conj = frozenset(tab.index[g.inverse() * tab.perms[i] * g]
                                     for i in ker_lam_ids)
                    meet = conj if meet is None else meet & conj
                assert kernel(ind).element_ids == meet
                checked += 1
    assert checked >= 15


def test_monolithic():
    S4 = build("sym:4")
    t = character_table(S4)
    assert is_monolithic(S4, t.rows[0])           # trivial quotient convention
    assert is_monolithic(S4, t.rows[1])           # S4/A4 cyclic
    C6 = build("cyc:6")
    t6 = character_table(C6)
    faithful = [r for r in t6.rows if kernel(r).order == 1]
    assert faithful and all(not is_monolithic(C6, r) for r in faithful)


def test_table_rendering():
    t = character_table(build("sym:3"))
    text = render_table_text(t)
    assert "order 6" in text and text.count("X") == 3
    data = table_json(t)
    assert data["order"] == 6
    assert [row["degree"] for row in data["irreducibles"]] == [1, 1, 2]


def test_admissible_prime_examples():
    from permchar.chartable import admissible_prime
    assert admissible_prime(build("alt:5")) == 31
    assert admissible_prime(build("psl2:7")) == 337
