import pytest

from conftest import catalog_upto
from oracles import brute_all_subgroups, brute_subgroup_classes
from permchar.catalog import build
from permchar.permgroup import EnumerationIncompleteError, PermGroup
from permchar.perms import parse_cycles
from permchar.subgroups import (all_subgroups, complement_decompositions, core,
                                coset_action, frattini, lattice_certificate,
                                maximal_subgroups)


def test_subgroup_class_counts():
    assert len(all_subgroups(build("sym:4"))) == 11
    assert len(all_subgroups(build("cyc:6"))) == 4
    assert len(all_subgroups(build("alt:5"))) == 9


def test_maximal_subgroups():
    assert sorted((c.index, c.order) for c in maximal_subgroups(build("alt:5"))) == \
        [(5, 12), (6, 10), (10, 6)]
    assert sorted((c.index, c.order) for c in maximal_subgroups(build("sym:4"))) == \
        [(2, 12), (3, 8), (4, 6)]
    # prime cyclic group: single class, the trivial subgroup of index p
    assert [(c.index, c.order) for c in maximal_subgroups(build("cyc:5"))] == [(5, 1)]


def test_subgroup_class_lengths():
    for spec in ["sym:4", "alt:5", "sl23"]:
        G = build(spec)
        for cls in all_subgroups(G):
            assert cls.length == G.order // cls.normalizer.order
            assert len(cls.orbit) == cls.length


def test_agreement_with_brute_force_oracle():
    for spec in catalog_upto(60):
        G = build(spec)
        brute = brute_all_subgroups(G)
        ours = set()
        for cls in all_subgroups(G):
            ours.update(cls.orbit)
        assert ours == brute, spec
        assert len(brute_subgroup_classes(G, brute)) == len(all_subgroups(G)), spec


def test_enumerated_closures_are_closed():
    from permchar.permgroup import _closure_ids
    for spec in ["sym:4", "alt:5", "dih:16", "sl23"]:
        G = build(spec)
        for cls in all_subgroups(G):
            ids = cls.representative.element_ids
            assert _closure_ids(G.table, ids) == ids


def test_coset_action_examples():
    S4 = build("sym:4")
    S3 = S4.subgroup([parse_cycles("(0 1)", 4), parse_cycles("(0 1 2)", 4)])
    act = coset_action(S4, S3)
    assert act.image.degree == 4 and act.image.order == 24
    assert act.image.is_transitive()
    assert act.kernel.order == 1

    full = coset_action(S4, S4.full_subgroup)
    assert full.image.degree == 1

    A4 = S4.subgroup([parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)])
    act2 = coset_action(S4, A4)
    assert act2.image.degree == 2 and act2.image.order == 2
    assert act2.kernel.order == 12


def test_core_examples():
    S4 = build("sym:4")
    D8 = S4.subgroup([parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 2)", 4)])
    assert core(S4, D8).order == 4
    V4 = S4.subgroup([parse_cycles("(0 1)(2 3)", 4), parse_cycles("(0 2)(1 3)", 4)])
    assert core(S4, V4).element_ids == V4.element_ids  # normal: core = H
    A5 = build("alt:5")
    A4 = A5.subgroup([parse_cycles("(0 1 2)", 5), parse_cycles("(0 1)(2 3)", 5)])
    assert core(A5, A4).order == 1
    # core is the largest normal subgroup inside H
    assert core(S4, D8).is_normal()


def test_frattini():
    assert frattini(build("sym:4")).order == 1
    q8_frat = frattini(build("q8"))
    assert q8_frat.order == 2
    assert q8_frat.is_normal()
    assert frattini(build("prod:cyc:2,cyc:2")).order == 1
    assert frattini(build("cyc:4")).order == 2


def test_complement_decompositions():
    S4 = build("sym:4")
    pairs = complement_decompositions(S4)
    assert [(n.order, h.order) for n, h in pairs] == [(4, 6)]
    n, h = pairs[0]
    assert len(n.element_ids & h.element_ids) == 1
    assert complement_decompositions(build("q8")) == []
    S3 = build("sym:3")
    assert [(n.order, h.order) for n, h in complement_decompositions(S3)] == [(3, 2)]


def test_maximal_actions_transitive_and_primitive():
    for spec in ["sym:4", "alt:5", "sl23", "dih:12", "cyc:12"]:
        G = build(spec)
        for cls in maximal_subgroups(G):
            act = coset_action(G, cls.representative)
            assert act.image.is_transitive()
            assert act.image.is_primitive(), (spec, cls.index)


def test_certificates():
    assert lattice_certificate(build("sym:4")).method == "solvable"
    assert lattice_certificate(build("alt:5")).method == "divisor-arithmetic"
    assert lattice_certificate(build("psl2:9")).method == "catalog-seeds"
    assert lattice_certificate(build("psl2:7")).method == "catalog-seeds"


def test_incomplete_enumeration_is_a_hard_error(tmp_path):
    # a file-loaded copy of psl2:7 has no curated seeds and cannot be
    # certified by order arithmetic (168 has the risky divisor 84)
    src = build("psl2:7")
    clone = PermGroup(src.degree, src.generators, name="file-psl27-clone")
    with pytest.raises(EnumerationIncompleteError):
        all_subgroups(clone)


def test_file_loaded_a5_is_arithmetic_certified():
    src = build("alt:5")
    clone = PermGroup(src.degree, src.generators, name="file-a5-clone")
    classes = all_subgroups(clone)
    assert len(classes) == 9
    assert lattice_certificate(clone).method == "divisor-arithmetic"
