"""Constituents of permutation characters of maximal subgroups.

For each maximal subgroup class M of G, the transitive action on cosets of
M has character (1_M)^G; its irreducible constituents are the group's
"P-characters".  This module computes the per-maximal decompositions, the
aggregated constituent set and degree set, the prime filtration by subgroup
index, monomiality witnesses, and inertia groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .chartable import (CharacterTable, ClassFunction, character_table,
                        induce, inner_product, linear_characters,
                        trivial_character)
from .numth import is_pi_number, prime_divisors
from .permgroup import PermGroup, Subgroup, coset_action
from .subgroups import SubgroupClass, all_subgroups, maximal_subgroups


@dataclass(frozen=True)
class MonomialWitness:
    """A pair (H, lam) with lam linear on H and lam^G equal to the character."""

    subgroup: Subgroup
    linear: ClassFunction


@dataclass
class PCharEntry:
    maximal: SubgroupClass
    perm_char: ClassFunction
    constituents: list[tuple[int, int]]   # (table row index, multiplicity)
    pi_indices: frozenset[int]            # primes dividing |G:M|

    @property
    def index(self) -> int:
        return self.maximal.index


@dataclass
class PCharReport:
    group: PermGroup
    table: CharacterTable
    entries: list[PCharEntry]
    pi: frozenset[int] | None = None      # set when filtered to pi-number indices

    @cached_property
    def irr_p(self) -> tuple[int, ...]:
        """Row indices of all constituents, deduplicated by row identity."""
        rows = set()
        for e in self.entries:
            rows.update(i for i, _ in e.constituents)
        return tuple(sorted(rows))

    @cached_property
    def cd_p(self) -> tuple[int, ...]:
        return tuple(sorted({self.table.degrees[i] for i in self.irr_p}))

    @cached_property
    def degree_list(self) -> tuple[int, ...]:
        """Degrees of the members of irr_p, with one entry per member."""
        return tuple(sorted(self.table.degrees[i] for i in self.irr_p))

    @cached_property
    def monomial_verdicts(self) -> dict[int, MonomialWitness | None]:
        return {i: is_monomial(self.group, self.table.rows[i], table=self.table)
                for i in self.irr_p}

    def all_monomial(self) -> bool:
        return all(w is not None for w in self.monomial_verdicts.values())


def permutation_character(G: PermGroup, M: Subgroup) -> ClassFunction:
    """Character of the action on cosets of M: fixed-coset counts per class.

    Computed twice on purpose: by counting fixed points and as the induced
    trivial character; the two must agree exactly.
    """
    act = coset_action(G, M)
    values = []
    for cls in G.conjugacy_classes:
        img = act.image_of(cls.representative)
        values.append(sum(1 for i, j in enumerate(img.images) if i == j))
    by_count = ClassFunction(G, values)
    by_induction = induce(trivial_character(M.group), M)
    if by_count.values != by_induction.values:
        raise AssertionError("fixed-point character disagrees with induced trivial")
    return by_count


def _decompose_entry(G, table, cls: SubgroupClass) -> PCharEntry:
    perm = permutation_character(G, cls.representative)
    constituents = table.decompose(perm)
    rebuilt = None
    for i, m in constituents:
        piece = table.rows[i] * m
        rebuilt = piece if rebuilt is None else rebuilt + piece
    if rebuilt is None or rebuilt.values != perm.values:
        raise AssertionError("constituents do not rebuild the permutation character")
    if dict(constituents).get(0) != 1:
        raise AssertionError("transitive permutation character must contain the "
                             "trivial character exactly once")
    return PCharEntry(cls, perm, constituents,
                      frozenset(prime_divisors(cls.index)) if cls.index > 1 else frozenset())


def p_characters(G: PermGroup) -> PCharReport:
    """Decompose (1_M)^G for every maximal subgroup class M."""
    cached = getattr(G, "_pchar_report", None)
    if cached is not None:
        return cached
    table = character_table(G)
    entries = [_decompose_entry(G, table, cls) for cls in maximal_subgroups(G)]
    report = PCharReport(G, table, entries)
    G._pchar_report = report
    return report


def p_pi_characters(G: PermGroup, pi: frozenset[int]) -> PCharReport:
    """Restrict the report to maximal subgroups of pi-number index."""
    full = p_characters(G)
    entries = [e for e in full.entries if is_pi_number(e.maximal.index, pi)]
    return PCharReport(G, full.table, entries, pi=pi)


def is_monomial(G: PermGroup, chi: ClassFunction, table: CharacterTable | None = None,
                pruned: bool = True) -> MonomialWitness | None:
    """Search for a subgroup H and linear lam with lam^G = chi.

    Induction multiplies degrees by the index, so only classes with index
    exactly chi(1) can work; the unpruned variant (used as an oracle) scans
    every class.  The first witness in canonical class order is returned.
    """
    if table is None:
        table = character_table(G)
    if table.row_index(chi) is None:
        raise ValueError("monomiality test expects an irreducible character")
    degree = chi.degree.as_integer()
    for cls in all_subgroups(G):
        if pruned and cls.index != degree:
            continue
        H = cls.representative
        for lam in linear_characters(H):
            if induce(lam, H).values == chi.values:
                return MonomialWitness(H, lam)
    return None


def inertia_group(G: PermGroup, N: Subgroup, lam: ClassFunction) -> Subgroup:
    """Stabilizer of lam in the conjugation action of G on Irr(N).

    N must be normal; lam is a (linear) character of N given on N.group.
    The action is lam^g(x) = lam(g x g^-1); the stabilizer always
    contains N itself.
    """
    if not N.is_normal():
        raise ValueError("inertia groups are defined for normal subgroups only")
    tab = G.table
    ids = sorted(N.element_ids)
    pos = {e: i for i, e in enumerate(ids)}
    base = tuple(lam(tab.perms[e]) for e in ids)
    # per generator: position map  pos[x] -> pos[g x g^-1]
    gen_maps = []
    for g in G.generators:
        ginv = g.inverse()
        gen_maps.append([pos[tab.index[g * tab.perms[e] * ginv]] for e in ids])
    orbit = {base: G.identity}
    queue = [base]
    stab_ids = {0}
    while queue:
        vec = queue.pop(0)
        u = orbit[vec]
        for g, gmap in zip(G.generators, gen_maps):
            newvec = tuple(vec[gmap[i]] for i in range(len(ids)))
            if newvec not in orbit:
                orbit[newvec] = u * g
                queue.append(newvec)
            else:
                h = u * g * orbit[newvec].inverse()
                stab_ids.add(tab.index[h])
    from .permgroup import _closure_ids
    norm_ids = (frozenset(range(G.order)) if len(orbit) == 1
                else _closure_ids(tab, frozenset(stab_ids)))
    if len(norm_ids) * len(orbit) != G.order:
        raise AssertionError("orbit-stabilizer mismatch in inertia computation")
    inertia = G.subgroup_from_ids(norm_ids)
    if not N.element_ids <= inertia.element_ids:
        raise AssertionError("inertia group does not contain the normal subgroup")
    return inertia


# ---------------------------------------------------------------------------
# report serialization
# ---------------------------------------------------------------------------

def report_json(report: PCharReport, include_monomial: bool = True) -> dict:
    from .cyclo import render_cyclo
    G = report.group
    table = report.table
    entries = []
    for e in report.entries:
        rep = e.maximal.representative
        entries.append({
            "index": e.maximal.index,
            "order": e.maximal.order,
            "length": e.maximal.length,
            "generators": [g.cycle_string() for g in rep.gens],
            "pi_indices": sorted(e.pi_indices),
            "perm_char": [render_cyclo(v) for v in e.perm_char.values],
            "constituents": [
                {"row": i, "degree": table.degrees[i], "multiplicity": m}
                for i, m in e.constituents
            ],
        })
    out = {
        "group": G.name,
        "order": G.order,
        "pi": sorted(report.pi) if report.pi is not None else None,
        "maximal_classes": entries,
        "irr_p": list(report.irr_p),
        "cd_p": list(report.cd_p),
        "degree_list": list(report.degree_list),
    }
    if include_monomial:
        verdicts = {}
        for i, w in report.monomial_verdicts.items():
            if w is None:
                verdicts[str(i)] = "nonmonomial"
            else:
                verdicts[str(i)] = {
                    "subgroup_order": w.subgroup.order,
                    "subgroup_generators": [g.cycle_string() for g in w.subgroup.gens],
                    "linear_values": [render_cyclo(v) for v in w.linear.values],
                }
        out["monomial_verdicts"] = verdicts
    return out
