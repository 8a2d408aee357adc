"""Subgroup enumeration up to conjugacy, maximal subgroups, cores and the
Frattini subgroup.

Enumeration uses the cyclic extension method: starting from the trivial
subgroup (plus any perfect seed subgroups), every known class representative
T is extended by elements g of its normalizer with g^p in T for a prime p,
giving all subgroups with a subnormal chain of prime steps above a seed.
That reaches every solvable subgroup; nonsolvable subgroups are reachable
exactly when their perfect core is seeded.

Completeness is certified, never assumed:
  * solvable groups need no seeds;
  * groups whose order admits no proper divisor that could carry a
    nonabelian composition factor (>= 60, divisible by 4, >= 3 primes)
    need no seeds;
  * otherwise the group must carry curated seeds (catalog-built groups do);
  * anything else raises EnumerationIncompleteError rather than silently
    truncating.
Self-checks (cyclic-subgroup counts against element orders, closure
idempotence, element coverage by maximal subgroups) run on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .numth import divisors, euler_phi, factorint, is_prime
from .permgroup import (CosetAction, EnumerationIncompleteError, PermGroup,
                        Subgroup, _closure_ids, core, coset_action, quotient)
from .perms import Perm


@dataclass
class SubgroupClass:
    """One conjugacy class of subgroups."""

    representative: Subgroup
    length: int
    normalizer: Subgroup
    orbit: list[frozenset[int]] = field(repr=False)
    is_maximal: bool = False

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def index(self) -> int:
        return self.representative.index

    def canonical_key(self):
        return (self.order, min(tuple(sorted(s)) for s in self.orbit))


@dataclass
class LatticeCertificate:
    method: str                 # "solvable" | "divisor-arithmetic" | "catalog-seeds"
    cyclic_counts_ok: bool
    coverage_ok: bool | None    # None when not applicable (cyclic groups)


def _conjugation_orbit(G: PermGroup, ids0: frozenset[int]):
    """Orbit of an element-id set under conjugation, with normalizer."""
    tab = G.table
    ident = G.identity
    orbit: dict[frozenset[int], Perm] = {ids0: ident}
    queue = [ids0]
    stab_ids: set[int] = {0}
    while queue:
        s = queue.pop(0)
        u = orbit[s]
        for gi, cmap in enumerate(tab.conj_maps):
            t = frozenset(cmap[i] for i in s)
            if t not in orbit:
                orbit[t] = u * G.generators[gi]
                queue.append(t)
            else:
                # Schreier generator of the stabilizer (= normalizer)
                h = u * G.generators[gi] * orbit[t].inverse()
                stab_ids.add(tab.index[h])
    length = len(orbit)
    if length == 1:
        norm_ids = frozenset(range(G.order))
    else:
        norm_ids = _closure_ids(tab, frozenset(stab_ids))
    if len(norm_ids) * length != G.order:
        raise AssertionError("orbit-stabilizer mismatch for subgroup class")
    normalizer = G.subgroup_from_ids(norm_ids)
    return list(orbit.keys()), normalizer


class _Lattice:
    def __init__(self, G: PermGroup):
        self.G = G
        self.seen: dict[frozenset[int], int] = {}
        self.classes: list[SubgroupClass] = []

    def register(self, gens: tuple[Perm, ...], ids: frozenset[int]) -> int:
        if ids in self.seen:
            return self.seen[ids]
        sub = self.G.subgroup(gens, ids)
        orbit, normalizer = _conjugation_orbit(self.G, ids)
        cls = SubgroupClass(sub, len(orbit), normalizer, orbit)
        idx = len(self.classes)
        self.classes.append(cls)
        for s in orbit:
            self.seen[s] = idx
        return idx


def _certify(G: PermGroup) -> str:
    if G.is_solvable:
        return "solvable"
    order = G.order
    risky = [d for d in divisors(order)
             if 60 <= d < order and d % 4 == 0 and len(factorint(d)) >= 3]
    if not risky:
        return "divisor-arithmetic"
    if getattr(G, "enumeration_certificate", None) == "catalog":
        return "catalog-seeds"
    raise EnumerationIncompleteError(
        f"cannot certify complete subgroup enumeration for {G.name}: "
        f"nonsolvable, possible perfect subgroup orders {risky}, and no "
        "curated perfect-subgroup seeds are attached")


def all_subgroups(G: PermGroup) -> list[SubgroupClass]:
    """All subgroup classes of G, sorted by (order, canonical orbit key)."""
    cached = getattr(G, "_subgroup_classes", None)
    if cached is not None:
        return cached
    method = _certify(G)
    tab = G.table
    lat = _Lattice(G)
    lat.register((), frozenset({0}))
    seeds: list[tuple[Perm, ...]] = list(getattr(G, "perfect_seeds", ()) or ())
    if G.is_perfect and G.order > 1:
        seeds.append(G.generators)
    for gens in seeds:
        sub = G.subgroup(gens)
        lat.register(sub.gens, sub.element_ids)

    element_order = [0] * G.order
    for c in G.conjugacy_classes:
        for i in c.member_ids:
            element_order[i] = c.element_order

    pos = 0
    while pos < len(lat.classes):
        cls = lat.classes[pos]
        pos += 1
        t_ids = cls.representative.element_ids
        t_order = len(t_ids)
        t_gens = cls.representative.gens
        for g_id in sorted(cls.normalizer.element_ids - t_ids):
            if t_order == 1:
                p = element_order[g_id]
            else:
                # order of g modulo T: successive powers until inside T
                p = 1
                x = g_id
                while x not in t_ids:
                    x = tab.mul(x, g_id)
                    p += 1
            if not is_prime(p):
                continue
            s_ids = set(t_ids)
            x = g_id
            for _ in range(p - 1):
                s_ids.update(tab.mul(t, x) for t in t_ids)
                x = tab.mul(x, g_id)
            if len(s_ids) != p * t_order:
                raise AssertionError("cyclic extension produced a non-coset union")
            lat.register(t_gens + (tab.perms[g_id],), frozenset(s_ids))

    classes = sorted(lat.classes, key=lambda c: c.canonical_key())
    cert = LatticeCertificate(method, _check_cyclic_counts(G, classes), None)
    G._subgroup_classes = classes
    G._lattice_certificate = cert
    return classes


def _check_cyclic_counts(G: PermGroup, classes: list[SubgroupClass]) -> bool:
    """Count cyclic subgroups of each order two ways: from element orders and
    from the enumerated classes.  A mismatch means lost subgroups."""
    by_order: dict[int, int] = {}
    for c in G.conjugacy_classes:
        by_order[c.element_order] = by_order.get(c.element_order, 0) + c.size
    expected = {m: cnt // euler_phi(m) for m, cnt in by_order.items() if m > 1}
    found: dict[int, int] = {}
    for cls in classes:
        n = cls.order
        if n > 1 and _max_element_order(G, cls) == n:
            found[n] = found.get(n, 0) + cls.length
    if expected != found:
        raise AssertionError(
            f"cyclic subgroup count self-check failed: {expected} != {found}")
    return True


def _max_element_order(G: PermGroup, cls: SubgroupClass) -> int:
    element_order = G.class_of_id
    classes = G.conjugacy_classes
    return max(classes[element_order[i]].element_order
               for i in cls.representative.element_ids)


def lattice_certificate(G: PermGroup) -> LatticeCertificate:
    all_subgroups(G)
    return G._lattice_certificate


def maximal_subgroups(G: PermGroup) -> list[SubgroupClass]:
    """Proper subgroup classes with no strictly intermediate class."""
    classes = all_subgroups(G)
    proper = [c for c in classes if c.order < G.order]
    for a in proper:
        a_ids = a.representative.element_ids
        a.is_maximal = True
        for b in proper:
            if b.order <= a.order or b.order % a.order:
                continue
            if any(a_ids <= s for s in b.orbit):
                a.is_maximal = False
                break
    maxima = [c for c in proper if c.is_maximal]
    _check_coverage(G, maxima)
    return maxima


def _check_coverage(G: PermGroup, maxima: list[SubgroupClass]):
    """Every element lies in a maximal subgroup, except generators of a
    cyclic G; a gap would mean a missing maximal class."""
    if G.order == 1:
        return
    covered: set[int] = set()
    for cls in maxima:
        for s in cls.orbit:
            covered |= s
    uncovered = set(range(G.order)) - covered
    if not uncovered:
        G._coverage_ok = True
        return
    # allowed only for cyclic G: the generators lie in no proper subgroup
    classes = G.conjugacy_classes
    cls_of = G.class_of_id
    if all(classes[cls_of[i]].element_order == G.order for i in uncovered):
        G._coverage_ok = True
        return
    raise AssertionError("maximal subgroups fail to cover the group: "
                         f"{len(uncovered)} elements missed")


def frattini(G: PermGroup) -> Subgroup:
    """Intersection of all maximal subgroups (all conjugates)."""
    maxima = maximal_subgroups(G)
    ids = frozenset(range(G.order))
    for cls in maxima:
        for s in cls.orbit:
            ids &= s
            if len(ids) == 1:
                return G.subgroup_from_ids(ids)
    return G.subgroup_from_ids(ids)


def complement_decompositions(G: PermGroup) -> list[tuple[Subgroup, Subgroup]]:
    """All pairs (N, H): N minimal normal, H maximal, NH = G, N cap H = 1."""
    out = []
    maxima = maximal_subgroups(G)
    for n in G.minimal_normal_subgroups:
        for cls in maxima:
            h = cls.representative
            if n.order * h.order == G.order and len(n.element_ids & h.element_ids) == 1:
                out.append((n, h))
    return out


__all__ = [
    "SubgroupClass", "LatticeCertificate", "all_subgroups", "maximal_subgroups",
    "frattini", "complement_decompositions", "lattice_certificate",
    "coset_action", "core", "quotient", "CosetAction", "Subgroup",
    "EnumerationIncompleteError",
]
