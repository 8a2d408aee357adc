"""Permutation groups: stabilizer chains, conjugacy classes, characteristic
series, normal subgroups, coset actions and pi-structure predicates.

Groups are immutable once constructed; every derived structure (chain,
element table, conjugacy classes, ...) is computed deterministically and
cached, so identical inputs always reproduce identical outputs.

Full element enumeration is used for class- and subgroup-level work and is
guarded by MAX_ORDER (default 10^4); the stabilizer chain itself has no
such bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm, prod

from .numth import factorint, is_pi_number, pi_part, pi_prime_part, prime_divisors
from .perms import Perm, parse_cycles

MAX_ORDER = 10_000


class OrderBoundExceeded(RuntimeError):
    """The group is larger than the configured exact-enumeration bound."""


class EnumerationIncompleteError(RuntimeError):
    """Subgroup enumeration cannot be certified complete for this group."""


# ---------------------------------------------------------------------------
# stabilizer chain (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------

class StabilizerChain:
    """Base, transversals and strong generators; base points are always the
    smallest moved points available, so the chain is reproducible.

    Classic deterministic Schreier-Sims: levels are verified bottom-up by
    sifting every Schreier generator; a surviving residue becomes a new
    strong generator and verification restarts at its level.
    """

    def __init__(self, degree: int, gens):
        self.degree = degree
        self.base: list[int] = []
        self.level_gens: list[list[Perm]] = []
        self.transversals: list[dict[int, Perm]] = []
        clean = []
        seen = set()
        for g in gens:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if not g.is_identity and g not in seen:
                clean.append(g)
                seen.add(g)
        for g in clean:
            if all(g(b) == b for b in self.base):
                self.base.append(g.smallest_moved())
        self.level_gens = [
            [g for g in clean if all(g(b) == b for b in self.base[:i])]
            for i in range(len(self.base))
        ]
        self.transversals = [{} for _ in self.base]
        i = len(self.base) - 1
        while i >= 0:
            self._rebuild_orbit(i)
            residue_info = self._find_residue(i)
            if residue_info is None:
                i -= 1
                continue
            h, j = residue_info
            if j == len(self.base):
                self.base.append(h.smallest_moved())
                self.level_gens.append([])
                self.transversals.append({})
            for m in range(i + 1, j + 1):
                self.level_gens[m].append(h)
            i = j

    def _rebuild_orbit(self, i: int):
        beta = self.base[i]
        trans = {beta: Perm.identity(self.degree)}
        queue = [beta]
        gens = self.level_gens[i]
        while queue:
            a = queue.pop(0)
            ua = trans[a]
            for g in gens:
                b = g(a)
                if b not in trans:
                    trans[b] = ua * g
                    queue.append(b)
        self.transversals[i] = trans

    def _find_residue(self, i: int):
        """First Schreier generator of level i that does not sift to identity."""
        trans = self.transversals[i]
        for delta in sorted(trans):
            u = trans[delta]
            for s in self.level_gens[i]:
                target = s(delta)
                schreier = u * s * trans[target].inverse()
                if schreier.is_identity:
                    continue
                h, j = self._strip(schreier, i + 1)
                if not h.is_identity:
                    return h, j
        return None

    def _strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, len(self.base)):
            delta = g(self.base[i])
            trans = self.transversals[i]
            if delta not in trans:
                return g, i
            g = g * trans[delta].inverse()
        return g, len(self.base)

    @property
    def order(self) -> int:
        return prod(len(t) for t in self.transversals) if self.base else 1

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        h, _ = self._strip(g)
        return h.is_identity


# ---------------------------------------------------------------------------
# element table: id-indexed elements, conjugation maps, class data
# ---------------------------------------------------------------------------

@dataclass
class ElementTable:
    """All elements of a group, id-indexed in deterministic BFS order."""

    perms: list[Perm]
    index: dict[Perm, int]
    inverse: list[int]
    conj_maps: list[list[int]]  # per generator g: x-id -> (g^-1 x g)-id

    def mul(self, a: int, b: int) -> int:
        return self.index[self.perms[a] * self.perms[b]]

    def conj_set(self, ids: frozenset[int], g: Perm, ginv: Perm) -> frozenset[int]:
        idx = self.index
        ps = self.perms
        return frozenset(idx[ginv * ps[i] * g] for i in ids)


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    size: int
    element_order: int
    index: int
    member_ids: tuple[int, ...]
    centralizer_order: int


class PermGroup:
    """A finite permutation group on {0..degree-1} given by generators."""

    def __init__(self, degree: int, generators, name: str | None = None):
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if not g.is_identity and g not in seen:
                gens.append(g)
                seen.add(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self.name = name or f"group<deg {degree}>"

    def __repr__(self):
        return f"PermGroup({self.name}, degree={self.degree}, order={self.order})"

    @cached_property
    def chain(self) -> StabilizerChain:
        return StabilizerChain(self.degree, self.generators)

    @cached_property
    def order(self) -> int:
        return self.chain.order

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def __contains__(self, g: Perm) -> bool:
        return self.chain.contains(g)

    def _check_order_bound(self):
        if self.order > MAX_ORDER:
            raise OrderBoundExceeded(
                f"|G| = {self.order} exceeds the exact-enumeration bound {MAX_ORDER}")

    # ---- element table -------------------------------------------------

    @cached_property
    def table(self) -> ElementTable:
        self._check_order_bound()
        ident = self.identity
        perms = [ident]
        index = {ident: 0}
        queue = [ident]
        while queue:
            x = queue.pop(0)
            for g in self.generators:
                y = x * g
                if y not in index:
                    index[y] = len(perms)
                    perms.append(y)
                    queue.append(y)
        if len(perms) != self.order:
            raise AssertionError("element enumeration disagrees with chain order")
        inverse = [index[p.inverse()] for p in perms]
        conj_maps = []
        for g in self.generators:
            ginv = g.inverse()
            conj_maps.append([index[ginv * p * g] for p in perms])
        return ElementTable(perms, index, inverse, conj_maps)

    def elements(self) -> list[Perm]:
        return list(self.table.perms)

    def element_id(self, g: Perm) -> int:
        return self.table.index[g]

    # ---- conjugacy classes ----------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjClass, ...]:
        tab = self.table
        n = len(tab.perms)
        assigned = [False] * n
        raw = []
        for start in range(n):
            if assigned[start]:
                continue
            members = [start]
            assigned[start] = True
            queue = [start]
            while queue:
                x = queue.pop()
                for cmap in tab.conj_maps:
                    y = cmap[x]
                    if not assigned[y]:
                        assigned[y] = True
                        members.append(y)
                        queue.append(y)
            rep_id = min(members, key=lambda i: tab.perms[i].images)
            rep = tab.perms[rep_id]
            raw.append((rep.order(), len(members), rep, tuple(sorted(members))))
        raw.sort(key=lambda t: (t[0], t[1], t[2].images))
        classes = tuple(
            ConjClass(rep, size, order, i, members, self.order // size)
            for i, (order, size, rep, members) in enumerate(raw))
        if sum(c.size for c in classes) != self.order:
            raise AssertionError("class equation violated")
        return classes

    @cached_property
    def class_of_id(self) -> list[int]:
        out = [0] * self.order
        for c in self.conjugacy_classes:
            for i in c.member_ids:
                out[i] = c.index
        return out

    def class_of(self, g: Perm) -> int:
        return self.class_of_id[self.element_id(g)]

    @cached_property
    def exponent(self) -> int:
        return lcm(*(c.element_order for c in self.conjugacy_classes))

    @cached_property
    def power_map(self) -> list[list[int]]:
        """power_map[i][j] = class index of rep_i^j, for 0 <= j < order(rep_i)."""
        out = []
        for c in self.conjugacy_classes:
            row = []
            x = self.identity
            for _ in range(c.element_order):
                row.append(self.class_of(x))
                x = x * c.representative
            out.append(row)
        return out

    @cached_property
    def inverse_class(self) -> list[int]:
        return [self.class_of(c.representative.inverse()) for c in self.conjugacy_classes]

    @cached_property
    def is_abelian(self) -> bool:
        return all(a * b == b * a for a in self.generators for b in self.generators)

    # ---- subgroups of this group ----------------------------------------

    def subgroup(self, gens, element_ids: frozenset[int] | None = None) -> "Subgroup":
        return Subgroup(self, tuple(g for g in gens if not g.is_identity), element_ids)

    @cached_property
    def trivial_subgroup(self) -> "Subgroup":
        return self.subgroup((), frozenset({0}) if self.order <= MAX_ORDER else None)

    @cached_property
    def full_subgroup(self) -> "Subgroup":
        return self.subgroup(self.generators)

    def subgroup_from_ids(self, ids: frozenset[int]) -> "Subgroup":
        """Subgroup from a full element-id set, with a small generating set."""
        tab = self.table
        gens: list[Perm] = []
        have = StabilizerChain(self.degree, [])
        for i in sorted(ids):
            p = tab.perms[i]
            if not have.contains(p):
                gens.append(p)
                have = StabilizerChain(self.degree, gens)
                if have.order == len(ids):
                    break
        return self.subgroup(gens, frozenset(ids))

    # ---- normal structure ------------------------------------------------

    def normal_closure(self, seeds) -> "Subgroup":
        """Smallest normal subgroup containing the given elements."""
        gens = [s for s in seeds if not s.is_identity]
        chain = StabilizerChain(self.degree, gens)
        changed = True
        while changed:
            changed = False
            for h in list(gens):
                for g in self.generators:
                    c = h.conjugate_by(g)
                    if not chain.contains(c):
                        gens.append(c)
                        chain = StabilizerChain(self.degree, gens)
                        changed = True
        return self.subgroup(gens)

    def commutator_subgroup(self, left_gens, right_gens) -> "Subgroup":
        """Normal closure of commutators [a, b] over the two generator sets."""
        comms = []
        for a in left_gens:
            for b in right_gens:
                c = a.inverse() * b.inverse() * a * b
                if not c.is_identity:
                    comms.append(c)
        return self.normal_closure(comms)

    @cached_property
    def derived_subgroup(self) -> "Subgroup":
        return self.commutator_subgroup(self.generators, self.generators)

    @cached_property
    def is_solvable(self) -> bool:
        gens = list(self.generators)
        order = self.order
        while order > 1:
            derived = PermGroup(self.degree, gens).derived_subgroup
            if derived.order == order:
                return False
            gens = list(derived.gens)
            order = derived.order
        return True

    @cached_property
    def is_nilpotent(self) -> bool:
        layer = self.full_subgroup
        while layer.order > 1:
            nxt = self.commutator_subgroup(self.generators, layer.gens)
            if nxt.order == layer.order:
                return False
            layer = nxt
        return True

    @cached_property
    def is_perfect(self) -> bool:
        return self.derived_subgroup.order == self.order

    @cached_property
    def normal_subgroups(self) -> tuple["Subgroup", ...]:
        """All normal subgroups, as joins of class-generated normal closures."""
        self._check_order_bound()
        tab = self.table
        closures: dict[frozenset[int], "Subgroup"] = {}
        for c in self.conjugacy_classes:
            n = self.normal_closure([c.representative])
            ids = n.element_ids
            closures.setdefault(ids, n)
        found = dict(closures)
        found.setdefault(frozenset({0}), self.trivial_subgroup)
        worklist = list(found.keys())
        while worklist:
            a = worklist.pop()
            for b in list(found.keys()):
                if a | b in found:
                    continue
                join = self.subgroup_from_ids(_closure_ids(tab, a | b))
                if join.element_ids not in found:
                    found[join.element_ids] = join
                    worklist.append(join.element_ids)
        subs = sorted(found.values(), key=lambda s: (s.order, tuple(sorted(s.element_ids))))
        return tuple(subs)

    @cached_property
    def minimal_normal_subgroups(self) -> tuple["Subgroup", ...]:
        proper = [n for n in self.normal_subgroups if 1 < n.order]
        out = []
        for n in proper:
            if not any(1 < m.order < n.order and m.element_ids < n.element_ids
                       for m in proper):
                out.append(n)
        return tuple(out)

    # ---- pi-structure ------------------------------------------------------

    def o_pi_prime(self, pi: frozenset[int]) -> "Subgroup":
        """O_{pi'}(G): the largest normal subgroup of pi'-order."""
        best = self.trivial_subgroup
        for n in self.normal_subgroups:
            if pi_part(n.order, pi) == 1 and n.order > best.order:
                best = n
        return best

    def has_normal_pi_complement(self, pi: frozenset[int]) -> bool:
        """True iff the subgroup generated by all pi'-parts has pi'-order."""
        return self.normal_pi_complement_witness(pi) is not None

    def normal_pi_complement_witness(self, pi: frozenset[int]) -> "Subgroup | None":
        tab = self.table
        target = pi_prime_part(self.order, pi)
        gens_ids = set()
        for c in self.conjugacy_classes:
            npart = pi_part(c.element_order, pi)
            for i in c.member_ids:
                p = tab.perms[i] ** npart
                gens_ids.add(tab.index[p])
        ids = _closure_ids(tab, frozenset(gens_ids) | {0})
        if len(ids) != target:
            return None
        return self.subgroup_from_ids(ids)

    def is_pi_separable(self, pi: frozenset[int]) -> bool:
        """A chief series exists whose factors are pi-groups or pi'-groups."""
        if self.order == 1:
            return True
        for n in self.minimal_normal_subgroups:
            n_pi = pi_part(n.order, pi)
            if n_pi != n.order and n_pi != 1:
                return False
        n = self.minimal_normal_subgroups[0]
        if n.order == self.order:
            return True
        return coset_action(self, n).image.is_pi_separable(pi)

    # ---- primitivity (used by invariants) ----------------------------------

    def is_transitive(self) -> bool:
        seen = {0}
        queue = [0]
        while queue:
            a = queue.pop()
            for g in self.generators:
                b = g(a)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return len(seen) == self.degree

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system (Atkinson's test)."""
        if not self.is_transitive():
            return False
        if self.degree == 1:
            return True
        for w in range(1, self.degree):
            parent = list(range(self.degree))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def union(x, y):
                rx, ry = find(x), find(y)
                if rx == ry:
                    return False
                parent[max(rx, ry)] = min(rx, ry)
                return True

            union(0, w)
            queue = [(0, w)]
            while queue:
                a, b = queue.pop()
                for g in self.generators:
                    x, y = g(a), g(b)
                    if union(x, y):
                        queue.append((x, y))
            size = len({find(x) for x in range(self.degree)})
            if size != 1 and size != self.degree:
                return False
        return True


def _closure_ids(tab: ElementTable, seed_ids: frozenset[int]) -> frozenset[int]:
    """Subgroup closure of a set of element ids (always contains identity)."""
    ids = set(seed_ids) | {0}
    queue = list(ids)
    gens = [i for i in seed_ids if i != 0]
    while queue:
        a = queue.pop()
        for b in gens:
            c = tab.mul(a, b)
            if c not in ids:
                ids.add(c)
                queue.append(c)
    return frozenset(ids)


# ---------------------------------------------------------------------------
# subgroups as first-class values
# ---------------------------------------------------------------------------

class Subgroup:
    """A subgroup of an ambient group, held as generators (and, lazily, as an
    element-id set over the ambient element table)."""

    def __init__(self, ambient: PermGroup, gens: tuple[Perm, ...],
                 element_ids: frozenset[int] | None = None):
        self.ambient = ambient
        self.gens = tuple(gens)
        self._element_ids = element_ids

    @cached_property
    def group(self) -> PermGroup:
        return PermGroup(self.ambient.degree, self.gens,
                         name=f"subgroup<order {self.order}> of {self.ambient.name}")

    @cached_property
    def order(self) -> int:
        if self._element_ids is not None:
            return len(self._element_ids)
        return StabilizerChain(self.ambient.degree, self.gens).order

    @property
    def index(self) -> int:
        q, r = divmod(self.ambient.order, self.order)
        if r:
            raise AssertionError("subgroup order does not divide group order")
        return q

    @cached_property
    def element_ids(self) -> frozenset[int]:
        if self._element_ids is not None:
            return self._element_ids
        tab = self.ambient.table
        seed = frozenset(tab.index[g] for g in self.gens)
        ids = _closure_ids(tab, seed)
        if len(ids) != self.order:
            raise AssertionError("closure disagrees with chain order")
        return ids

    def elements(self) -> list[Perm]:
        tab = self.ambient.table
        return [tab.perms[i] for i in sorted(self.element_ids)]

    def contains_perm(self, g: Perm) -> bool:
        if self._element_ids is not None and g in self.ambient.table.index:
            return self.ambient.table.index[g] in self._element_ids
        return StabilizerChain(self.ambient.degree, self.gens).contains(g)

    def conjugate_ids(self, g: Perm) -> frozenset[int]:
        tab = self.ambient.table
        ginv = g.inverse()
        return frozenset(tab.index[ginv * tab.perms[i] * g] for i in self.element_ids)

    def is_normal(self) -> bool:
        return all(self.conjugate_ids(g) == self.element_ids
                   for g in self.ambient.generators)

    def canonical_key(self):
        return (self.order, tuple(sorted(self.element_ids)))

    def __repr__(self):
        return f"Subgroup(order={self.order}, index={self.index} in {self.ambient.name})"


# ---------------------------------------------------------------------------
# coset actions, cores, quotients
# ---------------------------------------------------------------------------

@dataclass
class CosetAction:
    """The action of G on right cosets of H, as a new permutation group.

    Point i corresponds to the coset H*reps[i]; image_of is the action
    homomorphism G -> image.
    """

    source: PermGroup
    subgroup: Subgroup
    image: PermGroup
    reps: list[Perm]
    _sig_to_point: dict[int, int] = field(repr=False, default_factory=dict)

    def _signature(self, x: Perm) -> int:
        tab = self.source.table
        xid = tab.index[x]
        return min(tab.mul(h, xid) for h in self.subgroup.element_ids)

    def point_of(self, x: Perm) -> int:
        return self._sig_to_point[self._signature(x)]

    def image_of(self, g: Perm) -> Perm:
        return Perm(self.point_of(self.reps[i] * g) for i in range(len(self.reps)))

    @cached_property
    def kernel(self) -> Subgroup:
        """Core of the subgroup: intersection of its conjugates by coset reps."""
        ids = self.subgroup.element_ids
        for r in self.reps:
            if len(ids) == 1:
                break
            ids = ids & self.subgroup.conjugate_ids(r)
        return self.source.subgroup_from_ids(frozenset(ids))


def coset_action(G: PermGroup, H: Subgroup) -> CosetAction:
    """Transitive action of G on the right cosets of H; kernel = Core_G(H)."""
    if H.ambient is not G:
        raise ValueError("subgroup belongs to a different group")
    tab = G.table
    ident = G.identity
    reps = [ident]
    act = CosetAction(G, H, None, reps)  # type: ignore[arg-type]
    sig_to_point = {act._signature(ident): 0}
    act._sig_to_point = sig_to_point
    queue = [0]
    while queue:
        i = queue.pop(0)
        for g in G.generators:
            x = reps[i] * g
            sig = act._signature(x)
            if sig not in sig_to_point:
                sig_to_point[sig] = len(reps)
                reps.append(tab.perms[sig])
                queue.append(len(reps) - 1)
    npoints = len(reps)
    if npoints != H.index:
        raise AssertionError("coset count disagrees with subgroup index")
    image_gens = []
    for g in G.generators:
        images = [sig_to_point[act._signature(reps[i] * g)] for i in range(npoints)]
        image_gens.append(Perm(images))
    act.image = PermGroup(npoints, image_gens,
                          name=f"{G.name} on {npoints} cosets")
    return act


def core(G: PermGroup, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G contained in H."""
    return coset_action(G, H).kernel


def quotient(G: PermGroup, N: Subgroup) -> tuple[PermGroup, CosetAction]:
    """G/N realized faithfully as the coset action on N's cosets."""
    if not N.is_normal():
        raise ValueError("quotient by a non-normal subgroup")
    act = coset_action(G, N)
    return act.image, act


# ---------------------------------------------------------------------------
# spec-level constructors / operations
# ---------------------------------------------------------------------------

def make_group(degree: int, generator_words: list[str], name: str | None = None) -> PermGroup:
    """Build a group from cycle-notation generator words."""
    gens = [parse_cycles(w, degree) for w in generator_words]
    return PermGroup(degree, gens, name=name)


def conjugacy_classes(G: PermGroup) -> tuple[ConjClass, ...]:
    return G.conjugacy_classes


def is_solvable(G: PermGroup) -> bool:
    return G.is_solvable


def is_nilpotent(G: PermGroup) -> bool:
    return G.is_nilpotent


def normal_subgroups(G: PermGroup) -> tuple[Subgroup, ...]:
    return G.normal_subgroups


def o_pi_prime(G: PermGroup, pi: frozenset[int]) -> Subgroup:
    return G.o_pi_prime(pi)


def has_normal_pi_complement(G: PermGroup, pi: frozenset[int]) -> bool:
    return G.has_normal_pi_complement(pi)


def is_pi_separable(G: PermGroup, pi: frozenset[int]) -> bool:
    return G.is_pi_separable(pi)
