"""Built-in group constructors and file ingestion.

Spec strings:  sym:N  alt:N  cyc:N  dih:N (dihedral of ORDER N, N even)
q8  sl23  psl2:Q  prod:<spec>,<spec>,...  file:<path>

PSL(2,q) acts on the q+1 projective points, generated by the unipotent
translations x -> x + b for a basis of the field and the Weyl reflection
x -> -1/x.  Fields of order p^k are F_p[x]/(f) with a fixed irreducible f
per field (self-checked at startup), so every construction is bit-exact
reproducible.

Nonsolvable catalog groups carry curated subgroup-enumeration metadata:
for PSL(2,9) and PSL(2,11) a deterministic search attaches the two classes
of order-60 perfect subgroups as seeds; for the other shipped q the
classical subgroup classification guarantees all proper subgroups are
solvable, so the seed list is empty.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from .numth import factorint, is_prime
from .permgroup import PermGroup, StabilizerChain
from .perms import Perm, parse_group_text

# fixed defining polynomials, ascending coefficients (constant first)
FIELD_POLYS = {
    4: (2, (1, 1, 1)),        # x^2 + x + 1 over F2
    8: (2, (1, 1, 0, 1)),     # x^3 + x + 1 over F2
    9: (3, (1, 0, 1)),        # x^2 + 1 over F3
    27: (3, (1, 2, 0, 1)),    # x^3 - x + 1 over F3
}

SUPPORTED_PSL_Q = (4, 5, 7, 8, 9, 11, 13, 27)


class GF:
    """Small finite field F_{p^k}; elements are coefficient tuples."""

    def __init__(self, q: int):
        fact = factorint(q)
        if len(fact) != 1:
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        self.p = next(iter(fact))
        self.k = fact[self.p]
        if self.k == 1:
            self.poly = None
        else:
            p, poly = FIELD_POLYS[q]
            if p != self.p:
                raise AssertionError("field table is inconsistent")
            self.poly = poly
            if not self._is_irreducible(poly):
                raise AssertionError(f"defining polynomial for F{q} is reducible")
        self.elements = [self._decode(i) for i in range(q)]

    def _decode(self, i: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.k):
            coeffs.append(i % self.p)
            i //= self.p
        return tuple(coeffs)

    def encode(self, x: tuple[int, ...]) -> int:
        code = 0
        for c in reversed(x):
            code = code * self.p + c
        return code

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    @property
    def zero(self):
        return (0,) * self.k

    @property
    def one(self):
        return (1,) + (0,) * (self.k - 1)

    def mul(self, a, b):
        if self.k == 1:
            return ((a[0] * b[0]) % self.p,)
        raw = [0] * (2 * self.k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    raw[i + j] = (raw[i + j] + x * y) % self.p
        # reduce by the defining polynomial (monic)
        for d in range(len(raw) - 1, self.k - 1, -1):
            c = raw[d]
            if c:
                raw[d] = 0
                for j in range(self.k):
                    raw[d - self.k + j] = (raw[d - self.k + j] - c * self.poly[j]) % self.p
        return tuple(raw[: self.k])

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("field inverse of zero")
        # a^(q-2)
        out, base, n = self.one, a, self.q - 2
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def _is_irreducible(self, poly) -> bool:
        # no roots and (for degree <= 3) that's enough
        deg = len(poly) - 1
        if deg > 3:
            raise NotImplementedError("only fields up to cubic extensions are shipped")
        for i in range(self.p):
            x = (i,) if True else None
            acc = 0
            for c in reversed(poly):
                acc = (acc * i + c) % self.p
            if acc == 0:
                return False
        return True


def symmetric_group(n: int) -> PermGroup:
    deg = max(n, 1)
    gens = []
    if n >= 2:
        gens.append(Perm([1, 0] + list(range(2, deg))))
    if n >= 3:
        gens.append(Perm(list(range(1, n)) + [0]))
    return PermGroup(deg, gens, name=f"sym:{n}")


def alternating_group(n: int) -> PermGroup:
    deg = max(n, 1)
    if n < 3:
        return PermGroup(deg, [], name=f"alt:{n}")
    gens = [Perm([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        if n % 2:
            gens.append(Perm(list(range(1, n)) + [0]))
        else:
            gens.append(Perm([0] + list(range(2, n)) + [1]))
    return PermGroup(deg, gens, name=f"alt:{n}")


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [], name="cyc:1")
    return PermGroup(n, [Perm(list(range(1, n)) + [0])], name=f"cyc:{n}")


def dihedral_group(order: int) -> PermGroup:
    """Dihedral group of the given (even, >= 4) order, on order/2 points."""
    if order % 2 or order < 4:
        raise ValueError("dihedral order must be even and at least 4")
    n = order // 2
    if n == 2:
        return PermGroup(4, [Perm([1, 0, 2, 3]), Perm([0, 1, 3, 2])], name="dih:4")
    rot = Perm(list(range(1, n)) + [0])
    refl = Perm([(-i) % n for i in range(n)])
    return PermGroup(n, [rot, refl], name=f"dih:{order}")


def quaternion_group() -> PermGroup:
    # regular action on 1, i, -1, -i, j, k, -j, -k
    return PermGroup(8, [Perm([1, 2, 3, 0, 5, 6, 7, 4]),
                         Perm([4, 7, 6, 5, 2, 1, 0, 3])], name="q8")


def sl23_group() -> PermGroup:
    """SL(2,3) on the 8 nonzero vectors of F3 x F3 (lexicographic order)."""
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(matrix):
        a, b, c, d = matrix
        images = []
        for (x, y) in vecs:
            images.append(idx[((a * x + b * y) % 3, (c * x + d * y) % 3)])
        return Perm(images)

    s = act((0, 2, 1, 0))   # [[0,-1],[1,0]]
    t = act((1, 1, 0, 1))   # [[1,1],[0,1]]
    return PermGroup(8, [s, t], name="sl23")


@lru_cache(maxsize=None)
def psl2_group(q: int) -> PermGroup:
    """PSL(2,q) on the projective line: point 0 is infinity, point i+1 is
    the field element with code i."""
    if q not in SUPPORTED_PSL_Q:
        raise ValueError(f"psl2:{q} is not in the shipped catalog {SUPPORTED_PSL_Q}")
    F = GF(q)
    INF = None

    def moebius_perm(fn):
        images = []
        for pt in range(q + 1):
            x = INF if pt == 0 else F.elements[pt - 1]
            y = fn(x)
            images.append(0 if y is INF else F.encode(y) + 1)
        return Perm(images)

    gens = []
    basis = [F._decode(F.p ** i) for i in range(F.k)]  # 1, x, x^2, ...
    for b in basis:
        gens.append(moebius_perm(lambda x, b=b: INF if x is INF else F.add(x, b)))
    gens.append(moebius_perm(
        lambda x: (F.zero if x is INF else (INF if x == F.zero else F.neg(F.inv(x))))))
    G = PermGroup(q + 1, gens, name=f"psl2:{q}")
    expected = q * (q * q - 1) // (2 if q % 2 else 1)
    if G.order != expected:
        raise AssertionError(f"psl2:{q} order {G.order}, expected {expected}")
    _attach_psl_metadata(G, q)
    return G


def _attach_psl_metadata(G: PermGroup, q: int):
    G.enumeration_certificate = "catalog"
    if q in (9, 11):
        G.perfect_seeds = _find_order60_perfect_seeds(G, expected_classes=2)
    else:
        # classical subgroup classification: all proper subgroups solvable
        G.perfect_seeds = ()


def _find_order60_perfect_seeds(G: PermGroup, expected_classes: int):
    """Deterministic scan for the order-60 perfect subgroups: every such
    subgroup is generated by one of its (involution, order-3) pairs."""
    tab = G.table
    classes = G.conjugacy_classes
    invol = [i for c in classes if c.element_order == 2 for i in c.member_ids]
    order3 = [i for c in classes if c.element_order == 3 for i in c.member_ids]
    found: dict[frozenset[int], tuple[Perm, ...]] = {}
    for a in invol:
        pa = tab.perms[a]
        for b in order3:
            pb = tab.perms[b]
            ids = _bounded_closure(tab, (a, b), 60)
            if ids is not None and len(ids) == 60:
                if ids not in found:
                    found[ids] = (pa, pb)
    # group into conjugacy classes to sanity-check the expected count
    remaining = set(found)
    reps = []
    while remaining:
        s = min(remaining, key=lambda f: tuple(sorted(f)))
        orbit = {s}
        queue = [s]
        while queue:
            t = queue.pop()
            for cmap in tab.conj_maps:
                u = frozenset(cmap[i] for i in t)
                if u not in orbit:
                    orbit.add(u)
                    queue.append(u)
        reps.append(found[s])
        remaining -= orbit
    if len(reps) != expected_classes:
        raise AssertionError(
            f"expected {expected_classes} classes of order-60 perfect subgroups "
            f"in {G.name}, found {len(reps)}")
    return tuple(reps)


def _bounded_closure(tab, seed_ids, bound):
    ids = {0, *seed_ids}
    queue = list(ids - {0})
    gens = list(seed_ids)
    while queue:
        a = queue.pop()
        for b in gens:
            c = tab.mul(a, b)
            if c not in ids:
                if len(ids) >= bound:
                    return None
                ids.add(c)
                queue.append(c)
    return frozenset(ids)


def direct_product(groups: list[PermGroup], name: str) -> PermGroup:
    degree = sum(g.degree for g in groups)
    gens = []
    offset = 0
    for g in groups:
        for p in g.generators:
            images = list(range(degree))
            for i, j in enumerate(p.images):
                images[offset + i] = offset + j
            gens.append(Perm(images))
        offset += g.degree
    prod = PermGroup(degree, gens, name=name)
    return prod


def parse_group_file(path: str | Path) -> PermGroup:
    text = Path(path).read_text()
    degree, gens = parse_group_text(text)
    return PermGroup(degree, gens, name=f"file:{path}")


@lru_cache(maxsize=None)
def build(spec: str) -> PermGroup:
    """Build a group from its spec string; construction is bit-exact."""
    spec = spec.strip()
    if spec.startswith("prod:"):
        atoms = [t.strip() for t in spec[len("prod:"):].split(",") if t.strip()]
        if len(atoms) < 2:
            raise ValueError("prod: needs at least two components")
        if any(a.startswith(("prod", "file")) for a in atoms):
            raise ValueError("prod: components must be atomic specs")
        groups = [build(a) for a in atoms]
        return direct_product(groups, name=spec)
    if spec.startswith("file:"):
        return parse_group_file(spec[len("file:"):])
    if spec == "q8":
        return quaternion_group()
    if spec == "sl23":
        return sl23_group()
    head, _, arg = spec.partition(":")
    if not arg or not arg.isdigit():
        raise ValueError(f"unknown group spec {spec!r}")
    n = int(arg)
    if head == "sym":
        if n < 1:
            raise ValueError("sym:N needs N >= 1")
        return symmetric_group(n)
    if head == "alt":
        if n < 1:
            raise ValueError("alt:N needs N >= 1")
        return alternating_group(n)
    if head == "cyc":
        if n < 1:
            raise ValueError("cyc:N needs N >= 1")
        return cyclic_group(n)
    if head == "dih":
        return dihedral_group(n)
    if head == "psl2":
        return psl2_group(n)
    raise ValueError(f"unknown group spec {spec!r}")


# documented maximal subgroup data for the shipped psl2 groups:
# {q: list of (index, order, number of classes)}
PSL2_MAXIMAL_DATA = {
    4: [(5, 12, 1), (6, 10, 1), (10, 6, 1)],
    5: [(5, 12, 1), (6, 10, 1), (10, 6, 1)],
    7: [(7, 24, 2), (8, 21, 1)],
    8: [(9, 56, 1), (28, 18, 1), (36, 14, 1)],
    9: [(6, 60, 2), (10, 36, 1), (15, 24, 2)],
    11: [(11, 60, 2), (12, 55, 1), (55, 12, 1)],
    13: [(14, 78, 1), (78, 14, 1), (91, 12, 2)],
    27: [(28, 351, 1), (351, 28, 1), (378, 26, 1), (819, 12, 1)],
}


def default_solvable_specs() -> list[str]:
    """The solvable built-in battery used by the verification harness."""
    cyc = [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30, 36, 60]
    dih = [4, 6, 8, 10, 12, 14, 16, 18, 20, 24, 30, 60]
    specs = [f"cyc:{n}" for n in cyc] + [f"dih:{n}" for n in dih]
    specs += ["sym:2", "sym:3", "sym:4", "alt:3", "alt:4", "q8", "sl23",
              "prod:cyc:2,cyc:2", "prod:cyc:2,cyc:4", "prod:cyc:2,cyc:2,cyc:2",
              "prod:cyc:3,cyc:3", "prod:sym:3,cyc:2", "prod:sym:3,sym:3",
              "prod:alt:4,cyc:2", "prod:q8,cyc:3", "prod:dih:8,cyc:3",
              "prod:cyc:5,cyc:5"]
    return specs


def default_nonsolvable_specs(max_q: int = 13) -> list[str]:
    return ["alt:5"] + [f"psl2:{q}" for q in SUPPORTED_PSL_Q if q <= max_q]


def scan_specs(max_order: int = 60) -> list[str]:
    """Every spec-grammar group of order <= max_order (single atoms and
    direct products), plus the shipped nonsolvable list."""
    atoms: list[tuple[str, int]] = []
    atoms += [(f"cyc:{n}", n) for n in range(2, max_order + 1)]
    atoms += [(f"dih:{n}", n) for n in range(4, max_order + 1, 2)]
    for spec, order in [("sym:3", 6), ("sym:4", 24), ("alt:4", 12), ("alt:5", 60),
                        ("q8", 8), ("sl23", 24), ("psl2:4", 60), ("psl2:5", 60)]:
        if order <= max_order:
            atoms.append((spec, order))
    specs = {"cyc:1"}
    specs.update(s for s, _ in atoms)
    # products: multisets of atoms (nonsolvable atoms excluded: their smallest
    # product already exceeds any max_order <= 3600)
    prod_atoms = [(s, o) for s, o in atoms if s not in ("alt:5", "psl2:4", "psl2:5")]

    def extend(prefix: list[str], start: int, order: int):
        for i in range(start, len(prod_atoms)):
            s, o = prod_atoms[i]
            if order * o > max_order:
                continue
            chosen = prefix + [s]
            if len(chosen) >= 2:
                specs.add("prod:" + ",".join(chosen))
            extend(chosen, i, order * o)

    extend([], 0, 1)
    for s in default_nonsolvable_specs():
        specs.add(s)
    return sorted(specs)
