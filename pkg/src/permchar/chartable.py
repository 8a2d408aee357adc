"""Exact character tables and class-function arithmetic.

Tables are computed by the Dixon-Schneider method: class-algebra structure
constants give commuting integer matrices whose common eigenvectors over a
well-chosen prime field GF(p) (p = 1 mod exp(G), p > 2*sqrt(|G|)) are the
central characters; degrees and values are recovered exactly and lifted to
cyclotomic integers through the power map and a discrete Fourier inversion
mod p.  Splitting is sequential over class matrices and fully deterministic,
so tables are byte-stable across runs.  Abelian groups short-circuit to the
direct dual construction (same output, no modular detour).

Everything downstream (inner products, fusion, restriction, induction,
linear characters, kernels) is exact cyclotomic arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt

from .cyclo import Cyclo, cyclo_sum, render_cyclo, root_product
from .numth import smallest_primitive_root, sqrt_mod
from .permgroup import PermGroup, Subgroup, _closure_ids, coset_action
from .perms import Perm

PRIME_SEARCH_BOUND = 2**31


class NoAdmissiblePrimeError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# class functions
# ---------------------------------------------------------------------------

class ClassFunction:
    """A function constant on conjugacy classes, with exact cyclotomic values
    indexed by the group's canonical class order."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values):
        values = tuple(v if isinstance(v, Cyclo) else Cyclo.rational(v) for v in values)
        if len(values) != len(group.conjugacy_classes):
            raise ValueError("value count does not match class count")
        self.group = group
        self.values = values

    @property
    def degree(self) -> Cyclo:
        return self.values[0]

    def __call__(self, g: Perm) -> Cyclo:
        return self.values[self.group.class_of(g)]

    def __eq__(self, other):
        return (isinstance(other, ClassFunction) and self.group is other.group
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __add__(self, other):
        self._same(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def conj(self):
        return ClassFunction(self.group, [v.conj() for v in self.values])

    def is_zero(self):
        return all(v.is_zero() for v in self.values)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.values)

    def __repr__(self):
        vals = ", ".join(render_cyclo(v) for v in self.values)
        return f"ClassFunction[{self.group.name}]({vals})"

    def _same(self, other):
        if self.group is not other.group:
            raise ValueError("class functions live on different groups")


def trivial_character(G: PermGroup) -> ClassFunction:
    return ClassFunction(G, [1] * len(G.conjugacy_classes))


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclo:
    """<a, b> = (1/|G|) sum over classes of size * a(g) * conj(b(g))."""
    if a.group is not b.group:
        raise ValueError("class functions live on different groups")
    G = a.group
    terms = [(va * vb.conj()).scale(cls.size)
             for cls, va, vb in zip(G.conjugacy_classes, a.values, b.values)
             if not (va.is_zero() or vb.is_zero())]
    return cyclo_sum(terms).scale(Fraction(1, G.order))


# ---------------------------------------------------------------------------
# character table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    group: PermGroup
    rows: tuple[ClassFunction, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.degree.as_integer() for r in self.rows)

    def row_index(self, cf: ClassFunction) -> int | None:
        for i, row in enumerate(self.rows):
            if row.values == cf.values:
                return i
        return None

    def decompose(self, cf: ClassFunction) -> list[tuple[int, int]]:
        """Multiplicities of each irreducible in a character, exactly."""
        out = []
        for i, row in enumerate(self.rows):
            m = inner_product(cf, row)
            q = m.as_rational()
            if q is None or q.denominator != 1 or q < 0:
                raise ValueError(f"not a character: multiplicity {m} at row {i}")
            if q:
                out.append((i, int(q)))
        return out


def character_table(G: PermGroup) -> CharacterTable:
    cached = getattr(G, "_character_table", None)
    if cached is not None:
        return cached
    classes = G.conjugacy_classes
    if len(classes) == G.order:
        rows = _abelian_rows(G)
    else:
        rows = _dixon_schneider_rows(G)
    rows.sort(key=lambda r: (r.degree.as_integer(),
                             0 if all(v == Cyclo.rational(1) for v in r.values) else 1,
                             r.sort_key()))
    if sum(d * d for d in (r.degree.as_integer() for r in rows)) != G.order:
        raise AssertionError("sum of squared degrees != |G|")
    if [v.as_rational() for v in rows[0].values] != [1] * len(classes):
        raise AssertionError("first table row is not the trivial character")
    table = CharacterTable(G, tuple(rows))
    G._character_table = table
    return table


# ---- abelian duals ---------------------------------------------------------

def abelian_decomposition(A: PermGroup) -> list[tuple[Perm, int]]:
    """Write an abelian group as a direct product of cyclic factors.

    Deterministic generator stripping: take an element of maximal order
    (ties broken by image tuple), split it off, recurse on the quotient and
    correct the lifted generators to get a true direct decomposition.
    """
    if not A.is_abelian:
        raise ValueError("group is not abelian")
    if A.order == 1:
        return []
    tab = A.table
    a = min((p for p in tab.perms if not p.is_identity),
            key=lambda p: (-p.order(), p.images))
    m = a.order()
    if m == A.order:
        return [(a, m)]
    asub = A.subgroup([a])
    act = coset_action(A, asub)
    Q = act.image
    factors = [(a, m)]
    # powers of a for discrete logs in <a>
    apow = {}
    x = A.identity
    for t in range(m):
        apow[x] = t
        x = x * a
    for qgen, qord in abelian_decomposition(Q):
        b = act.reps[qgen(0)]          # section: quotient is regular on cosets
        t = apow[b**qord]              # b^qord lands in <a>
        if t:
            if t % qord:
                raise AssertionError("abelian lift correction failed")
            b = b * a ** (m - t // qord)
        factors.append((b, qord))
    total = 1
    for _, k in factors:
        total *= k
    if total != A.order:
        raise AssertionError("abelian decomposition order mismatch")
    return factors


def _abelian_rows(G: PermGroup) -> list[ClassFunction]:
    factors = abelian_decomposition(G)
    tab = G.table
    # exponent vector of every element in the chosen factorization
    exps: dict[int, tuple[int, ...]] = {}
    def fill(i, current, vec):
        if i == len(factors):
            exps[tab.index[current]] = tuple(vec)
            return
        gen, m = factors[i]
        x = current
        for e in range(m):
            fill(i + 1, x, vec + [e])
            x = x * gen
    fill(0, G.identity, [])
    class_rep_exp = [exps[tab.index[c.representative]] for c in G.conjugacy_classes]
    rows = []
    def characters(i, vec):
        if i == len(factors):
            row = [root_product([(m, aa * ee) for (_, m), aa, ee in zip(factors, vec, rep)])
                   for rep in class_rep_exp]
            rows.append(ClassFunction(G, row))
            return
        for aa in range(factors[i][1]):
            characters(i + 1, vec + [aa])
    characters(0, [])
    return rows


# ---- GF(p) linear algebra ---------------------------------------------------

def _rref(vectors, p):
    """Reduced row-echelon form mod p; returns (rows, pivot_columns)."""
    rows = [list(v) for v in vectors]
    pivots = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]], pivots


def _nullspace(M, p):
    """Basis of the nullspace of square matrix M mod p (column vectors)."""
    n = len(M)
    rows, pivots = _rref(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = (-r[fc]) % p
        basis.append(tuple(v))
    return basis


def _charpoly_mod(M, p):
    """Characteristic polynomial det(xI - M) mod p, ascending coefficients."""
    n = len(M)
    H = [[x % p for x in row] for row in M]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if H[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            H[piv], H[k + 1] = H[k + 1], H[piv]
            for row in H:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        inv = pow(H[k + 1][k], p - 2, p)
        for i in range(k + 2, n):
            if H[i][k]:
                f = H[i][k] * inv % p
                H[i] = [(x - f * y) % p for x, y in zip(H[i], H[k + 1])]
                for row in H:
                    row[k + 1] = (row[k + 1] + f * row[i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        # (x - H[k-1][k-1]) * prev
        poly = [0] + prev
        c = H[k - 1][k - 1]
        poly = [(a - c * b) % p for a, b in zip(poly, prev + [0])]
        subprod = 1
        for i in range(k - 2, -1, -1):
            subprod = subprod * H[i + 1][i] % p
            coeff = H[i][k - 1] * subprod % p
            if coeff:
                pi = polys[i]
                for t in range(len(pi)):
                    poly[t] = (poly[t] - coeff * pi[t]) % p
        polys.append(poly)
    return polys[n]


def _poly_roots_mod(poly, p):
    """All roots in GF(p) of a polynomial (ascending coefficients)."""
    roots = []
    for z in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * z + c) % p
        if acc == 0:
            roots.append(z)
    return roots


def _matvec(M, v, p):
    return tuple(sum(mij * vj for mij, vj in zip(row, v)) % p for row in M)


# ---- Dixon-Schneider --------------------------------------------------------

def admissible_prime(G: PermGroup) -> int:
    """Smallest prime p = 1 mod exp(G) with p^2 > 4|G|, searched ascending."""
    from .numth import is_prime
    e = G.exponent
    p = e + 1
    while p < PRIME_SEARCH_BOUND:
        if p * p > 4 * G.order and is_prime(p):
            return p
        p += e
    raise NoAdmissiblePrimeError(
        f"no prime p = 1 (mod {e}) with p > 2*sqrt({G.order}) below {PRIME_SEARCH_BOUND}")


def _class_matrix_mod(G: PermGroup, i: int, p: int):
    """A_i with A_i[j][k] = #{(x,y) in C_i x C_j : xy = rep_k}, mod p."""
    classes = G.conjugacy_classes
    tab = G.table
    r = len(classes)
    A = [[0] * r for _ in range(r)]
    cls_of = G.class_of_id
    rep_ids = [tab.index[c.representative] for c in classes]
    for k, zk in enumerate(rep_ids):
        for x in classes[i].member_ids:
            y = tab.mul(tab.inverse[x], zk)
            A[cls_of[y]][k] += 1
    return [[x % p for x in row] for row in A]


def _dixon_schneider_rows(G: PermGroup) -> list[ClassFunction]:
    classes = G.conjugacy_classes
    r = len(classes)
    g = G.order
    e = G.exponent
    p = admissible_prime(G)
    # split the full space into common eigenspaces of the class matrices
    subspaces = [([tuple(1 if j == i else 0 for j in range(r)) for i in range(r)],
                  list(range(r)))]
    for i in range(1, r):
        if all(len(b) == 1 for b, _ in subspaces):
            break
        A = _class_matrix_mod(G, i, p)
        nxt = []
        for basis, pivots in subspaces:
            d = len(basis)
            if d == 1:
                nxt.append((basis, pivots))
                continue
            images = [_matvec(A, b, p) for b in basis]
            M = [[images[s][pivots[t]] for s in range(d)] for t in range(d)]
            eigs = sorted(set(_poly_roots_mod(_charpoly_mod(M, p), p)))
            for lam in eigs:
                shifted = [[(M[a][b] - (lam if a == b else 0)) % p for b in range(d)]
                           for a in range(d)]
                null = _nullspace(shifted, p)
                if not null:
                    continue
                ambient = []
                for coord in null:
                    v = [0] * r
                    for s, cs in enumerate(coord):
                        if cs:
                            for t in range(r):
                                v[t] = (v[t] + cs * basis[s][t]) % p
                    ambient.append(tuple(v))
                nb, npiv = _rref(ambient, p)
                nxt.append((nb, npiv))
        subspaces = nxt
    if any(len(b) != 1 for b, _ in subspaces):
        raise AssertionError("class-matrix splitting did not reach dimension 1")
    # lift each central character to an exact row
    zroot = pow(smallest_primitive_root(p), (p - 1) // e, p)
    sizes = [c.size for c in classes]
    inv_sizes = [pow(s, p - 2, p) for s in sizes]
    invclass = G.inverse_class
    pmap = G.power_map
    rows = []
    for basis, _ in subspaces:
        w = basis[0]
        if w[0] == 0:
            raise AssertionError("central character vanishes on the identity class")
        scale = pow(w[0], p - 2, p)
        w = tuple(x * scale % p for x in w)
        s = sum(w[i] * w[invclass[i]] % p * inv_sizes[i] for i in range(r)) % p
        d2 = g * pow(s, p - 2, p) % p
        d = sqrt_mod(d2, p)
        d = min(d, p - d)
        chi_p = [d * w[i] % p * inv_sizes[i] % p for i in range(r)]
        values = []
        for i in range(r):
            m = classes[i].element_order
            zm = pow(zroot, e // m, p)
            minv = pow(m, p - 2, p)
            coeffs = {}
            for k in range(m):
                ck = 0
                for j in range(m):
                    ck += chi_p[pmap[i][j]] * pow(zm, (-j * k) % m, p)
                ck = ck * minv % p
                if ck:
                    if ck > 2 * isqrt(g):
                        raise AssertionError("lifted coefficient exceeds the degree bound")
                    coeffs[k] = Fraction(ck)
            values.append(Cyclo(m, coeffs))
        if values[0].as_rational() != d:
            raise AssertionError("lifted degree mismatch")
        rows.append(ClassFunction(G, values))
    if len(rows) != r:
        raise AssertionError("wrong number of irreducible characters")
    return rows


# ---------------------------------------------------------------------------
# fusion, restriction, induction
# ---------------------------------------------------------------------------

def fusion(H: Subgroup) -> tuple[int, ...]:
    """Map each conjugacy class of H to the ambient class containing it."""
    G = H.ambient
    return tuple(G.class_of(c.representative) for c in H.group.conjugacy_classes)


def restrict(chi: ClassFunction, H: Subgroup) -> ClassFunction:
    if chi.group is not H.ambient:
        raise ValueError("character does not live on the ambient group")
    fus = fusion(H)
    return ClassFunction(H.group, [chi.values[t] for t in fus])


def induce(lam: ClassFunction, H: Subgroup) -> ClassFunction:
    """Induced class function on the ambient group, via class fusion:
    lam^G(g) = |C_G(g)| * sum over H-classes c fusing into g^G of
    lam(c)/|C_H(c)|."""
    G = H.ambient
    if lam.group is not H.group:
        raise ValueError("class function does not live on the given subgroup")
    fus = fusion(H)
    hclasses = H.group.conjugacy_classes
    values = []
    for i, gcls in enumerate(G.conjugacy_classes):
        total = cyclo_sum(
            lam.values[c].scale(Fraction(1, hcls.centralizer_order))
            for c, hcls in enumerate(hclasses) if fus[c] == i)
        values.append(total.scale(gcls.centralizer_order))
    return ClassFunction(G, values)


# ---------------------------------------------------------------------------
# linear characters, kernels
# ---------------------------------------------------------------------------

def linear_characters(H: Subgroup) -> list[ClassFunction]:
    """All |H : H'| degree-1 characters of H, as class functions on H.group."""
    Hgrp = H.group
    derived = Hgrp.derived_subgroup
    if derived.order == 1:
        duals = _abelian_rows(Hgrp)
        duals.sort(key=lambda r: r.sort_key())
        return duals
    act = coset_action(Hgrp, derived)
    A = act.image
    factors = abelian_decomposition(A)
    tab = A.table
    exps: dict[int, tuple[int, ...]] = {}
    def fill(i, current, vec):
        if i == len(factors):
            exps[tab.index[current]] = tuple(vec)
            return
        gen, m = factors[i]
        x = current
        for e in range(m):
            fill(i + 1, x, vec + [e])
            x = x * gen
    fill(0, A.identity, [])
    class_images = [act.image_of(c.representative) for c in Hgrp.conjugacy_classes]
    class_exp = [exps[tab.index[q]] for q in class_images]
    rows = []
    def characters(i, vec):
        if i == len(factors):
            row = [root_product([(m, aa * ee) for (_, m), aa, ee in zip(factors, vec, rep)])
                   for rep in class_exp]
            rows.append(ClassFunction(Hgrp, row))
            return
        for aa in range(factors[i][1]):
            characters(i + 1, vec + [aa])
    characters(0, [])
    rows.sort(key=lambda r: r.sort_key())
    return rows


def kernel(chi: ClassFunction) -> Subgroup:
    """ker(chi): union of the classes where chi takes its degree value."""
    G = chi.group
    deg = chi.degree
    ids = set()
    for cls, v in zip(G.conjugacy_classes, chi.values):
        if v == deg:
            ids.update(cls.member_ids)
    ids = frozenset(ids)
    if _closure_ids(G.table, ids) != ids:
        raise ValueError("kernel classes are not closed; not a character")
    return G.subgroup_from_ids(ids)


def is_monolithic(G: PermGroup, chi: ClassFunction) -> bool:
    """True iff G/ker(chi) has at most one minimal normal subgroup."""
    ker = kernel(chi)
    if ker.order == G.order:
        return True
    if ker.order == 1:
        return len(G.minimal_normal_subgroups) == 1
    Q = coset_action(G, ker).image
    return len(Q.minimal_normal_subgroups) <= 1


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_table_text(table: CharacterTable) -> str:
    G = table.group
    classes = G.conjugacy_classes
    lines = [f"group {G.name}  order {G.order}  classes {len(classes)}"]
    lines.append("sizes  " + " ".join(str(c.size) for c in classes))
    lines.append("orders " + " ".join(str(c.element_order) for c in classes))
    for i, row in enumerate(table.rows):
        vals = "  ".join(render_cyclo(v) for v in row.values)
        lines.append(f"X{i}: {vals}")
    return "\n".join(lines) + "\n"


def table_json(table: CharacterTable) -> dict:
    G = table.group
    classes = G.conjugacy_classes
    return {
        "group": G.name,
        "order": G.order,
        "classes": [
            {"index": c.index, "size": c.size, "element_order": c.element_order,
             "representative": c.representative.cycle_string()}
            for c in classes
        ],
        "irreducibles": [
            {"index": i, "degree": row.degree.as_integer(),
             "values": [render_cyclo(v) for v in row.values]}
            for i, row in enumerate(table.rows)
        ],
    }
