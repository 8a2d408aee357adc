"""Independent brute-force oracles used to freeze and check derived values.

These deliberately avoid the library's stabilizer chains, cyclic-extension
enumeration, class-fusion induction and Dixon-Schneider path: everything
here works by exhaustive enumeration over explicit element sets.
"""

from fractions import Fraction

from permchar.cyclo import Cyclo, cyclo_sum
from permchar.perms import Perm


def assert_table_orthogonality(G):
    """Exact row and column orthogonality plus the degree equation."""
    from permchar.chartable import character_table, inner_product
    t = character_table(G)
    classes = G.conjugacy_classes
    assert len(t.rows) == len(classes)
    assert sum(d * d for d in t.degrees) == G.order
    one, nil = Cyclo.rational(1), Cyclo.rational(0)
    assert all(v == one for v in t.rows[0].values)
    r = len(t.rows)
    for i in range(r):
        for j in range(i, r):
            assert inner_product(t.rows[i], t.rows[j]) == (one if i == j else nil)
    for a in range(len(classes)):
        for b in range(a, len(classes)):
            total = cyclo_sum([row.values[a] * row.values[b].conj() for row in t.rows])
            want = Cyclo.rational(classes[a].centralizer_order) if a == b else nil
            assert total == want


def closure_elements(degree, gens):
    """All products of the generators, by plain BFS (no chains)."""
    ident = Perm.identity(degree)
    seen = {ident}
    queue = [ident]
    while queue:
        x = queue.pop(0)
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def brute_conjugacy_classes(elements):
    """Partition an explicit element set into conjugation orbits."""
    elements = set(elements)
    classes = []
    remaining = set(elements)
    while remaining:
        x = min(remaining, key=lambda p: p.images)
        orbit = {g.inverse() * x * g for g in elements}
        classes.append(orbit)
        remaining -= orbit
    return classes


def brute_all_subgroups(G):
    """Every subgroup of G as a frozenset of element ids, by single-element
    extension from the trivial subgroup."""
    tab = G.table
    n = G.order

    def close(gen_ids):
        ids = {0, *gen_ids}
        queue = list(gen_ids)
        while queue:
            a = queue.pop()
            for b in gen_ids:
                c = tab.mul(a, b)
                if c not in ids:
                    ids.add(c)
                    queue.append(c)
        return frozenset(ids)

    trivial = frozenset({0})
    found = {trivial: ()}
    queue = [trivial]
    while queue:
        s = queue.pop()
        gens = found[s]
        for g in range(1, n):
            if g in s:
                continue
            t = close(gens + (g,))
            if t not in found:
                found[t] = gens + (g,)
                queue.append(t)
    return set(found)


def brute_subgroup_classes(G, subgroup_sets):
    """Group explicit subgroup sets into conjugacy classes (orbit partition)."""
    tab = G.table
    remaining = set(subgroup_sets)
    classes = []
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
        classes.append(orbit)
        remaining -= orbit
    return classes


# ---------------------------------------------------------------------------
# independent character-table oracle
# ---------------------------------------------------------------------------

def _brute_derived_ids(tab, ids):
    comm = set()
    ids = sorted(ids)
    for a in ids:
        ai = tab.inverse[a]
        for b in ids:
            c = tab.mul(tab.mul(tab.mul(ai, tab.inverse[b]), a), b)
            comm.add(c)
    # closure
    out = {0}
    queue = [c for c in comm if c]
    out.update(queue)
    while queue:
        a = queue.pop()
        for b in comm:
            c = tab.mul(a, b)
            if c not in out:
                out.add(c)
                queue.append(c)
    return frozenset(out)


def _abelian_coset_characters(tab, h_ids, d_ids):
    """All characters of the abelian quotient H/D, as maps h_id -> Cyclo."""
    h_ids = sorted(h_ids)
    cosets = {}
    rep_of = {}
    for h in h_ids:
        sig = min(tab.mul(d, h) for d in d_ids)
        if sig not in rep_of:
            rep_of[sig] = sig
        cosets[h] = sig
    reps = sorted(rep_of)
    mul = {(a, b): cosets[tab.mul(a, b)] for a in reps for b in reps}
    ident = cosets[0]

    def coset_order(a):
        n, x = 1, a
        while x != ident:
            x = mul[(x, a)]
            n += 1
        return n

    def subgroup_gen(gens):
        out = {ident}
        queue = [g for g in gens if g != ident]
        out.update(queue)
        while queue:
            a = queue.pop()
            for b in gens:
                c = mul[(a, b)]
                if c not in out:
                    out.add(c)
                    queue.append(c)
        return frozenset(out)

    def decompose(subreps):
        if len(subreps) == 1:
            return []
        a = max(sorted(subreps), key=coset_order)
        m = coset_order(a)
        cyc = subgroup_gen([a])
        if len(cyc) == len(subreps):
            return [(a, m)]
        # brute-force complement: enumerate subgroups of the quotient group
        all_subs = {frozenset({ident})}
        queue = [frozenset({ident})]
        while queue:
            s = queue.pop()
            for g in subreps:
                if g in s:
                    continue
                t = subgroup_gen(sorted(s | {g}))
                if t <= frozenset(subreps) and t not in all_subs:
                    all_subs.add(t)
                    queue.append(t)
        target = len(subreps) // m
        for b in sorted(all_subs, key=lambda f: tuple(sorted(f))):
            if len(b) == target and len(b & cyc) == 1:
                return [(a, m)] + decompose(sorted(b))
        raise AssertionError("no complement found in abelian quotient")

    factors = decompose(reps)
    # exponent vectors
    exp = {}
    def fill(i, current, vec):
        if i == len(factors):
            exp[current] = tuple(vec)
            return
        a, m = factors[i]
        x = current
        for e in range(m):
            fill(i + 1, x, vec + [e])
            x = mul[(x, a)]
    fill(0, ident, [])
    chars = []
    def emit(i, vec):
        if i == len(factors):
            char = {}
            for h in h_ids:
                val = Cyclo.rational(1)
                for (a, m), aa, ee in zip(factors, vec, exp[cosets[h]]):
                    val = val * Cyclo.zeta(m, aa * ee)
                char[h] = val
            chars.append(char)
            return
        for aa in range(factors[i][1]):
            emit(i + 1, vec + [aa])
    emit(0, [])
    return chars


def _induce_by_elements(G, h_ids, char_map):
    """lam^G by the raw element sum: (1/|H|) sum_x lam0(x g x^-1)."""
    tab = G.table
    values = []
    for cls in G.conjugacy_classes:
        gid = tab.index[cls.representative]
        terms = []
        for x in range(G.order):
            y = tab.mul(tab.mul(x, gid), tab.inverse[x])
            if y in char_map:
                terms.append(char_map[y])
        total = cyclo_sum(terms) if terms else Cyclo.rational(0)
        values.append(total.scale(Fraction(1, len(h_ids))))
    return tuple(values)


def brute_character_table(G):
    """Character table by decomposing all induced linear characters.

    Returns a set of value tuples (canonical class order).  Completion uses
    greedy norm-1 extraction, pairwise differences, and a final column-
    orthogonality step; the result is self-checked before being returned.
    """
    tab = G.table
    classes = G.conjugacy_classes
    r = len(classes)
    sizes = [c.size for c in classes]
    order = G.order

    def ip(u, v):
        terms = [(a * b.conj()).scale(s) for a, b, s in zip(u, v, sizes)
                 if not (a.is_zero() or b.is_zero())]
        total = cyclo_sum(terms) if terms else Cyclo.rational(0)
        return total.scale(Fraction(1, order))

    pool = set()
    for h_ids in brute_all_subgroups(G):
        d_ids = _brute_derived_ids(tab, h_ids)
        for char_map in _abelian_coset_characters(tab, h_ids, d_ids):
            pool.add(_induce_by_elements(G, sorted(h_ids), char_map))

    irreducibles = []

    def reduce_vec(v):
        for chi in irreducibles:
            m = ip(v, chi)
            if not m.is_zero():
                v = tuple(a - b * m for a, b in zip(v, chi))
        return v

    pool = {tuple(v) for v in pool}
    while len(irreducibles) < r:
        pool = {reduce_vec(v) for v in pool}
        pool = {v for v in pool if not all(x.is_zero() for x in v)}
        new = [v for v in pool
               if ip(v, v) == Cyclo.rational(1) and v[0].is_nonneg_integer()]
        if new:
            new.sort(key=lambda v: tuple(x.sort_key() for x in v))
            irreducibles.append(new[0])
            continue
        # pairwise differences: a norm-1 difference of characters with a
        # positive degree is itself an irreducible character
        found = None
        for v in sorted(pool, key=lambda v: tuple(x.sort_key() for x in v)):
            for w in sorted(pool, key=lambda v: tuple(x.sort_key() for x in v)):
                if v == w:
                    continue
                d = tuple(a - b for a, b in zip(v, w))
                q = d[0].as_rational()
                if q is None or q <= 0:
                    continue
                if ip(d, d) == Cyclo.rational(1):
                    found = d
                    break
            if found:
                break
        if found:
            irreducibles.append(found)
            continue
        if len(irreducibles) == r - 1:
            degrees = [chi[0].as_rational() for chi in irreducibles]
            missing_sq = order - sum(int(d) * int(d) for d in degrees)
            missing_deg = int(missing_sq ** 0.5)
            assert missing_deg * missing_deg == missing_sq
            last = []
            for j in range(r):
                acc = cyclo_sum([chi[j].scale(int(chi[0].as_rational()))
                                 for chi in irreducibles])
                want = Cyclo.rational(order if j == 0 else 0)
                last.append((want - acc).scale(Fraction(1, missing_deg)))
            irreducibles.append(tuple(last))
            continue
        raise AssertionError(
            f"oracle stuck with {len(irreducibles)} of {r} rows for {G.name}")

    assert sum(int(chi[0].as_rational()) ** 2 for chi in irreducibles) == order
    for i, u in enumerate(irreducibles):
        for j, v in enumerate(irreducibles):
            assert ip(u, v) == Cyclo.rational(1 if i == j else 0)
    return {tuple(v) for v in irreducibles}
