"""Mechanical verification of the structural theorems on catalog groups.

Each check evaluates a concrete group (or group/prime-set pair) and returns
a Verdict: holds, fails (with a machine-checkable witness), or not
applicable when the statement's hypotheses are not met.  A failing verdict
on any shipped group would mean an implementation bug, since the statements
are proved; the harness is therefore also the suite's self-diagnostic.

The conjecture scan searches for a nonsolvable group whose constituent
degree set has at most two members; it only ever reports "no counterexample
among N groups", never a proof.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import catalog
from .chartable import kernel, linear_characters, restrict, inner_product
from .numth import is_pi_number, pi_prime_part
from .permgroup import EnumerationIncompleteError, PermGroup, Subgroup
from .pchar import inertia_group, p_characters, p_pi_characters
from .subgroups import complement_decompositions


@dataclass
class Verdict:
    claim: str
    group: str
    params: dict
    holds: bool | None          # None: hypotheses not applicable
    witness: dict
    seconds: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        # timing is deliberately excluded: outputs must be byte-reproducible
        return {"claim": self.claim, "group": self.group, "params": self.params,
                "holds": self.holds, "witness": self.witness}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        v = fn(*args, **kwargs)
        v.seconds = time.perf_counter() - t0
        return v
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def theorem_a(G: PermGroup) -> Verdict:
    """If every constituent of every (1_M)^G is monomial, G is solvable."""
    report = p_characters(G)
    verdicts = report.monomial_verdicts
    nonmonomial = [i for i, w in verdicts.items() if w is None]
    if nonmonomial:
        i = nonmonomial[0]
        degree = report.table.degrees[i]
        from .subgroups import all_subgroups
        witness = {
            "hypothesis": False,
            "nonmonomial_row": i,
            "degree": degree,
            "subgroup_class_orders": sorted({c.order for c in all_subgroups(G)}),
            "classes_with_matching_index": [
                c.order for c in all_subgroups(G) if c.index == degree],
        }
        return Verdict("theorem-a", G.name, {}, True, witness)
    solvable = G.is_solvable
    witness = {"hypothesis": True, "all_monomial_rows": sorted(verdicts),
               "solvable": solvable}
    if not solvable:
        witness["counterexample_report"] = _report_payload(report)
    return Verdict("theorem-a", G.name, {}, solvable, witness)


def is_pi_solvable(G: PermGroup, pi: frozenset[int]) -> bool:
    """pi-separable with solvable (elementary abelian) pi-chief-factors."""
    if G.is_solvable or G.order == 1:
        return True
    from .numth import pi_part
    mins = G.minimal_normal_subgroups
    for m in mins:
        mp = pi_part(m.order, pi)
        if mp == m.order:
            if not m.group.is_solvable:
                return False
        elif mp != 1:
            return False
    n = mins[0]
    if n.order == G.order:
        return True
    from .permgroup import coset_action
    return is_pi_solvable(coset_action(G, n).image, pi)


@_timed
def theorem_b(G: PermGroup, pi: frozenset[int]) -> Verdict:
    """For pi-solvable G: all pi-indexed constituent degrees are pi-numbers
    iff G has a normal pi-complement."""
    params = {"pi": sorted(pi)}
    if not is_pi_solvable(G, pi):
        return Verdict("theorem-b", G.name, params, None,
                       {"reason": "group is not pi-solvable"})
    report = p_pi_characters(G, pi)
    degrees = report.degree_list
    lhs = all(is_pi_number(d, pi) for d in degrees)
    complement = G.normal_pi_complement_witness(pi)
    rhs = complement is not None
    witness = {
        "pi_degree_list": list(degrees),
        "all_degrees_pi_numbers": lhs,
        "has_normal_pi_complement": rhs,
        "complement_order": complement.order if complement else None,
        "pi_prime_part": pi_prime_part(G.order, pi),
    }
    return Verdict("theorem-b", G.name, params, lhs == rhs, witness)


@_timed
def theorem_c(G: PermGroup, pi: frozenset[int]) -> Verdict:
    """For pi-separable G: if every irreducible is a pi-indexed constituent,
    G is a pi-group.  Also asserts the kernel inclusions used in the proof:
    O_{pi'}(G) <= Core_G(M) and O_{pi'}(G) <= ker(chi) for every entry."""
    params = {"pi": sorted(pi)}
    if not G.is_pi_separable(pi):
        return Verdict("theorem-c", G.name, params, None,
                       {"reason": "group is not pi-separable"})
    report = p_pi_characters(G, pi)
    nrows = len(report.table.rows)
    hypothesis = report.irr_p == tuple(range(nrows))
    conclusion = is_pi_number(G.order, pi)
    opi = G.o_pi_prime(pi)
    inclusions_ok = True
    inclusion_detail = []
    for e in report.entries:
        core_m = kernel(e.perm_char)          # Core_G(M) = ker (1_M)^G
        ok_core = opi.element_ids <= core_m.element_ids
        row_ok = all(opi.element_ids <= kernel(report.table.rows[i]).element_ids
                     for i, _ in e.constituents)
        inclusions_ok &= ok_core and row_ok
        inclusion_detail.append({"index": e.maximal.index,
                                 "core_order": core_m.order,
                                 "o_pi_prime_in_core": ok_core,
                                 "o_pi_prime_in_all_kernels": row_ok})
    implication = (not hypothesis) or conclusion
    witness = {
        "hypothesis_all_irr_covered": hypothesis,
        "irr_p": list(report.irr_p),
        "row_count": nrows,
        "is_pi_group": conclusion,
        "o_pi_prime_order": opi.order,
        "inclusions": inclusion_detail,
    }
    return Verdict("theorem-c", G.name, params, implication and inclusions_ok, witness)


@_timed
def nilpotency_criterion(G: PermGroup) -> Verdict:
    """G is nilpotent iff the constituent degree set is {1}."""
    report = p_characters(G)
    nilpotent = G.is_nilpotent
    flat = report.cd_p == (1,)
    witness = {"nilpotent": nilpotent, "cd_p": list(report.cd_p)}
    return Verdict("nilpotency", G.name, {}, nilpotent == flat, witness)


@_timed
def lemma_bijection(G: PermGroup) -> Verdict:
    """For solvable G = N x| H (N minimal normal, H maximal): constituents
    of (1_H)^G biject with the orbits of G on Irr(N) via restriction; each
    constituent degree equals the index of the matching inertia group, and
    the orbit characters extend to their inertia groups."""
    if not G.is_solvable:
        return Verdict("lemma-bijection", G.name, {}, None,
                       {"reason": "group is not solvable"})
    decomps = complement_decompositions(G)
    if not decomps:
        return Verdict("lemma-bijection", G.name, {}, None,
                       {"reason": "no decomposition N x| H with N minimal normal, H maximal"})
    report = p_characters(G)
    table = report.table
    all_ok = True
    details = []
    for N, H in decomps:
        entry = next(e for e in report.entries
                     if any(H.element_ids == s for s in e.maximal.orbit))
        irr_n = linear_characters(N)
        orbits = _character_orbits(G, N, irr_n)
        constituent_rows = [i for i, _ in entry.constituents]
        mapping = []
        used = set()
        pair_ok = True
        for i in constituent_rows:
            chi = table.rows[i]
            chi_n = restrict(chi, N)
            support = frozenset(
                j for j, lam in enumerate(irr_n)
                if inner_product(chi_n, lam).as_rational())
            hit = [oi for oi, orb in enumerate(orbits) if orb == support]
            if len(hit) != 1 or hit[0] in used:
                pair_ok = False
                break
            used.add(hit[0])
            lam_idx = min(orbits[hit[0]])
            lam = irr_n[lam_idx]
            inertia = inertia_group(G, N, lam)
            degree_ok = table.degrees[i] == G.order // inertia.order
            extends = _extends_to(inertia, G, N, lam)
            pair_ok &= degree_ok and extends
            mapping.append({"row": i, "degree": table.degrees[i],
                            "orbit": sorted(orbits[hit[0]]),
                            "inertia_order": inertia.order,
                            "degree_equals_inertia_index": degree_ok,
                            "extends_to_inertia": extends})
        onto = pair_ok and len(used) == len(orbits)
        all_ok &= pair_ok and onto
        details.append({"n_order": N.order, "h_order": H.order,
                        "constituents": constituent_rows,
                        "orbit_count": len(orbits), "bijection": onto,
                        "mapping": mapping})
    return Verdict("lemma-bijection", G.name, {}, all_ok, {"decompositions": details})


def _character_orbits(G: PermGroup, N: Subgroup, irr_n) -> list[frozenset[int]]:
    """Orbits of G on Irr(N), each as a frozenset of indices into irr_n."""
    tab = G.table
    ids = sorted(N.element_ids)
    vecs = [tuple(lam(tab.perms[e]) for e in ids) for lam in irr_n]
    vec_index = {v: i for i, v in enumerate(vecs)}
    pos = {e: i for i, e in enumerate(ids)}
    gen_maps = []
    for g in G.generators:
        ginv = g.inverse()
        gen_maps.append([pos[tab.index[g * tab.perms[e] * ginv]] for e in ids])
    orbits = []
    seen = set()
    for start in range(len(vecs)):
        if start in seen:
            continue
        orbit = {start}
        queue = [start]
        while queue:
            vi = queue.pop()
            for gmap in gen_maps:
                nv = tuple(vecs[vi][gmap[i]] for i in range(len(ids)))
                ni = vec_index[nv]
                if ni not in orbit:
                    orbit.add(ni)
                    queue.append(ni)
        seen |= orbit
        orbits.append(frozenset(orbit))
    return orbits


def _extends_to(inertia: Subgroup, G: PermGroup, N: Subgroup, lam) -> bool:
    """Does some linear character of the inertia group restrict to lam?"""
    n_reps = [c.representative for c in N.group.conjugacy_classes]
    for mu in linear_characters(inertia):
        if all(mu(rep) == lam(rep) for rep in n_reps):
            return True
    return False


# ---------------------------------------------------------------------------
# conjecture scan
# ---------------------------------------------------------------------------

@dataclass
class ScanReport:
    scanned: int
    candidates: list[dict]        # |cd_P| <= 2 (all must be solvable)
    counterexamples: list[dict]
    errors: list[dict]

    def to_json(self) -> dict:
        return {"scanned": self.scanned, "candidates": self.candidates,
                "counterexamples": self.counterexamples, "errors": self.errors}


def _scan_one(spec: str) -> dict:
    try:
        G = catalog.build(spec)
        report = p_characters(G)
        cd = report.cd_p
        solvable = G.is_solvable
        out = {"spec": spec, "order": G.order, "cd_p": list(cd),
               "solvable": solvable, "candidate": len(cd) <= 2}
        if len(cd) <= 2 and not solvable:
            from .pchar import report_json
            out["counterexample_report"] = report_json(report)
        return out
    except Exception as exc:  # noqa: BLE001 - per-group quarantine by design
        return {"spec": spec, "error": f"{type(exc).__name__}: {exc}"}


def conjecture_scan(specs: list[str], workers: int = 1) -> ScanReport:
    """Scan groups for a nonsolvable G with |cd_P(G)| <= 2; per-group errors
    are quarantined and the scan continues."""
    specs = sorted(specs)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_one, specs))
    else:
        results = [_scan_one(s) for s in specs]
    results.sort(key=lambda r: r["spec"])
    candidates = [r for r in results if r.get("candidate")]
    counterexamples = [r for r in results if r.get("candidate") and not r.get("solvable")]
    errors = [r for r in results if "error" in r]
    return ScanReport(len(specs), candidates, counterexamples, errors)


def _report_payload(report) -> dict:
    from .pchar import report_json
    return report_json(report)


def render_verdict_text(v: Verdict) -> str:
    status = {True: "holds", False: "FAILS", None: "not applicable"}[v.holds]
    params = f" {json.dumps(v.params, sort_keys=True)}" if v.params else ""
    return f"{v.claim} on {v.group}{params}: {status}"
