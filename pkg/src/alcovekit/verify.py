"""The one-shot verification suite behind ``alcovekit verify-all``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import cohomo, elemtrans, facets, parahoric
from .rootsys import RootSystem, SimpleType, all_types, build_root_system, neg

FACET_MAX_RANK = 4
ELL_SUBSET_MAX_RANK = 6
ELEMTRANS_GRID = {"trunc": 3, "max_degree": 5, "chars": (0, 2, 3, 5)}
GENERA = range(4, 11)


@dataclass(frozen=True)
class Check:
    group: str
    type_label: str
    subject: str
    passed: bool
    expected: object = None
    got: object = None

    def failure(self) -> dict:
        return {
            "check": self.group,
            "type": self.type_label,
            "subject": self.subject,
            "expected": self.expected,
            "got": self.got,
        }


def expected_census(t: SimpleType) -> int:
    """Number of hyperspecial vertices up to conjugacy, as tabulated by type."""
    if t.family == "A":
        return t.rank + 1
    return {"B": 2, "C": 2, "D": 4}.get(t.family) or {"E6": 3, "E7": 2}.get(t.label, 1)


def census_checks(rs: RootSystem) -> list[Check]:
    got = len(parahoric.hyperspecial_vertices(rs))
    want = expected_census(rs.stype)
    return [Check("census", rs.stype.label, "hyperspecial vertices", got == want, want, got)]


def duality_checks(rs: RootSystem) -> list[Check]:
    out = []
    for a in range(1, rs.rank + 1):
        if rs.mark(a) != 1:
            continue
        q = parahoric.quotient_root_sets(rs, a)
        ok = set(q.pi_side) == {neg(r) for r in q.h_side}
        out.append(Check("duality", rs.stype.label, f"alpha={a}", ok, True, ok))
    return out


def trichotomy_checks(rs: RootSystem) -> list[Check]:
    out = []
    for a in range(1, rs.rank + 1):
        problems = parahoric.trichotomy_failures(rs, a)
        out.append(Check("trichotomy", rs.stype.label, f"alpha={a}", not problems, [], problems[:3]))
    return out


def ell_checks(rs: RootSystem) -> list[Check]:
    out = []
    n = rs.rank
    S = range(1, n + 1)
    if n <= ELL_SUBSET_MAX_RANK:
        bad = []
        subsets = [I for k in range(n + 1) for I in combinations(S, k)]
        for I in subsets:
            got = cohomo.ell_count(rs, I)
            if got != n - len(I):
                bad.append({"I": list(I), "expected": n - len(I), "got": got})
        out.append(Check("ell", rs.stype.label, f"all {len(subsets)} subsets", not bad, [], bad[:3]))
    for a in S:
        got = cohomo.ell_count(rs, [b for b in S if b != a])
        out.append(Check("ell", rs.stype.label, f"maximal parabolic alpha={a}", got == 1, 1, got))
    return out


def key2_checks(rs: RootSystem) -> list[Check]:
    if rs.stype.label not in cohomo.KEY2_TYPES:
        return []
    rep = cohomo.key2_report(rs.stype)
    problems = cohomo.key2_failures(rep, rs)
    return [Check("key2", rs.stype.label, f"attachment alpha={rep.attachment}", not problems, [], problems[:3])]


def facet_checks(rs: RootSystem) -> list[Check]:
    out = []
    everything = set(rs.all_roots)
    for F in facets.all_facets(rs):
        problems = facets.star_failures(rs, F)
        if set(facets.phi_f_roots(rs, F)) != set(facets.deletion_phi(rs, F)):
            problems.append("Phi_f differs from the subsystem of the walls through F")
        out.append(Check("star", rs.stype.label, f"facet {F.label}", not problems, [], problems[:3]))
    origin = facets.facet_from_subset(rs, range(1, rs.rank + 1))
    alcove = facets.facet_from_subset(rs, ())
    phi0 = set(facets.phi_f_roots(rs, origin))
    phic = set(facets.phi_f_roots(rs, alcove))
    out.append(Check("phi_f", rs.stype.label, "vertex 0", phi0 == everything, len(everything), len(phi0)))
    out.append(Check("phi_f", rs.stype.label, "open alcove", not phic, 0, len(phic)))
    return out


def cohomology_checks(rs: RootSystem) -> list[Check]:
    out = []
    t = rs.stype
    for g in GENERA:
        if not cohomo.genus_ok(g, t):
            continue
        tan = cohomo.stack_tangent_cohomology(g, t).as_list()
        cot = cohomo.stack_cotangent_cohomology(g, t).as_list()
        bound = cohomo.codim_bound(g, t)
        ok = tan == [0, 3 * g - 3, 0] and cot == [0, 1, g] and bound >= 4
        out.append(Check("cohomology", t.label, f"g={g}", ok, [[0, 3 * g - 3, 0], [0, 1, g], ">=4"], [tan, cot, bound]))
    return out


def elemtrans_checks() -> list[Check]:
    out = []
    N_max, D = ELEMTRANS_GRID["trunc"], ELEMTRANS_GRID["max_degree"]
    for p in ELEMTRANS_GRID["chars"]:
        for N in range(1, N_max + 1):
            ring = elemtrans.TruncatedRing(N, p)
            dims = [elemtrans.kernel_slice(ring, d).dimension for d in range(D + 1)]
            want = [elemtrans.closed_form(N, d) for d in range(D + 1)]
            label = f"N={N} char={p}"
            out.append(Check("elemtrans", "-", f"{label} kernel dimensions", dims == want, want, dims))
            gen = elemtrans.check_generators(ring, D)
            out.append(Check("elemtrans", "-", f"{label} generators", gen, True, gen))
            syz = elemtrans.check_syzygy(ring, D)
            out.append(Check("elemtrans", "-", f"{label} syzygy", syz, True, syz))
    return out


def run_all(max_rank: int) -> list[Check]:
    checks: list[Check] = []
    for t in all_types(max_rank):
        rs = build_root_system(t)
        checks += census_checks(rs)
        checks += duality_checks(rs)
        checks += trichotomy_checks(rs)
        checks += ell_checks(rs)
        checks += key2_checks(rs)
        checks += cohomology_checks(rs)
        if t.rank <= FACET_MAX_RANK:
            checks += facet_checks(rs)
    checks += elemtrans_checks()
    return checks
