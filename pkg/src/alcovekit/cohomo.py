"""Dimension formulas for the cohomology of stable torsors and their combinatorial inputs."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, HypothesisError
from .linalg import check_char
from .parahoric import h_side, mu_set
from .rootsys import Root, RootSystem, SimpleType, build_root_system, coroot_eval, extended_diagram, neg

KEY2_TYPES = ("G2", "F4", "E8")


@dataclass(frozen=True)
class CohomologyTriple:
    h0: int
    h1: int
    h2: int

    def __post_init__(self) -> None:
        if min(self.h0, self.h1, self.h2) < 0:
            raise ValueError(f"negative dimension in {self}")

    def as_list(self) -> list[int]:
        return [self.h0, self.h1, self.h2]


@dataclass(frozen=True)
class Key2Report:
    attachment: int
    c_alpha: int
    coroot_on_attachment: int
    mu: tuple[Root, ...]
    degrees: dict[Root, int]
    r0_rank: int
    r1_rank: int

    def degree_multiset(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees.values()).items()))


@dataclass(frozen=True)
class HypothesisGate:
    genus_ok: bool
    char_ok: bool
    codim_bound: int

    @property
    def ok(self) -> bool:
        return self.genus_ok and self.char_ok


def centre_order(t: SimpleType) -> int:
    """Order of the centre of the simply connected group of type t."""
    if t.family == "A":
        return t.rank + 1
    if t.family in "BC":
        return 2
    if t.family == "D":
        return 4
    return {"E6": 3, "E7": 2}.get(t.label, 1)


def _simple_set(rs: RootSystem, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(I)
    for a in I:
        if not isinstance(a, int) or not 1 <= a <= rs.rank:
            raise DomainError(f"{sorted(I)} is not a subset of the simple roots 1..{rs.rank} of {rs.stype}")
    return I


def ell_count(rs: RootSystem, I: Iterable[int]) -> int:
    """Number of simple reflections keeping every root of I positive, by direct reflection."""
    I = _simple_set(rs, I)
    count = 0
    for g in range(1, rs.rank + 1):
        images = [rs.reflect(g, rs.simple(b)) for b in I]
        if all(rs.is_root(w) and rs.is_positive(w) for w in images):
            count += 1
    return count


def demazure_flag(rs: RootSystem, I: Iterable[int]) -> str:
    """Whether G/P_I is one of the exceptional flag varieties for the tangent sheaf.

    Returns "nonexceptional", "exceptional" or "unknown".
    """
    I = _simple_set(rs, I)
    t = rs.stype
    if t.simply_laced or t.label == "F4":
        return "nonexceptional"
    if I == frozenset(range(1, rs.rank + 1)):
        return "nonexceptional"
    if t.label == "G2":
        # the maximal parabolic of the node not joined to the affine node
        (away,) = [a for a in (1, 2) if a not in extended_diagram(rs).attachment]
        if I == frozenset({1, 2}) - {away}:
            return "exceptional"
        return "nonexceptional"
    return "unknown"


def p1_h0(d: int) -> int:
    return max(d + 1, 0)


def p1_h1(d: int) -> int:
    return max(-d - 1, 0)


def key2_report(t: SimpleType | str) -> Key2Report:
    t = SimpleType.parse(t) if isinstance(t, str) else t
    if t.label not in KEY2_TYPES:
        raise DomainError(f"key2 report is defined for G2, F4, E8 only, not {t}")
    rs = build_root_system(t)
    att = extended_diagram(rs).attachment
    if len(att) != 1:
        raise DomainError(f"{t}: affine node attaches to {att}, expected a single simple root")
    alpha = att[0]
    degrees = {beta: coroot_eval(rs, rs.highest, beta) for beta in h_side(rs, alpha)}
    return Key2Report(
        attachment=alpha,
        c_alpha=rs.mark(alpha),
        coroot_on_attachment=coroot_eval(rs, rs.highest, rs.simple(alpha)),
        mu=mu_set(rs, alpha),
        degrees=degrees,
        r0_rank=sum(p1_h0(d) for d in degrees.values()),
        r1_rank=sum(p1_h1(d) for d in degrees.values()),
    )


def key2_failures(rep: Key2Report, rs: RootSystem) -> list[str]:
    problems = []
    if rep.c_alpha != 2:
        problems.append(f"c_alpha = {rep.c_alpha}, expected 2")
    if rep.coroot_on_attachment != 1:
        problems.append(f"alpha_max^vee(alpha) = {rep.coroot_on_attachment}, expected 1")
    for g in range(1, rs.rank + 1):
        if g != rep.attachment and coroot_eval(rs, rs.highest, rs.simple(g)) != 0:
            problems.append(f"alpha_max^vee(alpha_{g}) != 0")
    if rep.mu != (rs.highest,):
        problems.append(f"mu(alpha) = {rep.mu}, expected the highest root alone")
    bottom = neg(rs.highest)
    for beta, d in rep.degrees.items():
        want = -2 if beta == bottom else -1
        if d != want:
            problems.append(f"degree at {beta} is {d}, expected {want}")
        if d != beta[rep.attachment - 1]:
            problems.append(f"degree at {beta} differs from its alpha coefficient")
    if (rep.r0_rank, rep.r1_rank) != (0, 1):
        problems.append(f"pushforward ranks {(rep.r0_rank, rep.r1_rank)}, expected (0, 1)")
    return problems


def curve_cohomology(g: int) -> tuple[CohomologyTriple, CohomologyTriple]:
    """(tangent sheaf, structure sheaf) cohomology dimensions of a curve of genus g >= 2."""
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    return CohomologyTriple(0, 3 * g - 3, 0), CohomologyTriple(1, g, 0)


def genus_ok(g: int, t: SimpleType) -> bool:
    return g >= 5 if t.label == "A1" else g >= 4


def _require_genus(g: int, t: SimpleType) -> None:
    if not genus_ok(g, t):
        bound = 5 if t.label == "A1" else 4
        raise HypothesisError(f"genus {g} violates the bound g >= {bound} for {t}")


def stack_tangent_cohomology(g: int, t: SimpleType) -> CohomologyTriple:
    _require_genus(g, t)
    return curve_cohomology(g)[0]


def stack_cotangent_cohomology(g: int, t: SimpleType) -> CohomologyTriple:
    """H^j of the cotangent bundle is H^{j-1}(X, O_X)."""
    _require_genus(g, t)
    structure = curve_cohomology(g)[1]
    return CohomologyTriple(0, structure.h0, structure.h1)


def codim_bound(g: int, t: SimpleType) -> int:
    """(g - 1) * min over maximal parabolics of |Phi^- - Phi_{S - alpha}|."""
    rs = build_root_system(t)
    smallest = min(len(h_side(rs, a)) for a in range(1, rs.rank + 1))
    return max(g - 1, 0) * smallest


def hypothesis_gate(g: int, p: int, t: SimpleType) -> HypothesisGate:
    check_char(p)
    rs = build_root_system(t)
    if p == 0:
        char_ok = True
    else:
        char_ok = centre_order(t) % p != 0 and all(c % p != 0 for c in rs.marks)
    return HypothesisGate(genus_ok(g, t), char_ok, codim_bound(g, t))
