"""Concave functions of alcove vertices, mu(alpha), and quotient root sets.

For a simple root alpha the two legs of the parahoric correspondence
    P_theta_alpha  >  P^st_alpha  <  P_0
have unipotent quotients whose root sets are ``pi_side`` and ``h_side``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .rootsys import Coweight, Root, RootSystem, SimpleType, build_root_system, neg, pairing


@dataclass(frozen=True)
class ConcaveFunction:
    """Integer-valued function on the roots, given by its table of values."""

    values: Mapping[Root, int]

    def __call__(self, r: Root) -> int:
        return self.values[tuple(r)]

    def is_concave_pairwise(self) -> bool:
        return all(v + self.values[neg(r)] >= 0 for r, v in self.values.items())

    def __le__(self, other: ConcaveFunction) -> bool:
        return all(v <= other.values[r] for r, v in self.values.items())


@dataclass(frozen=True)
class AlcoveVertex:
    label: int  # 0 for the origin, alpha in 1..n for theta_alpha
    point: Coweight


@dataclass(frozen=True)
class QuotientRootSets:
    alpha: int
    pi_side: tuple[Root, ...]
    h_side: tuple[Root, ...]
    hyperspecial: bool


def theta(rs: RootSystem, alpha: int) -> Coweight:
    """The alcove vertex alpha^* / c_alpha."""
    return Coweight.fundamental(rs.rank, alpha, Fraction(1, rs.mark(alpha)))


def alcove_vertices(rs: RootSystem) -> list[AlcoveVertex]:
    verts = [AlcoveVertex(0, Coweight.zero(rs.rank))]
    verts += [AlcoveVertex(a, theta(rs, a)) for a in range(1, rs.rank + 1)]
    return verts


def concave_from_point(rs: RootSystem, point: Coweight) -> ConcaveFunction:
    """m_r(point) = -floor(r(point)) on every root."""
    return ConcaveFunction({r: -math.floor(pairing(rs, point, r)) for r in rs.all_roots})


def involves(r: Root, alpha: int) -> bool:
    return r[alpha - 1] != 0


def levi_roots(rs: RootSystem, alpha: int) -> tuple[Root, ...]:
    """Phi_{S - alpha}: roots whose expansion does not involve alpha."""
    rs.require_simple(alpha)
    return tuple(r for r in rs.all_roots if not involves(r, alpha))


def m_std(rs: RootSystem, alpha: int) -> ConcaveFunction:
    """Concave function of the standard maximal parahoric ev^{-1}(P_alpha)."""
    i = rs.require_simple(alpha)
    return ConcaveFunction({r: 1 if (r[i] < 0) else 0 for r in rs.all_roots})


def mu_set(rs: RootSystem, alpha: int) -> tuple[Root, ...]:
    i = rs.require_simple(alpha)
    c = rs.marks[i]
    return tuple(r for r in rs.positives if r[i] == c)


def h_side(rs: RootSystem, alpha: int) -> tuple[Root, ...]:
    """Phi^- minus Phi_{S - alpha}, listed in the order of the positive roots they negate."""
    i = rs.require_simple(alpha)
    return tuple(neg(r) for r in rs.positives if r[i] != 0)


def quotient_root_sets(rs: RootSystem, alpha: int) -> QuotientRootSets:
    return QuotientRootSets(
        alpha=alpha,
        pi_side=mu_set(rs, alpha),
        h_side=h_side(rs, alpha),
        hyperspecial=rs.mark(alpha) == 1,
    )


def check_duality(rs: RootSystem, alpha: int) -> bool:
    q = quotient_root_sets(rs, alpha)
    return set(q.pi_side) == {neg(r) for r in q.h_side}


def hyperspecial_vertices(rs: RootSystem) -> list[int]:
    """Labels of hyperspecial alcove vertices; the origin is always one."""
    return [0] + [a for a in range(1, rs.rank + 1) if rs.mark(a) == 1]


def hyperspecial_census(t: SimpleType) -> int:
    return len(hyperspecial_vertices(build_root_system(t)))


def trichotomy_failures(rs: RootSystem, alpha: int) -> list[str]:
    """Compare f_theta_alpha with the three-way split -1 / 0 / 1; empty list means it holds."""
    f = concave_from_point(rs, theta(rs, alpha))
    mu = set(mu_set(rs, alpha))
    levi = set(levi_roots(rs, alpha))
    hs = set(h_side(rs, alpha))
    m = m_std(rs, alpha)
    problems = []
    for r in rs.all_roots:
        expected = -1 if r in mu else 0 if r in levi else 1 if r in hs else None
        if expected is None:
            # positive roots involving alpha below the mark
            expected = 0
        if f(r) != expected:
            problems.append(f"f({r}) = {f(r)}, expected {expected}")
        if (f(r) < m(r)) != (r in mu):
            problems.append(f"strict drop at {r}: f={f(r)}, m={m(r)}, in mu: {r in mu}")
    if {f(r) for r in rs.all_roots} - {-1, 0, 1}:
        problems.append("value outside {-1, 0, 1}")
    return problems

