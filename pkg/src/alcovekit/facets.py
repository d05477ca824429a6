"""Facets of the closed fundamental alcove and their reductive quotients.

A facet is named by the set J of affine simple roots (indices 0..n, with 0 the
affine root) whose walls contain it.  The vertex opposite wall i is
``theta_i`` for i >= 1 and the origin for i = 0, so the facet with vanishing
set J is spanned by the vertices whose labels are not in J.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .errors import ConstructionError, DomainError
from .parahoric import ConcaveFunction, alcove_vertices, concave_from_point
from .rootsys import (
    Coweight,
    Root,
    RootSystem,
    SimpleType,
    affine_gradients,
    build_root_system,
    coroot_eval,
    neg,
)


@dataclass(frozen=True)
class Facet:
    vanishing: frozenset[int]
    barycenter: Coweight

    @property
    def label(self) -> str:
        return "{" + ",".join(str(j) for j in sorted(self.vanishing)) + "}"

    def vertices(self, rank: int) -> tuple[int, ...]:
        return tuple(i for i in range(rank + 1) if i not in self.vanishing)


@dataclass(frozen=True)
class FacetRootData:
    phi_f: tuple[Root, ...]
    quotient_type: tuple[SimpleType, ...]


def facet_from_subset(rs: RootSystem, J: Iterable[int]) -> Facet:
    J = frozenset(J)
    n = rs.rank
    bad = [j for j in J if not isinstance(j, int) or not 0 <= j <= n]
    if bad:
        raise DomainError(f"affine simple indices must lie in 0..{n}, got {sorted(bad)}")
    if len(J) > n:
        raise DomainError(f"vanishing set of size {len(J)} cuts out the empty facet (rank {n})")
    verts = [v.point for v in alcove_vertices(rs) if v.label not in J]
    total = Coweight.zero(n)
    for p in verts:
        total = total + p
    return Facet(J, total.scale(Fraction(1, len(verts))))


def all_facets(rs: RootSystem) -> list[Facet]:
    """Every facet of the closed alcove, ordered by (|J| descending, J)."""
    idx = range(rs.rank + 1)
    out = []
    for k in range(rs.rank, -1, -1):
        out += [facet_from_subset(rs, J) for J in combinations(idx, k)]
    return out


def facet_concave(rs: RootSystem, F: Facet) -> ConcaveFunction:
    return concave_from_point(rs, F.barycenter)


def phi_f_roots(rs: RootSystem, F: Facet) -> tuple[Root, ...]:
    f = facet_concave(rs, F)
    return tuple(r for r in rs.all_roots if f(r) + f(neg(r)) == 0)


def phi_f(rs: RootSystem, F: Facet) -> FacetRootData:
    roots = phi_f_roots(rs, F)
    return FacetRootData(roots, classify_subsystem(rs, roots))


# --- classification of subsystems -----------------------------------------


def subsystem_simples(rs: RootSystem, roots: Sequence[Root]) -> list[Root]:
    """Indecomposable elements of roots ∩ Phi^+."""
    pos = [r for r in roots if rs.is_positive(r)]
    pos_set = set(pos)
    simples = []
    for r in pos:
        decomposable = any(
            tuple(a - b for a, b in zip(r, s)) in pos_set for s in pos if s != r
        )
        if not decomposable:
            simples.append(r)
    return simples


def _components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            i = queue.popleft()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    queue.append(j)
        comps.append(sorted(comp))
    return comps


def cartan_isomorphic(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    """Is there a permutation p with a[i][j] == b[p(i)][p(j)] for all i, j?  Backtracking search."""
    n = len(a)
    if n != len(b):
        return False
    perm: list[int] = []
    used = [False] * n

    def extend() -> bool:
        i = len(perm)
        if i == n:
            return True
        for k in range(n):
            if used[k]:
                continue
            if all(a[i][j] == b[k][perm[j]] and a[j][i] == b[perm[j]][k] for j in range(i)) and a[i][i] == b[k][k]:
                perm.append(k)
                used[k] = True
                if extend():
                    return True
                perm.pop()
                used[k] = False
        return False

    return extend()


def identify_cartan(cartan: Sequence[Sequence[int]]) -> SimpleType:
    """Dynkin type of an indecomposable Cartan matrix."""
    n = len(cartan)
    for fam in "ABCDEFG":
        try:
            t = SimpleType(fam, n)
        except ConstructionError:
            continue
        if cartan_isomorphic(cartan, build_root_system(t).cartan):
            return t
    raise DomainError(f"unrecognised Cartan matrix {cartan}")


def classify_subsystem(rs: RootSystem, roots: Sequence[Root]) -> tuple[SimpleType, ...]:
    simples = subsystem_simples(rs, roots)
    if not simples:
        return ()
    if len(roots) == len(rs.all_roots):
        # keep the ambient label (B2 and C2 share a Cartan matrix up to relabelling)
        return (rs.stype,)
    cartan = [[coroot_eval(rs, si, sj) for sj in simples] for si in simples]
    types = []
    for comp in _components(cartan):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        types.append(identify_cartan(sub))
    return tuple(sorted(types))


# --- the root subsystem generated by affine walls --------------------------


def generated_subsystem(rs: RootSystem, generators: Sequence[Root]) -> tuple[Root, ...]:
    """Orbit of the generators under the reflections they define."""
    gens = [rs.require_root(g) for g in generators]
    seen = set(gens)
    queue = deque(gens)
    while queue:
        v = queue.popleft()
        for g in gens:
            k = coroot_eval(rs, g, v)
            w = tuple(x - k * y for x, y in zip(v, g))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return tuple(r for r in rs.all_roots if r in seen)


def deletion_phi(rs: RootSystem, F: Facet) -> tuple[Root, ...]:
    """Phi_f via the extended diagram: the subsystem generated by the walls through F."""
    grads = affine_gradients(rs)
    if not F.vanishing:
        return ()
    return generated_subsystem(rs, [grads[j] for j in sorted(F.vanishing)])


# --- star and the parabolic correspondence ---------------------------------


def star(rs: RootSystem, F: Facet) -> list[Facet]:
    """Facets whose closure contains F, from F itself down to the open alcove."""
    J = sorted(F.vanishing)
    out = []
    for k in range(len(J), -1, -1):
        out += [facet_from_subset(rs, sub) for sub in combinations(J, k)]
    return out


def in_closure(F: Facet, G: Facet) -> bool:
    """F lies in the closure of G."""
    return G.vanishing <= F.vanishing


def chamber_basis(rs: RootSystem, F: Facet) -> dict[int, Root]:
    """Basis of Phi_F adapted to the fundamental alcove: gradients of the walls through F."""
    grads = affine_gradients(rs)
    return {j: grads[j] for j in sorted(F.vanishing)}


def parabolic_subset(rs: RootSystem, F: Facet, G: Facet) -> frozenset[int]:
    """Subset of the chamber basis of Phi_F attached to a facet G in the star of F.

    A basis element a belongs to it when f_G(-a) = f_F(-a).
    """
    if not in_closure(F, G):
        raise DomainError(f"facet {G.label} is not in the star of {F.label}")
    fF = facet_concave(rs, F)
    fG = facet_concave(rs, G)
    return frozenset(j for j, a in chamber_basis(rs, F).items() if fG(neg(a)) == fF(neg(a)))


def span_roots(rs: RootSystem, basis: Sequence[Root]) -> tuple[Root, ...]:
    """Phi_K: roots that are integer combinations of the given (independent) roots."""
    if not basis:
        return ()
    cols = list(basis)
    out = []
    n = rs.rank
    for r in rs.all_roots:
        # solve sum c_k basis_k = r over Q and test integrality
        rows = [[Fraction(b[i]) for b in cols] + [Fraction(r[i])] for i in range(n)]
        reduced, pivots = linalg.rref(rows, 0)
        if len(cols) in pivots:
            continue
        coeffs = [Fraction(0)] * len(cols)
        for row, pc in zip(reduced, pivots):
            coeffs[pc] = row[-1]
        if all(c.denominator == 1 for c in coeffs):
            out.append(r)
    return tuple(out)


def star_failures(rs: RootSystem, F: Facet) -> list[str]:
    """Check bijection, order isomorphism, monotonicity of f and Phi_{F_J} = Phi_J on the star of F."""
    problems = []
    members = star(rs, F)
    fF = facet_concave(rs, F)
    basis = chamber_basis(rs, F)
    images = {}
    for G in members:
        K = parabolic_subset(rs, F, G)
        images[G.vanishing] = K
        if K != G.vanishing:
            problems.append(f"star {F.label}: {G.label} maps to {sorted(K)}")
        if not fF <= facet_concave(rs, G):
            problems.append(f"star {F.label}: f_F <= f_G fails for {G.label}")
        if set(phi_f_roots(rs, G)) != set(span_roots(rs, [basis[j] for j in sorted(K)])):
            problems.append(f"star {F.label}: Phi of {G.label} differs from span of its subset")
    if len(set(map(frozenset, images.values()))) != len(members) or len(members) != 2 ** len(F.vanishing):
        problems.append(f"star {F.label}: not a bijection onto subsets ({len(members)} facets)")
    for G in members:
        for H in members:
            if in_closure(G, H) != (images[H.vanishing] <= images[G.vanishing]):
                problems.append(f"star {F.label}: order not preserved for {G.label}, {H.label}")
    return problems
