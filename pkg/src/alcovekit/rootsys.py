"""Simple root systems in Bourbaki numbering, with exact arithmetic.

Roots are plain integer tuples giving coordinates in the basis of simple
roots.  Simple roots are addressed by their 1-based Bourbaki index; the
affine simple root is index 0 wherever it appears.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConstructionError, DomainError

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam not in FAMILIES:
            raise ConstructionError(f"unknown family {fam!r}; expected one of {FAMILIES}")
        if not isinstance(n, int) or n < 1:
            raise ConstructionError(f"rank must be a positive integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 4,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[fam]
        if not ok:
            ranges = {
                "A": "n >= 1",
                "B": "n >= 2",
                "C": "n >= 2",
                "D": "n >= 4",
                "E": "n in {6, 7, 8}",
                "F": "n = 4",
                "G": "n = 2",
            }
            raise ConstructionError(f"{fam}{n}: rank out of range, {fam}_n requires {ranges[fam]}")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        m = _TYPE_RE.match(text)
        if m is None:
            raise ConstructionError(f"cannot parse Dynkin type {text!r}; expected e.g. 'A3' or 'E8'")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def __str__(self) -> str:
        return self.label


def all_types(max_rank: int) -> list[SimpleType]:
    """Every simple type of rank at most ``max_rank``, sorted by label."""
    out = []
    for fam in FAMILIES:
        for n in range(1, max_rank + 1):
            try:
                out.append(SimpleType(fam, n))
            except ConstructionError:
                continue
    return sorted(out, key=lambda t: (t.family, t.rank))


# --- Cartan matrices -------------------------------------------------------
# cartan[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def _edge(a: list[list[int]], i: int, j: int) -> None:
    # 1-based simply-laced bond
    a[i - 1][j - 1] = a[j - 1][i - 1] = -1


_E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]

_F4 = [
    [2, -1, 0, 0],
    [-1, 2, -1, 0],
    [0, -2, 2, -1],
    [0, 0, -1, 2],
]

_G2 = [
    [2, -3],
    [-1, 2],
]


def cartan_matrix(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    if t.family == "A":
        a = _chain(n)
    elif t.family == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n short
    elif t.family == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n long
    elif t.family == "D":
        a = _chain(n - 1)
        a = [row + [0] for row in a] + [[0] * n]
        a[n - 1][n - 1] = 2
        _edge(a, n - 2, n)
    elif t.family == "E":
        a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in _E8_EDGES:
            if i <= n and j <= n:
                _edge(a, i, j)
    elif t.family == "F":
        a = [row[:] for row in _F4]
    else:
        a = [row[:] for row in _G2]
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared root lengths d_i with d_i a_ij = d_j a_ji, longest equal to 2."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    if any(x is None for x in d):
        raise ConstructionError("Cartan matrix is not connected")
    top = max(d)
    return [2 * x / top for x in d]


# --- the root system -------------------------------------------------------


@dataclass(frozen=True)
class RootSystem:
    stype: SimpleType
    cartan: tuple[tuple[int, ...], ...]
    simples: tuple[Root, ...]
    positives: tuple[Root, ...]
    all_roots: tuple[Root, ...]
    highest: Root
    marks: tuple[int, ...]
    form: tuple[tuple[Fraction, ...], ...]
    lengths: dict[Root, str] = field(compare=False, hash=False, repr=False)
    _index: frozenset[Root] = field(compare=False, hash=False, repr=False)

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def negatives(self) -> tuple[Root, ...]:
        return tuple(neg(r) for r in self.positives)

    def is_root(self, v: Iterable[int]) -> bool:
        return tuple(v) in self._index

    def require_root(self, r: Root) -> Root:
        r = tuple(r)
        if r not in self._index:
            raise DomainError(f"{r} is not a root of {self.stype}")
        return r

    def require_simple(self, alpha: int) -> int:
        """Validate a 1-based simple index and return its coordinate position."""
        if not isinstance(alpha, int) or not 1 <= alpha <= self.rank:
            raise DomainError(f"simple root index must be in 1..{self.rank} for {self.stype}, got {alpha!r}")
        return alpha - 1

    def simple(self, alpha: int) -> Root:
        return self.simples[self.require_simple(alpha)]

    def mark(self, alpha: int) -> int:
        return self.marks[self.require_simple(alpha)]

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        f = self.form
        n = self.rank
        return sum(
            (f[i][j] * u[i] * v[j] for i in range(n) if u[i] for j in range(n) if v[j]),
            Fraction(0),
        )

    def reflect(self, alpha: int, v: Root) -> Root:
        """Simple reflection s_alpha applied to v."""
        i = self.require_simple(alpha)
        k = sum(self.cartan[i][j] * v[j] for j in range(self.rank))
        return tuple(x - k if j == i else x for j, x in enumerate(v))

    def is_positive(self, r: Root) -> bool:
        return any(x > 0 for x in r)


def neg(r: Root) -> Root:
    return tuple(-x for x in r)


def height(r: Root) -> int:
    return sum(r)


def _closure(cartan: Sequence[Sequence[int]]) -> set[Root]:
    n = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simples)
    queue = deque(simples)
    while queue:
        v = queue.popleft()
        for i in range(n):
            k = sum(cartan[i][j] * v[j] for j in range(n))
            if k == 0:
                continue
            w = tuple(x - k if j == i else x for j, x in enumerate(v))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    """Generate the full root system of ``t`` by reflection closure."""
    cartan = cartan_matrix(t)
    n = t.rank
    d = _symmetrizer(cartan)
    form = tuple(tuple(cartan[i][j] * d[i] / 2 for j in range(n)) for i in range(n))

    roots = _closure(cartan)
    positives = tuple(sorted((r for r in roots if any(x > 0 for x in r)), key=lambda r: (height(r), r)))
    if len(roots) != 2 * len(positives):
        raise ConstructionError(f"{t}: reflection closure produced a non-symmetric set")
    negatives = tuple(neg(r) for r in positives)
    top = height(positives[-1])
    tops = [r for r in positives if height(r) == top]
    if len(tops) != 1:
        raise ConstructionError(f"{t}: no unique root of maximal height")
    highest = tops[0]

    simples = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    long_len = Fraction(2)
    lengths = {}
    for r in positives + negatives:
        rr = sum((form[i][j] * r[i] * r[j] for i in range(n) for j in range(n)), Fraction(0))
        lengths[r] = "long" if rr == long_len else "short"

    return RootSystem(
        stype=t,
        cartan=cartan,
        simples=simples,
        positives=positives,
        all_roots=positives + negatives,
        highest=highest,
        marks=tuple(highest),
        form=form,
        lengths=lengths,
        _index=frozenset(roots),
    )


def root_system(value: str | SimpleType) -> RootSystem:
    t = SimpleType.parse(value) if isinstance(value, str) else value
    return build_root_system(t)


# --- coweights and pairings ------------------------------------------------


@dataclass(frozen=True)
class Coweight:
    """Rational point of Y(T) (x) R in the basis of fundamental coweights."""

    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> Coweight:
        return cls((Fraction(0),) * rank)

    @classmethod
    def fundamental(cls, rank: int, alpha: int, scale: Fraction | int = 1) -> Coweight:
        return cls(tuple(Fraction(scale) if i == alpha - 1 else Fraction(0) for i in range(rank)))

    def __add__(self, other: Coweight) -> Coweight:
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: Fraction | int) -> Coweight:
        return Coweight(tuple(c * a for a in self.coords))

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coords]


def pairing(rs: RootSystem, theta: Coweight, r: Root) -> Fraction:
    """Exact value r(theta); the fundamental coweights are dual to the simple roots."""
    r = rs.require_root(r)
    if len(theta.coords) != rs.rank:
        raise DomainError(f"coweight has {len(theta.coords)} coordinates, expected {rs.rank}")
    return sum((c * x for c, x in zip(theta.coords, r)), Fraction(0))


def coroot_eval(rs: RootSystem, r: Root, beta: Root) -> int:
    """<beta, r^vee> = 2 (beta, r) / (r, r), always an integer."""
    r = rs.require_root(r)
    beta = rs.require_root(beta)
    val = 2 * rs.inner(beta, r) / rs.inner(r, r)
    if val.denominator != 1:
        raise ConstructionError(f"non-integral pairing {val} between {beta} and {r}^vee")
    return int(val)


# --- extended Dynkin diagram -----------------------------------------------


@dataclass(frozen=True)
class ExtendedDiagram:
    """Affine Dynkin diagram: node 0 is alpha_0 (gradient -alpha_max), nodes 1..n are S.

    Each edge is ``(i, j, a_ij, a_ji)`` with ``i < j`` and Cartan entries computed
    from the invariant form.
    """

    nodes: tuple[int, ...]
    gradients: tuple[Root, ...]
    edges: tuple[tuple[int, int, int, int], ...]
    attachment: tuple[int, ...]

    def neighbours(self, node: int) -> tuple[int, ...]:
        out = set()
        for i, j, _, _ in self.edges:
            if i == node:
                out.add(j)
            elif j == node:
                out.add(i)
        return tuple(sorted(out))


def affine_gradients(rs: RootSystem) -> tuple[Root, ...]:
    """Gradient parts of the affine simple roots alpha_0, alpha_1, ..., alpha_n."""
    return (neg(rs.highest),) + rs.simples


def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    grads = affine_gradients(rs)
    edges = []
    for i in range(len(grads)):
        for j in range(i + 1, len(grads)):
            if rs.inner(grads[i], grads[j]) != 0:
                edges.append((i, j, coroot_eval(rs, grads[i], grads[j]), coroot_eval(rs, grads[j], grads[i])))
    attachment = tuple(j for i, j, _, _ in edges if i == 0)
    return ExtendedDiagram(
        nodes=tuple(range(rs.rank + 1)),
        gradients=grads,
        edges=tuple(edges),
        attachment=attachment,
    )


def format_root(r: Root) -> str:
    """Human-readable linear combination, e.g. ``a1+2a2``."""
    parts = []
    for i, c in enumerate(r, start=1):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{coef}a{i}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s
