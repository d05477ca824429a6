"""Graded kernel of the evaluation map B + B -> k[t0, t1] for an elementary transformation.

B = R[t0, t1] with R = k[t]/(t^N), graded by (t0, t1)-degree, and
f(h0, h1) = h0(t=0) * t0 + h1(t=0) * t1.  The kernel M is generated by
E0 = (-t1, t0), E1 = (t, 0), E2 = (0, t) subject to t*E0 + t1*E1 - t0*E2 = 0.

Monomials t^a t0^i t1^j are keyed by ``(a, i, j)``; an element of B + B is a
dict keyed by ``(component, a, i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .linalg import check_char, coerce

Mono = tuple[int, int, int]
Elem = dict[tuple[int, int, int, int], int]


@dataclass(frozen=True)
class TruncatedRing:
    trunc: int
    char: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.trunc, int) or self.trunc < 1:
            raise ValueError(f"truncation order must be a positive integer, got {self.trunc!r}")
        check_char(self.char)


@dataclass(frozen=True)
class GradedKernelSlice:
    degree: int
    dimension: int
    columns: tuple[tuple[int, int, int, int], ...]
    basis: tuple[tuple, ...]


def closed_form(N: int, d: int) -> int:
    return 2 * N * (d + 1) - (d + 2)


def monomials(d: int, tdeg: int) -> list[Mono]:
    """Monomials of (t0, t1)-degree d with t-degree below ``tdeg``, degree-lex ordered."""
    if d < 0:
        return []
    return [(a, i, d - i) for a in range(tdeg) for i in range(d, -1, -1)]


def pair_columns(d: int, tdeg: int) -> list[tuple[int, int, int, int]]:
    return [(c,) + m for c in (0, 1) for m in monomials(d, tdeg)]


def _vector(elem: Elem, index: dict, p: int) -> list:
    v = [coerce(0, p)] * len(index)
    for key, c in elem.items():
        if c and key in index:
            v[index[key]] = coerce(c, p)
        elif c and key not in index:
            raise KeyError(f"term {key} lies outside the target basis")
    return v


def _times(m: Mono, elem: Elem, tdeg: int | None) -> Elem:
    """Multiply by a monomial; terms with t-degree >= tdeg vanish (None keeps everything)."""
    a, i, j = m
    out: Elem = {}
    for (c, b, k, l), coef in elem.items():
        if tdeg is not None and a + b >= tdeg:
            continue
        key = (c, a + b, i + k, j + l)
        out[key] = out.get(key, 0) + coef
    return {k: v for k, v in out.items() if v}


def _add(*elems: Elem) -> Elem:
    out: Elem = {}
    for e in elems:
        for k, v in e.items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _scale(c: int, elem: Elem) -> Elem:
    return {k: c * v for k, v in elem.items() if c * v}


E0: Elem = {(0, 0, 0, 1): -1, (1, 0, 1, 0): 1}
E1: Elem = {(0, 1, 0, 0): 1}
E2: Elem = {(1, 1, 0, 0): 1}
GENERATORS = {"E0": (E0, 1), "E1": (E1, 0), "E2": (E2, 0)}


def evaluation(elem: Elem) -> dict[tuple[int, int], int]:
    """f applied to an element of B + B; result keyed by (t0, t1) exponents."""
    out: dict[tuple[int, int], int] = {}
    for (c, a, i, j), v in elem.items():
        if a:
            continue
        key = (i + 1, j) if c == 0 else (i, j + 1)
        out[key] = out.get(key, 0) + v
    return {k: v for k, v in out.items() if v}


def _evaluation_matrix(d: int, N: int) -> tuple[list[list[int]], list[tuple[int, int, int, int]]]:
    cols = pair_columns(d, N)
    targets = [(e, d + 1 - e) for e in range(d + 1, -1, -1)]
    row_of = {m: r for r, m in enumerate(targets)}
    mat = [[0] * len(cols) for _ in targets]
    for k, col in enumerate(cols):
        for key, v in evaluation({col: 1}).items():
            mat[row_of[key]][k] += v
    return mat, cols


def kernel_slice(ring: TruncatedRing, d: int) -> GradedKernelSlice:
    if d < 0:
        raise ValueError(f"degree must be non-negative, got {d}")
    mat, cols = _evaluation_matrix(d, ring.trunc)
    basis = linalg.nullspace(mat, len(cols), ring.char)
    return GradedKernelSlice(d, len(basis), tuple(cols), tuple(tuple(v) for v in basis))


def generator_multiples(ring: TruncatedRing, d: int) -> list[Elem]:
    """All m * E_i of (t0, t1)-degree d, m a monomial of B."""
    out = []
    for gen, gdeg in GENERATORS.values():
        for m in monomials(d - gdeg, ring.trunc):
            e = _times(m, gen, ring.trunc)
            if e:
                out.append(e)
    return out


def check_generators(ring: TruncatedRing, D: int) -> bool:
    """Do E0, E1, E2 span the kernel in every degree up to D?"""
    p = ring.char
    for d in range(D + 1):
        ker = kernel_slice(ring, d)
        index = {c: k for k, c in enumerate(ker.columns)}
        vectors = []
        for e in generator_multiples(ring, d):
            if any(coerce(v, p) for v in evaluation(e).values()):
                return False
            vectors.append(_vector(e, index, p))
        if linalg.rank(vectors, p) != ker.dimension:
            return False
    return True


RELATION = {"E0": ((1, 0, 0), 1), "E1": ((0, 0, 1), 1), "E2": ((0, 1, 0), -1)}


def relation_value(tdeg: int | None = None) -> Elem:
    """t*E0 + t1*E1 - t0*E2, computed symbolically (optionally truncated at t^tdeg)."""
    parts = [_scale(sign, _times(m, GENERATORS[name][0], tdeg)) for name, (m, sign) in RELATION.items()]
    return _add(*parts)


def syzygy_dimensions(ring: TruncatedRing, d: int) -> tuple[int, int]:
    """(dim of syzygies of (E0, E1, E2) in degree d, dim of multiples of the relation).

    Coefficients are polynomials in t of degree below N, multiplied without
    truncation, so that t^N = 0 does not manufacture spurious relations.
    """
    N, p = ring.trunc, ring.char
    slots = []  # (generator, monomial multiplier)
    for name, (gen, gdeg) in GENERATORS.items():
        slots += [(name, m) for m in monomials(d - gdeg, N)]
    target = pair_columns(d, N + 1)
    index = {c: k for k, c in enumerate(target)}
    images = [_vector(_times(m, GENERATORS[name][0], None), index, p) for name, m in slots]
    mat = [list(row) for row in zip(*images)] if images else []
    syz = linalg.nullspace(mat, len(slots), p) if slots else []

    slot_index = {s: k for k, s in enumerate(slots)}
    multiples = []
    for m in monomials(d - 1, N - 1):
        v = [coerce(0, p)] * len(slots)
        for name, (rm, sign) in RELATION.items():
            prod = (m[0] + rm[0], m[1] + rm[1], m[2] + rm[2])
            v[slot_index[(name, prod)]] = coerce(sign, p)
        if any(linalg.mat_vec(mat, v, p)):
            raise ArithmeticError(f"multiple {m} of the relation is not a syzygy")
        multiples.append(v)
    return len(syz), linalg.rank(multiples, p) if multiples else 0


def check_syzygy(ring: TruncatedRing, D: int = 3) -> bool:
    """The relation vanishes, and spans all syzygies in degrees up to D."""
    if relation_value() or relation_value(ring.trunc):
        return False
    return all(a == b for a, b in (syzygy_dimensions(ring, d) for d in range(D + 1)))


def hilbert_table(ring: TruncatedRing, D: int) -> dict[int, int]:
    table = {d: kernel_slice(ring, d).dimension for d in range(D + 1)}
    for d, dim in table.items():
        if dim != closed_form(ring.trunc, d):
            raise ArithmeticError(f"degree {d}: kernel dimension {dim} != {closed_form(ring.trunc, d)}")
    return table


def mod_t_decomposition_ok(ring: TruncatedRing, d: int) -> bool:
    """Every kernel element reduces mod t to q * E0 for some q in k[t0, t1]."""
    p = ring.char
    ker = kernel_slice(ring, d)
    for vec in ker.basis:
        h0 = {(i, j): v for (c, a, i, j), v in zip(ker.columns, vec) if c == 0 and a == 0 and v}
        h1 = {(i, j): v for (c, a, i, j), v in zip(ker.columns, vec) if c == 1 and a == 0 and v}
        if any(i == 0 for i, _ in h1):
            return False
        q = {(i - 1, j): v for (i, j), v in h1.items()}
        expected = {(i, j + 1): (-v if p == 0 else (-v) % p) for (i, j), v in q.items()}
        if h0 != expected:
            return False
    return True
