"""Exact Gaussian elimination over Q (char 0) or F_p.

Matrices are lists of rows.  Entries over Q are Fractions; over F_p they are
ints reduced into ``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DomainError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_char(p: int) -> int:
    if p != 0 and not is_prime(p):
        raise DomainError(f"characteristic must be 0 or a prime, got {p}")
    return p


def coerce(x, p: int):
    if p == 0:
        return Fraction(x)
    if isinstance(x, Fraction):
        return (x.numerator * pow(x.denominator, -1, p)) % p
    return int(x) % p


def _inv(x, p: int):
    return 1 / x if p == 0 else pow(x, -1, p)


def rref(matrix: Sequence[Sequence], p: int = 0) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[coerce(x, p) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = _inv(rows[r][c], p)
        rows[r] = [x * inv for x in rows[r]] if p == 0 else [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                if p == 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
                else:
                    rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix: Sequence[Sequence], p: int = 0) -> int:
    return len(rref(matrix, p)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int, p: int = 0) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column."""
    reduced, pivots = rref(matrix, p) if matrix else ([], [])
    one = coerce(1, p)
    zero = coerce(0, p)
    basis = []
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [zero] * ncols
        v[free] = one
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[free] if p == 0 else (-row[free]) % p
        basis.append(v)
    return basis


def mat_vec(matrix: Sequence[Sequence], v: Sequence, p: int = 0) -> list:
    out = [sum((a * b for a, b in zip(row, v)), coerce(0, p)) for row in matrix]
    return out if p == 0 else [x % p for x in out]
