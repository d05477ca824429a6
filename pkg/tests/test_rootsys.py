from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcovekit import ConstructionError, DomainError
from alcovekit.parahoric import theta
from alcovekit.rootsys import (
    Coweight,
    SimpleType,
    all_types,
    build_root_system,
    coroot_eval,
    extended_diagram,
    height,
    neg,
    pairing,
    root_system,
)

TYPES8 = all_types(8)

# classical |Phi| per family, independent of the closure
CLASSICAL_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}

# upper bound on any simple-root coefficient of a root (largest mark)
COEFF_BOUND = {"A": 1, "B": 2, "C": 2, "D": 2, "E6": 3, "E7": 4, "F4": 4, "G2": 3}


def brute_force_positive_roots(rs):
    """Enumerate a box of nonnegative lattice vectors and keep those passing a length test.

    A nonzero vector of the root lattice is a root iff its squared length is the
    short length, or it is the long length and its coroot lies in the coroot
    lattice (coefficients on short simples divisible by the length ratio).
    """
    n = rs.rank
    gram = rs.form
    d = [gram[i][i] for i in range(n)]
    long_len, short_len = max(d), min(d)
    ratio = long_len / short_len
    bound = COEFF_BOUND.get(rs.stype.label, COEFF_BOUND.get(rs.stype.family))
    found = set()
    for v in product(range(bound + 1), repeat=n):
        if not any(v):
            continue
        nv = sum(gram[i][j] * v[i] * v[j] for i in range(n) for j in range(n) if v[i] and v[j])
        if nv == short_len:
            found.add(v)
        elif nv == long_len:
            if all((v[i] / ratio).denominator == 1 for i in range(n) if d[i] == short_len):
                found.add(v)
    return found


@pytest.mark.parametrize("t", [t for t in TYPES8 if t.label != "E8"], ids=str)
def test_closure_matches_brute_force(t):
    rs = build_root_system(t)
    assert brute_force_positive_roots(rs) == set(rs.positives)


@pytest.mark.parametrize("t", TYPES8, ids=str)
def test_root_count_matches_classical_table(t):
    rs = build_root_system(t)
    assert len(rs.all_roots) == CLASSICAL_COUNT[t.family](t.rank)


@pytest.mark.parametrize("t", TYPES8, ids=str)
def test_structural_invariants(t):
    rs = build_root_system(t)
    pos = set(rs.positives)
    assert len(rs.all_roots) == 2 * len(rs.positives)
    assert set(rs.all_roots) == pos | {neg(r) for r in pos}
    # closure is idempotent: reflecting again adds nothing
    for r in rs.all_roots:
        for a in range(1, rs.rank + 1):
            assert rs.is_root(rs.reflect(a, r))
    for r in rs.positives:
        assert all(h - x >= 0 for h, x in zip(rs.highest, r))
    assert [r for r in rs.positives if height(r) == height(rs.highest)] == [rs.highest]
    assert all(c > 0 for c in rs.marks)
    assert tuple(rs.marks) == rs.highest
    # long roots have squared length 2
    assert max(rs.inner(r, r) for r in rs.simples) == 2


def test_positive_order_is_height_then_lex():
    rs = root_system("B3")
    keys = [(height(r), r) for r in rs.positives]
    assert keys == sorted(keys)


def test_a1():
    rs = root_system("A1")
    assert set(rs.all_roots) == {(1,), (-1,)}


def test_g2_marks_and_size():
    rs = root_system("G2")
    assert len(rs.all_roots) == 12
    assert rs.marks == (3, 2)


def test_e8_size():
    rs = root_system("E8")
    assert (len(rs.all_roots), len(rs.positives)) == (240, 120)
    # 248 = dim E8 = |Phi| + rank
    assert len(rs.all_roots) + rs.rank == 248
    assert rs.marks == (2, 3, 4, 6, 5, 4, 3, 2)


@pytest.mark.parametrize(
    "label, marks",
    [
        ("B4", (1, 2, 2, 2)),
        ("C4", (2, 2, 2, 1)),
        ("D5", (1, 2, 2, 1, 1)),
        ("E6", (1, 2, 2, 3, 2, 1)),
        ("E7", (2, 2, 3, 4, 3, 2, 1)),
        ("F4", (2, 3, 4, 2)),
    ],
)
def test_bourbaki_marks(label, marks):
    assert root_system(label).marks == marks


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 2)])
def test_invalid_types(bad):
    with pytest.raises(ConstructionError):
        SimpleType(*bad)


def test_rank_error_names_range():
    with pytest.raises(ConstructionError, match="n >= 4"):
        SimpleType("D", 3)


@pytest.mark.parametrize("text", ["Z9", "", "A", "3A", "E 8x"])
def test_parse_errors(text):
    with pytest.raises(ConstructionError):
        SimpleType.parse(text)


def test_parse_accepts_lowercase():
    assert SimpleType.parse("e8") == SimpleType("E", 8)


# --- pairing and coroots ---------------------------------------------------


@pytest.mark.parametrize("t", TYPES8, ids=str)
def test_theta_pairings(t):
    rs = build_root_system(t)
    for a in range(1, rs.rank + 1):
        th = theta(rs, a)
        for b in range(1, rs.rank + 1):
            want = Fraction(1, rs.mark(a)) if a == b else 0
            assert pairing(rs, th, rs.simple(b)) == want
        assert pairing(rs, th, rs.highest) == 1


def test_zero_coweight_pairs_to_zero():
    rs = root_system("F4")
    zero = Coweight.zero(4)
    assert all(pairing(rs, zero, r) == 0 for r in rs.all_roots)


def test_pairing_rejects_non_root():
    rs = root_system("A2")
    with pytest.raises(DomainError):
        pairing(rs, Coweight.zero(2), (1, -1))


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(["A3", "B3", "C3", "G2", "F4"]),
    st.lists(st.fractions(max_denominator=12, min_value=-3, max_value=3), min_size=4, max_size=4),
    st.lists(st.fractions(max_denominator=12, min_value=-3, max_value=3), min_size=4, max_size=4),
    st.fractions(max_denominator=7, min_value=-5, max_value=5),
)
def test_pairing_is_linear_in_coweight(label, x, y, c):
    rs = root_system(label)
    n = rs.rank
    u, v = Coweight(tuple(x[:n])), Coweight(tuple(y[:n]))
    for r in rs.all_roots[:10]:
        assert pairing(rs, u + v.scale(c), r) == pairing(rs, u, r) + c * pairing(rs, v, r)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([t.label for t in TYPES8]), st.data())
def test_simple_reflection_preserves_roots(label, data):
    rs = root_system(label)
    r = data.draw(st.sampled_from(rs.all_roots))
    a = data.draw(st.integers(1, rs.rank))
    w = rs.reflect(a, r)
    assert rs.is_root(w)
    assert rs.reflect(a, w) == r


@pytest.mark.parametrize("t", TYPES8, ids=str)
def test_coroot_of_highest_root(t):
    rs = build_root_system(t)
    assert coroot_eval(rs, rs.highest, rs.highest) == 2
    assert all(isinstance(coroot_eval(rs, r, rs.highest), int) for r in rs.positives)


@pytest.mark.parametrize("label", ["G2", "F4", "E8"])
def test_highest_coroot_on_simples(label):
    rs = root_system(label)
    (att,) = extended_diagram(rs).attachment
    assert coroot_eval(rs, rs.highest, rs.simple(att)) == 1
    for g in range(1, rs.rank + 1):
        if g != att:
            assert coroot_eval(rs, rs.highest, rs.simple(g)) == 0
    # on negative roots the highest coroot reads off the attachment coefficient
    for beta in rs.negatives:
        assert coroot_eval(rs, rs.highest, beta) == beta[att - 1]
        assert beta[att - 1] in (0, -1, -2)


def test_coroot_eval_rejects_non_root():
    rs = root_system("B2")
    with pytest.raises(DomainError):
        coroot_eval(rs, (2, 2), (1, 0))


# --- extended diagram ------------------------------------------------------


def test_a2_extended_diagram_is_a_cycle():
    ext = extended_diagram(root_system("A2"))
    assert ext.attachment == (1, 2)
    assert {(i, j) for i, j, _, _ in ext.edges} == {(0, 1), (0, 2), (1, 2)}


@pytest.mark.parametrize("label, node", [("E8", 8), ("F4", 1), ("G2", 2)])
def test_attachment_is_single_node_of_mark_two(label, node):
    rs = root_system(label)
    ext = extended_diagram(rs)
    assert ext.attachment == (node,)
    assert rs.mark(node) == 2


def test_e8_attachment_at_long_end():
    ext = extended_diagram(root_system("E8"))
    # node 8 is the end of the long arm 4-5-6-7-8
    assert ext.neighbours(8) == (0, 7)


def test_extended_a1_has_double_bond_labels():
    ext = extended_diagram(root_system("A1"))
    assert ext.edges == ((0, 1, -2, -2),)
