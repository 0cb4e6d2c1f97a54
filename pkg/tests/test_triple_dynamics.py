from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import oracle_walk_count, oracle_walks
from gpfactor.errors import NonIntegerResult, VertexNotInGraph
from gpfactor.triple_dynamics import (
    GRAPHS, H, H_COLOURS, H_PM, T, T_COLOURS, T_PM, Kind, SignedCount,
    all_triples, clockwise_cycle, closed_form_signed_t, closed_form_t, count_walks,
    enumerate_walks, jacobsthal, jacobsthal_closed_form, lift_walk, triple_arc_sign,
    triple_step, walk_sign, _exact_div,
)

JACOBSTHAL_PREFIX = [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341]


def test_jacobsthal_prefix():
    assert [jacobsthal(k) for k in range(11)] == JACOBSTHAL_PREFIX


@pytest.mark.parametrize("k", range(0, 300, 7))
def test_jacobsthal_recurrence_matches_closed_form(k):
    assert jacobsthal(k) == jacobsthal_closed_form(k)


def test_jacobsthal_is_exact_for_large_k():
    assert jacobsthal(200) == (2 ** 200 + 1) // 3


# -- semiring ------------------------------------------------------------------

counts = st.builds(SignedCount, st.integers(0, 10 ** 30), st.integers(0, 10 ** 30))


@given(counts, counts, counts)
def test_semiring_laws(a, b, c):
    one = SignedCount(1, 0)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * one == a
    assert a * (b + c) == a * b + a * c
    assert (a * b).total() == a.total() * b.total()
    assert (a * b).difference() == a.difference() * b.difference()


# -- graph structure --------------------------------------------------------------


def test_underlying_cycles():
    for g, m in ((T, 3), (H, 6), (T_PM, 3), (H_PM, 6)):
        assert g.size == m
        assert len(g.arcs) == 2 * m
        undirected = {frozenset((s, d)) for s, d, _ in g.arcs}
        assert undirected == {frozenset((p, (p + 1) % m)) for p in range(m)}


@pytest.mark.parametrize("g,cw_sign", [(T_PM, 1), (H_PM, -1)])
def test_signed_arc_orientation(g, cw_sign):
    for s, d, sign in g.arcs:
        assert sign == (cw_sign if (d - s) % g.size == 1 else -cw_sign)
        assert g.arc_sign(d, s) == -sign


def test_unknown_vertex():
    with pytest.raises(VertexNotInGraph):
        count_walks(T, 2, "y0", "x0")
    with pytest.raises(VertexNotInGraph):
        count_walks(H, 2, 0, 6)


# -- spec examples --------------------------------------------------------------


def test_walk_examples():
    assert count_walks(T, 2, "x0", "x0") == SignedCount(2, 0)
    assert oracle_walk_count("T", 2, 0, 0) == (2, 0)
    assert count_walks(H, 3, "y0", "y2") == SignedCount(0, 0)
    assert count_walks(T_PM, 2, "x0", "x2") == SignedCount(1, 0)
    assert count_walks(T_PM, 3, "x0", "x2") == SignedCount(3, 0)
    assert oracle_walk_count("T±", 3, 0, 2) == (3, 0)


def test_closed_form_t_examples():
    assert closed_form_t(3, 0) == 2 == count_walks(T, 3, "x0", "x0").total()
    assert closed_form_t(5, 1) == 11
    assert closed_form_t(0, 0) == 1


def test_closed_form_signed_examples():
    assert closed_form_signed_t(1) == SignedCount(0, 1)
    assert closed_form_signed_t(4) == SignedCount(1, 4)
    assert closed_form_signed_t(5) == SignedCount(1, 10)
    # walk oracle, independent of the transfer matrix
    assert oracle_walk_count("T±", 4, 0, 2) == (1, 4)
    assert oracle_walk_count("T±", 5, 0, 2) == (1, 10)


def test_exact_division_guard():
    with pytest.raises(NonIntegerResult):
        _exact_div(7, 3)
    with pytest.raises(ValueError):
        closed_form_signed_t(0)


def test_lift_examples():
    assert lift_walk((0, 1, 2)) == (0, 1, 2)
    # x0 x2 x0 x1 x2 -> y0 z2 y0 y1 y2
    lifted = lift_walk((0, 2, 0, 1, 2))
    assert [H.vertices[p] for p in lifted] == ["y0", "z2", "y0", "y1", "y2"]
    with pytest.raises(ValueError):
        lift_walk((1, 2))


def test_lift_count_length_6():
    t_walks = oracle_walks("T", 6, 0, 2)
    h_walks = oracle_walks("H", 6, 0, 2)
    assert {lift_walk(w) for w in t_walks} == h_walks
    assert len(h_walks) == count_walks(T, 6, "x0", "x2").total() == count_walks(H, 6, "y0", "y2").total()


# -- invariants ---------------------------------------------------------------------


@given(st.integers(0, 30))
def test_triangle_counts(k):
    for a, b in ((0, 1), (1, 2), (2, 0), (0, 2)):
        assert count_walks(T, k, a, b).total() == jacobsthal(k)
    assert count_walks(T, k, 1, 1).total() == closed_form_t(k, 0)


@given(st.integers(0, 31))
def test_hexagon_vs_triangle(k):
    h = count_walks(H, k, "y0", "y2").total()
    if k % 2:
        assert h == 0
    else:
        assert h == count_walks(T, k, "x0", "x2").total()


@given(st.integers(1, 30))
def test_signed_counts_match_closed_form(k):
    t = count_walks(T_PM, k, "x0", "x2")
    assert t == closed_form_signed_t(k)
    assert t.total() == jacobsthal(k)
    if k % 2 == 0:
        assert count_walks(H_PM, k, "y0", "y2") == t


@given(st.integers(0, 20), st.integers(0, 2))
def test_reverse_walk_symmetry(k, x):
    y = (x + 1) % 3
    fwd = count_walks(T_PM, k, x, y)
    back = count_walks(T_PM, k, y, x)
    assert fwd == (back.swapped() if k % 2 else back)


@pytest.mark.parametrize("kind", list(Kind))
def test_transfer_matrix_matches_dfs(kind):
    g = GRAPHS[kind]
    for length in range(13):
        for a in range(g.size):
            for b in range(g.size):
                walks = list(enumerate_walks(g, length, a, b))
                pos = sum(walk_sign(g, w) > 0 for w in walks)
                assert count_walks(g, length, a, b) == SignedCount(pos, len(walks) - pos)
                if length <= 8:
                    assert oracle_walk_count(kind.value, length, a, b) == (pos, len(walks) - pos)


def test_dfs_order_is_lexicographic():
    walks = list(enumerate_walks(H, 6, 0))
    assert walks == sorted(walks)
    assert len(walks) == 2 ** 6


# -- concrete colour triples ---------------------------------------------------------


def _compatible(p, q):
    """Pair of outer triples whose forced spokes are proper and pairwise distinct."""
    if any(a == b for a, b in zip(p, q)):
        return False
    spokes = [6 - a - b for a, b in zip(p, q)]
    return len(set(spokes)) == 3


def test_labelled_cycles_are_clockwise():
    for cyc in (T_COLOURS, H_COLOURS):
        m = len(cyc)
        for p in range(m):
            assert triple_step(cyc[p], cyc[(p + 1) % m])[1] == 1
            assert triple_step(cyc[(p + 1) % m], cyc[p])[1] == -1


def test_arcs_are_exactly_the_compatible_pairs():
    triples = list(all_triples())
    for p, q in product(triples, repeat=2):
        assert (triple_step(p, q) is not None) == _compatible(p, q), (p, q)


def test_every_nonmonochromatic_triple_is_placed():
    placed = [t for t in all_triples() if clockwise_cycle(t) is not None]
    assert len(placed) == 24
    assert clockwise_cycle((2, 2, 2)) is None
    assert clockwise_cycle((1, 3, 2))[1] == ((1, 3, 2), (2, 1, 3), (3, 2, 1))


def test_arc_signs_on_labelled_cycles():
    assert triple_arc_sign((1, 2, 3), (3, 1, 2)) == 1
    assert triple_arc_sign((1, 2, 3), (2, 3, 1)) == -1
    assert triple_arc_sign((1, 1, 2), (2, 3, 3)) == -1
    assert triple_arc_sign((2, 3, 3), (1, 1, 2)) == 1
    with pytest.raises(ValueError):
        triple_arc_sign((1, 2, 3), (1, 2, 3))
