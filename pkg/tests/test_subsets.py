import itertools

import pytest
from hypothesis import given, strategies as st

from rankchains.subsets import (
    J,
    chain_max,
    chain_min,
    compact,
    complement,
    delete_rightmost_j,
    format_subset,
    is_full_rank,
    jump,
    parse_subset,
    predecessor,
    rank,
    rank_via_walk,
    successor,
    tableau,
    underline_map,
)

from conftest import all_subsets


def literal_bottom(F):
    # below each a: the largest integer < a outside F and not used yet, else J
    used = set()
    out = []
    for a in F:
        candidates = [x for x in range(1, a) if x not in F and x not in used]
        if candidates:
            used.add(candidates[-1])
            out.append(candidates[-1])
        else:
            out.append(J)
    return tuple(out)


subset_strategy = st.frozensets(st.integers(1, 18), max_size=12).map(lambda s: tuple(sorted(s)))


def test_tableau_of_2378():
    T = tableau((2, 3, 7, 8))
    assert T.bottom == (1, J, 6, 5)
    assert str(T) == "2 3 7 8\n1 j 6 5"
    assert rank((2, 3, 7, 8)) == 3
    assert not is_full_rank((2, 3, 7, 8))


def test_successor_of_2378_adds_4():
    F = (2, 3, 7, 8)
    assert successor(F) == (2, 3, 4, 7, 8)
    T = tableau(successor(F))
    assert T.bottom == (1, J, J, 6, 5)
    assert T.fill() == tableau(F).fill()
    assert T.fill_star() == tableau(F).fill_star()
    assert predecessor(successor(F)) == F


def test_empty_set():
    assert tableau(()).bottom == ()
    assert rank(()) == 0
    assert successor(()) == (1,)
    assert predecessor(()) is None


def test_walk_rank_of_2378():
    assert rank_via_walk((2, 3, 7, 8), 8) == 3


def test_walk_rejects_small_universe():
    with pytest.raises(ValueError):
        rank_via_walk((2, 9), 8)


@pytest.mark.parametrize("v", range(1, 11))
def test_tableau_matches_literal_rule(v):
    for F in all_subsets(v):
        assert tableau(F).bottom == literal_bottom(F)


@pytest.mark.parametrize("v", range(1, 13))
def test_rank_oracles_agree(v):
    for F in all_subsets(v):
        assert rank(F) == rank_via_walk(F, v)


@pytest.mark.parametrize("v", range(1, 11))
def test_round_trips(v):
    for F in all_subsets(v):
        assert predecessor(successor(F)) == F
        G = predecessor(F)
        if G is None:
            assert is_full_rank(F)
        else:
            assert successor(G) == F
            assert rank(G) == rank(F)
        assert rank(successor(F)) == rank(F)


def test_jump_and_delete_rightmost_j_agree():
    for F in all_subsets(8):
        blanks = len(F) - rank(F)
        for m in range(blanks + 2):
            assert delete_rightmost_j(F, m) == jump(F, -m)


def test_jump_up_and_down():
    F = (2, 3, 7, 8)
    assert jump(F, 0) == F
    assert jump(jump(F, 3), -3) == F
    assert jump(F, -1) == (2, 7, 8)
    assert jump(F, -2) is None


def b_set_jump(F, m):
    # shortcut: add the m least x with a_{i-1} + 1 <= x <= a_i - 2 (a_0 = 0, last gap unbounded)
    bounds = (0,) + tuple(F)
    gaps = []
    for lo, hi in zip(bounds, bounds[1:]):
        gaps += range(lo + 1, hi - 1)
    x = bounds[-1] + 1
    while len(gaps) < m:
        gaps.append(x)
        x += 1
    return tuple(sorted(F + tuple(gaps[:m])))


def test_b_set_shortcut_breaks_rank():
    F = (2, 3, 7, 8)
    assert jump(F, 2) == (2, 3, 4, 7, 8, 9)
    assert rank(jump(F, 2)) == 3
    assert b_set_jump(F, 2) == (2, 3, 4, 5, 7, 8)
    assert rank(b_set_jump(F, 2)) == 2


def test_chain_endpoints():
    assert chain_min((2, 3, 4, 7, 8)) == (2, 7, 8)
    assert chain_min((1, 3, 5)) == (3, 5)
    assert chain_max((2, 3), 6) == (2, 3, 4, 5, 6)
    assert chain_max((), 3) == (1, 2, 3)


def test_underline_map_values():
    # {2,4,6}: complement {1,3,5} has chain minimum {3,5}, so the image is [6] minus {3,5}
    assert underline_map((2, 4, 6), 6) == (1, 2, 4, 6)
    assert underline_map((1,), 2) == (1,)
    assert underline_map((2,), 2) == (1, 2)


@pytest.mark.parametrize("v", range(1, 9))
def test_underline_map_is_superset_of_size_at_least_half(v):
    for K in all_subsets(v):
        image = underline_map(K, v)
        assert set(K) <= set(image)
        assert len(image) >= v - len(image)


@pytest.mark.parametrize("v", range(1, 11))
def test_underline_map_idempotent(v):
    for K in all_subsets(v):
        assert underline_map(underline_map(K, v), v) == underline_map(K, v)
    full = tuple(range(1, v + 1))
    assert underline_map(full, v) == full


@pytest.mark.parametrize("v", range(1, 11))
def test_full_rank_iff_walk_below_diagonal(v):
    for F in all_subsets(v):
        below = all(2 * sum(1 for a in F if a <= i) <= i for i in range(v + 1))
        assert below == is_full_rank(F)
        assert chain_min(chain_min(F)) == chain_min(F)


def test_underline_map_example():
    assert underline_map((1, 2), 6) == (1, 2, 5, 6)


def test_complement():
    assert complement((2, 4), 5) == (1, 3, 5)
    assert complement((), 2) == (1, 2)


def test_parse_and_format():
    assert parse_subset("2,3,7,8") == (2, 3, 7, 8)
    assert parse_subset(" 2, 8 ") == (2, 8)
    assert parse_subset("") == ()
    assert format_subset((2, 3)) == "2,3"
    assert compact(()) == "∅"
    assert compact((1, 2, 3)) == "123"
    assert compact((1, 12)) == "{1,12}"
    for bad in ("0", "1,1", "8,2", "a", "-2"):
        with pytest.raises(ValueError):
            parse_subset(bad)


def test_blank_is_singleton():
    import copy
    import pickle

    assert copy.deepcopy(J) is J
    assert pickle.loads(pickle.dumps(J)) is J
    assert repr(J) == "j"


@given(subset_strategy)
def test_blank_count_is_size_minus_rank(F):
    T = tableau(F)
    assert T.blanks() == len(F) - rank(F)
    assert len(T.fill()) == rank(F) == len(T.fill_star())


@given(subset_strategy)
def test_successor_predecessor_inverse(F):
    assert predecessor(successor(F)) == F
    G = predecessor(F)
    if G is not None:
        assert successor(G) == F


@given(subset_strategy, st.integers(0, 6))
def test_jump_preserves_rank(F, m):
    assert rank(jump(F, m)) == rank(F)
    assert len(jump(F, m)) == len(F) + m


@given(subset_strategy)
def test_chain_min_is_full_rank(F):
    G = chain_min(F)
    assert is_full_rank(G)
    assert len(G) == rank(F)
    assert set(G) <= set(F)


@given(subset_strategy)
def test_rank_oracles_agree_random(F):
    v = (F[-1] if F else 0) + 3
    assert rank(F) == rank_via_walk(F, v)


def test_rank_is_at_most_half_the_universe():
    for v in range(1, 10):
        assert max(rank(F) for F in all_subsets(v)) == v // 2
        assert all(rank(F) <= min(len(F), v - len(F)) for F in itertools.islice(all_subsets(v), 300))


def test_listed_operation_values():
    assert rank((1, 2, 3, 4, 5)) == 0
    assert rank((2, 4, 6)) == 3 and is_full_rank((2, 4, 6))
    assert rank_via_walk((), 5) == 0
    assert rank_via_walk((1,), 1) == 0
    assert successor((2, 3, 4, 7, 8)) == (2, 3, 4, 7, 8, 9)
    assert predecessor((2, 3, 4, 7, 8)) == (2, 3, 7, 8)
    assert predecessor((2, 4, 6)) is None
    assert predecessor((2, 3, 7, 8)) == (2, 7, 8)
    assert jump((2,), 2) == (2, 3, 4)
    assert jump((2, 3, 4, 5, 7, 8), -2) == (2, 3, 4, 7)
    assert delete_rightmost_j((2, 3, 4, 5, 7, 8), 2) == (2, 3, 4, 7)
    assert delete_rightmost_j((2, 4, 6), 1) is None
    assert delete_rightmost_j((2, 4, 6), 0) == (2, 4, 6)
    assert chain_min((1, 2, 3, 4)) == ()
    assert chain_min((2, 4, 6)) == (2, 4, 6)
    assert chain_min((2, 3, 7, 8)) == (2, 7, 8)
    assert chain_max((2,), 6) == (2, 3, 4, 5, 6)
    assert chain_max((2, 4, 6), 6) == (2, 4, 6)
    assert chain_max((2, 3, 7, 8), 8) == (2, 3, 4, 7, 8)


def test_universe_bounds():
    with pytest.raises(ValueError):
        chain_max((7,), 6)
    with pytest.raises(ValueError):
        underline_map((7,), 6)
    with pytest.raises(ValueError):
        delete_rightmost_j((1,), -1)
