import json
from math import comb

import pytest

from rankchains.chains import (
    MAX_V,
    census_formula,
    chain_census,
    chain_of,
    chain_ranks_agree,
    check_decomposition,
    complement_decompose,
    decompose,
    decomposition_from_dict,
    decomposition_to_dict,
)
from rankchains.subsets import chain_min, complement, predecessor, rank, successor

from conftest import all_subsets


def test_v4_chains():
    got = [tuple(c.members) for c in decompose(4)]
    assert got == [
        ((), (1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)),
        ((2,), (2, 3), (2, 3, 4)),
        ((3,), (1, 3), (1, 3, 4)),
        ((4,), (1, 4), (1, 2, 4)),
        ((2, 4),),
        ((3, 4),),
    ]
    assert chain_census(4) == {0: 1, 1: 3, 2: 2}


def test_chain_through_2_3():
    chain = chain_of((2, 3), 6)
    assert chain.members == ((2,), (2, 3), (2, 3, 4), (2, 3, 4, 5), (2, 3, 4, 5, 6))
    assert str(chain) == "2 → 23 → 234 → 2345 → 23456"
    assert chain.first == (2,) and chain.last == (2, 3, 4, 5, 6)
    assert (2, 3, 4) in chain and len(chain) == 5


def test_census_values():
    assert chain_census(6) == {0: 1, 1: 5, 2: 9, 3: 5}
    assert chain_census(8) == {0: 1, 1: 7, 2: 20, 3: 28, 4: 14}
    assert chain_census(1) == {0: 1}


def test_named_chains():
    assert str(chain_of((1, 3, 4), 6)) == "3 → 13 → 134 → 1345 → 13456"
    assert str(chain_of((), 3)) == "∅ → 1 → 12 → 123"
    assert chain_of((2, 3, 7, 8), 8).members == ((2, 7, 8), (2, 3, 7, 8), (2, 3, 4, 7, 8))
    comp = complement_decompose(6)
    assert comp.chain_containing((1, 2)).members == ((1, 2), (1, 2, 6), (1, 2, 5, 6))
    assert [c.members for c in complement_decompose(1)] == [((), (1,))]


@pytest.mark.parametrize("v", range(1, 13))
def test_census(v):
    assert sum(n * (v - 2 * r + 1) for r, n in census_formula(v).items()) == 2 ** v
    assert chain_census(v) == census_formula(v)
    assert sum(census_formula(v).values()) == comb(v, v // 2)


@pytest.mark.parametrize("v", range(1, 11))
def test_partition_properties(v):
    dec = decompose(v)
    check_decomposition([c.members for c in dec], v)
    assert chain_ranks_agree(dec)
    for c in dec:
        assert len(c.members[0]) == c.rank
        assert len(c.members[-1]) == v - c.rank
        for A, B in zip(c.members, c.members[1:]):
            assert successor(A) == B and predecessor(B) == A


@pytest.mark.parametrize("v", range(1, 10))
def test_chain_of_matches_decomposition(v):
    dec = decompose(v)
    for F in all_subsets(v):
        assert chain_of(F, v) == dec.chain_containing(F)


@pytest.mark.parametrize("v", range(1, 11))
def test_extendable(v):
    # restricting the chains of [v+1] to sets avoiding v+1 gives the chains of [v]
    small = {c.members for c in decompose(v)}
    restricted = set()
    for c in decompose(v + 1):
        kept = tuple(F for F in c.members if v + 1 not in F)
        assert kept == c.members[: len(kept)]
        if kept:
            restricted.add(kept)
    assert restricted == small


@pytest.mark.parametrize("v", range(1, 9))
def test_complement_chains(v):
    dec = complement_decompose(v)
    assert dec.kind == "complement"
    check_decomposition([c.members for c in dec], v)
    for c in dec:
        top = c.members[-1]
        assert complement(chain_min(complement(top, v)), v) == top


def test_check_decomposition_rejects():
    with pytest.raises(ValueError):
        check_decomposition([[(), (1,)]], 2)
    with pytest.raises(ValueError):
        check_decomposition([[(), (1, 2)], [(1,)], [(2,)]], 2)
    with pytest.raises(ValueError):
        check_decomposition([[(), (1,), (1, 2)], [(1,)], [(2,)]], 2)
    with pytest.raises(ValueError):
        check_decomposition([[(1,)], [(2,)]], 2)


def test_bounds():
    with pytest.raises(ValueError):
        decompose(0)
    with pytest.raises(ValueError):
        decompose(MAX_V + 1)
    with pytest.raises(ValueError):
        chain_of((7,), 6)


def test_dict_round_trip():
    dec = decompose(5)
    data = json.loads(dec.to_json())
    assert data == decomposition_to_dict(dec)
    assert decomposition_from_dict(data) == dec
    assert data["chains"][0]["members"][0] == ""


def test_every_member_shares_chain_rank():
    for c in decompose(8):
        assert {rank(F) for F in c.members} == {c.rank}
