"""Decomposition of the subsets of [v] into symmetric skipless rank chains."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Dict, Tuple

from . import kernels
from .subsets import (
    Subset,
    chain_min,
    check_subset,
    compact,
    complement,
    format_subset,
    parse_subset,
    rank,
    successor,
)

#: Largest universe ``decompose`` will materialize (memory is Theta(2^v * v)).
MAX_V = 20


@dataclass(frozen=True)
class Chain:
    members: Tuple[Subset, ...]
    rank: int
    v: int

    @property
    def first(self) -> Subset:
        return self.members[0]

    @property
    def last(self) -> Subset:
        return self.members[-1]

    def __contains__(self, F) -> bool:
        return tuple(F) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return " → ".join(compact(F) for F in self.members)


@dataclass(frozen=True)
class Decomposition:
    v: int
    chains: Tuple[Chain, ...]
    kind: str = "rank"

    def __iter__(self):
        return iter(self.chains)

    def __len__(self) -> int:
        return len(self.chains)

    def chain_containing(self, F: Subset) -> Chain:
        F = tuple(F)
        for chain in self.chains:
            if F in chain.members:
                return chain
        raise KeyError(F)

    def to_json(self) -> str:
        return json.dumps(decomposition_to_dict(self))


def _check_v(v: int, cap: int) -> None:
    if v < 1:
        raise ValueError(f"universe size must be positive, got {v}")
    if v > cap:
        raise ValueError(f"universe size {v} exceeds the cap of {cap}")


def _mask_to_subset(mask: int) -> Subset:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def decompose(v: int, cap: int = MAX_V) -> Decomposition:
    """Rank chains of ``2^[v]`` in canonical order (rank, then chain minimum)."""
    _check_v(v, cap)
    chains = []
    for masks in kernels.rank_chains(v):
        members = tuple(_mask_to_subset(x) for x in masks)
        chains.append(Chain(members, len(members[0]), v))
    chains.sort(key=lambda c: (c.rank, c.first))
    return Decomposition(v, tuple(chains), "rank")


def chain_of(F: Subset, v: int) -> Chain:
    F = check_subset(F)
    if F and F[-1] > v:
        raise ValueError(f"{format_subset(F)} is not a subset of [{v}]")
    G = chain_min(F)
    r = len(G)
    members = [G]
    for _ in range(v - 2 * r):
        G = successor(G)
        members.append(G)
    return Chain(tuple(members), r, v)


def complement_decompose(v: int, cap: int = MAX_V) -> Decomposition:
    """Complement every member of every rank chain; members re-sorted by size."""
    base = decompose(v, cap)
    chains = tuple(
        Chain(tuple(complement(F, v) for F in reversed(c.members)), c.rank, v)
        for c in base.chains
    )
    return Decomposition(v, chains, "complement")


def census_formula(v: int) -> Dict[int, int]:
    return {r: comb(v, r) - (comb(v, r - 1) if r else 0) for r in range(v // 2 + 1)}


def chain_census(v: int, cap: int = MAX_V) -> Dict[int, int]:
    """Chains per rank, counted from the enumeration (compare ``census_formula``)."""
    counts: Dict[int, int] = {}
    for chain in decompose(v, cap):
        counts[chain.rank] = counts.get(chain.rank, 0) + 1
    return counts


def check_decomposition(chains, v: int) -> None:
    """Raise ``ValueError`` unless ``chains`` is a partition of ``2^[v]`` into
    symmetric skipless chains."""
    seen = set()
    for members in chains:
        members = [check_subset(F) for F in members]
        if not members:
            raise ValueError("empty chain")
        lo, hi = len(members[0]), len(members[-1])
        if lo + hi != v:
            raise ValueError(f"chain from level {lo} to {hi} is not symmetric in [{v}]")
        for A, B in zip(members, members[1:]):
            if len(B) != len(A) + 1 or not set(A) <= set(B):
                raise ValueError(f"chain skips or is not nested at {A} -> {B}")
        for F in members:
            if F and F[-1] > v:
                raise ValueError(f"{F} is not a subset of [{v}]")
            if F in seen:
                raise ValueError(f"{F} appears in two chains")
            seen.add(F)
    if len(seen) != 1 << v:
        raise ValueError(f"chains cover {len(seen)} of {1 << v} subsets")


def decomposition_to_dict(dec: Decomposition) -> dict:
    return {
        "v": dec.v,
        "kind": dec.kind,
        "chains": [
            {"rank": c.rank, "members": [format_subset(F) for F in c.members]}
            for c in dec.chains
        ],
    }


def decomposition_from_dict(data: dict) -> Decomposition:
    v = int(data["v"])
    chains = tuple(
        Chain(tuple(parse_subset(s) for s in c["members"]), int(c["rank"]), v)
        for c in data["chains"]
    )
    return Decomposition(v, chains, data.get("kind", "rank"))


def chain_ranks_agree(dec: Decomposition) -> bool:
    return all(rank(F) == c.rank for c in dec for F in c.members)
