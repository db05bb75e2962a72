"""Rank, tableau and chain-stepping operators on finite sets of positive integers.

A subset is represented as a tuple of strictly increasing positive ints; the
empty tuple is the empty set.  Nothing here depends on a universe size except
where an argument ``v`` is taken explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

Subset = Tuple[int, ...]


class _Blank:
    """The marker placed under a top-row element that cannot be filled."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "j"

    __str__ = __repr__

    def __reduce__(self):
        return (_Blank, ())


J = _Blank()

Entry = Union[int, _Blank]


def subset(elements: Iterable[int] = ()) -> Subset:
    """Normalize an iterable of positive ints into a subset tuple."""
    out = tuple(sorted(set(int(x) for x in elements)))
    if out and out[0] < 1:
        raise ValueError(f"subset elements must be positive, got {out[0]}")
    return out


def check_subset(F: Subset) -> Subset:
    F = tuple(F)
    for a, b in zip(F, F[1:]):
        if a >= b:
            raise ValueError(f"subset must be strictly increasing: {F}")
    if F and F[0] < 1:
        raise ValueError(f"subset elements must be positive: {F}")
    return F


def parse_subset(text: str) -> Subset:
    """Parse the comma-separated encoding (``""`` is the empty set)."""
    text = text.strip()
    if not text:
        return ()
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed subset encoding: {text!r}") from None
    return check_subset(values)


def format_subset(F: Subset) -> str:
    return ",".join(str(a) for a in F)


def compact(F: Subset) -> str:
    """Digit-string notation, e.g. ``(1, 3, 4)`` -> ``"134"``; empty set -> ``"∅"``."""
    if not F:
        return "∅"
    if max(F) < 10:
        return "".join(str(a) for a in F)
    return "{" + format_subset(F) + "}"


@dataclass(frozen=True)
class Tableau:
    top: Subset
    bottom: Tuple[Entry, ...]

    def blanks(self) -> int:
        return sum(1 for b in self.bottom if b is J)

    def fill(self) -> frozenset:
        return frozenset(b for b in self.bottom if b is not J)

    def fill_star(self) -> frozenset:
        return frozenset(a for a, b in zip(self.top, self.bottom) if b is not J)

    def __str__(self):
        return (" ".join(str(a) for a in self.top) + "\n"
                + " ".join(str(b) for b in self.bottom))


def tableau(F: Subset) -> Tableau:
    """Build the two-row tableau of ``F``.

    Below each element ``a`` goes the largest integer smaller than ``a`` that
    is neither in ``F`` nor already used in the second row, or ``J``.  The
    unused non-members below ``a`` form a stack, so one left-to-right sweep
    over ``1..max(F)`` suffices.
    """
    F = check_subset(F)
    members = set(F)
    free = []
    bottom = []
    for x in range(1, F[-1] + 1 if F else 1):
        if x in members:
            bottom.append(free.pop() if free else J)
        else:
            free.append(x)
    return Tableau(F, tuple(bottom))


def rank(F: Subset) -> int:
    return len(F) - tableau(F).blanks()


def is_full_rank(F: Subset) -> bool:
    return tableau(F).blanks() == 0


def rank_via_walk(F: Subset, v: int) -> int:
    """Rank from the lattice walk: ``|F|`` minus the largest lead of up-steps
    over right-steps along the prefixes ``[0], [1], ..., [v]``."""
    F = check_subset(F)
    if v < 1 or (F and F[-1] > v):
        raise ValueError(f"universe size {v} too small for {F}")
    members = set(F)
    height = best = 0
    for i in range(1, v + 1):
        height += 1 if i in members else -1
        best = max(best, height)
    return len(F) - best


def successor(F: Subset) -> Subset:
    T = tableau(F)
    seen = set(T.top)
    seen.update(b for b in T.bottom if b is not J)
    a = 1
    while a in seen:
        a += 1
    return subset(F + (a,))


def predecessor(F: Subset) -> Optional[Subset]:
    """Drop the element above the rightmost blank; ``None`` when ``F`` is full-rank."""
    T = tableau(F)
    for i in range(len(F) - 1, -1, -1):
        if T.bottom[i] is J:
            return F[:i] + F[i + 1:]
    return None


def jump(F: Subset, m: int) -> Optional[Subset]:
    """Move ``m`` steps along the chain of ``F`` (up for ``m > 0``).

    Returns ``None`` if the chain bottom is reached before ``-m`` steps down.
    """
    G: Optional[Subset] = check_subset(F)
    if m >= 0:
        for _ in range(m):
            G = successor(G)
        return G
    for _ in range(-m):
        G = predecessor(G)
        if G is None:
            return None
    return G


def delete_rightmost_j(F: Subset, m: int) -> Optional[Subset]:
    if m < 0:
        raise ValueError("m must be nonnegative")
    T = tableau(F)
    blank_pos = [i for i, b in enumerate(T.bottom) if b is J]
    if len(blank_pos) < m:
        return None
    drop = set(blank_pos[len(blank_pos) - m:])
    return tuple(a for i, a in enumerate(F) if i not in drop)


def chain_min(F: Subset) -> Subset:
    G = check_subset(F)
    while True:
        H = predecessor(G)
        if H is None:
            return G
        G = H


def chain_max(F: Subset, v: int) -> Subset:
    F = check_subset(F)
    if F and F[-1] > v:
        raise ValueError(f"{format_subset(F)} is not a subset of [{v}]")
    return jump(F, v - rank(F) - len(F))


def complement(F: Subset, v: int) -> Subset:
    members = set(F)
    return tuple(x for x in range(1, v + 1) if x not in members)


def underline_map(K: Subset, v: int) -> Subset:
    """Largest member of the complement chain through ``K``."""
    K = check_subset(K)
    if K and K[-1] > v:
        raise ValueError(f"{format_subset(K)} is not a subset of [{v}]")
    return complement(chain_min(complement(K, v)), v)
