"""Exact Smith normal form, determinants and ranks of integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, gcd
from typing import List, Tuple

from . import kernels
from .matrices import ExactMatrix, check_design_range

#: Largest ``min(rows, cols)`` accepted by the minors oracle.
MINORS_CAP = 6


@dataclass(frozen=True)
class SnfDecomposition:
    """``u @ M @ v`` is ``diag(d)`` padded with zeros to the shape of ``M``."""

    u: ExactMatrix
    v: ExactMatrix
    d: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.d)

    def diagonal_matrix(self, nrows: int, ncols: int) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[self.d[i] if i == j and i < len(self.d) else 0 for j in range(ncols)]
             for i in range(nrows)], ncols)


def smith_normal_form(M: ExactMatrix) -> SnfDecomposition:
    d, U, V = kernels.smith(M.entries, M.nrows, M.ncols, True)
    return SnfDecomposition(
        ExactMatrix.from_rows(U, M.nrows),
        ExactMatrix.from_rows(V, M.ncols),
        tuple(d),
    )


def invariant_factors(M: ExactMatrix) -> Tuple[int, ...]:
    """Invariant factors only; skips accumulating the transforms."""
    d, _, _ = kernels.smith(M.entries, M.nrows, M.ncols, False)
    return tuple(d)


def _leibniz_det(rows) -> int:
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for a, b in combinations(perm, 2) if a > b)
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def invariant_factors_minors(M: ExactMatrix) -> Tuple[int, ...]:
    """Invariant factors as ratios of successive gcds of all minors.

    Exponential cost; intended as an independent check on small matrices.
    """
    if min(M.nrows, M.ncols) > MINORS_CAP:
        raise ValueError(f"minors oracle is limited to min(rows, cols) <= {MINORS_CAP}")
    factors: List[int] = []
    previous = 1
    for order in range(1, min(M.nrows, M.ncols) + 1):
        f = 0
        for rs in combinations(range(M.nrows), order):
            for cs in combinations(range(M.ncols), order):
                f = gcd(f, _leibniz_det([[M.entries[r][c] for c in cs] for r in rs]))
        if f == 0:
            break
        factors.append(f // previous)
        previous = f
    return tuple(factors)


def determinant(M: ExactMatrix) -> int:
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    if M.nrows == 0:
        return 1
    return kernels.rank_det(M.entries, M.nrows, M.ncols)[1]


def is_unimodular(M: ExactMatrix) -> bool:
    return M.nrows == M.ncols and determinant(M) in (1, -1)


def rational_rank(M: ExactMatrix) -> int:
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return kernels.rank_det(M.entries, M.nrows, M.ncols)[0]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def p_rank(M: ExactMatrix, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return kernels.rank_mod_p(M.entries, M.nrows, M.ncols, p)


def wilson_diagonal(t: int, k: int, v: int) -> Tuple[int, ...]:
    check_design_range(t, k, v)
    out: List[int] = []
    for i in range(t + 1):
        out += [comb(k - i, t - i)] * (comb(v, i) - (comb(v, i - 1) if i else 0))
    return tuple(out)
