"""Integral solutions of ``W_tk x = b`` and signed t-designs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from .matrices import (
    ExactMatrix,
    build_D_bar,
    build_D_under,
    build_R,
    build_W,
    build_W_bar,
    build_W_under,
    check_design_range,
    k_star,
    select_A,
    subsets_of_size,
)
from .subsets import Subset


@dataclass(frozen=True)
class Violation:
    level: int
    divisor: int
    value: int

    def __str__(self):
        return f"violated at i={self.level}: {self.divisor} ∤ {self.value}"


@dataclass(frozen=True)
class SolveReport:
    feasible: bool
    b_prime: Tuple[Fraction, ...]
    witness: Optional[Tuple[int, ...]] = None
    violated_levels: Optional[Tuple[int, ...]] = None
    violations: Tuple[Violation, ...] = ()
    labels: Optional[Tuple[Subset, ...]] = None


def _check_rhs(t: int, k: int, v: int, b: Sequence[int]) -> List[int]:
    check_design_range(t, k, v)
    b = [int(x) for x in b]
    if len(b) != comb(v, t):
        raise ValueError(f"right-hand side needs {comb(v, t)} entries, got {len(b)}")
    return b


def reduce_rhs(t: int, k: int, v: int, b: Sequence[int]) -> Tuple[Fraction, ...]:
    """``D_bar^-1 W_bar(t, t) b`` as exact rationals."""
    b = _check_rhs(t, k, v, b)
    Wtt = build_W_bar(t, t, v)
    diag = build_D_bar(t, k, v)
    return tuple(Fraction(y, diag[i, i]) for i, y in enumerate(Wtt.apply(b)))


def divisibility_check(t: int, k: int, v: int, b: Sequence[int]) -> SolveReport:
    """Feasibility from the level-by-level divisibility of ``R_it b``."""
    b = _check_rhs(t, k, v, b)
    levels = []
    violations = []
    for i in range(t + 1):
        divisor = comb(k - i, t - i)
        for value in build_R(i, t, v).apply(b):
            if value % divisor:
                levels.append(i)
                violations.append(Violation(i, divisor, value))
                break
    b_prime = reduce_rhs(t, k, v, b)
    feasible = not levels
    return SolveReport(
        feasible=feasible,
        b_prime=b_prime,
        violated_levels=None if feasible else tuple(levels),
        violations=tuple(violations),
        labels=subsets_of_size(v, k),
    )


def solve_exact(M: ExactMatrix, rhs: Sequence) -> List[Fraction]:
    """Solve a square nonsingular system over the rationals."""
    n = M.nrows
    if M.ncols != n or len(rhs) != n:
        raise ValueError("solve_exact needs a square system")
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(M.entries)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        top = a[col]
        p = top[col]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], top)]
    return [a[i][n] / a[i][i] for i in range(n)]


def solve_integral(t: int, k: int, v: int, b: Sequence[int]) -> SolveReport:
    """Decide integral solvability and, when solvable, return a witness
    supported on the columns of the unimodular submatrix of ``W_bar``."""
    report = divisibility_check(t, k, v, b)
    if not report.feasible:
        return report
    A = select_A(t, k, v)
    y = solve_exact(A, report.b_prime)
    assert all(q.denominator == 1 for q in y), "inverse of a unimodular matrix must be integral"
    labels = subsets_of_size(v, k)
    position = {K: c for c, K in enumerate(labels)}
    x = [0] * len(labels)
    for K, value in zip(A.col_labels, y):
        x[position[K]] = int(value)
    return SolveReport(True, report.b_prime, witness=tuple(x), labels=labels)


def signed_design(t: int, k: int, v: int, lam: int) -> SolveReport:
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    check_design_range(t, k, v)
    return solve_integral(t, k, v, [lam] * comb(v, t))


def verify_solution(t: int, k: int, v: int, x: Sequence[int], b: Sequence[int]) -> bool:
    W = build_W(t, k, v)
    if len(x) != W.ncols or len(b) != W.nrows:
        raise ValueError(f"expected x of length {W.ncols} and b of length {W.nrows}")
    return W.apply(list(x)) == list(b)


def under_witness(t: int, k: int, v: int, lam: int) -> Tuple[Fraction, ...]:
    """A rational ``x`` with ``W_under(t, k) x = lam * 1``.

    Uses the square block of columns of size at least ``max(t, v - t)``, which
    is ``W_under(t, t)`` and unimodular; other entries are zero.
    """
    check_design_range(t, k, v)
    W = build_W_under(t, k, v)
    cols = [c for c, K in enumerate(W.col_labels) if len(K) >= k_star(t, v)]
    y = solve_exact(W.select_columns(cols), [lam] * W.nrows)
    x = [Fraction(0)] * W.ncols
    for c, value in zip(cols, y):
        x[c] = value
    return tuple(x)


def lift_under_solution(t: int, k: int, v: int, x: Sequence) -> Tuple[Fraction, ...]:
    """Map a solution of ``W_under(t, k) x = lam * 1`` to ``W_kk_under D_under^-1 x``."""
    check_design_range(t, k, v)
    diag = build_D_under(t, k, v)
    scaled = [Fraction(value) / diag[i, i] for i, value in enumerate(x)]
    return tuple(build_W_under(k, k, v).apply(scaled))
