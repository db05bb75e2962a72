"""Computational checks of the structural identities, up to a universe size.

``run_checks(v_max)`` returns one ``CheckResult`` per identity; the command
line ``verify`` subcommand prints them as a table.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, List, Optional

from .chains import census_formula, chain_of, check_decomposition, decompose
from .matrices import (
    ExactMatrix,
    build_D_bar,
    build_D_under,
    build_M,
    build_R,
    build_W,
    build_W_bar,
    build_W_under,
    complement_labels,
    h_vector,
    select_A,
    stack,
)
from .snf import (
    determinant,
    invariant_factors,
    is_unimodular,
    p_rank,
    rational_rank,
    wilson_diagonal,
)
from .solver import (
    divisibility_check,
    lift_under_solution,
    signed_design,
    solve_integral,
    under_witness,
    verify_solution,
)
from .subsets import (
    delete_rightmost_j,
    jump,
    predecessor,
    rank,
    rank_via_walk,
    successor,
)


class CheckFailed(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    detail: str = ""


def _all_subsets(v):
    for k in range(v + 1):
        yield from combinations(range(1, v + 1), k)


def _design_params(v):
    for t in range(v // 2 + 1):
        for k in range(t, v - t + 1):
            yield t, k


def _expect(cond, message):
    if not cond:
        raise CheckFailed(message)


def check_rank_oracle(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for F in _all_subsets(v):
            _expect(rank(F) == rank_via_walk(F, v), f"rank mismatch for {F}")
            full = all(2 * sum(1 for a in F if a <= i) <= i for i in range(v + 1))
            _expect(full == (rank(F) == len(F)), f"full-rank criteria disagree for {F}")
            n += 1
    return n


def check_round_trips(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for F in _all_subsets(v):
            _expect(predecessor(successor(F)) == F, f"(F+)- != F for {F}")
            G = predecessor(F)
            if G is not None:
                _expect(successor(G) == F, f"(F-)+ != F for {F}")
                _expect(rank(G) == rank(F), f"predecessor changes rank of {F}")
            for m in range(len(F) - rank(F) + 2):
                _expect(delete_rightmost_j(F, m) == jump(F, -m),
                        f"jump and deletion disagree for {F}, m={m}")
            n += 1
    return n


def check_chains(v_max):
    n = 0
    previous = None
    for v in range(1, v_max + 1):
        dec = decompose(v)
        check_decomposition([c.members for c in dec], v)
        counts = {}
        for c in dec:
            counts[c.rank] = counts.get(c.rank, 0) + 1
            _expect(all(rank(F) == c.rank for F in c.members), f"mixed ranks in {c}")
        _expect(counts == census_formula(v), f"census mismatch at v={v}")
        _expect(sum(cnt * (v - 2 * r + 1) for r, cnt in counts.items()) == 2 ** v,
                f"census does not cover 2^{v}")
        if previous is not None:
            starts = {}
            for c in dec:
                starts.setdefault(c.members[:len(c.members) - 1], []).append(c)
            for c in previous:
                _expect(len(starts.get(c.members, [])) == 1,
                        f"chain {c} does not extend uniquely to v={v}")
        previous = dec
        n += len(dec)
    for v in range(1, min(v_max, 10) + 1):
        for c in decompose(v):
            for F in c.members:
                _expect(chain_of(F, v) == c, f"chain_of disagrees for {F}")
    return n


def check_level_products(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for k in range(v + 1):
            for t in range(k + 1):
                W = build_W(t, k, v)
                for i in range(t + 1):
                    lhs = build_R(i, t, v) @ W
                    _expect(lhs == build_R(i, k, v).scale(comb(k - i, t - i)),
                            f"R_it W_tk identity fails at i={i}, t={t}, k={k}, v={v}")
                    n += 1
    return n


def check_bar_products(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for k in range(v + 1):
            for t in range(k + 1):
                lhs = build_W_bar(t, t, v) @ build_W(t, k, v)
                rhs = build_D_bar(t, k, v) @ build_W_bar(t, k, v)
                _expect(lhs == rhs, f"W_bar(t,t) W_tk identity fails at t={t}, k={k}, v={v}")
                n += 1
    return n


def check_under_products(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            lhs = build_W(t, k, v) @ build_W_under(k, k, v)
            rhs = build_W_under(t, k, v) @ build_D_under(t, k, v)
            _expect(lhs == rhs, f"W_tk W_kk_ identity fails at t={t}, k={k}, v={v}")
            n += 1
    return n


def check_transpose(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t in range(v + 1):
            # relabelling by complements turns rows of W_tt_ into columns of W_bar
            lower = complement_labels(build_W_under(t, t, v).T, v)
            other = build_W_bar(min(t, v - t), v - t, v)
            _expect(lower.sorted_by_labels() == other.sorted_by_labels(),
                    f"transpose identity fails at t={t}, v={v}")
            n += 1
    return n


def check_snf_bar(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            d = invariant_factors(build_W_bar(t, k, v))
            _expect(d == (1,) * comb(v, t), f"SNF of W_bar({t},{k},{v}) is {d}")
            n += 1
    return n


def check_snf_under(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            d = invariant_factors(build_W_under(t, k, v))
            _expect(d == (1,) * comb(v, t), f"SNF of W_under({t},{k},{v}) is {d}")
            n += 1
    return n


def check_p_rank(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            for p in (2, 3, 5, 7):
                _expect(p_rank(build_W_bar(t, k, v), p) == comb(v, t),
                        f"W_bar({t},{k},{v}) loses rank mod {p}")
                n += 1
    return n


def check_wilson(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            lhs = invariant_factors(build_W(t, k, v))
            rhs = invariant_factors(ExactMatrix.diagonal(wilson_diagonal(t, k, v)))
            _expect(lhs == rhs, f"Wilson form mismatch at t={t}, k={k}, v={v}")
            n += 1
    return n


def check_unimodular(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            _expect(is_unimodular(select_A(t, k, v)), f"A({t},{k},{v}) not unimodular")
            n += 1
        for t in range(v // 2 + 1):
            _expect(determinant(build_W_bar(t, t, v)) in (1, -1),
                    f"W_bar({t},{t},{v}) not unimodular")
            n += 1
    return n


def check_row_space(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            W, Wb = build_W(t, k, v), build_W_bar(t, k, v)
            target = comb(v, t)
            _expect(rational_rank(W) == target, f"rank of W({t},{k},{v})")
            _expect(rational_rank(stack(W, Wb)) == target, f"row spaces differ at {t},{k},{v}")
            _expect(rational_rank(build_M(t, k, v)) == target, f"rank of M({t},{k},{v})")
            n += 1
    return n


def check_solver(v_max, lambdas=range(1, 13), seed=0):
    n = 0
    rng = random.Random(seed)
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            for lam in lambdas:
                predicted = all(lam * comb(v - i, t - i) % comb(k - i, t - i) == 0
                                for i in range(t + 1))
                report = signed_design(t, k, v, lam)
                _expect(report.feasible == predicted, f"feasibility at {t},{k},{v},{lam}")
                if report.feasible:
                    _expect(verify_solution(t, k, v, report.witness, [lam] * comb(v, t)),
                            f"bad witness at {t},{k},{v},{lam}")
                n += 1
            x0 = [rng.randint(-3, 3) for _ in range(comb(v, k))]
            b = build_W(t, k, v).apply(x0)
            report = solve_integral(t, k, v, b)
            _expect(report.feasible and verify_solution(t, k, v, report.witness, b),
                    f"round trip fails at {t},{k},{v}")
            n += 1
    return n


def check_h_vector(v_max, trials=5, seed=0):
    n = 0
    rng = random.Random(seed)
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            W, Wb, h = build_W(t, k, v), build_W_bar(t, k, v), h_vector(t, k, v)
            for _ in range(trials):
                x = [rng.randint(-2, 2) for _ in range(comb(v, k))]
                lam = rng.randint(1, 4)
                # also try a genuine solution so both sides of the iff are exercised
                if rng.random() < 0.5:
                    x = list(signed_design(t, k, v, comb(v - t, k - t)).witness)
                    lam = comb(v - t, k - t)
                lhs = W.apply(x) == [lam] * W.nrows
                rhs = Wb.apply(x) == [lam * q for q in h]
                _expect(lhs == rhs, f"h-vector equivalence fails at {t},{k},{v}")
                n += 1
    return n


def check_under_lift(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            for lam in (1, 2, 3):
                x = under_witness(t, k, v, lam)
                _expect(build_W_under(t, k, v).apply(list(x)) == [lam] * comb(v, t),
                        f"W_under witness wrong at {t},{k},{v}")
                y = lift_under_solution(t, k, v, x)
                _expect(build_W(t, k, v).apply(list(y)) == [Fraction(lam)] * comb(v, t),
                        f"lifted vector is not a solution at {t},{k},{v}")
                n += 1
    return n


def check_divisibility_vs_reduction(v_max):
    n = 0
    for v in range(1, v_max + 1):
        for t, k in _design_params(v):
            for lam in range(1, 7):
                rep = divisibility_check(t, k, v, [lam] * comb(v, t))
                integral = all(q.denominator == 1 for q in rep.b_prime)
                _expect(integral == rep.feasible, f"b' integrality mismatch at {t},{k},{v}")
                _expect(list(rep.b_prime) == [lam * q for q in h_vector(t, k, v)],
                        f"b' != lambda h at {t},{k},{v}")
                n += 1
    return n


CHECKS: List[tuple] = [
    ("rank: tableau = walk", check_rank_oracle),
    ("successor/predecessor round trips", check_round_trips),
    ("chain partition, census, extendability", check_chains),
    ("R_it W_tk = C(k-i,t-i) R_ik", check_level_products),
    ("W_bar(t,t) W_tk = D_bar W_bar", check_bar_products),
    ("W_tk W_kk_ = W_tk_ D_under", check_under_products),
    ("W_tt_ is a transposed W_bar", check_transpose),
    ("SNF of W_bar is (I|O)", check_snf_bar),
    ("SNF of W_under is (I|O)", check_snf_under),
    ("full p-rank of W_bar", check_p_rank),
    ("Wilson diagonal form", check_wilson),
    ("unimodular A and W_bar(t,t)", check_unimodular),
    ("rational row spaces", check_row_space),
    ("signed designs and round trips", check_solver),
    ("h-vector equivalence", check_h_vector),
    ("b' integrality = divisibility", check_divisibility_vs_reduction),
    ("W_under solutions lift to W_tk", check_under_lift),
]


def run_checks(v_max: int, only: Optional[Callable[[str], bool]] = None) -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        if only is not None and not only(name):
            continue
        start = time.perf_counter()
        try:
            cases = fn(v_max)
            results.append(CheckResult(name, True, cases, time.perf_counter() - start))
        except CheckFailed as exc:
            results.append(CheckResult(name, False, 0, time.perf_counter() - start, str(exc)))
    return results


def format_results(results: List[CheckResult]) -> str:
    width = max(len(r.name) for r in results) if results else 10
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name:<{width}}  {r.cases:>7} cases  {r.seconds:7.2f}s"
        if r.detail:
            line += f"  {r.detail}"
        lines.append(line)
    return "\n".join(lines) + "\n"
