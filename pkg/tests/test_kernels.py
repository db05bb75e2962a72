import os
import random
import subprocess
import sys

import pytest

from rankchains import _pykernels as py
from rankchains import kernels

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def random_rows(rng, m, n, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


@needs_compiled
def test_smith_parity():
    rng = random.Random(1)
    for _ in range(500):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        rows = random_rows(rng, m, n)
        assert compiled.smith(rows, m, n, True) == py.smith(rows, m, n, True)
        assert compiled.smith(rows, m, n, False) == py.smith(rows, m, n, False)


@needs_compiled
def test_rank_det_and_mod_p_parity():
    rng = random.Random(2)
    for _ in range(500):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        rows = random_rows(rng, m, n)
        assert compiled.rank_det(rows, m, n) == py.rank_det(rows, m, n)
        for p in (2, 3, 5, 7, 101):
            assert compiled.rank_mod_p(rows, m, n, p) == py.rank_mod_p(rows, m, n, p)


@needs_compiled
def test_matmul_parity():
    rng = random.Random(3)
    for _ in range(200):
        m, l, n = rng.randint(1, 6), rng.randint(1, 6), rng.randint(1, 6)
        a, b = random_rows(rng, m, l), random_rows(rng, l, n)
        assert compiled.matmul(a, b, m, l, n) == py.matmul(a, b, m, l, n)


@needs_compiled
def test_mask_parity():
    for v in range(1, 11):
        assert compiled.mask_ranks(v) == py.mask_ranks(v)
        assert compiled.rank_chains(v) == py.rank_chains(v)


@needs_compiled
def test_overflow_raises_in_compiled_and_dispatch_recovers():
    rows = [[2 ** 40, 3], [5, 2 ** 41]]
    with pytest.raises(OverflowError):
        compiled.matmul(rows, rows, 2, 2, 2)
    assert kernels.matmul(rows, rows, 2, 2, 2) == py.matmul(rows, rows, 2, 2, 2)
    with pytest.raises(OverflowError):
        compiled.smith([[2 ** 70]], 1, 1, True)
    assert kernels.smith([[2 ** 70]], 1, 1, True) == ([2 ** 70], [[1]], [[1]])


def test_python_kernels_do_not_mutate_inputs():
    rows = [[2, 4], [6, 9]]
    py.smith(rows, 2, 2)
    py.rank_det(rows, 2, 2)
    py.rank_mod_p(rows, 2, 2, 5)
    assert rows == [[2, 4], [6, 9]]


def test_mask_rank_matches_subset_rank():
    from rankchains.subsets import rank

    for mask in range(1 << 10):
        F = tuple(i + 1 for i in range(10) if mask >> i & 1)
        assert py.mask_rank(mask) == rank(F)


def test_forced_python_backend():
    env = dict(os.environ, RANKCHAINS_PURE_PYTHON="1")
    code = ("from rankchains import BACKEND, invariant_factors_minors, build_W;"
            "from rankchains.snf import invariant_factors;"
            "W = build_W(1, 2, 4);"
            "print(BACKEND, invariant_factors(W) == invariant_factors_minors(W))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "True"]
