"""Kernel dispatch: compiled int64 core when importable, pure Python otherwise.

Set ``RANKCHAINS_PURE_PYTHON=1`` to force the Python kernels.  Compiled calls
that overflow int64 are rerun on the Python kernels, which use big ints and the
same pivot rules, so results never depend on the backend.
"""

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("RANKCHAINS_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:
        compiled_backend = None

BACKEND = "compiled" if compiled_backend is not None else "python"


def _dispatch(name, *args):
    if compiled_backend is not None:
        try:
            return getattr(compiled_backend, name)(*args)
        except OverflowError:
            pass
    return getattr(python_backend, name)(*args)


def smith(rows, m, n, transforms=True):
    return _dispatch("smith", rows, m, n, transforms)


def rank_det(rows, m, n):
    return _dispatch("rank_det", rows, m, n)


def rank_mod_p(rows, m, n, p):
    return _dispatch("rank_mod_p", rows, m, n, p)


def matmul(a, b, m, inner, n):
    return _dispatch("matmul", a, b, m, inner, n)


def mask_ranks(v):
    return _dispatch("mask_ranks", v)


def rank_chains(v):
    return _dispatch("rank_chains", v)
