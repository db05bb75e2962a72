"""Compare the compiled kernels with the pure-Python ones on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from rankchains import _pykernels as py
from rankchains import kernels
from rankchains.matrices import build_W, build_W_bar, build_W_under


def cases():
    Wb = build_W_bar(5, 5, 10)
    Wu = build_W_under(4, 6, 10)
    W = build_W(3, 4, 9)
    A, B = build_W(3, 4, 9), build_W_under(4, 4, 9)
    yield "smith W_bar(5,5,10) 252x252", "smith", (Wb.entries, Wb.nrows, Wb.ncols, True)
    yield "smith W_under(4,6,10) 210x252", "smith", (Wu.entries, Wu.nrows, Wu.ncols, True)
    yield "smith W(3,4,9), factors only", "smith", (W.entries, W.nrows, W.ncols, False)
    yield "rank_det W_bar(5,5,10)", "rank_det", (Wb.entries, Wb.nrows, Wb.ncols)
    yield "rank_mod_p W_bar(5,5,10), p=2", "rank_mod_p", (Wb.entries, Wb.nrows, Wb.ncols, 2)
    yield "matmul W(3,4,9) W_under(4,4,9)", "matmul", (A.entries, B.entries, A.nrows, A.ncols, B.ncols)
    yield "rank_chains v=16", "rank_chains", (16,)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled kernels are not built; nothing to compare")
        return
    print(f"{'case':38s} {'compiled':>11s} {'python':>11s} {'speedup':>8s}")
    for name, fn, call_args in cases():
        # both backends must agree before timing means anything
        assert getattr(compiled, fn)(*call_args) == getattr(py, fn)(*call_args)
        tc = min(timeit.repeat(lambda: getattr(compiled, fn)(*call_args), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: getattr(py, fn)(*call_args), number=1, repeat=args.repeat))
        print(f"{name:38s} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
