"""Inclusion matrices built on rank chains, with fixed canonical index orders.

Every index set is ordered by cardinality, then lexicographically on the
ascending element sequence.  Builders are cached; the returned matrices are
immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence, Tuple

from . import kernels
from .chains import check_decomposition
from .subsets import (
    Subset,
    chain_min,
    is_full_rank,
    jump,
    rank,
    underline_map,
)

Labels = Optional[Tuple[Subset, ...]]


@dataclass(frozen=True)
class ExactMatrix:
    """Dense integer matrix, optionally labelled by subsets."""

    entries: Tuple[Tuple[int, ...], ...]
    nrows: int
    ncols: int
    row_labels: Labels = None
    col_labels: Labels = None

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ValueError("entries do not match the declared shape")
        for labels, size in ((self.row_labels, self.nrows), (self.col_labels, self.ncols)):
            if labels is not None:
                if len(labels) != size:
                    raise ValueError("label count does not match the dimension")
                if len(set(labels)) != size:
                    raise ValueError("labels must be pairwise distinct")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None,
                  row_labels=None, col_labels=None) -> "ExactMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else (len(col_labels) if col_labels else 0)
        return cls(entries, len(entries), ncols,
                   None if row_labels is None else tuple(tuple(L) for L in row_labels),
                   None if col_labels is None else tuple(tuple(L) for L in col_labels))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def diagonal(cls, values: Sequence[int], ncols: Optional[int] = None) -> "ExactMatrix":
        n = len(values)
        ncols = n if ncols is None else ncols
        return cls.from_rows([[values[i] if i == j else 0 for j in range(ncols)]
                              for i in range(n)], ncols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def rows(self):
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = kernels.matmul(self.entries, other.entries, self.nrows, self.ncols, other.ncols)
        return ExactMatrix(tuple(map(tuple, out)), self.nrows, other.ncols,
                           self.row_labels, other.col_labels)

    def scale(self, c: int) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(c * x for x in r) for r in self.entries),
                           self.nrows, self.ncols, self.row_labels, self.col_labels)

    def apply(self, vector: Sequence) -> list:
        """Matrix times a column vector of ints or Fractions."""
        if len(vector) != self.ncols:
            raise ValueError(f"vector of length {len(vector)} for {self.ncols} columns")
        return [sum(x * vector[j] for j, x in enumerate(row) if x) for row in self.entries]

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.entries)) if self.nrows else ((),) * self.ncols,
                           self.ncols, self.nrows, self.col_labels, self.row_labels)

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        cl = None if self.col_labels is None else tuple(self.col_labels[j] for j in indices)
        return ExactMatrix(tuple(tuple(r[j] for j in indices) for r in self.entries),
                           self.nrows, len(indices), self.row_labels, cl)

    def select_rows(self, indices: Sequence[int]) -> "ExactMatrix":
        rl = None if self.row_labels is None else tuple(self.row_labels[i] for i in indices)
        return ExactMatrix(tuple(self.entries[i] for i in indices), len(indices),
                           self.ncols, rl, self.col_labels)

    def sorted_by_labels(self) -> "ExactMatrix":
        """Reorder rows and columns by canonical label order."""
        if self.row_labels is None or self.col_labels is None:
            raise ValueError("matrix is not fully labelled")
        ri = sorted(range(self.nrows), key=lambda i: canonical_key(self.row_labels[i]))
        ci = sorted(range(self.ncols), key=lambda j: canonical_key(self.col_labels[j]))
        return self.select_rows(ri).select_columns(ci)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries)
                   for j, x in enumerate(r) if i != j)


def complement_labels(M: ExactMatrix, v: int) -> ExactMatrix:
    """Same entries, every row and column label replaced by its complement in ``[v]``."""
    def comp(L):
        return tuple(x for x in range(1, v + 1) if x not in L)
    return ExactMatrix(M.entries, M.nrows, M.ncols,
                       tuple(comp(L) for L in M.row_labels),
                       tuple(comp(L) for L in M.col_labels))


def canonical_key(F: Subset):
    return (len(F), F)


def subsets_of_size(v: int, k: int) -> Tuple[Subset, ...]:
    return tuple(combinations(range(1, v + 1), k))


def full_rank_subsets(v: int, i: int) -> Tuple[Subset, ...]:
    return tuple(F for F in subsets_of_size(v, i) if is_full_rank(F))


def inclusion_matrix(row_labels: Sequence[Subset], col_labels: Sequence[Subset]) -> ExactMatrix:
    col_sets = [frozenset(K) for K in col_labels]
    rows = [tuple(1 if S.issubset(K) else 0 for K in col_sets)
            for S in map(frozenset, row_labels)]
    return ExactMatrix(tuple(rows), len(row_labels), len(col_labels),
                       tuple(row_labels), tuple(col_labels))


def stack(*mats: ExactMatrix) -> ExactMatrix:
    ncols = mats[0].ncols
    if any(M.ncols != ncols for M in mats):
        raise ValueError("stacked matrices need equal column counts")
    entries = tuple(r for M in mats for r in M.entries)
    return ExactMatrix(entries, len(entries), ncols, None, mats[0].col_labels)


def _check_tkv(t: int, k: int, v: int) -> None:
    if not (0 <= t <= k <= v) or v < 1:
        raise ValueError(f"need 0 <= t <= k <= v with v >= 1, got t={t}, k={k}, v={v}")


def check_design_range(t: int, k: int, v: int) -> None:
    _check_tkv(t, k, v)
    if k > v - t:
        raise ValueError(f"need t <= k <= v - t, got t={t}, k={k}, v={v}")


def _multiplicity(v: int, i: int) -> int:
    return max(comb(v, i) - (comb(v, i - 1) if i else 0), 0)


def _levels(t: int, v: int) -> range:
    # chain minima of t-sets sit on levels 0..min(t, v - t)
    return range(min(t, v - t) + 1)


@lru_cache(maxsize=None)
def build_W(t: int, k: int, v: int) -> ExactMatrix:
    _check_tkv(t, k, v)
    return inclusion_matrix(subsets_of_size(v, t), subsets_of_size(v, k))


@lru_cache(maxsize=None)
def build_R(i: int, t: int, v: int) -> ExactMatrix:
    _check_tkv(i, t, v)
    return inclusion_matrix(full_rank_subsets(v, i), subsets_of_size(v, t))


@lru_cache(maxsize=None)
def build_W_bar(t: int, k: int, v: int) -> ExactMatrix:
    """Inclusion matrix with each row index ``T`` replaced by its chain minimum."""
    _check_tkv(t, k, v)
    rows = sorted({chain_min(T) for T in subsets_of_size(v, t)}, key=canonical_key)
    assert len(rows) == comb(v, t)
    return inclusion_matrix(rows, subsets_of_size(v, k))


@lru_cache(maxsize=None)
def build_D_bar(t: int, k: int, v: int) -> ExactMatrix:
    _check_tkv(t, k, v)
    diag = []
    for i in _levels(t, v):
        diag += [comb(k - i, t - i)] * _multiplicity(v, i)
    return ExactMatrix.diagonal(diag)


def k_star(k: int, v: int) -> int:
    return max(k, v - k)


@lru_cache(maxsize=None)
def build_W_under(t: int, k: int, v: int) -> ExactMatrix:
    """Inclusion matrix with each column index ``K`` replaced by the top of its
    complement chain."""
    _check_tkv(t, k, v)
    cols = sorted((underline_map(K, v) for K in subsets_of_size(v, k)), key=canonical_key)
    return inclusion_matrix(subsets_of_size(v, t), cols)


@lru_cache(maxsize=None)
def build_Q(t: int, j: int, v: int, k: int) -> ExactMatrix:
    _check_tkv(t, k, v)
    if not k_star(k, v) <= j <= v:
        raise ValueError(f"block size j={j} outside [{k_star(k, v)}, {v}]")
    W = build_W_under(t, k, v)
    return W.select_columns([c for c, K in enumerate(W.col_labels) if len(K) == j])


@lru_cache(maxsize=None)
def build_D_under(t: int, k: int, v: int) -> ExactMatrix:
    _check_tkv(t, k, v)
    diag = []
    for j in range(k_star(k, v), v + 1):
        mult = comb(v, j) - comb(v, j + 1)
        diag += [comb(j - t, k - t)] * mult
    return ExactMatrix.diagonal(diag)


@lru_cache(maxsize=None)
def select_A(t: int, k: int, v: int) -> ExactMatrix:
    """Square submatrix of ``build_W_bar`` on the columns of rank at most ``t``."""
    check_design_range(t, k, v)
    W = build_W_bar(t, k, v)
    return W.select_columns([c for c, K in enumerate(W.col_labels) if rank(K) <= t])


@lru_cache(maxsize=None)
def h_vector(t: int, k: int, v: int) -> Tuple[Fraction, ...]:
    _check_tkv(t, k, v)
    out = []
    for i in _levels(t, v):
        out += [Fraction(comb(v - i, t - i), comb(k - i, t - i))] * _multiplicity(v, i)
    return tuple(out)


def matrix_from_decomposition(chains, t: int, k: int, v: int) -> ExactMatrix:
    """Replace each t-set row index by the first member of its chain in an
    arbitrary symmetric skipless chain partition of ``2^[v]``."""
    check_design_range(t, k, v)
    chains = [tuple(tuple(F) for F in c) for c in chains]
    check_decomposition(chains, v)
    first = {F: c[0] for c in chains for F in c}
    rows = sorted({first[T] for T in subsets_of_size(v, t)}, key=canonical_key)
    return inclusion_matrix(rows, subsets_of_size(v, k))


def build_W_mixed(t: int, k: int, v: int, m: int) -> ExactMatrix:
    """Rows ``T`` of rank at most ``t - m`` become ``T`` moved ``m`` steps down
    its chain; the rest become their chain minimum.  Repeated labels collapse."""
    check_design_range(t, k, v)
    if not 0 <= m <= t:
        raise ValueError(f"need 0 <= m <= t, got m={m}")
    labels = set()
    for T in subsets_of_size(v, t):
        if rank(T) <= t - m:
            labels.add(jump(T, -m))
        else:
            labels.add(chain_min(T))
    return inclusion_matrix(sorted(labels, key=canonical_key), subsets_of_size(v, k))


def build_M(t: int, k: int, v: int) -> ExactMatrix:
    """``W_0k`` through ``W_tk`` stacked."""
    return stack(*(build_W(i, k, v) for i in range(t + 1)))


#: Builders reachable by name from the command line.
BUILDERS = {
    "wtk": lambda t, k, v: build_W(t, k, v),
    "wbar": lambda t, k, v: build_W_bar(t, k, v),
    "wunder": lambda t, k, v: build_W_under(t, k, v),
    "a": lambda t, k, v: select_A(t, k, v),
    "dbar": lambda t, k, v: build_D_bar(t, k, v),
    "dunder": lambda t, k, v: build_D_under(t, k, v),
}
