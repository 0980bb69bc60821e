"""Row-subset witnesses for integer matrices with diagonal >= -1, off-diagonal >= 0, row sums 1.

Every such matrix admits a nonempty set of rows whose sum is a nonzero vector
of zeros and ones.  find_witness constructs one by a reduction that removes
one or two rows/columns per step; verify_witness and all_witnesses recheck
results by direct arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import BudgetExceeded, InternalVerificationError, MatrixClassError

ALL_WITNESSES_MAX_N = 25

TraceFn = Callable[[np.ndarray, np.ndarray], None]


@dataclass(frozen=True, eq=False)
class ConstraintMatrix:
    """Dense n x n integer matrix in the class: diag >= -1, off-diag >= 0, row sums 1."""

    entries: np.ndarray

    def __post_init__(self):
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise MatrixClassError("matrix is not square", 0, 0)
        if self.entries.shape[0] == 0:
            raise MatrixClassError("matrix is empty", 0, 0)
        self.entries.setflags(write=False)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConstraintMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()


@dataclass(frozen=True)
class WitnessSubset:
    """Nonempty row-index set whose row sum is the stored nonzero zero-one vector."""

    rows: tuple[int, ...]
    vector: tuple[int, ...]


def validate_membership(matrix) -> ConstraintMatrix:
    """Typed acceptance iff all three class invariants hold.

    Rejections report the first violation in row order: within each row the
    diagonal bound, then the off-diagonal bounds left to right, then the row sum.
    """
    try:
        a = np.array(matrix, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MatrixClassError(f"matrix is not a rectangular integer array ({exc})", 0, 0) from exc
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise MatrixClassError("matrix is not square", 0, 0)
    n = a.shape[0]
    diag = np.diagonal(a)
    off_ok = (a >= 0) | np.eye(n, dtype=bool)
    if (diag >= -1).all() and off_ok.all() and (a.sum(axis=1) == 1).all():
        return ConstraintMatrix(a)
    for i in range(n):
        if a[i, i] < -1:
            raise MatrixClassError(f"diagonal entry {a[i, i]} is below -1", i, i)
        for j in range(n):
            if j != i and a[i, j] < 0:
                raise MatrixClassError(f"off-diagonal entry {a[i, j]} is negative", i, j)
        s = int(a[i].sum())
        if s != 1:
            raise MatrixClassError(f"row sum {s} is not 1", i, 0)
    raise AssertionError("unreachable")


def _subset_masks(n: int):
    """Nonempty subsets of range(n) by increasing indicator bitmask, bit k <-> index k."""
    for mask in range(1, 1 << n):
        yield mask, [i for i in range(n) if mask >> i & 1]


def _is_witness_vector(s: np.ndarray) -> bool:
    return bool(((s == 0) | (s == 1)).all() and (s == 1).any())


def _base_case(cur: np.ndarray, idx: np.ndarray) -> set[int]:
    for _, rows in _subset_masks(cur.shape[0]):
        if _is_witness_vector(cur[rows].sum(axis=0)):
            return {int(idx[i]) for i in rows}
    raise InternalVerificationError("no witness in a base-case matrix of the class")


def find_witness(M: ConstraintMatrix, *, trace: Optional[TraceFn] = None) -> WitnessSubset:
    """Construct a witness subset for a matrix of the class.

    Reduction per step, all index choices smallest-first for determinism:
      (a) order <= 2: exhaust nonempty row subsets;
      (b) some diagonal entry >= 0: that row alone is a unit vector;
      (c) every column has off-diagonal sum 2: all rows sum to the all-one vector;
      (d) otherwise some column c has off-diagonal sum 0 or 1:
          sum 0: drop row/column c and continue on the smaller matrix;
          sum 1: with p the row carrying the 1 in column c and q the column
          carrying row p's second 1, merge column p into column q, drop
          rows/columns c and p, and continue; on the way back out row p is
          added to the subset exactly when column q's partial sum went negative.

    The returned vector is recomputed against the original matrix.  trace, when
    given, receives each reduced matrix together with its original row indices.
    """
    top = M.entries
    cur = top
    idx = np.arange(M.n)
    # (original c, p, q, column p by original row, column q by original row)
    lifts: list[tuple[int, int, int, dict[int, int], dict[int, int]]] = []

    while True:
        m = cur.shape[0]
        if m <= 2:
            chosen = _base_case(cur, idx)
            break
        diag = np.diagonal(cur)
        nonneg = np.flatnonzero(diag >= 0)
        if nonneg.size:
            chosen = {int(idx[nonneg[0]])}
            break
        col_off = cur.sum(axis=0, dtype=np.int64) - diag
        light = np.flatnonzero(col_off <= 1)
        if light.size == 0:
            if not (col_off == 2).all():
                raise InternalVerificationError("off-diagonal column sums do not average to 2")
            chosen = {int(i) for i in idx}
            break
        c = int(light[0])
        if col_off[c] == 0:
            keep = np.delete(np.arange(m), c)
            cur = cur[np.ix_(keep, keep)]
            idx = idx[keep]
            if trace is not None:
                trace(cur, idx)
            continue
        carriers = np.flatnonzero(cur[:, c] == 1)
        if carriers.size != 1:
            raise InternalVerificationError("column with off-diagonal sum 1 lacks a unique carrier row")
        p = int(carriers[0])
        second = [int(j) for j in np.flatnonzero(cur[p] == 1) if j != c]
        if len(second) != 1 or second[0] == p:
            raise InternalVerificationError("carrier row lacks a unique second unit column")
        q = second[0]
        col_p = {int(idx[i]): int(cur[i, p]) for i in range(m)}
        col_q = {int(idx[i]): int(cur[i, q]) for i in range(m)}
        lifts.append((int(idx[c]), int(idx[p]), int(idx[q]), col_p, col_q))
        merged = cur.copy()
        merged[:, q] += merged[:, p]
        keep = np.array([i for i in range(m) if i != c and i != p])
        cur = merged[np.ix_(keep, keep)]
        idx = idx[keep]
        if trace is not None:
            trace(cur, idx)

    for c_orig, p_orig, q_orig, col_p, col_q in reversed(lifts):
        if q_orig in chosen:
            sigma_q = sum(col_q[i] for i in chosen)
            if sigma_q < 0:
                sigma_p = sum(col_p[i] for i in chosen)
                if sigma_q != -1 or sigma_p not in (1, 2):
                    raise InternalVerificationError(
                        f"merge unwind saw column sums ({sigma_p}, {sigma_q})"
                    )
                chosen.add(p_orig)

    rows = tuple(sorted(chosen))
    v = top[list(rows)].sum(axis=0)
    if not _is_witness_vector(v):
        raise InternalVerificationError("constructed row set does not sum to a nonzero 0-1 vector")
    return WitnessSubset(rows, tuple(int(x) for x in v))


def verify_witness(M: ConstraintMatrix, w: WitnessSubset) -> bool:
    """Recompute the row sum directly; shares no code path with find_witness."""
    n = M.n
    rows = w.rows
    if not rows or len(set(rows)) != len(rows):
        return False
    if any(r < 0 or r >= n for r in rows):
        return False
    s = M.entries[list(rows)].sum(axis=0)
    return _is_witness_vector(s) and tuple(int(x) for x in s) == w.vector


def all_witnesses(M: ConstraintMatrix) -> list[WitnessSubset]:
    """Every valid witness subset, ordered by increasing indicator bitmask (oracle for tests)."""
    n = M.n
    if n > ALL_WITNESSES_MAX_N:
        raise BudgetExceeded(f"all_witnesses supports n <= {ALL_WITNESSES_MAX_N}, got {n}")
    rows = M.entries
    # Incremental subset sums: stepping mask -> mask+1 clears the trailing ones
    # and sets bit k, so the sum changes by rows[k] - (rows[0] + ... + rows[k-1]).
    prefix = np.zeros((n + 1, n), dtype=np.int64)
    for k in range(n):
        prefix[k + 1] = prefix[k] + rows[k]
    delta = [rows[k] - prefix[k] for k in range(n)]
    out = []
    running = np.zeros(n, dtype=np.int64)
    for mask in range(1, 1 << n):
        k = (mask & -mask).bit_length() - 1
        running = running + delta[k]
        if _is_witness_vector(running):
            members = tuple(i for i in range(n) if mask >> i & 1)
            out.append(WitnessSubset(members, tuple(int(x) for x in running)))
    return out
