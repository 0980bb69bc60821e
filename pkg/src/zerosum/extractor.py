"""End-to-end pipeline: representations -> constraint matrix -> witness -> zero-sum certificate.

Each row of the built matrix encodes a_i + a_j - a_k = 0, so it is orthogonal
to the element vector; any 0-1 row-sum vector v therefore marks a subset
S = {k : v_k = 1} with element sum zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import groups
from .errors import InternalVerificationError
from .groups import GroupElement
from .sumfull import InputSet, NotSumFull, RepresentationTable, check_sum_full, verify_table
from .witness import ConstraintMatrix, WitnessSubset, find_witness, verify_witness


@dataclass(frozen=True)
class Trail:
    """Everything needed to re-derive the certificate without rerunning extraction."""

    table: RepresentationTable
    matrix: ConstraintMatrix
    witness: WitnessSubset


@dataclass(frozen=True)
class ZeroSumCertificate:
    subset: tuple[int, ...]
    elements: tuple[GroupElement, ...]
    trail: Optional[Trail]  # None only for the zero-element short-circuit


def build_matrix(t: RepresentationTable) -> ConstraintMatrix:
    """Row k: -1 at column k, +1 at columns i and j (accumulating to +2 when i = j)."""
    n = len(t.reps)
    a = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(t.reps):
        a[k, k] -= 1
        a[k, i] += 1
        a[k, j] += 1
    return ConstraintMatrix(a)


def support(vector: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(k for k, vk in enumerate(vector) if vk == 1)


def extract(a: InputSet) -> Union[ZeroSumCertificate, NotSumFull]:
    """Produce a verified nonempty zero-sum subset of a sum-full input set.

    If zero is among the elements, {0} is itself the minimal certificate and
    the pipeline is skipped.  Otherwise the witness vector's support indexes
    the subset; its sum vanishing is rechecked before returning.
    """
    z = groups.zero(a.spec)
    pos = a.positions()
    if z in pos:
        k = pos[z]
        return ZeroSumCertificate((k,), (z,), None)
    t = check_sum_full(a)
    if isinstance(t, NotSumFull):
        return t
    m = build_matrix(t)
    w = find_witness(m)
    s = support(w.vector)
    elements = tuple(a.elements[k] for k in s)
    if groups.scalar_sum(elements, a.spec) != z:
        raise InternalVerificationError("witness support does not sum to zero")
    return ZeroSumCertificate(s, elements, Trail(t, m, w))


def verify_certificate(c: ZeroSumCertificate, a: InputSet) -> bool:
    """Pure recomputation of the whole trail; shares no state with extract."""
    n = len(a.elements)
    if not c.subset or len(set(c.subset)) != len(c.subset):
        return False
    if any(k < 0 or k >= n for k in c.subset):
        return False
    if c.elements != tuple(a.elements[k] for k in c.subset):
        return False
    z = groups.zero(a.spec)
    if groups.scalar_sum(c.elements, a.spec) != z:
        return False
    if c.trail is None:
        return c.subset == (c.subset[0],) and a.elements[c.subset[0]] == z
    trail = c.trail
    if not verify_table(a, trail.table):
        return False
    if trail.matrix.n != n or not np.array_equal(build_matrix(trail.table).entries, trail.matrix.entries):
        return False
    if not verify_witness(trail.matrix, trail.witness):
        return False
    return c.subset == support(trail.witness.vector)
