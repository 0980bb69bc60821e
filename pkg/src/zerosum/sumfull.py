"""Sum-fullness decision and deterministic representation fixing.

A set is sum-full when every element is a sum of two *other* elements of the
set (the two summands may coincide with each other, never with the element
they represent).  check_sum_full either fixes one representation per element
or reports the least element that has none.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from . import groups
from .groups import GroupElement, GroupSpec


@dataclass(frozen=True)
class InputSet:
    """Canonical input: duplicate-free elements sorted under the fixed total order."""

    spec: GroupSpec
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        if not self.elements:
            raise ValueError("input set is empty after deduplication")
        keys = [groups.sort_key(x) for x in self.elements]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("elements must be strictly sorted and duplicate-free")
        for x in self.elements:
            groups.check_shape(x, self.spec)

    @classmethod
    def from_elements(cls, spec: GroupSpec, elements: Iterable[GroupElement]) -> "InputSet":
        return cls(spec, groups.canonical_elements(elements, spec))

    def positions(self) -> dict[GroupElement, int]:
        return {x: k for k, x in enumerate(self.elements)}


@dataclass(frozen=True)
class RepresentationTable:
    """For each index k one pair (i, j), i <= j, both different from k, with a_i + a_j = a_k."""

    reps: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NotSumFull:
    """Verdict: the least index whose element is not a sum of two other elements."""

    witness_index: int


def check_sum_full(a: InputSet) -> Union[RepresentationTable, NotSumFull]:
    """Fix the lexicographically least representation (i, j) per element, or fail.

    The scan over i ascending finds the least valid pair: for each i the
    partner j is unique (j = position of a_k - a_i), and any valid pair with
    j < i was already visited as (j, i).
    """
    els = a.elements
    n = len(els)
    pos = a.positions()
    negs = [groups.negate(x, a.spec) for x in els]
    reps = []
    for k, target in enumerate(els):
        found = None
        for i in range(n):
            if i == k:
                continue
            j = pos.get(groups.add(target, negs[i], a.spec))
            if j is None or j == k or j < i:
                continue
            found = (i, j)
            break
        if found is None:
            return NotSumFull(k)
        reps.append(found)
    return RepresentationTable(tuple(reps))


def verify_table(a: InputSet, t: RepresentationTable) -> bool:
    """Recheck the table invariants against a; independent of how t was produced."""
    n = len(a.elements)
    if len(t.reps) != n:
        return False
    for k, (i, j) in enumerate(t.reps):
        if not (0 <= i <= j < n) or i == k or j == k:
            return False
        if groups.add(a.elements[i], a.elements[j], a.spec) != a.elements[k]:
            return False
    return True


def restricted_double(a: InputSet) -> tuple[GroupElement, ...]:
    """All pairwise sums a_i + a_j with i <= j, as a canonical set (diagnostic view)."""
    els = a.elements
    sums = set()
    for i in range(len(els)):
        for j in range(i, len(els)):
            sums.add(groups.add(els[i], els[j], a.spec))
    return groups.canonical_elements(sums, a.spec)
