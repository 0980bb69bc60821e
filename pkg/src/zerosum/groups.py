"""Finitely generated abelian groups Z^r x Z_{m_1} x ... x Z_{m_t} with exact arithmetic.

Elements are immutable coordinate tuples: free coordinates first, then torsion
residues stored reduced into [0, m_i).  Free coordinates live in the symmetric
64-bit range; arithmetic that would leave it raises OverflowError instead of
wrapping, since certificates require exact sums.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import ShapeMismatch

# Symmetric bound so that negation is total on stored values.
INT64_MAX = 2**63 - 1
INT64_MIN = -INT64_MAX


@dataclass(frozen=True)
class GroupSpec:
    """Ambient group Z^free_rank x Z_{torsion[0]} x ...; trivial when both are empty."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free_rank must be non-negative")
        for m in self.torsion:
            if m < 2:
                raise ValueError(f"torsion modulus {m} must be >= 2")

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Number of elements, or None for an infinite group."""
        if not self.is_finite():
            return None
        return prod(self.torsion)


@dataclass(frozen=True)
class GroupElement:
    free: tuple[int, ...] = ()
    torsion: tuple[int, ...] = ()


def _check_free(value: int) -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise OverflowError(f"free coordinate {value} leaves the checked 64-bit range")
    return value


def check_shape(x: GroupElement, g: GroupSpec) -> None:
    if len(x.free) != g.free_rank or len(x.torsion) != len(g.torsion):
        raise ShapeMismatch(
            f"element with shape ({len(x.free)}, {len(x.torsion)}) does not fit "
            f"group ({g.free_rank}, {len(g.torsion)})"
        )


def element(g: GroupSpec, coords: Sequence[int]) -> GroupElement:
    """Build an element from flat coordinates (free first, torsion after), reducing residues."""
    r = g.free_rank
    if len(coords) != r + len(g.torsion):
        raise ShapeMismatch(f"expected {r + len(g.torsion)} coordinates, got {len(coords)}")
    free = tuple(_check_free(int(c)) for c in coords[:r])
    torsion = tuple(int(c) % m for c, m in zip(coords[r:], g.torsion))
    return GroupElement(free, torsion)


def coords(x: GroupElement) -> list[int]:
    """Flat coordinate list, the inverse of element()."""
    return list(x.free) + list(x.torsion)


def zero(g: GroupSpec) -> GroupElement:
    return GroupElement((0,) * g.free_rank, (0,) * len(g.torsion))


def add(x: GroupElement, y: GroupElement, g: GroupSpec) -> GroupElement:
    check_shape(x, g)
    check_shape(y, g)
    free = tuple(_check_free(a + b) for a, b in zip(x.free, y.free))
    torsion = tuple((a + b) % m for a, b, m in zip(x.torsion, y.torsion, g.torsion))
    return GroupElement(free, torsion)


def negate(x: GroupElement, g: GroupSpec) -> GroupElement:
    check_shape(x, g)
    free = tuple(-a for a in x.free)
    torsion = tuple((-a) % m for a, m in zip(x.torsion, g.torsion))
    return GroupElement(free, torsion)


def sub(x: GroupElement, y: GroupElement, g: GroupSpec) -> GroupElement:
    return add(x, negate(y, g), g)


def scalar_sum(elements: Iterable[GroupElement], g: GroupSpec) -> GroupElement:
    """Fold of add; the empty sum is zero."""
    acc = zero(g)
    for x in elements:
        acc = add(acc, x, g)
    return acc


def sort_key(x: GroupElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Fixed total order: lexicographic on the free part, then the torsion part."""
    return (x.free, x.torsion)


def canonical_elements(elements: Iterable[GroupElement], g: GroupSpec) -> tuple[GroupElement, ...]:
    """Duplicate-free, sorted under the fixed total order."""
    seen = set()
    out = []
    for x in elements:
        check_shape(x, g)
        if x not in seen:
            seen.add(x)
            out.append(x)
    out.sort(key=sort_key)
    return tuple(out)


def all_elements(g: GroupSpec) -> Iterator[GroupElement]:
    """Every element of a finite group, in the fixed total order."""
    if not g.is_finite():
        raise ValueError("cannot enumerate an infinite group")
    for t in itertools.product(*(range(m) for m in g.torsion)):
        yield GroupElement((), t)
