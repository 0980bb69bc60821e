"""Deterministic instance generators for tests and fuzzing.

All randomness comes from a SplitMix64 stream so that a (config, seed) pair
pins the instance bit-for-bit; see the README for the exact state evolution
and the bounded-draw and composition-unranking rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import groups
from .groups import GroupElement, GroupSpec
from .sumfull import InputSet, NotSumFull, check_sum_full
from .witness import ConstraintMatrix

MASK64 = 2**64 - 1
FULL_NONZERO_MAX_ORDER = 10**6

MODES = ("random_matrix", "random_set", "prune_closure", "full_nonzero")


class SplitMix64:
    """SplitMix64: state += 0x9E3779B97F4A7C15; output = mix(state)."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform draw in [0, k) by the multiply-shift rule (next * k) >> 64."""
        if k <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * k) >> 64


@dataclass(frozen=True)
class GenConfig:
    seed: int
    group: GroupSpec
    mode: str
    count: int = 16
    bound: int = 50

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.count < 1 or self.bound < 0:
            raise ValueError("count must be >= 1 and bound >= 0")


def _unrank_sorted_pair(t: int, slots: int) -> tuple[int, int]:
    """Index t -> the t-th pair (a, b), a <= b < slots, in lexicographic order."""
    lo, hi = 0, slots - 1
    # offset(a) = number of pairs with first coordinate < a.
    def offset(a: int) -> int:
        return a * slots - a * (a - 1) // 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if offset(mid) <= t:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo + (t - offset(lo))


def random_matrix(n: int, seed: int) -> ConstraintMatrix:
    """Per row: diagonal drawn from {-1, 0, 1}, the remaining mass 1 - d placed
    by a uniformly drawn weak composition over the off-diagonal slots."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return ConstraintMatrix(np.array([[1]], dtype=np.int64))
    rng = SplitMix64(seed)
    slots = n - 1
    a = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        d = rng.below(3) - 1
        a[i, i] = d
        w = 1 - d
        if w == 1:
            s = rng.below(slots)
            col = s if s < i else s + 1
            a[i, col] += 1
        elif w == 2:
            x, y = _unrank_sorted_pair(rng.below(slots * (slots + 1) // 2), slots)
            for s in (x, y):
                col = s if s < i else s + 1
                a[i, col] += 1
    return ConstraintMatrix(a)


def _draw_element(rng: SplitMix64, g: GroupSpec, bound: int) -> GroupElement:
    free = tuple(rng.below(2 * bound + 1) - bound for _ in range(g.free_rank))
    torsion = tuple(rng.below(m) for m in g.torsion)
    return GroupElement(free, torsion)


def random_set(cfg: GenConfig) -> tuple[GroupElement, ...]:
    """cfg.count draws, deduplicated and canonically sorted (may come out smaller)."""
    rng = SplitMix64(cfg.seed)
    drawn = [_draw_element(rng, cfg.group, cfg.bound) for _ in range(cfg.count)]
    return groups.canonical_elements(drawn, cfg.group)


def _has_representation(els: list[GroupElement], pos: dict[GroupElement, int],
                        k: int, g: GroupSpec) -> bool:
    target = els[k]
    for i, x in enumerate(els):
        if i == k:
            continue
        j = pos.get(groups.sub(target, x, g))
        if j is not None and j != k:
            return True
    return False


def prune_to_sumfull(spec: GroupSpec, elements: tuple[GroupElement, ...]) -> tuple[GroupElement, ...]:
    """Delete all currently unrepresentable elements at once until a fixpoint.

    The fixpoint is the largest sum-full subset, so it does not depend on the
    deletion order.
    """
    cur = list(elements)
    while cur:
        pos = {x: i for i, x in enumerate(cur)}
        keep = [x for k, x in enumerate(cur) if _has_representation(cur, pos, k, spec)]
        if len(keep) == len(cur):
            break
        cur = keep
    return tuple(cur)


def random_sumfull_set(cfg: GenConfig) -> Optional[InputSet]:
    """full_nonzero: all nonzero elements of a finite group; prune_closure: a random
    draw pruned to its sum-full fixpoint.  Either way the result is verified
    sum-full before being returned; None is a valid outcome."""
    if cfg.mode == "full_nonzero":
        g = cfg.group
        if not g.is_finite():
            raise ValueError("full_nonzero needs a finite group")
        order = g.order()
        assert order is not None
        if order > FULL_NONZERO_MAX_ORDER:
            raise ValueError(f"group order {order} exceeds the cap {FULL_NONZERO_MAX_ORDER}")
        z = groups.zero(g)
        els = tuple(x for x in groups.all_elements(g) if x != z)
        if not els:
            return None
        candidate = InputSet(g, els)
    elif cfg.mode == "prune_closure":
        survivors = prune_to_sumfull(cfg.group, random_set(cfg))
        if not survivors:
            return None
        candidate = InputSet(cfg.group, survivors)
    else:
        raise ValueError(f"mode {cfg.mode!r} does not generate sum-full sets")
    if isinstance(check_sum_full(candidate), NotSumFull):
        return None
    return candidate
