"""Projections L_A, restrictions L^A and the two simplicial complexes of L.

The kernels here work on "masked" families: a frozenset of ints whose bits
all lie inside a live mask.  Projecting or restricting away A just clears
the A bits, so chains like ``(L^A)_B`` never re-index coordinates.  The
public functions compress the result onto the ground set E - A.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

import numpy as np

from .signs import (
    GroundSet,
    SignFamily,
    compress,
    popcount,
)


@dataclass(frozen=True)
class SubsetFamily:
    ground: GroundSet
    masks: frozenset

    def __len__(self):
        return len(self.masks)

    def __contains__(self, A) -> bool:
        try:
            return self.ground.subset(A) in self.masks
        except ValueError:
            return False

    def __iter__(self):
        return iter(sorted(self.masks))

    def max_size(self) -> int:
        return max((popcount(a) for a in self.masks), default=-1)

    def labelled(self) -> list[list[str]]:
        return [self.ground.subset_labels(a) for a in sorted(self.masks, key=lambda a: (popcount(a), a))]

    def strings(self) -> list[str]:
        """Characteristic strings, one '0'/'1' char per coordinate."""
        n = self.ground.n
        return ["".join("1" if a >> i & 1 else "0" for i in range(n)) or "." for a in sorted(self.masks)]


# --- masked kernels ---------------------------------------------------------

def proj_bits(bits: Iterable[int], A: int) -> frozenset:
    keep = ~A
    return frozenset(s & keep for s in bits)


def restr_bits(bits: Iterable[int], A: int) -> frozenset:
    """Keys of the full A-fibers inside ``bits``; A must lie in the live mask."""
    if A == 0:
        return frozenset(bits)
    need = 1 << popcount(A)
    keep = ~A
    counts = Counter(s & keep for s in bits)
    return frozenset(k for k, c in counts.items() if c == need)


def is_shattered_bits(bits: frozenset, A: int) -> bool:
    need = 1 << popcount(A)
    if len(bits) < need:
        return False
    return len({s & A for s in bits}) == need


def is_strongly_shattered_bits(bits: frozenset, A: int) -> bool:
    need = 1 << popcount(A)
    if len(bits) < need:
        return False
    keep = ~A
    counts = Counter(s & keep for s in bits)
    return any(c == need for c in counts.values())


def _grow_down_closed(bits: frozenset, live: int, test) -> frozenset:
    # both complexes are downward closed, so only extend sets already found
    if not bits:
        return frozenset()
    found = [0]
    frontier = [0]
    seen = {0}
    while frontier:
        nxt = []
        for A in frontier:
            rest = live & ~A
            while rest:
                low = rest & -rest
                rest ^= low
                B = A | low
                if B in seen:
                    continue
                seen.add(B)
                if test(bits, B):
                    found.append(B)
                    nxt.append(B)
        frontier = nxt
    return frozenset(found)


# Whole-table route for larger n.  Index the cube {0,1}^n as an n-dim boolean
# array; axis k is bit n-1-k so flattening gives back the int encoding.
# The first pass adds a third slot per axis quantifying over that coordinate,
# the second pass chooses per axis between that slot and the other quantifier
# over the two values.  Running every quantifier of one kind before any of
# the other is what separates "every pattern on A occurs" from "some fiber
# over A is full".
TRANSFORM_MIN_N = 7
TRANSFORM_MAX_N = 14


def _quantifier_table(bits: frozenset, n: int, first, second, first_over_a: bool) -> frozenset:
    """Masks A with value true, ``first`` applied before ``second``.

    ``first_over_a`` says whether ``first`` quantifies over the coordinates in A
    (and ``second`` over E - A) or the other way round.
    """
    ind = np.zeros(1 << n, dtype=bool)
    ind[list(bits)] = True
    arr = ind.reshape((2,) * n)
    for axis in range(n):
        lo = np.take(arr, 0, axis=axis)
        hi = np.take(arr, 1, axis=axis)
        arr = np.stack([lo, hi, first(lo, hi)], axis=axis)
    for axis in range(n):
        lo = np.take(arr, 0, axis=axis)
        hi = np.take(arr, 1, axis=axis)
        star = np.take(arr, 2, axis=axis)
        # slot 1 of the result means "e in A"
        pair = [second(lo, hi), star] if first_over_a else [star, second(lo, hi)]
        arr = np.stack(pair, axis=axis)
    return frozenset(np.flatnonzero(arr.reshape(-1)).tolist())


def _use_transform(bits: frozenset, live: int) -> bool:
    return bool(bits) and TRANSFORM_MIN_N <= live.bit_length() <= TRANSFORM_MAX_N


def _within(masks: frozenset, live: int) -> frozenset:
    return frozenset(A for A in masks if not A & ~live)


@lru_cache(maxsize=4096)
def shattered_masks(bits: frozenset, live: int) -> frozenset:
    """All A within ``live`` shattered by the masked family ``bits``."""
    if _use_transform(bits, live):
        # for all patterns on A there exists a completion on E - A
        table = _quantifier_table(bits, live.bit_length(), np.logical_or, np.logical_and, False)
        return _within(table, live)
    return _grow_down_closed(bits, live, is_shattered_bits)


@lru_cache(maxsize=4096)
def strongly_shattered_masks(bits: frozenset, live: int) -> frozenset:
    """All A within ``live`` such that some A-fiber lies wholly in ``bits``."""
    if _use_transform(bits, live):
        # there exists t on E - A with every extension over A in the family
        table = _quantifier_table(bits, live.bit_length(), np.logical_and, np.logical_or, True)
        return _within(table, live)
    return _grow_down_closed(bits, live, is_strongly_shattered_bits)


# --- public operations ------------------------------------------------------

def _check_family_subset(L: SignFamily, A) -> int:
    return L.ground.subset(A)


def project(L: SignFamily, A) -> SignFamily:
    """L_A over E - A: the images of the members of L."""
    A = _check_family_subset(L, A)
    keep = L.ground.full_mask & ~A
    return SignFamily._raw(L.ground.minus(A), frozenset(compress(s, keep) for s in proj_bits(L.bits, A)))


def restrict(L: SignFamily, A) -> SignFamily:
    """L^A over E - A: the t whose whole A-fiber lies in L."""
    A = _check_family_subset(L, A)
    keep = L.ground.full_mask & ~A
    return SignFamily._raw(L.ground.minus(A), frozenset(compress(s, keep) for s in restr_bits(L.bits, A)))


def shattered(L: SignFamily) -> SubsetFamily:
    return SubsetFamily(L.ground, shattered_masks(L.bits, L.ground.full_mask))


def strongly_shattered(L: SignFamily) -> SubsetFamily:
    return SubsetFamily(L.ground, strongly_shattered_masks(L.bits, L.ground.full_mask))


def vc_dimension(L: SignFamily) -> int:
    """Size of the largest shattered set; -1 for the empty family."""
    return shattered(L).max_size()


def dress_pajor(L: SignFamily) -> tuple[int, int, int]:
    lower = len(strongly_shattered_masks(L.bits, L.ground.full_mask))
    upper = len(shattered_masks(L.bits, L.ground.full_mask))
    middle = len(L.bits)
    if not lower <= middle <= upper:
        # a bug detector, not a user error
        raise AssertionError(f"Dress-Pajor inequality broken: {lower} <= {middle} <= {upper}")
    return lower, middle, upper


def sauer_shelah_bound(n: int, d: int) -> int:
    return sum(comb(n, i) for i in range(d + 1))
