"""Discrete convexity of sign-vector sets and sign patterns of point clouds."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .cubihedron import baryc_keys
from .signs import (
    GroundSet,
    PartialFamily,
    PartialSignVector,
    SignFamily,
    _up_keys,
    is_upward_closed,
    submasks,
)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class PointCloud:
    ground: GroundSet
    points: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        n = self.ground.n
        for i, p in enumerate(self.points):
            if len(p) != n:
                raise ValueError(f"point {i} has {len(p)} coordinates, expected {n}")
            for x in p:
                if not math.isfinite(x):
                    raise ValueError(f"point {i} has a non-finite coordinate {x!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], n: int | None = None) -> "PointCloud":
        rows = [tuple(float(x) for x in r) for r in rows]
        if n is None:
            n = len(rows[0]) if rows else 0
        return cls(GroundSet(n), tuple(rows))


def parse_point_cloud(text: str) -> PointCloud:
    """Read a cloud from JSON (array of arrays) or CSV (one point per row)."""
    stripped = text.strip()
    if stripped.startswith("["):
        rows = json.loads(stripped)
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ValueError("JSON point cloud must be an array of arrays")
    else:
        rows = [r for r in csv.reader(io.StringIO(stripped))
                if r and not r[0].lstrip().startswith("#")]
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError(f"ragged point cloud: row lengths {sorted(widths)}")
    try:
        return PointCloud.from_rows(rows)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad point cloud: {exc}") from None


def _sign_key(r: Sequence[float], tolerance: float) -> tuple[int, int]:
    support = signs = 0
    for e, x in enumerate(r):
        if not math.isfinite(x):
            raise ValueError(f"non-finite coordinate {x!r}")
        if abs(x) <= tolerance:
            continue
        support |= 1 << e
        if x > 0:
            signs |= 1 << e
    return support, signs


def sign_of_point(r: Sequence[float], tolerance: float = DEFAULT_TOLERANCE,
                  ground: GroundSet | None = None) -> PartialSignVector:
    """Coordinatewise sign; entries with |x| <= tolerance count as 0."""
    if ground is None:
        ground = GroundSet(len(r))
    elif len(r) != ground.n:
        raise ValueError(f"point has {len(r)} coordinates, expected {ground.n}")
    return PartialSignVector(ground, *_sign_key(r, tolerance))


def region_pattern(K: PointCloud, tolerance: float = DEFAULT_TOLERANCE) -> PartialFamily:
    """J(K): the sign vectors of the points."""
    return PartialFamily._raw(K.ground, frozenset(_sign_key(r, tolerance) for r in K.points))


def orthant_pattern(K: PointCloud, tolerance: float = DEFAULT_TOLERANCE) -> SignFamily:
    """L(K): the closed orthants met by some point."""
    full = K.ground.full_mask
    out = set()
    for r in K.points:
        support, signs = _sign_key(r, tolerance)
        for plus in submasks(full & ~support):
            out.add(signs | plus)
    return SignFamily._raw(K.ground, frozenset(out))


# --- elimination-style axioms -----------------------------------------------
#
# Both axioms say: for t1, t2 in J and e with t1(e) t2(e) = -1 there is t in J
# with t(e) = 0 and t(f) drawn from an allowed set on the other coordinates.
# The allowed sets are given as three masks (zero / plus / minus allowed).

def _conflicts(a, b) -> int:
    sa, ga = a
    sb, gb = b
    return sa & sb & (ga ^ gb)


def _sca_allowed(a, b, full):
    sa, ga = a
    sb, gb = b
    plus = (sa & ga) | (sb & gb)
    minus = (sa & ~ga) | (sb & ~gb)
    return full, plus, minus


def _sign_convex_allowed(a, b, full):
    sa, ga = a
    sb, gb = b
    conflict = sa & sb & (ga ^ gb)
    zero = (full & ~sa) | (full & ~sb) | conflict
    plus = (sa & ga) | (sb & gb)
    minus = (sa & ~ga) | (sb & ~gb)
    return zero, plus, minus


def _find_violation(keys, n: int, allowed: Callable, between: bool = False):
    """First (t1, t2, e) with no eliminating t, or None.

    With ``between`` the eliminating t must also lie in the l1 box [t1, t2].
    """
    full = (1 << n) - 1
    members = sorted(keys)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            conflict = _conflicts(a, b)
            if not conflict:
                continue
            zero_ok, plus_ok, minus_ok = allowed(a, b, full)
            if between:
                bz, bp, bm = _box(a, b, full)
                zero_ok &= bz
                plus_ok &= bp
                minus_ok &= bm
            zeroed = 0
            for support, signs in members:
                if (full & ~support & ~zero_ok or support & signs & ~plus_ok
                        or support & ~signs & ~minus_ok):
                    continue
                zeroed |= full & ~support
                if conflict & ~zeroed == 0:
                    break
            missing = conflict & ~zeroed
            if missing:
                return a, b, (missing & -missing).bit_length() - 1
    return None


def _box(a, b, full):
    """Masks of the values allowed coordinatewise in the l1 box [a, b]."""
    sa, ga = a
    sb, gb = b
    # v lies between a(f) and b(f) on the line -1 < 0 < +1
    same_nonzero = sa & sb & ~(ga ^ gb)
    zero = full & ~same_nonzero
    plus = (sa & ga) | (sb & gb)
    minus = (sa & ~ga) | (sb & ~gb)
    return zero, plus, minus


def sca_violation(J: PartialFamily):
    return _find_violation(J.keys, J.n, _sca_allowed)


def satisfies_sca(J: PartialFamily) -> bool:
    """The signed-circuit axiom (0-convexity)."""
    return sca_violation(J) is None


def sign_convex_violation(J: PartialFamily):
    return _find_violation(J.keys, J.n, _sign_convex_allowed)


def is_sign_convex(J: PartialFamily) -> bool:
    return sign_convex_violation(J) is None


@dataclass(frozen=True)
class ConvexityReport:
    sign_convex: bool
    sign_convex_in_box: bool
    zero_convex: bool
    zero_convex_in_box: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.sign_convex, self.sign_convex_in_box, self.zero_convex, self.zero_convex_in_box)

    def consistent(self) -> bool:
        return len(set(self.as_tuple())) == 1


def upward_closed_convexity_report(J: PartialFamily) -> ConvexityReport:
    """The four equivalent convexity conditions for an upward closed J."""
    if not is_upward_closed(J):
        raise ValueError("J must be upward closed")
    n = J.n
    return ConvexityReport(
        sign_convex=_find_violation(J.keys, n, _sign_convex_allowed) is None,
        sign_convex_in_box=_find_violation(J.keys, n, _sign_convex_allowed, between=True) is None,
        zero_convex=_find_violation(J.keys, n, _sca_allowed) is None,
        zero_convex_in_box=_find_violation(J.keys, n, _sca_allowed, between=True) is None,
    )


def orthant_pattern_of_complex(L: SignFamily) -> SignFamily:
    """L(|L|): orthants O(s) meeting a face F(t) of |L|, i.e. t < s."""
    full = L.ground.full_mask
    up = _up_keys(baryc_keys(L.bits, L.n), L.n)
    return SignFamily._raw(L.ground, frozenset(g for s, g in up if s == full))
