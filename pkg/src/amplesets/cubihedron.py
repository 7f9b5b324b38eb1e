"""The cube complex |L| described by face barycenters in {+-1, 0}^E.

A face H(A) x s0 is stored as its barycenter: zero on A, s0 elsewhere.
Nothing geometric is ever materialized.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .shatter import (
    proj_bits,
    restr_bits,
    strongly_shattered_masks,
)
from .signs import (
    GroundSet,
    PartialFamily,
    PartialSignVector,
    SignFamily,
    _check_same_ground,
    complement,
    expand,
    format_full,
    format_partial,
    iter_bits,
    popcount,
    submasks,
)


class _Unreachable:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNREACHABLE"

    __str__ = __repr__


UNREACHABLE = _Unreachable()


# --- barycenters ------------------------------------------------------------

@lru_cache(maxsize=4096)
def baryc_keys(bits: frozenset, n: int) -> frozenset:
    full = (1 << n) - 1
    out = []
    for A in strongly_shattered_masks(bits, full):
        support = full & ~A
        out.extend((support, k) for k in restr_bits(bits, A))
    return frozenset(out)


@lru_cache(maxsize=4096)
def cocircuit_keys(bits: frozenset, n: int) -> frozenset:
    baryc = baryc_keys(bits, n)
    out = []
    # Baryc is upward closed, so minimality only needs the lower covers
    for support, signs in baryc:
        for e in iter_bits(support):
            bit = 1 << e
            if (support ^ bit, signs & ~bit) in baryc:
                break
        else:
            out.append((support, signs))
    return frozenset(out)


def barycentric_completion(L: SignFamily) -> PartialFamily:
    """Baryc(L): barycenters of all faces whose vertices all lie in L."""
    return PartialFamily._raw(L.ground, baryc_keys(L.bits, L.n))


def cocircuits(L: SignFamily) -> PartialFamily:
    """Barycenters of the facets of |L|, i.e. Min(Baryc(L))."""
    return PartialFamily._raw(L.ground, cocircuit_keys(L.bits, L.n))


def circuits(L: SignFamily) -> PartialFamily:
    return cocircuits(complement(L))


def _face_key(F, ground: GroundSet) -> tuple[int, int]:
    if isinstance(F, str):
        F = PartialSignVector.parse(F, ground)
    _check_same_ground(F.ground, ground)
    return F.key


def face_counts(L: SignFamily, F) -> list[int]:
    """f_0..f_n of the subcomplex of |L| lying inside the face F."""
    fs, fg = _face_key(F, L.ground)
    counts = [0] * (L.n + 1)
    for support, signs in baryc_keys(L.bits, L.n):
        # face(t) inside face(F)  <=>  F < t
        if fs & ~support == 0 and signs & fs == fg:
            counts[L.n - popcount(support)] += 1
    return counts


def euler_characteristic(L: SignFamily, F) -> int:
    return sum((-1) ** i * f for i, f in enumerate(face_counts(L, F)))


def complex_dimension(L: SignFamily) -> int:
    """max #B over B strongly shattered; -1 for the empty complex."""
    return max((popcount(B) for B in strongly_shattered_masks(L.bits, L.ground.full_mask)), default=-1)


# --- the grid graph on {+-1,0}^E --------------------------------------------

def _grid_neighbors(key: tuple[int, int], full: int):
    support, signs = key
    for e in iter_bits(full):
        bit = 1 << e
        if support & bit:
            yield (support ^ bit, signs & ~bit)
        else:
            yield (support | bit, signs)
            yield (support | bit, signs | bit)


def grid_distance(J: PartialFamily, t, u):
    """Shortest-path length between t and u in the grid subgraph induced by J."""
    tk = _face_key(t, J.ground)
    uk = _face_key(u, J.ground)
    keys = J.keys
    for name, k in (("t", tk), ("u", uk)):
        if k not in keys:
            raise ValueError(f"{name} = {format_partial(*k, J.n)} is not a member of J")
    if tk == uk:
        return 0
    full = J.ground.full_mask
    dist = {tk: 0}
    queue = deque([tk])
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for nb in _grid_neighbors(cur, full):
            if nb in keys and nb not in dist:
                if nb == uk:
                    return d
                dist[nb] = d
                queue.append(nb)
    return UNREACHABLE


# ternary index: digit 0 for a zero entry, 1 for +1, 2 for -1
_TERNARY_MAX_N = 10


def ternary_index(support: int, signs: int) -> int:
    idx = 0
    p = 1
    while support:
        if support & 1:
            idx += p if signs & 1 else 2 * p
        support >>= 1
        signs >>= 1
        p *= 3
    return idx


@lru_cache(maxsize=None)
def _cylinders(n: int) -> tuple:
    """cyl[e][d]: bitset over {+-1,0}^E of all vectors with digit d at e."""
    size = 3 ** n
    cyl = []
    for e in range(n):
        p = 3 ** e
        masks = [0, 0, 0]
        for idx in range(size):
            masks[(idx // p) % 3] |= 1 << idx
        cyl.append(tuple(masks))
    return tuple(cyl)


def _isometric_bitset(keys: frozenset, n: int) -> bool:
    cyl = _cylinders(n)
    powers = [3 ** e for e in range(n)]
    index = {k: ternary_index(*k) for k in keys}
    jmask = 0
    for i in index.values():
        jmask |= 1 << i
    for (support, signs), vi in index.items():
        covered = 1 << vi
        for e in range(n):
            p = powers[e]
            digit = (vi // p) % 3
            c = cyl[e]
            if digit == 0:
                # stepping to +1 (resp. -1) gets closer to every u with u(e)=+1 (-1)
                if jmask >> (vi + p) & 1:
                    covered |= c[1]
                if jmask >> (vi + 2 * p) & 1:
                    covered |= c[2]
            elif jmask >> (vi - digit * p) & 1:
                # stepping to 0 gets closer to every u with u(e) != v(e)
                covered |= c[0] | c[3 - digit]
        if jmask & ~covered:
            return False
    return True


def _isometric_pairwise(keys: frozenset, n: int) -> bool:
    full = (1 << n) - 1
    moves = {}
    for v in keys:
        support, signs = v
        up_plus = up_minus = down = 0
        for e in iter_bits(full):
            bit = 1 << e
            if support & bit:
                if (support ^ bit, signs & ~bit) in keys:
                    down |= bit
            else:
                if (support | bit, signs | bit) in keys:
                    up_plus |= bit
                if (support | bit, signs) in keys:
                    up_minus |= bit
        moves[v] = (up_plus, up_minus, down)
    for v, (up_plus, up_minus, down) in moves.items():
        vs, vg = v
        for u in keys:
            if u == v:
                continue
            us, ug = u
            differ = (us ^ vs) | (us & vs & (ug ^ vg))
            if not (up_plus & us & ug or up_minus & us & ~ug or down & differ):
                return False
    return True


def is_grid_isometric(J: PartialFamily) -> bool:
    """Grid distance equals l1 distance for every pair of members of J.

    A member v passes w.r.t. u when some grid neighbour of v in J is strictly
    l1-closer to u; by induction on l1 distance, all pairs passing is
    equivalent to isometry.
    """
    if J.n <= _TERNARY_MAX_N:
        return _isometric_bitset(J.keys, J.n)
    return _isometric_pairwise(J.keys, J.n)


# --- projections of the complex ---------------------------------------------

def projected_complex_contains(L: SignFamily, A, u) -> bool:
    """Whether the face F(u) of H(E - A) lies in the projection |L|_A."""
    A = L.ground.subset(A)
    sub_ground = L.ground.minus(A)
    us, ug = _face_key(u, sub_ground)
    keep = L.ground.full_mask & ~A
    us = expand(us, keep)
    ug = expand(ug, keep)
    zeros = keep & ~us
    for extra in submasks(keep & ~zeros):
        B = zeros | extra
        rest = keep & ~B
        target = ug & rest
        for k in restr_bits(L.bits, B):
            if k & rest == target:
                return True
    return False


def projection_dimensions(L: SignFamily, A) -> tuple[int, int]:
    """(dim |L|_A, dim |L_A|)."""
    A = L.ground.subset(A)
    if not L.bits:
        return (-1, -1)
    projected = max(popcount(B) for B in strongly_shattered_masks(L.bits, L.ground.full_mask) if not B & A)
    keep = L.ground.full_mask & ~A
    of_projection = max(popcount(B) for B in strongly_shattered_masks(proj_bits(L.bits, A), keep))
    return projected, of_projection


# --- exports ----------------------------------------------------------------

def _dot(name: str, nodes: list[str], edges: list[tuple[str, str]]) -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{v}";' for v in nodes)
    lines.extend(f'  "{a}" -- "{b}";' for a, b in edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_dot(L: SignFamily) -> str:
    """DOT text of G(L), the 1-skeleton of |L|."""
    n = L.n
    order = sorted(L.bits)
    edges = []
    for s in order:
        for e in range(n):
            t = s ^ (1 << e)
            if t > s and t in L.bits:
                edges.append((format_full(s, n), format_full(t, n)))
    return _dot("skeleton", [format_full(s, n) for s in order], edges)


def baryc_dot(L: SignFamily) -> str:
    """DOT text of the grid subgraph induced by Baryc(L)."""
    n = L.n
    keys = baryc_keys(L.bits, n)
    order = sorted(keys)
    full = L.ground.full_mask
    edges = []
    for k in order:
        for nb in _grid_neighbors(k, full):
            if nb in keys and nb > k:
                edges.append((format_partial(*k, n), format_partial(*nb, n)))
    return _dot("baryc", [format_partial(*k, n) for k in order], edges)


def complex_summary(L: SignFamily) -> dict:
    """JSON-ready f-vector, dimension and cocircuit list of |L|."""
    whole = (0, 0)
    return {
        "n": L.n,
        "f_vector": face_counts(L, PartialSignVector(L.ground, *whole)),
        "dimension": complex_dimension(L),
        "cocircuits": cocircuits(L).strings(),
        "circuits": circuits(L).strings(),
    }
