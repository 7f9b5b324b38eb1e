"""Characterizations of ampleness, each implemented on its own, and the harness
that checks them against one another.

Every ``_check_*`` kernel returns ``None`` when the condition holds and a
witness dict for the first counterexample otherwise.  Scans go through sets
A in increasing mask order, then partner sets / vectors in increasing order.
"""
from __future__ import annotations

import hashlib
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .convexity import sca_violation, sign_convex_violation
from .cubihedron import (
    baryc_keys,
    circuits,
    cocircuits,
    is_grid_isometric,
    projection_dimensions,
    ternary_index,
)
from .shatter import (
    dress_pajor,
    is_strongly_shattered_bits,
    proj_bits,
    restr_bits,
    shattered_masks,
    strongly_shattered_masks,
    vc_dimension,
)
from .signs import (
    GroundSet,
    PartialFamily,
    SignFamily,
    compress,
    format_full,
    format_partial,
    iter_bits,
    popcount,
    submasks,
)

EXHAUSTIVE_MAX_N = 4


class Characterization(str, Enum):
    SUPERISOMETRY = "SUPERISOMETRY"
    SUPERCONNECTIVITY = "SUPERCONNECTIVITY"
    ISO_RECURSIVE = "ISO_RECURSIVE"
    CONN_RECURSIVE = "CONN_RECURSIVE"
    COMMUTATIVITY = "COMMUTATIVITY"
    COUNT = "COUNT"
    SPARSE = "SPARSE"
    LOPSIDED = "LOPSIDED"
    EULER = "EULER"
    ASYMMETRY = "ASYMMETRY"
    GRID_ISO = "GRID_ISO"
    SCA_BARYC = "SCA_BARYC"
    SCA_COCIRC = "SCA_COCIRC"
    SCA_CIRC = "SCA_CIRC"
    SIGNCONV_BARYC = "SIGNCONV_BARYC"
    PROJ_DIM = "PROJ_DIM"
    PROJ_SET = "PROJ_SET"

    @classmethod
    def parse(cls, which) -> "Characterization":
        if isinstance(which, cls):
            return which
        try:
            return cls(str(which).upper())
        except ValueError:
            known = ", ".join(c.value for c in cls)
            raise ValueError(f"unknown characterization {which!r}; known: {known}") from None


ALL_IDS = tuple(Characterization)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


# --- graph helpers on masked families ---------------------------------------

def _connected(bits: frozenset, live: int) -> bool:
    if len(bits) <= 1:
        return True
    start = next(iter(bits))
    seen = {start}
    stack = [start]
    flips = [1 << e for e in iter_bits(live)]
    while stack:
        v = stack.pop()
        for f in flips:
            w = v ^ f
            if w in bits and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(bits)


def _isometry_violation(bits: frozenset, live: int):
    """A pair (u, v) whose graph distance in G(bits) exceeds the Hamming distance."""
    # v is fine w.r.t. u iff some neighbour of v in the family is closer to u
    flips = [1 << e for e in iter_bits(live)]
    order = sorted(bits)
    for v in order:
        avail = 0
        for f in flips:
            if v ^ f in bits:
                avail |= f
        for u in order:
            if u != v and not (u ^ v) & avail:
                return u, v
    return None


def _fmt_set(ground: GroundSet, mask: int) -> list[str]:
    return ground.subset_labels(mask)


def _fmt_masked(bits, live: int) -> list[str]:
    n = popcount(live)
    return [format_full(compress(s, live), n) for s in sorted(bits)]


# --- the kernels --------------------------------------------------------------

def _check_superisometry(L: SignFamily):
    full = L.ground.full_mask
    for A in range(full + 1):
        R = restr_bits(L.bits, A)
        bad = _isometry_violation(R, full & ~A)
        if bad is not None:
            live = full & ~A
            n = popcount(live)
            return {"A": _fmt_set(L.ground, A),
                    "pair": [format_full(compress(x, live), n) for x in bad]}
    return None


def _check_superconnectivity(L: SignFamily):
    full = L.ground.full_mask
    for A in range(full + 1):
        R = restr_bits(L.bits, A)
        if not _connected(R, full & ~A):
            return {"A": _fmt_set(L.ground, A), "restriction": _fmt_masked(R, full & ~A)}
    return None


@lru_cache(maxsize=1 << 16)
def _iso_recursive(bits: frozenset, live: int) -> bool:
    if live == 0:
        return True
    if _isometry_violation(bits, live) is not None:
        return False
    for e in iter_bits(live):
        rest = live & ~(1 << e)
        if (_iso_recursive(proj_bits(bits, 1 << e), rest)
                and _iso_recursive(restr_bits(bits, 1 << e), rest)):
            return True
    return False


def _check_iso_recursive(L: SignFamily):
    full = L.ground.full_mask
    if _iso_recursive(L.bits, full):
        return None
    bad = _isometry_violation(L.bits, full)
    if bad is not None:
        return {"reason": "not isometric", "pair": [format_full(x, L.n) for x in bad]}
    return {"reason": "no coordinate e with both L_e and L^e passing"}


@lru_cache(maxsize=1 << 16)
def _conn_recursive(bits: frozenset, live: int) -> bool:
    if live == 0:
        return True
    if not _connected(bits, live):
        return False
    return all(_conn_recursive(restr_bits(bits, 1 << e), live & ~(1 << e)) for e in iter_bits(live))


def _check_conn_recursive(L: SignFamily):
    full = L.ground.full_mask
    if not _connected(L.bits, full):
        return {"reason": "not connected"}
    for e in iter_bits(full):
        if not _conn_recursive(restr_bits(L.bits, 1 << e), full & ~(1 << e)):
            return {"reason": "L^e fails", "e": L.ground.labels[e]}
    return None


def _check_commutativity(L: SignFamily):
    full = L.ground.full_mask
    for A in range(full + 1):
        restricted = restr_bits(L.bits, A)
        for B in submasks(full & ~A):
            left = proj_bits(restricted, B)
            right = restr_bits(proj_bits(L.bits, B), A)
            if left != right:
                live = full & ~(A | B)
                return {"A": _fmt_set(L.ground, A), "B": _fmt_set(L.ground, B),
                        "restrict_then_project": _fmt_masked(left, live),
                        "project_then_restrict": _fmt_masked(right, live)}
    return None


def _check_count(L: SignFamily):
    upper = len(shattered_masks(L.bits, L.ground.full_mask))
    if upper != len(L.bits):
        return {"size": len(L.bits), "shattered": upper}
    return None


def _check_sparse(L: SignFamily):
    lower = len(strongly_shattered_masks(L.bits, L.ground.full_mask))
    if lower != len(L.bits):
        return {"size": len(L.bits), "strongly_shattered": lower}
    return None


def _check_lopsided(L: SignFamily):
    full = L.ground.full_mask
    comp = frozenset(range(1 << L.n)) - L.bits
    for A in range(full + 1):
        B = full & ~A
        if not is_strongly_shattered_bits(L.bits, A) and not is_strongly_shattered_bits(comp, B):
            return {"A": _fmt_set(L.ground, A), "B": _fmt_set(L.ground, B)}
    return None


def _check_euler(L: SignFamily):
    n = L.n
    size = 3 ** n
    powers = [3 ** e for e in range(n)]
    # cube[t]: all vertices of face t lie in L; built up one zero coordinate at a time
    cube = [0] * size
    for s in L.bits:
        cube[ternary_index((1 << n) - 1, s)] = 1
    for p in powers:
        for idx in range(size):
            if (idx // p) % 3 == 0:
                cube[idx] = cube[idx + p] & cube[idx + 2 * p]
    signed = [0] * size
    vertices = [0] * size
    for idx in range(size):
        if cube[idx]:
            zeros = sum(1 for p in powers if (idx // p) % 3 == 0)
            signed[idx] = -1 if zeros & 1 else 1
            if zeros == 0:
                vertices[idx] = 1
    # sum over the faces contained in each face
    for p in powers:
        for idx in range(size):
            if (idx // p) % 3 == 0:
                signed[idx] += signed[idx + p] + signed[idx + 2 * p]
                vertices[idx] += vertices[idx + p] + vertices[idx + 2 * p]
    for support in range(1 << n):
        for signs in submasks(support):
            idx = ternary_index(support, signs)
            if vertices[idx] and signed[idx] != 1:
                return {"face": format_partial(support, signs, n), "euler": signed[idx]}
    return None


def _check_asymmetry(L: SignFamily):
    full = L.ground.full_mask
    for A in range(full + 1):
        groups: dict[int, set] = {}
        for s in L.bits:
            groups.setdefault(s & ~A, set()).add(s & A)
        need = 1 << popcount(A)
        for base in sorted(groups):
            inside = groups[base]
            if len(inside) == need:
                continue
            if all(x ^ A in inside for x in inside):
                return {"face": format_partial(full & ~A, base, L.n),
                        "intersection": [format_full(base | x, L.n) for x in sorted(inside)]}
    return None


def _sca_witness(J: PartialFamily, violation):
    a, b, e = violation
    return {"pair": [format_partial(*a, J.n), format_partial(*b, J.n)], "e": J.ground.labels[e]}


def _check_grid_iso(L: SignFamily):
    J = PartialFamily._raw(L.ground, baryc_keys(L.bits, L.n))
    if is_grid_isometric(J):
        return None
    return {"reason": "Baryc(L) is not isometric in the grid"}


def _check_sca_baryc(L: SignFamily):
    J = PartialFamily._raw(L.ground, baryc_keys(L.bits, L.n))
    bad = sca_violation(J)
    return None if bad is None else _sca_witness(J, bad)


def _check_sca_cocirc(L: SignFamily):
    J = cocircuits(L)
    bad = sca_violation(J)
    return None if bad is None else _sca_witness(J, bad)


def _check_sca_circ(L: SignFamily):
    J = circuits(L)
    bad = sca_violation(J)
    return None if bad is None else _sca_witness(J, bad)


def _check_signconv_baryc(L: SignFamily):
    J = PartialFamily._raw(L.ground, baryc_keys(L.bits, L.n))
    bad = sign_convex_violation(J)
    return None if bad is None else _sca_witness(J, bad)


def _check_proj_dim(L: SignFamily):
    for A in range(L.ground.full_mask + 1):
        projected, of_projection = projection_dimensions(L, A)
        if projected != of_projection:
            return {"A": _fmt_set(L.ground, A), "dims": [projected, of_projection]}
    return None


def _projected_contains_masked(bits: frozenset, keep: int, us: int, ug: int) -> bool:
    zeros = keep & ~us
    for extra in submasks(us):
        B = zeros | extra
        rest = keep & ~B
        target = ug & rest
        for k in restr_bits(bits, B):
            if k & rest == target:
                return True
    return False


def _check_proj_set(L: SignFamily):
    full = L.ground.full_mask
    for A in range(full + 1):
        keep = full & ~A
        projection = proj_bits(L.bits, A)
        for us in submasks(keep):
            for ug in submasks(us):
                zeros = keep & ~us
                # F(u) is a face of |L_A| iff every vertex of F(u) is in L_A
                in_realization = all(ug | z in projection for z in submasks(zeros))
                if _projected_contains_masked(L.bits, keep, us, ug) != in_realization:
                    m = popcount(keep)
                    return {"A": _fmt_set(L.ground, A),
                            "face": format_partial(compress(us, keep), compress(ug, keep), m),
                            "in_projected_complex": not in_realization}
    return None


_KERNELS = {
    Characterization.SUPERISOMETRY: _check_superisometry,
    Characterization.SUPERCONNECTIVITY: _check_superconnectivity,
    Characterization.ISO_RECURSIVE: _check_iso_recursive,
    Characterization.CONN_RECURSIVE: _check_conn_recursive,
    Characterization.COMMUTATIVITY: _check_commutativity,
    Characterization.COUNT: _check_count,
    Characterization.SPARSE: _check_sparse,
    Characterization.LOPSIDED: _check_lopsided,
    Characterization.EULER: _check_euler,
    Characterization.ASYMMETRY: _check_asymmetry,
    Characterization.GRID_ISO: _check_grid_iso,
    Characterization.SCA_BARYC: _check_sca_baryc,
    Characterization.SCA_COCIRC: _check_sca_cocirc,
    Characterization.SCA_CIRC: _check_sca_circ,
    Characterization.SIGNCONV_BARYC: _check_signconv_baryc,
    Characterization.PROJ_DIM: _check_proj_dim,
    Characterization.PROJ_SET: _check_proj_set,
}


# --- public surface -----------------------------------------------------------

def is_ample(L: SignFamily) -> bool:
    """#L equals the number of sets shattered by L."""
    _, middle, upper = dress_pajor(L)
    return middle == upper


def check(L: SignFamily, which) -> Verdict:
    which = Characterization.parse(which)
    witness = _KERNELS[which](L)
    return Verdict(witness is None, witness)


def family_digest(L: SignFamily) -> str:
    text = f"{L.n}:" + ",".join(L.strings())
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class CharacterizationReport:
    family_digest: str
    family: SignFamily
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.verdicts.values())) <= 1

    def disagreements(self) -> list[str]:
        """Ids whose verdict differs from the counting definition."""
        ref = self.verdicts.get(Characterization.COUNT.value)
        return [k for k, v in self.verdicts.items() if v != ref]

    def to_json(self) -> dict:
        L = self.family
        return {
            "n": L.n,
            "family": L.strings(),
            "verdicts": dict(self.verdicts),
            "witnesses": dict(self.witnesses),
            "agree": self.agree,
            "dress_pajor": list(dress_pajor(L)),
            "vc_dimension": vc_dimension(L),
        }


def cross_check(L: SignFamily, ids=ALL_IDS) -> CharacterizationReport:
    report = CharacterizationReport(family_digest(L), L)
    report.verdicts["is_ample"] = is_ample(L)
    for which in ids:
        which = Characterization.parse(which)
        verdict = check(L, which)
        report.verdicts[which.value] = verdict.holds
        if verdict.witness is not None:
            report.witnesses[which.value] = verdict.witness
    return report


# --- enumeration ----------------------------------------------------------------

def family_from_index(ground: GroundSet, index: int) -> SignFamily:
    """The family whose members are the set bits of ``index`` (vertex s at bit s)."""
    if not 0 <= index < 1 << (1 << ground.n):
        raise ValueError(f"family index {index} out of range for n = {ground.n}")
    return SignFamily._raw(ground, frozenset(iter_bits(index)))


def _count_range(args) -> int:
    n, which, start, stop = args
    ground = GroundSet(n)
    kernel = _KERNELS[Characterization.parse(which)]
    count = 0
    for index in range(start, stop):
        if kernel(family_from_index(ground, index)) is None:
            count += 1
    return count


def _default_jobs() -> int:
    return os.cpu_count() or 1


def _split(total: int, parts: int):
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def enumerate_families(n: int, predicate, jobs: int | None = None) -> int:
    """Number of families L in {+-1}^n satisfying the predicate (exhaustive)."""
    which = Characterization.parse(predicate)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_MAX_N} "
                         f"(2^(2^n) families); use sample_families for larger n")
    total = 1 << (1 << n)
    jobs = jobs or _default_jobs()
    if jobs <= 1 or total < 1024:
        return _count_range((n, which.value, 0, total))
    chunks = [(n, which.value, lo, hi) for lo, hi in _split(total, jobs * 4)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_range, chunks))


def _disagreements_in_range(args) -> list[int]:
    n, ids, start, stop = args
    ground = GroundSet(n)
    kernels = [_KERNELS[Characterization.parse(c)] for c in ids]
    bad = []
    for index in range(start, stop):
        L = family_from_index(ground, index)
        if len({k(L) is None for k in kernels}) > 1:
            bad.append(index)
    return bad


def find_disagreements(n: int, ids=ALL_IDS, jobs: int | None = None) -> list[int]:
    """Indices of all families over {+-1}^n on which the given ids disagree."""
    ids = tuple(Characterization.parse(c).value for c in ids)
    if n < 0 or n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive scans are limited to 0 <= n <= {EXHAUSTIVE_MAX_N}")
    total = 1 << (1 << n)
    jobs = jobs or _default_jobs()
    if jobs <= 1 or total < 1024:
        return _disagreements_in_range((n, ids, 0, total))
    chunks = [(n, ids, lo, hi) for lo, hi in _split(total, jobs * 4)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [i for part in pool.map(_disagreements_in_range, chunks) for i in part]


def sample_families(n: int, predicate, samples: int, seed: int) -> int:
    """Count how many of ``samples`` seeded random families satisfy the predicate."""
    which = Characterization.parse(predicate)
    rng = random.Random(seed)
    count = 0
    for _ in range(samples):
        if check(generate(Kind.RANDOM, n, rng.randrange(1 << 30)), which):
            count += 1
    return count


# --- generators -------------------------------------------------------------------

class Kind(str, Enum):
    FULL = "FULL"
    EMPTY = "EMPTY"
    SINGLETON = "SINGLETON"
    DOWNSET = "DOWNSET"
    SIX_CYCLE = "SIX_CYCLE"
    RANDOM = "RANDOM"


SIX_CYCLE = ("+--", "-+-", "--+", "++-", "+-+", "-++")


def generate(kind, n: int, seed: int | None = None) -> SignFamily:
    kind = Kind(str(kind.value if isinstance(kind, Kind) else kind).upper())
    ground = GroundSet(n)
    if kind is Kind.SIX_CYCLE:
        if n != 3:
            raise ValueError("SIX_CYCLE exists only for n = 3")
        return SignFamily.from_strings(SIX_CYCLE)
    if kind is Kind.FULL:
        return SignFamily.full(ground)
    if kind is Kind.EMPTY:
        return SignFamily.empty(ground)
    if kind is Kind.SINGLETON:
        s = 0 if seed is None else random.Random(seed).randrange(1 << n)
        return SignFamily._raw(ground, frozenset([s]))
    if seed is None:
        raise ValueError(f"{kind.value} needs a seed")
    rng = random.Random(seed)
    if kind is Kind.RANDOM:
        density = rng.random()
        return SignFamily._raw(ground, frozenset(s for s in range(1 << n) if rng.random() < density))
    # DOWNSET: +1 at e means e belongs to the set; close a few random sets downward
    tops = [rng.randrange(1 << n) for _ in range(rng.randint(1, max(1, n)))]
    members = set()
    for top in tops:
        members.update(submasks(top))
    return SignFamily._raw(ground, frozenset(members))
