"""Ground sets, full and partial sign vectors, and families of them.

Coordinate ``e`` of a vector lives at bit ``e``.  A full sign vector is a
single int whose set bits mark the ``+1`` coordinates.  A partial vector is a
pair ``(support, signs)`` where ``support`` marks the nonzero coordinates and
``signs`` marks the ``+1`` ones; ``signs`` never has bits outside ``support``.

Text form: one character per coordinate, ``+``, ``-`` or ``0``, leftmost
character is coordinate 0.  The empty vector (only for n = 0) is written ``.``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Union

MAX_N = 62
EMPTY_TOKEN = "."

_DIRECTIVE = re.compile(r"^#\s*n\s*[:=]\s*(\d+)\s*$")


class FormatError(ValueError):
    """Malformed family or vector text, with the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class GroundSet:
    n: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"ground set size must be a non-negative int, got {self.n!r}")
        if self.n > MAX_N:
            raise ValueError(f"ground set size {self.n} exceeds the cap of {MAX_N}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i + 1}" for i in range(self.n)))
        else:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise ValueError(f"{len(labels)} labels given for a ground set of size {self.n}")
            if len(set(labels)) != len(labels):
                raise ValueError("ground set labels must be distinct")
            object.__setattr__(self, "labels", labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def subset(self, items) -> int:
        """Bitmask of a subset of E.

        ``items`` is either an int mask, or an iterable of labels / coordinate
        indices.
        """
        if isinstance(items, int):
            mask = items
        else:
            mask = 0
            for x in items:
                if isinstance(x, str):
                    try:
                        x = self.labels.index(x)
                    except ValueError:
                        raise ValueError(f"unknown coordinate label {x!r}") from None
                if not 0 <= x < self.n:
                    raise ValueError(f"coordinate index {x} out of range for n={self.n}")
                mask |= 1 << x
        if mask < 0 or mask & ~self.full_mask:
            raise ValueError(f"subset {items!r} is not contained in the ground set")
        return mask

    def subset_labels(self, mask: int) -> list[str]:
        return [self.labels[i] for i in range(self.n) if mask >> i & 1]

    def minus(self, mask: int) -> "GroundSet":
        """The ground set E - A, keeping the surviving labels in order."""
        mask = self.subset(mask)
        return GroundSet(self.n - popcount(mask),
                         tuple(l for i, l in enumerate(self.labels) if not mask >> i & 1))


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def subsets_by_size(n: int) -> list[int]:
    """All subsets of an n-set, ordered by size then value."""
    out = []
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            out.append(sum(1 << i for i in combo))
    return out


def compress(x: int, keep: int) -> int:
    """Pack the bits of ``x`` at the positions of ``keep`` into the low bits."""
    out = 0
    j = 0
    for i in iter_bits(keep):
        if x >> i & 1:
            out |= 1 << j
        j += 1
    return out


def expand(x: int, keep: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    j = 0
    for i in iter_bits(keep):
        if x >> j & 1:
            out |= 1 << i
        j += 1
    return out


def format_full(bits: int, n: int) -> str:
    if n == 0:
        return EMPTY_TOKEN
    return "".join("+" if bits >> i & 1 else "-" for i in range(n))


def format_partial(support: int, signs: int, n: int) -> str:
    if n == 0:
        return EMPTY_TOKEN
    chars = []
    for i in range(n):
        if not support >> i & 1:
            chars.append("0")
        else:
            chars.append("+" if signs >> i & 1 else "-")
    return "".join(chars)


def parse_partial(text: str, n: int | None = None, lineno: int | None = None) -> tuple[int, int]:
    text = text.strip()
    if text == EMPTY_TOKEN:
        text = ""
    if n is not None and len(text) != n:
        raise FormatError(f"expected {n} sign characters, got {len(text)} in {text!r}", lineno)
    support = signs = 0
    for i, ch in enumerate(text):
        if ch == "+":
            support |= 1 << i
            signs |= 1 << i
        elif ch == "-":
            support |= 1 << i
        elif ch != "0":
            raise FormatError(f"illegal sign character {ch!r} in {text!r}", lineno)
    return support, signs


def parse_full(text: str, n: int | None = None, lineno: int | None = None) -> int:
    stripped = text.strip()
    if "0" in stripped and stripped != EMPTY_TOKEN:
        raise FormatError(f"zero entry in full sign vector {stripped!r}", lineno)
    support, signs = parse_partial(stripped, n, lineno)
    return signs


def _check_same_ground(a: GroundSet, b: GroundSet):
    if a != b:
        raise ValueError(f"ground set mismatch: n={a.n} {a.labels} vs n={b.n} {b.labels}")


@dataclass(frozen=True)
class SignVector:
    ground: GroundSet
    signs: int

    def __post_init__(self):
        if self.signs < 0 or self.signs & ~self.ground.full_mask:
            raise ValueError("sign bits outside the ground set")

    @classmethod
    def parse(cls, text: str, ground: GroundSet | None = None) -> "SignVector":
        text = text.strip()
        if ground is None:
            ground = GroundSet(0 if text == EMPTY_TOKEN else len(text))
        return cls(ground, parse_full(text, ground.n))

    def __getitem__(self, e: int) -> int:
        return 1 if self.signs >> e & 1 else -1

    def as_partial(self) -> "PartialSignVector":
        return PartialSignVector(self.ground, self.ground.full_mask, self.signs)

    def __neg__(self) -> "SignVector":
        return SignVector(self.ground, self.signs ^ self.ground.full_mask)

    def __str__(self):
        return format_full(self.signs, self.ground.n)


@dataclass(frozen=True)
class PartialSignVector:
    ground: GroundSet
    support: int
    signs: int

    def __post_init__(self):
        full = self.ground.full_mask
        if self.support < 0 or self.support & ~full:
            raise ValueError("support outside the ground set")
        if self.signs & ~self.support:
            raise ValueError("sign bits outside the support (non-canonical)")

    @classmethod
    def parse(cls, text: str, ground: GroundSet | None = None) -> "PartialSignVector":
        text = text.strip()
        if ground is None:
            ground = GroundSet(0 if text == EMPTY_TOKEN else len(text))
        return cls(ground, *parse_partial(text, ground.n))

    @property
    def key(self) -> tuple[int, int]:
        return (self.support, self.signs)

    @property
    def zeros(self) -> int:
        """E(t): the coordinates where t vanishes."""
        return self.ground.full_mask & ~self.support

    def is_full(self) -> bool:
        return self.support == self.ground.full_mask

    def __getitem__(self, e: int) -> int:
        if not self.support >> e & 1:
            return 0
        return 1 if self.signs >> e & 1 else -1

    def __str__(self):
        return format_partial(self.support, self.signs, self.ground.n)


Vectorish = Union[str, SignVector, PartialSignVector, tuple]


def _partial_key(v, ground: GroundSet) -> tuple[int, int]:
    if isinstance(v, PartialSignVector):
        _check_same_ground(v.ground, ground)
        return v.key
    if isinstance(v, SignVector):
        _check_same_ground(v.ground, ground)
        return (ground.full_mask, v.signs)
    if isinstance(v, str):
        return parse_partial(v, ground.n)
    support, signs = v
    return (support, signs & support)


def _full_key(v, ground: GroundSet) -> int:
    if isinstance(v, SignVector):
        _check_same_ground(v.ground, ground)
        return v.signs
    if isinstance(v, PartialSignVector):
        _check_same_ground(v.ground, ground)
        if not v.is_full():
            raise ValueError(f"{v} is not a full sign vector")
        return v.signs
    if isinstance(v, str):
        return parse_full(v, ground.n)
    return int(v)


class SignFamily:
    """A finite set L of full sign vectors over one ground set."""

    __slots__ = ("ground", "bits", "_hash")

    def __init__(self, ground: GroundSet, members: Iterable = ()):
        self.ground = ground
        bits = frozenset(_full_key(m, ground) for m in members)
        full = ground.full_mask
        for b in bits:
            if b < 0 or b & ~full:
                raise ValueError(f"vector code {b} outside the ground set")
        self.bits = bits
        self._hash = None

    @classmethod
    def _raw(cls, ground: GroundSet, bits: frozenset) -> "SignFamily":
        fam = cls.__new__(cls)
        fam.ground = ground
        fam.bits = bits
        fam._hash = None
        return fam

    @classmethod
    def from_strings(cls, lines: Iterable[str], n: int | None = None) -> "SignFamily":
        lines = [l.strip() for l in lines]
        if n is None:
            n = 0 if not lines or lines[0] == EMPTY_TOKEN else len(lines[0])
        ground = GroundSet(n)
        return cls._raw(ground, frozenset(parse_full(l, n) for l in lines))

    @classmethod
    def full(cls, ground: GroundSet | int) -> "SignFamily":
        if isinstance(ground, int):
            ground = GroundSet(ground)
        return cls._raw(ground, frozenset(range(1 << ground.n)))

    @classmethod
    def empty(cls, ground: GroundSet | int) -> "SignFamily":
        if isinstance(ground, int):
            ground = GroundSet(ground)
        return cls._raw(ground, frozenset())

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def members(self) -> tuple[SignVector, ...]:
        return tuple(SignVector(self.ground, b) for b in sorted(self.bits))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.bits)

    def __contains__(self, v) -> bool:
        try:
            return _full_key(v, self.ground) in self.bits
        except ValueError:
            return False

    def __eq__(self, other):
        if not isinstance(other, SignFamily):
            return NotImplemented
        return self.ground == other.ground and self.bits == other.bits

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ground, self.bits))
        return self._hash

    def strings(self) -> list[str]:
        return [format_full(b, self.n) for b in sorted(self.bits)]

    def __repr__(self):
        return f"SignFamily(n={self.n}, {self.strings()})"


class PartialFamily:
    """A finite set J of partial sign vectors over one ground set."""

    __slots__ = ("ground", "keys", "_hash")

    def __init__(self, ground: GroundSet, members: Iterable = ()):
        self.ground = ground
        keys = frozenset(_partial_key(m, ground) for m in members)
        full = ground.full_mask
        for support, signs in keys:
            if support < 0 or support & ~full or signs & ~support:
                raise ValueError(f"partial vector {(support, signs)} not canonical for n={ground.n}")
        self.keys = keys
        self._hash = None

    @classmethod
    def _raw(cls, ground: GroundSet, keys: frozenset) -> "PartialFamily":
        fam = cls.__new__(cls)
        fam.ground = ground
        fam.keys = keys
        fam._hash = None
        return fam

    @classmethod
    def from_strings(cls, lines: Iterable[str], n: int | None = None) -> "PartialFamily":
        lines = [l.strip() for l in lines]
        if n is None:
            n = 0 if not lines or lines[0] == EMPTY_TOKEN else len(lines[0])
        return cls._raw(GroundSet(n), frozenset(parse_partial(l, n) for l in lines))

    @classmethod
    def from_sign_family(cls, fam: SignFamily) -> "PartialFamily":
        full = fam.ground.full_mask
        return cls._raw(fam.ground, frozenset((full, b) for b in fam.bits))

    @classmethod
    def everything(cls, ground: GroundSet | int) -> "PartialFamily":
        """All of {+-1, 0}^E."""
        if isinstance(ground, int):
            ground = GroundSet(ground)
        full = ground.full_mask
        return cls._raw(ground, frozenset((s, g) for s in submasks(full) for g in submasks(s)))

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def members(self) -> tuple[PartialSignVector, ...]:
        return tuple(PartialSignVector(self.ground, s, g) for s, g in sorted(self.keys))

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.keys)

    def __contains__(self, v) -> bool:
        try:
            return _partial_key(v, self.ground) in self.keys
        except ValueError:
            return False

    def __eq__(self, other):
        if not isinstance(other, PartialFamily):
            return NotImplemented
        return self.ground == other.ground and self.keys == other.keys

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ground, self.keys))
        return self._hash

    def full_part(self) -> SignFamily:
        """J intersected with {+-1}^E."""
        full = self.ground.full_mask
        return SignFamily._raw(self.ground, frozenset(g for s, g in self.keys if s == full))

    def strings(self) -> list[str]:
        return [format_partial(s, g, self.n) for s, g in sorted(self.keys)]

    def __repr__(self):
        return f"PartialFamily(n={self.n}, {self.strings()})"


# --- operations -------------------------------------------------------------

def l1_distance(s: SignVector, t: SignVector) -> int:
    _check_same_ground(s.ground, t.ground)
    return 2 * popcount(s.signs ^ t.signs)


def _l1_keys(a: tuple[int, int], b: tuple[int, int]) -> int:
    sa, ga = a
    sb, gb = b
    both = sa & sb
    opposite = both & (ga ^ gb)
    one_sided = sa ^ sb
    return 2 * popcount(opposite) + popcount(one_sided)


def l1_distance_partial(t: PartialSignVector, u: PartialSignVector) -> int:
    _check_same_ground(t.ground, u.ground)
    return _l1_keys(t.key, u.key)


def _precedes_keys(a: tuple[int, int], b: tuple[int, int]) -> bool:
    sa, ga = a
    sb, gb = b
    return sa & ~sb == 0 and (gb & sa) == ga


def precedes(t: PartialSignVector, u: PartialSignVector) -> bool:
    """t < u in the sign order: t(e) is 0 or equals u(e) everywhere."""
    _check_same_ground(t.ground, u.ground)
    return _precedes_keys(t.key, u.key)


def _up_keys(keys: Iterable[tuple[int, int]], n: int) -> frozenset:
    full = (1 << n) - 1
    out = set()
    for support, signs in keys:
        zeros = full & ~support
        for extra in submasks(zeros):
            for plus in submasks(extra):
                out.add((support | extra, signs | plus))
    return frozenset(out)


def upward_closure(J: PartialFamily) -> PartialFamily:
    return PartialFamily._raw(J.ground, _up_keys(J.keys, J.n))


def _minima_keys(keys: frozenset) -> frozenset:
    out = []
    size = len(keys)
    for support, signs in keys:
        minimal = True
        if (1 << popcount(support)) <= size:
            for sub in submasks(support):
                if sub != support and (sub, signs & sub) in keys:
                    minimal = False
                    break
        else:
            for other in keys:
                if other[0] != support and other[0] & ~support == 0 and signs & other[0] == other[1]:
                    minimal = False
                    break
        if minimal:
            out.append((support, signs))
    return frozenset(out)


def minima(J: PartialFamily) -> PartialFamily:
    return PartialFamily._raw(J.ground, _minima_keys(J.keys))


def complement(L: SignFamily) -> SignFamily:
    return SignFamily._raw(L.ground, frozenset(range(1 << L.n)) - L.bits)


def is_upward_closed(J: PartialFamily) -> bool:
    keys = J.keys
    full = J.ground.full_mask
    for support, signs in keys:
        for e in iter_bits(full & ~support):
            bit = 1 << e
            if (support | bit, signs) not in keys or (support | bit, signs | bit) not in keys:
                return False
    return True


# --- text format ------------------------------------------------------------

def _parse_lines(text: str, partial: bool):
    n = None
    declared = None
    items = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _DIRECTIVE.match(line)
            if m:
                declared = int(m.group(1))
                if n is not None and n != declared:
                    raise FormatError(f"declared n={declared} but vectors have length {n}", lineno)
                n = declared
            continue
        length = 0 if line == EMPTY_TOKEN else len(line)
        if n is None:
            n = length
        if partial:
            items.append(parse_partial(line, n, lineno))
        else:
            items.append(parse_full(line, n, lineno))
    if n is None:
        n = 0
    if n > MAX_N:
        raise FormatError(f"vector length {n} exceeds the cap of {MAX_N}")
    return GroundSet(n), items


def parse_family(text: str) -> SignFamily:
    """Parse a family file.  ``# n: <int>`` may declare n (needed for empty files)."""
    ground, items = _parse_lines(text, partial=False)
    return SignFamily._raw(ground, frozenset(items))


def parse_partial_family(text: str) -> PartialFamily:
    ground, items = _parse_lines(text, partial=True)
    return PartialFamily._raw(ground, frozenset(items))


def format_family(fam: SignFamily | PartialFamily) -> str:
    lines = [f"# n: {fam.n}"]
    lines.extend(fam.strings())
    return "\n".join(lines) + "\n"
