"""Subsets of [n] as bitmasks, separation predicates and the projection calculus."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

MAX_N = 32


class PluckerError(ValueError):
    """Raised with a short machine-readable ``code`` and a human message."""

    def __init__(self, code: str, message: str = "", **detail):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message
        self.detail = detail

    def as_dict(self) -> dict:
        out = {"error": self.code, "message": self.message}
        out.update(self.detail)
        return out


def check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0 or n > MAX_N:
        raise PluckerError("bad-ground-size", f"ground size {n} outside [0..{MAX_N}]")


# ---- bitmask arithmetic -------------------------------------------------

def bit(i: int) -> int:
    return 1 << (i - 1)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def size(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


def highest(mask: int) -> int:
    return mask.bit_length()


def full(n: int) -> int:
    return (1 << n) - 1


def interval(p: int, q: int) -> int:
    """[p..q] as a mask; empty when q < p."""
    if q < p:
        return 0
    return ((1 << q) - 1) ^ ((1 << (p - 1)) - 1)


def is_interval(mask: int) -> bool:
    if mask == 0:
        return True
    shifted = mask >> (lowest(mask) - 1)
    return shifted & (shifted + 1) == 0


def set_key(mask: int) -> tuple[int, int]:
    """Canonical order: by size, then colex (colex equals numeric order of masks)."""
    return (size(mask), mask)


def fmt(mask: int) -> str:
    if mask == 0:
        return "-"
    els = elements_of(mask)
    if els[-1] <= 9:
        return "".join(map(str, els))
    return "{" + ",".join(map(str, els)) + "}"


def prec_mask(a: int, b: int) -> bool:
    only_a = a & ~b
    only_b = b & ~a
    if not only_b:
        return False
    return only_a == 0 or highest(only_a) < lowest(only_b)


def rhd_mask(a: int, b: int) -> bool:
    only_a = a & ~b
    only_b = b & ~a
    if not only_a or not only_b:
        return False
    lo, hi = lowest(only_a), highest(only_a)
    below = only_b & ((1 << (lo - 1)) - 1)
    above = only_b >> hi
    if not below or not above:
        return False
    return (below | (above << hi)) == only_b


def ws_mask(a: int, b: int) -> bool:
    if prec_mask(a, b) or prec_mask(b, a):
        return True
    sa, sb = size(a), size(b)
    return (rhd_mask(a, b) and sa >= sb) or (rhd_mask(b, a) and sb >= sa)


def strong_mask(a: int, b: int) -> bool:
    return prec_mask(a, b) or prec_mask(b, a)


# ---- value types ---------------------------------------------------------

@dataclass(frozen=True, order=False)
class SubsetN:
    n: int
    mask: int

    def __post_init__(self):
        check_n(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise PluckerError("bad-element", f"mask {self.mask:#x} not inside [1..{self.n}]")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> "SubsetN":
        els = list(elements)
        if len(set(els)) != len(els):
            raise PluckerError("duplicate-element", f"{els}")
        for e in els:
            if not 1 <= e <= n:
                raise PluckerError("bad-element", f"{e} not in [1..{n}]")
        return cls(n, mask_of(els))

    @property
    def elements(self) -> list[int]:
        return elements_of(self.mask)

    def __len__(self) -> int:
        return size(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask & bit(i))

    def __str__(self) -> str:
        return fmt(self.mask)


def _same_ground(x: SubsetN, y: SubsetN) -> None:
    if x.n != y.n:
        raise PluckerError("ground-size-mismatch", f"{x.n} vs {y.n}")


def prec(x: SubsetN, y: SubsetN) -> bool:
    _same_ground(x, y)
    return prec_mask(x.mask, y.mask)


def rhd(x: SubsetN, y: SubsetN) -> bool:
    _same_ground(x, y)
    return rhd_mask(x.mask, y.mask)


def weakly_separated(x: SubsetN, y: SubsetN) -> bool:
    _same_ground(x, y)
    return ws_mask(x.mask, y.mask)


def strongly_separated(x: SubsetN, y: SubsetN) -> bool:
    _same_ground(x, y)
    return strong_mask(x.mask, y.mask)


class Collection:
    """An immutable family of subsets of [n], stored as bitmasks."""

    __slots__ = ("n", "members", "_sorted")

    def __init__(self, n: int, members: Iterable[int] = ()):
        check_n(n)
        ms = frozenset(members)
        top = full(n)
        for m in ms:
            if m < 0 or m & ~top:
                raise PluckerError("bad-element", f"set {m:#x} not inside [1..{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", ms)
        object.__setattr__(self, "_sorted", tuple(sorted(ms, key=set_key)))

    def __setattr__(self, key, value):
        raise AttributeError("Collection is immutable")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Collection":
        masks = [SubsetN.of(n, s).mask for s in sets]
        if len(set(masks)) != len(masks):
            raise PluckerError("duplicate-member", "collection lists a set twice")
        return cls(n, masks)

    @classmethod
    def parse(cls, n: int, text: str) -> "Collection":
        """Digit-string shorthand separated by whitespace or commas; '-' is the empty set."""
        sets = []
        for tok in text.replace(",", " ").split():
            sets.append([] if tok in ("-", "0", "∅") else [int(c) for c in tok])
        return cls.from_sets(n, sets)

    def __iter__(self) -> Iterator[int]:
        return iter(self._sorted)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask) -> bool:
        if isinstance(mask, SubsetN):
            return mask.n == self.n and mask.mask in self.members
        return mask in self.members

    def __eq__(self, other) -> bool:
        return isinstance(other, Collection) and self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.n, self.members))

    def __repr__(self) -> str:
        return f"Collection({self.n}, [{' '.join(fmt(m) for m in self._sorted)}])"

    def subsets(self) -> list[SubsetN]:
        return [SubsetN(self.n, m) for m in self._sorted]

    def replace(self, old: int, new: int) -> "Collection":
        return Collection(self.n, (self.members - {old}) | {new})

    def to_json(self) -> dict:
        return {"n": self.n, "sets": [elements_of(m) for m in self._sorted]}

    def digest(self) -> str:
        payload = json.dumps(self.to_json(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()


def standard(n: int) -> Collection:
    """I_n: all intervals of [n], including the empty set."""
    return Collection(n, [0] + [interval(p, q) for p in range(1, n + 1) for q in range(p, n + 1)])


def co_standard(n: int) -> Collection:
    top = full(n)
    return Collection(n, [top ^ m for m in standard(n)])


def largest_size(n: int) -> int:
    return comb(n + 1, 2) + 1


def is_ws_collection(c: Collection) -> bool:
    ms = list(c)
    for a_idx, a in enumerate(ms):
        for b in ms[a_idx + 1:]:
            if not ws_mask(a, b):
                return False
    return True


def is_largest_ws(c: Collection) -> bool:
    return len(c) == largest_size(c.n) and is_ws_collection(c)


# ---- projection and separators ----------------------------------------------

@dataclass(frozen=True)
class Projection:
    cprime: Collection
    m: Collection
    nn: Collection
    s: Collection


@dataclass(frozen=True)
class SeparatorChain:
    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        if len(self.sets) != self.n:
            raise PluckerError("bad-separator", f"expected {self.n} sets")
        for h, s in enumerate(self.sets):
            if size(s) != h or s >> (self.n - 1):
                raise PluckerError("bad-separator", f"S_{h} = {fmt(s)} has wrong size or range")
        for a, b in zip(self.sets, self.sets[1:]):
            if not prec_mask(a, b):
                raise PluckerError("bad-separator", f"{fmt(a)} does not precede {fmt(b)}")

    def __str__(self) -> str:
        return "(" + ", ".join(fmt(s) for s in self.sets) + ")"


def project(c: Collection) -> Projection:
    n = c.n
    if n < 2:
        raise PluckerError("bad-ground-size", "projection needs n >= 2")
    nb = bit(n)
    low = full(n - 1)
    cprime = {x & low for x in c.members}
    m = {x for x in cprime if x in c.members and (x | nb) not in c.members}
    nn = {x for x in cprime if x not in c.members and (x | nb) in c.members}
    s = {x for x in cprime if x in c.members and (x | nb) in c.members}
    return Projection(Collection(n - 1, cprime), Collection(n - 1, m), Collection(n - 1, nn), Collection(n - 1, s))


def separator(c: Collection) -> SeparatorChain:
    proj = project(c)
    by_size: dict[int, list[int]] = {}
    for x in proj.s:
        by_size.setdefault(size(x), []).append(x)
    chain = []
    for h in range(c.n):
        found = by_size.get(h, [])
        if len(found) != 1:
            raise PluckerError("not-largest-ws", f"level {h} of the separator has {len(found)} sets")
        chain.append(found[0])
    try:
        return SeparatorChain(c.n, tuple(chain))
    except PluckerError as exc:
        raise PluckerError("not-largest-ws", exc.message) from None


def restore_from_projection(cprime: Collection, sep: SeparatorChain) -> Collection:
    n = cprime.n + 1
    if sep.n != n:
        raise PluckerError("ground-size-mismatch", f"separator for n={sep.n}, projection for n={n}")
    nb = bit(n)
    chain = set(sep.sets)
    out = set()
    for s in sep.sets:
        if s not in cprime:
            raise PluckerError("separator-not-in-projection", fmt(s))
        out.add(s)
        out.add(s | nb)
    for x in cprime:
        if x in chain:
            continue
        s = sep.sets[size(x)] if size(x) < n else None
        if s is not None and prec_mask(x, s):
            out.add(x)
        elif s is not None and prec_mask(s, x):
            out.add(x | nb)
        else:
            raise PluckerError("incomparable-member", f"{fmt(x)} vs separator level", set=elements_of(x))
    return Collection(n, out)


def intervals_above(n: int, m: int) -> list[int]:
    return [interval(p, p + s - 1) for s in range(m + 1, n + 1) for p in range(1, n - s + 2)]


def co_intervals_below(n: int, m: int) -> list[int]:
    top = full(n)
    return [top ^ interval(p, p + (n - s) - 1) for s in range(0, m) for p in range(1, s + 2)]


def straight_extension(c: Collection, mlo: int, mhi: int) -> Collection:
    for x in c:
        if not mlo <= size(x) <= mhi:
            raise PluckerError("member-out-of-band", f"{fmt(x)} not in sizes [{mlo}..{mhi}]")
    return Collection(c.n, set(c.members) | set(intervals_above(c.n, mhi)) | set(co_intervals_below(c.n, mlo)))
