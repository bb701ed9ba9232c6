"""Bases and weakly separated collections in hypersimplices and truncated cubes."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping

from .sets import (
    Collection,
    PluckerError,
    bit,
    elements_of,
    fmt,
    interval,
    is_interval,
    is_ws_collection,
    largest_size,
    size,
)
from .tropical import LOWERING, RAISING, apply_3flip, find_3flips


class HSCollection(Collection):
    """A collection of m-element subsets of [n]."""

    __slots__ = ("m",)

    def __init__(self, n: int, m: int, members: Iterable[int] = ()):
        super().__init__(n, members)
        for x in self.members:
            if size(x) != m:
                raise PluckerError("non-uniform", f"{fmt(x)} does not have size {m}")
        object.__setattr__(self, "m", m)

    def replace(self, old: int, new: int) -> "HSCollection":
        return HSCollection(self.n, self.m, (self.members - {old}) | {new})

    def to_json(self) -> dict:
        out = super().to_json()
        out["m"] = self.m
        return out

    def __repr__(self) -> str:
        return f"HSCollection({self.n}, {self.m}, [{' '.join(fmt(x) for x in self)}])"


def hs_size(n: int, m: int) -> int:
    return m * (n - m) + 1


def _check_nm(n: int, m: int) -> None:
    if not 0 <= m <= n:
        raise PluckerError("bad-level", f"need 0 <= m <= n, got m={m}, n={n}")


def standard_basis(n: int, m: int) -> HSCollection:
    _check_nm(n, m)
    out = {interval(p, p + m - 1) for p in range(1, n - m + 2)}
    for p in range(1, m):
        length = m - p
        for q in range(p + 2, n - length + 2):
            out.add(interval(1, p) | interval(q, q + length - 1))
    b = HSCollection(n, m, out)
    assert len(b) == hs_size(n, m)
    return b


def co_standard_basis(n: int, m: int) -> HSCollection:
    _check_nm(n, m)
    out = {interval(p, p + m - 1) for p in range(1, n - m + 2)}
    for s in range(1, m):
        r = n - s + 1
        length = m - s
        for p in range(1, r - length):
            out.add(interval(p, p + length - 1) | interval(r, n))
    b = HSCollection(n, m, out)
    assert len(b) == hs_size(n, m)
    return b


def p4_holds(f, x: int, i: int, j: int, k: int, l: int) -> bool:
    if not i < j < k < l:
        raise PluckerError("bad-cortege", "need i<j<k<l")
    if x & (bit(i) | bit(j) | bit(k) | bit(l)):
        raise PluckerError("index-overlap", f"indices meet {fmt(x)}")
    v = f if isinstance(f, Mapping) else f.values
    bi, bj, bk, bl = bit(i), bit(j), bit(k), bit(l)
    return v[x | bi | bk] + v[x | bj | bl] == max(v[x | bi | bj] + v[x | bk | bl], v[x | bi | bl] + v[x | bj | bk])


@dataclass(frozen=True, order=True)
class FlipCortege4:
    X: int
    i: int
    j: int
    k: int
    l: int
    direction: str = RAISING

    def pair(self) -> tuple[int, int]:
        """(Xik, Xjl)."""
        x = self.X
        return x | bit(self.i) | bit(self.k), x | bit(self.j) | bit(self.l)

    def witnesses(self) -> tuple[int, ...]:
        x, bi, bj, bk, bl = self.X, bit(self.i), bit(self.j), bit(self.k), bit(self.l)
        return (x | bi | bj, x | bk | bl, x | bi | bl, x | bj | bk)

    def to_json(self) -> dict:
        return {"X": elements_of(self.X), "i": self.i, "j": self.j, "k": self.k, "l": self.l,
                "direction": self.direction}

    def __str__(self) -> str:
        return f"({fmt(self.X)};{self.i},{self.j},{self.k},{self.l}) {self.direction}"


def corteges4(n: int, m: int) -> Iterator[tuple[int, int, int, int, int]]:
    for x in range(1 << n):
        if size(x) != m - 2:
            continue
        free = [e for e in range(1, n + 1) if not x & bit(e)]
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                for c in range(b + 1, len(free)):
                    for d in range(c + 1, len(free)):
                        yield x, free[a], free[b], free[c], free[d]


def find_4flips(b: Collection, m: int | None = None) -> list[FlipCortege4]:
    if m is None:
        m = b.m
    ms = b.members
    out = []
    for x, i, j, k, l in corteges4(b.n, m):
        c = FlipCortege4(x, i, j, k, l)
        if not all(w in ms for w in c.witnesses()):
            continue
        xik, xjl = c.pair()
        if (xik in ms) == (xjl in ms):
            continue
        out.append(FlipCortege4(x, i, j, k, l, LOWERING if xjl in ms else RAISING))
    return out


def apply_4flip(b: Collection, c: FlipCortege4) -> Collection:
    ms = b.members
    if not all(w in ms for w in c.witnesses()):
        raise PluckerError("invalid-cortege", f"witnesses of {c} missing")
    xik, xjl = c.pair()
    old, new = (xjl, xik) if c.direction == LOWERING else (xik, xjl)
    if old not in ms or new in ms:
        raise PluckerError("invalid-cortege", f"{c} does not apply")
    return b.replace(old, new)


def eta(b: Iterable[int]) -> int:
    return sum(sum(elements_of(x)) for x in b)


def descend_hs(b: HSCollection) -> list[FlipCortege4]:
    n, m = b.n, b.m
    if len(b) != hs_size(n, m) or not is_ws_collection(b):
        raise PluckerError("not-largest-ws", f"not a largest weakly separated collection in level {m}")
    target = standard_basis(n, m)
    seq = []
    cur = b
    while cur != target:
        lowering = [c for c in find_4flips(cur) if c.direction == LOWERING]
        if not lowering:
            raise PluckerError("stuck-not-standard", "no lowering 4-flip applies",
                               at=[elements_of(x) for x in cur])
        before = eta(cur)
        cur = apply_4flip(cur, lowering[0])
        if eta(cur) >= before:
            raise PluckerError("eta-not-decreasing", str(lowering[0]))
        seq.append(lowering[0])
    return seq


def embed_delta(b: Collection, nprime: int) -> HSCollection:
    n = b.n
    if nprime < n:
        raise PluckerError("bad-embedding", "need n' >= n")
    total = n + nprime
    extra = {interval(q - n + 1, q) for q in range(n + 1, total)}
    for q in range(n + 1, total + 1):
        for r in range(q + 2, total + 1):
            tail = total - r + 1
            head = n - tail
            if head >= 1 and q - head + 1 >= 1:
                extra.add(interval(q - head + 1, q) | interval(r, total))
    lifted = {x | interval(nprime + size(x) + 1, total) for x in b}
    out = HSCollection(total, n, extra | lifted)
    if len(out) != hs_size(total, n):
        raise PluckerError("bad-embedding", f"size {len(out)} != {hs_size(total, n)}")
    descend_hs(out)
    return out


# ---- truncated cube -----------------------------------------------------------------

def truncated_size(n: int, mlo: int, mhi: int) -> int:
    return largest_size(n) - comb(n - mhi + 1, 2) - comb(mlo + 1, 2)


def truncated_standard(n: int, mlo: int, mhi: int) -> Collection:
    if not 0 <= mlo <= mhi <= n:
        raise PluckerError("bad-band", f"need 0 <= {mlo} <= {mhi} <= {n}")
    out = set(standard_basis(n, mlo).members)
    for s in range(mlo, mhi + 1):
        out.update(interval(p, p + s - 1) for p in range(1, n - s + 2))
    c = Collection(n, out)
    assert len(c) == truncated_size(n, mlo, mhi)
    return c


def in_band(c: Collection, mlo: int, mhi: int) -> bool:
    return all(mlo <= size(x) <= mhi for x in c)


def descend_truncated(c: Collection, mlo: int, mhi: int):
    if not in_band(c, mlo, mhi):
        raise PluckerError("member-out-of-band", f"sizes must lie in [{mlo}..{mhi}]")
    if len(c) != truncated_size(c.n, mlo, mhi) or not is_ws_collection(c):
        raise PluckerError("not-largest-ws", "not a largest weakly separated collection in the band")
    three = []
    cur = c
    while True:
        lowering = [f for f in find_3flips(cur) if f.direction == LOWERING]
        if not lowering:
            break
        three.append(lowering[0])
        cur = apply_3flip(cur, lowering[0])
    above = [x for x in cur if size(x) > mlo]
    if not all(is_interval(x) for x in above):
        raise PluckerError("stuck-not-standard", "sets above the lowest level are not all intervals")
    bottom = HSCollection(c.n, mlo, [x for x in cur if size(x) == mlo])
    four = descend_hs(bottom)
    for f in four:
        cur = apply_4flip(cur, f)
    if cur != truncated_standard(c.n, mlo, mhi):
        raise PluckerError("stuck-not-standard", "descent ended away from the truncated standard basis")
    return three, four
