"""Tropical Plücker functions on the Boolean cube and abstract 3-flips."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .sets import (
    Collection,
    PluckerError,
    bit,
    elements_of,
    fmt,
    size,
    standard,
)

RAISING = "raising"
LOWERING = "lowering"


@dataclass(frozen=True, order=True)
class FlipCortege3:
    X: int
    i: int
    j: int
    k: int
    direction: str = RAISING
    strong: bool = False

    def sets(self) -> dict[str, int]:
        x, bi, bj, bk = self.X, bit(self.i), bit(self.j), bit(self.k)
        return {
            "X": x, "Xi": x | bi, "Xj": x | bj, "Xk": x | bk,
            "Xij": x | bi | bj, "Xik": x | bi | bk, "Xjk": x | bj | bk,
            "Xijk": x | bi | bj | bk,
        }

    def to_json(self) -> dict:
        return {"X": elements_of(self.X), "i": self.i, "j": self.j, "k": self.k,
                "direction": self.direction, "strength": "strong" if self.strong else "weak"}

    def __str__(self) -> str:
        return f"({fmt(self.X)};{self.i},{self.j},{self.k}) {self.direction}"


def corteges(n: int) -> Iterator[tuple[int, int, int, int]]:
    """All (X, i, j, k) with i<j<k outside X, ordered by (X, i, j, k)."""
    for x in range(1 << n):
        free = [e for e in range(1, n + 1) if not x & bit(e)]
        for a in range(len(free)):
            for b in range(a + 1, len(free)):
                for c in range(b + 1, len(free)):
                    yield x, free[a], free[b], free[c]


class TPFunction:
    """Integer-valued function on all subsets of [n]."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[int, int]):
        if len(values) != 1 << n:
            raise PluckerError("partial-function", f"{len(values)} of {1 << n} values given")
        self.n = n
        self.values = dict(values)

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, TPFunction) and self.n == other.n and self.values == other.values

    def restrict(self, c: Collection) -> dict[int, int]:
        return {x: self.values[x] for x in c}

    def to_json(self) -> dict:
        order = sorted(self.values, key=lambda m: (size(m), m))
        return {"n": self.n, "values": [[elements_of(x), self.values[x]] for x in order]}

    def violations(self) -> list[tuple[int, int, int, int]]:
        return [c for c in corteges(self.n) if not p3_holds(self, *c)]


def _p3(f, x: int, i: int, j: int, k: int) -> bool:
    bi, bj, bk = bit(i), bit(j), bit(k)
    return f[x | bi | bk] + f[x | bj] == max(f[x | bi | bj] + f[x | bk], f[x | bi] + f[x | bj | bk])


def p3_holds(f: TPFunction, x: int, i: int, j: int, k: int) -> bool:
    if not i < j < k:
        raise PluckerError("bad-cortege", "need i<j<k")
    if x & (bit(i) | bit(j) | bit(k)):
        raise PluckerError("index-overlap", f"{i},{j},{k} meet {fmt(x)}")
    return _p3(f.values, x, i, j, k)


def extend_from_intervals(n: int, values: Mapping[int, int]) -> TPFunction:
    base = standard(n)
    if set(values) != set(base.members):
        raise PluckerError("bad-domain", "values must be given on exactly the intervals")
    known = dict(values)
    pending = list(corteges(n))
    while len(known) < 1 << n:
        progress = False
        rest = []
        for x, i, j, k in pending:
            bi, bj, bk = bit(i), bit(j), bit(k)
            xik, xj = x | bi | bk, x | bj
            rhs_sets = (x | bi | bj, x | bk, x | bi, x | bj | bk)
            if not all(s in known for s in rhs_sets):
                rest.append((x, i, j, k))
                continue
            rhs = max(known[rhs_sets[0]] + known[rhs_sets[1]], known[rhs_sets[2]] + known[rhs_sets[3]])
            if xik in known and xj in known:
                continue
            if xj in known:
                known[xik] = rhs - known[xj]
                progress = True
            elif xik in known:
                known[xj] = rhs - known[xik]
                progress = True
            else:
                rest.append((x, i, j, k))
        pending = rest
        if not progress:
            missing = [elements_of(m) for m in range(1 << n) if m not in known]
            raise PluckerError("stuck", "no solvable relation remains", missing=missing)
    f = TPFunction(n, known)
    bad = f.violations()
    if bad:
        raise PluckerError("inconsistent", f"relation fails at {bad[0]}")
    return f


def find_3flips(b: Collection) -> list[FlipCortege3]:
    ms = b.members
    out = []
    for x, i, j, k in corteges(b.n):
        bi, bj, bk = bit(i), bit(j), bit(k)
        if not (x | bi in ms and x | bk in ms and x | bi | bj in ms and x | bj | bk in ms):
            continue
        has_j, has_ik = (x | bj) in ms, (x | bi | bk) in ms
        if has_j == has_ik:
            continue
        strong = x in ms and (x | bi | bj | bk) in ms
        out.append(FlipCortege3(x, i, j, k, LOWERING if has_ik else RAISING, strong))
    return out


def apply_3flip(b: Collection, c: FlipCortege3) -> Collection:
    s = c.sets()
    ms = b.members
    if not all(s[w] in ms for w in ("Xi", "Xk", "Xij", "Xjk")):
        raise PluckerError("invalid-cortege", f"witnesses of {c} missing")
    if c.direction == LOWERING:
        old, new = s["Xik"], s["Xj"]
    else:
        old, new = s["Xj"], s["Xik"]
    if old not in ms or new in ms:
        raise PluckerError("invalid-cortege", f"{c} does not apply")
    return b.replace(old, new)


def size_sum(b: Collection) -> int:
    return sum(size(x) for x in b)


def descend_to_standard(b: Collection) -> list[FlipCortege3]:
    target = standard(b.n)
    seq = []
    cur = b
    while cur != target:
        lowering = [c for c in find_3flips(cur) if c.direction == LOWERING]
        if not lowering:
            raise PluckerError("stuck-not-standard", "no lowering flip applies",
                               at=[elements_of(m) for m in cur])
        seq.append(lowering[0])
        cur = apply_3flip(cur, lowering[0])
    return seq


def reverse_cortege(c: FlipCortege3) -> FlipCortege3:
    return FlipCortege3(c.X, c.i, c.j, c.k, RAISING if c.direction == LOWERING else LOWERING, c.strong)


def replay_backward(target: Collection, seq: list[FlipCortege3]) -> Collection:
    cur = target
    for c in reversed(seq):
        cur = apply_3flip(cur, reverse_cortege(c))
    return cur


def extend_from_basis(b: Collection, values: Mapping[int, int]) -> TPFunction:
    if set(values) != set(b.members):
        raise PluckerError("bad-domain", "values must be given on exactly the basis")
    known = dict(values)
    cur = b
    for c in descend_to_standard(b):
        s = c.sets()
        known[s["Xj"]] = max(known[s["Xij"]] + known[s["Xk"]], known[s["Xi"]] + known[s["Xjk"]]) - known[s["Xik"]]
        cur = apply_3flip(cur, c)
    f = extend_from_intervals(b.n, {x: known[x] for x in cur})
    for x, v in values.items():
        if f(x) != v:
            raise PluckerError("restriction-mismatch", f"value at {fmt(x)} changed")
    return f


def is_semi_normal(b: Collection) -> bool:
    try:
        descend_to_standard(b)
    except PluckerError:
        return False
    return True


def interval_values(n: int, rng, lo: int = -5, hi: int = 5) -> dict[int, int]:
    return {x: rng.randint(lo, hi) for x in standard(n)}


def modular(n: int, weights: Mapping[int, int]) -> TPFunction:
    return TPFunction(n, {x: sum(weights[e] for e in elements_of(x)) for x in range(1 << n)})


__all__ = [
    "FlipCortege3", "TPFunction", "RAISING", "LOWERING", "corteges", "p3_holds",
    "extend_from_intervals", "find_3flips", "apply_3flip", "descend_to_standard",
    "extend_from_basis", "reverse_cortege", "replay_backward", "size_sum", "is_semi_normal",
    "interval_values", "modular",
]
