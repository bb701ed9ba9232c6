"""Brute-force oracles, flip orbits and the cross-validation of the four characterizations."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .hypersimplex import HSCollection, apply_4flip, find_4flips
from .sets import Collection, PluckerError, full, largest_size, size, ws_mask
from .surgery import expand, legal_paths
from .tiling import GTiling, from_spectrum, validate
from .tropical import apply_3flip, find_3flips
from .wiring import spectrum as wiring_spectrum
from .wiring import tiling_to_wiring, validate_wiring

CUBE_ORACLE_MAX = 6
EQUIVALENCE_MAX = 5


# ---- clique oracle ------------------------------------------------------------

def maximum_ws_families(n: int, candidates: Iterable[int], seeds: Iterable[int] = ()) -> tuple[int, list[frozenset[int]]]:
    """All maximum-size pairwise weakly separated families among the candidate sets.

    Seeds must be weakly separated from every candidate; they are included in each family.
    """
    seeds = sorted(set(seeds))
    verts = sorted(set(candidates) - set(seeds), key=lambda m: (size(m), m))
    for s in seeds:
        if not all(ws_mask(s, v) for v in verts if v != s):
            raise PluckerError("bad-seed", f"seed {s} is not separated from every candidate")
    k = len(verts)
    adj = [0] * k
    for a in range(k):
        for b in range(a + 1, k):
            if ws_mask(verts[a], verts[b]):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    best = [0]
    found: list[int] = []

    def grow(chosen: int, count: int, cand: int):
        if cand == 0:
            if count > best[0]:
                best[0] = count
                found.clear()
            if count == best[0]:
                found.append(chosen)
            return
        while cand:
            if count + bin(cand).count("1") < best[0]:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            grow(chosen | (1 << v), count + 1, cand & adj[v])

    grow(0, 0, (1 << k) - 1)
    fams = []
    for chosen in found:
        fam = set(seeds)
        fam.update(verts[b] for b in range(k) if chosen >> b & 1)
        fams.append(frozenset(fam))
    return best[0] + len(seeds), fams


def oracle_largest_ws(n: int, force: bool = False) -> set[Collection]:
    if n < 1 or (n > CUBE_ORACLE_MAX and not force):
        raise PluckerError("size-guard", f"cube oracle limited to 1 <= n <= {CUBE_ORACLE_MAX}")
    top = full(n)
    seeds = [0, top] if n else [0]
    best, fams = maximum_ws_families(n, range(1 << n), seeds)
    if best != largest_size(n):
        raise PluckerError("oracle-mismatch", f"maximum family size {best} != {largest_size(n)}")
    return {Collection(n, f) for f in fams}


def oracle_largest_ws_band(n: int, mlo: int, mhi: int) -> tuple[int, set[Collection]]:
    cands = [x for x in range(1 << n) if mlo <= size(x) <= mhi]
    best, fams = maximum_ws_families(n, cands)
    if mlo == mhi:
        return best, {HSCollection(n, mlo, f) for f in fams}
    return best, {Collection(n, f) for f in fams}


# ---- orbits -------------------------------------------------------------------

def neighbours_3(b: Collection) -> list[Collection]:
    return [apply_3flip(b, c) for c in find_3flips(b)]


def neighbours_4(b: Collection, m: int) -> list[Collection]:
    return [apply_4flip(b, c) for c in find_4flips(b, m)]


@dataclass
class OrbitReport:
    n: int
    kind: str
    band: tuple[int, int] | None
    members: list[Collection]
    edges: int
    diameter: int
    manifest: list[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.members)

    def summary(self) -> dict:
        return {"n": self.n, "kind": self.kind, "band": list(self.band) if self.band else None,
                "members": self.count, "edges": self.edges, "diameter": self.diameter}


def flip_orbit(start: Collection, kind: str = "3flip") -> OrbitReport:
    sizes = {size(x) for x in start}
    lo = min(sizes) if sizes else 0
    if kind == "3flip":
        step: Callable[[Collection], list[Collection]] = neighbours_3
    elif kind == "4flip":
        step = lambda b: neighbours_4(b, lo)  # noqa: E731
    elif kind == "both":
        step = lambda b: neighbours_3(b) + neighbours_4(b, lo)  # noqa: E731
    else:
        raise PluckerError("bad-kind", kind)
    index = {start: 0}
    order = [start]
    pairs = set()
    queue = deque([start])
    while queue:
        b = queue.popleft()
        for nb in step(b):
            if len(nb) != len(b):
                raise PluckerError("size-changed", "a flip changed the collection size")
            if nb not in index:
                index[nb] = len(order)
                order.append(nb)
                queue.append(nb)
            a, c = index[b], index[nb]
            pairs.add((min(a, c), max(a, c)))
    members = sorted(order, key=lambda c: c.digest())
    band = (lo, max(sizes)) if kind != "3flip" and sizes else None
    return OrbitReport(start.n, kind, band, members, len(pairs), _diameter(len(order), pairs),
                       [c.digest() for c in members])


def _diameter(count: int, pairs: set[tuple[int, int]]) -> int:
    if count <= 1:
        return 0
    rows = [a for a, _ in pairs] + [b for _, b in pairs]
    cols = [b for _, b in pairs] + [a for a, _ in pairs]
    g = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(count, count))
    dist = shortest_path(g, method="D", unweighted=True, directed=False)
    if np.isinf(dist).any():
        raise PluckerError("disconnected", "flip graph is not connected")
    return int(dist.max())


# ---- manifests and cache -------------------------------------------------------

def manifest(collections: Iterable[Collection]) -> list[str]:
    return sorted(c.digest() for c in collections)


def manifest_lines(collections: Iterable[Collection]) -> str:
    rows = sorted(((c.digest(), c) for c in collections), key=lambda r: r[0])
    return "".join(json.dumps({"digest": d, **c.to_json()}, separators=(",", ":")) + "\n" for d, c in rows)


def read_manifest(path: Path) -> set[Collection]:
    out = set()
    for line in path.read_text().splitlines():
        if line.strip():
            row = json.loads(line)
            c = Collection.from_sets(row["n"], row["sets"])
            if c.digest() != row["digest"]:
                raise PluckerError("corrupt-cache", f"digest mismatch in {path}")
            out.add(c)
    return out


def cached_oracle(n: int, cache: Path | None, force: bool = False) -> set[Collection]:
    if cache is not None:
        path = Path(cache) / f"largest-ws-n{n}.jsonl"
        if path.exists() and not force:
            return read_manifest(path)
    result = oracle_largest_ws(n, force=force)
    if cache is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(manifest_lines(result))
    return result


# ---- equivalence of the four characterizations -----------------------------

def enumerate_tilings(n: int) -> list[GTiling]:
    """Every tiling over [n], built by expanding every tiling over [n-1] along every legal path."""
    level = [GTiling(1, [])] if n >= 1 else [GTiling(0, [])]
    for _ in range(2, n + 1):
        level = [expand(tp, p) for tp in level for p in legal_paths(tp)]
    return level


@dataclass
class EquivalenceReport:
    n: int
    manifests: dict[str, list[str]]
    from_spectrum_failures: int
    wiring_failures: int

    @property
    def equal(self) -> dict[str, bool]:
        names = sorted(self.manifests)
        return {f"{a}=={b}": self.manifests[a] == self.manifests[b]
                for k, a in enumerate(names) for b in names[k + 1:]}

    @property
    def ok(self) -> bool:
        return all(self.equal.values()) and not self.from_spectrum_failures and not self.wiring_failures

    def to_json(self) -> dict:
        return {"n": self.n, "counts": {k: len(v) for k, v in sorted(self.manifests.items())},
                "equal": self.equal, "from_spectrum_failures": self.from_spectrum_failures,
                "wiring_failures": self.wiring_failures, "ok": self.ok}


def verify_theorem_a(n: int, force: bool = False, cache: Path | None = None) -> EquivalenceReport:
    if n > EQUIVALENCE_MAX and not force:
        raise PluckerError("size-guard", f"equivalence check limited to n <= {EQUIVALENCE_MAX}")
    from .sets import standard

    orbit = flip_orbit(standard(n)).members
    fs_fail = 0
    for b in orbit:
        try:
            from_spectrum(b)
        except PluckerError:
            fs_fail += 1
    tilings = enumerate_tilings(n)
    tiling_specs = []
    wiring_specs = []
    w_fail = 0
    for t in tilings:
        if validate(t):
            w_fail += 1
            continue
        tiling_specs.append(t.spectrum())
        w = tiling_to_wiring(t)
        if validate_wiring(w):
            w_fail += 1
            continue
        wiring_specs.append(wiring_spectrum(w))
    manifests = {
        "semi-normal-bases": manifest(orbit),
        "tiling-spectra": manifest(set(tiling_specs)),
        "wiring-spectra": manifest(set(wiring_specs)),
        "largest-ws": manifest(cached_oracle(n, cache, force)),
    }
    if len(set(tiling_specs)) != len(tilings):
        fs_fail += len(tilings) - len(set(tiling_specs))
    return EquivalenceReport(n, manifests, fs_fail, w_fail)
