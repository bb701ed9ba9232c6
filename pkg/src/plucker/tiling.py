"""Generalized tilings of the zonogon: axioms, spectra, strips, flips and reconstruction."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

from .sets import (
    Collection,
    PluckerError,
    bit,
    elements_of,
    fmt,
    full,
    interval,
    is_interval,
    largest_size,
    size,
)
from .tropical import LOWERING, descend_to_standard


class Tile(NamedTuple):
    X: int
    i: int
    j: int
    black: bool = False

    @property
    def bottom(self) -> int:
        return self.X

    @property
    def left(self) -> int:
        return self.X | bit(self.i)

    @property
    def right(self) -> int:
        return self.X | bit(self.j)

    @property
    def top(self) -> int:
        return self.X | bit(self.i) | bit(self.j)

    @property
    def corners(self) -> tuple[int, int, int, int]:
        return (self.bottom, self.left, self.top, self.right)

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.X, self.i, self.j)

    @property
    def height(self) -> int:
        return size(self.X) + 1

    def edges(self) -> tuple[tuple[int, int], ...]:
        """The four edges (tail, color): bottom-left, bottom-right, left-top, right-top."""
        return ((self.X, self.i), (self.X, self.j), (self.left, self.j), (self.right, self.i))

    def side(self, edge: tuple[int, int]) -> int:
        """+1 if the tile lies to the left of the directed edge, -1 if to the right."""
        tail, color = edge
        if tail == self.X:
            return -1 if color == self.i else 1
        if tail == self.right and color == self.i:
            return 1
        if tail == self.left and color == self.j:
            return -1
        raise PluckerError("not-an-edge", f"{edge} not on {self}")

    def opposite(self, edge: tuple[int, int]) -> tuple[int, int]:
        tail, color = edge
        if color == self.i:
            return (self.right, self.i) if tail == self.X else (self.X, self.i)
        if color == self.j:
            return (self.left, self.j) if tail == self.X else (self.X, self.j)
        raise PluckerError("not-an-edge", f"{edge} not on {self}")

    def to_json(self) -> dict:
        return {"X": elements_of(self.X), "i": self.i, "j": self.j, "black": self.black}

    def __str__(self) -> str:
        return f"τ({fmt(self.X)};{self.i},{self.j}){'b' if self.black else ''}"


class Violation(NamedTuple):
    axiom: str
    where: str
    message: str

    def to_json(self) -> dict:
        return self._asdict()


def left_boundary_edge(c: int) -> tuple[int, int]:
    return (interval(1, c - 1), c)


def right_boundary_edge(n: int, c: int) -> tuple[int, int]:
    return (interval(c + 1, n), c)


def boundary_edges(n: int) -> set[tuple[int, int]]:
    return {left_boundary_edge(c) for c in range(1, n + 1)} | {right_boundary_edge(n, c) for c in range(1, n + 1)}


def boundary_vertices(n: int) -> set[int]:
    return {interval(1, c) for c in range(n + 1)} | {interval(c, n) for c in range(1, n + 2)}


# ---- virtual geometry ---------------------------------------------------

def _vec(n: int, c: int) -> tuple[float, float]:
    return (float(c), 1.0)


def _angle(u: tuple[float, float], v: tuple[float, float]) -> float:
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    return math.atan2(abs(cross), dot)


def _neg(v: tuple[float, float]) -> tuple[float, float]:
    return (-v[0], -v[1])


def tile_angle(n: int, t: Tile, v: int) -> float:
    xi, xj = _vec(n, t.i), _vec(n, t.j)
    if v == t.bottom:
        return _angle(xi, xj)
    if v == t.left:
        return _angle(_neg(xi), xj)
    if v == t.right:
        return _angle(_neg(xj), xi)
    if v == t.top:
        return _angle(_neg(xi), _neg(xj))
    raise PluckerError("not-a-corner", f"{fmt(v)} not a corner of {t}")


def boundary_angle(n: int, v: int) -> float:
    if v == 0:
        return _angle(_vec(n, 1), _vec(n, n))
    if v == full(n):
        return _angle(_neg(_vec(n, 1)), _neg(_vec(n, n)))
    if v & 1:
        c = size(v)
        return _angle(_neg(_vec(n, c)), _vec(n, c + 1))
    c = lowest(v)
    return _angle(_neg(_vec(n, c)), _vec(n, c - 1))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length()


# ---- tilings -------------------------------------------------------------

class GTiling:
    """A set of white and black tiles on the zonogon Z_n."""

    def __init__(self, n: int, tiles: Iterable[Tile]):
        self.n = n
        self.tiles: tuple[Tile, ...] = tuple(sorted(Tile(*t) for t in tiles))

    @classmethod
    def from_json(cls, data: dict) -> "GTiling":
        n = int(data["n"])
        tiles = []
        for t in data["tiles"]:
            tiles.append(Tile(sum(bit(e) for e in t["X"]), int(t["i"]), int(t["j"]), bool(t.get("black", False))))
        return cls(n, tiles)

    def to_json(self) -> dict:
        return {"n": self.n, "tiles": [t.to_json() for t in self.tiles]}

    def __eq__(self, other) -> bool:
        return isinstance(other, GTiling) and self.n == other.n and self.tiles == other.tiles

    def __hash__(self) -> int:
        return hash((self.n, self.tiles))

    def __repr__(self) -> str:
        return f"GTiling({self.n}, [{', '.join(map(str, self.tiles))}])"

    @cached_property
    def white(self) -> tuple[Tile, ...]:
        return tuple(t for t in self.tiles if not t.black)

    @cached_property
    def black(self) -> tuple[Tile, ...]:
        return tuple(t for t in self.tiles if t.black)

    @cached_property
    def vertices(self) -> frozenset[int]:
        vs = set()
        for t in self.tiles:
            vs.update(t.corners)
        if not self.tiles:
            vs.update({0, full(self.n)})
        return frozenset(vs)

    @cached_property
    def edge_tiles(self) -> dict[tuple[int, int], list[Tile]]:
        out: dict[tuple[int, int], list[Tile]] = {}
        for t in self.tiles:
            for e in t.edges():
                out.setdefault(e, []).append(t)
        if not self.tiles and self.n == 1:
            out[(0, 1)] = []
        return out

    @cached_property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_tiles)

    @cached_property
    def black_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for t in self.black for e in t.edges())

    @cached_property
    def terminal(self) -> frozenset[int]:
        return frozenset(v for t in self.black for v in (t.bottom, t.top))

    @cached_property
    def shapes(self) -> dict[tuple[int, int, int], list[Tile]]:
        out: dict[tuple[int, int, int], list[Tile]] = {}
        for t in self.tiles:
            out.setdefault(t.shape, []).append(t)
        return out

    def has(self, x: int, i: int, j: int, black: bool) -> bool:
        return any(t.black == black for t in self.shapes.get((x, i, j), ()))

    def out_colors(self, v: int) -> list[int]:
        return [c for c in range(1, self.n + 1) if not v & bit(c) and (v, c) in self.edge_tiles]

    def in_colors(self, v: int) -> list[int]:
        return [c for c in range(1, self.n + 1) if v & bit(c) and (v ^ bit(c), c) in self.edge_tiles]

    def spectrum(self) -> Collection:
        spec = Collection(self.n, self.vertices - self.terminal)
        if len(spec) != largest_size(self.n):
            raise PluckerError("bad-spectrum-size", f"{len(spec)} != {largest_size(self.n)}")
        return spec

    def full_spectrum(self) -> Collection:
        return Collection(self.n, self.vertices)


def standard_tiling(n: int) -> GTiling:
    """The pure tiling whose vertices are the intervals."""
    return GTiling(n, [Tile(interval(i + 1, j - 1), i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def reverse(t: GTiling) -> GTiling:
    top = full(t.n)
    return GTiling(t.n, [Tile(top ^ x.top, x.i, x.j, x.black) for x in t.tiles])


def validate(t: GTiling) -> list[Violation]:
    n = t.n
    out: list[Violation] = []
    top = full(n)
    for x in t.tiles:
        if not (1 <= x.i < x.j <= n) or x.X & (bit(x.i) | bit(x.j)) or x.X & ~top:
            out.append(Violation("structure", str(x), "colors must satisfy i<j within [n] and avoid X"))
    if out:
        return out
    if n <= 1:
        if t.tiles:
            out.append(Violation("T1", str(t.tiles[0]), "no tiles fit in a degenerate zonogon"))
        return out
    for shape, copies in t.shapes.items():
        if len(copies) > 1:
            out.append(Violation("T1", str(copies[0]), f"{len(copies)} tiles coincide"))
    bnd = boundary_edges(n)
    for e in sorted(bnd):
        cnt = len(t.edge_tiles.get(e, []))
        if cnt != 1:
            out.append(Violation("T1", _edge_str(e), f"boundary edge lies in {cnt} tiles"))
    for e, ts in t.edge_tiles.items():
        if e in bnd:
            continue
        if len(ts) != 2:
            out.append(Violation("T1", _edge_str(e), f"inner edge lies in {len(ts)} tiles"))
            continue
        a, b = ts
        same = a.side(e) == b.side(e)
        if a.black and b.black:
            out.append(Violation("T2", _edge_str(e), f"black tiles {a} and {b} share an edge"))
        elif a.black or b.black:
            if not same:
                out.append(Violation("T2", _edge_str(e), f"{a} and {b} must overlap"))
        elif same:
            out.append(Violation("T2", _edge_str(e), f"white tiles {a} and {b} overlap"))
    for x in t.black:
        for v in (x.bottom, x.top):
            for y in t.black:
                if y != x and v in y.corners:
                    out.append(Violation("T3", str(x), f"vertex {fmt(v)} shared with black {y}"))
        if t.in_colors(x.bottom):
            out.append(Violation("T3", str(x), "an edge enters the bottom vertex"))
        if t.out_colors(x.top):
            out.append(Violation("T3", str(x), "an edge leaves the top vertex"))
    if out:
        return out
    winding: dict[int, float] = {v: 0.0 for v in t.vertices}
    for x in t.tiles:
        sign = -1.0 if x.black else 1.0
        for v in x.corners:
            winding[v] += sign * tile_angle(n, x, v)
    bverts = boundary_vertices(n)
    for v, rho in winding.items():
        if v in t.terminal:
            want = 0.0
        elif v in bverts:
            want = boundary_angle(n, v)
        else:
            want = 2 * math.pi
        if abs(rho - want) > 1e-9:
            out.append(Violation("T4", fmt(v), f"winding {rho:.6f} expected {want:.6f}"))
    if len(t.vertices) + len(t.tiles) != len(t.edges) + 1:
        out.append(Violation("T4", "euler", f"|V|+|T|={len(t.vertices) + len(t.tiles)} vs |E|+1={len(t.edges) + 1}"))
    return out


def is_valid(t: GTiling) -> bool:
    return not validate(t)


def require_valid(t: GTiling, what: str = "invalid-tiling") -> GTiling:
    bad = validate(t)
    if bad:
        raise PluckerError(what, f"{bad[0].axiom} at {bad[0].where}: {bad[0].message}",
                           violations=[v.to_json() for v in bad])
    return t


def _edge_str(e: tuple[int, int]) -> str:
    return f"({fmt(e[0])}->{fmt(e[0] | bit(e[1]))})"


# ---- vertex classes --------------------------------------------------------

@dataclass
class TGraph:
    n: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    black: dict[tuple[int, int], bool]
    classes: dict[int, str] = field(default_factory=dict)


def _cone_edges(t: Tile, v: int, outs: list[int], ins: list[int]) -> tuple[list[int], list[int]]:
    """Colors of out- and in-edges at v lying strictly inside the cone of tile t at v."""
    if v == t.left:
        return [c for c in outs if c > t.j], [c for c in ins if c < t.i]
    return [c for c in outs if c < t.i], [c for c in ins if c > t.j]


def classify_vertices(t: GTiling) -> TGraph:
    require_valid(t)
    blk = {e: e in t.black_edges for e in t.edges}
    g = TGraph(t.n, t.vertices, t.edges, blk)
    bottoms = {x.bottom for x in t.black}
    tops = {x.top for x in t.black}
    as_left: dict[int, int] = {}
    as_right: dict[int, int] = {}
    for x in t.black:
        as_left[x.left] = as_left.get(x.left, 0) + 1
        as_right[x.right] = as_right.get(x.right, 0) + 1
    for v in sorted(t.vertices, key=lambda m: (size(m), m)):
        outs = sorted(t.out_colors(v), reverse=True)
        ins = sorted(t.in_colors(v), reverse=True)
        if v in bottoms:
            g.classes[v] = "terminal-bottom"
            continue
        if v in tops:
            g.classes[v] = "terminal-top"
            continue
        r, rr = as_right.get(v, 0), as_left.get(v, 0)
        expected = set()
        expected.update((v ^ bit(c), c) for c in ins[:r])
        expected.update((v, c) for c in outs[len(outs) - r:] if r)
        expected.update((v ^ bit(c), c) for c in ins[len(ins) - rr:] if rr)
        expected.update((v, c) for c in outs[:rr])
        actual = {(v ^ bit(c), c) for c in ins if blk[(v ^ bit(c), c)]} | {(v, c) for c in outs if blk[(v, c)]}
        if actual != expected or (r + rr and r + rr >= min(len(ins), len(outs))):
            raise PluckerError("mixed-vertex-structure", f"black edges at {fmt(v)} do not follow the local rule")
        g.classes[v] = "mixed" if actual else "ordinary"
    for x in t.white:
        for v in (x.left, x.right):
            outs, ins = t.out_colors(v), t.in_colors(v)
            cone_out, cone_in = _cone_edges(x, v, outs, ins)
            if v == x.left:
                e_in, e_out = (x.X, x.i), (x.left, x.j)
            else:
                e_in, e_out = (x.X, x.j), (x.right, x.i)
            for c in cone_out:
                if not blk[(v, c)] or not blk[e_in]:
                    raise PluckerError("cone-structure", f"out-edge {c} inside cone of {x} at {fmt(v)}")
            for c in cone_in:
                if not blk[(v ^ bit(c), c)] or not blk[e_out]:
                    raise PluckerError("cone-structure", f"in-edge {c} inside cone of {x} at {fmt(v)}")
    return g


def is_graded(t: GTiling) -> bool:
    """Potentials propagated along edges from the empty set reproduce every vertex label."""
    potential = {0: 0}
    stack = [0]
    adj: dict[int, list[tuple[int, int]]] = {}
    for tail, c in t.edges:
        head = tail | bit(c)
        if tail & bit(c):
            return False
        adj.setdefault(tail, []).append((head, bit(c)))
        adj.setdefault(head, []).append((tail, -bit(c)))
    while stack:
        v = stack.pop()
        for w, d in adj.get(v, []):
            p = potential[v] + d
            if w in potential:
                if potential[w] != p:
                    return False
            else:
                potential[w] = p
                stack.append(w)
    return all(potential.get(v) == v for v in t.vertices)


# ---- strips ----------------------------------------------------------------

@dataclass(frozen=True)
class Strip:
    color: int
    edges: tuple[tuple[int, int], ...]
    tiles: tuple[Tile, ...]

    @property
    def right_walk(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self.edges)

    @property
    def left_walk(self) -> tuple[int, ...]:
        return tuple(e[0] | bit(e[1]) for e in self.edges)

    def right_forward(self) -> list[bool]:
        w = self.right_walk
        return [w[p] < w[p + 1] and (w[p] & w[p + 1]) == w[p] for p in range(len(w) - 1)]


def _trace(t: GTiling, start: tuple[int, int], stop: set[tuple[int, int]]):
    edges = [start]
    tiles: list[Tile] = []
    cur, prev = start, None
    seen = set()
    while True:
        options = [x for x in t.edge_tiles.get(cur, []) if x != prev]
        if not options:
            return edges, tiles, False
        nxt = options[0]
        if nxt in seen:
            return edges, tiles, True
        seen.add(nxt)
        tiles.append(nxt)
        cur = nxt.opposite(cur)
        edges.append(cur)
        prev = nxt
        if cur in stop or cur == start:
            return edges, tiles, cur == start


def strip(t: GTiling, i: int) -> Strip:
    n = t.n
    start, end = left_boundary_edge(i), right_boundary_edge(n, i)
    edges, tiles, cyclic = _trace(t, start, {end})
    if edges[-1] != end or cyclic:
        raise PluckerError("split-strip", f"strip {i} does not reach the right boundary")
    all_i = {e for e in t.edges if e[1] == i}
    rest = all_i - set(edges)
    if rest:
        e0 = min(rest)
        _, _, closed = _trace(t, e0, set())
        raise PluckerError("cyclic-strip" if closed else "split-strip", f"color {i} edges outside the strip")
    s = Strip(i, tuple(edges), tuple(tiles))
    for fwd, x in zip(s.right_forward(), tiles):
        other = x.j if x.i == i else x.i
        want = (not x.black and i < other) or (x.black and other < i)
        if fwd != want:
            raise PluckerError("strip-direction", f"boundary walk of strip {i} breaks the orientation rule at {x}")
    return s


# ---- configurations and flips ----------------------------------------------

class Config(NamedTuple):
    kind: str
    X: int
    i: int
    j: int
    k: int

    def five(self) -> tuple[int, ...]:
        x, bi, bj, bk = self.X, bit(self.i), bit(self.j), bit(self.k)
        if self.kind == "W":
            return (x | bi, x | bk, x | bi | bj, x | bi | bk, x | bj | bk)
        return (x | bi, x | bj, x | bk, x | bi | bj, x | bj | bk)

    @property
    def height(self) -> int:
        return size(self.X) + 2

    def to_json(self) -> dict:
        return {"kind": self.kind, "X": elements_of(self.X), "i": self.i, "j": self.j, "k": self.k}

    def __str__(self) -> str:
        return f"C{self.kind}({fmt(self.X)};{self.i},{self.j},{self.k})"


def find_configs(t: GTiling, kind: str, feasible_only: bool = True) -> list[Config]:
    from .tropical import corteges

    vs, term = t.vertices, t.terminal
    out = []
    for x, i, j, k in corteges(t.n):
        c = Config(kind, x, i, j, k)
        five = c.five()
        if all(v in vs for v in five) and (not feasible_only or not any(v in term for v in five)):
            out.append(c)
    return out


def lowering_flip(t: GTiling, c: Config, check: bool = True) -> GTiling:
    if c.kind != "W":
        raise PluckerError("bad-config", "lowering flips need a W-configuration")
    x, i, j, k = c.X, c.i, c.j, c.k
    bi, bj, bk = bit(i), bit(j), bit(k)
    if any(v in t.terminal or v not in t.vertices for v in c.five()):
        raise PluckerError("infeasible-config", str(c))
    tau, tau2 = Tile(x | bi, j, k), Tile(x | bk, i, j)
    tiles = set(t.tiles)
    if tau not in tiles or tau2 not in tiles:
        raise PluckerError("infeasible-config", f"{c}: white tiles {tau}, {tau2} not both present")
    tiles -= {tau, tau2}
    white_ik = Tile(x, i, k)
    black_mid = Tile(x | bj, i, k, True)
    adds = [Tile(x, i, j), Tile(x, j, k)]
    if white_ik in tiles:
        tiles.remove(white_ik)
    else:
        adds.append(Tile(x, i, k, True))
    if black_mid in tiles:
        tiles.remove(black_mid)
    else:
        adds.append(Tile(x | bj, i, k))
    tiles.update(adds)
    out = GTiling(t.n, tiles)
    if check:
        require_valid(out, "flip-produced-invalid-tiling")
    return out


def complement_config(n: int, c: Config, kind: str) -> Config:
    y = full(n) ^ c.X ^ bit(c.i) ^ bit(c.j) ^ bit(c.k)
    return Config(kind, y, c.i, c.j, c.k)


def raising_flip(t: GTiling, c: Config, check: bool = True) -> GTiling:
    if c.kind != "M":
        raise PluckerError("bad-config", "raising flips need an M-configuration")
    if any(v in t.terminal or v not in t.vertices for v in c.five()):
        raise PluckerError("infeasible-config", str(c))
    return reverse(lowering_flip(reverse(t), complement_config(t.n, c, "W"), check))


def descend(t: GTiling) -> list[Config]:
    seq = []
    cur = t
    target = standard_tiling(t.n)
    while cur != target:
        cands = find_configs(cur, "W", True)
        if not cands:
            raise PluckerError("stuck-not-standard", "no feasible W-configuration")
        seq.append(cands[0])
        cur = lowering_flip(cur, cands[0])
    return seq


# ---- reconstruction from a spectrum --------------------------------------------

def from_spectrum(b: Collection) -> GTiling:
    n = b.n
    if len(b) != largest_size(n):
        raise PluckerError("not-a-spectrum", f"cardinality {len(b)} != {largest_size(n)}", step="cardinality")
    if n <= 1:
        return GTiling(n, [])
    ms = b.members
    has_in = {y for y in ms if any(y & bit(c) and (y ^ bit(c)) in ms for c in range(1, n + 1))}
    has_out = {y for y in ms if any(not y & bit(c) and (y | bit(c)) in ms for c in range(1, n + 1))}
    cands = set()
    for y in ms:
        for c in range(1, n + 1):
            z = y ^ bit(c)
            if z not in ms:
                cands.add(z)
    bottoms: dict[int, list[int]] = {}
    tops: dict[int, list[int]] = {}
    for x in cands:
        up = [c for c in range(1, n + 1) if not x & bit(c) and (x | bit(c)) in ms]
        if len(up) >= 3 and any((x | bit(c)) not in has_in for c in up):
            bottoms[x] = up
        down = [c for c in range(1, n + 1) if x & bit(c) and (x ^ bit(c)) in ms]
        if len(down) >= 3 and any((x ^ bit(c)) not in has_out for c in down):
            tops[x] = down
    blacks = [Tile(x, fan[0], fan[-1], True) for x, fan in bottoms.items()]
    if {x.top for x in blacks} != set(tops):
        raise PluckerError("not-a-spectrum", "terminal bottoms and tops do not pair up", step="terminal-pairing")
    for x in blacks:
        if tops[x.top][0] != x.i or tops[x.top][-1] != x.j:
            raise PluckerError("not-a-spectrum", f"fan at {fmt(x.top)} disagrees with {x}", step="terminal-pairing")
    as_left: dict[int, int] = {}
    as_right: dict[int, int] = {}
    for x in blacks:
        as_left[x.left] = as_left.get(x.left, 0) + 1
        as_right[x.right] = as_right.get(x.right, 0) + 1
    tiles = list(blacks)
    for x, fan in bottoms.items():
        tiles.extend(Tile(x, a, c) for a, c in zip(fan, fan[1:]))
    for v in ms:
        outs = sorted((c for c in range(1, n + 1)
                       if not v & bit(c) and ((v | bit(c)) in ms or (v | bit(c)) in tops)), reverse=True)
        outs = outs[as_left.get(v, 0):len(outs) - as_right.get(v, 0)]
        tiles.extend(Tile(v, small, big) for big, small in zip(outs, outs[1:]))
    t = GTiling(n, tiles)
    bad = validate(t)
    if bad:
        raise PluckerError("not-a-spectrum", f"{bad[0].axiom} at {bad[0].where}: {bad[0].message}", step="validate")
    if t.spectrum() != b:
        raise PluckerError("not-a-spectrum", "assembled tiling has another spectrum", step="spectrum")
    return t


def from_spectrum_by_flips(b: Collection) -> GTiling:
    """Independent construction: descend the collection, then raise the pure tiling back up."""
    seq = descend_to_standard(b)
    t = standard_tiling(b.n)
    for c in reversed(seq):
        assert c.direction == LOWERING
        t = raising_flip(t, Config("M", c.X, c.i, c.j, c.k))
    return t


# ---- auxiliary invariants --------------------------------------------------------

def black_order_edges(t: GTiling, upper: bool = True) -> set[tuple[Tile, Tile]]:
    """Pairs (smaller, larger) of the relation on black tiles via white edges into tops (or out of bottoms)."""
    white_edges = t.edges - t.black_edges
    out = set()
    for big in t.black:
        for small in t.black:
            if small == big:
                continue
            for v in (small.left, small.right):
                if upper:
                    d = big.top ^ v
                    hit = (v & big.top) == v and size(d) == 1 and (v, lowest(d)) in white_edges
                else:
                    d = v ^ big.bottom
                    hit = (big.bottom & v) == big.bottom and size(d) == 1 and (big.bottom, lowest(d)) in white_edges
                if hit:
                    out.add((small, big))
    return out


def is_acyclic(nodes: Iterable, pairs: set) -> bool:
    indeg = {v: 0 for v in nodes}
    succ: dict = {v: [] for v in indeg}
    for a, b in pairs:
        succ[a].append(b)
        indeg[b] += 1
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def is_forest(nodes: Iterable, pairs: set) -> bool:
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in {frozenset(p) for p in pairs}:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def interval_implication_holds(t: GTiling) -> bool:
    """If level h+1 is all intervals and no feasible W-config has height h, level h is all intervals."""
    spec = t.vertices - t.terminal
    heights = {}
    for c in find_configs(t, "W", True):
        heights[c.height] = True
    for h in range(0, t.n):
        upper = [v for v in spec if size(v) == h + 1]
        lower = [v for v in spec if size(v) == h]
        if all(is_interval(v) for v in upper) and not heights.get(h):
            if not all(is_interval(v) for v in lower):
                return False
    return True
