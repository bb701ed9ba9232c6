"""Contraction and expansion along the last color, legal paths, and tilings from ws-collections."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .sets import (
    Collection,
    PluckerError,
    SeparatorChain,
    bit,
    elements_of,
    fmt,
    full,
    interval,
    is_largest_ws,
    project,
    separator,
    size,
)
from .tiling import GTiling, Tile, require_valid, strip


@dataclass(frozen=True)
class LegalPath:
    """A walk from the empty set to [n] in a tiling over [n]."""

    n: int
    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    forward: tuple[bool, ...]

    @classmethod
    def from_vertices(cls, n: int, vertices) -> "LegalPath":
        vs = tuple(vertices)
        colors, fwd = [], []
        for a, b in zip(vs, vs[1:]):
            d = a ^ b
            if size(d) != 1:
                raise PluckerError("not-a-walk", f"{fmt(a)} and {fmt(b)} are not adjacent")
            colors.append(d.bit_length())
            fwd.append(b > a)
        return cls(n, vs, tuple(colors), tuple(fwd))

    @classmethod
    def from_json(cls, data: dict) -> "LegalPath":
        vs = tuple(sum(bit(e) for e in v) for v in data["vertices"])
        p = cls.from_vertices(int(data["n"]), vs)
        if "colors" in data and list(data["colors"]) != list(p.colors):
            raise PluckerError("not-a-walk", "colors disagree with vertices")
        if "forward" in data and [bool(f) for f in data["forward"]] != list(p.forward):
            raise PluckerError("not-a-walk", "orientations disagree with vertices")
        return p

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": [elements_of(v) for v in self.vertices],
                "colors": list(self.colors), "forward": list(self.forward)}

    def edges(self) -> list[tuple[int, int]]:
        return [(min(a, b), c) for a, b, c in zip(self.vertices, self.vertices[1:], self.colors)]

    def kinds(self) -> list[str]:
        """Per vertex: 'critical', 'wedge' (forward then backward), 'vee' (backward then forward) or 'back'."""
        out = ["critical"]
        for q in range(1, len(self.vertices) - 1):
            a, b = self.forward[q - 1], self.forward[q]
            out.append({(True, True): "critical", (True, False): "wedge",
                        (False, True): "vee", (False, False): "back"}[(a, b)])
        if len(self.vertices) > 1:
            out.append("critical")
        return out

    def critical(self) -> tuple[int, ...]:
        return tuple(v for v, k in zip(self.vertices, self.kinds()) if k == "critical")


def legality_problems(tp: GTiling, p: LegalPath) -> list[str]:
    m = tp.n
    out = []
    if p.n != m:
        out.append(f"path over {p.n}, tiling over {m}")
        return out
    if not p.vertices or p.vertices[0] != 0 or p.vertices[-1] != full(m):
        out.append("path must run from the empty set to the full set")
    if len(set(p.vertices)) != len(p.vertices):
        out.append("path revisits a vertex")
    for e in p.edges():
        if e not in tp.edges:
            out.append(f"{fmt(e[0])}+{e[1]} is not an edge of the tiling")
    for v in p.vertices:
        if v in tp.terminal:
            out.append(f"vertex {fmt(v)} is terminal")
    for q in range(len(p.colors) - 1):
        a, b = p.forward[q], p.forward[q + 1]
        ca, cb = p.colors[q], p.colors[q + 1]
        if not a and not b:
            out.append(f"two consecutive backward edges at {fmt(p.vertices[q + 1])}")
        if a and not b and not ca > cb:
            out.append(f"forward {ca} then backward {cb} needs {ca}>{cb}")
        if not a and b and not ca < cb:
            out.append(f"backward {ca} then forward {cb} needs {ca}<{cb}")
    levels = [size(v) for v in p.critical()]
    if sorted(levels) != list(range(m + 1)):
        out.append(f"critical vertices at levels {levels}, expected one per level")
    return out


def is_legal(tp: GTiling, p: LegalPath) -> bool:
    return not legality_problems(tp, p)


def contract(t: GTiling) -> tuple[GTiling, LegalPath]:
    n = t.n
    if n < 2:
        raise PluckerError("bad-ground-size", "contraction needs n >= 2")
    require_valid(t)
    nb = bit(n)
    tiles = [Tile(x.X & ~nb, x.i, x.j, x.black) for x in t.tiles if x.j != n]
    tp = GTiling(n - 1, tiles)
    require_valid(tp, "contraction-invalid")
    walk = strip(t, n).right_walk
    p = LegalPath.from_vertices(n - 1, reversed(walk))
    bad = legality_problems(tp, p)
    if bad:
        raise PluckerError("illegal-path", bad[0])
    return tp, p


def contract_color(t: GTiling, i: int) -> GTiling:
    """Shrink the strip of color i and renumber the colors above i; inner colors may not give a tiling."""
    n = t.n
    if not 1 <= i <= n:
        raise PluckerError("bad-color", f"color {i} outside [1..{n}]")
    require_valid(t)
    low = bit(i) - 1

    def squeeze(mask: int) -> int:
        return (mask & low) | ((mask >> 1) & ~low)

    def shift(c: int) -> int:
        return c - 1 if c > i else c

    tiles = [Tile(squeeze(x.X & ~bit(i)), shift(x.i), shift(x.j), x.black)
             for x in t.tiles if i not in (x.i, x.j)]
    return require_valid(GTiling(n - 1, tiles), "contraction-invalid")


def expand(tp: GTiling, p: LegalPath, check: bool = True) -> GTiling:
    bad = legality_problems(tp, p)
    if bad:
        raise PluckerError("illegal-path", bad[0])
    m = tp.n
    n = m + 1
    nb = bit(n)
    cut = set(p.edges())
    side: dict[Tile, str] = {}
    stack = []
    for c in range(1, m + 1):
        for e, s in (((interval(1, c - 1), c), "L"), ((interval(c + 1, m), c), "R")):
            if e in cut:
                continue
            for x in tp.edge_tiles.get(e, []):
                if x not in side:
                    side[x] = s
                    stack.append(x)
    while stack:
        x = stack.pop()
        for e in x.edges():
            if e in cut:
                continue
            for y in tp.edge_tiles[e]:
                if y not in side:
                    side[y] = side[x]
                    stack.append(y)
                elif side[y] != side[x]:
                    raise PluckerError("illegal-path", f"tiles {x} and {y} on both sides of the path")
    if len(side) != len(tp.tiles):
        raise PluckerError("illegal-path", "some tiles are cut off from the boundary")
    tiles = [Tile(x.X | nb, x.i, x.j, x.black) if side[x] == "R" else x for x in tp.tiles]
    for (tail, c), fwd in zip(p.edges(), p.forward):
        tiles.append(Tile(tail, c, n, not fwd))
    t = GTiling(n, tiles)
    if check:
        require_valid(t, "expansion-invalid")
    return t


# ---- level forests and legal paths ------------------------------------------------

@dataclass(frozen=True)
class LevelComponent:
    h: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    principal: bool
    center: int | None


def _components(vertices, edges) -> list[tuple[set, set]]:
    adj: dict[int, list[tuple[int, tuple[int, int]]]] = {v: [] for v in vertices}
    for e in edges:
        a, b = e[0], e[0] | bit(e[1])
        adj[a].append((b, e))
        adj[b].append((a, e))
    seen = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        cv, ce = {v}, set()
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w, e in adj[u]:
                ce.add(e)
                if w not in seen:
                    seen.add(w)
                    cv.add(w)
                    stack.append(w)
        out.append((cv, ce))
    return out


def h_forests(t: GTiling) -> list[list[LevelComponent]]:
    n = t.n
    white = t.edges - t.black_edges
    result = []
    for h in range(1, n + 1):
        es = {e for e in white if size(e[0]) == h - 1}
        vs = {e[0] for e in es} | {e[0] | bit(e[1]) for e in es}
        left = (interval(1, h - 1), h)
        right = (interval(n - h + 2, n), n - h + 1)
        level = []
        for cv, ce in _components(vs, es):
            if len(ce) != len(cv) - 1:
                raise PluckerError("not-a-forest", f"level {h} has a cycle")
            principal = left in ce
            if principal:
                if right not in ce or cv & t.terminal:
                    raise PluckerError("bad-principal", f"principal component at level {h} is malformed")
                center = None
            else:
                terms = cv & t.terminal
                if len(terms) != 1:
                    raise PluckerError("not-a-star", f"level {h} component without a unique terminal vertex")
                center = next(iter(terms))
                if any(center not in (e[0], e[0] | bit(e[1])) for e in ce):
                    raise PluckerError("not-a-star", f"level {h} component around {fmt(center)} is not a star")
            level.append(LevelComponent(h, frozenset(cv), frozenset(ce), principal, center))
        if sum(c.principal for c in level) != 1:
            raise PluckerError("bad-principal", f"level {h} has no principal component")
        result.append(level)
    return result


def principal_components(t: GTiling) -> list[LevelComponent]:
    return [c for level in h_forests(t) for c in level if c.principal]


def lp_graph(tp: GTiling) -> frozenset[tuple[int, int]]:
    if tp.n == 0:
        return frozenset()
    edges = set()
    for c in principal_components(tp):
        edges |= c.edges
    keep = {0, full(tp.n)}
    while True:
        deg: dict[int, int] = {}
        for e in edges:
            for v in (e[0], e[0] | bit(e[1])):
                deg[v] = deg.get(v, 0) + 1
        drop = {v for v, d in deg.items() if d == 1 and v not in keep}
        if not drop:
            return frozenset(edges)
        edges = {e for e in edges if e[0] not in drop and (e[0] | bit(e[1])) not in drop}


def legal_paths(tp: GTiling) -> Iterator[LegalPath]:
    """All legal paths, by depth-first search over the tiling graph with incremental pruning."""
    m = tp.n
    target = full(m)
    adj: dict[int, list[tuple[int, int, bool]]] = {}
    for tail, c in sorted(tp.edges):
        head = tail | bit(c)
        adj.setdefault(tail, []).append((head, c, True))
        adj.setdefault(head, []).append((tail, c, False))
    if m == 0:
        yield LegalPath(0, (0,), (), ())
        return
    path = [0]
    colors: list[int] = []
    fwd: list[bool] = []
    crit_levels = {0}

    def step():
        v = path[-1]
        if v == target:
            if len(crit_levels) == m + 1:
                yield LegalPath(m, tuple(path), tuple(colors), tuple(fwd))
            return
        for w, c, f in adj.get(v, []):
            if w in path or w in tp.terminal:
                continue
            added = None
            if fwd:
                a, ca = fwd[-1], colors[-1]
                if not a and not f:
                    continue
                if a and not f and not ca > c:
                    continue
                if not a and f and not ca < c:
                    continue
                if a and f:
                    lev = size(v)
                    if lev in crit_levels:
                        continue
                    added = lev
            if added is not None:
                crit_levels.add(added)
            path.append(w)
            colors.append(c)
            fwd.append(f)
            if w == target:
                crit_levels.add(m)
            yield from step()
            if w == target:
                crit_levels.discard(m)
            path.pop()
            colors.pop()
            fwd.pop()
            if added is not None:
                crit_levels.discard(added)

    yield from step()


def legal_path_from_separator(tp: GTiling, s: SeparatorChain) -> LegalPath:
    m = tp.n
    if s.n != m + 1:
        raise PluckerError("ground-size-mismatch", f"separator for n={s.n}, tiling over {m}")
    if m == 0:
        return LegalPath(0, (0,), (), ())
    comps = {c.h: c for c in principal_components(tp)}
    verts = [0]
    for h in range(1, m + 1):
        comp = comps[h]
        a, b = s.sets[h - 1], s.sets[h]
        if a not in comp.vertices or b not in comp.vertices:
            raise PluckerError("separator-outside-principal", f"level {h}: {fmt(a)} or {fmt(b)} missing")
        verts.extend(_tree_path(comp, a, b)[1:])
    p = LegalPath.from_vertices(m, verts)
    bad = legality_problems(tp, p)
    if bad:
        raise PluckerError("illegal-path", bad[0])
    if p.critical() != s.sets:
        raise PluckerError("separator-mismatch", "critical vertices differ from the separator")
    return p


def _tree_path(comp: LevelComponent, a: int, b: int) -> list[int]:
    adj: dict[int, list[int]] = {}
    for e in comp.edges:
        u, v = e[0], e[0] | bit(e[1])
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    parent = {a: a}
    queue = [a]
    for u in queue:
        for v in sorted(adj.get(u, [])):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return out[::-1]


def tiling_from_ws(c: Collection) -> GTiling:
    n = c.n
    if not is_largest_ws(c):
        raise PluckerError("not-largest-ws", "input is not a largest weakly separated collection")
    if n <= 1:
        return GTiling(n, [])
    if n == 2:
        return GTiling(2, [Tile(0, 1, 2)])
    proj = project(c)
    sep = separator(c)
    tp = tiling_from_ws(proj.cprime)
    p = legal_path_from_separator(tp, sep)
    t = expand(tp, p)
    if t.spectrum() != c:
        raise PluckerError("spectrum-mismatch", "expanded tiling has another spectrum")
    return t
