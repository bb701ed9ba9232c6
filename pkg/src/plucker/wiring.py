"""Wirings as combinatorial maps: face tracing, labels, lenses and duality with tilings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .sets import Collection, PluckerError, bit, fmt, interval, largest_size, size
from .tiling import GTiling, Tile, Violation, strip


class Crossing(NamedTuple):
    id: int
    i: int
    j: int
    black: bool = False

    def to_json(self) -> dict:
        return {"id": self.id, "i": self.i, "j": self.j, "black": self.black}


class Dart(NamedTuple):
    edge: int
    forward: bool


@dataclass(frozen=True)
class WFace:
    darts: tuple[Dart, ...]
    label: int
    cyclic: bool


class _Map:
    """Rotation system of a wiring together with its traced faces."""

    def __init__(self, w: "Wiring"):
        n = w.n
        self.edges: list[tuple[tuple, tuple, int]] = []
        self.rot: dict[tuple, list[int]] = {}
        self.half: dict[int, dict[str, int]] = {c.id: {} for c in w.crossings}
        for i in range(1, n + 1):
            seq = [("s", i)] + [("c", x) for x in w.wires[i - 1]] + [("t", i)]
            for a, b in zip(seq, seq[1:]):
                eid = len(self.edges)
                self.edges.append((a, b, i))
                if a[0] == "c":
                    self.half[a[1]][self._slot(w, a[1], i, out=True)] = eid
                if b[0] == "c":
                    self.half[b[1]][self._slot(w, b[1], i, out=False)] = eid
        points = [("s", i) for i in range(1, n + 1)] + [("t", i) for i in range(1, n + 1)]
        self.arc_from: dict[tuple, int] = {}
        for k, p in enumerate(points):
            q = points[(k + 1) % len(points)]
            eid = len(self.edges)
            self.edges.append((p, q, 0))
            self.arc_from[p] = eid
        self.points = points
        for k, p in enumerate(points):
            prev = self.arc_from[points[k - 1]]
            self.rot[p] = [self.arc_from[p], self._wire_end(p), prev]
        for c in w.crossings:
            h = self.half[c.id]
            if c.black:
                self.rot[("c", c.id)] = [h["in_i"], h["out_j"], h["out_i"], h["in_j"]]
            else:
                self.rot[("c", c.id)] = [h["in_i"], h["in_j"], h["out_i"], h["out_j"]]
        self._trace()

    @staticmethod
    def _slot(w: "Wiring", cid: int, color: int, out: bool) -> str:
        c = w.crossing(cid)
        side = "i" if color == c.i else "j"
        return ("out_" if out else "in_") + side

    def _wire_end(self, p: tuple) -> int:
        for eid, (a, b, color) in enumerate(self.edges):
            if color and (a == p or b == p):
                return eid
        raise PluckerError("broken-wiring", f"boundary point {p} has no wire")

    def head(self, d: Dart) -> tuple:
        a, b, _ = self.edges[d.edge]
        return b if d.forward else a

    def _trace(self):
        self.face_of: dict[Dart, int] = {}
        self.corner_face: dict[tuple, int] = {}
        self.faces: list[list[Dart]] = []
        for eid in range(len(self.edges)):
            for fwd in (True, False):
                d = Dart(eid, fwd)
                if d in self.face_of:
                    continue
                fid = len(self.faces)
                walk = []
                cur = d
                while cur not in self.face_of:
                    self.face_of[cur] = fid
                    walk.append(cur)
                    v = self.head(cur)
                    ring = self.rot[v]
                    nxt = ring[(ring.index(cur.edge) + 1) % len(ring)]
                    self.corner_face[(v, cur.edge, nxt)] = fid
                    a, _, _ = self.edges[nxt]
                    cur = Dart(nxt, a == v)
                if cur != d:
                    raise PluckerError("broken-wiring", "face tracing did not close up")
                self.faces.append(walk)


class Wiring:
    def __init__(self, n: int, crossings: Iterable[Crossing], wires: Iterable[Iterable[int]]):
        self.n = n
        self.crossings: tuple[Crossing, ...] = tuple(sorted(Crossing(*c) for c in crossings))
        self.wires: tuple[tuple[int, ...], ...] = tuple(tuple(w) for w in wires)
        self._by_id = {c.id: c for c in self.crossings}

    def crossing(self, cid: int) -> Crossing:
        return self._by_id[cid]

    @classmethod
    def from_json(cls, data: dict) -> "Wiring":
        cs = [Crossing(int(c["id"]), int(c["i"]), int(c["j"]), bool(c.get("black", False))) for c in data["crossings"]]
        return cls(int(data["n"]), cs, [[int(x) for x in w] for w in data["wires"]])

    def to_json(self) -> dict:
        return {"n": self.n, "crossings": [c.to_json() for c in self.crossings], "wires": [list(w) for w in self.wires]}

    def __eq__(self, other) -> bool:
        return (isinstance(other, Wiring) and self.n == other.n
                and self.crossings == other.crossings and self.wires == other.wires)

    def __hash__(self) -> int:
        return hash((self.n, self.crossings, self.wires))

    def structure_violations(self) -> list[Violation]:
        out = []
        if len(self.wires) != self.n:
            return [Violation("structure", "wires", f"{len(self.wires)} wire lists for n={self.n}")]
        if len(self._by_id) != len(self.crossings):
            out.append(Violation("structure", "crossings", "duplicate crossing ids"))
        seen: dict[int, list[int]] = {}
        for w, lst in enumerate(self.wires, start=1):
            for cid in lst:
                seen.setdefault(cid, []).append(w)
        for c in self.crossings:
            if not 1 <= c.i < c.j <= self.n:
                out.append(Violation("structure", f"x{c.id}", "wire pair must satisfy i<j in [n]"))
            elif sorted(seen.get(c.id, [])) != [c.i, c.j]:
                out.append(Violation("structure", f"x{c.id}", f"threaded on wires {seen.get(c.id, [])}"))
        for cid in seen:
            if cid not in self._by_id:
                out.append(Violation("structure", f"x{cid}", "unknown crossing on a wire"))
        return out

    @cached_property
    def map(self) -> _Map:
        bad = self.structure_violations()
        if bad:
            raise PluckerError("broken-wiring", bad[0].message)
        return _Map(self)

    def pair_sequence(self, i: int, j: int) -> list[int]:
        return [cid for cid in self.wires[i - 1] if {self.crossing(cid).i, self.crossing(cid).j} == {i, j}]

    def lenses(self) -> list[tuple[int, int, int, int]]:
        """(i, j, q, root crossing id) for each lens between the q-th and (q+1)-th crossings."""
        out = []
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                seq = self.pair_sequence(i, j)
                for q in range(1, len(seq)):
                    root = seq[q - 1] if q % 2 == 0 else seq[q]
                    out.append((i, j, q, root))
        return out


def _label_faces(w: Wiring) -> tuple[dict[int, int], list[Violation]]:
    m = w.map
    out: list[Violation] = []
    start = m.face_of[Dart(m.arc_from[("t", w.n)], False)]
    labels = {start: 0}
    queue = [start]
    while queue:
        f = queue.pop()
        for d in m.faces[f]:
            color = m.edges[d.edge][2]
            if not color:
                continue
            g = m.face_of[Dart(d.edge, not d.forward)]
            want = labels[f] ^ bit(color)
            if g in labels:
                if labels[g] != want:
                    out.append(Violation("labels", f"face {g}", "inconsistent toggling"))
            else:
                labels[g] = want
                queue.append(g)
    for f, lab in labels.items():
        for d in m.faces[f]:
            color = m.edges[d.edge][2]
            if color and bool(lab & bit(color)) != d.forward:
                out.append(Violation("labels", f"face {fmt(lab)}", f"wrong side of wire {color}"))
    return labels, out


def validate_wiring(w: Wiring) -> list[Violation]:
    out = w.structure_violations()
    if out:
        return out
    n = w.n
    for c in w.crossings:
        seq = w.pair_sequence(c.i, c.j)
        q = seq.index(c.id) + 1
        if c.black != (q % 2 == 0):
            out.append(Violation("W2", f"x{c.id}", "stored color disagrees with position parity"))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b = w.pair_sequence(i, j), w.pair_sequence(j, i)
            if not a or len(a) % 2 == 0:
                out.append(Violation("W2", f"({i},{j})", f"wires cross {len(a)} times"))
            if b != a[::-1]:
                out.append(Violation("W2", f"({i},{j})", "crossings not met in opposed orders"))
    if out:
        return out
    m = w.map
    verts = 2 * n + len(w.crossings)
    if verts - len(m.edges) + len(m.faces) != 2:
        out.append(Violation("euler", "map", f"V-E+F = {verts - len(m.edges) + len(m.faces)}"))
        return out
    outer = m.face_of[Dart(m.arc_from[("s", 1)], True)] if n else None
    labels, bad = _label_faces(w)
    out.extend(bad)
    inner = [f for f in range(len(m.faces)) if f != outer]
    if set(labels) != set(inner):
        out.append(Violation("labels", "map", "some inner face is unreachable"))
        return out
    for p in m.points:
        f = m.face_of[Dart(m.arc_from[p], False)]
        if p[0] == "s":
            want = interval(1, p[1])
        else:
            want = interval(p[1] + 1, n)
        if labels[f] != want:
            out.append(Violation("labels", f"boundary at {p}", f"label {fmt(labels[f])} expected {fmt(want)}"))
    by_label: dict[int, int] = {}
    for f in inner:
        if labels[f] in by_label:
            out.append(Violation("nocopies", fmt(labels[f]), "two faces share a label"))
        by_label[labels[f]] = f
        colors = [m.edges[d.edge][2] for d in m.faces[f] if m.edges[d.edge][2]]
        if len(colors) != len(set(colors)):
            out.append(Violation("nocopies", fmt(labels[f]), "face meets a wire twice"))
    cyclic = {f for f in inner if _is_cyclic(m, f)}
    images = []
    for i, j, q, root in w.lenses():
        h = m.half[root]
        corner = (h["out_i"], h["in_j"]) if q % 2 == 0 else (h["in_i"], h["out_j"])
        f = m.corner_face.get((("c", root),) + corner)
        where = f"lens ({i},{j},{q})"
        if f is None:
            out.append(Violation("W3", where, "root crossing has no face in the lens corner"))
            continue
        images.append(f)
        if f not in cyclic:
            out.append(Violation("W3", where, "face at the lens root is not cyclic"))
        if not any(m.edges[d.edge][2] not in (0, i, j) for d in m.faces[f]):
            out.append(Violation("proper", where, "the lens is a whole face"))
    if len(set(images)) != len(images) or set(images) != cyclic:
        out.append(Violation("W3", "map", "lenses and cyclic faces are not in bijection"))
    return out


def _is_cyclic(m: _Map, f: int) -> bool:
    darts = m.faces[f]
    if any(m.edges[d.edge][2] == 0 for d in darts):
        return False
    return all(d.forward for d in darts) or not any(d.forward for d in darts)


def faces(w: Wiring) -> list[WFace]:
    labels, bad = _label_faces(w)
    if bad:
        raise PluckerError("label-inconsistency", bad[0].message)
    m = w.map
    out = [WFace(tuple(m.faces[f]), lab, _is_cyclic(m, f)) for f, lab in labels.items()]
    seen = set()
    for face in out:
        if face.label in seen:
            raise PluckerError("label-inconsistency", f"label {fmt(face.label)} repeats")
        seen.add(face.label)
        colors = [m.edges[d.edge][2] for d in face.darts if m.edges[d.edge][2]]
        if len(colors) != len(set(colors)):
            raise PluckerError("label-inconsistency", f"face {fmt(face.label)} meets a wire twice")
    return sorted(out, key=lambda f: (size(f.label), f.label))


def spectrum(w: Wiring) -> Collection:
    spec = Collection(w.n, [f.label for f in faces(w) if not f.cyclic])
    if len(spec) != largest_size(w.n):
        raise PluckerError("bad-spectrum-size", f"{len(spec)} != {largest_size(w.n)}")
    return spec


def tiling_to_wiring(t: GTiling) -> Wiring:
    index = {tile: k for k, tile in enumerate(t.tiles)}
    wires = [[index[x] for x in strip(t, i).tiles] for i in range(1, t.n + 1)]
    crossings = [Crossing(k, x.i, x.j, x.black) for x, k in index.items()]
    return Wiring(t.n, crossings, wires)


def wiring_to_tiling(w: Wiring) -> GTiling:
    bad = validate_wiring(w)
    if bad:
        raise PluckerError("not-proper", f"{bad[0].axiom} at {bad[0].where}: {bad[0].message}")
    return GTiling(w.n, crossing_tiles(w).values())


def crossing_tiles(w: Wiring) -> dict[int, Tile]:
    """The dual tile of each crossing, read off the labels of its four corner faces."""
    labels, _ = _label_faces(w)
    m = w.map
    tiles = {}
    for c in w.crossings:
        v = ("c", c.id)
        ring = m.rot[v]
        around = [labels[m.corner_face[(v, ring[k], ring[(k + 1) % 4])]] for k in range(4)]
        x = min(around, key=size)
        want = {x, x | bit(c.i), x | bit(c.j), x | bit(c.i) | bit(c.j)}
        if set(around) != want or x & (bit(c.i) | bit(c.j)):
            raise PluckerError("not-proper", f"faces around x{c.id} are not a tile pattern")
        tiles[c.id] = Tile(x, c.i, c.j, c.black)
    return tiles


def remove_wire(w: Wiring, i: int | None = None) -> Wiring:
    n = w.n
    i = n if i is None else i
    if i not in (1, n):
        raise PluckerError("bad-wire", "only the first or last wire can be removed")
    keep = [c for c in w.crossings if i not in (c.i, c.j)]
    ids = {c.id for c in keep}
    wires = [[x for x in lst if x in ids] for k, lst in enumerate(w.wires, start=1) if k != i]
    if i == 1:
        keep = [Crossing(c.id, c.i - 1, c.j - 1, c.black) for c in keep]
    return Wiring(n - 1, keep, wires)


def relabel_compact(w: Wiring) -> Wiring:
    """Renumber crossing ids as 0.. in order of (first wire position, wire)."""
    order = {}
    for lst in w.wires:
        for cid in lst:
            order.setdefault(cid, len(order))
    cs = [Crossing(order[c.id], c.i, c.j, c.black) for c in w.crossings]
    return Wiring(w.n, cs, [[order[x] for x in lst] for lst in w.wires])
