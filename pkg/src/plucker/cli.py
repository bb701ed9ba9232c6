"""Command-line entry point.

Exit status: 0 when the property holds or the command succeeds, 1 when the property
fails (a JSON diagnostic goes to stdout), 2 on unreadable input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import hypersimplex as hs
from .formats import ParseError, dump, load_collection, read_json, set_arg
from .harness import cached_oracle, flip_orbit, manifest_lines, verify_theorem_a
from .render import render_svg
from .sets import Collection, PluckerError, elements_of, largest_size, standard, ws_mask
from .surgery import LegalPath, contract, expand, legal_paths
from .tiling import GTiling, from_spectrum
from .tropical import apply_3flip, corteges, descend_to_standard, extend_from_intervals, find_3flips
from .wiring import Wiring, tiling_to_wiring, validate_wiring, wiring_to_tiling


class Failure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "failure"))
        self.payload = payload


def _emit(obj) -> None:
    print(dump(obj))


def _collection(args) -> Collection:
    c, _ = load_collection(args.file, getattr(args, "n", None))
    return c


def cmd_check_ws(args) -> None:
    c = _collection(args)
    ms = list(c)
    for a in range(len(ms)):
        for b in range(a + 1, len(ms)):
            if not ws_mask(ms[a], ms[b]):
                raise Failure({"error": "not-weakly-separated",
                               "pair": [elements_of(ms[a]), elements_of(ms[b])]})
    _emit({"weakly_separated": True, "size": len(c), "largest": len(c) == largest_size(c.n)})


def cmd_check_basis(args) -> None:
    c = _collection(args)
    if len(c) != largest_size(c.n):
        raise Failure({"error": "wrong-size", "size": len(c), "expected": largest_size(c.n)})
    seq = descend_to_standard(c)
    _emit({"semi_normal": True, "descent_length": len(seq)})


def cmd_descend(args) -> None:
    c = _collection(args)
    _emit({"n": c.n, "flips": [f.to_json() for f in descend_to_standard(c)]})


def cmd_flip(args) -> None:
    c = _collection(args)
    flips = find_3flips(c)
    if not args.cortege:
        _emit({"n": c.n, "flips": [f.to_json() for f in flips]})
        return
    parts = args.cortege.split(":")
    if len(parts) != 2:
        raise ParseError("cortege format is X:i,j,k")
    x = set_arg(parts[0])
    try:
        i, j, k = (int(v) for v in parts[1].split(","))
    except ValueError:
        raise ParseError("cortege format is X:i,j,k") from None
    match = [f for f in flips if (f.X, f.i, f.j, f.k) == (x, i, j, k)]
    if not match:
        raise Failure({"error": "invalid-cortege", "cortege": args.cortege})
    _emit(apply_3flip(c, match[0]).to_json())


def cmd_tiling_from_spectrum(args) -> None:
    _emit(from_spectrum(_collection(args)).to_json())


def _tiling(path: str) -> GTiling:
    data = read_json(path)
    try:
        return GTiling.from_json(data)
    except (KeyError, TypeError, ValueError):
        raise ParseError("tiling JSON needs 'n' and 'tiles'") from None


def _wiring(path: str) -> Wiring:
    data = read_json(path)
    try:
        return Wiring.from_json(data)
    except (KeyError, TypeError, ValueError):
        raise ParseError("wiring JSON needs 'n', 'crossings' and 'wires'") from None


def cmd_tiling_to_wiring(args) -> None:
    from .tiling import require_valid

    _emit(tiling_to_wiring(require_valid(_tiling(args.file))).to_json())


def cmd_wiring_to_tiling(args) -> None:
    w = _wiring(args.file)
    bad = validate_wiring(w)
    if bad:
        raise Failure({"error": "not-proper", "violations": [v.to_json() for v in bad]})
    _emit(wiring_to_tiling(w).to_json())


def cmd_validate(args) -> None:
    from .tiling import validate

    data = read_json(args.file)
    if "tiles" in data:
        bad = validate(_tiling(args.file))
    else:
        bad = validate_wiring(_wiring(args.file))
    if bad:
        raise Failure({"error": "invalid", "violations": [v.to_json() for v in bad]})
    _emit({"valid": True})


def cmd_contract(args) -> None:
    tp, p = contract(_tiling(args.file))
    _emit({"tiling": tp.to_json(), "path": p.to_json()})


def cmd_expand(args) -> None:
    tp = _tiling(args.file)
    data = read_json(args.path)
    try:
        p = LegalPath.from_json(data.get("path", data))
    except (KeyError, TypeError, ValueError):
        raise ParseError("path JSON needs 'n' and 'vertices'") from None
    _emit(expand(tp, p).to_json())


def cmd_legal_paths(args) -> None:
    paths = list(legal_paths(_tiling(args.file)))
    if args.count:
        _emit({"count": len(paths)})
    else:
        _emit({"count": len(paths), "paths": [p.to_json() for p in paths]})


def cmd_enumerate(args) -> None:
    fams = cached_oracle(args.n, args.cache, args.force)
    sys.stdout.write(manifest_lines(fams))


def cmd_orbit(args) -> None:
    if args.standard is not None:
        start = standard(args.standard)
    elif args.file:
        start = _collection(args)
    else:
        raise ParseError("give a collection file or --standard N")
    rep = flip_orbit(start, args.kind)
    out = rep.summary()
    if args.manifest:
        out["manifest"] = rep.manifest
    _emit(out)


def cmd_verify_theorem_a(args) -> None:
    rep = verify_theorem_a(args.n, force=args.force, cache=args.cache)
    if not rep.ok:
        raise Failure({"error": "characterizations-differ", **rep.to_json()})
    _emit(rep.to_json())


def cmd_hs_standard(args) -> None:
    b = hs.co_standard_basis(args.n, args.m) if args.co else hs.standard_basis(args.n, args.m)
    _emit(b.to_json())


def _hs_collection(args) -> hs.HSCollection:
    c, data = load_collection(args.file)
    if isinstance(c, hs.HSCollection):
        return c
    sizes = {len(s) for s in c.subsets()}
    if len(sizes) != 1:
        raise ParseError("collection is not uniform; give an 'm' field")
    return hs.HSCollection(c.n, sizes.pop(), c.members)


def cmd_hs_descend(args) -> None:
    b = _hs_collection(args)
    _emit({"n": b.n, "m": b.m, "flips": [f.to_json() for f in hs.descend_hs(b)]})


def cmd_hs_orbit(args) -> None:
    rep = flip_orbit(hs.standard_basis(args.n, args.m), "4flip")
    out = rep.summary()
    if args.manifest:
        out["manifest"] = rep.manifest
    _emit(out)


def cmd_hs_embed(args) -> None:
    _emit(hs.embed_delta(_collection(args), args.nprime).to_json())


def cmd_hs_truncated(args) -> None:
    c = hs.truncated_standard(args.n, args.mlo, args.mhi)
    out = c.to_json()
    out.update({"mlo": args.mlo, "mhi": args.mhi})
    _emit(out)


def cmd_hs_truncated_descend(args) -> None:
    c, data = load_collection(args.file)
    mlo = args.mlo if args.mlo is not None else data.get("mlo")
    mhi = args.mhi if args.mhi is not None else data.get("mhi")
    if mlo is None or mhi is None:
        raise ParseError("band needs --mlo/--mhi or 'mlo'/'mhi' fields")
    three, four = hs.descend_truncated(c, int(mlo), int(mhi))
    _emit({"three_flips": [f.to_json() for f in three], "four_flips": [f.to_json() for f in four]})


def cmd_tp_check(args) -> None:
    rng = random.Random(args.seed)
    for trial in range(args.trials):
        values = {x: rng.randint(-args.range, args.range) for x in standard(args.n)}
        f = extend_from_intervals(args.n, values)
        bad = f.violations()
        if bad:
            raise Failure({"error": "relation-fails", "trial": trial, "cortege": list(bad[0])})
    _emit({"n": args.n, "trials": args.trials, "seed": args.seed, "corteges": sum(1 for _ in corteges(args.n))})


def cmd_render(args) -> None:
    data = read_json(args.file)
    if "tiles" in data:
        obj = _tiling(args.file)
    elif "crossings" in data:
        obj = _wiring(args.file)
    else:
        raise ParseError("render expects a tiling or a wiring")
    render_svg(obj, args.out)
    _emit({"written": str(args.out)})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plucker", description="Tropical Plücker bases, tilings and wirings.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--cache", type=Path, default=None, help="directory for enumeration manifests")
    p.add_argument("--force", action="store_true", help="lift size guards and recompute cached results")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file=True):
        sp = sub.add_parser(name, help=help_text)
        if file:
            sp.add_argument("file", help="input path, '-' for stdin")
        sp.set_defaults(func=func)
        return sp

    for name, func, text in [
        ("check-ws", cmd_check_ws, "is the collection weakly separated"),
        ("check-basis", cmd_check_basis, "is the collection a semi-normal basis"),
        ("descend", cmd_descend, "lowering flips down to the standard basis"),
        ("tiling-from-spectrum", cmd_tiling_from_spectrum, "rebuild the tiling with this spectrum"),
    ]:
        add(name, func, text).add_argument("--n", type=int, default=None, help="ground size for text input")
    sp = add("flip", cmd_flip, "list flips, or apply one given as X:i,j,k")
    sp.add_argument("--cortege", default=None, help="X:i,j,k; write --cortege=-:i,j,k for X empty")
    sp.add_argument("--n", type=int, default=None)
    add("tiling-to-wiring", cmd_tiling_to_wiring, "dual wiring of a tiling")
    add("wiring-to-tiling", cmd_wiring_to_tiling, "dual tiling of a proper wiring")
    add("validate", cmd_validate, "check a tiling or wiring against its axioms")
    add("contract", cmd_contract, "contract the last color")
    sp = add("expand", cmd_expand, "expand a tiling along a legal path")
    sp.add_argument("path", help="legal path JSON")
    sp = add("legal-paths", cmd_legal_paths, "enumerate legal paths")
    sp.add_argument("--count", action="store_true")
    sp = add("enumerate", cmd_enumerate, "all largest weakly separated collections", file=False)
    sp.add_argument("n", type=int)
    sp = add("orbit", cmd_orbit, "flip orbit report", file=False)
    sp.add_argument("file", nargs="?")
    sp.add_argument("--standard", type=int, default=None, metavar="N")
    sp.add_argument("--kind", choices=["3flip", "4flip", "both"], default="3flip")
    sp.add_argument("--manifest", action="store_true")
    sp.add_argument("--n", type=int, default=None)
    sp = add("verify-theorem-a", cmd_verify_theorem_a, "compare the four characterizations", file=False)
    sp.add_argument("n", type=int)
    sp = add("hs-standard", cmd_hs_standard, "standard basis of a hypersimplex", file=False)
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--co", action="store_true", help="co-standard basis instead")
    add("hs-descend", cmd_hs_descend, "lowering 4-flips down to the standard basis")
    sp = add("hs-orbit", cmd_hs_orbit, "4-flip orbit of the standard basis", file=False)
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--manifest", action="store_true")
    sp = add("hs-embed", cmd_hs_embed, "embed a cube basis into a hypersimplex")
    sp.add_argument("--nprime", type=int, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp = add("hs-truncated", cmd_hs_truncated, "standard basis of a truncated cube", file=False)
    sp.add_argument("n", type=int)
    sp.add_argument("mlo", type=int)
    sp.add_argument("mhi", type=int)
    sp = add("hs-truncated-descend", cmd_hs_truncated_descend, "two-phase descent in a truncated cube")
    sp.add_argument("--mlo", type=int, default=None)
    sp.add_argument("--mhi", type=int, default=None)
    sp = add("tp-check", cmd_tp_check, "random valuations on intervals, extended and checked", file=False)
    sp.add_argument("n", type=int)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--range", type=int, default=5)
    sp = add("render", cmd_render, "draw a tiling or wiring as SVG")
    sp.add_argument("--out", type=Path, required=True)
    return p


USAGE_ERRORS = {"parse-error", "bad-ground-size", "bad-element", "duplicate-element", "duplicate-member",
                "ground-size-mismatch", "non-uniform", "bad-level", "bad-band", "size-guard"}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        args.func(args)
    except Failure as exc:
        _emit(exc.payload)
        return 1
    except PluckerError as exc:
        if exc.code in USAGE_ERRORS:
            print(json.dumps(exc.as_dict()), file=sys.stderr)
            return 2
        _emit(exc.as_dict())
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

