"""Acceptance criteria. Each test prints one PASS/FAIL line, repeated in the terminal summary."""

import random
import time

from helpers import ACCEPTANCE_LINES, FIGURE_BASIS, FIGURE_BLACK, generated_tilings, orbit, tilings_of_orbit
from plucker.harness import flip_orbit, oracle_largest_ws_band, verify_theorem_a
from plucker.hypersimplex import (
    HSCollection,
    apply_4flip,
    co_standard_basis,
    descend_hs,
    descend_truncated,
    embed_delta,
    eta,
    standard_basis,
    truncated_standard,
)
from plucker.sets import Collection, PluckerError, is_ws_collection, size, standard
from plucker.surgery import contract, expand, h_forests, legal_paths
from plucker.tiling import (
    black_order_edges,
    classify_vertices,
    from_spectrum,
    interval_implication_holds,
    is_acyclic,
    is_graded,
    strip,
    validate,
)
from plucker.tropical import extend_from_basis, extend_from_intervals, interval_values, is_semi_normal
from plucker.wiring import faces, tiling_to_wiring, validate_wiring, wiring_to_tiling


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, detail


def test_1_cardinality_law():
    problems = []
    timings = {}
    for n, budget in ((3, 1.0), (4, 1.0), (5, 120.0)):
        start = time.perf_counter()
        members = flip_orbit(standard(n)).members
        elapsed = time.perf_counter() - start
        timings[n] = round(elapsed, 3)
        target = n * (n + 1) // 2 + 1
        problems += [f"n={n} size {len(b)}" for b in members if len(b) != target]
        if elapsed > budget:
            problems.append(f"n={n} took {elapsed:.2f}s")
    report("1 cardinality law", not problems, f"times {timings}" if not problems else "; ".join(problems[:5]))


def test_2_figure_reproduction():
    start = time.perf_counter()
    problems = []
    if not is_ws_collection(FIGURE_BASIS) or not is_semi_normal(FIGURE_BASIS):
        problems.append("check-basis rejects the basis")
    t = from_spectrum(FIGURE_BASIS)
    if len(t.tiles) != 8:
        problems.append(f"{len(t.tiles)} tiles")
    if t.black != (FIGURE_BLACK,):
        problems.append(f"black tiles {t.black}")
    if set(t.terminal) != {0b0010, 0b1011}:
        problems.append(f"terminal vertices {sorted(t.terminal)}")
    w = tiling_to_wiring(t)
    nblack = sum(c.black for c in w.crossings)
    ncyclic = sum(f.cyclic for f in faces(w))
    if nblack != 1 or ncyclic != 2:
        problems.append(f"{nblack} black crossings, {ncyclic} cyclic faces")
    elapsed = time.perf_counter() - start
    if elapsed > 1.0:
        problems.append(f"took {elapsed:.2f}s")
    report("2 figure reproduction", not problems, "; ".join(problems))


def test_3_four_characterizations_agree(tmp_path):
    counts = {}
    failed = []
    for n in (3, 4, 5):
        rep = verify_theorem_a(n, cache=tmp_path)
        counts[n] = sorted({len(v) for v in rep.manifests.values()})
        if not rep.ok:
            failed.append(str(rep.to_json()))
    report("3 four manifests identical", not failed, f"sizes per n {counts}" if not failed else failed[0])


def test_4_duality_round_trip():
    problems = []
    total = 0
    for n in range(1, 6):
        for t in tilings_of_orbit(n):
            total += 1
            w = tiling_to_wiring(t)
            if validate_wiring(w) or wiring_to_tiling(w) != t:
                problems.append(f"n={n} {t}")
    report("4 duality round trip", not problems, f"{total} tilings" if not problems else problems[0])


def test_5_uniqueness():
    problems = []
    total = 0
    for n in range(1, 6):
        for b in orbit(n):
            total += 1
            t = from_spectrum(b)
            if validate(t) or t.spectrum() != b or from_spectrum(t.spectrum()) != t:
                problems.append(f"n={n} {b}")
    report("5 reconstruction from spectrum", not problems, f"{total} bases" if not problems else problems[0])


def test_6_contraction_expansion_bijection():
    problems = []
    for n in range(2, 6):
        for t in tilings_of_orbit(n):
            tp, p = contract(t)
            if expand(tp, p) != t:
                problems.append(f"expand(contract) n={n}")
    for n in range(1, 5):
        for tp in tilings_of_orbit(n):
            for p in legal_paths(tp):
                if contract(expand(tp, p)) != (tp, p):
                    problems.append(f"contract(expand) n={n + 1}")
    for n in (4, 5):
        paths = sum(sum(1 for _ in legal_paths(tp)) for tp in tilings_of_orbit(n - 1))
        if paths != len(orbit(n)):
            problems.append(f"n={n}: {paths} legal paths vs {len(orbit(n))} tilings")
    report("6 contraction/expansion bijection", not problems, "; ".join(problems[:5]))


def _invariant_problems(t) -> list[str]:
    n = t.n
    out = [v.message for v in validate(t)]
    if out:
        return out
    if not is_graded(t):
        out.append("not graded")
    if len(t.vertices) != len(t.tiles) + n + 1:
        out.append("|V| != |T|+n+1")
    if len(t.vertices) + len(t.tiles) != len(t.edges) + 1:
        out.append("Euler relation fails")
    if len(t.terminal) != 2 * len(t.black):
        out.append("|V^t| != 2|T^b|")
    try:
        classify_vertices(t)
        for i in range(1, n + 1):
            strip(t, i)
        h_forests(t)
    except PluckerError as exc:
        out.append(exc.code)
    for upper in (True, False):
        if not is_acyclic(t.black, black_order_edges(t, upper)):
            out.append("black-tile order has a cycle")
    if not interval_implication_holds(t):
        out.append("interval implication fails")
    return out


def test_7_structural_invariants():
    problems = []
    total = 0
    for n in range(1, 6):
        for t in generated_tilings(n):
            total += 1
            problems += [f"n={n} {t}: {msg}" for msg in _invariant_problems(t)]
    report("7 structural invariants", not problems, f"{total} tilings" if not problems else problems[0])


def test_8_tropical_suite():
    problems = []
    for n in (4, 5):
        rng = random.Random(1000 + n)
        for _ in range(200):
            f = extend_from_intervals(n, interval_values(n, rng))
            if f.violations():
                problems.append(f"n={n} relation fails")
    for n in range(1, 6):
        rng = random.Random(n)
        for b in orbit(n):
            f = extend_from_intervals(n, interval_values(n, rng))
            g = extend_from_basis(b, f.restrict(b))
            if g != f:
                problems.append(f"n={n} round trip fails on {b}")
    report("8 tropical suite", not problems, "; ".join(problems[:5]))


def _descends_with_decreasing_eta(b: HSCollection) -> bool:
    cur = b
    for flip in descend_hs(b):
        nxt = apply_4flip(cur, flip)
        if eta(nxt) >= eta(cur):
            return False
        cur = nxt
    return cur == standard_basis(b.n, b.m)


def test_9_hypersimplex():
    problems = []
    for n in range(0, 9):
        for m in range(0, n + 1):
            got = len(standard_basis(n, m))
            if got != m * (n - m) + 1:
                problems.append(f"|IS_{n}^{m}| = {got}")
    for n, m in ((4, 2), (5, 2), (6, 3)):
        rep = flip_orbit(standard_basis(n, m), "4flip")
        _, fams = oracle_largest_ws_band(n, m, m)
        if {Collection(n, c.members) for c in rep.members} != {Collection(n, c.members) for c in fams}:
            problems.append(f"orbit != oracle for ({n},{m})")
        if not all(_descends_with_decreasing_eta(HSCollection(n, m, c.members)) for c in rep.members):
            problems.append(f"descent fails for ({n},{m})")
    if flip_orbit(standard_basis(4, 2), "4flip").count != 2:
        problems.append("orbit of Delta_4^2 is not of size 2")
    for n, lo, hi in ((3, 1, 2), (4, 1, 3)):
        _, fams = oracle_largest_ws_band(n, lo, hi)
        for c in fams:
            try:
                descend_truncated(c, lo, hi)
            except PluckerError as exc:
                problems.append(f"truncated ({n},{lo},{hi}) {c}: {exc.code}")
        if truncated_standard(n, lo, hi) not in fams:
            problems.append(f"truncated standard basis missing from oracle ({n},{lo},{hi})")
    report("9 hyper-simplex", not problems, "; ".join(problems[:5]))


def test_10_embedding():
    problems = []
    if embed_delta(standard(3), 3) != co_standard_basis(6, 3):
        problems.append("embedding of the standard basis is not co-standard")
    for b in orbit(3):
        e = embed_delta(b, 3)
        if not all(size(x) == 3 for x in e) or not _descends_with_decreasing_eta(e):
            problems.append(f"descent fails for the embedding of {b}")
    report("10 embedding", not problems, "; ".join(problems))
