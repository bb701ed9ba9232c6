from itertools import combinations
from math import comb

import pytest

from plucker.harness import flip_orbit, oracle_largest_ws_band
from plucker.hypersimplex import (
    HSCollection,
    apply_4flip,
    co_standard_basis,
    descend_hs,
    descend_truncated,
    embed_delta,
    find_4flips,
    hs_size,
    p4_holds,
    standard_basis,
    truncated_size,
    truncated_standard,
)
from plucker.sets import PluckerError, standard, is_interval, is_ws_collection, mask_of, size, ws_mask
from plucker.tropical import modular


def sesquialteral_oracle(n: int, m: int) -> set[int]:
    """Intervals, and prefix-plus-one-interval unions with a gap, by brute force over m-subsets."""
    out = set()
    for s in combinations(range(1, n + 1), m):
        x = mask_of(s)
        if is_interval(x):
            out.add(x)
            continue
        p = 0
        while p < m and s[p] == p + 1:
            p += 1
        if p and is_interval(mask_of(s[p:])):
            out.add(x)
    return out


@pytest.mark.parametrize("n", range(0, 9))
def test_standard_basis_brute_force(n):
    for m in range(0, n + 1):
        b = standard_basis(n, m)
        assert set(b.members) == sesquialteral_oracle(n, m) or m == 0
        assert len(b) == hs_size(n, m) == m * (n - m) + 1
        assert is_ws_collection(b)
        assert is_ws_collection(co_standard_basis(n, m))
        assert len(co_standard_basis(n, m)) == hs_size(n, m)


@pytest.mark.parametrize("n,m", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_four_flips_preserve_separation(n, m):
    members = flip_orbit(standard_basis(n, m), "4flip").members
    for b in members:
        for f in find_4flips(b, m):
            nb = apply_4flip(b, f)
            (new,) = nb.members - b.members
            assert all(ws_mask(new, x) for x in nb if x != new)


def test_golden_orbit_sizes():
    assert flip_orbit(standard_basis(4, 2), "4flip").summary()["members"] == 2
    rep = flip_orbit(standard_basis(6, 3), "4flip")
    best, fams = oracle_largest_ws_band(6, 3, 3)
    assert best == hs_size(6, 3)
    assert rep.count == len(fams)


@pytest.mark.parametrize("weights", [[0, 1, 2, 3, 4], [5, -2, 7, 0, 1]])
def test_modular_functions_satisfy_four_term_relation(weights):
    f = modular(5, {e + 1: w for e, w in enumerate(weights)})
    for x in range(1 << 5):
        free = [e for e in range(1, 6) if not x >> (e - 1) & 1]
        for i, j, k, l in combinations(free, 4):
            assert p4_holds(f, x, i, j, k, l)


def test_descend_rejects_non_largest():
    with pytest.raises(PluckerError):
        descend_hs(HSCollection(4, 2, [mask_of([1, 2])]))


def test_embedding_of_standard_basis():
    assert embed_delta(standard(3), 3) == co_standard_basis(6, 3)
    for n in range(2, 5):
        e = embed_delta(standard(n), n + 1)
        assert e.m == n and all(size(x) == n for x in e)


@pytest.mark.parametrize("n,lo,hi", [(3, 1, 2), (4, 1, 3), (5, 1, 3), (5, 2, 4)])
def test_truncated_cube(n, lo, hi):
    best, fams = oracle_largest_ws_band(n, lo, hi)
    # direct count: intervals in the band plus the lowest-level sesquialteral sets
    direct = len({x for x in standard_basis(n, lo)} | {x for x in range(1 << n) if is_interval(x) and lo <= size(x) <= hi})
    assert best == truncated_size(n, lo, hi) == direct
    assert len(truncated_standard(n, lo, hi)) == direct
    for c in fams:
        descend_truncated(c, lo, hi)


def test_full_band_is_the_whole_cube():
    for n in range(1, 8):
        assert truncated_size(n, 0, n) == comb(n + 1, 2) + 1
        assert truncated_standard(n, 0, n) == standard(n)
