import math

import pytest

from plucker.sets import Collection, PluckerError, bit, full, interval, standard
from plucker.tiling import (
    GTiling,
    Tile,
    boundary_angle,
    classify_vertices,
    descend,
    find_configs,
    from_spectrum,
    from_spectrum_by_flips,
    lowering_flip,
    raising_flip,
    reverse,
    standard_tiling,
    strip,
    validate,
)
from helpers import FIGURE_BASIS, FIGURE_BLACK, orbit, tilings_of_orbit


@pytest.mark.parametrize("n", range(0, 7))
def test_standard_tiling(n):
    t = standard_tiling(n)
    assert validate(t) == []
    assert len(t.tiles) == n * (n - 1) // 2
    assert t.spectrum() == standard(n)
    assert t.black == ()


def test_boundary_angles_sum_to_polygon_total():
    n = 5
    boundary = {interval(1, c) for c in range(n + 1)} | {interval(c, n) for c in range(1, n + 1)}
    assert len(boundary) == 2 * n
    total = sum(boundary_angle(n, v) for v in boundary)
    assert math.isclose(total, (2 * n - 2) * math.pi)


def test_figure_tiling():
    t = from_spectrum(FIGURE_BASIS)
    assert len(t.tiles) == 8
    assert t.black == (FIGURE_BLACK,)
    assert t.terminal == frozenset({bit(2), bit(1) | bit(2) | bit(4)})
    assert t.spectrum() == FIGURE_BASIS
    assert GTiling.from_json(t.to_json()) == t


def test_validate_reports_overlap():
    t = standard_tiling(3)
    bad = GTiling(3, list(t.tiles) + [Tile(0, 1, 3)])
    assert validate(bad)


def test_validate_reports_missing_tile():
    t = standard_tiling(3)
    assert validate(GTiling(3, t.tiles[1:]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flip_construction_agrees(n):
    for b in orbit(n):
        assert from_spectrum(b) == from_spectrum_by_flips(b)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_descent_reaches_standard_tiling(n):
    for t in tilings_of_orbit(n):
        cur = t
        for c in descend(t):
            cur = lowering_flip(cur, c)
        assert cur == standard_tiling(n)


@pytest.mark.parametrize("n", [3, 4])
def test_raising_undoes_lowering(n):
    for t in tilings_of_orbit(n):
        for c in find_configs(t, "W"):
            low = lowering_flip(t, c)
            assert raising_flip(low, c._replace(kind="M")) == t


def test_reverse_is_involution_and_complements_spectrum():
    for t in tilings_of_orbit(4):
        r = reverse(t)
        assert validate(r) == []
        assert reverse(r) == t
        assert r.spectrum() == Collection(4, [full(4) ^ x for x in t.spectrum()])


def test_infeasible_flip_rejected():
    t = from_spectrum(FIGURE_BASIS)
    from plucker.tiling import Config

    with pytest.raises(PluckerError):
        lowering_flip(t, Config("W", 0, 2, 3, 4))
    with pytest.raises(PluckerError):
        lowering_flip(t, Config("M", 0, 1, 2, 3))


def test_from_spectrum_rejects_non_spectrum():
    with pytest.raises(PluckerError) as exc:
        from_spectrum(Collection.from_sets(3, [[]]))
    assert exc.value.code == "not-a-spectrum"


def test_vertex_classes_on_figure():
    g = classify_vertices(from_spectrum(FIGURE_BASIS))
    assert g.classes[bit(2)] == "terminal-bottom"
    assert g.classes[bit(1) | bit(2) | bit(4)] == "terminal-top"


def test_strip_of_each_color_crosses_once():
    for t in tilings_of_orbit(5):
        for i in range(1, 6):
            s = strip(t, i)
            assert len(s.tiles) == len([x for x in t.tiles if i in (x.i, x.j)])

