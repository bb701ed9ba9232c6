import pytest

from plucker.harness import oracle_largest_ws
from plucker.sets import PluckerError, full, separator
from plucker.surgery import (
    LegalPath,
    contract,
    contract_color,
    expand,
    h_forests,
    is_legal,
    legal_path_from_separator,
    legal_paths,
    lp_graph,
    tiling_from_ws,
)
from plucker.tiling import from_spectrum, standard_tiling, validate
from helpers import FIGURE_BASIS, orbit, tilings_of_orbit


@pytest.mark.parametrize("n,total", [(2, 2), (3, 10), (4, 124)])
def test_legal_path_totals_match_next_orbit(n, total):
    # the next orbit size is counted independently by the clique oracle
    assert len(oracle_largest_ws(n + 1)) == total
    assert sum(sum(1 for _ in legal_paths(tp)) for tp in tilings_of_orbit(n)) == total


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lp_graph_is_union_of_legal_paths(n):
    for tp in tilings_of_orbit(n):
        union = set()
        for p in legal_paths(tp):
            assert is_legal(tp, p)
            union |= set(p.edges())
        assert union == set(lp_graph(tp))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_critical_sets_distinct_across_paths(n):
    for tp in tilings_of_orbit(n):
        crit = [p.critical() for p in legal_paths(tp)]
        assert len(crit) == len(set(crit))


def test_figure_contraction():
    t = from_spectrum(FIGURE_BASIS)
    tp, p = contract(t)
    assert tp == standard_tiling(3)
    assert p.critical() == separator(FIGURE_BASIS).sets
    assert legal_path_from_separator(tp, separator(FIGURE_BASIS)) == p


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_tiling_from_ws(n):
    for c in orbit(n):
        t = tiling_from_ws(c)
        assert t.spectrum() == c
        assert t == from_spectrum(c)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_level_forests(n):
    for t in tilings_of_orbit(n):
        levels = h_forests(t)
        assert len(levels) == n
        for level in levels:
            assert sum(c.principal for c in level) == 1
            stars = [c.center for c in level if not c.principal]
            assert len(stars) == len(set(stars))


def test_contract_every_color_stays_valid():
    for t in tilings_of_orbit(5):
        assert contract_color(t, 5) == contract(t)[0]
        for i in (1, 5):
            tp = contract_color(t, i)
            assert validate(tp) == []
            assert tp.spectrum() in orbit(4)


def test_inner_contraction_of_pure_tilings():
    for t in tilings_of_orbit(5):
        if t.black:
            continue
        for i in range(2, 5):
            assert validate(contract_color(t, i)) == []


def test_inner_contraction_can_fail():
    failures = 0
    for t in tilings_of_orbit(5):
        try:
            contract_color(t, 3)
        except PluckerError as exc:
            assert exc.code == "contraction-invalid"
            failures += 1
    assert failures > 0


def test_illegal_path_rejected():
    tp = standard_tiling(3)
    straight = LegalPath.from_vertices(3, [0, 0b001, 0b011, 0b111])
    assert is_legal(tp, straight)
    zigzag = LegalPath.from_vertices(3, [0, 0b001, 0b011, 0b010, 0b110, 0b111])
    assert is_legal(tp, zigzag)
    off_graph = LegalPath.from_vertices(3, [0, 0b001, 0b101, 0b111])
    assert not is_legal(tp, off_graph)
    with pytest.raises(PluckerError):
        expand(tp, off_graph)
    with pytest.raises(PluckerError):
        LegalPath.from_vertices(3, [0, 0b011])


def test_path_json_round_trip():
    tp = standard_tiling(3)
    for p in legal_paths(tp):
        assert LegalPath.from_json(p.to_json()) == p
        assert p.vertices[-1] == full(3)
