import pytest

from plucker.sets import PluckerError
from plucker.surgery import contract
from plucker.tiling import standard_tiling
from plucker.wiring import (
    Crossing,
    Wiring,
    faces,
    relabel_compact,
    remove_wire,
    spectrum,
    tiling_to_wiring,
    validate_wiring,
    wiring_to_tiling,
)
from helpers import FIGURE_BASIS, tilings_of_orbit
from plucker.tiling import from_spectrum


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_faces_and_spectrum(n):
    for t in tilings_of_orbit(n):
        w = tiling_to_wiring(t)
        assert validate_wiring(w) == []
        fs = faces(w)
        assert sum(f.cyclic for f in fs) == len(t.terminal)
        assert {f.label for f in fs if f.cyclic} == set(t.terminal)
        assert spectrum(w) == t.spectrum()


def test_each_wire_crosses_every_other_odd_times():
    for t in tilings_of_orbit(5):
        w = tiling_to_wiring(t)
        for i in range(1, 6):
            for j in range(i + 1, 6):
                assert len(w.pair_sequence(i, j)) % 2 == 1


def test_json_round_trip_and_relabel():
    w = tiling_to_wiring(from_spectrum(FIGURE_BASIS))
    assert Wiring.from_json(w.to_json()) == w
    r = relabel_compact(w)
    assert wiring_to_tiling(r) == wiring_to_tiling(w)


def test_removing_last_wire_matches_contraction():
    for t in tilings_of_orbit(5):
        tp, _ = contract(t)
        assert wiring_to_tiling(remove_wire(tiling_to_wiring(t))) == tp


def test_removing_inner_wire_rejected():
    with pytest.raises(PluckerError):
        remove_wire(tiling_to_wiring(standard_tiling(4)), 2)


def test_broken_structure_detected():
    w = tiling_to_wiring(standard_tiling(3))
    bad = Wiring(3, w.crossings, [w.wires[0], w.wires[1], ()])
    assert bad.structure_violations()
    assert validate_wiring(bad)
    with pytest.raises(PluckerError):
        wiring_to_tiling(bad)


def test_wrong_crossing_order_detected():
    w = tiling_to_wiring(standard_tiling(3))
    bad = Wiring(3, w.crossings, [tuple(reversed(w.wires[0])), w.wires[1], w.wires[2]])
    assert validate_wiring(bad)


def test_whole_face_lens_rejected():
    # wires 1 and 2 cross three times with nothing in between
    w = Wiring(2, [Crossing(0, 1, 2), Crossing(1, 1, 2), Crossing(2, 1, 2)], [[0, 1, 2], [0, 1, 2]])
    assert validate_wiring(w)
