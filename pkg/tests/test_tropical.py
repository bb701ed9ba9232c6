import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plucker.sets import Collection, PluckerError, bit, standard
from plucker.tropical import (
    LOWERING,
    RAISING,
    TPFunction,
    apply_3flip,
    corteges,
    descend_to_standard,
    extend_from_basis,
    extend_from_intervals,
    find_3flips,
    modular,
    p3_holds,
    replay_backward,
    size_sum,
)
from helpers import FIGURE_BASIS, orbit


def test_cortege_count():
    # choose the three indices, then any subset of the rest
    for n in range(3, 7):
        expected = (n * (n - 1) * (n - 2) // 6) * (1 << (n - 3))
        assert sum(1 for _ in corteges(n)) == expected


@given(st.lists(st.integers(-20, 20), min_size=5, max_size=5))
def test_modular_functions_satisfy_relation(weights):
    f = modular(5, {e + 1: w for e, w in enumerate(weights)})
    assert f.violations() == []


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(3, 5))
def test_extension_from_intervals_is_tp(seed, n):
    rng = random.Random(seed)
    vals = {x: rng.randint(-9, 9) for x in standard(n)}
    f = extend_from_intervals(n, vals)
    assert f.violations() == []
    assert all(f(x) == v for x, v in vals.items())


def test_extension_domain_checked():
    with pytest.raises(PluckerError):
        extend_from_intervals(3, {0: 0})
    with pytest.raises(PluckerError):
        TPFunction(2, {0: 0})


def test_p3_argument_checks():
    f = modular(3, {1: 0, 2: 0, 3: 0})
    with pytest.raises(PluckerError):
        p3_holds(f, 0, 2, 1, 3)
    with pytest.raises(PluckerError):
        p3_holds(f, bit(1), 1, 2, 3)


def test_standard_basis_has_no_lowering_flip():
    for n in range(1, 7):
        assert all(c.direction == RAISING for c in find_3flips(standard(n)))


def test_figure_basis_descends():
    seq = descend_to_standard(FIGURE_BASIS)
    assert len(seq) == 2
    assert replay_backward(standard(4), seq) == FIGURE_BASIS


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flips_are_involutive_and_change_size_sum(n):
    for b in orbit(n):
        for c in find_3flips(b):
            nb = apply_3flip(b, c)
            assert size_sum(nb) - size_sum(b) == (-1 if c.direction == LOWERING else 1)
            back = [d for d in find_3flips(nb) if (d.X, d.i, d.j, d.k) == (c.X, c.i, c.j, c.k)]
            assert len(back) == 1 and apply_3flip(nb, back[0]) == b


def test_apply_rejects_missing_witness():
    c = find_3flips(standard(3))[0]
    with pytest.raises(PluckerError):
        apply_3flip(Collection.from_sets(3, [[]]), c)


def test_wild_collection_reported_stuck():
    b = Collection.from_sets(3, [[1, 3], [2]])
    with pytest.raises(PluckerError) as exc:
        descend_to_standard(b)
    assert exc.value.code == "stuck-not-standard"


@pytest.mark.parametrize("n", [3, 4])
def test_basis_values_are_free(n):
    rng = random.Random(7)
    for b in orbit(n):
        vals = {x: rng.randint(-5, 5) for x in b}
        f = extend_from_basis(b, vals)
        assert f.violations() == []
        assert f.restrict(b) == vals
