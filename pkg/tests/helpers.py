"""Cached corpora shared by the test modules."""

from functools import lru_cache

from plucker.harness import enumerate_tilings, flip_orbit
from plucker.sets import Collection, standard
from plucker.tiling import GTiling, Tile, from_spectrum

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def orbit(n: int) -> tuple[Collection, ...]:
    return tuple(flip_orbit(standard(n)).members)


@lru_cache(maxsize=None)
def tilings_of_orbit(n: int) -> tuple[GTiling, ...]:
    return tuple(from_spectrum(b) for b in orbit(n))


@lru_cache(maxsize=None)
def generated_tilings(n: int) -> tuple[GTiling, ...]:
    return tuple(enumerate_tilings(n))


FIGURE_BASIS = Collection.from_sets(
    4, [[], [1], [4], [1, 2], [1, 4], [2, 3], [2, 4], [3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3, 4]])
FIGURE_BLACK = Tile(0b0010, 1, 4, True)
