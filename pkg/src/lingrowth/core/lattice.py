"""
Lattice geometry: sites, norms, box dilation and the deterministic site order.

Sites are plain tuples of ints so they hash cheaply and serialize directly.
"""

from itertools import product
from typing import Iterable, Iterator, Tuple

from loguru import logger

from lingrowth.exceptions import EmptySiteSetError

Site = Tuple[int, ...]

lattice_logger = logger.bind(component="core")


def origin(dimension: int) -> Site:
    """The all-zero site o."""
    if dimension < 1:
        msg = f"Lattice dimension must be >= 1, got {dimension}"
        lattice_logger.error(msg)
        raise ValueError(msg)
    return (0,) * dimension


def add(x: Site, y: Site) -> Site:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Site, y: Site) -> Site:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Site) -> Site:
    return tuple(-a for a in x)


def linf(x: Site) -> int:
    return max((abs(a) for a in x), default=0)


def l1(x: Site) -> int:
    return sum(abs(a) for a in x)


def unit_vectors(dimension: int) -> list[Site]:
    """The 2d nearest-neighbour offsets {±e_i}, in site order."""
    vectors = []
    for i in range(dimension):
        for sign in (1, -1):
            vectors.append(tuple(sign if j == i else 0 for j in range(dimension)))
    return sorted(vectors, key=SITE_ORDER.key)


def box_offsets(dimension: int, radius: int) -> Iterator[Site]:
    """All offsets with L-infinity norm at most ``radius``."""
    span = range(-radius, radius + 1)
    return product(span, repeat=dimension)


def dilate(sites: Iterable[Site], radius: int) -> set[Site]:
    """The union of the L-infinity balls of ``radius`` around ``sites``."""
    sites = list(sites)
    if not sites or radius <= 0:
        return set(sites)
    offsets = list(box_offsets(len(sites[0]), radius))
    return {add(x, e) for x in sites for e in offsets}


class SiteOrder:
    """Total order on sites: L-infinity norm first, then coordinates."""

    @staticmethod
    def key(site: Site) -> tuple:
        return (linf(site), site)

    def min(self, sites: Iterable[Site]) -> Site:
        sites = list(sites)
        if not sites:
            msg = "Min of an empty set of sites is undefined"
            lattice_logger.error(msg)
            raise EmptySiteSetError(msg)
        return min(sites, key=self.key)

    def sorted(self, sites: Iterable[Site]) -> list[Site]:
        return sorted(sites, key=self.key)


SITE_ORDER = SiteOrder()


def min_site(sites: Iterable[Site], order: SiteOrder = SITE_ORDER) -> Site:
    """Unique minimum of a nonempty finite set of sites under ``order``."""
    return order.min(sites)
