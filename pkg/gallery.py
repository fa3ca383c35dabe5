"""Named example spaces with their canonical stratifications and expected-value cards."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from config import GALLERY_EXPECTED, GALLERY_ORDER, GALLERY_SUBDIVISIONS
from errors import UnknownGalleryError
from simplicial import (barycentric_subdivision, build_complex, disjoint_union, product,
                        quotient_vertices)
from stratified import (Stratum, product_stratified, single_stratum, stratify,
                        suspend_stratified)

logger = logging.getLogger('gallery')

CIRCLE = [(0, 1), (1, 2), (0, 2)]
TETRAHEDRON_BOUNDARY = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
# north pole 0, south pole 5, equator 1-2-3-4
OCTAHEDRON = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4),
    (1, 2, 5), (2, 3, 5), (3, 4, 5), (1, 4, 5),
]


def _point():
    return single_stratum(build_complex([(0,)]), name="point")


def _circle():
    return single_stratum(build_complex(CIRCLE), name="circle")


def _sphere2():
    return single_stratum(build_complex(TETRAHEDRON_BOUNDARY), name="sphere2")


def _torus_complex():
    circle = build_complex(CIRCLE)
    return product(circle, circle)


def _torus2():
    return single_stratum(_torus_complex(), name="torus2")


def _pinched_torus():
    # the two poles of the octahedron have disjoint stars after one subdivision
    sphere = barycentric_subdivision(build_complex(OCTAHEDRON))
    K = quotient_vertices(sphere, [(0, 5)])
    labels = {s: 0 for s in K.all_simplices()}
    labels[(0,)] = 1
    strata = (Stratum(0, 2, "regular"), Stratum(1, 0, "pinch point"))
    return stratify(K, labels, 2, strata, name="pinched_torus")


def _susp_torus2():
    return suspend_stratified(_torus2(), name="susp_torus2")


def _torus3_2p():
    tori = disjoint_union(_torus_complex(), _torus_complex())
    return suspend_stratified(single_stratum(tori), pole_name="pinch points", name="torus3_2p")


def _susp_torus3_2p():
    return suspend_stratified(gallery("torus3_2p"), renames={1: "arcs"}, name="susp_torus3_2p")


def _susp_torus3_2p_x_sphere2():
    return product_stratified(gallery("susp_torus3_2p"), gallery("sphere2"),
                              name="susp_torus3_2p_x_sphere2")


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    description: str
    builder: object = field(repr=False)
    subdivisions: int = 0
    expected: dict = field(default_factory=dict, repr=False)
    chain_level: bool = True
    # (space, closed manifold) for spaces that are products with a manifold
    factors: tuple = ()

    def summary(self):
        return {
            "name": self.name,
            "description": self.description,
            "dimension": self.expected.get("dimension"),
            "subdivisions": self.subdivisions,
            "chain_level": self.chain_level,
            "factors": list(self.factors),
            "expected": self.expected,
        }


_ENTRIES = {
    entry.name: entry for entry in (
        GalleryEntry("point", "a single vertex", _point),
        GalleryEntry("circle", "boundary of a triangle", _circle),
        GalleryEntry("sphere2", "boundary of a tetrahedron", _sphere2),
        GalleryEntry("torus2", "3x3 staircase torus", _torus2),
        GalleryEntry("pinched_torus", "subdivided octahedron with its poles identified", _pinched_torus),
        GalleryEntry("susp_torus2", "suspension of the torus, poles singular", _susp_torus2),
        GalleryEntry("torus3_2p", "suspension of two disjoint tori, two pinch points", _torus3_2p),
        GalleryEntry("susp_torus3_2p", "suspension of torus3_2p: two poles and two singular arcs",
                     _susp_torus3_2p),
        GalleryEntry("susp_torus3_2p_x_sphere2", "product of susp_torus3_2p with the 2-sphere",
                     _susp_torus3_2p_x_sphere2, chain_level=False,
                     factors=("susp_torus3_2p", "sphere2")),
    )
}


def entry(name):
    try:
        found = _ENTRIES[name]
    except KeyError:
        raise UnknownGalleryError(f"unknown gallery space {name!r}; expected one of {', '.join(GALLERY_ORDER)}")
    return GalleryEntry(found.name, found.description, found.builder, GALLERY_SUBDIVISIONS[name],
                        GALLERY_EXPECTED[name], found.chain_level, found.factors)


@lru_cache(maxsize=None)
def gallery(name):
    """Build the named space (cached; spaces are immutable)"""
    space = entry(name).builder()
    logger.info(f"built gallery space {name}: n={space.n}, f-vector {space.complex.f_vector}")
    return space


def list_gallery():
    return [entry(name) for name in GALLERY_ORDER]
